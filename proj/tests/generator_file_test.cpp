#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "rank3/generator_file.hpp"

using namespace rank3;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_generator_text(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST(GeneratorFile, RoundTripEveryConstruction) {
  std::vector<ConstructedCase> cases{wreath_o1_subgroup(5),      parabolic_subgroup(7, 1),  field_extension_subgroup(9),
                                     deleted_permutation_module(10), wedge_square_rep(),   sym_square_quotient_rep(),
                                     symplectic_lambda2_module(), sp6_sym_square(),         tensor_product_subgroup(3, 5),
                                     tensor_wreath_subgroup(5),   imprimitive_subgroup(3, 3), subspace_stabilizer(7, 3)};
  for (auto& c : cases) {
    MatrixGroup G = c.group;
    G.form = c.space.gram();
    std::string text = write_generator_file(G, c.base_points, {c.label});
    auto back = parse_generator_text(text);
    EXPECT_EQ(back.group.dim, G.dim) << c.label;
    ASSERT_EQ(back.group.gens.size(), G.gens.size()) << c.label;
    for (std::size_t i = 0; i < G.gens.size(); ++i) EXPECT_EQ(back.group.gens[i], G.gens[i]) << c.label;
    ASSERT_TRUE(back.group.form.has_value());
    EXPECT_EQ(*back.group.form, c.space.gram());
    ASSERT_EQ(back.base_points.size(), c.base_points.size());
    for (std::size_t i = 0; i < c.base_points.size(); ++i) {
      EXPECT_EQ(back.base_points[i].name, c.base_points[i].name);
      EXPECT_EQ(back.base_points[i].v, c.base_points[i].v);
    }
    EXPECT_EQ(back.comments, std::vector<std::string>{c.label});
    EXPECT_EQ(write_generator_file(back.group, back.base_points, back.comments), text) << c.label;
  }
}

TEST(GeneratorFile, FromPath) {
  auto c = wedge_square_rep();
  std::string path = testing::TempDir() + "wedge.gen";
  {
    std::ofstream out(path);
    out << write_generator_file(c.group);
  }
  auto back = parse_generator_file(path);
  EXPECT_EQ(back.group.dim, 21u);
  EXPECT_EQ(back.group.gens.size(), c.group.gens.size());
  std::remove(path.c_str());
  EXPECT_THROW(parse_generator_file(path), ParseError);
}

TEST(GeneratorFile, Gf27Modulus) {
  std::string text =
      "rank3gen v1\n"
      "dim 2 field 27 gens 1\n"
      "modulus 1 2 0 1\n"
      "gen 1\n"
      "0 3\n"
      "1 0\n";
  auto g = parse_generator_text(text);
  EXPECT_EQ(g.group.field->q(), 27u);
  EXPECT_EQ(g.group.field->modulus(), (std::vector<std::uint32_t>{1, 2, 0, 1}));
  // reducible modulus x^3 + 1 = (x + 1)(x^2 - x + 1)
  std::string bad = text;
  bad.replace(bad.find("1 2 0 1"), 7, "1 0 0 1");
  EXPECT_EQ(error_line(bad), 3u);
  std::string missing = "rank3gen v1\ndim 2 field 27 gens 1\ngen 1\n1 0\n0 1\n";
  EXPECT_EQ(error_line(missing), 3u);
}

TEST(GeneratorFile, Errors) {
  EXPECT_EQ(error_line("rank3gen v2\n"), 1u);
  EXPECT_EQ(error_line("# c\nrank3gen v1\ndim 2 field 6 gens 1\n"), 3u);
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 fld 3 gens 1\n"), 2u);
  // singular generator reported at its block
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 2\ngen 1\n1 0\n0 1\ngen 2\n1 1\n1 1\n"), 6u);
  // entry outside [0, q)
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\ngen 1\n1 0\n0 3\n"), 5u);
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\ngen 1\n1 0\n0 -1\n"), 5u);
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\ngen 1\n1 0 0\n0 1\n"), 4u);
  // form not preserved
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\nform\n1 0\n0 2\ngen 1\n0 1\n1 0\n"), 6u);
  // truncated, trailing
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\ngen 1\n1 0\n"), 5u);
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\ngen 1\n1 0\n0 1\n1 1\n"), 6u);
  EXPECT_EQ(error_line("rank3gen v1\ndim 2 field 3 gens 1\n# base p 1\ngen 1\n1 0\n0 1\n"), 3u);
}

TEST(GeneratorFile, FormPreservedAccepted) {
  auto g = parse_generator_text("rank3gen v1\ndim 2 field 3 gens 1\nform\n1 0\n0 1\ngen 1\n0 1\n1 0\n");
  ASSERT_TRUE(g.group.form.has_value());
  EXPECT_TRUE(g.group.form->is_identity());
}
