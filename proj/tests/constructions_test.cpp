#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "rank3/constructions.hpp"

using namespace rank3;

namespace {

std::multiset<std::uint64_t> sizes(const std::vector<OrbitCell>& cells) {
  std::multiset<std::uint64_t> s;
  for (auto& c : cells) s.insert(c.size);
  return s;
}

OrbitReport measure(const ConstructedCase& c, const std::string& name) {
  for (auto& b : c.base_points)
    if (b.name == name) return cd_parameters(c.space, c.group, b.v);
  throw std::runtime_error("no base point " + name);
}

std::set<std::pair<i64, i64>> cd_set(const ConstructedCase& c, std::size_t first, std::size_t count) {
  std::set<std::pair<i64, i64>> s;
  for (std::size_t i = first; i < first + count; ++i) {
    auto r = cd_parameters(c.space, c.group, c.base_points.at(i).v);
    s.insert({r.cd.c, r.cd.d});
  }
  return s;
}

}  // namespace

TEST(Wreath, OrbitSizesAndClosedForms) {
  for (std::size_t n : {5u, 7u, 9u, 11u, 13u}) {
    auto c = wreath_o1_subgroup(n);
    i64 N = static_cast<i64>(n);
    auto a = measure(c, "x1");
    EXPECT_EQ(a.size, n);
    EXPECT_EQ(a.cd.c, 0);
    EXPECT_EQ(a.cd.d, N - 1);
    auto b = measure(c, "x1+x2");
    EXPECT_EQ(b.size, n * (n - 1));
    EXPECT_EQ(b.cd.c, 4 * N - 8);
    EXPECT_EQ(b.cd.d, N * N - 5 * N + 7);
  }
}

TEST(Wreath, Partitions) {
  auto c5 = wreath_o1_subgroup(5);
  EXPECT_EQ(sizes(orbit_partition(c5.space, c5.group, Sign::Plus, false)), (std::multiset<std::uint64_t>{5, 40}));
  EXPECT_EQ(sizes(orbit_partition(c5.space, c5.group, Sign::Minus, false)), (std::multiset<std::uint64_t>{16, 20}));
  auto c7 = wreath_o1_subgroup(7);
  EXPECT_EQ(sizes(orbit_partition(c7.space, c7.group, Sign::Plus, false)), (std::multiset<std::uint64_t>{42, 336}));
}

TEST(Wreath, Eq1TruthTable) {
  std::set<std::tuple<std::size_t, Sign, Eigen>> holds;
  for (std::size_t n : {5u, 7u, 9u, 11u, 13u}) {
    auto c = wreath_o1_subgroup(n);
    for (auto& b : c.base_points) {
      auto r = cd_parameters(c.space, c.group, b.v);
      ASSERT_TRUE(r.eq1_s.has_value());
      if (*r.eq1_s) holds.insert({n, r.type.sign(), Eigen::S});
      if (*r.eq1_t) holds.insert({n, r.type.sign(), Eigen::T});
    }
  }
  std::set<std::tuple<std::size_t, Sign, Eigen>> expected{
      {5, Sign::Plus, Eigen::T}, {7, Sign::Plus, Eigen::T}, {5, Sign::Minus, Eigen::S}};
  EXPECT_EQ(holds, expected);
}

TEST(Parabolic, N7Alpha1) {
  auto c = parabolic_subgroup(7, 1);
  EXPECT_EQ(sizes(orbit_partition(c.space, c.group, Sign::Plus, false)), (std::multiset<std::uint64_t>{135, 243}));
  EXPECT_EQ(sizes(orbit_partition(c.space, c.group, Sign::Minus, false)), (std::multiset<std::uint64_t>{108, 243}));
  EXPECT_EQ(measure(c, "x+").size, 135u);
  EXPECT_EQ(measure(c, "z+").size, 243u);
}

TEST(Parabolic, OrbitsCoverEachType) {
  for (std::size_t alpha : {1u, 2u, 3u}) {
    auto c = parabolic_subgroup(7, alpha);
    for (Sign xi : {Sign::Plus, Sign::Minus}) {
      std::uint64_t total = 0;
      for (auto& cell : orbit_partition(c.space, c.group, xi, false)) total += cell.size;
      EXPECT_EQ(total, nonsingular_point_count(3, xi));
    }
  }
}

TEST(FieldExtension, NormalElementFallback) {
  auto K = field_create(3, 3);
  EXPECT_EQ(K->trace(3), 0u);
  EXPECT_FALSE(is_normal_element(*K, 3));
  Elt z = first_normal_element(*K);
  EXPECT_TRUE(is_normal_element(*K, z));
  for (Elt y = 1; y < z; ++y) EXPECT_FALSE(is_normal_element(*K, y));
}

TEST(FieldExtension, QuadraticFormIsTraceOfSharpForm) {
  auto K = field_create(3, 3);
  auto Vs = standard_space(3, K);
  BlowDown bd(K, 3);
  QuadraticSpace V(bd.gram(Vs.gram()));
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    Vec w(3);
    for (auto& x : w) x = rng() % 27;
    EXPECT_EQ(V.Q(bd.blow_vec(w)), K->trace(Vs.Q(w)));
  }
}

TEST(FieldExtension, Partition) {
  auto c = field_extension_subgroup();
  auto plus = orbit_partition(c.space, c.group, Sign::Plus);
  auto minus = orbit_partition(c.space, c.group, Sign::Minus);
  EXPECT_EQ(sizes(plus), (std::multiset<std::uint64_t>{1053, 1134, 1134}));
  EXPECT_EQ(sizes(minus), (std::multiset<std::uint64_t>{1053, 1053, 1134}));
  for (auto& cell : plus) EXPECT_EQ(cell.cd.c - 2 * cell.cd.d, 81 - 1);
  for (auto& cell : minus) EXPECT_EQ(cell.cd.c - 2 * cell.cd.d, -81 - 1);
}

TEST(DeletedModule, PinnedValues) {
  struct Pin {
    std::size_t n;
    i64 c, d;
  };
  for (Pin p : {Pin{10, 438, 191}, Pin{14, 1970, 1032}, Pin{15, 2618, 1476}, Pin{16, 3396, 2063}}) {
    auto r = measure(deleted_permutation_module(p.n), "w");
    EXPECT_EQ(r.cd.c, p.c) << p.n;
    EXPECT_EQ(r.cd.d, p.d) << p.n;
  }
  auto v = measure(deleted_permutation_module(10), "v");
  EXPECT_EQ(v.size, 45u);
  EXPECT_EQ(v.cd.c, 16);
  EXPECT_EQ(v.cd.d, 28);
}

TEST(DeletedModule, ClosedFormsMatchMeasurement) {
  for (std::size_t n = 10; n <= 16; ++n) {
    auto c = deleted_permutation_module(n);
    EXPECT_EQ(c.space.dim(), n % 3 ? n - 1 : n - 2);
    for (char which : {'v', 'w'}) {
      auto r = measure(c, std::string(1, which));
      auto f = deleted_module_closed_forms(static_cast<i64>(n), which);
      EXPECT_EQ(static_cast<i64>(r.size), f.orbit) << n << which;
      EXPECT_EQ(r.cd.c, f.c) << n << which;
      EXPECT_EQ(r.cd.d, f.d) << n << which;
    }
  }
  EXPECT_EQ(deleted_module_closed_forms(22, 'w').d, 10478);
  EXPECT_EQ(deleted_module_closed_forms(22, 'w').c, 11466);
}

TEST(DeletedModule, GeneratorsRealiseSymmetricGroupOnSmallN) {
  auto c = deleted_permutation_module(5);
  EXPECT_EQ(enumerate_group(c.group).size(), 120u);
  auto c6 = deleted_permutation_module(6);
  EXPECT_EQ(c6.space.dim(), 4u);
  EXPECT_EQ(enumerate_group(c6.group).size(), 720u);
}

TEST(TensorSquares, Dimensions) {
  EXPECT_EQ(SquareModule(7, true).dim(), 21u);
  EXPECT_EQ(SquareModule(7, false).dim(), 28u);
  EXPECT_EQ(sym_square_quotient_rep().space.dim(), 27u);
  EXPECT_EQ(symplectic_lambda2_module().space.dim(), 13u);
  EXPECT_EQ(sp6_sym_square().space.dim(), 21u);
}

TEST(TensorSquares, Omega7Wedge) {
  auto c = wedge_square_rep();
  EXPECT_EQ(cd_set(c, 0, 2), (std::set<std::pair<i64, i64>>{{13040, 9072}, {26324, 17901}}));
  auto a = cd_parameters(c.space, c.group, c.base_points[0].v);
  auto b = cd_parameters(c.space, c.group, c.base_points[1].v);
  EXPECT_NE(a.type.sign(), b.type.sign());
}

TEST(TensorSquares, Omega7SymmetricSquare) {
  auto c = sym_square_quotient_rep();
  EXPECT_EQ(cd_set(c, 0, 2), (std::set<std::pair<i64, i64>>{{13850, 8262}, {26324, 17901}}));
  EXPECT_EQ(cd_set(c, 2, 2), (std::set<std::pair<i64, i64>>{{26081, 18144}, {26324, 17901}}));
}

TEST(TensorSquares, Sp6Lambda2Orbits) {
  auto c = symplectic_lambda2_module();
  auto plus = orbit_partition(c.space, c.group, Sign::Plus, false);
  auto minus = orbit_partition(c.space, c.group, Sign::Minus, false);
  EXPECT_EQ(plus.size(), 2u);
  EXPECT_EQ(minus.size(), 1u);
  std::uint64_t tp = 0;
  for (auto& x : plus) tp += x.size;
  EXPECT_EQ(tp, nonsingular_point_count(6, Sign::Plus));
}

TEST(TensorSquares, Sp6SymmetricSquareSmallOrbits) {
  auto c = sp6_sym_square();
  auto r = measure(c, "e1e1-f1f1");
  EXPECT_EQ(r.cd.c, 26324);
  EXPECT_EQ(r.cd.d, 17901);
  EXPECT_EQ(r.type.kind, PointType::Minus);
  const auto& big = c.base_points.back();
  EXPECT_EQ(big.name, "e1e1-e2e2+e3e3+f3f3");
  EXPECT_EQ(c.space.point_type(big.v).kind, PointType::Plus);
}

TEST(Bounds, TensorProduct) {
  auto c = tensor_product_subgroup(3, 5);
  EXPECT_EQ(c.space.dim(), 15u);
  for (auto& b : c.base_points) {
    auto r = cd_parameters(c.space, c.group, b.v);
    EXPECT_LT(2 * r.size, pow3(7) + 1) << b.name;
    ASSERT_TRUE(r.eq4.has_value());
    EXPECT_FALSE(*r.eq4);
  }
}

TEST(Bounds, TensorWreath) {
  auto c = tensor_wreath_subgroup(5);
  auto r = measure(c, "v(x)v");
  EXPECT_EQ(r.size, 2025u);
  EXPECT_FALSE(*r.eq4);
}

TEST(Bounds, Imprimitive) {
  auto c = imprimitive_subgroup(3, 3);
  std::multiset<std::uint64_t> got;
  for (auto& b : c.base_points) {
    auto r = cd_parameters(c.space, c.group, b.v);
    got.insert(r.size);
    EXPECT_FALSE(*r.eq4);
  }
  EXPECT_EQ(got, (std::multiset<std::uint64_t>{9, 18}));
}

TEST(Bounds, NonDegenerateSubspaceStabilizer) {
  auto c = subspace_stabilizer(7, 3);
  auto r = measure(c, "W1+");
  auto p = odd_orthogonal_values(1, Sign::Plus);
  EXPECT_EQ(r.cd.c, p.l);
  EXPECT_EQ(r.cd.d, p.k);
  EXPECT_EQ(r.cd.c, 4);
  EXPECT_EQ(r.cd.d, 1);
}

TEST(Constructions, GeneratorsLieInOmega) {
  std::vector<ConstructedCase> cases;
  cases.push_back(wreath_o1_subgroup(7));
  cases.push_back(parabolic_subgroup(7, 1));
  cases.push_back(parabolic_subgroup(7, 2));
  cases.push_back(field_extension_subgroup());
  cases.push_back(wedge_square_rep());
  cases.push_back(subspace_stabilizer(7, 3));
  for (auto& c : cases)
    for (auto& g : c.group.gens) {
      EXPECT_TRUE(c.space.preserves(g)) << c.label;
      EXPECT_EQ(g.det(), 1u) << c.label;
      EXPECT_EQ(spinor_norm(c.space, g), SquareClass::Square) << c.label;
    }
}

TEST(Constructions, OrbitsAreClosedUnderGenerators) {
  auto c = parabolic_subgroup(7, 1);
  for (auto& b : c.base_points) {
    auto o = orbit(c.group, b.v);
    std::set<Vec> pts;
    for (auto& p : o.points()) pts.insert(p);
    for (auto& p : pts)
      for (auto& g : c.group.gens) EXPECT_TRUE(pts.count(canonical_point(*gf3(), vec_mul(p, g))));
  }
}
