#include <gtest/gtest.h>

#include <random>

#include "rank3/orbit.hpp"
#include "rank3/perm_group.hpp"

using namespace rank3;

namespace {

Vec random_nonsingular(const QuadraticSpace& V, std::mt19937_64& rng) {
  while (true) {
    Vec v(V.dim());
    for (auto& x : v) x = rng() % V.field().q();
    if (!vec_is_zero(v) && V.Q(v) != 0) return v;
  }
}

// Random isometry as a product of an even number of reflections, with the
// spinor class known from the factors.
std::pair<Matrix, SquareClass> random_so(const QuadraticSpace& V, std::mt19937_64& rng) {
  Matrix g = Matrix::identity(V.field_ptr(), V.dim());
  SquareClass cls = SquareClass::Square;
  int k = 2 * (1 + rng() % 3);
  for (int i = 0; i < k; ++i) {
    Vec u = random_nonsingular(V, rng);
    g = g * reflection(V, u);
    cls = cls * V.field().square_class(V.Q(u));
  }
  return {g, cls};
}

}  // namespace

TEST(Reflection, Examples) {
  auto V = standard_space(5, gf3());
  Matrix r = reflection(V, {1, 0, 0, 0, 0});
  Matrix expect = Matrix::identity(gf3(), 5);
  expect(0, 0) = 2;
  EXPECT_EQ(r, expect);
  Matrix s = reflection(V, {1, 2, 0, 0, 0});
  Matrix swap = Matrix::from_ints(gf3(), {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}});
  EXPECT_EQ(s, swap);
  EXPECT_THROW(reflection(V, {1, 1, 1, 0, 0}), DomainError);
}

TEST(Reflection, Properties) {
  std::mt19937_64 rng(1);
  auto F9 = field_create(3, 2);
  for (auto V : {standard_space(5, gf3()), standard_space(4, F9, SquareClass::Nonsquare)}) {
    for (int i = 0; i < 30; ++i) {
      Vec u = random_nonsingular(V, rng);
      Matrix r = reflection(V, u);
      EXPECT_TRUE((r * r).is_identity());
      EXPECT_TRUE(V.preserves(r));
      EXPECT_EQ(r.det(), V.field().neg(1));
      EXPECT_EQ(vec_mul(u, r), vec_scale(V.field(), u, V.field().neg(1)));
    }
  }
}

TEST(SpinorNorm, Examples) {
  auto V = standard_space(5, gf3());
  EXPECT_EQ(spinor_norm(V, Matrix::identity(gf3(), 5)), SquareClass::Square);
  Vec u{1, 1, 0, 0, 0};  // Q = 1
  Vec v{1, 0, 0, 0, 0};  // Q = 2 = -1
  ASSERT_EQ(V.Q(u), 1u);
  ASSERT_EQ(V.Q(v), 2u);
  EXPECT_EQ(spinor_norm(V, reflection(V, u) * reflection(V, v)), SquareClass::Nonsquare);
  Vec w{0, 0, 1, 1, 0};
  EXPECT_EQ(spinor_norm(V, reflection(V, u) * reflection(V, w)), SquareClass::Square);
  EXPECT_THROW(spinor_norm(V, reflection(V, u)), DomainError);
  Matrix bad = Matrix::identity(gf3(), 5);
  bad(0, 1) = 1;
  EXPECT_THROW(spinor_norm(V, bad), DomainError);
}

TEST(SpinorNorm, HomomorphismOnRandomIsometries) {
  std::mt19937_64 rng(42);
  auto F9 = field_create(3, 2);
  std::vector<QuadraticSpace> spaces;
  for (std::size_t n = 3; n <= 7; ++n) {
    spaces.push_back(standard_space(n, gf3()));
    spaces.push_back(standard_space(n, gf3(), SquareClass::Nonsquare));
  }
  spaces.push_back(standard_space(3, F9));
  spaces.push_back(standard_space(4, F9, SquareClass::Nonsquare));
  for (auto& V : spaces)
    for (int i = 0; i < 15; ++i) {
      auto [g, cg] = random_so(V, rng);
      auto [h, ch] = random_so(V, rng);
      EXPECT_EQ(spinor_norm(V, g), cg);
      EXPECT_EQ(spinor_norm(V, h), ch);
      EXPECT_EQ(spinor_norm(V, g * h), spinor_norm(V, g) * spinor_norm(V, h));
    }
}

TEST(Eichler, Properties) {
  auto F = gf3();
  // hyperbolic pairs (e1,f1), (e2,f2) and an anisotropic x
  QuadraticSpace V(Matrix::from_ints(F, {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}}));
  Vec e1{1, 0, 0, 0, 0}, f1{0, 1, 0, 0, 0}, e2{0, 0, 1, 0, 0}, x{0, 0, 0, 0, 1};
  Matrix E = eichler(V, e1, e2);
  EXPECT_TRUE(V.preserves(E));
  EXPECT_EQ(E.det(), 1u);
  EXPECT_EQ(spinor_norm(V, E), SquareClass::Square);
  EXPECT_TRUE(E.power(3).is_identity());
  EXPECT_FALSE(E.is_identity());
  // f1 -> f1 + f(f1,e2)e1 - f(f1,e1)e2 = f1 - e2
  EXPECT_EQ(vec_mul(f1, E), vec_sub(*F, f1, e2));
  Matrix E2 = eichler(V, e1, x);
  EXPECT_TRUE(V.preserves(E2));
  EXPECT_EQ(spinor_norm(V, E2), SquareClass::Square);
  EXPECT_THROW(eichler(V, x, e1), DomainError);
  EXPECT_THROW(eichler(V, e1, f1), DomainError);
  EXPECT_THROW(eichler(V, e1, e1), DomainError);
}

TEST(Omega, Dim3OverGf27Order) {
  auto F = field_create(3, 3);
  auto V = standard_space(3, F);
  auto G = omega_generators(V);
  EXPECT_EQ(enumerate_group(G).size(), 9828u);
}

TEST(Omega, Dim5Order) {
  auto V = standard_space(5, gf3());
  auto G = omega_generators(V);
  EXPECT_EQ(enumerate_group(G).size(), 25920u);
}

TEST(Omega, Dim7PointOrbits) {
  auto V = standard_space(7, gf3());
  auto G = omega_generators(V);
  auto plus = orbit_partition(V, G, Sign::Plus);
  auto minus = orbit_partition(V, G, Sign::Minus);
  ASSERT_EQ(plus.size(), 1u);
  ASSERT_EQ(minus.size(), 1u);
  EXPECT_EQ(plus[0].size, 378u);
  EXPECT_EQ(minus[0].size, 351u);
  // rank 3: the full group gives c = l and d = k
  auto p = odd_orthogonal_params(3, Sign::Plus);
  EXPECT_EQ(plus[0].cd, (CdPair{p.l, p.k}));
}

TEST(Omega, GeneratorsInSpinorKernel) {
  for (auto V : {standard_space(5, gf3(), SquareClass::Nonsquare), standard_space(6, gf3())}) {
    auto G = omega_generators(V);
    for (auto& g : G.gens) {
      EXPECT_EQ(g.det(), 1u);
      EXPECT_EQ(spinor_norm(V, g), SquareClass::Square);
    }
  }
}

TEST(Orbit, IdentityGroup) {
  MatrixGroup G(gf3(), 4, {Matrix::identity(gf3(), 4)});
  EXPECT_EQ(orbit(G, {0, 2, 1, 0}).size(), 1u);
  MatrixGroup E(gf3(), 4, {});
  EXPECT_EQ(orbit(E, {0, 2, 1, 0}).size(), 1u);
}

TEST(Orbit, CapIsEnforced) {
  auto V = standard_space(7, gf3());
  auto G = omega_generators(V);
  EXPECT_THROW(orbit(G, {1, 0, 0, 0, 0, 0, 0}, 100), ResourceError);
}

TEST(Orbit, PackedAndGenericAgree) {
  auto V = standard_space(5, gf3());
  auto G = omega_generators(V);
  // same group presented over GF(3) through the generic path: embed entries as GF(9) elements
  auto F9 = field_create(3, 2);
  std::vector<Matrix> gens9;
  for (auto& g : G.gens) gens9.push_back(Matrix(F9, 5, 5, g.data()));
  MatrixGroup G9(F9, 5, gens9);
  Vec x{1, 0, 0, 0, 0};
  auto o3 = orbit(G, x), o9 = orbit(G9, x);
  EXPECT_TRUE(o3.packed());
  EXPECT_FALSE(o9.packed());
  EXPECT_EQ(o3.size(), 45u);
  EXPECT_EQ(o9.size(), 45u);
}

TEST(Orbit, ClosedUnderGenerators) {
  auto V = standard_space(7, gf3());
  auto G = omega_generators(V);
  auto o = orbit(G, {1, 1, 0, 0, 0, 0, 0});
  PVecSet s(o.size());
  for (auto& p : o.packed_points()) s.insert(p);
  auto gens = grease(G);
  for (std::size_t i = 0; i < o.size(); i += 7)
    for (auto& g : gens) EXPECT_TRUE(s.contains(canonical(g.apply(o.packed_points()[i]))));
}

TEST(Orbit, GreasedMatchesDense) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {1, 5, 13, 21, 33, 64}) {
    Matrix m(gf3(), n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % 3;
    GreasedMatrix g(m);
    for (int t = 0; t < 50; ++t) {
      Vec v(n);
      for (auto& x : v) x = rng() % 3;
      EXPECT_EQ(unpack(g.apply(pack(v)), n), vec_mul(v, m));
    }
  }
}

TEST(Orbit, PackedArithmetic) {
  std::mt19937_64 rng(10);
  auto F = gf3();
  for (int t = 0; t < 500; ++t) {
    Vec a(40), b(40);
    for (auto& x : a) x = rng() % 3;
    for (auto& x : b) x = rng() % 3;
    EXPECT_EQ(unpack(pack(a) + pack(b), 40), vec_add(*F, a, b));
    EXPECT_EQ(unpack(pack(a) - pack(b), 40), vec_sub(*F, a, b));
    Elt d = 0;
    for (int i = 0; i < 40; ++i) d = F->add(d, F->mul(a[i], b[i]));
    EXPECT_EQ(dot(pack(a), pack(b)), d);
    if (!vec_is_zero(a)) {
      EXPECT_EQ(unpack(canonical(pack(a)), 40), canonical_point(*F, a));
    }
  }
}

TEST(CdParameters, RepresentativeIndependence) {
  auto V = standard_space(7, gf3());
  auto G = omega_generators(V);
  Vec x{1, 1, 0, 0, 0, 0, 0};
  auto o = orbit(G, x);
  auto base = report_from_orbit(V, o, x);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    Vec y = o.point(rng() % o.size());
    EXPECT_EQ(report_from_orbit(V, o, y).cd, base.cd);
  }
}

TEST(DoubleCoset, ToyExamples) {
  auto s4 = std::vector<Perm>{perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3, 4}})};
  auto s3 = std::vector<Perm>{perm_from_cycles(4, {{1, 2}}), perm_from_cycles(4, {{1, 2, 3}})};
  auto c4 = std::vector<Perm>{perm_from_cycles(4, {{1, 2, 3, 4}})};
  auto r1 = toy_double_coset_check(4, s4, s3, c4);
  EXPECT_EQ(r1.double_cosets, 1u);
  EXPECT_EQ(r1.m_orbits, 1u);
  auto r2 = toy_double_coset_check(4, s3, s3, s3);
  EXPECT_EQ(r2.double_cosets, 1u);
  EXPECT_EQ(r2.m_orbits, 1u);
  auto r3 = toy_double_coset_check(4, s4, s3, {});
  EXPECT_EQ(r3.double_cosets, 4u);
  EXPECT_EQ(r3.m_orbits, 4u);
}

TEST(DoubleCoset, AgreeOnSubgroupsOfS5) {
  auto s5 = std::vector<Perm>{perm_from_cycles(5, {{1, 2}}), perm_from_cycles(5, {{1, 2, 3, 4, 5}})};
  std::vector<std::vector<Perm>> subs = {
      {perm_from_cycles(5, {{1, 2}})},
      {perm_from_cycles(5, {{1, 2, 3}}), perm_from_cycles(5, {{1, 2}})},
      {perm_from_cycles(5, {{1, 2, 3, 4, 5}})},
      {perm_from_cycles(5, {{1, 2, 3, 4, 5}}), perm_from_cycles(5, {{2, 5}, {3, 4}})},
      {perm_from_cycles(5, {{1, 2}, {3, 4}}), perm_from_cycles(5, {{1, 3}, {2, 4}})},
  };
  for (auto& P : subs)
    for (auto& M : subs) {
      auto r = toy_double_coset_check(5, s5, P, M);
      EXPECT_EQ(r.double_cosets, r.m_orbits);
    }
}
