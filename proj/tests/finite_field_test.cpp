#include <gtest/gtest.h>

#include <set>

#include "rank3/finite_field.hpp"
#include "rank3/matrix.hpp"

using namespace rank3;

namespace {

// Trace of the GF(p)-linear map y -> x*y on the digit basis, computed from
// schoolbook polynomial products; independent of the log tables.
std::uint32_t companion_trace(const FiniteField& F, Elt x) {
  std::uint32_t p = F.p(), a = F.degree();
  std::uint32_t tr = 0;
  for (std::uint32_t i = 0; i < a; ++i) {
    // coefficient of x^i in x * x^i, by polynomial multiply then reduce
    std::vector<std::uint32_t> prod(2 * a, 0);
    for (std::uint32_t j = 0; j < a; ++j) prod[j + i] = F.digit(x, j);
    const auto& f = F.modulus();
    for (std::uint32_t d = 2 * a - 1; d >= a; --d) {
      std::uint32_t c = prod[d];
      if (c)
        for (std::uint32_t k = 0; k <= a; ++k) prod[d - a + k] = (prod[d - a + k] + (p - c) * f[k]) % p;
    }
    tr = (tr + prod[i]) % p;
  }
  return tr;
}

}  // namespace

TEST(FiniteField, PrimeFieldElements) {
  auto F = field_create(3, 1);
  EXPECT_EQ(F->q(), 3u);
  EXPECT_EQ(F->add(2, 2), 1u);
  EXPECT_EQ(F->mul(2, 2), 1u);
  EXPECT_EQ(F->neg(1), 2u);
}

TEST(FiniteField, Gf27DefaultModulusRoot) {
  auto F = field_create(3, 3);
  Elt w = 3;
  // w^3 = w - 1
  EXPECT_EQ(F->pow(w, 3), F->sub(w, 1));
  EXPECT_EQ(F->modulus(), (std::vector<std::uint32_t>{1, 2, 0, 1}));
}

TEST(FiniteField, ReducibleModulusRejected) {
  EXPECT_THROW(field_create(3, 2, std::vector<std::uint32_t>{0, 1, 1}), ConstructionError);
  EXPECT_THROW(field_create(3, 2, std::vector<std::uint32_t>{1, 1}), ConstructionError);
  EXPECT_THROW(field_create(4, 1), DomainError);
}

TEST(FiniteField, TraceValues) {
  auto F = field_create(3, 3);
  Elt w = 3;
  EXPECT_EQ(F->trace(1), 0u);
  EXPECT_EQ(F->trace(F->mul(w, w)), 2u);
  EXPECT_EQ(F->trace(w), 0u);
}

TEST(FiniteField, NormValues) {
  auto F = field_create(3, 3);
  EXPECT_EQ(F->norm(1), 1u);
  EXPECT_EQ(F->norm(3), 2u);
  auto F9 = field_create(3, 2);
  EXPECT_EQ(F9->norm(F9->primitive()), 2u);
}

TEST(FiniteField, SquareClassValues) {
  auto F3 = field_create(3, 1);
  EXPECT_EQ(F3->square_class(1), SquareClass::Square);
  EXPECT_EQ(F3->square_class(2), SquareClass::Nonsquare);
  auto F9 = field_create(3, 2);
  EXPECT_EQ(F9->square_class(F9->neg(1)), SquareClass::Square);
  EXPECT_THROW(F9->square_class(0), DomainError);
}

class FieldProperties : public ::testing::TestWithParam<int> {};

TEST_P(FieldProperties, ArithmeticAxioms) {
  auto F = field_create(3, GetParam());
  for (Elt x = 0; x < F->q(); ++x) {
    EXPECT_EQ(F->add(x, F->neg(x)), 0u);
    if (x) {
      EXPECT_EQ(F->mul(x, F->inv(x)), 1u);
    }
    for (Elt y = 0; y < F->q(); ++y) {
      EXPECT_EQ(F->add(x, y), F->add(y, x));
      EXPECT_EQ(F->mul(x, y), F->mul(y, x));
    }
  }
}

TEST_P(FieldProperties, TraceNormHomomorphisms) {
  auto F = field_create(3, GetParam());
  for (Elt x = 0; x < F->q(); ++x) {
    EXPECT_EQ(F->trace(x), companion_trace(*F, x));
    EXPECT_LT(F->trace(x), 3u);
    EXPECT_EQ(F->trace(F->frobenius(x)), F->trace(x));
    EXPECT_EQ(F->norm(x) == 0, x == 0);
    for (Elt y = 0; y < F->q(); ++y) {
      EXPECT_EQ(F->trace(F->add(x, y)), F->add(F->trace(x), F->trace(y)));
      EXPECT_EQ(F->norm(F->mul(x, y)), F->mul(F->norm(x), F->norm(y)));
    }
  }
}

TEST_P(FieldProperties, SquareClassIsHomomorphism) {
  auto F = field_create(3, GetParam());
  std::set<Elt> squares;
  for (Elt y = 1; y < F->q(); ++y) squares.insert(F->mul(y, y));
  for (Elt x = 1; x < F->q(); ++x) {
    EXPECT_EQ(F->square_class(x) == SquareClass::Square, squares.count(x) == 1);
    for (Elt y = 1; y < F->q(); ++y)
      EXPECT_EQ(F->square_class(F->mul(x, y)), F->square_class(x) * F->square_class(y));
  }
}

INSTANTIATE_TEST_SUITE_P(Gf3Powers, FieldProperties, ::testing::Values(1, 2, 3));

TEST(FiniteField, KernelOfTraceGf27) {
  auto F = field_create(3, 3);
  int ker = 0;
  for (Elt x = 0; x < F->q(); ++x) ker += F->trace(x) == 0;
  EXPECT_EQ(ker, 9);
}

TEST(FiniteField, FrobeniusFixesPrimeField) {
  auto F = field_create(3, 3);
  int fixed = 0;
  for (Elt x = 0; x < F->q(); ++x) {
    fixed += F->frobenius(x) == x;
    for (Elt y = 0; y < F->q(); ++y) {
      EXPECT_EQ(F->frobenius(F->add(x, y)), F->add(F->frobenius(x), F->frobenius(y)));
      EXPECT_EQ(F->frobenius(F->mul(x, y)), F->mul(F->frobenius(x), F->frobenius(y)));
    }
  }
  EXPECT_EQ(fixed, 3);
}

TEST(FiniteField, PrimitiveElementOrder) {
  for (int a : {1, 2, 3, 4, 9}) {
    auto F = field_create(3, a);
    Elt g = F->primitive();
    std::uint32_t n = F->q() - 1;
    EXPECT_EQ(F->pow(g, n), 1u);
    for (std::uint32_t d = 1; d < n; ++d)
      if (n % d == 0) {
        EXPECT_NE(F->pow(g, d), 1u);
      }
  }
}

TEST(FiniteField, ElementValueType) {
  auto F = field_create(3, 2);
  FieldElement x(F, 4), y(F, 7);
  EXPECT_EQ((x * y) / y, x);
  EXPECT_EQ(x + (-x), FieldElement(F, 0));
  EXPECT_EQ(x * x.inverse(), FieldElement(F, 1));
}

TEST(Matrix, InverseDeterminantNullspace) {
  auto F = gf3();
  Matrix m = Matrix::from_ints(F, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(m.det(), 2u);
  EXPECT_TRUE((m * m.inverse()).is_identity());
  Matrix s = Matrix::from_ints(F, {{1, 1, 1}, {1, 1, 1}, {0, 1, 2}});
  EXPECT_EQ(s.det(), 0u);
  auto ns = s.left_nullspace();
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(vec_is_zero(vec_mul(ns[0], s)));
}
