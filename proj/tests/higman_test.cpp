#include <gtest/gtest.h>

#include <random>

#include "rank3/higman.hpp"
#include "rank3/srg.hpp"

using namespace rank3;

TEST(Higman, GenericExamples) {
  auto p = generic_params(12, 32, 3, 3);
  EXPECT_EQ(p.sqrtD, 6);
  EXPECT_EQ(p.s, 3);
  EXPECT_EQ(p.t, -3);
  EXPECT_EQ(p.f_s, 20);
  EXPECT_EQ(p.f_t, 24);
  auto q = generic_params(117, 260, 36, 36);
  EXPECT_EQ(q.s, 9);
  EXPECT_EQ(q.t, -9);
  EXPECT_EQ(q.f_s, 182);
  EXPECT_EQ(q.f_t, 195);
  auto petersen = generic_params(3, 6, 0, 1);
  EXPECT_EQ(petersen.s, 1);
  EXPECT_EQ(petersen.t, -2);
  EXPECT_EQ(petersen.f_s, 5);
  EXPECT_EQ(petersen.f_t, 4);
  EXPECT_THROW(generic_params(2, 2, 1, 1), NotRankThree);
  EXPECT_THROW(generic_params(2, 2, 0, 1), NotRankThree);
  EXPECT_THROW(generic_params(3, 4, 0, 1), NotRankThree);
}

TEST(Higman, OddOrthogonalExamples) {
  auto p = odd_orthogonal_params(3, Sign::Plus);
  EXPECT_EQ(p.total, 378);
  EXPECT_EQ(p.k, 117);
  EXPECT_EQ(p.l, 260);
  EXPECT_EQ(p.lambda, 36);
  EXPECT_EQ(p.mu, 36);
  EXPECT_EQ(p.s, 9);
  EXPECT_EQ(p.t, -9);
  auto m = odd_orthogonal_params(2, Sign::Minus);
  EXPECT_EQ(m.total, 36);
  EXPECT_EQ(m.k, 15);
  EXPECT_EQ(m.l, 20);
  EXPECT_EQ(m.lambda, 6);
  auto pp = odd_orthogonal_params(2, Sign::Plus);
  EXPECT_EQ(pp.total, 45);
  EXPECT_EQ(pp.k, 12);
  EXPECT_EQ(pp.l, 32);
  EXPECT_THROW(odd_orthogonal_params(1, Sign::Plus), DomainError);
}

TEST(Higman, IdentitiesForAllM) {
  for (unsigned m = 2; m <= 12; ++m)
    for (Sign xi : {Sign::Plus, Sign::Minus}) {
      auto p = odd_orthogonal_params(m, xi);
      EXPECT_EQ(p.total, p.k + p.l + 1);
      EXPECT_EQ(p.mu * p.l, p.k * (p.k - 1 - p.lambda));
      EXPECT_EQ(p.lambda, p.mu);
      EXPECT_EQ(p.sqrtD * p.sqrtD, (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.k - p.mu));
      EXPECT_EQ(1 + p.f_s + p.f_t, p.total);
      EXPECT_EQ(p.k + p.f_s * p.s + p.f_t * p.t, 0);
      EXPECT_EQ(p.lambda1, p.l - p.k + p.mu - 1);
      EXPECT_EQ(p.mu1, p.l - p.k + p.lambda + 1);
    }
}

TEST(Higman, Eq1Examples) {
  auto p = odd_orthogonal_params(2, Sign::Plus);
  EXPECT_TRUE(check_eq1(p, Eigen::T, {0, 4}));
  EXPECT_FALSE(check_eq1(p, Eigen::S, {0, 4}));
  auto q = odd_orthogonal_params(2, Sign::Minus);
  EXPECT_TRUE(check_eq1(q, Eigen::S, {12, 7}));
}

TEST(Higman, SpecializedExamples) {
  EXPECT_TRUE(check_eq2(3, Sign::Plus, {26 + 2 * 10, 10}));
  EXPECT_FALSE(check_eq2(3, Sign::Plus, {27 + 2 * 10, 10}));
  EXPECT_TRUE(check_eq3(3, Sign::Plus, {20, 21}));
  EXPECT_TRUE(check_specialized(3, Sign::Plus, Eigen::T, {20, 21}));
  EXPECT_FALSE(check_eq4(3, {5, 7}));
  EXPECT_TRUE(check_eq4(3, {5, 8}));
}

TEST(Higman, Eq1AgreesWithSpecialized) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10000; ++i) {
    unsigned m = 2 + rng() % 7;
    Sign xi = rng() % 2 ? Sign::Plus : Sign::Minus;
    auto p = odd_orthogonal_params(m, xi);
    CdPair cd{static_cast<i64>(rng() % (p.l + 1)), static_cast<i64>(rng() % (p.k + 1))};
    if (i % 3 == 0) {
      // force eq2 solutions into the sample
      cd.c = sign_value(xi) * pow3(m) - 1 + 2 * cd.d;
      if (cd.c < 0) continue;
    }
    for (Eigen r : {Eigen::S, Eigen::T}) EXPECT_EQ(check_eq1(p, r, cd), check_specialized(m, xi, r, cd));
  }
}

TEST(Srg, SmallCases) {
  struct Case {
    unsigned m;
    Sign xi;
    std::size_t size;
  };
  for (Case c : {Case{2, Sign::Plus, 45}, Case{2, Sign::Minus, 36}, Case{3, Sign::Minus, 351}}) {
    auto r = srg_verify(c.m, c.xi);
    EXPECT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.points, c.size);
    auto p = odd_orthogonal_params(c.m, c.xi);
    EXPECT_EQ(r.k, p.k);
    EXPECT_EQ(r.lambda, p.lambda);
    EXPECT_EQ(r.mu, p.mu);
    EXPECT_EQ(r.f_s, p.f_s);
    EXPECT_EQ(r.f_t, p.f_t);
  }
}

TEST(Srg, MeasuredParametersMatchClosedForms) {
  for (unsigned m : {2u, 3u})
    for (Sign xi : {Sign::Plus, Sign::Minus}) {
      auto r = srg_verify(m, xi);
      auto v = odd_orthogonal_values(m, xi);
      EXPECT_EQ(static_cast<i64>(r.points), v.total);
      EXPECT_EQ(r.k, v.k);
      EXPECT_EQ(r.l, v.l);
      EXPECT_EQ(r.lambda, v.lambda);
      EXPECT_EQ(r.mu, v.mu);
    }
}
