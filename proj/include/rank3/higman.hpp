#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "quadratic_space.hpp"

namespace rank3 {

using i64 = std::int64_t;

struct RankThreeParams {
  i64 total = 0, k = 0, l = 0, lambda = 0, mu = 0;
  i64 sqrtD = 0, s = 0, t = 0, f_s = 0, f_t = 0;
  i64 lambda1 = 0, mu1 = 0;

  bool operator==(const RankThreeParams&) const = default;
};

struct NotRankThree : DomainError {
  using DomainError::DomainError;
};

inline i64 isqrt_exact(i64 x, bool& exact) {
  if (x < 0) {
    exact = false;
    return 0;
  }
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  exact = r * r == x;
  return r;
}

inline RankThreeParams generic_params(i64 k, i64 l, i64 lambda, i64 mu) {
  if (k < 0 || l < 0 || lambda < 0 || mu < 0) throw NotRankThree("parameters must be non-negative");
  RankThreeParams p{};
  p.k = k;
  p.l = l;
  p.lambda = lambda;
  p.mu = mu;
  p.total = k + l + 1;
  if (mu * l != k * (k - 1 - lambda)) throw NotRankThree("mu*l != k*(k-1-lambda)");
  i64 D = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
  bool exact = false;
  p.sqrtD = isqrt_exact(D, exact);
  if (!exact) throw NotRankThree("discriminant is not a perfect square");
  if ((lambda - mu + p.sqrtD) % 2 != 0) throw NotRankThree("eigenvalues are not integral");
  p.s = (lambda - mu + p.sqrtD) / 2;
  p.t = (lambda - mu - p.sqrtD) / 2;
  if (p.s == p.t) throw NotRankThree("degenerate eigenvalues");
  i64 num_s = k + p.t * (k + l), num_t = k + p.s * (k + l);
  if (num_s % (p.t - p.s) != 0 || num_t % (p.s - p.t) != 0) throw NotRankThree("multiplicities are not integral");
  p.f_s = num_s / (p.t - p.s);
  p.f_t = num_t / (p.s - p.t);
  if (p.f_s <= 0 || p.f_t <= 0 || 1 + p.f_s + p.f_t != p.total) throw NotRankThree("multiplicities inconsistent");
  p.lambda1 = l - k + mu - 1;
  p.mu1 = l - k + lambda + 1;
  return p;
}

inline i64 pow3(unsigned e) { return static_cast<i64>(ipow(3, e)); }

/// Closed forms for Omega_{2m+1}(3) on E_xi; m = 1 is allowed for subspace bookkeeping.
struct OddOrthogonalValues {
  i64 total, k, l, lambda, mu;
};

inline OddOrthogonalValues odd_orthogonal_values(unsigned m, Sign xi) {
  if (m < 1) throw DomainError("m must be at least 1");
  i64 x = sign_value(xi);
  i64 a = pow3(m), b = pow3(m - 1);
  OddOrthogonalValues v{};
  v.total = a * (a + x) / 2;
  v.k = b * (a - x) / 2;
  v.l = (a - x) * (b + x);
  v.lambda = v.mu = b * (b - x) / 2;
  return v;
}

inline RankThreeParams odd_orthogonal_params(unsigned m, Sign xi) {
  if (m < 2) throw DomainError("odd_orthogonal_params needs m >= 2");
  auto v = odd_orthogonal_values(m, xi);
  RankThreeParams p = generic_params(v.k, v.l, v.lambda, v.mu);
  if (p.total != v.total || p.s != pow3(m - 1) || p.t != -pow3(m - 1) || p.sqrtD != 2 * pow3(m - 1))
    throw InternalError("closed forms disagree with generic parameters");
  return p;
}

struct CdPair {
  i64 c = 0, d = 0;
  i64 orbit_size() const { return 1 + c + d; }
  bool operator==(const CdPair&) const = default;
  bool operator<(const CdPair& o) const { return c != o.c ? c < o.c : d < o.d; }
};

enum class Eigen { S, T };
inline const char* to_string(Eigen r) { return r == Eigen::S ? "s" : "t"; }

/// 1 + d r / k = (r + 1) c / l with cleared denominators.
inline bool check_eq1(const RankThreeParams& p, Eigen which, const CdPair& cd) {
  i64 r = which == Eigen::S ? p.s : p.t;
  return p.l * p.k + cd.d * r * p.l == (r + 1) * cd.c * p.k;
}

/// Which specialized identity applies for a given (xi, r).
inline bool uses_eq2(Sign xi, Eigen r) {
  return (xi == Sign::Plus && r == Eigen::S) || (xi == Sign::Minus && r == Eigen::T);
}

inline bool check_eq2(unsigned m, Sign xi, const CdPair& cd) {
  return cd.c - 2 * cd.d == sign_value(xi) * pow3(m) - 1;
}

inline bool check_eq3(unsigned m, Sign xi, const CdPair& cd) {
  i64 x = sign_value(xi);
  return (x * pow3(m - 1) + 1) * (x * pow3(m) - 1 + cd.c - 2 * cd.d) == 2 * cd.c;
}

/// 1 + c + d >= (3^m + 1) / 2; a smaller orbit cannot satisfy the equation.
inline bool check_eq4(unsigned m, const CdPair& cd) { return 2 * (1 + cd.c + cd.d) >= pow3(m) + 1; }

inline bool check_specialized(unsigned m, Sign xi, Eigen r, const CdPair& cd) {
  return uses_eq2(xi, r) ? check_eq2(m, xi, cd) : check_eq3(m, xi, cd);
}

}  // namespace rank3
