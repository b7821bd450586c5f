#pragma once

#include <bit>
#include <string>
#include <vector>

#include "higman.hpp"
#include "quadratic_space.hpp"

namespace rank3 {

struct SrgReport {
  bool ok = false;
  std::string message;
  std::size_t points = 0;
  i64 k = 0, l = 0, lambda = 0, mu = 0, s = 0, t = 0, f_s = 0, f_t = 0;
};

/// Builds the perpendicularity graph on E_xi of the standard (2m+1)-space over
/// GF(3) and checks A^2 = kI + lambda A + mu (J - I - A), AJ = kJ, and the
/// trace equations for the eigenvalue multiplicities.
inline SrgReport srg_verify(unsigned m, Sign xi) {
  SrgReport r;
  if (m < 1 || m > 3) {
    r.message = "srg_verify supports 1 <= m <= 3";
    return r;
  }
  auto V = standard_space(2 * m + 1, gf3());
  auto pts = nonsingular_points(V, xi);
  std::size_t N = pts.size(), W = (N + 63) / 64;
  r.points = N;
  std::vector<std::uint64_t> adj(N * W, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (V.bilinear(pts[i], pts[j]) == 0) {
        adj[i * W + j / 64] |= std::uint64_t{1} << (j % 64);
        adj[j * W + i / 64] |= std::uint64_t{1} << (i % 64);
      }
  auto edge = [&](std::size_t i, std::size_t j) { return (adj[i * W + j / 64] >> (j % 64)) & 1; };
  auto common = [&](std::size_t i, std::size_t j) {
    i64 c = 0;
    for (std::size_t w = 0; w < W; ++w) c += std::popcount(adj[i * W + w] & adj[j * W + w]);
    return c;
  };
  r.k = common(0, 0);
  r.l = static_cast<i64>(N) - 1 - r.k;
  r.lambda = r.mu = -1;
  i64 trace_a2 = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      i64 a2 = common(i, j);
      if (i == j) {
        trace_a2 += a2;
        if (a2 != r.k) {
          r.message = "row " + std::to_string(i) + " has degree " + std::to_string(a2);
          return r;
        }
        continue;
      }
      i64& slot = edge(i, j) ? r.lambda : r.mu;
      if (slot < 0) slot = a2;
      if (a2 != slot) {
        r.message = "A^2 entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + std::to_string(a2);
        return r;
      }
    }
  i64 D = (r.lambda - r.mu) * (r.lambda - r.mu) + 4 * (r.k - r.mu);
  bool exact = false;
  i64 sq = isqrt_exact(D, exact);
  if (!exact) {
    r.message = "discriminant not a square";
    return r;
  }
  r.s = (r.lambda - r.mu + sq) / 2;
  r.t = (r.lambda - r.mu - sq) / 2;
  i64 n1 = static_cast<i64>(N) - 1;
  i64 num = -r.k - n1 * r.t;
  if (num % (r.s - r.t) != 0) {
    r.message = "multiplicity not integral";
    return r;
  }
  r.f_s = num / (r.s - r.t);
  r.f_t = n1 - r.f_s;
  if (r.k + r.f_s * r.s + r.f_t * r.t != 0 || r.k * r.k + r.f_s * r.s * r.s + r.f_t * r.t * r.t != trace_a2 ||
      r.f_s <= 0 || r.f_t <= 0) {
    r.message = "trace equations fail";
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace rank3
