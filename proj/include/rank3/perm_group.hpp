#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "errors.hpp"

namespace rank3 {

/// Permutation of {0..n-1} as an image list; products act on the right:
/// (a*b)(x) = b(a(x)).
using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm perm_identity(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(i);
  return r;
}

/// Cycle notation on 1-based points, e.g. {{1,2,3},{4,5}}.
inline Perm perm_from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Perm r = perm_identity(n);
  for (auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) r[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  return r;
}

inline std::vector<Perm> perm_group_elements(std::size_t n, const std::vector<Perm>& gens, std::size_t cap = 10000) {
  std::set<Perm> seen{perm_identity(n)};
  std::vector<Perm> out{perm_identity(n)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto& g : gens) {
      Perm h = perm_mul(out[i], g);
      if (seen.insert(h).second) {
        out.push_back(h);
        if (out.size() > cap) throw ResourceError("permutation group larger than enumeration cap");
      }
    }
  return out;
}

struct DoubleCosetCheck {
  std::size_t double_cosets = 0;
  std::size_t m_orbits = 0;
};

/// |M\G/P| by direct enumeration, and the number of M-orbits on the cosets gP.
inline DoubleCosetCheck toy_double_coset_check(std::size_t n, const std::vector<Perm>& G_gens,
                                               const std::vector<Perm>& P_gens, const std::vector<Perm>& M_gens) {
  auto G = perm_group_elements(n, G_gens);
  auto P = perm_group_elements(n, P_gens);
  auto M = perm_group_elements(n, M_gens);
  std::set<Perm> Gset(G.begin(), G.end());
  for (auto& x : P)
    if (!Gset.count(x)) throw DomainError("P is not a subgroup of G");
  for (auto& x : M)
    if (!Gset.count(x)) throw DomainError("M is not a subgroup of G");

  DoubleCosetCheck r;
  std::set<Perm> covered;
  for (auto& g : G) {
    if (covered.count(g)) continue;
    ++r.double_cosets;
    for (auto& m : M)
      for (auto& p : P) covered.insert(perm_mul(perm_mul(m, g), p));
  }

  // cosets gP keyed by their smallest element
  auto key = [&](const Perm& g) {
    Perm best = perm_mul(g, P[0]);
    for (auto& p : P) best = std::min(best, perm_mul(g, p));
    return best;
  };
  std::map<Perm, bool> seen;
  for (auto& g : G) seen.emplace(key(g), false);
  for (auto& [k, done] : seen) {
    if (done) continue;
    ++r.m_orbits;
    std::vector<Perm> stack{k};
    done = true;
    while (!stack.empty()) {
      Perm c = stack.back();
      stack.pop_back();
      for (auto& m : M_gens) {
        Perm d = key(perm_mul(m, c));
        auto it = seen.find(d);
        if (!it->second) {
          it->second = true;
          stack.push_back(d);
        }
      }
    }
  }
  return r;
}

}  // namespace rank3
