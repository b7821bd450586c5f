#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "gf3_packed.hpp"
#include "higman.hpp"
#include "matrix_group.hpp"

namespace rank3 {

constexpr std::size_t kDefaultOrbitCap = 30000000;

/// Point orbit stored in BFS order; the first entry is the start point.
class Orbit {
 public:
  std::size_t size() const { return packed_ ? pv_.size() : gv_.size(); }
  std::size_t dim() const { return dim_; }
  bool packed() const { return packed_; }
  Vec point(std::size_t i) const { return packed_ ? unpack(pv_[i], dim_) : gv_[i]; }
  const std::vector<PVec>& packed_points() const { return pv_; }
  const std::vector<Vec>& generic_points() const { return gv_; }
  std::vector<Vec> points() const {
    if (!packed_) return gv_;
    std::vector<Vec> r;
    r.reserve(pv_.size());
    for (auto& v : pv_) r.push_back(unpack(v, dim_));
    return r;
  }

 private:
  friend Orbit orbit(const MatrixGroup&, const Vec&, std::size_t, std::size_t);
  bool packed_ = false;
  std::size_t dim_ = 0;
  std::vector<PVec> pv_;
  std::vector<Vec> gv_;
};

inline bool packable(const MatrixGroup& G) { return G.field->q() == 3 && G.dim <= 64; }

inline std::vector<GreasedMatrix> grease(const MatrixGroup& G) {
  std::vector<GreasedMatrix> r;
  for (auto& g : G.gens) r.emplace_back(g);
  return r;
}

inline void packed_orbit(const std::vector<GreasedMatrix>& gens, PVec start, std::size_t cap, std::vector<PVec>& out,
                         PVecSet& seen) {
  start = canonical(start);
  if (seen.insert(start)) out.push_back(start);
  for (std::size_t i = 0; i < out.size(); ++i) {
    PVec x = out[i];
    for (auto& g : gens) {
      PVec y = canonical(g.apply(x));
      if (seen.insert(y)) {
        out.push_back(y);
        if (out.size() > cap) throw ResourceError("orbit exceeds cap of " + std::to_string(cap) + " points");
      }
    }
  }
}

/// Orbit of the point <start> under the group (BFS in generator order).
inline Orbit orbit(const MatrixGroup& G, const Vec& start, std::size_t cap = kDefaultOrbitCap, std::size_t expected = 0) {
  if (start.size() != G.dim) throw DomainError("start vector has wrong dimension");
  Orbit o;
  o.dim_ = G.dim;
  Vec s = canonical_point(*G.field, start);
  if (packable(G)) {
    o.packed_ = true;
    auto gens = grease(G);
    PVecSet seen(expected ? expected : 1024);
    if (expected) o.pv_.reserve(expected);
    packed_orbit(gens, pack(s), cap, o.pv_, seen);
    return o;
  }
  const FiniteField& F = *G.field;
  std::unordered_set<Vec, VecHash> seen{s};
  o.gv_.push_back(s);
  for (std::size_t i = 0; i < o.gv_.size(); ++i)
    for (auto& g : G.gens) {
      Vec y = canonical_point(F, vec_mul(F, o.gv_[i], g));
      if (seen.insert(y).second) {
        o.gv_.push_back(y);
        if (o.gv_.size() > cap) throw ResourceError("orbit exceeds cap of " + std::to_string(cap) + " points");
      }
    }
  return o;
}

/// Number of orbit points other than x lying in x-perp.
inline std::uint64_t perp_count(const QuadraticSpace& V, const Orbit& o, const Vec& x) {
  Vec xc = canonical_point(V.field(), x);
  Vec w = V.gram_image(xc);
  std::uint64_t d = 0;
  if (o.packed()) {
    PVec pw = pack(w), px = pack(xc);
    for (auto& y : o.packed_points())
      if (!(y == px) && dot(y, pw) == 0) ++d;
    return d;
  }
  const FiniteField& F = V.field();
  for (auto& y : o.generic_points()) {
    if (y == xc) continue;
    Elt s = 0;
    for (std::size_t i = 0; i < y.size(); ++i) s = F.add(s, F.mul(y[i], w[i]));
    if (s == 0) ++d;
  }
  return d;
}

struct OrbitReport {
  Vec base;
  PointType type{PointType::Zero, 0};
  std::uint64_t size = 0;
  CdPair cd;
  unsigned m = 0;
  std::optional<bool> eq1_s, eq1_t;  // absent when the ambient has no rank-3 parameters
  std::optional<bool> eq2, eq3;      // eq2 for (+,s)/(-,t); eq3 for (+,t)/(-,s)
  std::optional<bool> eq4;
  double seconds = 0;
  std::uint64_t visited = 0;
};

/// Fill in the equation verdicts for a GF(3) space of odd dimension 2m+1.
inline void attach_verdicts(OrbitReport& r, std::size_t dim) {
  if (dim % 2 == 0 || (r.type.kind != PointType::Plus && r.type.kind != PointType::Minus)) return;
  r.m = static_cast<unsigned>(dim / 2);
  if (r.m < 2) return;
  Sign xi = r.type.sign();
  auto p = odd_orthogonal_params(r.m, xi);
  r.eq1_s = check_eq1(p, Eigen::S, r.cd);
  r.eq1_t = check_eq1(p, Eigen::T, r.cd);
  r.eq2 = check_eq2(r.m, xi, r.cd);
  r.eq3 = check_eq3(r.m, xi, r.cd);
  r.eq4 = check_eq4(r.m, r.cd);
}

inline OrbitReport report_from_orbit(const QuadraticSpace& V, const Orbit& o, const Vec& start) {
  OrbitReport r;
  r.base = canonical_point(V.field(), start);
  r.type = V.point_type(r.base);
  r.size = o.size();
  r.visited = o.size();
  std::uint64_t d = perp_count(V, o, r.base);
  r.cd = {static_cast<i64>(r.size - 1 - d), static_cast<i64>(d)};
  if (V.field().q() == 3) attach_verdicts(r, V.dim());
  return r;
}

inline OrbitReport cd_parameters(const QuadraticSpace& V, const MatrixGroup& G, const Vec& start,
                                 std::size_t cap = kDefaultOrbitCap, std::size_t expected = 0) {
  if (V.Q(start) == 0) throw DomainError("cd_parameters needs a non-singular base point");
  if (G.dim != V.dim()) throw DomainError("group and space dimensions differ");
  auto t0 = std::chrono::steady_clock::now();
  Orbit o = orbit(G, start, cap, expected);
  OrbitReport r = report_from_orbit(V, o, start);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

struct OrbitCell {
  Vec rep;
  std::uint64_t size;
  CdPair cd;
};

/// Orbits of G on E_xi(V) (GF(3)), each with its (c, d); reps are the first
/// point of the orbit in enumeration order.
inline std::vector<OrbitCell> orbit_partition(const QuadraticSpace& V, const MatrixGroup& G, Sign xi,
                                              bool with_cd = true) {
  if (!packable(G)) throw DomainError("orbit_partition supports GF(3) groups of dim <= 64");
  std::vector<PVec> pts;
  Elt target = 0;
  for (Elt g = 1; g < 3; ++g)
    if (V.type_of_value(g) == xi) target = g;
  for_each_point(V, [&](const Vec& v) {
    if (V.Q(v) == target) pts.push_back(pack(v));
  });
  auto gens = grease(G);
  PVecSet seen(pts.size());
  std::vector<OrbitCell> cells;
  for (auto& p : pts) {
    if (seen.contains(p)) continue;
    std::vector<PVec> orb;
    packed_orbit(gens, p, kDefaultOrbitCap, orb, seen);
    OrbitCell c{unpack(p, V.dim()), orb.size(), {}};
    if (with_cd) {
      PVec w = pack(V.gram_image(c.rep));
      i64 d = 0;
      for (auto& y : orb)
        if (!(y == p) && dot(y, w) == 0) ++d;
      c.cd = {static_cast<i64>(orb.size()) - 1 - d, d};
    }
    cells.push_back(c);
  }
  return cells;
}

/// Verified generators of Omega(V): every generator has determinant 1 and
/// square spinor norm, and for small odd-dimensional spaces the group is
/// transitive on the points of each type.
inline MatrixGroup omega_generators(const QuadraticSpace& V, std::string label = "Omega") {
  MatrixGroup G = omega_generator_set(V, std::move(label));
  for (auto& g : G.gens) {
    if (g.det() != 1) throw ConstructionError("omega generator with determinant != 1");
    if (spinor_norm(V, g) != SquareClass::Square) throw ConstructionError("omega generator outside the spinor kernel");
  }
  if (V.dim() % 2 == 1 && space_size(V) <= 177147) {
    const FiniteField& F = V.field();
    for (Sign xi : {Sign::Plus, Sign::Minus}) {
      std::uint64_t count = 0;
      std::optional<Vec> rep;
      for_each_point(V, [&](const Vec& v) {
        Elt g = V.Q(v);
        if (g != 0 && V.type_of_value(g) == xi) {
          ++count;
          if (!rep) rep = v;
        }
      });
      if (!rep) continue;
      // over GF(q) the points of one type split by the square class of Q; Omega fixes Q(v) up to squares
      std::uint64_t expected = count;
      if (F.q() == 3 && expected != nonsingular_point_count(static_cast<unsigned>(V.dim() / 2), xi))
        throw InternalError("point count disagrees with closed form");
      if (orbit(G, *rep).size() != expected) throw ConstructionError("omega generators are not transitive on a point type");
    }
  }
  return G;
}

}  // namespace rank3
