#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "matrix.hpp"

namespace rank3 {

/// GF(3) vector of length <= 64 in bit-sliced form: bit i of p set means
/// coordinate i is 1, bit i of n set means it is 2.
struct PVec {
  std::uint64_t p = 0, n = 0;
  bool operator==(const PVec&) const = default;
  bool is_zero() const { return (p | n) == 0; }
};

inline PVec operator+(PVec a, PVec b) {
  std::uint64_t za = ~(a.p | a.n), zb = ~(b.p | b.n);
  return {(a.p & zb) | (b.p & za) | (a.n & b.n), (a.n & zb) | (b.n & za) | (a.p & b.p)};
}
inline PVec operator-(PVec a) { return {a.n, a.p}; }
inline PVec operator-(PVec a, PVec b) { return a + (-b); }

/// Canonical projective representative: first nonzero coordinate equal to 1.
inline PVec canonical(PVec v) {
  std::uint64_t any = v.p | v.n;
  std::uint64_t low = any & (~any + 1);
  return (v.n & low) ? PVec{v.n, v.p} : v;
}

/// Standard dot product sum a_i b_i in GF(3), returned as 0, 1, 2.
inline unsigned dot(PVec a, PVec b) {
  int plus = std::popcount(a.p & b.p) + std::popcount(a.n & b.n);
  int minus = std::popcount(a.p & b.n) + std::popcount(a.n & b.p);
  int r = (plus - minus) % 3;
  return static_cast<unsigned>(r < 0 ? r + 3 : r);
}

inline PVec pack(const Vec& v) {
  if (v.size() > 64) throw DomainError("packed vectors hold at most 64 coordinates");
  PVec r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 1) r.p |= std::uint64_t{1} << i;
    else if (v[i] == 2) r.n |= std::uint64_t{1} << i;
    else if (v[i] != 0) throw DomainError("not a GF(3) coordinate");
  }
  return r;
}

inline Vec unpack(PVec v, std::size_t n) {
  Vec r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if ((v.p >> i) & 1) r[i] = 1;
    else if ((v.n >> i) & 1) r[i] = 2;
  }
  return r;
}

/// Matrix prepared for fast v -> v*M: rows grouped in fours, every signed
/// combination of a group precomputed.
class GreasedMatrix {
 public:
  GreasedMatrix() = default;
  explicit GreasedMatrix(const Matrix& m) : dim_(m.rows()) {
    if (m.field()->q() != 3) throw DomainError("greased matrices are GF(3) only");
    if (!m.square() || m.rows() > 64) throw DomainError("greased matrices need square dim <= 64");
    std::size_t chunks = (dim_ + 3) / 4;
    table_.assign(chunks * 256, PVec{});
    std::vector<PVec> rows(dim_);
    for (std::size_t i = 0; i < dim_; ++i) rows[i] = pack(m.row(i));
    for (std::size_t c = 0; c < chunks; ++c)
      for (unsigned idx = 0; idx < 256; ++idx) {
        unsigned pb = idx & 15, nb = idx >> 4;
        if (pb & nb) continue;
        PVec s;
        for (unsigned j = 0; j < 4; ++j) {
          std::size_t r = 4 * c + j;
          if (r >= dim_) break;
          if ((pb >> j) & 1) s = s + rows[r];
          if ((nb >> j) & 1) s = s - rows[r];
        }
        table_[c * 256 + idx] = s;
      }
  }

  std::size_t dim() const { return dim_; }

  PVec apply(PVec v) const {
    PVec r;
    const PVec* t = table_.data();
    std::uint64_t p = v.p, n = v.n;
    while (p | n) {
      unsigned idx = static_cast<unsigned>((p & 15) | ((n & 15) << 4));
      if (idx) r = r + t[idx];
      p >>= 4;
      n >>= 4;
      t += 256;
    }
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<PVec> table_;
};

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

/// Open-addressing set of nonzero packed vectors.
class PVecSet {
 public:
  explicit PVecSet(std::size_t expected = 1024) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, PVec{});
    mask_ = cap - 1;
  }

  std::size_t size() const { return size_; }

  bool insert(PVec v) {
    if (2 * (size_ + 1) > slots_.size()) grow();
    std::size_t i = slot(v);
    if (slots_[i] == v) return false;
    slots_[i] = v;
    ++size_;
    return true;
  }
  bool contains(PVec v) const { return slots_[slot(v)] == v; }

 private:
  std::size_t slot(PVec v) const {
    std::size_t i = mix64(v.p * 0x9e3779b97f4a7c15ULL ^ mix64(v.n)) & mask_;
    while (!slots_[i].is_zero() && !(slots_[i] == v)) i = (i + 1) & mask_;
    return i;
  }
  void grow() {
    std::vector<PVec> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, PVec{});
    mask_ = slots_.size() - 1;
    for (auto& v : old)
      if (!v.is_zero()) slots_[slot(v)] = v;
  }

  std::vector<PVec> slots_;
  std::size_t mask_ = 0, size_ = 0;
};

}  // namespace rank3
