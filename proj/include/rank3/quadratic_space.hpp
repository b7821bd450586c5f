#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace rank3 {

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline const char* to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }
inline Sign sign_from_int(int x) { return x > 0 ? Sign::Plus : Sign::Minus; }

/// rho(x): ZERO for singular vectors; PLUS/MINUS in odd dimension; the
/// value Q(x) itself in even dimension.
struct PointType {
  enum Kind { Zero, Plus, Minus, Value } kind;
  Elt gamma = 0;

  bool operator==(const PointType& o) const { return kind == o.kind && (kind != Value || gamma == o.gamma); }
  Sign sign() const {
    if (kind == Plus) return Sign::Plus;
    if (kind == Minus) return Sign::Minus;
    throw DomainError("point type has no sign");
  }
};

inline const char* to_string(PointType::Kind k) {
  switch (k) {
    case PointType::Zero: return "ZERO";
    case PointType::Plus: return "PLUS";
    case PointType::Minus: return "MINUS";
    default: return "VALUE";
  }
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// (V, F_q, Q) with Q(v) = f(v,v)/2 and f given by a symmetric invertible Gram matrix.
class QuadraticSpace {
 public:
  QuadraticSpace(Matrix gram) : gram_(std::move(gram)) {
    const FiniteField& F = field();
    if (F.p() == 2) throw DomainError("characteristic 2 is not supported");
    if (!gram_.square() || gram_.rows() == 0) throw DomainError("gram matrix must be square");
    if (!gram_.is_symmetric()) throw DomainError("gram matrix must be symmetric");
    det_ = gram_.det();
    if (det_ == 0) throw DomainError("form is degenerate");
    half_ = F.inv(2 % F.p());
  }

  const FieldPtr& field_ptr() const { return gram_.field(); }
  const FiniteField& field() const { return *gram_.field(); }
  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Elt det() const { return det_; }
  SquareClass discriminant() const { return field().square_class(det_); }

  Elt bilinear(const Vec& u, const Vec& v) const {
    const FiniteField& F = field();
    Elt s = 0;
    std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      if (!u[i]) continue;
      Elt t = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (v[j] && gram_(i, j)) t = F.add(t, F.mul(gram_(i, j), v[j]));
      s = F.add(s, F.mul(u[i], t));
    }
    return s;
  }
  Elt Q(const Vec& v) const { return field().mul(half_, bilinear(v, v)); }
  bool perpendicular(const Vec& u, const Vec& v) const { return bilinear(u, v) == 0; }

  /// u * G, so that f(x, u) = x . (u G).
  Vec gram_image(const Vec& u) const { return vec_mul(u, gram_); }

  bool preserves(const Matrix& g) const { return g * gram_ * g.transpose() == gram_; }

  /// Sign of an even-dimensional space: + iff det(G)(-1)^k is a square.
  Sign sign_by_discriminant() const {
    if (dim() % 2) throw DomainError("sign is defined for even dimension only");
    const FiniteField& F = field();
    Elt d = det_;
    if ((dim() / 2) % 2) d = F.neg(d);
    return F.is_square(d) ? Sign::Plus : Sign::Minus;
  }

  /// Type of a vector with Q = gamma != 0 in odd dimension 2m+1:
  /// + iff det(G) * 2 gamma * (-1)^m is a square.
  Sign type_of_value(Elt gamma) const {
    if (dim() % 2 == 0) throw DomainError("type_of_value needs odd dimension");
    if (gamma == 0) throw DomainError("singular value has no sign");
    const FiniteField& F = field();
    Elt x = F.mul(det_, F.add(gamma, gamma));
    if ((dim() / 2) % 2) x = F.neg(x);
    return F.is_square(x) ? Sign::Plus : Sign::Minus;
  }

  PointType point_type(const Vec& v) const {
    if (vec_is_zero(v)) throw DomainError("point type of the zero vector");
    Elt g = Q(v);
    if (g == 0) return {PointType::Zero, 0};
    if (dim() % 2 == 0) return {PointType::Value, g};
    return {type_of_value(g) == Sign::Plus ? PointType::Plus : PointType::Minus, g};
  }

 private:
  Matrix gram_;
  Elt det_ = 0, half_ = 0;
};

/// Diagonal space lambda*I (odd n) or diag(1,..,1,lambda) (even n) with the requested discriminant.
inline QuadraticSpace standard_space(std::size_t n, FieldPtr f, SquareClass disc = SquareClass::Square) {
  if (n < 1) throw DomainError("dimension must be positive");
  Elt lam = f->class_rep(disc);
  Matrix g(f, n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = (n % 2 == 1 || i + 1 == n) ? lam : 1;
  return QuadraticSpace(g);
}

/// Walks all q^n vectors in odometer order keeping v*G current, so each step
/// costs O(n). Calls fn(v, Q(v)).
inline void for_each_vector(const QuadraticSpace& V, const std::function<void(const Vec&, Elt)>& fn) {
  const FiniteField& F = V.field();
  std::size_t n = V.dim();
  const Matrix& G = V.gram();
  Elt half = F.inv(2 % F.p());
  Vec v(n, 0), vg(n, 0);
  Elt q2 = 0;  // f(v,v)
  while (true) {
    fn(v, F.mul(half, q2));
    std::size_t i = 0;
    for (; i < n; ++i) {
      Elt old = v[i];
      Elt nv = (old + 1 == F.q()) ? 0 : old + 1;
      Elt delta = F.sub(nv, old);
      // f(v+d e_i, v+d e_i) = f(v,v) + 2 d (vG)_i + d^2 G_ii
      Elt two_d = F.add(delta, delta);
      q2 = F.add(q2, F.add(F.mul(two_d, vg[i]), F.mul(F.mul(delta, delta), G(i, i))));
      for (std::size_t j = 0; j < n; ++j)
        if (G(i, j)) vg[j] = F.add(vg[j], F.mul(delta, G(i, j)));
      v[i] = nv;
      if (nv != 0) break;
    }
    if (i == n) return;
  }
}

/// Histogram of Q over all vectors (index = encoded field value).
inline std::vector<std::uint64_t> norm_histogram(const QuadraticSpace& V) {
  std::vector<std::uint64_t> h(V.field().q(), 0);
  for_each_vector(V, [&](const Vec&, Elt g) { ++h[g]; });
  return h;
}

constexpr std::uint64_t kExhaustiveLimit = 43046721;  // 3^16

inline std::uint64_t space_size(const QuadraticSpace& V) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < V.dim(); ++i) {
    s *= V.field().q();
    if (s > kExhaustiveLimit) return kExhaustiveLimit + 1;
  }
  return s;
}

/// Sign of an even-dimensional space. Uses the singular-vector count when the
/// space is small enough, cross-checked against the discriminant rule.
inline Sign sign_of_space(const QuadraticSpace& V) {
  Sign by_disc = V.sign_by_discriminant();
  if (space_size(V) > kExhaustiveLimit) return by_disc;
  std::uint64_t q = V.field().q();
  unsigned k = static_cast<unsigned>(V.dim() / 2);
  std::uint64_t zeros = norm_histogram(V)[0];
  std::uint64_t base = ipow(q, 2 * k - 1), diff = ipow(q, k) - ipow(q, k - 1);
  Sign by_count;
  if (zeros == base + diff)
    by_count = Sign::Plus;
  else if (zeros == base - diff)
    by_count = Sign::Minus;
  else
    throw InternalError("singular vector count matches neither sign");
  if (by_count != by_disc) throw InternalError("sign by count disagrees with discriminant rule");
  return by_count;
}

/// Closed-form #{v : Q(v) = gamma}; the gamma = 0 count includes 0.
inline std::uint64_t closed_form_count(const QuadraticSpace& V, Elt gamma, bool include_zero = true) {
  std::uint64_t q = V.field().q();
  std::size_t n = V.dim();
  std::uint64_t r;
  if (n % 2 == 0) {
    unsigned k = static_cast<unsigned>(n / 2);
    int eps = sign_value(V.sign_by_discriminant());
    if (gamma == 0)
      r = ipow(q, 2 * k - 1) + eps * static_cast<std::int64_t>(ipow(q, k) - ipow(q, k - 1));
    else
      r = ipow(q, 2 * k - 1) - eps * static_cast<std::int64_t>(ipow(q, k - 1));
  } else {
    unsigned k = static_cast<unsigned>(n / 2);
    if (gamma == 0)
      r = ipow(q, 2 * k);
    else
      r = ipow(q, 2 * k) + sign_value(V.type_of_value(gamma)) * static_cast<std::int64_t>(ipow(q, k));
  }
  if (gamma == 0 && !include_zero) --r;
  return r;
}

struct NormCount {
  std::uint64_t closed_form;
  std::optional<std::uint64_t> exhaustive;  // absent: closed-form-only
  bool closed_form_only() const { return !exhaustive; }
  bool agree() const { return !exhaustive || *exhaustive == closed_form; }
};

inline NormCount count_norm_vectors(const QuadraticSpace& V, Elt gamma, bool include_zero = true) {
  NormCount c{closed_form_count(V, gamma, include_zero), std::nullopt};
  if (space_size(V) <= kExhaustiveLimit) {
    std::uint64_t e = norm_histogram(V)[gamma];
    if (gamma == 0 && !include_zero) --e;
    c.exhaustive = e;
  }
  return c;
}

/// Calls fn on every canonical point representative (first nonzero coordinate 1).
inline void for_each_point(const QuadraticSpace& V, const std::function<void(const Vec&)>& fn) {
  const FiniteField& F = V.field();
  std::size_t n = V.dim();
  for (std::size_t lead = 0; lead < n; ++lead) {
    Vec v(n, 0);
    v[lead] = 1;
    while (true) {
      fn(v);
      std::size_t i = lead + 1;
      for (; i < n; ++i) {
        v[i] = (v[i] + 1 == F.q()) ? 0 : v[i] + 1;
        if (v[i] != 0) break;
      }
      if (i >= n) break;
    }
  }
}

/// E_xi(V): canonical representatives of the non-singular points of type xi.
inline std::vector<Vec> nonsingular_points(const QuadraticSpace& V, Sign xi) {
  if (V.dim() % 2 == 0) throw DomainError("nonsingular_points needs odd dimension");
  std::vector<Vec> out;
  for_each_point(V, [&](const Vec& v) {
    Elt g = V.Q(v);
    if (g != 0 && V.type_of_value(g) == xi) out.push_back(v);
  });
  return out;
}

/// |E_xi| = 3^m (3^m + xi) / 2 over GF(3), dim 2m+1.
inline std::uint64_t nonsingular_point_count(unsigned m, Sign xi) {
  std::uint64_t a = ipow(3, m);
  return a * (sign_value(xi) > 0 ? a + 1 : a - 1) / 2;
}

}  // namespace rank3
