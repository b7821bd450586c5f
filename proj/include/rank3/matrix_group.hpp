#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quadratic_space.hpp"

namespace rank3 {

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

/// Finitely generated group of invertible matrices acting on row vectors.
struct MatrixGroup {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  std::string label;
  std::optional<Matrix> form;  // set when every generator preserves this Gram matrix

  MatrixGroup() = default;
  MatrixGroup(FieldPtr f, std::size_t n, std::vector<Matrix> g, std::string lbl = {},
              std::optional<Matrix> preserved = std::nullopt)
      : field(std::move(f)), dim(n), gens(std::move(g)), label(std::move(lbl)), form(std::move(preserved)) {
    validate();
  }

  void validate() const {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Matrix& g = gens[i];
      if (g.rows() != dim || g.cols() != dim) throw DomainError("generator " + std::to_string(i) + " has wrong shape");
      if (!g.invertible()) throw DomainError("generator " + std::to_string(i) + " is singular");
      if (form && g * *form * g.transpose() != *form)
        throw DomainError("generator " + std::to_string(i) + " does not preserve the form");
    }
  }
};

/// r_u: v -> v - (f(v,u)/Q(u)) u.
inline Matrix reflection(const QuadraticSpace& V, const Vec& u) {
  const FiniteField& F = V.field();
  Elt qu = V.Q(u);
  if (qu == 0) throw DomainError("reflection in a singular vector");
  Elt inv = F.inv(qu);
  Vec ug = V.gram_image(u);
  std::size_t n = V.dim();
  Matrix r = Matrix::identity(V.field_ptr(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Elt c = F.neg(F.mul(ug[i], inv));
    if (!c) continue;
    for (std::size_t j = 0; j < n; ++j) r(i, j) = F.add(r(i, j), F.mul(c, u[j]));
  }
  return r;
}

/// x -> x + f(x,v)u - f(x,u)v - Q(v) f(x,u) u.
inline Matrix eichler(const QuadraticSpace& V, const Vec& u, const Vec& v) {
  const FiniteField& F = V.field();
  if (vec_is_zero(u) || V.Q(u) != 0) throw DomainError("eichler needs a nonzero singular u");
  if (V.bilinear(u, v) != 0) throw DomainError("eichler needs f(u,v) = 0");
  Subspace span(V.field_ptr(), V.dim());
  span.add(u);
  if (span.contains(v)) throw DomainError("eichler needs v outside <u>");
  Vec ug = V.gram_image(u), vg = V.gram_image(v);
  Elt qv = V.Q(v);
  std::size_t n = V.dim();
  Matrix m = Matrix::identity(V.field_ptr(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Elt cu = F.sub(vg[i], F.mul(qv, ug[i]));
    Elt cv = F.neg(ug[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = F.add(m(i, j), F.add(F.mul(cu, u[j]), F.mul(cv, v[j])));
  }
  return m;
}

/// Rows form a basis orthogonal for V's form.
inline Matrix orthogonal_basis(const QuadraticSpace& V) {
  const FiniteField& F = V.field();
  std::size_t n = V.dim();
  std::vector<Vec> rest, out;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit_vec(n, i));
  while (!rest.empty()) {
    std::optional<Vec> u;
    for (std::size_t a = 0; a < rest.size() && !u; ++a) {
      if (V.Q(rest[a]) != 0) u = rest[a];
      for (std::size_t b = a + 1; b < rest.size() && !u; ++b) {
        Vec s = vec_add(F, rest[a], rest[b]);
        if (V.Q(s) != 0) u = s;
      }
    }
    if (!u) throw InternalError("no anisotropic vector in a non-degenerate complement");
    Elt fuu = V.bilinear(*u, *u);
    std::vector<Vec> next;
    Subspace span(V.field_ptr(), n);
    for (auto& r : rest) {
      Vec p = vec_sub(F, r, vec_scale(F, *u, F.div(V.bilinear(r, *u), fuu)));
      if (span.add(p)) next.push_back(p);
    }
    out.push_back(*u);
    rest = next;
  }
  return Matrix::from_rows(V.field_ptr(), out);
}

/// Square class of prod Q(u_i) over a reflection decomposition of g.
inline SquareClass spinor_norm(const QuadraticSpace& V, const Matrix& g) {
  const FiniteField& F = V.field();
  if (!V.preserves(g)) throw DomainError("spinor_norm of a non-isometry");
  if (g.det() != 1) throw DomainError("spinor_norm needs determinant 1");
  if (!V.gram().is_diagonal()) {
    Matrix P = orthogonal_basis(V);
    QuadraticSpace D(P * V.gram() * P.transpose());
    return spinor_norm(D, P * g * P.inverse());
  }
  std::size_t n = V.dim();
  Matrix h = g;
  Elt prod = 1;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec b = unit_vec(n, i);
    // vectors perpendicular to the already fixed e_0..e_{i-1}
    std::vector<Vec> perp_basis;
    {
      Matrix rows(V.field_ptr(), i, n);
      for (std::size_t r = 0; r < i; ++r)
        for (std::size_t c = 0; c < n; ++c) rows(r, c) = V.gram()(r, c);
      perp_basis = i ? rows.nullspace() : std::vector<Vec>{};
      if (!i)
        for (std::size_t c = 0; c < n; ++c) perp_basis.push_back(unit_vec(n, c));
    }
    for (int guard = 0; guard < 4; ++guard) {
      Vec w = vec_sub(F, vec_mul(b, h), b);
      if (vec_is_zero(w)) break;
      Elt qw = V.Q(w);
      if (qw != 0) {
        h = h * reflection(V, w);
        prod = F.mul(prod, qw);
        ++count;
        continue;
      }
      // singular difference: pre-compose with a reflection that fixes e_0..e_{i-1}
      bool found = false;
      std::mt19937_64 rng(0x5eed + i);
      std::size_t k = perp_basis.size();
      for (std::size_t attempt = 0; attempt < 4096 && !found; ++attempt) {
        Vec u(n, 0);
        if (attempt < k) {
          u = perp_basis[attempt];
        } else if (attempt < k + k * k) {
          std::size_t a = (attempt - k) / k, c = (attempt - k) % k;
          if (a >= c) continue;
          u = vec_add(F, perp_basis[a], perp_basis[c]);
        } else {
          for (std::size_t j = 0; j < k; ++j) u = vec_add(F, u, vec_scale(F, perp_basis[j], rng() % F.q()));
        }
        if (vec_is_zero(u)) continue;
        Elt qu = V.Q(u);
        if (qu == 0) continue;
        Matrix h2 = h * reflection(V, u);
        Vec w2 = vec_sub(F, vec_mul(b, h2), b);
        if (vec_is_zero(w2) || V.Q(w2) != 0) {
          h = h2;
          prod = F.mul(prod, qu);
          ++count;
          found = true;
        }
      }
      if (!found) throw InternalError("reflection decomposition failed to progress");
    }
    if (!vec_is_zero(vec_sub(F, vec_mul(b, h), b))) throw InternalError("reflection decomposition did not fix basis vector");
  }
  if (!h.is_identity()) throw InternalError("reflection decomposition incomplete");
  if (count % 2) throw InternalError("odd number of reflections for a determinant-1 isometry");
  return F.square_class(prod);
}

/// Hyperbolic pairs (e_i, f_i) with f(e_i,f_i) = 1 and an anisotropic remainder.
struct WittBasis {
  std::vector<std::pair<Vec, Vec>> pairs;
  std::vector<Vec> anisotropic;
};

inline std::optional<Vec> find_singular(const QuadraticSpace& V, const std::vector<Vec>& basis) {
  const FiniteField& F = V.field();
  std::size_t k = std::min<std::size_t>(basis.size(), 3);
  if (k == 0) return std::nullopt;
  std::vector<Elt> coef(k, 0);
  while (true) {
    std::size_t i = 0;
    for (; i < k; ++i) {
      coef[i] = (coef[i] + 1 == F.q()) ? 0 : coef[i] + 1;
      if (coef[i]) break;
    }
    if (i == k) return std::nullopt;
    Vec v(V.dim(), 0);
    for (std::size_t j = 0; j < k; ++j)
      if (coef[j]) v = vec_add(F, v, vec_scale(F, basis[j], coef[j]));
    if (!vec_is_zero(v) && V.Q(v) == 0) return v;
  }
}

inline WittBasis witt_basis(const QuadraticSpace& V) {
  const FiniteField& F = V.field();
  std::size_t n = V.dim();
  std::vector<Vec> W;
  for (std::size_t i = 0; i < n; ++i) W.push_back(unit_vec(n, i));
  WittBasis wb;
  while (true) {
    auto e = find_singular(V, W);
    if (!e) break;
    Vec f;
    for (auto& w : W)
      if (V.bilinear(*e, w) != 0) {
        f = w;
        break;
      }
    if (f.empty()) throw InternalError("degenerate subspace during Witt decomposition");
    f = vec_scale(F, f, F.inv(V.bilinear(*e, f)));
    f = vec_sub(F, f, vec_scale(F, *e, V.Q(f)));
    Subspace next(V.field_ptr(), n);
    std::vector<Vec> W2;
    for (auto& x : W) {
      Vec y = vec_sub(F, x, vec_add(F, vec_scale(F, *e, V.bilinear(x, f)), vec_scale(F, f, V.bilinear(x, *e))));
      if (next.add(y)) W2.push_back(y);
    }
    wb.pairs.emplace_back(*e, f);
    W = W2;
  }
  wb.anisotropic = W;
  return wb;
}

/// Eichler transformations E(u, lambda v) for u in each hyperbolic pair and v
/// running over the other Witt basis vectors; lambda over a prime-field basis of F.
inline MatrixGroup omega_generator_set(const QuadraticSpace& V, std::string label = "Omega") {
  if (V.dim() < 3) throw DomainError("omega_generators needs dim >= 3");
  WittBasis wb = witt_basis(V);
  if (wb.pairs.empty()) throw DomainError("omega_generators needs Witt index >= 1");
  const FiniteField& F = V.field();
  std::vector<Elt> scalars;
  for (std::uint32_t t = 0; t < F.degree(); ++t) scalars.push_back(static_cast<Elt>(ipow(F.p(), t)));
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < wb.pairs.size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < wb.pairs.size(); ++j)
      if (j != i) {
        others.push_back(wb.pairs[j].first);
        others.push_back(wb.pairs[j].second);
      }
    for (auto& a : wb.anisotropic) others.push_back(a);
    for (const Vec* u : {&wb.pairs[i].first, &wb.pairs[i].second})
      for (auto& v : others)
        for (Elt s : scalars) gens.push_back(eichler(V, *u, vec_scale(F, v, s)));
  }
  return MatrixGroup(V.field_ptr(), V.dim(), std::move(gens), std::move(label), V.gram());
}

/// Elements of a small group by closure; throws past the cap.
inline std::vector<Matrix> enumerate_group(const MatrixGroup& G, std::size_t cap = 200000) {
  std::unordered_set<Vec, VecHash> seen;
  std::vector<Matrix> elems{Matrix::identity(G.field, G.dim)};
  seen.insert(elems[0].data());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto& g : G.gens) {
      Matrix h = elems[i] * g;
      if (seen.insert(h.data()).second) {
        elems.push_back(h);
        if (elems.size() > cap) throw ResourceError("group order exceeds enumeration cap " + std::to_string(cap));
      }
    }
  return elems;
}

}  // namespace rank3
