#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbit.hpp"
#include "perm_group.hpp"

namespace rank3 {

struct BasePoint {
  std::string name;
  Vec v;
};

struct ConstructedCase {
  std::string label;
  std::string citation;
  QuadraticSpace space;
  MatrixGroup group;
  std::vector<BasePoint> base_points;
};

/// Block-diagonal placement of g at offset `at` inside an n x n identity.
inline Matrix embed_block(const Matrix& g, std::size_t n, std::size_t at) {
  Matrix m = Matrix::identity(g.field(), n);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m(at + i, at + j) = g(i, j);
  return m;
}

inline Matrix block_diag(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (auto& b : blocks) n += b.rows();
  Matrix m(blocks.at(0).field(), n, n);
  std::size_t at = 0;
  for (auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return m;
}

inline Vec vec_from_ints(const FiniteField& F, const std::vector<long long>& xs) {
  Vec v;
  for (auto x : xs) v.push_back(F.from_int(x));
  return v;
}

// ---------------------------------------------------------------- wreath

inline ConstructedCase wreath_o1_subgroup(std::size_t n) {
  if (n % 2 == 0 || n < 5 || n > 13) throw DomainError("wreath case needs odd 5 <= n <= 13");
  auto F = gf3();
  auto V = standard_space(n, F);
  std::vector<Matrix> gens;
  auto x = [&](std::size_t i) { return unit_vec(n, i); };
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(reflection(V, x(i)) * reflection(V, x(i + 1)));
  // r_{x_i - x_j} swaps x_i and x_j; (1 2)(1 k) gives the 3-cycles generating A_n
  Matrix t12 = reflection(V, vec_sub(*F, x(0), x(1)));
  for (std::size_t k = 2; k < n; ++k) gens.push_back(t12 * reflection(V, vec_sub(*F, x(0), x(k))));
  MatrixGroup G(F, n, gens, "wreath-n" + std::to_string(n), V.gram());
  Vec x1 = x(0), x12 = vec_add(*F, x(0), x(1));
  return {G.label, "orthonormal-frame stabilizer O1 wr S_n in Omega_n(3)", V, G, {{"x1", x1}, {"x1+x2", x12}}};
}

// ---------------------------------------------------------------- parabolic

/// Basis e_1..e_a, x_1..x_s, f_1..f_a with Gram [[0,0,I],[0,I,0],[I,0,0]].
inline ConstructedCase parabolic_subgroup(std::size_t n, std::size_t alpha) {
  if (n % 2 == 0 || n < 3) throw DomainError("parabolic case needs odd n >= 3");
  std::size_t m = n / 2;
  if (alpha < 1 || alpha > m) throw DomainError("parabolic case needs 1 <= alpha <= m");
  auto F = gf3();
  std::size_t s = n - 2 * alpha;
  Matrix gram(F, n, n);
  for (std::size_t i = 0; i < alpha; ++i) gram(i, alpha + s + i) = gram(alpha + s + i, i) = 1;
  for (std::size_t i = 0; i < s; ++i) gram(alpha + i, alpha + i) = 1;
  QuadraticSpace V(gram);
  Elt half = F->inv(2);

  auto unipotent = [&](const Matrix& B, const Matrix& A) {
    // rows: e -> e; x -> x + B e; f -> A e + C x + f with C = -B^T
    Matrix u = Matrix::identity(F, n);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < alpha; ++i) u(alpha + j, i) = B(j, i);
    for (std::size_t i = 0; i < alpha; ++i) {
      for (std::size_t k = 0; k < alpha; ++k) u(alpha + s + i, k) = A(i, k);
      for (std::size_t j = 0; j < s; ++j) u(alpha + s + i, alpha + j) = F->neg(B(j, i));
    }
    return u;
  };

  std::vector<Matrix> gens;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < alpha; ++i) {
      Matrix B(F, s, alpha);
      B(j, i) = 1;
      // A + A^T = -B^T B; take the symmetric half
      Matrix A = (B.transpose() * B).scaled(F->neg(half));
      gens.push_back(unipotent(B, A));
    }
  for (std::size_t i = 0; i < alpha; ++i)
    for (std::size_t k = i + 1; k < alpha; ++k) {
      Matrix A(F, alpha, alpha);
      A(i, k) = 1;
      A(k, i) = 2;
      gens.push_back(unipotent(Matrix(F, s, alpha), A));
    }
  // Levi: diag(D, I, D^-T) for elementary D in SL_alpha(3)
  for (std::size_t i = 0; i < alpha; ++i)
    for (std::size_t k = 0; k < alpha; ++k) {
      if (i == k) continue;
      Matrix D = Matrix::identity(F, alpha);
      D(i, k) = 1;
      gens.push_back(block_diag({D, Matrix::identity(F, s), D.inverse().transpose()}));
    }
  std::vector<BasePoint> base;
  if (s >= 3) {
    auto X = standard_space(s, F);
    auto OX = omega_generators(X);
    for (auto& g : OX.gens) gens.push_back(embed_block(g, n, alpha));
  }
  if (s >= 1) {
    // a non-singular x in X for each available type, and z = eta e_1 + f_1 with eta = Q(x)
    for (std::size_t k = 1; k <= std::min<std::size_t>(s, 2); ++k) {
      Vec x(n, 0);
      for (std::size_t j = 0; j < k; ++j) x[alpha + j] = 1;
      Elt eta = V.Q(x);
      if (eta == 0) continue;
      Vec z(n, 0);
      z[0] = eta;
      z[alpha + s] = 1;
      std::string t = V.type_of_value(eta) == Sign::Plus ? "+" : "-";
      base.push_back({"x" + t, x});
      base.push_back({"z" + t, z});
    }
  }
  MatrixGroup G(F, n, gens, "parabolic-n" + std::to_string(n) + "-a" + std::to_string(alpha), V.gram());
  return {G.label, "stabilizer of a totally singular subspace in Omega_n(3)", V, G, base};
}

// ---------------------------------------------------------------- field extension

/// First element z whose conjugates z, z^p, .. form a basis over the prime field.
inline Elt first_normal_element(const FiniteField& F) {
  std::size_t a = F.degree();
  for (Elt z = 1; z < F.q(); ++z) {
    std::vector<Vec> rows;
    Elt c = z;
    for (std::size_t j = 0; j < a; ++j) {
      Vec r(a);
      for (std::size_t i = 0; i < a; ++i) r[i] = F.digit(c, static_cast<std::uint32_t>(i));
      rows.push_back(r);
      c = F.frobenius(c);
    }
    if (Matrix::from_rows(gf3(), rows).rank() == a) return z;
  }
  throw InternalError("no normal element");
}

inline bool is_normal_element(const FiniteField& F, Elt z) {
  std::size_t a = F.degree();
  std::vector<Vec> rows;
  Elt c = z;
  for (std::size_t j = 0; j < a; ++j) {
    Vec r(a);
    for (std::size_t i = 0; i < a; ++i) r[i] = F.digit(c, static_cast<std::uint32_t>(i));
    rows.push_back(r);
    c = F.frobenius(c);
  }
  return Matrix::from_rows(gf3(), rows).rank() == a;
}

/// Restriction of scalars GF(27)^b -> GF(3)^{3b} along the basis z^{3^j} w_i
/// (index 3i + j), with Q = T o Q_sharp.
struct BlowDown {
  FieldPtr big;
  Elt zeta;
  std::size_t b;
  std::vector<Vec> coords;  // coords[y] = coordinates of y in {zeta, zeta^3, zeta^9}

  BlowDown(FieldPtr big_field, std::size_t dim) : big(std::move(big_field)), b(dim) {
    const FiniteField& K = *big;
    zeta = is_normal_element(K, 3) ? 3 : first_normal_element(K);
    std::size_t a = K.degree();
    std::vector<Elt> nb;
    Elt c = zeta;
    for (std::size_t j = 0; j < a; ++j) {
      nb.push_back(c);
      c = K.frobenius(c);
    }
    coords.assign(K.q(), Vec(a, 0));
    // enumerate all combinations sum c_j nb_j
    std::size_t total = K.q();
    for (std::size_t code = 0; code < total; ++code) {
      Vec cf(a);
      std::size_t t = code;
      Elt y = 0;
      for (std::size_t j = 0; j < a; ++j) {
        cf[j] = static_cast<Elt>(t % 3);
        t /= 3;
        y = K.add(y, K.mul(cf[j], nb[j]));
      }
      coords[y] = cf;
    }
    basis_elems = nb;
  }

  std::vector<Elt> basis_elems;

  std::size_t dim() const { return b * basis_elems.size(); }

  Matrix gram(const Matrix& gram_sharp) const {
    const FiniteField& K = *big;
    std::size_t a = basis_elems.size(), n = dim();
    Matrix g(gf3(), n, n);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t k = 0; k < b; ++k)
          for (std::size_t l = 0; l < a; ++l)
            g(i * a + j, k * a + l) = K.trace(K.mul(gram_sharp(i, k), K.mul(basis_elems[j], basis_elems[l])));
    return g;
  }

  Matrix blow(const Matrix& g) const {
    const FiniteField& K = *big;
    std::size_t a = basis_elems.size(), n = dim();
    Matrix m(gf3(), n, n);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j)
        for (std::size_t k = 0; k < b; ++k) {
          const Vec& c = coords[K.mul(basis_elems[j], g(i, k))];
          for (std::size_t l = 0; l < a; ++l) m(i * a + j, k * a + l) = c[l];
        }
    return m;
  }

  /// GF(3) coordinates of a GF(27) vector.
  Vec blow_vec(const Vec& w) const {
    std::size_t a = basis_elems.size();
    Vec r(dim(), 0);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t l = 0; l < a; ++l) r[i * a + l] = coords[w[i]][l];
    return r;
  }

  /// Frobenius on coordinates: z^{3^j} w_i -> z^{3^{j+1}} w_i.
  Matrix frobenius() const {
    std::size_t a = basis_elems.size(), n = dim();
    Matrix m(gf3(), n, n);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < a; ++j) m(i * a + j, i * a + (j + 1) % a) = 1;
    return m;
  }
};

inline ConstructedCase field_extension_subgroup(std::size_t n = 9) {
  if (n != 9) throw DomainError("field extension case is built for n = 9");
  auto K = field_create(3, 3);
  auto Vs = standard_space(3, K);
  auto Om = omega_generators(Vs, "Omega_3(27)");
  BlowDown bd(K, 3);
  QuadraticSpace V(bd.gram(Vs.gram()));
  std::vector<Matrix> gens;
  for (auto& g : Om.gens) gens.push_back(bd.blow(g));
  gens.push_back(bd.frobenius());
  MatrixGroup G(gf3(), 9, gens, "fieldext-n9", V.gram());
  std::vector<BasePoint> base;
  for (Sign xi : {Sign::Plus, Sign::Minus})
    for_each_point(V, [&](const Vec& v) {
      if (base.size() < (xi == Sign::Plus ? 1u : 2u) && V.Q(v) != 0 && V.type_of_value(V.Q(v)) == xi)
        base.push_back({xi == Sign::Plus ? "plus" : "minus", v});
    });
  return {G.label, "extension-field subgroup Omega_3(27).3 in Omega_9(3)", V, G, base};
}

// ---------------------------------------------------------------- deleted permutation module

struct DeletedModule {
  std::size_t n, dim;
  bool quotient;  // 3 | n
  Vec w0;         // all-ones vector in e-coordinates (n-1 entries)

  explicit DeletedModule(std::size_t n_) : n(n_) {
    quotient = n % 3 == 0;
    dim = n - 1 - (quotient ? 1 : 0);
    w0.assign(n - 1, 0);
    for (std::size_t k = 0; k + 1 < n; ++k) w0[k] = static_cast<Elt>((k + 1) % 3);
  }

  /// Sum-zero vector in epsilon-coordinates -> module coordinates.
  Vec from_epsilon(const std::vector<long long>& u) const {
    const FiniteField& F = *gf3();
    Vec c(n - 1, 0);
    long long s = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      s += u[k];
      c[k] = F.from_int(s);
    }
    if (!quotient) return c;
    Elt t = F.div(c[n - 2], w0[n - 2]);
    c = vec_sub(F, c, vec_scale(F, w0, t));
    c.pop_back();
    return c;
  }

  Matrix gram() const {
    const FiniteField& F = *gf3();
    Matrix g(gf3(), dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      g(i, i) = 2;
      if (i + 1 < dim) g(i, i + 1) = g(i + 1, i) = F.neg(1);
    }
    return g;
  }

  Matrix action(const Perm& p) const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<long long> u(n, 0);
      u[p[i]] += 1;
      u[p[i + 1]] -= 1;
      rows.push_back(from_epsilon(u));
    }
    return Matrix::from_rows(gf3(), rows);
  }
};

inline ConstructedCase deleted_permutation_module(std::size_t n) {
  if (n < 5 || n > 64) throw DomainError("deleted module needs 5 <= n <= 64");
  DeletedModule D(n);
  QuadraticSpace V(D.gram());
  Perm t = perm_from_cycles(n, {{1, 2}});
  std::vector<int> cyc;
  for (std::size_t i = 1; i <= n; ++i) cyc.push_back(static_cast<int>(i));
  Perm c = perm_from_cycles(n, {cyc});
  MatrixGroup G(gf3(), D.dim, {D.action(t), D.action(c)}, "deleted-n" + std::to_string(n), V.gram());
  std::vector<long long> v(n, 0), w(n, 0);
  v[0] = 1;
  v[1] = -1;
  w[0] = w[1] = 1;
  w[2] = w[3] = -1;
  return {G.label, "fully deleted permutation module of S_n over GF(3)", V, G,
          {{"v", D.from_epsilon(v)}, {"w", D.from_epsilon(w)}}};
}

struct DeletedClosedForm {
  i64 orbit, c, d;
};

inline DeletedClosedForm deleted_module_closed_forms(i64 n, char which) {
  if (n < 10) throw DomainError("closed forms need n >= 10");
  if (which == 'v') {
    i64 d = (n - 2) * (n - 3) / 2;
    i64 c = 2 * n - 4;
    return {n * (n - 1) / 2, c, d};
  }
  if (which == 'w') {
    i64 orbit = n * (n - 1) * (n - 2) * (n - 3) / 8;
    i64 c = 2 * n * n * n - 25 * n * n + 111 * n - 172;
    i64 d = 2 + 4 * (n - 4) * (n - 4) + (n - 4) * (n - 5) * (n - 6) * (n - 7) / 8;
    return {orbit, c, d};
  }
  throw DomainError("which must be 'v' or 'w'");
}

// ---------------------------------------------------------------- tensor squares

/// Subspace of N (x) N spanned by symmetric or alternating tensors, with the
/// induced form and group action.
struct SquareModule {
  std::size_t n;
  bool alternating;
  std::vector<std::pair<std::size_t, std::size_t>> index;  // basis element k <-> (a, b)

  SquareModule(std::size_t n_, bool alt) : n(n_), alternating(alt) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = alt ? a + 1 : a; b < n; ++b) index.emplace_back(a, b);
  }
  std::size_t dim() const { return index.size(); }

  /// Basis vector k as an n^2 tensor.
  Vec tensor(std::size_t k) const {
    const FiniteField& F = *gf3();
    Vec t(n * n, 0);
    auto [a, b] = index[k];
    t[a * n + b] = 1;
    if (a != b) t[b * n + a] = alternating ? F.neg(1) : 1;
    return t;
  }
  /// Coordinates of a symmetric/alternating tensor (read at positions a <= b).
  Vec coords(const Vec& t) const {
    Vec c(dim());
    for (std::size_t k = 0; k < dim(); ++k) c[k] = t[index[k].first * n + index[k].second];
    return c;
  }
  Vec tensor_of(const Vec& coords_) const {
    const FiniteField& F = *gf3();
    Vec t(n * n, 0);
    for (std::size_t k = 0; k < dim(); ++k)
      if (coords_[k]) t = vec_add(F, t, vec_scale(F, tensor(k), coords_[k]));
    return t;
  }
  Matrix embedding() const {
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < dim(); ++k) rows.push_back(tensor(k));
    return Matrix::from_rows(gf3(), rows);
  }
  Matrix gram(const Matrix& G) const {
    Matrix E = embedding();
    return E * G.kron(G) * E.transpose();
  }
  Matrix action(const Matrix& g) const {
    Matrix img = embedding() * g.kron(g);
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < dim(); ++k) rows.push_back(coords(img.row(k)));
    return Matrix::from_rows(gf3(), rows);
  }
};

inline Vec outer(const Vec& a, const Vec& b) {
  const FiniteField& F = *gf3();
  Vec t(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) t[i * b.size() + j] = F.mul(a[i], b[j]);
  return t;
}

/// Module on w-perp (w non-singular) or w-perp/<w> (w singular), with form and group.
struct PerpQuotient {
  Subspace perp;          // RREF basis of w-perp
  std::size_t drop = 0;   // basis index eliminated when w is singular
  Vec w_coords;           // w in perp coordinates (when singular)
  bool singular = false;
  std::size_t dim = 0;

  PerpQuotient(const Matrix& gram, const Vec& w) : perp(gf3(), gram.rows()) {
    const FiniteField& F = *gf3();
    Matrix row = Matrix::from_rows(gf3(), {vec_mul(w, gram)});
    for (auto& v : row.nullspace()) perp.add(v);
    Elt ww = 0;
    Vec wg = vec_mul(w, gram);
    for (std::size_t i = 0; i < w.size(); ++i) ww = F.add(ww, F.mul(w[i], wg[i]));
    singular = ww == 0;
    dim = perp.dim();
    if (singular) {
      w_coords = perp.coords(w);
      while (w_coords[drop] == 0) ++drop;
      --dim;
    }
  }

  /// Quotient coordinates of a vector of w-perp.
  Vec project(const Vec& v) const {
    const FiniteField& F = *gf3();
    if (!perp.contains(v)) throw ConstructionError("vector outside w-perp");
    Vec c = perp.coords(v);
    if (!singular) return c;
    Elt t = F.div(c[drop], w_coords[drop]);
    c = vec_sub(F, c, vec_scale(F, w_coords, t));
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(drop));
    return c;
  }
  std::vector<Vec> lifts() const {
    std::vector<Vec> r;
    for (std::size_t k = 0; k < perp.dim(); ++k)
      if (!singular || k != drop) r.push_back(perp.basis()[k]);
    return r;
  }
  Matrix gram(const Matrix& G) const {
    Matrix B = Matrix::from_rows(gf3(), lifts());
    return B * G * B.transpose();
  }
  Matrix action(const Matrix& g) const {
    std::vector<Vec> rows;
    for (auto& b : lifts()) rows.push_back(project(vec_mul(b, g)));
    return Matrix::from_rows(gf3(), rows);
  }
};

/// Invariant tensor sum (G^-1)_{ab} e_a (x) e_b of a form with Gram G.
inline Vec invariant_tensor(const Matrix& G) {
  Matrix inv = G.inverse();
  return inv.data();
}

/// Natural module of Omega_7(3) in a Witt basis e1 e2 e3 x f1 f2 f3.
inline QuadraticSpace omega7_natural() {
  auto F = gf3();
  Matrix g(F, 7, 7);
  for (std::size_t i = 0; i < 3; ++i) g(i, 4 + i) = g(4 + i, i) = 1;
  g(3, 3) = 1;
  return QuadraticSpace(g);
}

inline ConstructedCase wedge_square_rep() {
  auto N = omega7_natural();
  auto ON = omega_generators(N, "Omega_7(3)");
  SquareModule W(7, true);
  QuadraticSpace V(W.gram(N.gram()));
  std::vector<Matrix> gens;
  for (auto& g : ON.gens) gens.push_back(W.action(g));
  MatrixGroup G(gf3(), W.dim(), gens, "omega7-wedge", V.gram());
  const FiniteField& F = *gf3();
  Vec e1 = unit_vec(7, 0), f1 = unit_vec(7, 4), x = unit_vec(7, 3);
  std::vector<BasePoint> base;
  for (int xi : {1, -1}) {
    Vec a = vec_sub(F, e1, vec_scale(F, f1, F.from_int(xi)));
    Vec t = vec_sub(F, outer(a, x), outer(x, a));
    base.push_back({xi > 0 ? "(e1-f1)^x" : "(e1+f1)^x", W.coords(t)});
  }
  return {G.label, "Omega_7(3) on the exterior square of its natural module", V, G, base};
}

inline ConstructedCase sym_square_quotient_rep() {
  auto N = omega7_natural();
  auto ON = omega_generators(N, "Omega_7(3)");
  SquareModule S(7, false);
  Matrix GS = S.gram(N.gram());
  Vec w = S.coords(invariant_tensor(N.gram()));
  PerpQuotient P(GS, w);
  if (P.singular) throw ConstructionError("invariant vector unexpectedly singular");
  QuadraticSpace V(P.gram(GS));
  std::vector<Matrix> gens;
  for (auto& g : ON.gens) gens.push_back(P.action(S.action(g)));
  MatrixGroup G(gf3(), P.dim, gens, "omega7-sym", V.gram());
  const FiniteField& F = *gf3();
  Vec e1 = unit_vec(7, 0), f1 = unit_vec(7, 4), x = unit_vec(7, 3);
  std::vector<BasePoint> base;
  for (int xi : {1, -1}) {
    Vec a = vec_sub(F, e1, vec_scale(F, f1, F.from_int(xi)));
    Vec t = vec_add(F, outer(a, x), outer(x, a));
    base.push_back({xi > 0 ? "(e1-f1).x" : "(e1+f1).x", P.project(S.coords(t))});
  }
  for (int xi : {1, -1}) {
    Vec t = vec_add(F, outer(e1, e1), vec_scale(F, outer(f1, f1), F.from_int(xi)));
    base.push_back({xi > 0 ? "e1e1+f1f1" : "e1e1-f1f1", P.project(S.coords(t))});
  }
  return {G.label, "Omega_7(3) on the symmetric-square composition factor of dimension 27", V, G, base};
}

/// Sp_6(3) in the basis e1 e2 e3 f1 f2 f3 with B = [[0,I],[-I,0]], generated by
/// transvections x -> x + lambda B(x,v) v.
inline MatrixGroup sp6_transvections(Matrix& form_out) {
  auto F = gf3();
  Matrix B(F, 6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    B(i, 3 + i) = 1;
    B(3 + i, i) = 2;
  }
  form_out = B;
  std::vector<Vec> seeds;
  for (std::size_t i = 0; i < 6; ++i) seeds.push_back(unit_vec(6, i));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) seeds.push_back(vec_add(*F, unit_vec(6, i), unit_vec(6, 3 + j)));
  std::vector<Matrix> gens;
  for (auto& v : seeds)
    for (Elt lam : {Elt{1}, Elt{2}}) {
      Vec bv = vec_mul(v, B.transpose());  // B(x, v) = x . (B v^T)
      Matrix t = Matrix::identity(F, 6);
      for (std::size_t i = 0; i < 6; ++i) {
        Elt c = F->mul(lam, bv[i]);
        if (!c) continue;
        for (std::size_t j = 0; j < 6; ++j) t(i, j) = F->add(t(i, j), F->mul(c, v[j]));
      }
      gens.push_back(t);
    }
  return MatrixGroup(F, 6, gens, "Sp_6(3)", B);
}

inline ConstructedCase symplectic_lambda2_module() {
  Matrix B;
  auto Sp = sp6_transvections(B);
  SquareModule W(6, true);
  Matrix GW = W.gram(B);
  Vec w = W.coords(invariant_tensor(B));
  PerpQuotient P(GW, w);
  if (!P.singular || P.dim != 13) throw ConstructionError("unexpected shape of the exterior-square quotient");
  QuadraticSpace V(P.gram(GW));
  std::vector<Matrix> gens;
  for (auto& g : Sp.gens) gens.push_back(P.action(W.action(g)));
  MatrixGroup G(gf3(), 13, gens, "sp6-lambda2", V.gram());
  std::vector<BasePoint> base;
  for (Sign xi : {Sign::Plus, Sign::Minus})
    for_each_point(V, [&](const Vec& v) {
      if (base.size() < (xi == Sign::Plus ? 1u : 2u) && V.Q(v) != 0 && V.type_of_value(V.Q(v)) == xi)
        base.push_back({xi == Sign::Plus ? "plus" : "minus", v});
    });
  return {G.label, "Sp_6(3) on the 13-dimensional section of the exterior square", V, G, base};
}

inline ConstructedCase sp6_sym_square() {
  Matrix B;
  auto Sp = sp6_transvections(B);
  SquareModule S(6, false);
  QuadraticSpace V(S.gram(B));
  std::vector<Matrix> gens;
  for (auto& g : Sp.gens) gens.push_back(S.action(g));
  MatrixGroup G(gf3(), S.dim(), gens, "sp6-sym", V.gram());
  const FiniteField& F = *gf3();
  Vec e1 = unit_vec(6, 0), f1 = unit_vec(6, 3), e2 = unit_vec(6, 1), e3 = unit_vec(6, 2), f3 = unit_vec(6, 5);
  std::vector<BasePoint> base;
  base.push_back({"e1e1+f1f1", S.coords(vec_add(F, outer(e1, e1), outer(f1, f1)))});
  base.push_back({"e1e1-f1f1", S.coords(vec_sub(F, outer(e1, e1), outer(f1, f1)))});
  // orbit of 10614240 points
  Vec big = vec_sub(F, outer(e1, e1), outer(e2, e2));
  big = vec_add(F, big, vec_add(F, outer(e3, e3), outer(f3, f3)));
  base.push_back({"e1e1-e2e2+e3e3+f3f3", S.coords(big)});
  return {G.label, "Sp_6(3) on the symmetric square of its natural module", V, G, base};
}

// ---------------------------------------------------------------- bound cases

inline ConstructedCase tensor_product_subgroup(std::size_t n1 = 3, std::size_t n2 = 5) {
  if (n1 % 2 == 0 || n2 % 2 == 0 || n1 >= n2) throw DomainError("tensor case needs odd n1 < n2");
  auto F = gf3();
  auto V1 = standard_space(n1, F), V2 = standard_space(n2, F);
  auto O1 = omega_generators(V1), O2 = omega_generators(V2);
  QuadraticSpace V(V1.gram().kron(V2.gram()));
  std::vector<Matrix> gens;
  Matrix I1 = Matrix::identity(F, n1), I2 = Matrix::identity(F, n2);
  for (auto& g : O1.gens) gens.push_back(g.kron(I2));
  for (auto& g : O2.gens) gens.push_back(I1.kron(g));
  MatrixGroup G(F, n1 * n2, gens, "tensor-" + std::to_string(n1) + "x" + std::to_string(n2), V.gram());
  std::vector<BasePoint> base;
  Vec a1 = unit_vec(n1, 0), b1 = vec_add(*F, unit_vec(n1, 0), unit_vec(n1, 1));
  Vec a2 = unit_vec(n2, 0), b2 = vec_add(*F, unit_vec(n2, 0), unit_vec(n2, 1));
  base.push_back({"x1(x)x1", outer(a1, a2)});
  base.push_back({"x1(x)(x1+x2)", outer(a1, b2)});
  base.push_back({"(x1+x2)(x)x1", outer(b1, a2)});
  base.push_back({"(x1+x2)(x)(x1+x2)", outer(b1, b2)});
  return {G.label, "tensor-product subgroup Omega_3(3) x Omega_5(3) in Omega_15(3)", V, G, base};
}

/// Omega_n(3) x Omega_n(3) extended by the swap of tensor factors.
inline ConstructedCase tensor_wreath_subgroup(std::size_t n = 5) {
  auto F = gf3();
  auto N = standard_space(n, F);
  auto O = omega_generators(N);
  QuadraticSpace V(N.gram().kron(N.gram()));
  std::vector<Matrix> gens;
  Matrix I = Matrix::identity(F, n);
  for (auto& g : O.gens) gens.push_back(g.kron(I));
  Matrix swap(F, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) swap(i * n + j, j * n + i) = 1;
  gens.push_back(swap);
  MatrixGroup G(F, n * n, gens, "c7wreath-" + std::to_string(n) + "x" + std::to_string(n), V.gram());
  Vec v = unit_vec(n, 0);
  return {G.label, "tensor-induced subgroup Omega_5(3) wr S_2 in Omega_25(3)", V, G,
          {{"v(x)v", outer(v, v)}}};
}

/// O_a(3) wr S_b on an orthogonal sum of b copies of an a-space.
inline ConstructedCase imprimitive_subgroup(std::size_t a = 3, std::size_t b = 3) {
  auto F = gf3();
  std::size_t n = a * b;
  auto Vi = standard_space(a, F);
  auto V = standard_space(n, F);
  std::vector<Matrix> gens;
  auto Oi = omega_generators(Vi);
  for (std::size_t k = 0; k < b; ++k) {
    for (auto& g : Oi.gens) gens.push_back(embed_block(g, n, k * a));
    gens.push_back(embed_block(reflection(Vi, unit_vec(a, 0)), n, k * a));
  }
  auto block_perm = [&](const Perm& p) {
    Matrix m(F, n, n);
    for (std::size_t k = 0; k < b; ++k)
      for (std::size_t i = 0; i < a; ++i) m(k * a + i, p[k] * a + i) = 1;
    return m;
  };
  gens.push_back(block_perm(perm_from_cycles(b, {{1, 2}})));
  std::vector<int> cyc;
  for (std::size_t k = 1; k <= b; ++k) cyc.push_back(static_cast<int>(k));
  gens.push_back(block_perm(perm_from_cycles(b, {cyc})));
  MatrixGroup G(F, n, gens, "imprimitive-" + std::to_string(a) + "x" + std::to_string(b), V.gram());
  Vec x1 = unit_vec(n, 0), x12 = vec_add(*F, unit_vec(n, 0), unit_vec(n, 1));
  return {G.label, "imprimitive subgroup O_3(3) wr S_3 in Omega_9(3)", V, G, {{"x1", x1}, {"x1+x2", x12}}};
}

/// Omega(W1) x Omega(W2) for V = W1 (dim 3) perp W2 (dim n-3).
inline ConstructedCase subspace_stabilizer(std::size_t n = 7, std::size_t w = 3) {
  auto F = gf3();
  auto W1 = standard_space(w, F), W2 = standard_space(n - w, F);
  QuadraticSpace V(block_diag({W1.gram(), W2.gram()}));
  std::vector<Matrix> gens;
  for (auto& g : omega_generators(W1).gens) gens.push_back(embed_block(g, n, 0));
  for (auto& g : omega_generators(W2).gens) gens.push_back(embed_block(g, n, w));
  MatrixGroup G(F, n, gens, "stabilizer-n" + std::to_string(n) + "-w" + std::to_string(w), V.gram());
  std::vector<BasePoint> base;
  for (std::size_t k = 1; k <= 2; ++k) {
    Vec x(n, 0);
    for (std::size_t j = 0; j < k; ++j) x[j] = 1;
    std::string t = W1.type_of_value(W1.Q(Vec(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(w)))) == Sign::Plus ? "+" : "-";
    base.push_back({"W1" + t, x});
  }
  return {G.label, "stabilizer of a non-degenerate 3-space in Omega_7(3)", V, G, base};
}

// ---------------------------------------------------------------- registry

/// Labels accepted by construct_by_label; N, A stand for integers.
inline std::vector<std::string> construction_labels() {
  return {"wreath-N",     "parabolic-N-A", "field-extension", "deleted-N",   "omega7-wedge", "omega7-sym",
          "sp6-lambda2",  "sp6-sym",       "tensor",          "tensor-wreath", "imprimitive", "stabilizer"};
}

inline ConstructedCase construct_by_label(const std::string& label) {
  auto num = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 4)
      throw DomainError("bad number in label '" + label + "'");
    return std::stoul(s);
  };
  auto starts = [&](const char* p) { return label.rfind(p, 0) == 0; };
  if (starts("wreath-")) return wreath_o1_subgroup(num(label.substr(7)));
  if (starts("parabolic-")) {
    auto rest = label.substr(10);
    auto dash = rest.find('-');
    if (dash == std::string::npos) throw DomainError("expected parabolic-N-A");
    return parabolic_subgroup(num(rest.substr(0, dash)), num(rest.substr(dash + 1)));
  }
  if (label == "field-extension") return field_extension_subgroup(9);
  if (starts("deleted-")) return deleted_permutation_module(num(label.substr(8)));
  if (label == "omega7-wedge") return wedge_square_rep();
  if (label == "omega7-sym") return sym_square_quotient_rep();
  if (label == "sp6-lambda2") return symplectic_lambda2_module();
  if (label == "sp6-sym") return sp6_sym_square();
  if (label == "tensor") return tensor_product_subgroup(3, 5);
  if (label == "tensor-wreath") return tensor_wreath_subgroup(5);
  if (label == "imprimitive") return imprimitive_subgroup(3, 3);
  if (label == "stabilizer") return subspace_stabilizer(7, 3);
  throw DomainError("unknown construction '" + label + "'");
}

}  // namespace rank3
