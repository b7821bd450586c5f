#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "perm_group.hpp"

namespace rank3 {

/// Matrix representation on row vectors, one matrix per abstract generator.
struct GModule {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;

  GModule() = default;
  GModule(FieldPtr f, std::size_t n, std::vector<Matrix> g) : field(std::move(f)), dim(n), gens(std::move(g)) {
    for (auto& m : gens)
      if (m.rows() != dim || m.cols() != dim || !m.invertible()) throw DomainError("module generator has wrong shape");
  }
};

inline GModule permutation_module(std::size_t n, const std::vector<Perm>& perms, FieldPtr f) {
  std::vector<Matrix> gens;
  for (auto& p : perms) {
    if (p.size() != n) throw DomainError("permutation of wrong degree");
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(p[i])) = 1;
    gens.push_back(m);
  }
  return GModule(f, n, gens);
}

inline GModule tensor_module(const GModule& a, const GModule& b) {
  if (a.gens.size() != b.gens.size()) throw DomainError("tensor of modules with different generator counts");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < a.gens.size(); ++i) gens.push_back(a.gens[i].kron(b.gens[i]));
  return GModule(a.field, a.dim * b.dim, gens);
}

/// Smallest submodule containing the given vectors.
inline Subspace spin(const GModule& M, const std::vector<Vec>& seeds) {
  Subspace S(M.field, M.dim);
  std::vector<Vec> queue;
  for (auto& v : seeds)
    if (S.add(v)) queue.push_back(v);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto& g : M.gens) {
      Vec w = vec_mul(queue[i], g);
      if (S.add(w)) queue.push_back(w);
    }
  return S;
}

inline bool is_submodule(const GModule& M, const Subspace& S) {
  for (auto& b : S.basis())
    for (auto& g : M.gens)
      if (!S.contains(vec_mul(b, g))) return false;
  return true;
}

inline GModule dual_module(const GModule& M) {
  std::vector<Matrix> gens;
  for (auto& g : M.gens) gens.push_back(g.transpose());
  return GModule(M.field, M.dim, gens);
}

/// Recipe for a random algebra element: products of earlier elements appended
/// to the generator list, then a linear combination.
struct AlgebraRecipe {
  std::vector<std::pair<std::size_t, std::size_t>> products;
  std::vector<std::pair<std::size_t, Elt>> terms;
  Elt shift = 0;  // theta - shift * I
};

inline Matrix evaluate(const GModule& M, const AlgebraRecipe& r) {
  std::vector<Matrix> pool = M.gens;
  for (auto [i, j] : r.products) pool.push_back(pool[i] * pool[j]);
  Matrix t(M.field, M.dim, M.dim);
  const FiniteField& F = *M.field;
  for (auto [i, c] : r.terms) t = t + pool[i].scaled(c);
  for (std::size_t i = 0; i < M.dim; ++i) t(i, i) = F.sub(t(i, i), r.shift);
  return t;
}

inline AlgebraRecipe random_recipe(std::size_t ngens, std::mt19937_64& rng, const FiniteField& F) {
  AlgebraRecipe r;
  std::size_t pool = ngens;
  std::size_t nprod = 1 + rng() % 4;
  for (std::size_t k = 0; k < nprod; ++k) {
    r.products.push_back({rng() % pool, rng() % pool});
    ++pool;
  }
  std::size_t nterms = 1 + rng() % 3;
  for (std::size_t k = 0; k < nterms; ++k) {
    Elt c = static_cast<Elt>(1 + rng() % (F.q() - 1));
    r.terms.push_back({rng() % pool, c});
  }
  return r;
}

/// Subquotient upper/lower of a module, both given as submodules in the
/// coordinates of M. The quotient basis is the RREF of upper reduced by lower.
struct Section {
  Subspace lower, upper, comp;
  std::vector<Vec> comp_rows;

  Section(const Subspace& lo, const Subspace& up) : lower(lo), upper(up), comp(up.field(), up.ambient()) {
    for (auto& u : up.basis()) comp.add(lower.reduce(u));
    comp_rows = comp.basis();
  }

  std::size_t dim() const { return comp.dim(); }
  Vec coords(const Vec& x) const { return comp.coords(lower.reduce(x)); }
  Vec lift(const Vec& c) const {
    const FiniteField& F = *comp.field();
    Vec v(upper.ambient(), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k]) v = vec_add(F, v, vec_scale(F, comp_rows[k], c[k]));
    return v;
  }
  GModule module(const GModule& M) const {
    std::vector<Matrix> gens;
    for (auto& g : M.gens) {
      std::vector<Vec> rows;
      for (auto& c : comp_rows) rows.push_back(coords(vec_mul(c, g)));
      gens.push_back(Matrix::from_rows(M.field, rows));
    }
    return GModule(M.field, dim(), gens);
  }
};

struct SplitResult {
  std::optional<Subspace> submodule;  // proper non-zero submodule when reducible
  std::optional<AlgebraRecipe> certificate;  // Norton witness when irreducible
};

/// One MeatAxe step: either a proper submodule or a Norton certificate of irreducibility.
inline SplitResult meataxe_split(const GModule& M, std::mt19937_64& rng, std::size_t cap = 200) {
  const FiniteField& F = *M.field;
  if (M.dim == 1) return {std::nullopt, AlgebraRecipe{}};
  GModule D = dual_module(M);
  for (std::size_t attempt = 0; attempt < cap; ++attempt) {
    AlgebraRecipe r = random_recipe(M.gens.size(), rng, F);
    Matrix t0 = evaluate(M, r);
    for (Elt lam = 0; lam < F.q(); ++lam) {
      AlgebraRecipe rl = r;
      rl.shift = lam;
      Matrix t = t0;
      for (std::size_t i = 0; i < M.dim; ++i) t(i, i) = F.sub(t(i, i), lam);
      auto ker = t.transpose().nullspace();  // v with v t = 0
      if (ker.empty()) continue;
      Subspace S = spin(M, {ker[0]});
      if (S.dim() < M.dim) return {S, std::nullopt};
      if (ker.size() != 1) continue;
      auto dker = t.nullspace();  // w with w t^T = 0
      Subspace W = spin(D, {dker.at(0)});
      if (W.dim() < M.dim) {
        Matrix Wm = Matrix::from_rows(M.field, W.basis());
        Subspace A(M.field, M.dim);
        for (auto& v : Wm.nullspace()) A.add(v);
        return {A, std::nullopt};
      }
      return {std::nullopt, rl};
    }
  }
  throw UndecidedError("MeatAxe found no splitting element within the cap");
}

/// Standard basis obtained by spinning v, recorded as (parent, generator) steps.
struct SpinWord {
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

inline std::pair<Matrix, SpinWord> spin_basis(const GModule& M, const Vec& v) {
  Subspace S(M.field, M.dim);
  std::vector<Vec> basis;
  SpinWord w;
  S.add(v);
  basis.push_back(v);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t g = 0; g < M.gens.size(); ++g) {
      Vec u = vec_mul(basis[i], M.gens[g]);
      if (S.add(u)) {
        basis.push_back(u);
        w.steps.push_back({i, g});
      }
    }
  return {Matrix::from_rows(M.field, basis), w};
}

inline std::optional<Matrix> replay_spin(const GModule& M, const Vec& v, const SpinWord& w) {
  std::vector<Vec> basis{v};
  for (auto [i, g] : w.steps) basis.push_back(vec_mul(basis[i], M.gens[g]));
  Matrix B = Matrix::from_rows(M.field, basis);
  if (B.rows() != M.dim || !B.invertible()) return std::nullopt;
  return B;
}

/// Isomorphism test for M1 irreducible with Norton certificate `cert`.
inline bool modules_isomorphic(const GModule& M1, const GModule& M2, const AlgebraRecipe& cert) {
  if (M1.dim != M2.dim || M1.gens.size() != M2.gens.size()) return false;
  if (M1.dim == 1) {
    for (std::size_t i = 0; i < M1.gens.size(); ++i)
      if (M1.gens[i](0, 0) != M2.gens[i](0, 0)) return false;
    return true;
  }
  auto k1 = evaluate(M1, cert).transpose().nullspace();
  auto k2 = evaluate(M2, cert).transpose().nullspace();
  if (k1.size() != 1 || k2.size() != 1) return false;
  auto [B1, word] = spin_basis(M1, k1[0]);
  auto B2 = replay_spin(M2, k2[0], word);
  if (!B2 || B1.rows() != M1.dim) return false;
  Matrix B1i = B1.inverse(), B2i = B2->inverse();
  for (std::size_t i = 0; i < M1.gens.size(); ++i)
    if (!((B1 * M1.gens[i] * B1i) == (*B2 * M2.gens[i] * B2i))) return false;
  return true;
}

/// One step of a composition series: upper/lower in the coordinates of the input.
struct SeriesPiece {
  Subspace lower, upper;
  GModule module;
  AlgebraRecipe certificate;
};

inline std::vector<SeriesPiece> composition_series(const GModule& M, std::uint64_t seed = 1, std::size_t cap = 200) {
  if (M.dim > 128) throw DomainError("composition series limited to dimension 128");
  std::mt19937_64 rng(seed);
  std::vector<SeriesPiece> out;
  std::vector<std::pair<Subspace, Subspace>> stack;
  Subspace zero(M.field, M.dim), full(M.field, M.dim);
  for (std::size_t i = 0; i < M.dim; ++i) full.add(unit_vec(M.dim, i));
  stack.push_back({zero, full});
  while (!stack.empty()) {
    auto [lo, up] = stack.back();
    stack.pop_back();
    Section sec(lo, up);
    GModule Q = sec.module(M);
    auto r = meataxe_split(Q, rng, cap);
    if (!r.submodule) {
      out.push_back({lo, up, Q, *r.certificate});
      continue;
    }
    Subspace mid = lo;
    for (auto& b : r.submodule->basis()) mid.add(sec.lift(b));
    // lower piece first in the output
    stack.push_back({mid, up});
    stack.push_back({lo, mid});
  }
  return out;
}

struct CompositionFactor {
  GModule module;
  std::size_t multiplicity;
  AlgebraRecipe certificate;
};

inline std::vector<CompositionFactor> composition_factors(const GModule& M, std::uint64_t seed = 1,
                                                          std::size_t cap = 200) {
  std::vector<CompositionFactor> out;
  for (auto& piece : composition_series(M, seed, cap)) {
    bool merged = false;
    for (auto& f : out)
      if (modules_isomorphic(f.module, piece.module, f.certificate)) {
        ++f.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({piece.module, 1, piece.certificate});
  }
  return out;
}

enum class FormKind { Symmetric, Alternating, None };

struct InvariantForm {
  FormKind kind = FormKind::None;
  std::optional<Matrix> gram;
};

/// Solves g B g^T = B over all generators, first for symmetric then for alternating B.
inline InvariantForm invariant_bilinear_form(const GModule& M) {
  const FiniteField& F = *M.field;
  std::size_t d = M.dim;
  for (FormKind kind : {FormKind::Symmetric, FormKind::Alternating}) {
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = kind == FormKind::Symmetric ? k : k + 1; l < d; ++l) vars.push_back({k, l});
    if (vars.empty()) continue;
    std::vector<Vec> eqs;
    for (auto& g : M.gens)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
          Vec row(vars.size(), 0);
          for (std::size_t v = 0; v < vars.size(); ++v) {
            auto [k, l] = vars[v];
            Elt c = F.mul(g(i, k), g(j, l));
            if (k != l) {
              Elt other = F.mul(g(i, l), g(j, k));
              c = kind == FormKind::Symmetric ? F.add(c, other) : F.sub(c, other);
            }
            if (i == k && j == l) c = F.sub(c, 1);
            row[v] = c;
          }
          eqs.push_back(row);
        }
    auto sol = Matrix::from_rows(M.field, eqs).nullspace();
    if (sol.empty()) continue;
    Matrix B(M.field, d, d);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      auto [k, l] = vars[v];
      B(k, l) = sol[0][v];
      B(l, k) = kind == FormKind::Symmetric ? sol[0][v] : F.neg(sol[0][v]);
    }
    if (sol.size() == 1) return {kind, B};
    throw UndecidedError("invariant form not unique; module is not absolutely irreducible");
  }
  return {};
}

}  // namespace rank3
