#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finite_field.hpp"

namespace rank3 {

using Elt = FiniteField::Elt;
using Vec = std::vector<Elt>;

/// Dense row-major matrix over a finite field. Vectors are rows; a group
/// element g acts by v -> v * g.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols), d_(rows * cols, 0) {}
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols, std::vector<Elt> data)
      : f_(std::move(f)), r_(rows), c_(cols), d_(std::move(data)) {
    if (d_.size() != r_ * c_) throw DomainError("matrix data size mismatch");
  }

  static Matrix identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(FieldPtr f, const std::vector<Vec>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(std::move(f), rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DomainError("ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  /// Integer entries reduced into the prime field.
  static Matrix from_ints(FieldPtr f, const std::vector<std::vector<long long>>& rows) {
    std::vector<Vec> r;
    for (auto& row : rows) {
      Vec v;
      for (auto x : row) v.push_back(f->from_int(x));
      r.push_back(v);
    }
    return from_rows(std::move(f), r);
  }

  const FieldPtr& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  Elt& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  Elt operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  const std::vector<Elt>& data() const { return d_; }
  Vec row(std::size_t i) const { return Vec(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }
  void set_row(std::size_t i, const Vec& v) {
    for (std::size_t j = 0; j < c_; ++j) d_[i * c_ + j] = v[j];
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (c_ != o.r_) throw DomainError("matrix shape mismatch in product");
    const FiniteField& F = *f_;
    Matrix m(f_, r_, o.c_);
    if (F.is_prime_field()) {
      const std::uint64_t p = F.p();
      std::vector<std::uint64_t> acc(o.c_);
      for (std::size_t i = 0; i < r_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < c_; ++k) {
          std::uint64_t a = d_[i * c_ + k];
          if (!a) continue;
          const Elt* orow = &o.d_[k * o.c_];
          for (std::size_t j = 0; j < o.c_; ++j) acc[j] += a * orow[j];
        }
        for (std::size_t j = 0; j < o.c_; ++j) m(i, j) = static_cast<Elt>(acc[j] % p);
      }
      return m;
    }
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        Elt a = d_[i * c_ + k];
        if (!a) continue;
        for (std::size_t j = 0; j < o.c_; ++j) m(i, j) = F.add(m(i, j), F.mul(a, o(k, j)));
      }
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix m(*this);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->add(d_[i], o.d_[i]);
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix m(*this);
    for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->sub(d_[i], o.d_[i]);
    return m;
  }
  Matrix scaled(Elt s) const {
    Matrix m(*this);
    for (auto& x : m.d_) x = f_->mul(x, s);
    return m;
  }
  Matrix transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  bool is_zero() const {
    for (auto x : d_)
      if (x) return false;
    return true;
  }
  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }
  bool is_symmetric() const { return square() && *this == transpose(); }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (i != j && (*this)(i, j)) return false;
    return true;
  }

  /// Kronecker product: (a (x) b)((i,k),(j,l)) = a(i,j) b(k,l).
  Matrix kron(const Matrix& b) const {
    Matrix m(f_, r_ * b.r_, c_ * b.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) {
        Elt a = (*this)(i, j);
        if (!a) continue;
        for (std::size_t k = 0; k < b.r_; ++k)
          for (std::size_t l = 0; l < b.c_; ++l) m(i * b.r_ + k, j * b.c_ + l) = f_->mul(a, b(k, l));
      }
    return m;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    const FiniteField& F = *f_;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t sel = r_;
      for (std::size_t i = row; i < r_; ++i)
        if ((*this)(i, col)) {
          sel = i;
          break;
        }
      if (sel == r_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
      Elt inv = F.inv((*this)(row, col));
      for (std::size_t j = col; j < c_; ++j) (*this)(row, j) = F.mul((*this)(row, j), inv);
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row) continue;
        Elt x = (*this)(i, col);
        if (!x) continue;
        Elt nx = F.neg(x);
        for (std::size_t j = col; j < c_; ++j)
          if ((*this)(row, j)) (*this)(i, j) = F.add((*this)(i, j), F.mul(nx, (*this)(row, j)));
      }
      piv.push_back(col);
      ++row;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix m(*this);
    return m.rref().size();
  }

  Elt det() const {
    if (!square()) throw DomainError("determinant of non-square matrix");
    const FiniteField& F = *f_;
    Matrix m(*this);
    Elt d = 1;
    for (std::size_t col = 0; col < c_; ++col) {
      std::size_t sel = r_;
      for (std::size_t i = col; i < r_; ++i)
        if (m(i, col)) {
          sel = i;
          break;
        }
      if (sel == r_) return 0;
      if (sel != col) {
        for (std::size_t j = 0; j < c_; ++j) std::swap(m(sel, j), m(col, j));
        d = F.neg(d);
      }
      Elt piv = m(col, col);
      d = F.mul(d, piv);
      Elt inv = F.inv(piv);
      for (std::size_t i = col + 1; i < r_; ++i) {
        Elt x = m(i, col);
        if (!x) continue;
        Elt fct = F.neg(F.mul(x, inv));
        for (std::size_t j = col; j < c_; ++j) m(i, j) = F.add(m(i, j), F.mul(fct, m(col, j)));
      }
    }
    return d;
  }

  bool invertible() const { return square() && rank() == r_; }

  Matrix inverse() const {
    if (!square()) throw DomainError("inverse of non-square matrix");
    std::size_t n = r_;
    Matrix aug(f_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = 1;
    }
    auto piv = aug.rref();
    if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("matrix is singular");
    Matrix inv(f_, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  /// Basis of the left null space {v : v * M = 0}.
  std::vector<Vec> left_nullspace() const { return transpose().nullspace(); }

  /// Basis of {x : M * x^T = 0}.
  std::vector<Vec> nullspace() const {
    const FiniteField& F = *f_;
    Matrix m(*this);
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < c_; ++free) {
      if (is_piv[free]) continue;
      Vec v(c_, 0);
      v[free] = 1;
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m(i, free));
      basis.push_back(v);
    }
    return basis;
  }

  Matrix power(std::uint64_t e) const {
    Matrix r = identity(f_, r_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "\n";
    }
    return os.str();
  }

 private:
  FieldPtr f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Elt> d_;
};

inline Vec vec_mul(const FiniteField& F, const Vec& v, const Matrix& m) {
  Vec r(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Elt a = v[i];
    if (!a) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) r[j] = F.add(r[j], F.mul(a, m(i, j)));
  }
  return r;
}
inline Vec vec_mul(const Vec& v, const Matrix& m) { return vec_mul(*m.field(), v, m); }

inline Vec vec_add(const FiniteField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}
inline Vec vec_sub(const FiniteField& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}
inline Vec vec_scale(const FiniteField& F, const Vec& a, Elt s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
  return r;
}
inline bool vec_is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}
inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

/// Scale so the first nonzero coordinate is 1.
inline Vec canonical_point(const FiniteField& F, Vec v) {
  for (auto x : v)
    if (x) {
      if (x != 1) v = vec_scale(F, v, F.inv(x));
      return v;
    }
  throw DomainError("zero vector has no projective point");
}

inline std::string vec_to_string(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

/// Echelonized basis of a subspace with incremental membership and
/// reduction; used for spinning and quotients.
class Subspace {
 public:
  Subspace(FieldPtr f, std::size_t n) : f_(std::move(f)), n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const FieldPtr& field() const { return f_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  /// Reduce v against the basis (clears all pivot coordinates).
  Vec reduce(Vec v) const {
    const FiniteField& F = *f_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Elt x = v[piv_[i]];
      if (!x) continue;
      Elt nx = F.neg(x);
      const Vec& r = rows_[i];
      for (std::size_t j = 0; j < n_; ++j)
        if (r[j]) v[j] = F.add(v[j], F.mul(nx, r[j]));
    }
    return v;
  }
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  /// Adds v if independent; returns true when the dimension grew.
  bool add(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j]) {
        p = j;
        break;
      }
    if (p == n_) return false;
    const FiniteField& F = *f_;
    r = vec_scale(F, r, F.inv(r[p]));
    for (auto& row : rows_) {
      Elt x = row[p];
      if (!x) continue;
      Elt nx = F.neg(x);
      for (std::size_t j = 0; j < n_; ++j)
        if (r[j]) row[j] = F.add(row[j], F.mul(nx, r[j]));
    }
    rows_.push_back(r);
    piv_.push_back(p);
    return true;
  }

  /// Coordinates of v (assumed inside) relative to the stored basis.
  Vec coords(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
    return c;
  }

 private:
  FieldPtr f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace rank3
