#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rank3 {

enum class SquareClass { Square, Nonsquare };

inline SquareClass operator*(SquareClass a, SquareClass b) {
  return a == b ? SquareClass::Square : SquareClass::Nonsquare;
}

inline const char* to_string(SquareClass c) { return c == SquareClass::Square ? "SQUARE" : "NONSQUARE"; }

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// GF(p^a). Elements are integers in [0, q) holding the base-p digits of a
/// polynomial in x (constant term least significant). Immutable once built.
class FiniteField {
 public:
  using Elt = std::uint32_t;

  FiniteField(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus) : p_(p), a_(a) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime");
    if (a < 1) throw DomainError("degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < a && q <= 19683; ++i) q *= p;
    if (q > 19683) throw DomainError("field too large");
    q_ = static_cast<std::uint32_t>(q);
    if (modulus.empty()) modulus = default_modulus(p, a);
    if (modulus.size() != a + 1) throw ConstructionError("modulus has wrong degree");
    for (auto c : modulus)
      if (c >= p) throw ConstructionError("modulus coefficient out of range");
    if (modulus.back() != 1) throw ConstructionError("modulus is not monic");
    modulus_ = std::move(modulus);
    if (!irreducible(modulus_, p)) throw ConstructionError("modulus is reducible");
    build_tables();
  }

  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t a) {
    if (a == 1) return {0, 1};
    if (p == 3 && a == 2) return {1, 0, 1};     // x^2 + 1
    if (p == 3 && a == 3) return {1, 2, 0, 1};  // x^3 - x + 1
    // first irreducible monic polynomial in enumeration order
    std::vector<std::uint32_t> f(a + 1, 0);
    f[a] = 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < a; ++i) count *= p;
    for (std::uint64_t code = 1; code < count; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < a; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (f[0] != 0 && irreducible(f, p)) return f;
    }
    throw InternalError("no irreducible polynomial found");
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return a_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elt primitive() const { return exp_[1]; }
  bool is_prime_field() const { return a_ == 1; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elt>(r);
  }

  Elt add(Elt x, Elt y) const {
    if (a_ == 1) {
      Elt s = x + y;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_.empty()) return add_[x * q_ + y];
    return add_digits(x, y);
  }
  Elt neg(Elt x) const {
    if (a_ == 1) return x == 0 ? 0 : p_ - x;
    return neg_[x];
  }
  Elt sub(Elt x, Elt y) const { return add(x, neg(y)); }
  Elt mul(Elt x, Elt y) const {
    if (x == 0 || y == 0) return 0;
    if (a_ == 1) return static_cast<Elt>((static_cast<std::uint64_t>(x) * y) % p_);
    std::uint32_t e = log_[x] + log_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Elt inv(Elt x) const {
    if (x == 0) throw DomainError("inverse of zero");
    std::uint32_t l = log_[x];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  Elt div(Elt x, Elt y) const { return mul(x, inv(y)); }
  Elt pow(Elt x, std::uint64_t e) const {
    if (e == 0) return 1;
    if (x == 0) return 0;
    std::uint64_t l = (static_cast<std::uint64_t>(log_[x]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
  }
  std::uint32_t log(Elt x) const {
    if (x == 0) throw DomainError("log of zero");
    return log_[x];
  }
  Elt exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  Elt frobenius(Elt x) const { return pow(x, p_); }

  /// T(x) = sum of x^(p^i), i < a. Lands in the prime subfield.
  Elt trace(Elt x) const {
    Elt s = 0, y = x;
    for (std::uint32_t i = 0; i < a_; ++i) {
      s = add(s, y);
      y = frobenius(y);
    }
    return s;
  }
  /// N(x) = x^((q-1)/(p-1)).
  Elt norm(Elt x) const { return pow(x, (q_ - 1) / (p_ - 1)); }

  SquareClass square_class(Elt x) const {
    if (x == 0) throw DomainError("square class of zero");
    if (p_ == 2) return SquareClass::Square;
    return log_[x] % 2 == 0 ? SquareClass::Square : SquareClass::Nonsquare;
  }
  bool is_square(Elt x) const { return x == 0 || square_class(x) == SquareClass::Square; }

  /// Some fixed nonsquare (the primitive element).
  Elt nonsquare() const { return exp_[1]; }

  /// Element for a given square class: 1 or the primitive element.
  Elt class_rep(SquareClass c) const { return c == SquareClass::Square ? 1 : nonsquare(); }

  std::uint32_t digit(Elt x, std::uint32_t i) const {
    for (std::uint32_t k = 0; k < i; ++k) x /= p_;
    return x % p_;
  }

  bool same_as(const FiniteField& o) const { return p_ == o.p_ && a_ == o.a_ && modulus_ == o.modulus_; }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  /// Irreducibility over GF(p) by trial division with monic polynomials of degree <= deg/2.
  static bool irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    for (std::size_t d = 1; d <= n / 2; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      std::vector<std::uint32_t> g(d + 1, 0);
      g[d] = 1;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < d; ++i) {
          g[i] = static_cast<std::uint32_t>(c % p);
          c /= p;
        }
        if (poly_rem_is_zero(f, g, p)) return false;
      }
    }
    return true;
  }

 private:
  static bool poly_rem_is_zero(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g, std::uint32_t p) {
    std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size(); i-- > dg;) {
      std::uint32_t c = f[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dg; ++j)
        f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + (p - c) * g[j]) % p);
    }
    for (std::size_t i = 0; i < dg; ++i)
      if (f[i] != 0) return false;
    return true;
  }

  Elt add_digits(Elt x, Elt y) const {
    Elt r = 0, base = 1;
    for (std::uint32_t i = 0; i < a_; ++i) {
      r += ((x % p_ + y % p_) % p_) * base;
      x /= p_;
      y /= p_;
      base *= p_;
    }
    return r;
  }

  // multiply by x modulo the modulus, in digit form
  Elt times_x(Elt v) const {
    std::vector<std::uint32_t> d(a_ + 1, 0);
    for (std::uint32_t i = 0; i < a_; ++i) {
      d[i + 1] = v % p_;
      v /= p_;
    }
    std::uint32_t top = d[a_];
    for (std::uint32_t i = 0; i < a_; ++i) d[i] = (d[i] + (p_ - top) * modulus_[i]) % p_;
    Elt r = 0;
    for (std::uint32_t i = a_; i-- > 0;) r = r * p_ + d[i];
    return r;
  }

  Elt slow_mul(Elt x, Elt y) const {
    Elt r = 0, cur = x;
    for (std::uint32_t i = 0; i < a_; ++i) {
      std::uint32_t c = y % p_;
      y /= p_;
      for (std::uint32_t k = 0; k < c; ++k) r = add_digits(r, cur);
      cur = times_x(cur);
    }
    return r;
  }

  void build_tables() {
    neg_.resize(q_);
    for (Elt x = 0; x < q_; ++x) {
      Elt r = 0, base = 1, v = x;
      for (std::uint32_t i = 0; i < a_; ++i) {
        r += ((p_ - v % p_) % p_) * base;
        v /= p_;
        base *= p_;
      }
      neg_[x] = r;
    }
    if (a_ > 1 && q_ <= 729) {
      add_.resize(static_cast<std::size_t>(q_) * q_);
      for (Elt x = 0; x < q_; ++x)
        for (Elt y = 0; y < q_; ++y) add_[x * q_ + y] = add_digits(x, y);
    }
    // primitive element: smallest g of order q-1
    std::vector<std::uint32_t> prime_divs;
    std::uint32_t n = q_ - 1;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime_divs.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) prime_divs.push_back(n);
    auto slow_pow = [&](Elt g, std::uint64_t e) {
      Elt r = 1, b = g;
      while (e) {
        if (e & 1) r = slow_mul(r, b);
        b = slow_mul(b, b);
        e >>= 1;
      }
      return r;
    };
    Elt g = 0;
    for (Elt c = (q_ == 2 ? 1 : 2); c < q_; ++c) {
      if (slow_pow(c, q_ - 1) != 1) continue;
      bool ok = true;
      for (auto d : prime_divs)
        if (slow_pow(c, (q_ - 1) / d) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        g = c;
        break;
      }
    }
    if (q_ == 2) g = 1;
    if (g == 0) throw InternalError("no primitive element");
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Elt cur = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
      exp_[e] = cur;
      log_[cur] = e;
      cur = slow_mul(cur, g);
    }
    if (cur != 1) throw InternalError("primitive element order mismatch");
  }

  std::uint32_t p_, a_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elt> exp_, log_, neg_, add_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

inline FieldPtr field_create(std::uint32_t p, std::uint32_t a, std::optional<std::vector<std::uint32_t>> modulus = {}) {
  return std::make_shared<const FiniteField>(p, a, modulus ? *modulus : std::vector<std::uint32_t>{});
}

/// Shared GF(3) instance.
inline const FieldPtr& gf3() {
  static const FieldPtr f = field_create(3, 1);
  return f;
}

/// Value-type element carrying its field; convenient for tests and light code.
class FieldElement {
 public:
  FieldElement(FieldPtr f, FiniteField::Elt v) : f_(std::move(f)), v_(v) {
    if (v_ >= f_->q()) throw DomainError("element encoding out of range");
  }
  const FieldPtr& field() const { return f_; }
  FiniteField::Elt value() const { return v_; }

  FieldElement operator+(const FieldElement& o) const { return {f_, f_->add(v_, o.v_)}; }
  FieldElement operator-(const FieldElement& o) const { return {f_, f_->sub(v_, o.v_)}; }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  FieldElement operator*(const FieldElement& o) const { return {f_, f_->mul(v_, o.v_)}; }
  FieldElement operator/(const FieldElement& o) const { return {f_, f_->div(v_, o.v_)}; }
  FieldElement inverse() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }
  bool operator==(const FieldElement& o) const { return v_ == o.v_ && f_->same_as(*o.f_); }
  bool is_zero() const { return v_ == 0; }

 private:
  FieldPtr f_;
  FiniteField::Elt v_;
};

inline FieldElement trace(const FieldElement& x) { return {x.field(), x.field()->trace(x.value())}; }
inline FieldElement norm(const FieldElement& x) { return {x.field(), x.field()->norm(x.value())}; }
inline SquareClass square_class(const FieldElement& x) { return x.field()->square_class(x.value()); }

}  // namespace rank3
