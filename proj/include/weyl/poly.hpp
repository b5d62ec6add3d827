#pragma once

#include <algorithm>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "weyl/error.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Degree reported for the zero polynomial (and the zero rational function).
/// INT_MIN sits below every real degree, so degree comparisons stay total.
inline constexpr int kZeroDegree = INT_MIN;

/// Dense univariate polynomial over Q in the variable H.
///
/// Coefficients are stored in ascending order of powers. The representation is
/// trimmed: the last stored coefficient is nonzero, and the zero polynomial has
/// no coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
  static Poly monomial(const Rat& v, int power) {
    std::vector<Rat> c(static_cast<std::size_t>(power) + 1);
    c.back() = v;
    return Poly(std::move(c));
  }
  /// The generator H.
  static Poly h() { return monomial(Rat(1), 1); }
  /// H - r.
  static Poly linear_root(const Rat& r) { return Poly(std::vector<Rat>{-r, Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

  const Rat& coeff(int i) const {
    static const Rat zero(0);
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return zero;
    return c_[static_cast<std::size_t>(i)];
  }
  const Rat& leading() const {
    static const Rat zero(0);
    return c_.empty() ? zero : c_.back();
  }
  std::span<const Rat> coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly monic() const {
    if (is_zero()) return {};
    Poly r = *this;
    Rat inv = 1 / c_.back();
    for (auto& v : r.c_) v *= inv;
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
  }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// f(a*H + b).
  Poly compose_linear(const Rat& a, const Rat& b) const {
    Poly lin(std::vector<Rat>{b, a});
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  /// sigma^k(f): substitute H - k for H.
  Poly shift(long k) const {
    if (k == 0 || is_constant()) return *this;
    return compose_linear(Rat(1), Rat(-k));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return {};
    Poly r = p;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Total order: by degree, then by coefficients from the top down.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(Rat(1)), base = *this;
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
};

/// Quotient and remainder over Q.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rat inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rat q = rem[static_cast<std::size_t>(i)] * inv;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

/// Monic gcd; gcd(f, 0) = monic(f). Both zero is a domain error.
inline Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// H (H+1) ... (H+n-1), the rising factorial; 1 for n = 0.
inline Poly rising(int n) {
  Poly r = Poly::constant(Rat(1));
  for (int i = 0; i < n; ++i) r *= Poly::linear_root(Rat(-i));
  return r;
}

/// p * sigma^step(p) * ... * sigma^{(count-1) step}(p).
inline Poly twisted_product(const Poly& p, long step, int count) {
  Poly r = Poly::constant(Rat(1));
  for (int i = 0; i < count; ++i) r *= p.shift(step * i);
  return r;
}

inline std::string to_string(const Poly& p, std::string_view var = "H") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace weyl
