#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyl/ratfunc.hpp"

namespace weyl {

/// A1 (the Weyl algebra) is contained in LaurentA = Q[H][X, X^-1; sigma],
/// which is contained in B = Q(H)[X, X^-1; sigma].
enum class Ring { A1, LaurentA, B };

inline std::string_view ring_name(Ring r) {
  switch (r) {
    case Ring::A1: return "A1";
    case Ring::LaurentA: return "LaurentA";
    case Ring::B: return "B";
  }
  return "B";
}

inline std::optional<Ring> parse_ring(std::string_view s) {
  if (s == "A1") return Ring::A1;
  if (s == "LaurentA") return Ring::LaurentA;
  if (s == "B") return Ring::B;
  return std::nullopt;
}

/// True if `inner` is a subring of `outer`.
inline bool contained_in(Ring inner, Ring outer) { return static_cast<int>(inner) <= static_cast<int>(outer); }

/// The X-basis coefficient of v_j: v_j = X^j for j >= 0 and v_{-n} = Y^n = H(H+1)...(H+n-1) X^{-n}.
inline Poly v_coefficient(int j) { return j >= 0 ? Poly::constant(Rat(1)) : rising(-j); }

/// Structure constant (n, m) of v_n v_m = (n, m) v_{n+m} for the defining element a = H.
inline Poly structure_constant(int n, int m) {
  Poly r = Poly::constant(Rat(1));
  if (n > 0 && m < 0) {
    // (n, -k) = (H - n)(H - n + 1) ... , min(n, k) factors
    const int k = -m, len = std::min(n, k);
    for (int i = 0; i < len; ++i) r *= Poly::linear_root(Rat(n - i));
  } else if (n < 0 && m > 0) {
    // (-k, m) = (H + k - 1)(H + k - 2) ... , min(k, m) factors
    const int k = -n, len = std::min(k, m);
    for (int i = 0; i < len; ++i) r *= Poly::linear_root(Rat(-(k - 1 - i)));
  }
  return r;
}

/// phi_n = (-1)^n H(H+1)...(H+n-1) / n!.
inline Poly phi(int n) {
  if (n < 0) throw DomainError("phi index must be nonnegative");
  Rat scale(factorial(static_cast<unsigned>(n)));
  scale = (n % 2 == 0 ? Rat(1) : Rat(-1)) / scale;
  return scale * rising(n);
}

/// Finitely supported sum of c_j X^j, c_j in Q(H), with multiplication
/// (f X^i)(g X^j) = f sigma^i(g) X^{i+j}. The ring tag is always the smallest of
/// A1, LaurentA, B containing the element.
class GradedElement {
 public:
  using Terms = std::map<int, RatFunc>;

  GradedElement() = default;
  explicit GradedElement(Terms terms) : terms_(std::move(terms)) { normalize(); }

  static GradedElement scalar(const Rat& c) { return term(RatFunc::constant(c), 0); }
  static GradedElement term(const RatFunc& c, int grading) { return GradedElement(Terms{{grading, c}}); }
  static GradedElement x_power(int j) { return term(RatFunc::constant(Rat(1)), j); }
  static GradedElement x() { return x_power(1); }
  /// Y = H X^{-1}.
  static GradedElement y() { return term(RatFunc(Poly::h()), -1); }
  static GradedElement h() { return term(RatFunc(Poly::h()), 0); }
  static GradedElement v(int j) { return term(RatFunc(v_coefficient(j)), j); }

  const Terms& terms() const { return terms_; }
  Ring ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const { return terms_.size() <= 1; }
  std::optional<int> grading() const {
    if (terms_.size() != 1) return std::nullopt;
    return terms_.begin()->first;
  }
  bool is_scalar() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_constant()); }

  RatFunc coeff(int j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? RatFunc() : it->second;
  }

  /// Homogeneous components, ascending by grading.
  std::vector<GradedElement> components() const {
    std::vector<GradedElement> out;
    for (const auto& [j, c] : terms_) out.push_back(term(c, j));
    return out;
  }

  GradedElement operator-() const {
    GradedElement r = *this;
    for (auto& [j, c] : r.terms_) c = -c;
    return r;
  }
  friend GradedElement operator+(const GradedElement& a, const GradedElement& b) {
    Terms t = a.terms_;
    for (const auto& [j, c] : b.terms_) t[j] += c;
    return GradedElement(std::move(t));
  }
  friend GradedElement operator-(const GradedElement& a, const GradedElement& b) { return a + (-b); }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    Terms t;
    for (const auto& [i, f] : a.terms_)
      for (const auto& [j, g] : b.terms_) t[i + j] += f * g.shift(i);
    return GradedElement(std::move(t));
  }
  friend GradedElement operator*(const Rat& s, const GradedElement& a) { return scalar(s) * a; }
  GradedElement& operator+=(const GradedElement& o) { return *this = *this + o; }
  GradedElement& operator-=(const GradedElement& o) { return *this = *this - o; }
  GradedElement& operator*=(const GradedElement& o) { return *this = *this * o; }
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.terms_ == b.terms_; }

  GradedElement pow(unsigned e) const {
    GradedElement r = scalar(Rat(1)), base = *this;
    while (e) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  /// Inverse in B of a nonzero homogeneous element: (f X^i)^{-1} = sigma^{-i}(1/f) X^{-i}.
  GradedElement inverse() const {
    if (terms_.size() != 1) throw DomainError("only nonzero homogeneous elements are invertible in B");
    const auto& [i, f] = *terms_.begin();
    return term(f.inverse().shift(-i), -i);
  }

  /// Coefficients p_j with this = sum p_j v_j; requires membership in A1.
  std::map<int, Poly> v_coefficients() const {
    if (ring_ != Ring::A1) throw PreconditionError("element is not in A1");
    std::map<int, Poly> out;
    for (const auto& [j, c] : terms_) out[j] = divmod(c.num(), v_coefficient(j)).first;
    return out;
  }
  static GradedElement from_v_coefficients(const std::map<int, Poly>& coeffs) {
    Terms t;
    for (const auto& [j, p] : coeffs) t[j] = RatFunc(p * v_coefficient(j));
    return GradedElement(std::move(t));
  }

 private:
  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero())
        it = terms_.erase(it);
      else
        ++it;
    }
    ring_ = Ring::A1;
    for (const auto& [j, c] : terms_) {
      if (!c.is_polynomial()) {
        ring_ = Ring::B;
        return;
      }
      if (j < 0 && !divides(v_coefficient(j), c.num())) ring_ = Ring::LaurentA;
    }
  }

  Terms terms_;
  Ring ring_ = Ring::A1;
};

inline GradedElement mul(const GradedElement& a, const GradedElement& b) { return a * b; }

/// ad u (w) = uw - wu.
inline GradedElement ad(const GradedElement& u, const GradedElement& w) { return u * w - w * u; }

inline GradedElement ad_power(const GradedElement& u, GradedElement w, int k) {
  for (int i = 0; i < k && !w.is_zero(); ++i) w = ad(u, w);
  return w;
}

inline bool membership(const GradedElement& e, Ring r) { return contained_in(e.ring(), r); }

/// Y^n = (-1)^n n! phi_n X^{-n}.
inline GradedElement y_power_in_x_basis(int n) {
  if (n < 1) throw DomainError("Y power must be positive");
  Rat scale(factorial(static_cast<unsigned>(n)));
  if (n % 2) scale = -scale;
  return GradedElement::term(RatFunc(scale * phi(n)), -n);
}

/// Substitute polynomial p(H) as an element of B.
inline GradedElement poly_element(const Poly& p) { return GradedElement::term(RatFunc(p), 0); }

}  // namespace weyl
