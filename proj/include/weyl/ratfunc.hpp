#pragma once

#include <string>
#include <utility>

#include "weyl/poly.hpp"

namespace weyl {

/// Element of Q(H) kept as num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(Rat(1))) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(Poly::constant(Rat(1))) {}  // NOLINT: implicit on purpose
  RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
      den_ = Poly::constant(Rat(1));
      return;
    }
    Poly g = gcd(num, den);
    num_ = divmod(num, g).first;
    den_ = divmod(den, g).first;
    Rat lc = den_.leading();
    if (lc != 1) {
      num_ = (1 / lc) * num_;
      den_ = den_.monic();
    }
  }
  static RatFunc constant(const Rat& v) { return RatFunc(Poly::constant(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  /// Quotient of monic polynomials (den is monic by construction).
  bool is_monic() const { return num_.is_monic(); }

  /// deg num - deg den; kZeroDegree for zero.
  int degree() const { return is_zero() ? kZeroDegree : num_.degree() - den_.degree(); }
  const Rat& leading() const { return num_.leading(); }

  RatFunc monic() const {
    if (is_zero()) return *this;
    RatFunc r = *this;
    r.num_ = r.num_.monic();
    return r;
  }

  RatFunc shift(long k) const {
    if (k == 0) return *this;
    RatFunc r;
    r.num_ = num_.shift(k);
    r.den_ = den_.shift(k);
    return r;  // shifting preserves coprimality and monicity
  }

  RatFunc inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational function");
    return RatFunc(den_, num_);
  }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
    // cross-cancel before multiplying to keep operands small
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    RatFunc r;
    r.num_ = divmod(a.num_, g1).first * divmod(b.num_, g2).first;
    r.den_ = divmod(a.den_, g2).first * divmod(b.den_, g1).first;
    Rat lc = r.den_.leading();
    if (lc != 1) {
      r.num_ = (1 / lc) * r.num_;
      r.den_ = r.den_.monic();
    }
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by zero rational function");
    return a * b.inverse();
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Poly num_;
  Poly den_;
};

/// f * sigma^step(f) * ... * sigma^{(count-1) step}(f).
inline RatFunc twisted_product(const RatFunc& f, long step, int count) {
  RatFunc r = RatFunc::constant(Rat(1));
  for (int i = 0; i < count; ++i) r *= f.shift(step * i);
  return r;
}

inline std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

}  // namespace weyl
