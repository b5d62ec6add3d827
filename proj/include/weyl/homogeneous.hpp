#pragma once

#include "weyl/graded.hpp"

namespace weyl {

/// u = scalar * alpha * v_n in A1 with alpha monic. Centralizers and N(u, A1)
/// depend only on the monic part; the scalar is kept for display and classification.
struct HomogeneousElement {
  Poly alpha = Poly::constant(Rat(1));
  Rat scalar{1};
  int n = 0;

  static HomogeneousElement make(const Poly& coefficient, int n) {
    if (coefficient.is_zero()) throw PreconditionError("homogeneous element must be nonzero");
    return {coefficient.monic(), coefficient.leading(), n};
  }

  /// Fails unless e is a nonzero single-grading element of A1.
  static HomogeneousElement from(const GradedElement& e) {
    auto g = e.grading();
    if (!g) throw PreconditionError(e.is_zero() ? "element is zero" : "element is not homogeneous");
    if (!membership(e, Ring::A1)) throw PreconditionError("element is not in A1");
    return make(e.v_coefficients().at(*g), *g);
  }

  bool is_scalar() const { return n == 0 && alpha.degree() == 0; }
  int degree() const { return alpha.degree(); }

  GradedElement to_graded() const { return GradedElement::term(RatFunc(scalar * alpha * v_coefficient(n)), n); }
  GradedElement monic_graded() const { return GradedElement::term(RatFunc(alpha * v_coefficient(n)), n); }

  /// Coefficient of X^n of the monic part, as an element of B.
  RatFunc b_coefficient() const { return RatFunc(alpha * v_coefficient(n)); }
};

}  // namespace weyl
