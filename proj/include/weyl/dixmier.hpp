#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weyl/box.hpp"
#include "weyl/centralizer.hpp"

namespace weyl {

/// Delta4 exists for completeness; no homogeneous element lands there.
enum class DixmierClass { Delta1, Delta2, Delta3, Delta4, Delta5 };

inline std::string to_string(DixmierClass c) { return "Delta" + std::to_string(static_cast<int>(c) + 1); }

inline DixmierClass classify(const HomogeneousElement& u) {
  if (u.is_scalar()) throw PreconditionError("scalars are not classified");
  if (u.n != 0) return u.degree() == 0 ? DixmierClass::Delta1 : DixmierClass::Delta2;
  return u.degree() == 1 ? DixmierClass::Delta3 : DixmierClass::Delta5;
}

// ---- the family u = alpha(H) X, deg alpha = d >= 1 ----

inline void require_alpha_x(const HomogeneousElement& u) {
  if (u.n != 1 || u.degree() < 1)
    throw PreconditionError(
        "closed forms need u = alpha(H)*X with deg alpha >= 1; use the oracle (verify) for other elements");
}

/// I_k = delta^k(N(u, k)) = u^e K[u].
struct IdealDescriptor {
  int k = 1;
  int exponent = 0;
};

inline IdealDescriptor ideal_i(const HomogeneousElement& u, int k) {
  require_alpha_x(u);
  if (k < 1) throw PreconditionError("ideal index must be positive");
  const int d = u.degree();
  return {k, k - k / (d + 1)};
}

struct Problem5Row {
  int i = 0;
  int product_exponent = 0;  // I_1 * I_{i(d+1)-1}
  int ideal_exponent = 0;    // I_{i(d+1)}
  bool differs() const { return product_exponent != ideal_exponent; }
};

inline std::vector<Problem5Row> problem5_report(const HomogeneousElement& u, int imax) {
  require_alpha_x(u);
  const int d = u.degree();
  std::vector<Problem5Row> rows;
  for (int i = 1; i <= imax; ++i) {
    const int k = i * (d + 1);
    rows.push_back({i, ideal_i(u, 1).exponent + ideal_i(u, k - 1).exponent, ideal_i(u, k).exponent});
  }
  return rows;
}

struct IdentityCheck {
  std::string name;
  GradedElement iterated;
  GradedElement closed_form;
  bool holds() const { return iterated == closed_form; }
};

/// delta^i(phi_i) = u^i, computed for the monic part of u.
inline IdentityCheck delta_phi_identity(const HomogeneousElement& u, int i) {
  require_alpha_x(u);
  const GradedElement ug = u.monic_graded();
  return {"delta^" + std::to_string(i) + "(phi_" + std::to_string(i) + ")", ad_power(ug, poly_element(phi(i)), i),
          ug.pow(static_cast<unsigned>(i))};
}

/// delta^{(d+1)i}(Y^i) = (-1)^{i(d+1)} [(d+1)i]! u^{id}.
inline IdentityCheck delta_y_identity(const HomogeneousElement& u, int i) {
  require_alpha_x(u);
  const int d = u.degree(), k = (d + 1) * i;
  const GradedElement ug = u.monic_graded();
  Rat c(factorial(static_cast<unsigned>(k)));
  if ((i * (d + 1)) % 2) c = -c;
  return {"delta^" + std::to_string(k) + "(Y^" + std::to_string(i) + ")",
          ad_power(ug, GradedElement::y().pow(static_cast<unsigned>(i)), k), c * ug.pow(static_cast<unsigned>(i * d))};
}

/// delta^{i+(d+1)j}(phi_i Y^j) = (-1)^{j(d+1)} binom(i+(d+1)j, i) [(d+1)j]! u^{i+dj}.
inline IdentityCheck delta_phi_y_identity(const HomogeneousElement& u, int i, int j) {
  require_alpha_x(u);
  const int d = u.degree(), k = i + (d + 1) * j;
  const GradedElement ug = u.monic_graded();
  Rat c(binomial(static_cast<unsigned>(k), static_cast<unsigned>(i)) * factorial(static_cast<unsigned>((d + 1) * j)));
  if ((j * (d + 1)) % 2) c = -c;
  GradedElement w = poly_element(phi(i)) * GradedElement::y().pow(static_cast<unsigned>(j));
  return {"delta^" + std::to_string(k) + "(phi_" + std::to_string(i) + "*Y^" + std::to_string(j) + ")",
          ad_power(ug, w, k), c * ug.pow(static_cast<unsigned>(i + d * j))};
}

/// N(u, A1) = K[H](sigma^step, a).
struct GwaPresentation {
  Poly a;
  int step = 1;
};

inline GwaPresentation n_gwa_presentation(const HomogeneousElement& u) {
  require_alpha_x(u);
  return {Poly::h() * u.alpha.shift(-1), 1};
}

/// X' = alpha X, Y, H satisfy X'H = sigma(H)X', YH = sigma^-1(H)Y, YX' = a, X'Y = sigma(a).
inline bool gwa_relations_hold(const HomogeneousElement& u) {
  const GwaPresentation p = n_gwa_presentation(u);
  const GradedElement xp = u.monic_graded(), y = GradedElement::y(), h = GradedElement::h();
  return xp * h == poly_element(Poly::h().shift(1)) * xp && y * h == poly_element(Poly::h().shift(-1)) * y &&
         y * xp == poly_element(p.a) && xp * y == poly_element(p.a.shift(1));
}

inline bool is_simple_n(const HomogeneousElement& u) {
  const GwaPresentation p = n_gwa_presentation(u);
  for (const auto& orbit : orbit_decompose(factor(p.a), 1))
    if (orbit.multiplicities.size() > 1) return false;
  return true;
}

enum class GlobalDimension { One, Two, Infinite };

inline std::string to_string(GlobalDimension g) {
  switch (g) {
    case GlobalDimension::One: return "1";
    case GlobalDimension::Two: return "2";
    case GlobalDimension::Infinite: return "inf";
  }
  return "inf";
}

inline GlobalDimension global_dimension_n(const HomogeneousElement& u) {
  const Factorization f = factor(n_gwa_presentation(u).a);
  for (const auto& [p, e] : f.factors)
    if (e >= 2) return GlobalDimension::Infinite;
  return is_simple_n(u) ? GlobalDimension::One : GlobalDimension::Two;
}

// ---- eigenvectors of ad u ----

struct Eigenspace {
  Rat eigenvalue;
  int grading = 0;        // D(u, c*m) = K[H] v_m when semisimple
  std::string describe;
};

struct EigenReport {
  bool semisimple = false;  // u = cH + e
  Rat c{0};
  std::vector<Eigenspace> spaces;
};

/// For u = cH + e the eigenvalues are c*Z with D(u, c m) = K[H] v_m; listed for |m| <= max_grading.
/// Every other homogeneous u has the single eigenvalue 0 with eigenspace C(u, A1).
inline EigenReport eigen_decompose(const HomogeneousElement& u, int max_grading = 3) {
  if (u.is_scalar()) throw PreconditionError("ad of a scalar is zero");
  EigenReport r;
  if (u.n == 0 && u.degree() == 1) {
    r.semisimple = true;
    r.c = u.scalar;
    for (int m = -max_grading; m <= max_grading; ++m)
      r.spaces.push_back({r.c * m, m, "K[H]*v_" + std::to_string(m)});
    return r;
  }
  r.spaces.push_back({Rat(0), 0, centralizer_a1(u).describe()});
  return r;
}

// ---- growth of A1 / N(u, A1) ----

enum class GrowthMode { AlphaX, Generic };

/// dim M_i for i = 1..n_max. AlphaX: M_i = K[H]/alpha_i with alpha_i = alpha sigma(alpha) ... sigma^{i-1}(alpha),
/// needs u = alpha X. Generic: M_i = K[H] v_{i mu t} / K[H] v^{i mu}, dimension deg Gamma_{i mu}, needs mu >= 1.
inline std::vector<int> dimension_growth(const HomogeneousElement& u, int n_max, GrowthMode mode) {
  if (u.is_scalar() || classify(u) != DixmierClass::Delta2) throw PreconditionError("growth witness needs a Delta2 element");
  std::vector<int> out;
  if (mode == GrowthMode::AlphaX) {
    require_alpha_x(u);
    for (int i = 1; i <= n_max; ++i) out.push_back(twisted_product(u.alpha, 1, i).degree());
    return out;
  }
  const NStructure ns = n_structure(u);
  if (ns.mu == 0) throw PreconditionError("mu = 0: the generic growth module is trivial; use the alpha*X mode");
  for (int i = 1; i <= n_max; ++i) {
    RatFunc g = ns.gamma_product(i * ns.mu);
    if (!g.is_polynomial()) throw Error("Gamma_{i mu} is not a polynomial");
    out.push_back(g.degree());
  }
  return out;
}

/// Classes of p and alpha(H) p, where [H, p] = n p with n != 0.
inline std::pair<DixmierClass, DixmierClass> type_change_check(const HomogeneousElement& p, const Poly& alpha) {
  if (p.n == 0) throw PreconditionError("p must have nonzero grading");
  if (alpha.is_zero()) throw PreconditionError("alpha must be nonzero");
  return {classify(p), classify(HomogeneousElement::make(p.scalar * alpha * p.alpha, p.n))};
}

}  // namespace weyl
