#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "weyl/box.hpp"
#include "weyl/factor.hpp"
#include "weyl/format.hpp"
#include "weyl/homogeneous.hpp"

namespace weyl {

namespace detail {

// Solves beta * sigma^s(beta) * ... * sigma^{(m-1)s}(beta) = alpha for s > 0.
// Along a sigma^s-orbit with members p_k = sigma^{ks}(p_0), the exponents satisfy
// a(k) = b(k) + b(k-1) + ... + b(k-m+1), so b is recovered left to right.
inline std::optional<RatFunc> deconvolve_positive(const RatFunc& alpha, long s, int m) {
  if (m == 1) return alpha;
  const int deg = alpha.degree();
  if (deg % m != 0) return std::nullopt;

  std::vector<std::pair<Poly, int>> signed_factors;
  if (alpha.num().degree() > 0)
    for (const auto& [p, e] : factor(alpha.num()).factors) signed_factors.emplace_back(p, e);
  if (alpha.den().degree() > 0)
    for (const auto& [p, e] : factor(alpha.den()).factors) signed_factors.emplace_back(p, -e);

  Poly num = Poly::constant(Rat(1)), den = Poly::constant(Rat(1));
  for (const auto& orbit : orbit_decompose(signed_factors, s)) {
    const long amax = orbit.multiplicities.rbegin()->first;
    const long bmax = amax - (m - 1);
    if (bmax < 0) return std::nullopt;
    auto a = [&](long k) {
      auto it = orbit.multiplicities.find(k);
      return it == orbit.multiplicities.end() ? 0 : it->second;
    };
    std::vector<long> b(static_cast<std::size_t>(bmax) + 1, 0);
    auto bat = [&](long k) { return k < 0 || k > bmax ? 0L : b[static_cast<std::size_t>(k)]; };
    for (long k = 0; k <= bmax; ++k) {
      long acc = a(k);
      for (int j = 1; j < m; ++j) acc -= bat(k - j);
      b[static_cast<std::size_t>(k)] = acc;
    }
    for (long k = 0; k <= amax; ++k) {
      long acc = 0;
      for (int j = 0; j < m; ++j) acc += bat(k - j);
      if (acc != a(k)) return std::nullopt;
    }
    for (long k = 0; k <= bmax; ++k) {
      const long e = b[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      Poly p = orbit.representative.shift(k * s).pow(static_cast<unsigned>(std::labs(e)));
      (e > 0 ? num : den) *= p;
    }
  }
  return RatFunc(num, den);
}

}  // namespace detail

/// The monic beta with beta sigma^t(beta) ... sigma^{(m-1)t}(beta) = alpha, if any.
/// t may be negative; alpha must be monic.
inline std::optional<RatFunc> solve_beta(const RatFunc& alpha, long t, int m) {
  if (alpha.is_zero() || !alpha.is_monic()) throw DomainError("solve_beta needs a monic nonzero alpha");
  if (t == 0 || m < 1) throw DomainError("solve_beta needs t != 0 and m >= 1");
  if (t > 0) return detail::deconvolve_positive(alpha, t, m);
  // prod_j sigma^{-js}(beta) = sigma^{-(m-1)s}(prod_j sigma^{js}(beta))
  const long s = -t;
  return detail::deconvolve_positive(alpha.shift((m - 1) * s), s, m);
}

/// v = beta X^t generates C(u, B) = K[v, v^-1]; v^m = u.
struct CanonicalGenerator {
  RatFunc beta;
  int t = 1;
  int s = 1;
  int m = 1;

  GradedElement v() const { return GradedElement::term(beta, t); }
  /// v^i for any integer i.
  GradedElement power(int i) const {
    GradedElement g = v();
    return i >= 0 ? g.pow(static_cast<unsigned>(i)) : g.inverse().pow(static_cast<unsigned>(-i));
  }
};

inline CanonicalGenerator canonical_generator(const HomogeneousElement& u) {
  if (u.n == 0) throw PreconditionError("canonical generator needs nonzero grading");
  const int an = std::abs(u.n);
  const RatFunc alpha = u.b_coefficient();
  for (int s = 1; s <= an; ++s) {
    if (an % s != 0) continue;
    const int t = u.n > 0 ? s : -s;
    if (auto beta = solve_beta(alpha, t, an / s)) return {*beta, t, s, an / s};
  }
  throw Error("no canonical generator found");  // unreachable: s = |n| always works
}

/// C(u, B): K[v, v^-1] for n != 0, K(H) otherwise.
struct CentralizerB {
  std::optional<CanonicalGenerator> generator;

  std::string describe() const {
    if (!generator) return "K(H)";
    return "K[v, v^-1], v = " + format_graded(generator->v());
  }
};

inline CentralizerB centralizer_b(const HomogeneousElement& u) {
  if (u.is_scalar()) throw PreconditionError("centralizer of a scalar is everything");
  if (u.n == 0) return {};
  return {canonical_generator(u)};
}

/// Data of N(u, A1) for u = alpha v_n, n != 0. Gamma_i = gamma sigma^t(gamma) ... sigma^{(i-1)t}(gamma)
/// so that v^i = Gamma_i v_{it}.
struct NStructure {
  CanonicalGenerator generator;
  RatFunc gamma;
  std::vector<int> mu_list;
  int mu = 0;
  std::vector<Poly> g_list;  // g_1 .. g_{mu-1}
  std::vector<Poly> f_list;  // f_1 .. f_{mu-1}

  int t() const { return generator.t; }
  int m() const { return generator.m; }
  RatFunc gamma_product(int i) const { return twisted_product(gamma, t(), i); }
  /// |t| + deg gamma, the ndeg of v_{-t} times 1/i in the formulas.
  int weight() const { return std::abs(t()) + gamma.degree(); }
  GradedElement v_power(int i) const { return generator.power(i); }
};

inline RatFunc gamma_of(const CanonicalGenerator& g) {
  if (g.t > 0) return g.beta;
  return g.beta / RatFunc(structure_constant(g.t, -g.t));
}

/// Denominator of (-it, it) sigma^{-it}(Gamma_i).
inline Poly f_polynomial(const RatFunc& gamma, int t, int i) {
  RatFunc r = RatFunc(structure_constant(-i * t, i * t)) * twisted_product(gamma, t, i).shift(-i * t);
  return r.den();
}

inline NStructure n_structure(const HomogeneousElement& u) {
  if (u.n == 0) throw PreconditionError("N structure needs nonzero grading");
  NStructure out;
  out.generator = canonical_generator(u);
  out.gamma = gamma_of(out.generator);
  const int m = out.generator.m, t = out.generator.t;
  for (int r = 0; r < m; ++r) {
    const int bound = r + m * out.gamma_product(r).den().degree();
    int found = -1;
    for (int j = r; j <= bound; j += m) {
      if (twisted_product(out.gamma, t, j).is_polynomial()) {
        found = j;
        break;
      }
    }
    if (found < 0) throw Error("mu scan exceeded its bound");
    out.mu_list.push_back(found);
  }
  out.mu = *std::max_element(out.mu_list.begin(), out.mu_list.end());
  for (int i = 1; i < out.mu; ++i) {
    out.g_list.push_back(out.gamma_product(i).den());
    out.f_list.push_back(f_polynomial(out.gamma, t, i));
  }
  return out;
}

/// C(u, A1): sum over residues of K[u] v^{mu_i} for n != 0, K[H] otherwise.
struct CentralizerA1 {
  std::vector<int> mu_list;  // empty for K[H]
  std::vector<GradedElement> generators;

  bool is_polynomial_ring_in_h() const { return mu_list.empty(); }
  std::string describe() const {
    if (mu_list.empty()) return "K[H]";
    std::string out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out += " + ";
      out += mu_list[i] == 0 ? "K[u]" : "K[u]*v^" + std::to_string(mu_list[i]);
    }
    return out;
  }
};

inline CentralizerA1 centralizer_a1(const HomogeneousElement& u) {
  if (u.is_scalar()) throw PreconditionError("centralizer of a scalar is everything");
  if (u.n == 0) return {};
  NStructure ns = n_structure(u);
  CentralizerA1 out;
  out.mu_list = ns.mu_list;
  for (int mu : ns.mu_list)
    out.generators.push_back(GradedElement::term(ns.gamma_product(mu) * RatFunc(v_coefficient(mu * ns.t())), mu * ns.t()));
  return out;
}

/// Membership in N(u, A1) = A1 ∩ (sum_i K[H] v^i) for n != 0, K[H] for n = 0.
inline bool n_membership(const GradedElement& w, const HomogeneousElement& u) {
  if (!membership(w, Ring::A1)) return false;
  if (u.is_scalar()) return true;
  if (u.n == 0) return w.is_zero() || w.grading() == 0;
  const CanonicalGenerator g = canonical_generator(u);
  for (const auto& [j, c] : w.terms()) {
    if (j % g.t != 0) return false;
    const RatFunc vi = g.power(j / g.t).coeff(j);
    if (!(c / vi).is_polynomial()) return false;
  }
  return true;
}

/// Nilpotent degree: the i with (ad u)^{i+1}(w) = 0 != (ad u)^i(w).
inline int ndeg(const GradedElement& w, const HomogeneousElement& u, int cap = 4096) {
  if (w.is_zero()) throw PreconditionError("nilpotent degree of zero is undefined");
  if (!n_membership(w, u)) throw NotInNError("element is not locally nilpotent for ad u");
  const GradedElement ug = u.to_graded();
  GradedElement cur = w;
  for (int i = 0; i <= cap; ++i) {
    GradedElement next = ad(ug, cur);
    if (next.is_zero()) return i;
    cur = std::move(next);
  }
  throw IterationCapError("nilpotent degree exceeds iteration cap " + std::to_string(cap));
}

struct BasisElement {
  std::string label;
  GradedElement element;
  int predicted_ndeg = 0;
};

/// Principal basis elements of N(u, A1) inside the box, with ndeg predicted by the closed forms.
/// k ranges over H-powers up to box.degree, gradings up to box.grading in absolute value.
inline std::vector<BasisElement> principal_basis(const HomogeneousElement& u, Box box = {}) {
  if (u.n == 0) throw PreconditionError("principal basis needs nonzero grading");
  const NStructure ns = n_structure(u);
  const int t = ns.t(), w = ns.weight();
  const int imax = box.grading / std::abs(t);
  struct Seed {
    std::string label;
    GradedElement element;
    int ndeg;
  };
  std::vector<Seed> seeds{{"1", GradedElement::scalar(Rat(1)), 0}};
  auto idx = [](const char* base, int i) { return std::string(base) + std::to_string(i); };
  for (int j = 1; j < ns.mu && j <= imax; ++j) {
    const Poly& f = ns.f_list[static_cast<std::size_t>(j - 1)];
    const Poly& g = ns.g_list[static_cast<std::size_t>(j - 1)];
    seeds.push_back({idx("f_", j) + "*" + idx("v_", -j * t), poly_element(f) * GradedElement::v(-j * t), f.degree() + j * w});
    seeds.push_back({idx("g_", j) + "*" + idx("v^", j), poly_element(g) * ns.v_power(j), g.degree()});
  }
  for (int i = std::max(ns.mu, 1); i <= imax; ++i) {
    seeds.push_back({idx("v_", -i * t), GradedElement::v(-i * t), i * w});
    seeds.push_back({idx("v^", i), ns.v_power(i), 0});
  }
  std::vector<BasisElement> out;
  for (const auto& s : seeds) {
    GradedElement hk = GradedElement::scalar(Rat(1));
    for (int k = 0; k <= box.degree; ++k) {
      std::string label = k == 0 ? s.label : (k == 1 ? "H" : "H^" + std::to_string(k)) + (s.label == "1" ? "" : "*" + s.label);
      out.push_back({std::move(label), hk * s.element, s.ndeg + k});
      hk *= GradedElement::h();
    }
  }
  return out;
}

}  // namespace weyl
