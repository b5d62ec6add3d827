#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/detail/modular.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// f = unit * prod(factor^multiplicity), factors monic irreducible over Q, sorted.
struct Factorization {
  Rat unit{1};
  std::vector<std::pair<Poly, int>> factors;

  Poly expand() const {
    Poly r = Poly::constant(unit);
    for (const auto& [p, e] : factors) r *= p.pow(static_cast<unsigned>(e));
    return r;
  }
  int multiplicity(const Poly& p) const {
    for (const auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }
};

/// Yun's algorithm: monic f = prod_i a_i^i with a_i squarefree and pairwise coprime.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly a = f.monic();
  if (a.degree() == 0) return out;
  Poly b = a.derivative();
  Poly c = gcd(a, b);
  Poly w = divmod(a, c).first;
  Poly y = divmod(b, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly z = y - w.derivative();
    Poly g = z.is_zero() ? w.monic() : gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    ++i;
  }
  return out;
}

namespace detail {

/// Primitive integer polynomial with positive leading coefficient, proportional to f.
inline ZPoly to_primitive_z(const Poly& f) {
  Int l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(f.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Rat v = f.coeffs()[i] * l;
    z[i] = v.get_num();
  }
  return primitive_part(std::move(z));
}

}  // namespace detail

/// Exact factorization into monic irreducibles over Q.
inline Factorization factor(const Poly& f) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization out;
  out.unit = f.leading();
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : detail::zassenhaus(detail::to_primitive_z(part))) {
      out.factors.emplace_back(detail::to_poly(z).monic(), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

inline bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors.front().second == 1;
}

/// The integer c with q = sigma^c(p), i.e. q(H) = p(H - c), if one exists.
/// p and q are monic of positive degree.
inline std::optional<long> shift_offset(const Poly& p, const Poly& q) {
  const int d = p.degree();
  if (d <= 0 || q.degree() != d) return std::nullopt;
  Rat c = (p.coeff(d - 1) - q.coeff(d - 1)) / d;
  if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
  long k = c.get_num().get_si();
  if (p.shift(k) != q) return std::nullopt;
  return k;
}

/// The irreducibles sigma^{k*step}(representative), k in the map, with their multiplicities.
struct OrbitProfile {
  Poly representative;
  long step = 1;
  std::map<long, int> multiplicities;
};

/// Groups (irreducible, signed multiplicity) pairs into sigma^step-orbits. The
/// representative of each orbit is the member of smallest index, so all indices are >= 0.
inline std::vector<OrbitProfile> orbit_decompose(const std::vector<std::pair<Poly, int>>& factors, long step) {
  if (step < 1) throw DomainError("orbit step must be positive");
  struct Group {
    Poly anchor;
    std::map<long, int> by_offset;  // offset c in sigma^c(anchor)
  };
  std::vector<Group> groups;
  for (const auto& [p, e] : factors) {
    if (e == 0) continue;
    bool placed = false;
    for (auto& g : groups) {
      auto c = shift_offset(g.anchor, p);
      if (c && *c % step == 0) {
        g.by_offset[*c] += e;
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({p, {{0, e}}});
  }
  std::vector<OrbitProfile> out;
  for (auto& g : groups) {
    const long base = g.by_offset.begin()->first;
    OrbitProfile prof;
    prof.step = step;
    prof.representative = g.anchor.shift(base);
    for (const auto& [c, e] : g.by_offset)
      if (e != 0) prof.multiplicities[(c - base) / step] = e;
    if (!prof.multiplicities.empty()) out.push_back(std::move(prof));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitProfile& a, const OrbitProfile& b) { return a.representative < b.representative; });
  return out;
}

inline std::vector<OrbitProfile> orbit_decompose(const Factorization& fac, long step) {
  return orbit_decompose(fac.factors, step);
}

}  // namespace weyl
