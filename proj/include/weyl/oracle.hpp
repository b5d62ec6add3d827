#pragma once

// Brute-force linear algebra on truncated slices of A1. Elements are kept in
// the v-basis (sum of p_j(H) v_j) and multiplied only through the structure
// constants, so nothing here relies on the X-basis arithmetic or on any of the
// closed forms in centralizer.hpp / dixmier.hpp.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weyl/box.hpp"
#include "weyl/graded.hpp"
#include "weyl/homogeneous.hpp"

namespace weyl::oracle {

/// sum p_j v_j with p_j in Q[H].
using VElem = std::map<int, Poly>;

inline void vclean(VElem& e) {
  for (auto it = e.begin(); it != e.end();) {
    if (it->second.is_zero())
      it = e.erase(it);
    else
      ++it;
  }
}

/// (p v_a)(q v_b) = p sigma^a(q) (a, b) v_{a+b}.
inline VElem vmul(const VElem& x, const VElem& y) {
  VElem out;
  for (const auto& [a, p] : x)
    for (const auto& [b, q] : y) out[a + b] = out[a + b] + p * q.shift(a) * structure_constant(a, b);
  vclean(out);
  return out;
}

inline VElem vsub(const VElem& x, const VElem& y) {
  VElem out = x;
  for (const auto& [b, q] : y) out[b] = out[b] - q;
  vclean(out);
  return out;
}

inline VElem vad(const VElem& u, const VElem& w) { return vsub(vmul(u, w), vmul(w, u)); }

inline VElem vpow(const VElem& x, int e) {
  VElem r{{0, Poly::constant(Rat(1))}};
  for (int i = 0; i < e; ++i) r = vmul(r, x);
  return r;
}

inline VElem to_v(const HomogeneousElement& u) { return {{u.n, u.scalar * u.alpha}}; }
inline VElem to_v(const GradedElement& e) {
  auto c = e.v_coefficients();
  return VElem(c.begin(), c.end());
}
inline GradedElement from_v(const VElem& e) { return GradedElement::from_v_coefficients(std::map<int, Poly>(e.begin(), e.end())); }

/// Dense exact matrix; rows and columns index box bases H^e v_j ordered by (j, e).
struct ExactMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> data;

  ExactMatrix() = default;
  ExactMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rat& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

inline std::size_t box_index(const Box& b, int j, int e) {
  return static_cast<std::size_t>(j + b.grading) * static_cast<std::size_t>(b.degree + 1) + static_cast<std::size_t>(e);
}
inline std::size_t box_size(const Box& b) {
  return static_cast<std::size_t>(2 * b.grading + 1) * static_cast<std::size_t>(b.degree + 1);
}

/// Enlargement by one application of ad u.
inline Box step_box(const Box& b, const HomogeneousElement& u, int power = 1) {
  const int an = std::abs(u.n);
  return {b.grading + power * an, b.degree + power * (u.degree() + an)};
}

/// Matrix of (ad u)^power from the domain box into a codomain box large enough to lose nothing.
inline std::pair<ExactMatrix, Box> ad_matrix(const HomogeneousElement& u, const Box& domain, int power) {
  const Box codomain = step_box(domain, u, power);
  ExactMatrix m(box_size(codomain), box_size(domain));
  const VElem uv = to_v(u);
  for (int j = -domain.grading; j <= domain.grading; ++j)
    for (int e = 0; e <= domain.degree; ++e) {
      VElem w{{j, Poly::monomial(Rat(1), e)}};
      for (int p = 0; p < power; ++p) w = vad(uv, w);
      for (const auto& [g, poly] : w)
        for (int d = 0; d <= poly.degree(); ++d) m.at(box_index(codomain, g, d), box_index(domain, j, e)) = poly.coeff(d);
    }
  return {std::move(m), codomain};
}

namespace detail {

/// Row echelon form by fraction-free (Bareiss) elimination after clearing row denominators.
/// Returns the integer matrix in echelon form and its pivot columns.
inline std::pair<std::vector<std::vector<Int>>, std::vector<std::size_t>> echelon(const std::vector<std::vector<Rat>>& rows,
                                                                                  std::size_t ncols) {
  std::vector<std::vector<Int>> a;
  for (const auto& r : rows) {
    Int l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> ir(ncols);
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      Rat v = r[c] * l;
      ir[c] = v.get_num();
      nonzero = nonzero || ir[c] != 0;
    }
    if (nonzero) a.push_back(std::move(ir));
  }
  std::vector<std::size_t> pivots;
  Int prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < a.size(); ++i) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        Int v = a[row][col] * a[i][c] - a[i][col] * a[row][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][c] = std::move(v);
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

/// Basis of {x : M x = 0} where M is given by its rows.
inline std::vector<std::vector<Rat>> nullspace(const std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
  auto [a, pivots] = detail::echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(ncols);
    x[f] = 1;
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      Rat s = 0;
      for (std::size_t c = pc + 1; c < ncols; ++c)
        if (x[c] != 0) s += Rat(a[r][c]) * x[c];
      x[pc] = -s / Rat(a[r][pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

inline std::size_t rank(const std::vector<std::vector<Rat>>& rows, std::size_t ncols) {
  return detail::echelon(rows, ncols).second.size();
}

inline std::vector<Rat> poly_vector(const Poly& p, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  for (int d = 0; d <= p.degree() && d <= degree; ++d) v[static_cast<std::size_t>(d)] = p.coeff(d);
  return v;
}

/// Same span (as subspaces of polynomials of degree <= degree).
inline bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b, int degree) {
  std::vector<std::vector<Rat>> ra, rb, all;
  for (const auto& p : a) ra.push_back(poly_vector(p, degree));
  for (const auto& p : b) rb.push_back(poly_vector(p, degree));
  all = ra;
  all.insert(all.end(), rb.begin(), rb.end());
  const std::size_t n = static_cast<std::size_t>(degree) + 1;
  const std::size_t r = rank(all, n);
  return rank(ra, n) == r && rank(rb, n) == r;
}

/// Kernel of (ad u)^{k+1} on the box, by grading: element p v_j for p in the span.
struct Kernel {
  Box box;
  int k = 0;
  std::map<int, std::vector<Poly>> blocks;  // only nonzero blocks

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& [j, b] : blocks) d += b.size();
    return d;
  }
  std::size_t dimension(int grading) const {
    auto it = blocks.find(grading);
    return it == blocks.end() ? 0 : it->second.size();
  }
  std::vector<Poly> block(int grading) const {
    auto it = blocks.find(grading);
    return it == blocks.end() ? std::vector<Poly>{} : it->second;
  }
  std::vector<VElem> basis() const {
    std::vector<VElem> out;
    for (const auto& [j, b] : blocks)
      for (const auto& p : b) out.push_back({{j, p}});
    return out;
  }
};

/// Kernels of (ad u)^{l+1} on the box for l = 0..k, sharing the iterated images.
inline std::vector<Kernel> kernel_levels(const HomogeneousElement& u, int k, const Box& box) {
  if (k < 0) throw DomainError("kernel level must be nonnegative");
  const VElem uv = to_v(u);
  std::vector<Kernel> levels(static_cast<std::size_t>(k) + 1);
  for (int l = 0; l <= k; ++l) levels[static_cast<std::size_t>(l)] = {box, l, {}};
  const std::size_t ncols = static_cast<std::size_t>(box.degree) + 1;
  for (int j = -box.grading; j <= box.grading; ++j) {
    std::vector<Poly> images(ncols);
    for (int e = 0; e <= box.degree; ++e) images[static_cast<std::size_t>(e)] = Poly::monomial(Rat(1), e);
    const int target_step = u.n;
    int grading = j;
    for (int l = 0; l <= k; ++l) {
      for (auto& p : images) {
        VElem w = vad(uv, VElem{{grading, p}});
        p = w.empty() ? Poly() : w.begin()->second;
      }
      grading += target_step;
      int maxdeg = 0;
      for (const auto& p : images) maxdeg = std::max(maxdeg, p.degree());
      std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(maxdeg) + 1, std::vector<Rat>(ncols));
      for (std::size_t c = 0; c < ncols; ++c)
        for (int d = 0; d <= images[c].degree(); ++d) rows[static_cast<std::size_t>(d)][c] = images[c].coeff(d);
      auto ns = nullspace(rows, ncols);
      if (ns.empty()) continue;
      auto& blk = levels[static_cast<std::size_t>(l)].blocks[j];
      for (const auto& x : ns) blk.push_back(Poly(x));
    }
  }
  return levels;
}

/// Basis of N(u, k) ∩ box = {w in box : (ad u)^{k+1} w = 0}.
inline Kernel kernel_power(const HomogeneousElement& u, int k, const Box& box) { return kernel_levels(u, k, box).back(); }

inline std::vector<std::size_t> level_dimensions(const std::vector<Kernel>& levels) {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.dimension());
  return out;
}

/// True if every filtration level l <= k that gains vectors in the once-enlarged box
/// also gains vectors in the box itself.
inline bool saturation_check(const HomogeneousElement& u, int k, const Box& box) {
  const auto small = level_dimensions(kernel_levels(u, k, box));
  const auto big = level_dimensions(kernel_levels(u, k, step_box(box, u)));
  for (std::size_t l = 0; l < small.size(); ++l) {
    const bool grows_big = big[l] > (l ? big[l - 1] : 0);
    const bool grows_small = small[l] > (l ? small[l - 1] : 0);
    if (grows_big && !grows_small) return false;
  }
  return true;
}

struct SaturatedBox {
  Box box;
  bool saturated = false;
};

/// Enlarges the box until saturation_check passes, at most max_rounds times.
inline SaturatedBox grow_until_saturated(const HomogeneousElement& u, int k, Box start, int max_rounds = 4) {
  for (int r = 0; r <= max_rounds; ++r) {
    if (saturation_check(u, k, start)) return {start, true};
    if (r < max_rounds) start = step_box(start, u);
  }
  return {start, false};
}

/// The exponent e with I_n = (ad u)^n (N(u, n) ∩ box) generating u^e K[u], or nothing if
/// no kernel vector reaches a nonzero image.
struct IdealResult {
  std::optional<int> exponent;
  bool saturated = false;
};

inline std::optional<int> ideal_exponent_in(const HomogeneousElement& u, int n, const Box& box) {
  const VElem uv = to_v(u);
  std::optional<int> best;
  for (const auto& w0 : kernel_power(u, n, box).basis()) {
    VElem w = w0;
    for (int i = 0; i < n; ++i) w = vad(uv, w);
    if (w.empty()) continue;
    if (w.size() != 1) throw Error("image of a homogeneous vector is not homogeneous");
    const auto& [g, p] = *w.begin();
    if (u.n == 0 || g % u.n != 0 || g / u.n < 0) throw Error("image is not a multiple of a power of u");
    const int a = g / u.n;
    const Poly ua = vpow(uv, a).at(g);
    auto [q, r] = divmod(p, ua);
    if (!r.is_zero() || !q.is_constant()) throw Error("image is not a scalar multiple of a power of u");
    if (!best || a < *best) best = a;
  }
  return best;
}

/// Saturated when the exponent is stable under one enlargement and the box passes saturation_check.
inline IdealResult oracle_ideal(const HomogeneousElement& u, int n, const Box& box) {
  if (u.n != 1 || u.degree() < 1) throw PreconditionError("oracle ideal needs u = alpha(H)*X with deg alpha >= 1");
  if (n < 1) throw PreconditionError("ideal index must be positive");
  IdealResult r;
  r.exponent = ideal_exponent_in(u, n, box);
  auto bigger = ideal_exponent_in(u, n, step_box(box, u));
  r.saturated = r.exponent.has_value() && r.exponent == bigger && saturation_check(u, n, box);
  return r;
}

/// Nilpotent degree by iterating ad in v-basis arithmetic; nothing if the cap is hit.
inline std::optional<int> oracle_ndeg(const HomogeneousElement& u, const GradedElement& w, int cap = 256) {
  const VElem uv = to_v(u);
  VElem cur = to_v(w);
  if (cur.empty()) return std::nullopt;
  for (int i = 0; i <= cap; ++i) {
    VElem next = vad(uv, cur);
    if (next.empty()) return i;
    cur = std::move(next);
  }
  return std::nullopt;
}

}  // namespace weyl::oracle
