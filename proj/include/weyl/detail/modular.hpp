#pragma once

// Factorization of primitive squarefree integer polynomials:
// Berlekamp over a small prime, linear Hensel lifting, Zassenhaus recombination.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "weyl/poly.hpp"

namespace weyl::detail {

using ZPoly = std::vector<Int>;      // ascending, trimmed
using ModPoly = std::vector<int64_t>;  // ascending, trimmed, entries in [0, p)

inline void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

inline int64_t mod(int64_t a, int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}
inline int64_t mulmod(int64_t a, int64_t b, int64_t p) {
  return static_cast<int64_t>((static_cast<__int128>(a) * b) % p);
}
inline int64_t powmod(int64_t b, int64_t e, int64_t p) {
  int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}
inline int64_t invmod(int64_t a, int64_t p) { return powmod(a, p - 2, p); }

inline ModPoly reduce(const ZPoly& f, int64_t p) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int v = f[i] % p;
    if (v < 0) v += p;
    r[i] = v.get_si();
  }
  trim(r);
  return r;
}

inline ModPoly mp_add(const ModPoly& a, const ModPoly& b, int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}
inline ModPoly mp_sub(const ModPoly& a, const ModPoly& b, int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  trim(r);
  return r;
}
inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}
inline ModPoly mp_scale(const ModPoly& a, int64_t s, int64_t p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], mod(s, p), p);
  trim(r);
  return r;
}
inline std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, int64_t p) {
  if (b.empty()) throw DomainError("modular polynomial division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly rem = a;
  ModPoly quo(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  const int64_t inv = invmod(b.back(), p);
  for (int i = deg(a); i >= deg(b); --i) {
    int64_t q = mulmod(rem[static_cast<std::size_t>(i)], inv, p);
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - deg(b))] = q;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - deg(b) + j)];
      slot = mod(slot - mulmod(q, b[static_cast<std::size_t>(j)], p), p);
    }
  }
  trim(quo);
  trim(rem);
  return {quo, rem};
}
inline ModPoly mp_monic(const ModPoly& a, int64_t p) {
  if (a.empty()) return a;
  return mp_scale(a, invmod(a.back(), p), p);
}
inline ModPoly mp_gcd(ModPoly a, ModPoly b, int64_t p) {
  while (!b.empty()) {
    ModPoly r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}
inline ModPoly mp_derivative(const ModPoly& a, int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], static_cast<int64_t>(i) % p, p);
  trim(r);
  return r;
}

/// Returns (s, t) with s*a + t*b = 1 mod p; a, b coprime.
inline std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, int64_t p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("bezout on non-coprime modular polynomials");
  int64_t inv = invmod(r0[0], p);
  return {mp_scale(s0, inv, p), mp_scale(t0, inv, p)};
}

/// Monic irreducible factors of a monic squarefree f over F_p.
inline std::vector<ModPoly> berlekamp(const ModPoly& f, int64_t p) {
  const int n = deg(f);
  if (n <= 1) return {f};
  // Row i of Q holds x^{ip} mod f.
  std::vector<std::vector<int64_t>> q(static_cast<std::size_t>(n), std::vector<int64_t>(static_cast<std::size_t>(n), 0));
  ModPoly xp = mp_divmod([&] {
    ModPoly m(static_cast<std::size_t>(p) + 1, 0);
    m.back() = 1;
    return m;
  }(), f, p).second;
  ModPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) q[static_cast<std::size_t>(i)][j] = cur[j];
    cur = mp_divmod(mp_mul(cur, xp, p), f, p).second;
  }
  // Kernel of (Q - I)^T: column j of the system corresponds to coefficient j of v.
  std::vector<std::vector<int64_t>> a(static_cast<std::size_t>(n), std::vector<int64_t>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          mod(q[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - (i == j ? 1 : 0), p);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[static_cast<std::size_t>(pr)], a[static_cast<std::size_t>(row)]);
    auto& prow = a[static_cast<std::size_t>(row)];
    int64_t inv = invmod(prow[static_cast<std::size_t>(col)], p);
    for (auto& v : prow) v = mulmod(v, inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      auto& rr = a[static_cast<std::size_t>(r)];
      int64_t fct = rr[static_cast<std::size_t>(col)];
      if (fct == 0) continue;
      for (int c = 0; c < n; ++c)
        rr[static_cast<std::size_t>(c)] = mod(rr[static_cast<std::size_t>(c)] - mulmod(fct, prow[static_cast<std::size_t>(c)], p), p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<ModPoly> basis;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    ModPoly v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[static_cast<std::size_t>(pivot_col[r])] = mod(-a[r][static_cast<std::size_t>(free)], p);
    trim(v);
    basis.push_back(v);
  }
  const std::size_t r = basis.size();
  std::vector<ModPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (deg(v) <= 0) continue;
    std::vector<ModPoly> next;
    for (const auto& u : factors) {
      ModPoly rest = u;
      // u = prod_c gcd(v - c, u), the gcds pairwise coprime
      for (int64_t c = 0; c < p && deg(rest) > 1; ++c) {
        ModPoly g = mp_gcd(mp_sub(v, ModPoly{c}, p), rest, p);
        if (deg(g) == deg(rest)) break;
        if (deg(g) > 0) {
          next.push_back(g);
          rest = mp_monic(mp_divmod(rest, g, p).first, p);
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

inline Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Int smod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

inline ZPoly lift_to_z(const ModPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<long>(f[i]));
  return r;
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline ZPoly z_mod(ZPoly a, const Int& m) {
  for (auto& v : a) {
    v %= m;
    if (v < 0) v += m;
  }
  trim(a);
  return a;
}

/// Lifts f = g*h (mod p), g monic, to f = G*H (mod p^k) with G monic, deg G = deg g.
inline std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& f, const ModPoly& g, const ModPoly& h, int64_t p,
                                          unsigned k) {
  auto [s, t] = mp_bezout(g, h, p);
  ZPoly gz = lift_to_z(g), hz = lift_to_z(h);
  Int q = p;
  for (unsigned j = 1; j < k; ++j) {
    ZPoly prod = z_mul(gz, hz);
    ZPoly e(std::max(f.size(), prod.size()), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& v : e) v /= q;  // exact: f = g*h mod q
    ModPoly em = reduce(e, p);
    auto [c, a] = mp_divmod(mp_mul(t, em, p), g, p);
    ModPoly b = mp_add(mp_mul(s, em, p), mp_mul(c, h, p), p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i >= gz.size()) gz.resize(i + 1, Int(0));
      gz[i] += q * a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i >= hz.size()) hz.resize(i + 1, Int(0));
      hz[i] += q * b[i];
    }
    q *= p;
    gz = z_mod(gz, q);
    hz = z_mod(hz, q);
  }
  return {gz, hz};
}

/// Lifts f = lc(f) * prod(factors) (mod p) to monic factors mod p^k.
inline std::vector<ZPoly> hensel_multi(const ZPoly& f, std::vector<ModPoly> factors, int64_t p, unsigned k) {
  const Int pk = ipow(Int(p), k);
  if (factors.size() == 1) {
    Int inv;
    Int lc = f.back() % pk;
    if (lc < 0) lc += pk;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    ZPoly r = f;
    for (auto& v : r) v *= inv;
    return {z_mod(r, pk)};
  }
  ModPoly g = factors.front();
  Int lc_p = f.back() % p;
  ModPoly h{mod(lc_p.get_si(), p)};
  for (std::size_t i = 1; i < factors.size(); ++i) h = mp_mul(h, factors[i], p);
  auto [gl, hl] = hensel_two(f, g, h, p, k);
  std::vector<ZPoly> out{gl};
  factors.erase(factors.begin());
  // hl is known mod p^k; its factorization mod p is lc * prod(factors).
  auto rest = hensel_multi(hl, std::move(factors), p, k);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

inline Poly to_poly(const ZPoly& f) {
  std::vector<Rat> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
  return Poly(std::move(c));
}

inline Int content(const ZPoly& f) {
  Int g = 0;
  for (const auto& v : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

inline ZPoly primitive_part(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  Int c = content(f);
  if (f.back() < 0) c = -c;
  for (auto& v : f) v /= c;
  return f;
}

inline bool is_small_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Irreducible factors over Z of a primitive, squarefree f with positive leading coefficient.
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = deg(f);
  if (n <= 1) return {f};

  // Pick, among the first few admissible primes, the one giving the fewest modular factors.
  int64_t best_p = 0;
  std::vector<ModPoly> best;
  int tried = 0;
  for (int64_t p = 3; tried < 6 && p < 100000; p += 2) {
    if (!is_small_prime(p)) continue;
    if (f.back() % p == 0) continue;
    ModPoly fm = reduce(f, p);
    if (deg(mp_gcd(fm, mp_derivative(fm, p), p)) != 0) continue;
    ++tried;
    auto facs = berlekamp(mp_monic(fm, p), p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw DomainError("no admissible prime found for factorization");
  const int64_t p = best_p;

  // Coefficient bound for lc(f) * g / lc(g) over any factor g of f.
  Int norm2_sq = 0;
  for (const auto& v : f) norm2_sq += v * v;
  Int norm2 = sqrt(norm2_sq) + 1;
  Int lc_abs = abs(f.back());
  Int bound = 2 * lc_abs * ipow(Int(2), static_cast<unsigned>(n)) * norm2;
  unsigned k = 1;
  Int pk = p;
  while (pk <= bound) {
    pk *= p;
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_multi(f, best, p, k);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly fstar = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      Int b = fstar.back();
      ZPoly g{b};
      for (std::size_t i : pick) g = z_mod(z_mul(g, lifted[remaining[i]]), pk);
      for (auto& v : g) v = smod(v, pk);
      trim(g);
      ZPoly gp = primitive_part(g);
      if (!gp.empty() && deg(gp) > 0) {
        auto [quo, rem] = divmod(to_poly(fstar), to_poly(gp));
        if (rem.is_zero()) {
          result.push_back(gp);
          ZPoly qz(static_cast<std::size_t>(quo.degree()) + 1);
          for (int i = 0; i <= quo.degree(); ++i) qz[static_cast<std::size_t>(i)] = quo.coeff(i).get_num();
          fstar = primitive_part(qz);
          std::vector<std::size_t> next;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) next.push_back(remaining[i]);
          remaining = std::move(next);
          found = true;
          break;
        }
      }
      // next combination of size s from remaining.size()
      std::size_t m = remaining.size();
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - s + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (deg(fstar) > 0) result.push_back(fstar);
  return result;
}

}  // namespace weyl::detail
