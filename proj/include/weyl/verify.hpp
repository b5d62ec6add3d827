#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <future>
#include <string>
#include <vector>

#include "weyl/dixmier.hpp"
#include "weyl/oracle.hpp"
#include "weyl/parse.hpp"

namespace weyl {

enum class Verdict { Pass, Fail, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

struct CheckResult {
  std::string element;
  std::string claim;
  std::string closed_form;
  std::string oracle;
  Box box;
  bool saturated = false;
  Verdict verdict = Verdict::Inconclusive;
};

struct VerifyOptions {
  int k = 4;
  Box box{};
  int grow_rounds = 2;
};

inline Verdict verdict_of(bool agree, bool saturated) {
  if (!saturated) return Verdict::Inconclusive;
  return agree ? Verdict::Pass : Verdict::Fail;
}

namespace detail {

using Blocks = std::map<int, std::vector<Poly>>;

inline std::string block_dims(const Blocks& b) {
  std::string out;
  for (const auto& [g, v] : b) {
    if (v.empty()) continue;
    if (!out.empty()) out += " ";
    out += std::to_string(g) + ":" + std::to_string(v.size());
  }
  return out.empty() ? "0" : out;
}

inline bool blocks_agree(const Blocks& a, const Blocks& b, int degree) {
  std::set<int> keys;
  for (const auto& [g, v] : a) keys.insert(g);
  for (const auto& [g, v] : b) keys.insert(g);
  for (int g : keys) {
    auto fa = a.find(g), fb = b.find(g);
    std::vector<Poly> va = fa == a.end() ? std::vector<Poly>{} : fa->second;
    std::vector<Poly> vb = fb == b.end() ? std::vector<Poly>{} : fb->second;
    if (!oracle::same_span(va, vb, degree)) return false;
  }
  return true;
}

inline Poly v_part(const GradedElement& e) { return e.v_coefficients().begin()->second; }

}  // namespace detail

/// C(u, A1) ∩ box from the closed form, by grading.
inline detail::Blocks closed_centralizer(const HomogeneousElement& u, const Box& box) {
  detail::Blocks out;
  if (u.n == 0) {
    for (int e = 0; e <= box.degree; ++e) out[0].push_back(Poly::monomial(Rat(1), e));
    return out;
  }
  const CentralizerA1 c = centralizer_a1(u);
  const GradedElement ug = u.monic_graded();
  for (const auto& gen : c.generators) {
    GradedElement w = gen;
    while (std::abs(*w.grading()) <= box.grading) {
      Poly p = detail::v_part(w);
      if (p.degree() <= box.degree) out[*w.grading()].push_back(p);
      w = w * ug;
    }
  }
  return out;
}

/// Generator q_g (v-basis coefficient) and nilpotent degree of the principal-basis element at grading g.
struct NGenerator {
  Poly q;
  int ndeg = 0;
};

inline std::optional<NGenerator> n_generator(const NStructure& ns, int g) {
  const int t = ns.t();
  if (g % t != 0) return std::nullopt;
  const int i = g / t;
  if (i == 0) return NGenerator{Poly::constant(Rat(1)), 0};
  if (i > 0) {
    // g_i v^i has coefficient g_i Gamma_i = num Gamma_i
    const Poly q = ns.gamma_product(i).num();
    if (i >= ns.mu) return NGenerator{q, 0};
    return NGenerator{q, ns.g_list[static_cast<std::size_t>(i - 1)].degree()};
  }
  const int a = -i;
  if (a >= ns.mu) return NGenerator{Poly::constant(Rat(1)), a * ns.weight()};
  const Poly& fa = ns.f_list[static_cast<std::size_t>(a - 1)];
  return NGenerator{fa, fa.degree() + a * ns.weight()};
}

/// N(u, level) ∩ box from the principal basis and its ndeg formulas, by grading.
inline detail::Blocks closed_n_level(const HomogeneousElement& u, int level, const Box& box) {
  detail::Blocks out;
  if (u.n == 0) {
    for (int e = 0; e <= box.degree; ++e) out[0].push_back(Poly::monomial(Rat(1), e));
    return out;
  }
  const NStructure ns = n_structure(u);
  for (int g = -box.grading; g <= box.grading; ++g) {
    auto gen = n_generator(ns, g);
    if (!gen) continue;
    const int emax = std::min(box.degree - gen->q.degree(), level - gen->ndeg);
    for (int e = 0; e <= emax; ++e) out[g].push_back(Poly::monomial(Rat(1), e) * gen->q);
  }
  return out;
}

inline detail::Blocks to_blocks(const oracle::Kernel& k) { return k.blocks; }

/// Picks the box for level k: the given one if saturated, otherwise the first saturated enlargement.
inline oracle::SaturatedBox choose_box(const HomogeneousElement& u, int k, const VerifyOptions& opt) {
  return oracle::grow_until_saturated(u, k, opt.box, opt.grow_rounds);
}

inline std::vector<CheckResult> verify_element(const HomogeneousElement& u, const std::string& label,
                                               const VerifyOptions& opt = {}) {
  if (u.is_scalar()) throw PreconditionError("nothing to verify for a scalar");
  std::vector<CheckResult> out;

  {
    const auto sb = choose_box(u, 0, opt);
    auto oracle_blocks = to_blocks(oracle::kernel_power(u, 0, sb.box));
    auto closed = closed_centralizer(u, sb.box);
    const bool agree = detail::blocks_agree(closed, oracle_blocks, sb.box.degree);
    out.push_back({label, "C(u,A1) ∩ box = " + (u.n == 0 ? std::string("K[H]") : centralizer_a1(u).describe()),
                   detail::block_dims(closed), detail::block_dims(oracle_blocks), sb.box, sb.saturated,
                   verdict_of(agree, sb.saturated)});
  }

  {
    const auto sb = choose_box(u, opt.k, opt);
    auto levels = oracle::kernel_levels(u, opt.k, sb.box);
    for (int l = 0; l <= opt.k; ++l) {
      auto closed = closed_n_level(u, l, sb.box);
      auto got = to_blocks(levels[static_cast<std::size_t>(l)]);
      const bool agree = detail::blocks_agree(closed, got, sb.box.degree);
      out.push_back({label, "N(u," + std::to_string(l) + ",A1) ∩ box", detail::block_dims(closed), detail::block_dims(got),
                     sb.box, sb.saturated, verdict_of(agree, sb.saturated)});
    }
  }

  if (u.n == 1 && u.degree() >= 1) {
    for (int n = 1; n <= opt.k; ++n) {
      const auto sb = choose_box(u, n, opt);
      const int closed = ideal_i(u, n).exponent;
      auto r = oracle::oracle_ideal(u, n, sb.box);
      const std::string got = r.exponent ? "u^" + std::to_string(*r.exponent) : "none";
      out.push_back({label, "I_" + std::to_string(n) + " = u^e K[u]", "u^" + std::to_string(closed), got, sb.box, r.saturated,
                     verdict_of(r.exponent == closed, r.saturated)});
    }
  }

  if (u.n != 0) {
    const Box pb{std::min(opt.box.grading, 4), std::min(opt.box.degree, 3)};
    std::string mismatches;
    int total = 0, bad = 0;
    for (const auto& b : principal_basis(u, pb)) {
      ++total;
      auto got = oracle::oracle_ndeg(u, b.element, b.predicted_ndeg + 8);
      if (got != b.predicted_ndeg) {
        ++bad;
        if (mismatches.size() < 200) mismatches += " " + b.label + "=" + (got ? std::to_string(*got) : "?");
      }
    }
    out.push_back({label, "ndeg of principal basis elements", std::to_string(total) + " predicted",
                   bad == 0 ? std::to_string(total) + " matched" : std::to_string(bad) + " mismatched:" + mismatches, pb, true,
                   bad == 0 ? Verdict::Pass : Verdict::Fail});
  }
  return out;
}

inline const std::vector<std::string>& standard_suite() {
  static const std::vector<std::string> suite = {"X",           "X^2",         "H*X", "H^2*X", "H*(H-1)*X^2",
                                                 "H*(H-3)*X^2", "Y",           "H",   "H^2"};
  return suite;
}

/// Runs every element concurrently; results keep the input order.
inline std::vector<CheckResult> verify_suite(const std::vector<std::string>& elements, const VerifyOptions& opt = {}) {
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto& text : elements)
    jobs.push_back(std::async(std::launch::async, [text, opt] {
      return verify_element(HomogeneousElement::from(parse(text, {true})), text, opt);
    }));
  std::vector<CheckResult> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace weyl
