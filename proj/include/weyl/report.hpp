#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "weyl/dixmier.hpp"
#include "weyl/format.hpp"
#include "weyl/verify.hpp"

namespace weyl {

struct AnalysisOptions {
  int imax = 10;
};

/// Everything the analyze verb reports. Optional parts are absent when they do not apply.
struct Analysis {
  GradedElement element;
  DixmierClass klass = DixmierClass::Delta1;
  std::string centralizer_a1;
  std::string centralizer_b;
  std::optional<NStructure> n;
  std::vector<IdealDescriptor> ideals;  // u = alpha X, deg alpha >= 1 only
  std::vector<Problem5Row> problem5;
  std::optional<GwaPresentation> gwa;
  std::optional<bool> simple;
  std::optional<GlobalDimension> gl_dim;
  int degree = 0;
};

inline bool has_alpha_x_shape(const HomogeneousElement& u) { return u.n == 1 && u.degree() >= 1; }

inline Analysis analyze(const HomogeneousElement& u, const AnalysisOptions& opt = {}) {
  Analysis a;
  a.element = u.to_graded();
  a.klass = classify(u);
  a.degree = u.degree();
  a.centralizer_a1 = centralizer_a1(u).describe();
  a.centralizer_b = centralizer_b(u).describe();
  if (u.n != 0) a.n = n_structure(u);
  if (has_alpha_x_shape(u)) {
    for (int k = 1; k <= opt.imax; ++k) a.ideals.push_back(ideal_i(u, k));
    a.problem5 = problem5_report(u, std::max(1, opt.imax / (u.degree() + 1)));
    a.gwa = n_gwa_presentation(u);
    a.simple = is_simple_n(u);
    a.gl_dim = global_dimension_n(u);
  }
  return a;
}

// ---- JSON ----

inline json to_json(const NStructure& ns) {
  json g = json::array(), f = json::array();
  for (const auto& p : ns.g_list) g.push_back(to_json(p));
  for (const auto& p : ns.f_list) f.push_back(to_json(p));
  return {{"generator", to_json(ns.generator.v())},
          {"gamma", to_json(ns.gamma)},
          {"t", ns.t()},
          {"m", ns.m()},
          {"mu_list", ns.mu_list},
          {"mu", ns.mu},
          {"g", g},
          {"f", f}};
}

inline json to_json(const Analysis& a) {
  json ideals = json::array();
  for (const auto& d : a.ideals) ideals.push_back({{"k", d.k}, {"exp", d.exponent}});
  json p5 = json::array();
  for (const auto& r : a.problem5)
    p5.push_back({{"i", r.i}, {"product_exp", r.product_exponent}, {"ideal_exp", r.ideal_exponent}, {"differs", r.differs()}});
  json out = {{"element", to_json(a.element)},
              {"class", to_string(a.klass)},
              {"centralizer", {{"A1", a.centralizer_a1}, {"B", a.centralizer_b}}},
              {"n_structure", a.n ? to_json(*a.n) : json(nullptr)},
              {"ideals", ideals},
              {"problem5", p5},
              {"gwa", a.gwa ? json{{"a", to_json(a.gwa->a)}, {"step", a.gwa->step}} : json(nullptr)},
              {"simple", a.simple ? json(*a.simple) : json(nullptr)},
              {"gl_dim", a.gl_dim ? json(to_string(*a.gl_dim)) : json(nullptr)}};
  return out;
}

inline json to_json(const Box& b) { return {{"grading", b.grading}, {"degree", b.degree}}; }

inline json to_json(const CheckResult& r) {
  return {{"element", r.element}, {"claim", r.claim},         {"closed_form", r.closed_form}, {"oracle", r.oracle},
          {"box", to_json(r.box)},  {"saturated", r.saturated}, {"verdict", to_string(r.verdict)}};
}

inline json to_json(const std::vector<CheckResult>& rs) {
  json checks = json::array();
  int pass = 0, fail = 0, inc = 0;
  for (const auto& r : rs) {
    checks.push_back(to_json(r));
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : inc)++;
  }
  return {{"checks", checks}, {"summary", {{"pass", pass}, {"fail", fail}, {"inconclusive", inc}}}};
}

inline json to_json(const EigenReport& r) {
  json spaces = json::array();
  for (const auto& s : r.spaces)
    spaces.push_back({{"eigenvalue", to_string(s.eigenvalue)}, {"grading", s.grading}, {"space", s.describe}});
  return {{"semisimple", r.semisimple}, {"c", to_string(r.c)}, {"spaces", spaces}};
}

// ---- text ----

inline std::string poly_list(const std::vector<Poly>& ps) {
  std::string out = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? ", " : "") + to_string(ps[i]);
  return out + "]";
}

inline std::string int_list(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + "]";
}

inline std::string text(const NStructure& ns) {
  std::ostringstream os;
  os << "v = " << format_graded(ns.generator.v()) << "\n";
  os << "gamma = " << to_string(ns.gamma) << ", t = " << ns.t() << ", m = " << ns.m() << "\n";
  os << "mu_list = " << int_list(ns.mu_list) << ", mu = " << ns.mu << "\n";
  os << "g = " << poly_list(ns.g_list) << "\n";
  os << "f = " << poly_list(ns.f_list) << "\n";
  return os.str();
}

inline std::string text(const Analysis& a) {
  std::ostringstream os;
  os << "element: " << format_graded(a.element) << "\n";
  os << "class: " << to_string(a.klass) << "\n";
  os << "C(u, A1) = " << a.centralizer_a1 << "\n";
  os << "C(u, B) = " << a.centralizer_b << "\n";
  if (a.n)
    os << text(*a.n);
  else
    os << "N(u, A1) = K[H]\n";
  if (!a.ideals.empty()) {
    os << "ideals:";
    for (const auto& d : a.ideals) os << " I_" << d.k << "=u^" << d.exponent;
    os << "\n";
    for (const auto& r : a.problem5) {
      const int k = r.i * (a.degree + 1);
      os << "I_1*I_" << k - 1 << " = u^" << r.product_exponent << (r.differs() ? " != " : " = ") << "I_" << k << " = u^"
         << r.ideal_exponent << "\n";
    }
  }
  if (a.gwa) {
    os << "N(u, A1) = K[H](sigma, a), a = " << to_string(a.gwa->a) << "\n";
    os << "simple: " << (*a.simple ? "yes" : "no") << ", gl.dim: " << to_string(*a.gl_dim) << "\n";
  }
  return os.str();
}

inline std::string text(const CheckResult& r) {
  std::ostringstream os;
  os << to_string(r.verdict) << "  " << r.element << "  " << r.claim << "  closed: " << r.closed_form
     << "  oracle: " << r.oracle << "  box " << to_string(r.box) << (r.saturated ? "" : " (unsaturated)");
  return os.str();
}

inline std::string text(const std::vector<CheckResult>& rs) {
  std::ostringstream os;
  int pass = 0, fail = 0, inc = 0;
  for (const auto& r : rs) {
    os << text(r) << "\n";
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : inc)++;
  }
  os << pass << " pass, " << fail << " fail, " << inc << " inconclusive\n";
  return os.str();
}

inline std::string text(const EigenReport& r) {
  std::ostringstream os;
  if (!r.semisimple) os << "ad u is not semisimple; only eigenvalue 0\n";
  for (const auto& s : r.spaces) os << "eigenvalue " << to_string(s.eigenvalue) << ": " << s.describe << "\n";
  return os.str();
}

// ---- LaTeX ----

inline std::string latex_class(DixmierClass c) { return "\\Delta_{" + std::to_string(static_cast<int>(c) + 1) + "}"; }

inline std::string latex(const Analysis& a) {
  std::ostringstream os;
  os << "u = " << latex(a.element) << " \\in " << latex_class(a.klass) << "\\\\\n";
  if (a.n) {
    os << "v = " << latex(a.n->generator.v()) << ",\\quad \\gamma = " << latex(a.n->gamma) << ",\\quad \\mu = " << a.n->mu
       << "\\\\\n";
  }
  if (!a.ideals.empty()) {
    for (std::size_t i = 0; i < a.ideals.size(); ++i)
      os << (i ? ",\\ " : "") << "I_{" << a.ideals[i].k << "} = u^{" << a.ideals[i].exponent << "}K[u]";
    os << "\\\\\n";
  }
  if (a.gwa) os << "N(u, A_1) = K[H](\\sigma, " << latex(a.gwa->a) << ")\\\\\n";
  return os.str();
}

}  // namespace weyl
