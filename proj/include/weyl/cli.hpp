#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "weyl/parse.hpp"
#include "weyl/report.hpp"

namespace weyl::cli {

enum class Format { Text, Json, Latex };

enum Exit : int { Ok = 0, Syntax = 1, Precondition = 2, Inconclusive = 3, Failed = 4 };

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v = {"analyze", "classify", "centralizer", "nstructure",
                                             "ideals",  "verify",   "eigen",       "eval"};
  return v;
}

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw SyntaxError("unknown format '" + s + "'", 0);
}

inline int parse_int(std::string_view s, std::size_t pos = 0) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0) throw SyntaxError("expected a nonnegative integer", pos);
  return v;
}

/// "G,D"
inline Box parse_box(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw SyntaxError("box must be G,D", 0);
  return {parse_int(std::string_view(s).substr(0, comma)), parse_int(std::string_view(s).substr(comma + 1), comma + 1)};
}

struct Config {
  Box box{};
  int k = 4;
  int imax = 10;
  std::vector<std::string> suite = standard_suite();
};

/// key=value lines; '#' starts a comment. Keys: box, k, imax, suite (elements separated by ';').
inline Config read_config(std::istream& in, Config cfg = {}) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw SyntaxError("config line " + std::to_string(lineno) + " is not key=value", eq);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "box") {
      cfg.box = parse_box(value);
    } else if (key == "k") {
      cfg.k = parse_int(value);
    } else if (key == "imax") {
      cfg.imax = parse_int(value);
    } else if (key == "suite") {
      cfg.suite.clear();
      std::size_t start = 0;
      while (start <= value.size()) {
        const auto semi = value.find(';', start);
        std::string item = trim(value.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
        if (!item.empty()) cfg.suite.push_back(item);
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
    } else {
      throw SyntaxError("unknown config key '" + key + "' on line " + std::to_string(lineno), 0);
    }
  }
  return cfg;
}

/// One element per line, '#' comments.
inline std::vector<std::string> read_suite(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    out.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
  }
  return out;
}

struct Command {
  std::string verb;
  std::optional<std::string> element;
  Format format = Format::Text;
  std::optional<Box> box;
  std::optional<int> k;
  std::optional<int> imax;
  std::optional<std::string> suite_file;
  std::optional<std::string> config_file;
};

namespace detail {

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  return in;
}

inline Config resolve(const Command& c) {
  Config cfg;
  if (c.config_file) {
    auto in = open(*c.config_file);
    cfg = read_config(in);
  }
  if (c.box) cfg.box = *c.box;
  if (c.k) cfg.k = *c.k;
  if (c.imax) cfg.imax = *c.imax;
  if (c.suite_file) {
    auto in = open(*c.suite_file);
    cfg.suite = read_suite(in);
  }
  return cfg;
}

inline void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline std::string decomposition(const GradedElement& e) {
  std::string out;
  for (const auto& c : e.components()) out += "  grading " + std::to_string(*c.grading()) + ": " + format_graded(c) + "\n";
  return out;
}

/// Parses and insists on a nonzero homogeneous element of A1.
inline HomogeneousElement homogeneous(const std::string& text) {
  const GradedElement e = parse(text);
  if (!e.is_homogeneous())
    throw PreconditionError("element is not homogeneous; analysis needs a single grading. components:\n" +
                            decomposition(e));
  return HomogeneousElement::from(e);
}

inline int verdict_exit(const std::vector<CheckResult>& rs) {
  bool inconclusive = false;
  for (const auto& r : rs) {
    if (r.verdict == Verdict::Fail) return Exit::Failed;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Exit::Inconclusive : Exit::Ok;
}

inline int dispatch(const Command& c, std::ostream& out) {
  const Config cfg = resolve(c);
  const std::string& verb = c.verb;

  if (verb == "verify") {
    const VerifyOptions opt{cfg.k, cfg.box, 2};
    std::vector<CheckResult> rs;
    if (c.element)
      rs = verify_element(homogeneous(*c.element), *c.element, opt);
    else
      rs = verify_suite(cfg.suite, opt);
    if (c.format == Format::Json) {
      print_json(out, to_json(rs));
    } else if (c.format == Format::Latex) {
      out << "\\begin{tabular}{lllll}\n";
      for (const auto& r : rs)
        out << r.element << " & " << r.claim << " & " << r.closed_form << " & " << r.oracle << " & " << to_string(r.verdict)
            << "\\\\\n";
      out << "\\end{tabular}\n";
    } else {
      out << text(rs);
    }
    return verdict_exit(rs);
  }

  if (!c.element) throw PreconditionError(verb + " needs an element");

  if (verb == "eval") {
    const GradedElement e = parse(*c.element);
    if (c.format == Format::Json) {
      json j = to_json(e);
      j["homogeneous"] = e.is_homogeneous();
      print_json(out, j);
    } else if (c.format == Format::Latex) {
      out << latex(e) << "\n";
    } else {
      out << format_graded(e) << "\n";
      out << "ring: " << ring_name(e.ring()) << "\n";
      if (!e.is_homogeneous()) out << "components:\n" << decomposition(e);
    }
    return Exit::Ok;
  }

  const HomogeneousElement u = homogeneous(*c.element);

  if (verb == "analyze") {
    const Analysis a = analyze(u, {cfg.imax});
    if (c.format == Format::Json)
      print_json(out, to_json(a));
    else if (c.format == Format::Latex)
      out << latex(a);
    else
      out << text(a);
    return Exit::Ok;
  }
  if (verb == "classify") {
    const DixmierClass k = classify(u);
    if (c.format == Format::Json)
      print_json(out, {{"element", to_json(u.to_graded())}, {"class", to_string(k)}});
    else if (c.format == Format::Latex)
      out << latex_class(k) << "\n";
    else
      out << to_string(k) << "\n";
    return Exit::Ok;
  }
  if (verb == "centralizer") {
    const CentralizerA1 a1 = centralizer_a1(u);
    const CentralizerB b = centralizer_b(u);
    if (c.format == Format::Json) {
      json gens = json::array();
      for (const auto& g : a1.generators) gens.push_back(to_json(g));
      print_json(out, {{"A1", a1.describe()}, {"B", b.describe()}, {"mu_list", a1.mu_list}, {"generators", gens}});
    } else if (c.format == Format::Latex) {
      out << "C(u, A_1) = " << a1.describe() << "\\\\\n";
      if (b.generator) out << "v = " << latex(b.generator->v()) << "\\\\\n";
    } else {
      out << "C(u, A1) = " << a1.describe() << "\n";
      out << "C(u, B) = " << b.describe() << "\n";
      for (std::size_t i = 0; i < a1.generators.size(); ++i)
        out << "v^" << a1.mu_list[i] << " = " << format_graded(a1.generators[i]) << "\n";
    }
    return Exit::Ok;
  }
  if (verb == "nstructure") {
    if (u.n == 0) {
      if (c.format == Format::Json)
        print_json(out, {{"n_structure", nullptr}, {"N", "K[H]"}});
      else
        out << "N(u, A1) = K[H]\n";
      return Exit::Ok;
    }
    const NStructure ns = n_structure(u);
    if (c.format == Format::Json)
      print_json(out, to_json(ns));
    else if (c.format == Format::Latex)
      out << "v = " << latex(ns.generator.v()) << ",\\quad \\gamma = " << latex(ns.gamma) << ",\\quad \\mu = " << ns.mu
          << "\n";
    else
      out << text(ns);
    return Exit::Ok;
  }
  if (verb == "ideals") {
    require_alpha_x(u);
    std::vector<IdealDescriptor> ds;
    for (int k = 1; k <= cfg.imax; ++k) ds.push_back(ideal_i(u, k));
    if (c.format == Format::Json) {
      json arr = json::array();
      for (const auto& d : ds) arr.push_back({{"k", d.k}, {"exp", d.exponent}});
      print_json(out, {{"ideals", arr}});
    } else {
      for (const auto& d : ds)
        out << (c.format == Format::Latex ? "I_{" + std::to_string(d.k) + "} = u^{" + std::to_string(d.exponent) + "}K[u]\\\\"
                                          : "I_" + std::to_string(d.k) + " = u^" + std::to_string(d.exponent) + " K[u]")
            << "\n";
    }
    return Exit::Ok;
  }
  if (verb == "eigen") {
    const EigenReport r = eigen_decompose(u);
    if (c.format == Format::Json)
      print_json(out, to_json(r));
    else
      out << text(r);
    return Exit::Ok;
  }
  throw SyntaxError("unknown verb '" + verb + "'", 0);
}

}  // namespace detail

/// Runs one command. Diagnostics go to err; the exit code follows the Exit enum.
inline int run(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    return detail::dispatch(c, out);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return Exit::Syntax;
  } catch (const IterationCapError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return Exit::Inconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::Precondition;
  }
}

}  // namespace weyl::cli
