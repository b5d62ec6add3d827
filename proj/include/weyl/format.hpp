#pragma once

#include <string>

#include <json.hpp>

#include "weyl/graded.hpp"

namespace weyl {

enum class Style { Graded, Latex, Json };

inline std::string x_suffix(int j) {
  if (j == 0) return "";
  if (j == 1) return "*X";
  return "*X^" + std::to_string(j);
}

/// Terms in ascending grading, e.g. "(H - 1) + (1)/(H + 2)*X^-1".
inline std::string format_graded(const GradedElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [j, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c.num()) + ")";
    if (!c.is_polynomial()) out += "/(" + to_string(c.den()) + ")";
    out += x_suffix(j);
  }
  return out;
}

inline std::string latex_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

inline std::string latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (i == 0) {
      out += latex_rat(mag);
      continue;
    }
    if (mag != 1) out += latex_rat(mag) + " ";
    out += "H";
    if (i > 1) out += "^{" + std::to_string(i) + "}";
  }
  return out;
}

inline std::string latex(const RatFunc& f) {
  if (f.is_polynomial()) return latex(f.num());
  return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

inline std::string latex(const GradedElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [j, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    out += "\\left(" + latex(c) + "\\right)";
    if (j == 1)
      out += " X";
    else if (j != 0)
      out += " X^{" + std::to_string(j) + "}";
  }
  return out;
}

using json = nlohmann::json;

inline json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

inline Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(Int(std::to_string(v.get<long long>())));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw DomainError("expected a rational as a string or integer");
}

inline Poly poly_from_json(const json& v) {
  if (!v.is_array()) throw DomainError("expected an array of coefficients");
  std::vector<Rat> c;
  for (const auto& x : v) c.push_back(rat_from_json(x));
  return Poly(std::move(c));
}

inline json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline RatFunc ratfunc_from_json(const json& v) {
  Poly num = poly_from_json(v.at("num"));
  Poly den = v.contains("den") ? poly_from_json(v.at("den")) : Poly::constant(Rat(1));
  if (den.is_zero()) throw DomainError("zero denominator");
  return RatFunc(num, den);
}

/// {"ring": ..., "terms": [{"grading", "num", "den"}]}, coefficients ascending in H.
inline json to_json(const GradedElement& e) {
  json terms = json::array();
  for (const auto& [j, c] : e.terms()) {
    json t = to_json(c);
    t["grading"] = j;
    terms.push_back(std::move(t));
  }
  return {{"ring", std::string(ring_name(e.ring()))}, {"terms", std::move(terms)}};
}

inline GradedElement element_from_json(const json& v) {
  try {
    GradedElement::Terms terms;
    for (const auto& t : v.at("terms")) terms[t.at("grading").get<int>()] += ratfunc_from_json(t);
    return GradedElement(std::move(terms));
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed element: ") + ex.what());
  }
}

inline std::string format(const GradedElement& e, Style style) {
  switch (style) {
    case Style::Graded: return format_graded(e);
    case Style::Latex: return latex(e);
    case Style::Json: return to_json(e).dump();
  }
  return format_graded(e);
}

}  // namespace weyl
