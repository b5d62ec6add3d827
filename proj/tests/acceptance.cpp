// One PASS/FAIL line per acceptance criterion. Nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "weyl/weyl.hpp"

using namespace weyl;

namespace {

HomogeneousElement hom(const std::string& s) { return HomogeneousElement::from(parse(s)); }

Poly lin(long r) { return Poly::linear_root(Rat(r)); }

struct Criterion {
  std::ostringstream notes;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
};

// 1. I_1 I_{i(d+1)-1} != I_{i(d+1)}, closed form against the oracle
void ideals_problem5(Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto* s : {"H*X", "H^2*X"}) {
    auto u = hom(s);
    const int d = u.degree();
    for (int k = 1; k <= 10; ++k) c.require(ideal_i(u, k).exponent == k - k / (d + 1), std::string(s) + " I_" + std::to_string(k));
    std::map<int, int> got;
    for (int k = 1; k <= 6; ++k) {
      auto sb = oracle::grow_until_saturated(u, k, Box{4, 6}, 4);
      auto r = oracle::oracle_ideal(u, k, sb.box);
      c.require(sb.saturated && r.saturated, std::string(s) + " saturation k=" + std::to_string(k));
      c.require(r.exponent == ideal_i(u, k).exponent, std::string(s) + " oracle I_" + std::to_string(k));
      got[k] = r.exponent.value_or(-1);
    }
    for (int i = 1; i <= 2; ++i) {
      const int k = i * (d + 1);
      if (k <= 6) c.require(got[1] + got[k - 1] != got[k], std::string(s) + " oracle product i=" + std::to_string(i));
    }
    auto rows = problem5_report(u, 2);
    c.require(rows.size() == 2 && rows[0].differs() && rows[1].differs(), std::string(s) + " product differs");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 60.0, "runtime");
  c.notes << " (" << secs << " s)";
}

// 2. C(u, A1) = K[u] and ndeg Y = d + 1
void centralizer_and_ndeg_y(Criterion& c) {
  for (int d = 1; d <= 4; ++d) {
    auto u = HomogeneousElement::make(Poly::monomial(Rat(1), d), 1);
    auto sb = oracle::grow_until_saturated(u, 0, Box{6, 8}, 4);
    c.require(sb.saturated, "saturation d=" + std::to_string(d));
    auto k = oracle::kernel_power(u, 0, sb.box);
    std::map<int, std::vector<Poly>> powers;
    GradedElement w = GradedElement::scalar(Rat(1));
    for (int a = 0; a <= sb.box.grading; ++a) {
      Poly p = w.v_coefficients().begin()->second;
      if (p.degree() <= sb.box.degree) powers[a].push_back(p);
      w = w * u.to_graded();
    }
    c.require(detail::blocks_agree(powers, k.blocks, sb.box.degree), "C = K[u] d=" + std::to_string(d));
    c.require(ndeg(GradedElement::y(), u) == d + 1, "ndeg Y d=" + std::to_string(d));
    c.require(oracle::oracle_ndeg(u, GradedElement::y()) == d + 1, "oracle ndeg Y d=" + std::to_string(d));
  }
}

// 3. literal iterated ad identities
void delta_identities(Criterion& c) {
  for (const auto* s : {"H*X", "H^2*X"}) {
    auto u = hom(s);
    const int d = u.degree();
    for (int i = 1; i <= 4; ++i) c.require(delta_phi_identity(u, i).holds(), std::string(s) + " phi_" + std::to_string(i));
    for (int i = 1; i <= 2; ++i) c.require(delta_y_identity(u, i).holds(), std::string(s) + " Y^" + std::to_string(i));
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        if (i + (d + 1) * j <= 6) {
          auto chk = delta_phi_y_identity(u, i, j);
          c.require(chk.holds(), std::string(s) + " " + chk.name);
        }
  }
}

// 4. canonical generator
void canonical_generators(Criterion& c) {
  for (const auto* s : {"X^2", "H*X", "H*(H-1)*X^2", "H*(H-3)*X^2", "Y", "Y^2"}) {
    auto u = hom(s);
    auto g = canonical_generator(u);
    const RatFunc alpha = u.b_coefficient();
    c.require(twisted_product(g.beta, g.t, g.m) == alpha, std::string(s) + " product");
    c.require(g.beta.is_monic(), std::string(s) + " monic");
    c.require(g.v().pow(static_cast<unsigned>(g.m)) == u.monic_graded(), std::string(s) + " v^m = u");
    c.require(alpha.shift(g.t) / alpha == g.beta.shift(u.n) / g.beta, std::string(s) + " shift ratio");
    c.require(ad(u.to_graded(), g.v()).is_zero(), std::string(s) + " [v, u] = 0");
    auto again = solve_beta(alpha, g.t, g.m);
    c.require(again && *again == g.beta, std::string(s) + " re-solve");
  }
}

// 5. N structure of H(H-3)X^2
void n_structure_example(Criterion& c) {
  auto u = hom("H*(H-3)*X^2");
  auto ns = n_structure(u);
  const Poly h = Poly::h();
  c.require(ns.mu_list == std::vector<int>{0, 3}, "mu list");
  c.require(ns.v_power(3) == poly_element(h * lin(2) * lin(4)) * GradedElement::x().pow(3), "v^3");
  c.require(membership(ns.v_power(3), Ring::A1), "v^3 in A1");
  c.require(ns.g_list.size() == 2 && ns.g_list[0] == lin(1) && ns.g_list[1] == Poly{1}, "g");
  c.require(!ns.f_list.empty() && ns.f_list[0] == Poly{1}, "f_1");
  auto sb = oracle::grow_until_saturated(u, 0, Box{8, 12}, 3);
  c.require(sb.saturated, "saturation");
  c.require(detail::blocks_agree(closed_centralizer(u, sb.box), oracle::kernel_power(u, 0, sb.box).blocks, sb.box.degree),
            "oracle centralizer");
  int count = 0;
  for (const auto& b : principal_basis(u, Box{6, 4})) {
    ++count;
    c.require(ndeg(b.element, u) == b.predicted_ndeg, "ndeg " + b.label);
  }
  c.notes << " (" << count << " basis elements)";
}

// 6. classification table
void classification(Criterion& c) {
  const std::vector<std::pair<const char*, DixmierClass>> table = {
      {"X", DixmierClass::Delta1},           {"Y", DixmierClass::Delta1}, {"H*X", DixmierClass::Delta2},
      {"H*(H-3)*X^2", DixmierClass::Delta2}, {"H", DixmierClass::Delta3}, {"H^2", DixmierClass::Delta5},
      {"H^3", DixmierClass::Delta5}};
  for (const auto& [s, k] : table) c.require(classify(hom(s)) == k, s);
}

// 7. simplicity and global dimension of N(u, A1)
void simplicity(Criterion& c) {
  struct Row {
    const char* s;
    bool simple;
    GlobalDimension gd;
  };
  for (const auto& r : {Row{"H*X", false, GlobalDimension::Two}, Row{"(H-1/2)*X", true, GlobalDimension::One},
                        Row{"H^2*X", false, GlobalDimension::Infinite}}) {
    auto u = hom(r.s);
    c.require(is_simple_n(u) == r.simple, std::string(r.s) + " simple");
    c.require(global_dimension_n(u) == r.gd, std::string(r.s) + " gl.dim");
    c.require(gwa_relations_hold(u), std::string(r.s) + " GWA relations");
  }
}

// 8. type change under multiplication by alpha(H)
void type_change(Criterion& c) {
  const std::vector<Poly> alphas = {Poly{5}, Poly::h(), Poly{1, 0, 1}};
  const std::vector<DixmierClass> from_x = {DixmierClass::Delta1, DixmierClass::Delta2, DixmierClass::Delta2};
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    auto [b, a] = type_change_check(hom("X"), alphas[i]);
    c.require(b == DixmierClass::Delta1 && a == from_x[i], "p=X alpha=" + to_string(alphas[i]));
    auto [b2, a2] = type_change_check(hom("H*X"), alphas[i]);
    c.require(b2 == DixmierClass::Delta2 && a2 == DixmierClass::Delta2, "p=HX alpha=" + to_string(alphas[i]));
  }
}

// 9. phi recurrence and the Leibniz rule for powers of ad
void recurrence_leibniz(Criterion& c) {
  for (int n = 0; n <= 50; ++n) {
    const Poly prev = n == 0 ? Poly{} : phi(n - 1);
    c.require(phi(n).shift(1) - phi(n) == prev, "phi_" + std::to_string(n));
  }
  testing::Gen g(2024);
  auto small = [&g] {
    GradedElement e;
    for (int t = static_cast<int>(g.integer(1, 2)); t > 0; --t)
      e += poly_element(g.poly(2, 3)) * GradedElement::v(static_cast<int>(g.integer(-2, 2)));
    return e;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const GradedElement u = small(), a = small(), b = small();
    const int n = static_cast<int>(g.integer(1, 3));
    GradedElement rhs;
    for (int i = 0; i <= n; ++i)
      rhs += Rat(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i))) * ad_power(u, a, i) * ad_power(u, b, n - i);
    c.require(ad_power(u, a * b, n) == rhs, "Leibniz trial " + std::to_string(trial));
  }
}

// 10. dimension growth
void growth(Criterion& c) {
  auto dims = dimension_growth(hom("H*X"), 20, GrowthMode::AlphaX);
  int sum = 0;
  for (int n = 1; n <= 20; ++n) {
    sum += dims[static_cast<std::size_t>(n - 1)];
    c.require(sum == n * (n + 1) / 2, "HX partial sum n=" + std::to_string(n));
  }
  auto u = hom("H*(H-3)*X^2");
  auto ns = n_structure(u);
  auto gd = dimension_growth(u, 20, GrowthMode::Generic);
  int total = 0;
  for (int n = 1; n <= 20; ++n) {
    total += gd[static_cast<std::size_t>(n - 1)];
    c.require(total == ns.mu * ns.gamma.degree() * n * (n + 1) / 2, "H(H-3)X^2 n=" + std::to_string(n));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"ideals I_k and Problem 5 inequality (HX, H^2X)", ideals_problem5},
      {"C(u,A1) = K[u] and ndeg Y = d+1, d = 1..4", centralizer_and_ndeg_y},
      {"iterated ad identities for phi_i, Y^i, phi_i Y^j", delta_identities},
      {"canonical generator equations, v^m = u, uniqueness", canonical_generators},
      {"N structure of H(H-3)X^2", n_structure_example},
      {"classification table", classification},
      {"simplicity and global dimension of N(u,A1)", simplicity},
      {"type change under alpha(H)", type_change},
      {"phi recurrence and Leibniz rule", recurrence_leibniz},
      {"dimension growth", growth},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    Criterion c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << ++index << ". " << name << c.notes.str() << "\n";
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
