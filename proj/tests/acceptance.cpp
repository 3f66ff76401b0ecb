// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hessgkm/betti.hpp"
#include "hessgkm/classes.hpp"
#include "hessgkm/cohomology.hpp"
#include "hessgkm/error.hpp"
#include "hessgkm/gkm.hpp"
#include "hessgkm/report.hpp"
#include "hessgkm/rep.hpp"

using namespace hessgkm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

HessenbergFunction H(const char* s) { return HessenbergFunction::parse(s); }

std::vector<HessenbergFunction> up_to(int n) {
  std::vector<HessenbergFunction> all;
  for (int m = 1; m <= n; ++m)
    for (auto& h : enumerate_hessenberg(m)) all.push_back(std::move(h));
  return all;
}

// Records the first witness of a failure.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const HessenbergFunction& h, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = "h=" + h.str() + " " + what;
  }
  Outcome outcome() const {
    if (failed == 0) return {true, std::to_string(checked) + " checks"};
    return {false, std::to_string(failed) + "/" + std::to_string(checked) + " failed; first " + first};
  }
};

Outcome b2_example() {
  const auto j = analyze_report(H("3,3,4,5,5"), {});
  const auto& b2 = j["b2"];
  const bool ok = j["bottom_set"] == std::vector<int>{2} && j["l_set"] == std::vector<int>{3, 4} &&
                  b2["closed_form"] == 17 && b2["bruteforce"] == 17 && b2["graph_cohomology"] == 17 &&
                  b2["agree"] == true;
  return {ok, "closed form " + b2["closed_form"].dump() + ", brute force " + b2["bruteforce"].dump() +
                  ", graph cohomology " + b2["graph_cohomology"].dump()};
}

Outcome decomposition_example() {
  const auto j = h2_report(H("2,3,6,6,6,7,8,8"));
  const auto& f = j["formula"];
  const bool ok = f["decomposition"] == "3*M(8) + 2*M(7,1) + 2*M(6,2)" && f["dimension"] == 3 + 2 * 8 + 2 * 28 &&
                  f["dimension_matches_b2"] == true && j["b2_closed_form"] == 75;
  return {ok, f["decomposition"].get<std::string>() + ", dimension " + f["dimension"].dump() + " = b2"};
}

Outcome poincare_sweep() {
  Tally t;
  for (const auto& h : up_to(7)) {
    const auto ind = poincare_inductive(h);
    const auto brute = poincare_bruteforce(h);
    t.expect(ind == brute, h, "inductive " + ind.str() + " vs " + brute.str());
    if (h.is_connected()) t.expect(ind.is_palindromic(), h, "not palindromic");
    t.expect(ind.total() == factorial(h.size()), h, "total mass");
  }
  return t.outcome();
}

Outcome b2_sweep() {
  Tally t;
  for (const auto& h : up_to(7))
    if (h.size() >= 2 && h.is_connected())
      t.expect(b2_closed_form(h) == poincare_bruteforce(h).coefficient(1), h, "b2");
  return t.outcome();
}

Outcome gkm_sweep() {
  Tally t;
  for (const auto& h : up_to(5)) {
    const int n = h.size();
    const auto g = build_graph(h);
    for (int i = 1; i <= n; ++i) t.expect(check_gkm(class_x(n, i), g), h, "x_" + std::to_string(i));
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) t.expect(check_gkm(class_y(h, j, k), g), h, "y");
    for (int size : l_set(h))
      for (const auto& a : subsets_of_size(n, size)) t.expect(check_gkm(class_tau(h, a), g), h, "tau");
    for (int i = 2; i <= n; ++i)
      for (int k = 1; k <= n; ++k) t.expect(check_gkm(class_y_star(h, i, k), g), h, "y*");
  }
  return t.outcome();
}

Outcome relation_sweep() {
  Tally t;
  for (const auto& h : up_to(5)) {
    if (h.size() < 2 || !h.is_connected()) continue;
    const auto r = verify_relation_suite(h);
    for (const auto& c : r.checks) t.expect(c.passed, h, c.name);
  }
  return t.outcome();
}

Outcome presentation_sweep() {
  Tally t;
  for (const auto& h : up_to(5)) {
    if (h.size() < 2 || !h.is_connected()) continue;
    const auto r = verify_h2_realization(h);
    t.expect(r.presentation_rank == static_cast<std::int64_t>(r.graph_dimension) - h.size(), h, "rank");
    t.expect(r.ok(), h, "realization");
  }
  return t.outcome();
}

Outcome character_sweep() {
  Tally t;
  for (const auto& h : up_to(5)) {
    if (h.size() < 2 || !h.is_connected()) continue;
    const auto got = decompose(dot_action_character(h, 1));
    const auto want = beta_formula(h);
    t.expect(got == want, h, got.str() + " vs " + want.str());
  }
  return t.outcome();
}

Outcome higher_degree_sweep() {
  Tally t;
  for (const auto& h : up_to(6)) {
    const int n = h.size();
    for (int d : {2, 3}) {
      if (d > n - 1 || !h.has_gap(d)) continue;
      const auto brute = poincare_bruteforce(h);
      std::vector<std::int64_t> prefix;
      for (int p = 0; p <= d; ++p) prefix.push_back(brute.coefficient(p));
      t.expect(betti_low_degree(h, d) == prefix, h, "betti prefix d=" + std::to_string(d));
      if (n > 4 || d != 2) continue;
      const auto piece = ordinary_cohomology_piece(h, d);
      t.expect(static_cast<std::int64_t>(piece.dimension()) == h2d_presentation(h, d).rank, h, "quotient rank");
      const auto chi = dot_action_character(h, d);
      t.expect(decompose(chi) == h2d_decomposition_formula(h, d), h, "degree-d decomposition");
      const auto flag = flag_poincare(n);
      for (int p = 1; p < d; ++p)
        t.expect(dot_action_character(h, p) == ClassFunction::constant(n, Rational(static_cast<long>(flag.coefficient(p)))),
                 h, "trivial action p=" + std::to_string(p));
    }
  }
  return t.outcome();
}

Outcome length_sweep() {
  Tally t;
  for (const auto& h : up_to(6)) {
    const int n = h.size();
    const auto group = enumerate_group(n);
    for (int d = 1; d <= 4; ++d) {
      if (d > n - 1 || !h.has_gap(d)) continue;
      for (const auto& w : group) {
        const int lh = h_inversions(h, w), l = inversions(w);
        t.expect(lh >= d || lh == l, h, "l_h < d at " + w.str());
        t.expect(l >= d || lh == l, h, "l < d at " + w.str());
      }
    }
  }
  return t.outcome();
}

Outcome component_sweep() {
  Tally t;
  for (const auto& h : up_to(6)) {
    const int n = h.size();
    const auto comps = connected_components(build_graph(h)).size();
    t.expect((comps == 1) == h.is_connected(), h, "connectivity");
    if (!h.is_connected()) continue;
    for (int j : l_set(h)) {
      const auto c = connected_components(build_graph(reduce(h, j))).size();
      t.expect(static_cast<std::int64_t>(c) == binomial(n - 1, j - 1), h, "components of reduce at j=" + std::to_string(j));
    }
  }
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "b2 example via three independent paths", 5, b2_example},
      {2, "decomposition example at n=8", 1, decomposition_example},
      {3, "Poincare polynomials for all h with n<=7", 120, poincare_sweep},
      {4, "b2 closed form for connected h with n<=7", 120, b2_sweep},
      {5, "edge congruences of all classes, n<=5", 60, gkm_sweep},
      {6, "relation suite, n<=5", 60, relation_sweep},
      {7, "degree-2 presentation rank and realization, n<=5", 300, presentation_sweep},
      {8, "dot action character on H^2, n<=5", 300, character_sweep},
      {9, "higher degrees, n<=6 and d in {2,3}", 600, higher_degree_sweep},
      {10, "l_h = l below the gap, n<=6 and d<=4", 60, length_sweep},
      {11, "connectivity and components of reduce, n<=6", 60, component_sweep},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %s (%.2fs, limit %.0fs): %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_seconds,
                o.detail.c_str(), in_time ? "" : " [over time]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
