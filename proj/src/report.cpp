#include "hessgkm/report.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <sstream>

#include "hessgkm/betti.hpp"
#include "hessgkm/classes.hpp"
#include "hessgkm/error.hpp"
#include "hessgkm/gkm.hpp"

namespace hessgkm {

namespace {

Json rational_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

Json character_json(const ClassFunction& chi) {
  Json j = Json::object();
  for (const Partition& mu : partitions_of(chi.size())) j[mu.str()] = rational_json(chi.at(mu));
  return j;
}

Json header(const char* command, const HessenbergFunction& h) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["h"] = std::vector<int>(h.values().begin(), h.values().end());
  j["n"] = h.size();
  return j;
}

bool skippable(const Error& e) { return e.code() == Errc::BudgetExceeded || e.code() == Errc::CapExceeded; }

Json skipped(const Error& e) {
  Json j;
  j["status"] = "skipped";
  j["reason"] = e.what();
  return j;
}

void require_cap(const HessenbergFunction& h, const RunOptions& opt) {
  if (h.size() > opt.cap_n)
    throw Error(Errc::CapExceeded, "n=" + std::to_string(h.size()) + " exceeds cap " + std::to_string(opt.cap_n));
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string join64(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

Json analyze_report(const HessenbergFunction& h, const std::vector<int>& ds, const RunOptions& opt) {
  Json j = header("analyze", h);
  j["valid"] = true;
  j["connected"] = h.is_connected();
  j["dimension"] = dimension(h);
  j["bottom_set"] = bottom_set(h);
  j["l_set"] = l_set(h);
  Json lambda = Json::object();
  for (int d : ds) lambda[std::to_string(d)] = lambda_set(h, d);
  j["lambda_sets"] = std::move(lambda);

  const PoincarePolynomial inductive = poincare_inductive(h);
  Json poin;
  poin["inductive"] = inductive.coefficients();
  poin["text"] = inductive.str();
  std::optional<PoincarePolynomial> brute;
  try {
    brute = poincare_bruteforce(h, opt.cap_n);
    poin["bruteforce"] = brute->coefficients();
    poin["agree"] = *brute == inductive;
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    poin["bruteforce"] = skipped(e);
  }
  j["poincare"] = std::move(poin);

  Json b2;
  if (!h.is_connected()) {
    b2["status"] = "not-applicable";
    b2["reason"] = "h(j) >= j+1 fails; Γ(h) is disconnected";
  } else {
    const std::int64_t closed = b2_closed_form(h);
    b2["closed_form"] = closed;
    bool agree = inductive.coefficient(1) == closed;
    if (brute) {
      b2["bruteforce"] = brute->coefficient(1);
      agree = agree && brute->coefficient(1) == closed;
    }
    try {
      require_cap(h, opt);
      const std::int64_t rank = h2_rank(h, opt.budget);
      b2["graph_cohomology"] = rank;
      agree = agree && rank == closed;
    } catch (const Error& e) {
      if (!skippable(e)) throw;
      b2["graph_cohomology"] = skipped(e);
    }
    b2["agree"] = agree;
  }
  j["b2"] = std::move(b2);
  j["components"] = component_count(h);
  return j;
}

Json h2_report(const HessenbergFunction& h, const RunOptions& opt) {
  Json j = header("h2", h);
  const CohomologyPresentation p = h2_presentation(h);
  const std::int64_t b2 = b2_closed_form(h);
  j["b2_closed_form"] = b2;
  j["presentation"] = to_json(p);
  const ModuleDecomposition formula = beta_formula(h);
  Json f;
  f["decomposition"] = formula.str();
  f["multiplicities"] = formula.to_json();
  f["dimension"] = formula.dimension();
  f["dimension_matches_b2"] = formula.dimension() == b2;
  j["formula"] = std::move(f);

  try {
    require_cap(h, opt);
    const RealizationReport r = verify_h2_realization(h, opt.budget);
    Json real;
    real["status"] = r.ok() ? "passed" : "failed";
    real["graph_dimension"] = r.graph_dimension;
    real["quotient_dimension"] = r.quotient_dimension;
    real["realized_rank"] = r.realized_rank;
    real["generators_in_graph_cohomology"] = r.generators_in_graph_cohomology;
    real["relations_vanish"] = r.relations_vanish;
    j["realization"] = std::move(real);
  } catch (const Error& e) {
    if (!skippable(e)) throw;
    j["realization"] = skipped(e);
  }

  try {
    require_cap(h, opt);
    const ClassFunction chi = dot_action_character(h, 1, opt.budget, opt.jobs);
    const ModuleDecomposition computed = decompose(chi);
    Json c;
    c["status"] = computed == formula ? "passed" : "failed";
    c["values"] = character_json(chi);
    c["decomposition"] = computed.str();
    c["matches_formula"] = computed == formula;
    j["character"] = std::move(c);
  } catch (const Error& e) {
    if (!skippable(e)) throw;
    j["character"] = skipped(e);
  }
  return j;
}

Json h2d_report(const HessenbergFunction& h, int d, const RunOptions& opt) {
  Json j = header("h2d", h);
  j["d"] = d;
  const CohomologyPresentation p = h2d_presentation(h, d);
  const auto betti = betti_low_degree(h, d);
  j["lambda_set"] = lambda_set(h, d);
  j["betti_low_degree"] = betti;
  j["presentation"] = to_json(p);
  const ModuleDecomposition formula = h2d_decomposition_formula(h, d);
  Json f;
  f["decomposition"] = formula.str();
  f["multiplicities"] = formula.to_json();
  f["dimension"] = formula.dimension();
  f["dimension_matches_betti"] = formula.dimension() == betti.back();
  j["formula"] = std::move(f);

  const PoincarePolynomial flag = flag_poincare(h.size());
  Json lower = Json::array();
  for (int q = 1; q < d; ++q) {
    Json e;
    e["p"] = q;
    try {
      require_cap(h, opt);
      const ClassFunction chi = dot_action_character(h, q, opt.budget, opt.jobs);
      const auto expected = ClassFunction::constant(h.size(), Rational(static_cast<long>(flag.coefficient(q))));
      e["status"] = chi == expected ? "passed" : "failed";
      e["flag_betti"] = flag.coefficient(q);
      e["values"] = character_json(chi);
      e["trivial_action"] = chi == expected;
    } catch (const Error& err) {
      if (!skippable(err)) throw;
      e = skipped(err);
      e["p"] = q;
    }
    lower.push_back(std::move(e));
  }
  j["lower_degrees"] = std::move(lower);

  try {
    require_cap(h, opt);
    const ClassFunction chi = dot_action_character(h, d, opt.budget, opt.jobs);
    const ModuleDecomposition computed = decompose(chi);
    const std::int64_t dim = chi.at(Partition::from_composition(std::vector<int>(static_cast<std::size_t>(h.size()), 1)))
                                 .get_num()
                                 .get_si();
    Json c;
    const bool ok = computed == formula && dim == p.rank;
    c["status"] = ok ? "passed" : "failed";
    c["quotient_dimension"] = dim;
    c["values"] = character_json(chi);
    c["decomposition"] = computed.str();
    c["matches_formula"] = computed == formula;
    j["character"] = std::move(c);
  } catch (const Error& e) {
    if (!skippable(e)) throw;
    j["character"] = skipped(e);
  }
  return j;
}

Json decompose_report(const ClassFunction& chi) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "decompose";
  j["n"] = chi.size();
  j["character"] = character_json(chi);
  const ModuleDecomposition m = decompose(chi);
  j["decomposition"] = m.str();
  j["multiplicities"] = m.to_json();
  j["dimension"] = m.dimension();
  j["nonnegative"] = m.all_nonnegative();
  return j;
}

// ---------------------------------------------------------------------------
// Verification sweep

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Passed:
      return "passed";
    case CheckStatus::Failed:
      return "failed";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

std::size_t VerifySummary::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const CheckResult& r) { return r.status == s; }));
}

Json VerifySummary::to_json() const {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["n"] = n;
  j["functions"] = functions;
  j["checks"] = results.size();
  j["passed"] = count(CheckStatus::Passed);
  j["failed"] = count(CheckStatus::Failed);
  j["skipped"] = count(CheckStatus::Skipped);
  Json failures = Json::array();
  Json skips = Json::array();
  for (const CheckResult& r : results) {
    if (r.status == CheckStatus::Passed) continue;
    Json e;
    e["h"] = r.h;
    e["check"] = r.check;
    e["expected"] = r.expected;
    e["got"] = r.got;
    (r.status == CheckStatus::Failed ? failures : skips).push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  j["skipped_checks"] = std::move(skips);
  j["ok"] = exit_code() == 0;
  return j;
}

namespace {

class Recorder {
 public:
  explicit Recorder(const HessenbergFunction& h) : h_(h.str()) {}

  template <class F>
  void run(const std::string& check, F&& body) {
    CheckResult r{h_, check, CheckStatus::Passed, "", ""};
    try {
      auto [expected, got] = body();
      r.expected = std::move(expected);
      r.got = std::move(got);
      r.status = r.expected == r.got ? CheckStatus::Passed : CheckStatus::Failed;
    } catch (const Error& e) {
      r.status = skippable(e) ? CheckStatus::Skipped : CheckStatus::Failed;
      r.got = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::Failed;
      r.got = e.what();
    }
    results_.push_back(std::move(r));
  }

  void skip(const std::string& check, const std::string& reason) {
    results_.push_back({h_, check, CheckStatus::Skipped, "", reason});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string h_;
  std::vector<CheckResult> results_;
};

using Outcome = std::pair<std::string, std::string>;

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<CheckResult> verify_function(const HessenbergFunction& h, const VerifyOptions& opt) {
  const int n = h.size();
  Recorder rec(h);
  const bool connected = h.is_connected();

  std::optional<PoincarePolynomial> brute;
  rec.run("poincare", [&]() -> Outcome {
    brute = poincare_bruteforce(h, opt.run.cap_n);
    const PoincarePolynomial ind = poincare_inductive(h);
    std::string expected = brute->str() + "; total " + std::to_string(factorial(n));
    std::string got = ind.str() + "; total " + std::to_string(ind.total());
    if (connected) {
      expected += "; palindromic";
      got += ind.is_palindromic() ? "; palindromic" : "; not palindromic";
    }
    return {expected, got};
  });

  if (connected && brute) {
    rec.run("b2_closed_form", [&]() -> Outcome {
      return {std::to_string(brute->coefficient(1)), std::to_string(b2_closed_form(h))};
    });
  }

  rec.run("components", [&]() -> Outcome {
    const auto g = build_graph(h, opt.run.cap_n);
    const auto comps = connected_components(g).size();
    std::string expected = std::to_string(component_count(h)) + " components; connected=" + yes(connected);
    std::string got = std::to_string(comps) + " components; connected=" + yes(comps == 1);
    if (brute) {
      expected += "; b0=" + std::to_string(component_count(h));
      got += "; b0=" + std::to_string(brute->coefficient(0));
    }
    return {expected, got};
  });

  const auto ls = l_set(h);
  if (connected && !ls.empty()) {
    rec.run("reduce_components", [&]() -> Outcome {
      std::string expected, got;
      for (int j : ls) {
        const auto g = build_graph(reduce(h, j), opt.run.cap_n);
        expected += "j=" + std::to_string(j) + ":" + std::to_string(binomial(n - 1, j - 1)) + " ";
        got += "j=" + std::to_string(j) + ":" + std::to_string(connected_components(g).size()) + " ";
      }
      return {expected, got};
    });
  }

  rec.run("lh_equals_l", [&]() -> Outcome {
    if (n > opt.run.cap_n) throw Error(Errc::CapExceeded, "n exceeds cap");
    std::size_t bad = 0;
    for (int d = 1; d <= std::min(4, n - 1); ++d) {
      if (!h.has_gap(d)) continue;
      for (const Permutation& w : enumerate_group(n, n)) {
        const int lh = h_inversions(h, w);
        const int l = inversions(w);
        if ((lh < d && lh != l) || (l < d && lh != l)) ++bad;
      }
    }
    return {"0 violations", std::to_string(bad) + " violations"};
  });

  if (n > opt.class_max_n) {
    rec.skip("gkm_membership", "n above class limit " + std::to_string(opt.class_max_n));
  } else {
    rec.run("gkm_membership", [&]() -> Outcome {
      const auto g = build_graph(h, opt.run.cap_n);
      std::vector<std::string> bad;
      auto test = [&](const EquivariantClass& f, const std::string& name) {
        if (!check_gkm(f, g)) bad.push_back(name);
      };
      for (int i = 1; i <= n; ++i) test(class_x(n, i), "x_" + std::to_string(i));
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) test(class_y(h, j, k), "y_" + std::to_string(j) + "," + std::to_string(k));
      for (int j : ls)
        for (const auto& a : subsets_of_size(n, j)) test(class_tau(h, a), "tau_" + join(a));
      for (int i = 2; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
          test(class_y_star(h, i, k), "y*_" + std::to_string(i) + "," + std::to_string(k));
      std::string got = bad.empty() ? "all pass" : "";
      for (const auto& b : bad) got += b + " ";
      return {"all pass", got};
    });
  }

  if (connected) {
    if (n > opt.class_max_n) {
      rec.skip("relations", "n above class limit " + std::to_string(opt.class_max_n));
    } else {
      rec.run("relations", [&]() -> Outcome {
        const RelationReport r = verify_relation_suite(h);
        std::string got = "all hold";
        for (const auto& c : r.checks)
          if (!c.passed) got = (got == "all hold" ? "" : got + "; ") + c.name + " " + c.detail;
        return {"all hold", got};
      });
    }

    rec.run("h2_presentation", [&]() -> Outcome {
      if (n > opt.run.cap_n) throw Error(Errc::CapExceeded, "n exceeds cap");
      const RealizationReport r = verify_h2_realization(h, opt.run.budget);
      const std::int64_t b2 = b2_closed_form(h);
      std::ostringstream e, g;
      e << "rank " << b2 << "; quotient " << b2 << "; realized " << b2 << "; in graph cohomology; relations vanish";
      g << "rank " << r.presentation_rank << "; quotient " << r.quotient_dimension << "; realized " << r.realized_rank
        << (r.generators_in_graph_cohomology ? "; in graph cohomology" : "; outside graph cohomology")
        << (r.relations_vanish ? "; relations vanish" : "; relations do not vanish");
      return {e.str(), g.str()};
    });

    rec.run("equivariant_formality", [&]() -> Outcome {
      if (n > opt.run.cap_n) throw Error(Errc::CapExceeded, "n exceeds cap");
      const std::int64_t rank = h2_rank(h, opt.run.budget);
      if (!brute) throw Error(Errc::CapExceeded, "no brute-force Betti numbers");
      return {std::to_string(brute->coefficient(1)), std::to_string(rank)};
    });

    rec.run("h2_character", [&]() -> Outcome {
      if (n > opt.run.cap_n) throw Error(Errc::CapExceeded, "n exceeds cap");
      const ModuleDecomposition computed = decompose(dot_action_character(h, 1, opt.run.budget));
      return {beta_formula(h).str(), computed.str()};
    });
  }

  for (int d : opt.ds) {
    if (d < 2 || d > n - 1 || !h.has_gap(d)) continue;
    const std::string tag = "(d=" + std::to_string(d) + ")";
    rec.run("betti_low_degree" + tag, [&]() -> Outcome {
      if (!brute) throw Error(Errc::CapExceeded, "no brute-force Betti numbers");
      std::vector<std::int64_t> prefix;
      for (int i = 0; i <= d; ++i) prefix.push_back(brute->coefficient(i));
      const auto formula = betti_low_degree(h, d);
      const std::int64_t rank = h2d_presentation(h, d).rank;
      const std::int64_t dim = h2d_decomposition_formula(h, d).dimension();
      return {join64(prefix) + "; rank " + std::to_string(prefix.back()) + "; module dim " + std::to_string(prefix.back()),
              join64(formula) + "; rank " + std::to_string(rank) + "; module dim " + std::to_string(dim)};
    });
    rec.run("h2d_cohomology" + tag, [&]() -> Outcome {
      if (n > opt.run.cap_n) throw Error(Errc::CapExceeded, "n exceeds cap");
      // Fail fast on budget before the lower degrees are computed.
      if (congruence_system_entries(h, d) > opt.run.budget.max_entries)
        throw Error(Errc::BudgetExceeded, "degree-" + std::to_string(d) + " system over budget");
      const PoincarePolynomial flag = flag_poincare(n);
      std::string expected, got;
      for (int q = 1; q < d; ++q) {
        const ClassFunction chi = dot_action_character(h, q, opt.run.budget);
        expected += "p=" + std::to_string(q) + " trivial of dim " + std::to_string(flag.coefficient(q)) + "; ";
        const bool trivial = chi == ClassFunction::constant(n, Rational(static_cast<long>(flag.coefficient(q))));
        got += "p=" + std::to_string(q) + (trivial ? " trivial" : " nontrivial") + " of dim " +
               chi.at(cycle_type(Permutation::identity(n))).get_str() + "; ";
      }
      const ClassFunction chi = dot_action_character(h, d, opt.run.budget);
      expected += "p=" + std::to_string(d) + " " + h2d_decomposition_formula(h, d).str() + "; spans";
      got += "p=" + std::to_string(d) + " " + decompose(chi).str() + (span_check(h, d, opt.run.budget).spans() ? "; spans" : "; does not span");
      return {expected, got};
    });
  }
  return rec.take();
}

VerifySummary run_verify(const VerifyOptions& opt) {
  if (opt.n > opt.run.cap_n)
    throw Error(Errc::CapExceeded, "n=" + std::to_string(opt.n) + " exceeds cap " + std::to_string(opt.run.cap_n));
  std::vector<HessenbergFunction> all;
  for (int m = 2; m <= opt.n; ++m)
    for (auto& h : enumerate_hessenberg(m)) all.push_back(std::move(h));

  std::vector<std::vector<CheckResult>> per(all.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < all.size(); i = next++) per[i] = verify_function(all[i], opt);
  };
  const int jobs = std::max(1, opt.run.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::future<void>> pending;
    for (int t = 0; t < jobs; ++t) pending.push_back(std::async(std::launch::async, worker));
    for (auto& f : pending) f.get();
  }

  VerifySummary s;
  s.n = opt.n;
  s.functions = all.size();
  for (auto& v : per)
    for (auto& r : v) s.results.push_back(std::move(r));
  return s;
}

}  // namespace hessgkm
