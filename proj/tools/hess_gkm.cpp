// hess-gkm: Betti numbers, GKM graphs and S_n-module structure of regular
// semisimple Hessenberg varieties.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hessgkm/error.hpp"
#include "hessgkm/gkm.hpp"
#include "hessgkm/report.hpp"

using namespace hessgkm;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

bool is_input_error(Errc c) {
  return c == Errc::ParseError || c == Errc::NotWeaklyIncreasing || c == Errc::BelowDiagonal || c == Errc::OutOfRange;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad integer list '" + text + "'");
    }
  }
  return out;
}

// Any "status": "failed" below the top level.
bool has_failure(const Json& j) {
  if (j.is_object()) {
    if (auto it = j.find("status"); it != j.end() && *it == "failed") return true;
    for (const auto& [k, v] : j.items())
      if (has_failure(v)) return true;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (has_failure(v)) return true;
  }
  return false;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw Error(Errc::ParseError, "cannot open output file " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKM computations for regular semisimple Hessenberg varieties"};
  app.require_subcommand(1);

  RunOptions run;
  std::size_t budget = kDefaultLinearAlgebraBudget;
  std::string output = "-";
  app.add_option("--cap-n", run.cap_n, "largest n for brute force and graph construction")->capture_default_str();
  app.add_option("--la-budget", budget, "matrix-entry ceiling for congruence systems")->capture_default_str();
  app.add_option("--jobs", run.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--output", output, "output path, '-' for stdout")->capture_default_str();

  std::string h_text;
  std::string d_list;
  int d = 2;
  std::string format = "dot";
  int verify_n = 5;
  int decompose_n = 0;
  std::string values;

  auto* analyze = app.add_subcommand("analyze", "sets, Poincare polynomial and b2 of h");
  analyze->add_option("H", h_text, "Hessenberg function, e.g. 3,3,4,5,5")->required();
  analyze->add_option("--d", d_list, "comma list of d for the Λ_d sets");

  auto* graph = app.add_subcommand("graph", "export the labeled graph");
  graph->add_option("H", h_text)->required();
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();

  auto* h2 = app.add_subcommand("h2", "degree-2 presentation and module decomposition");
  h2->add_option("H", h_text)->required();

  auto* h2d = app.add_subcommand("h2d", "degree-2d presentation and module decomposition");
  h2d->add_option("H", h_text)->required();
  h2d->add_option("--d", d, "polynomial degree d >= 2")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "exhaustive checks over all h of size <= n");
  verify->add_option("--n", verify_n)->capture_default_str();
  verify->add_option("--d", d_list, "comma list of degrees for the higher-degree checks");
  verify->add_option("--jobs", run.jobs)->check(CLI::PositiveNumber);

  auto* decomp = app.add_subcommand("decompose", "write a class function in the M^lambda basis");
  auto* opt_h = decomp->add_option("H", h_text, "decompose the dot action character of this h");
  decomp->add_option("--d", d, "degree for H")->default_val(1);
  auto* opt_n = decomp->add_option("--n", decompose_n, "size of the symmetric group for --values");
  auto* opt_values = decomp->add_option("--values", values, "character values, cycle types in reverse-lex order");
  opt_h->excludes(opt_n)->excludes(opt_values);
  opt_n->needs(opt_values);
  opt_values->needs(opt_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  run.budget.max_entries = budget;

  try {
    Output out(output);
    std::ostream& os = out.stream();
    Json report;
    int code = 0;
    if (*analyze) {
      report = analyze_report(HessenbergFunction::parse(h_text), d_list.empty() ? std::vector<int>{} : parse_list(d_list), run);
      if (auto& p = report["poincare"]; p.contains("agree") && !p["agree"].get<bool>()) code = kExitFailed;
      if (auto& b = report["b2"]; b.contains("agree") && !b["agree"].get<bool>()) code = kExitFailed;
    } else if (*graph) {
      const auto g = build_graph(HessenbergFunction::parse(h_text), run.cap_n);
      os << (format == "dot" ? export_dot(g) : export_json(g));
      return 0;
    } else if (*h2) {
      report = h2_report(HessenbergFunction::parse(h_text), run);
    } else if (*h2d) {
      report = h2d_report(HessenbergFunction::parse(h_text), d, run);
    } else if (*verify) {
      VerifyOptions vo;
      vo.n = verify_n;
      vo.ds = d_list.empty() ? std::vector<int>{} : parse_list(d_list);
      vo.run = run;
      const VerifySummary s = run_verify(vo);
      report = s.to_json();
      code = s.exit_code();
    } else if (*decomp) {
      if (!h_text.empty()) {
        const auto h = HessenbergFunction::parse(h_text);
        report = decompose_report(dot_action_character(h, d, run.budget, run.jobs));
        report["h"] = std::vector<int>(h.values().begin(), h.values().end());
        report["d"] = d;
      } else {
        if (decompose_n < 1) throw Error(Errc::ParseError, "H, or --n with --values, required");
        const auto v = parse_list(values);
        const auto types = partitions_of(decompose_n);
        if (v.size() != types.size())
          throw Error(Errc::ParseError, std::to_string(types.size()) + " values expected, one per cycle type");
        ClassFunction chi(decompose_n);
        for (std::size_t i = 0; i < v.size(); ++i) chi.set(types[i], Rational(v[i]));
        report = decompose_report(chi);
      }
    }
    if (code == 0 && has_failure(report)) code = kExitFailed;
    os << report.dump(2) << '\n';
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitUsage : kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}
