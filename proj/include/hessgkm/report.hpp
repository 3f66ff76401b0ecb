#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "hessgkm/cohomology.hpp"
#include "hessgkm/combinatorics.hpp"
#include "hessgkm/rep.hpp"

namespace hessgkm {

inline constexpr const char* kSchema = "hess-gkm/1";

struct RunOptions {
  int cap_n = kDefaultCapN;
  LinearAlgebraBudget budget;
  int jobs = 1;
};

using Json = nlohmann::ordered_json;

Json analyze_report(const HessenbergFunction& h, const std::vector<int>& ds, const RunOptions& opt = {});
Json h2_report(const HessenbergFunction& h, const RunOptions& opt = {});
Json h2d_report(const HessenbergFunction& h, int d, const RunOptions& opt = {});
Json decompose_report(const ClassFunction& chi);

enum class CheckStatus { Passed, Failed, Skipped };
std::string_view status_name(CheckStatus s);

struct CheckResult {
  std::string h;
  std::string check;
  CheckStatus status = CheckStatus::Passed;
  std::string expected;
  std::string got;
};

struct VerifyOptions {
  int n = 5;
  std::vector<int> ds;
  RunOptions run;
  /// Class-level checks evaluate every vertex; above this size they are skipped.
  int class_max_n = kDenseLimit;
};

struct VerifySummary {
  int n = 0;
  std::size_t functions = 0;
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const { return count(CheckStatus::Failed) == 0 ? 0 : 1; }
  Json to_json() const;
};

/// Every check for one Hessenberg function, in a fixed order.
std::vector<CheckResult> verify_function(const HessenbergFunction& h, const VerifyOptions& opt);

/// All Hessenberg functions with 2 <= size <= opt.n, parallel over functions.
VerifySummary run_verify(const VerifyOptions& opt);

}  // namespace hessgkm
