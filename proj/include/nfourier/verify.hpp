#pragma once

#include <string>
#include <vector>

#include "nfourier/corpus.hpp"

namespace nfourier {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;

  void add(std::string name, bool pass, std::string detail = "") {
    all_pass &= pass;
    checks.push_back(CheckResult{std::move(name), pass, std::move(detail)});
  }
};

/// True when `name` matches the scope filter (empty scope = everything,
/// otherwise a case-sensitive substring match against any entry).
bool scope_matches(const std::vector<std::string>& scope, const std::string& name);

/// Involution, graded-exchange, orthogonality and counting checks over the
/// built-in group corpus.
SuiteReport run_fourier_suite(const std::vector<std::string>& scope, bool parallel = true);

/// Hat factorization, basis invertibility, xi independence, degeneration and
/// inner-invariance checks over the built-in graded corpus.
SuiteReport run_graded_suite(const std::vector<std::string>& scope, bool parallel = true);

/// Batched form of the xi-independence check: hat vectors of every M^0 pair
/// at the given multiples, all extension choices, pairwise proportional by
/// exact roots of unity.
CheckResult xi_independence_sweep(const std::string& name, const ZGradedGroup& d,
                                  const std::vector<int>& multiples);

}  // namespace nfourier
