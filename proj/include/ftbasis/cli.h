// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FTBASIS_CLI_H_
#define FTBASIS_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ftbasis/instance.h"
#include "ftbasis/solve_report.h"
#include "ftbasis/solver_fpt.h"

namespace ftbasis::cli {

inline constexpr std::string_view kSolutionSchema = "ftb-solution/1";

// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kExitOk = 0,          // solution found / set verified / file written
  kExitInternal = 1,    // post-hoc verification failed or unexpected error
  kExitInputError = 2,  // unreadable or invalid input, solver mismatch
  kExitNoSolution = 3,  // no k-fault-tolerant basis exists / set not tolerant
  kExitBudget = 4,      // enumeration budget exceeded
};

struct SolveOutcome {
  SolveReport report;
  int rank = 0;
  // The answer was re-checked in-process: a returned set with
  // IsFaultTolerant, a negative answer with ExistsFtBasis.
  bool verified = false;
};

// Runs `solver` (auto, fpt, bruteforce, partition, rank2) on the instance.
// auto: rank <= 2 -> rank2, unit-capacity partition -> partition, else fpt.
// Instance weights are honoured by bruteforce, partition and rank2; fpt
// minimizes size and reports the weight of its answer.
SolveOutcome SolveInstance(const Instance& instance, int k,
                           std::string_view solver,
                           const SearchOptions& options,
                           FptDetails* details = nullptr);

nlohmann::json SolutionToJson(const SolveOutcome& outcome, int k);
nlohmann::json TraceToJson(const ImportantTrace& trace);

// Least-squares slope of log(y) against log(x); pairs with a nonpositive
// coordinate are skipped. NaN with fewer than two usable points.
double LogLogSlope(std::span<const double> x, std::span<const double> y);

// Entry point of the `ftb` tool; returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ftbasis::cli

#endif  // FTBASIS_CLI_H_
