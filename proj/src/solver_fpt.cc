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

#include "ftbasis/solver_fpt.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>

#include "ftbasis/combinations.h"
#include "ftbasis/matroid_ops.h"
#include "ftbasis/subset_search.h"

namespace ftbasis {
namespace {

mpz_class Power(const mpz_class& base, unsigned long exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

void CheckSeed(const MatroidOracle& m, const ElementSet& seed, int h) {
  CheckInRange(seed, m.ground_size());
  if (h < 1 || seed.size() != static_cast<std::size_t>(h)) {
    throw InputError("seed " + seed.ToString() + " must have exactly h = " +
                     std::to_string(h) + " >= 1 elements");
  }
  if (!m.IsIndependent(seed)) {
    throw InputError("seed " + seed.ToString() + " is not independent");
  }
}

class ImportantSearch {
 public:
  ImportantSearch(const MatroidOracle& m, const ImportantConfig& config)
      : m_(m), config_(config) {}

  ElementSet Run(const ElementSet& x, ImportantTrace* trace) {
    const int h = static_cast<int>(x.size());
    if (h < 1 || h > config_.rank()) {
      throw InputError("important-element search needs 1 <= |X| <= r, got " +
                       std::to_string(h));
    }
    if (trace != nullptr) {
      trace->input = x;
      trace->h = h;
    }
    if (config_.memoize()) {
      if (auto it = memo_.find(x.vector()); it != memo_.end()) {
        if (trace != nullptr) {
          trace->outcome = ImportantTrace::Outcome::kCached;
          trace->output_size = it->second.size();
        }
        return it->second;
      }
    }
    CheckSeed(m_, x, h);

    const ElementSet closure = Closure(m_, x);
    ElementSet out;
    ImportantTrace::Outcome outcome;
    std::size_t uniform_size = 0;
    const std::size_t solution_cap =
        static_cast<std::size_t>(config_.max_solution_size());
    if (h == 1) {
      if (closure.size() < solution_cap) {
        out = closure;
        outcome = ImportantTrace::Outcome::kClosureSmall;
      } else {
        // Any (k+1)r elements will do; take the lowest ids.
        out = ElementSet::FromSorted(std::vector<ElementId>(
            closure.begin(), closure.begin() + solution_cap));
        outcome = ImportantTrace::Outcome::kBaseCapped;
      }
    } else {
      const mpz_class threshold = config_.Threshold(h);
      if (mpz_class(static_cast<unsigned long>(closure.size())) <= threshold) {
        out = closure;
        outcome = ImportantTrace::Outcome::kClosureSmall;
      } else {
        // threshold < |cl(X)| <= n, so it fits.
        const std::size_t cap = threshold.get_ui();
        const ElementSet uniform = GreedyUniformWithin(m_, x, h, cap, closure);
        uniform_size = uniform.size();
        if (uniform.size() == cap) {
          out = uniform;
          outcome = ImportantTrace::Outcome::kFullUniform;
        } else {
          outcome = ImportantTrace::Outcome::kRecursed;
          std::vector<ElementId> sub(static_cast<std::size_t>(h - 1));
          ForEachCombination(
              uniform.size(), sub.size(),
              [&](std::span<const std::size_t> pos) {
                for (std::size_t i = 0; i < pos.size(); ++i) {
                  sub[i] = uniform[pos[i]];
                }
                ImportantTrace* child = nullptr;
                if (trace != nullptr) child = &trace->children.emplace_back();
                out = out.Union(Run(ElementSet::FromSorted(sub), child));
                return true;
              });
        }
      }
    }

    if (trace != nullptr) {
      trace->outcome = outcome;
      trace->closure_size = closure.size();
      trace->uniform_size = uniform_size;
      trace->output_size = out.size();
    }
    if (config_.memoize()) memo_.emplace(x.vector(), out);
    return out;
  }

 private:
  const MatroidOracle& m_;
  const ImportantConfig& config_;
  std::map<std::vector<ElementId>, ElementSet> memo_;
};

}  // namespace

ImportantConfig::ImportantConfig(int k, int rank, bool memoize)
    : k_(k), rank_(rank), memoize_(memoize) {
  if (k < 0) throw InputError("k must be >= 0");
  if (rank < 1) throw InputError("important-element search needs rank >= 1");
}

mpz_class ImportantConfig::Threshold(int h) const {
  const mpz_class span = max_solution_size();
  return mpz_class(h - 1) * Power(span, static_cast<unsigned long>(rank_ - 1)) +
         span;
}

mpz_class ImportantConfig::OutputBound(int h) const {
  const unsigned long hh = static_cast<unsigned long>(h) * h;
  return Power(mpz_class(h), hh) *
         Power(mpz_class(max_solution_size()), rank_ * hh);
}

int ImportantTrace::Depth() const {
  int deepest = 0;
  for (const ImportantTrace& child : children) {
    deepest = std::max(deepest, child.Depth());
  }
  return deepest + 1;
}

std::string_view OutcomeName(ImportantTrace::Outcome outcome) {
  switch (outcome) {
    case ImportantTrace::Outcome::kClosureSmall:
      return "closure-small";
    case ImportantTrace::Outcome::kBaseCapped:
      return "base-capped";
    case ImportantTrace::Outcome::kFullUniform:
      return "full-uniform";
    case ImportantTrace::Outcome::kRecursed:
      return "recursed";
    case ImportantTrace::Outcome::kCached:
      return "cached";
  }
  return "unknown";
}

ElementSet GreedyUniformWithin(const MatroidOracle& m, const ElementSet& seed,
                               int h, std::size_t cap,
                               const ElementSet& closure) {
  std::vector<ElementId> z = seed.vector();
  std::vector<ElementId> probe(static_cast<std::size_t>(h));
  // One ascending pass is enough: a rejected x stays rejected because Z
  // only grows.
  for (ElementId x : closure) {
    if (z.size() >= cap) break;
    if (std::binary_search(z.begin(), z.end(), x)) continue;
    const bool uniform = ForEachCombination(
        z.size(), static_cast<std::size_t>(h - 1),
        [&](std::span<const std::size_t> pos) {
          for (std::size_t i = 0; i < pos.size(); ++i) probe[i] = z[pos[i]];
          probe[pos.size()] = x;
          std::sort(probe.begin(), probe.end());
          return m.IsIndependent(probe);
        });
    if (uniform) z.insert(std::lower_bound(z.begin(), z.end(), x), x);
  }
  return ElementSet::FromSorted(std::move(z));
}

ElementSet GreedyUniform(const MatroidOracle& m, const ElementSet& seed, int h,
                         std::size_t cap) {
  CheckSeed(m, seed, h);
  if (cap < static_cast<std::size_t>(h)) {
    throw InputError("greedy cap must be at least h");
  }
  return GreedyUniformWithin(m, seed, h, cap, Closure(m, seed));
}

ElementSet Important(const MatroidOracle& m, const ElementSet& x,
                     const ImportantConfig& config, ImportantTrace* trace) {
  if (x.empty()) throw InputError("important-element search needs X != {}");
  ImportantSearch search(m, config);
  return search.Run(x, trace);
}

SolveReport SolveFpt(const MatroidOracle& m, int k,
                     const SearchOptions& options, FptDetails* details) {
  if (k < 0) throw InputError("k must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  CallMeter meter(m);
  SolveReport report;
  report.stats.solver = "fpt";
  auto finish = [&](std::optional<ElementSet> solution) {
    report.exists = solution.has_value();
    if (solution) {
      report.weight = static_cast<std::int64_t>(solution->size());
      report.solution = std::move(solution);
    }
    report.stats.oracle_calls = meter.calls();
    report.stats.wall_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return report;
  };

  LoopFreeMatroid loop_free = RemoveLoops(m);
  const ElementSet basis = FindBasis(loop_free.view);
  const int rank = static_cast<int>(basis.size());
  if (details != nullptr) {
    details->rank = rank;
    details->loops = loop_free.loops;
  }
  if (rank == 0) return finish(ElementSet{});

  const ImportantConfig config(k, rank);
  ImportantTrace* trace = details != nullptr ? &details->trace : nullptr;
  const ElementSet candidates =
      loop_free.view.ToBase(Important(loop_free.view, basis, config, trace));
  if (details != nullptr) details->candidates = candidates;

  const auto [lo, hi] = SizeBounds(rank, k);
  const FeasibilityTest feasible = [&m, k, rank](const ElementSet& set) {
    return IsFaultTolerant(m, set, k, rank);
  };
  return finish(FirstFeasibleInWindow(
      candidates, lo, std::min<int>(hi, static_cast<int>(candidates.size())),
      feasible, options, report.stats.subsets_examined));
}

}  // namespace ftbasis
