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

#include "ftbasis/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>

#include "CLI11.hpp"

#include "ftbasis/instance_gen.h"
#include "ftbasis/matroid_ops.h"
#include "ftbasis/partition_matroid.h"
#include "ftbasis/solver_exact.h"
#include "ftbasis/solver_partition.h"

namespace ftbasis::cli {
namespace {

using nlohmann::json;

// Integer knobs understood by `ftb gen`; each maps onto a GenSpec param.
constexpr const char* kGenParams[] = {"r",   "k",       "n",     "d",
                                      "v",   "m",       "t",     "p",
                                      "pad", "grid",    "range", "den",
                                      "cap", "density", "maxw"};

WeightMap WeightsOf(const Instance& instance) {
  if (instance.weights) return WeightMap(*instance.weights);
  return WeightMap::Unit(instance.ground_size());
}

std::vector<Point> LoadPoints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read points file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!doc.is_array()) throw InputError(path + ": expected an array of points");
  auto coordinate = [&](const json& v, std::size_t i) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_string()) return ParseRational(v.get<std::string>());
    throw InputError(path + ": point " + std::to_string(i) +
                     " must hold integers or rational strings");
  };
  std::vector<Point> points;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& p = doc[i];
    if (!p.is_array() || p.size() != 2) {
      throw InputError(path + ": point " + std::to_string(i) +
                       " must be a pair [x, y]");
    }
    points.emplace_back(coordinate(p[0], i), coordinate(p[1], i));
  }
  return points;
}

void WriteText(const std::string& path, const std::string& text,
               std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

int ExitFor(const SolveOutcome& outcome) {
  if (!outcome.verified) return kExitInternal;
  return outcome.report.exists ? kExitOk : kExitNoSolution;
}

struct SolveArgs {
  std::string instance;
  int k = 0;
  std::string solver = "auto";
  int threads = 1;
  std::uint64_t budget = SearchOptions{}.budget;
  std::string trace;
};

int CmdSolve(const SolveArgs& args, std::ostream& out) {
  const Instance instance = LoadInstance(args.instance);
  const SearchOptions options{args.budget, args.threads};
  FptDetails details;
  const SolveOutcome outcome =
      SolveInstance(instance, args.k, args.solver, options, &details);
  out << SolutionToJson(outcome, args.k).dump(2) << "\n";
  if (!args.trace.empty()) {
    json trace = {{"rank", details.rank},
                  {"loops", details.loops.vector()},
                  {"candidates", details.candidates.vector()},
                  {"root", outcome.report.stats.solver == "fpt" &&
                                   details.rank > 0
                               ? TraceToJson(details.trace)
                               : json(nullptr)}};
    WriteText(args.trace, trace.dump(2) + "\n", out);
  }
  return ExitFor(outcome);
}

int CmdVerify(const std::string& path, int k,
              const std::vector<ElementId>& elements, std::ostream& out) {
  const Instance instance = LoadInstance(path);
  const auto oracle = BuildOracle(instance);
  const ElementSet set(elements);
  CheckInRange(set, oracle->ground_size());
  const int rank = static_cast<int>(FindBasis(*oracle).size());
  const std::optional<ElementSet> witness =
      FindFailureSet(*oracle, set, k, rank);
  json report = {{"fault_tolerant", !witness.has_value()},
                 {"k", k},
                 {"rank", rank},
                 {"elements", set.vector()}};
  if (witness) {
    report["witness"] = witness->vector();
    report["rank_after_failure"] = Rank(*oracle, set.Difference(*witness));
  }
  out << report.dump(2) << "\n";
  return witness ? kExitNoSolution : kExitOk;
}

int CmdGen(const GenSpec& spec, const std::string& points_path,
           const std::string& output, std::ostream& out, std::ostream& err) {
  Instance instance;
  std::optional<std::pair<int, int>> echo;
  if (!points_path.empty()) {
    if (spec.family != "general-position") {
      throw InputError("--points is only meaningful for general-position");
    }
    auto param = [&](const char* name, int fallback) {
      auto it = spec.params.find(name);
      return it == spec.params.end() ? fallback : static_cast<int>(it->second);
    };
    GeneralPositionInstance gp = GenGeneralPosition(
        LoadPoints(points_path), param("p", 4), param("pad", 3));
    instance = std::move(gp.instance);
    instance.generator = GeneratorInfo{
        "general-position", "none", 0,
        {{"p", param("p", 4)}, {"pad", param("pad", 3)}}};
    echo = {gp.k, gp.target_size};
  } else {
    instance = GenRandom(spec);
    if (spec.family == "general-position") {
      echo = {*instance.k_hint, *instance.size_hint};
    }
  }
  WriteText(output, SerializeInstance(instance), out);
  if (echo) {
    std::ostream& summary = (output.empty() || output == "-") ? err : out;
    summary << json{{"k", echo->first}, {"b", echo->second}}.dump() << "\n";
  }
  return kExitOk;
}

struct BenchArgs {
  std::string corpus;
  std::vector<std::string> solvers = {"fpt", "bruteforce"};
  std::optional<int> k;
  std::string output;
  int threads = 1;
  std::uint64_t budget = SearchOptions{}.budget;
};

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(args.corpus)) {
    throw InputError("corpus directory not found: " + args.corpus);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::ostringstream csv;
  csv << "instance,n,r,k,solver,size,weight,oracle_calls,subsets_examined,"
         "wall_ms\n";
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
      series;
  const SearchOptions options{args.budget, args.threads};
  for (const fs::path& file : files) {
    const std::string name = file.filename().string();
    std::optional<Instance> instance;
    int rank = -1;
    try {
      instance = LoadInstance(file.string());
      rank = static_cast<int>(FindBasis(*BuildOracle(*instance)).size());
    } catch (const std::exception& e) {
      err << name << ": " << e.what() << "\n";
    }
    const int k = args.k.value_or(
        instance && instance->k_hint ? *instance->k_hint : 1);
    for (const std::string& solver : args.solvers) {
      csv << name << "," << (instance ? instance->ground_size() : 0) << ","
          << rank << "," << k << "," << solver << ",";
      if (!instance) {
        csv << "ERROR,,,,\n";
        continue;
      }
      try {
        const SolveOutcome o = SolveInstance(*instance, k, solver, options);
        const SolveReport& r = o.report;
        csv << (r.exists ? std::to_string(r.solution->size()) : "none") << ","
            << (r.weight ? std::to_string(*r.weight) : "") << ","
            << r.stats.oracle_calls << "," << r.stats.subsets_examined << ","
            << r.stats.wall_ms << "\n";
        auto& [ns, calls] = series[solver];
        ns.push_back(instance->ground_size());
        calls.push_back(static_cast<double>(r.stats.oracle_calls));
      } catch (const std::exception& e) {
        csv << "ERROR,,,,\n";
        err << name << " [" << solver << "]: " << e.what() << "\n";
      }
    }
  }
  WriteText(args.output, csv.str(), out);
  for (const auto& [solver, xy] : series) {
    const double slope = LogLogSlope(xy.first, xy.second);
    err << "slope[" << solver << "] log(oracle_calls) ~ ";
    if (std::isfinite(slope)) {
      err << slope;
    } else {
      err << "undefined";
    }
    err << " log(n) over " << xy.first.size() << " instances\n";
  }
  return kExitOk;
}

}  // namespace

SolveOutcome SolveInstance(const Instance& instance, int k,
                           std::string_view solver,
                           const SearchOptions& options,
                           FptDetails* details) {
  if (k < 0) throw InputError("k must be >= 0");
  const auto oracle = BuildOracle(instance);
  const MatroidOracle& m = *oracle;
  SolveOutcome outcome;
  outcome.rank = static_cast<int>(FindBasis(m).size());
  const auto* partition = std::get_if<PartitionPayload>(&instance.payload);
  const bool unit_partition =
      partition != nullptr &&
      std::all_of(partition->capacities.begin(), partition->capacities.end(),
                  [](int c) { return c == 1; });

  std::string_view chosen = solver;
  if (solver == "auto") {
    chosen = outcome.rank <= 2 ? "rank2" : unit_partition ? "partition" : "fpt";
  }
  const WeightMap weights = WeightsOf(instance);
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t calls_before = m.oracle_calls();
  if (chosen == "fpt") {
    outcome.report = SolveFpt(m, k, options, details);
    if (outcome.report.exists) {
      outcome.report.weight = weights.Total(*outcome.report.solution);
    }
  } else if (chosen == "bruteforce") {
    std::optional<WeightMap> w;
    if (instance.weights) w = weights;
    outcome.report = SolveBruteforce(m, k, w, options);
  } else if (chosen == "partition") {
    if (partition == nullptr) {
      throw InputError("solver 'partition' needs a partition instance, got " +
                       std::string(instance.kind()));
    }
    outcome.report =
        unit_partition
            ? SolvePartitionUnit(partition->blocks, weights, outcome.rank, k)
            : SolvePartitionGeneral(partition->blocks, partition->capacities,
                                    weights, k);
  } else if (chosen == "rank2") {
    outcome.report = SolveRankLe2(m, weights, k);
  } else {
    throw InputError("unknown solver \"" + std::string(solver) + "\"");
  }
  outcome.report.stats.oracle_calls = m.oracle_calls() - calls_before;
  outcome.report.stats.wall_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  outcome.verified = outcome.report.exists
                         ? IsFaultTolerant(m, *outcome.report.solution, k,
                                           outcome.rank)
                         : !ExistsFtBasis(m, k);
  return outcome;
}

json SolutionToJson(const SolveOutcome& outcome, int k) {
  const SolveReport& r = outcome.report;
  json out = {{"schema", kSolutionSchema},
              {"exists", r.exists},
              {"k", k},
              {"rank", outcome.rank},
              {"elements", r.exists ? r.solution->vector()
                                    : std::vector<ElementId>{}},
              {"size", r.exists ? r.solution->size() : 0},
              {"verified", outcome.verified},
              {"stats",
               {{"oracle_calls", r.stats.oracle_calls},
                {"subsets_examined", r.stats.subsets_examined},
                {"wall_ms", r.stats.wall_ms},
                {"solver", r.stats.solver}}}};
  out["weight"] = r.weight ? json(*r.weight) : json(nullptr);
  return out;
}

json TraceToJson(const ImportantTrace& trace) {
  json children = json::array();
  for (const ImportantTrace& child : trace.children) {
    children.push_back(TraceToJson(child));
  }
  return {{"input", trace.input.vector()},
          {"h", trace.h},
          {"outcome", OutcomeName(trace.outcome)},
          {"closure_size", trace.closure_size},
          {"uniform_size", trace.uniform_size},
          {"output_size", trace.output_size},
          {"children", children}};
}

double LogLogSlope(std::span<const double> x, std::span<const double> y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] <= 0 || y[i] <= 0) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  const double denom = count * sxx - sx * sx;
  if (count < 2 || denom == 0) return std::numeric_limits<double>::quiet_NaN();
  return (count * sxy - sx * sy) / denom;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"ftb: minimum k-fault-tolerant bases of matroids", "ftb"};
  app.require_subcommand(1);

  SolveArgs solve;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "find a minimum k-fault-tolerant basis");
  solve_cmd->add_option("instance", solve.instance, "instance JSON file")
      ->required();
  solve_cmd->add_option("--k", solve.k, "number of failures to tolerate")
      ->required()
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--solver", solve.solver)
      ->check(CLI::IsMember({"auto", "fpt", "bruteforce", "partition",
                             "rank2"}))
      ->capture_default_str();
  solve_cmd->add_option("--threads", solve.threads)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_option("--budget", solve.budget,
                        "maximum number of candidate subsets")
      ->capture_default_str();
  solve_cmd->add_option("--trace", solve.trace,
                        "write the important-element recursion as JSON");

  std::string verify_path;
  int verify_k = 0;
  std::vector<ElementId> verify_elements;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check whether a set is k-fault-tolerant");
  verify_cmd->add_option("instance", verify_path)->required();
  verify_cmd->add_option("--k", verify_k)
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--elements", verify_elements, "comma-separated ids")
      ->delimiter(',');

  GenSpec gen;
  std::string gen_points;
  std::string gen_output;
  std::map<std::string, std::int64_t> gen_values;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", gen.family)->required();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--points", gen_points,
                      "points file for general-position");
  gen_cmd->add_option("-o,--output", gen_output, "output file (default stdout)");
  for (const char* name : kGenParams) {
    gen_cmd->add_option_function<std::int64_t>(
        std::string("--") + name,
        [&gen_values, name](std::int64_t v) { gen_values[name] = v; },
        "family parameter");
  }

  BenchArgs bench;
  int bench_k = -1;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "run solvers over a corpus, emit CSV");
  bench_cmd->add_option("--corpus", bench.corpus)->required();
  bench_cmd->add_option("--solvers", bench.solvers)
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--k", bench_k,
                        "failures (default: instance hint, else 1)");
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");
  bench_cmd->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--budget", bench.budget);

  std::vector<const char*> argv = {"ftb"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve, out);
    if (*verify_cmd) {
      return CmdVerify(verify_path, verify_k, verify_elements, out);
    }
    if (*gen_cmd) {
      gen.params = gen_values;
      return CmdGen(gen, gen_points, gen_output, out, err);
    }
    if (*bench_cmd) {
      if (bench_k >= 0) bench.k = bench_k;
      return CmdBench(bench, out, err);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}

}  // namespace ftbasis::cli
