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

// Command-line front end: instance generation, single runs, benchmarks, the
// dynamic protocol and the oracle ratio suite.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 failed verification.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "divopt/bench.h"
#include "divopt/dynamic.h"
#include "divopt/errors.h"
#include "divopt/generators.h"
#include "divopt/greedy.h"
#include "divopt/mutual_information.h"
#include "divopt/oracle.h"
#include "divopt/stats.h"
#include "divopt/trace_export.h"
#include "divopt/verify.h"

namespace divopt {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerifyFailed = 3;

struct GlobalFlags {
  uint64_t seed = 0;
  std::string out;
  int64_t trace_stride = 0;
};

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw DataError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<double> ParseDoubleList(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::string> ParseNameList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

CardinalityMode ParseMode(const std::string& text) {
  if (text == "exact") return CardinalityMode::kExact;
  if (text == "at_most") return CardinalityMode::kAtMost;
  throw std::invalid_argument("unknown cardinality mode '" + text + "'");
}

Json RunResultToJson(const RunResult& run) {
  Json doc;
  doc["best"] = run.best.Members();
  if (!run.perm.empty()) doc["perm"] = run.perm;
  doc["objective"] = run.objective;
  doc["feasible"] = run.feasible;
  doc["evaluations"] = run.evaluations;
  Json trace = Json::array();
  for (const TracePoint& p : run.trace) {
    trace.push_back({p.evaluations, p.best_objective});
  }
  doc["trace"] = std::move(trace);
  return doc;
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
  int n = 0;
  int k = 10;
  double lambda = 1.0;
  std::string diversity = "sum";
  std::string mode = "exact";
};

void AddGen(CLI::App& app, GenArgs& args) {
  app.add_option("--n", args.n, "number of items")->required();
  app.add_option("--k", args.k, "cardinality bound");
  app.add_option("--lambda", args.lambda, "diversity weight");
  app.add_option("--diversity", args.diversity, "sum, min or mst");
  app.add_option("--mode", args.mode, "exact or at_most");
}

int RunGen(const GenArgs& args, const GlobalFlags& global) {
  const Instance instance =
      GenSyntheticWeb(args.n, global.seed, args.k, args.lambda,
                      ParseDiversityKind(args.diversity), ParseMode(args.mode));
  Output out(global.out);
  out.stream() << InstanceToJson(instance).dump() << '\n';
  return 0;
}

// --- featurize -----------------------------------------------------------------

struct FeaturizeArgs {
  std::string features;
  std::string labels;
  int p = 1;
  int k = 5;
  double lambda = 1.0;
};

void AddFeaturize(CLI::App& app, FeaturizeArgs& args) {
  app.add_option("--features", args.features, "feature table")->required();
  app.add_option("--labels", args.labels, "label table")->required();
  app.add_option("--p", args.p, "features counted per label");
  app.add_option("--k", args.k, "number of features to select");
  app.add_option("--lambda", args.lambda, "diversity weight");
}

int RunFeaturize(const FeaturizeArgs& args, const GlobalFlags& global) {
  FeatureLabelStatistics stats = NormalizedMIFromData(
      ReadDiscreteTable(args.features), ReadDiscreteTable(args.labels));
  const Instance instance(
      std::make_shared<TopPMIQuality>(std::move(stats.mi), args.p),
      std::make_shared<DistanceMatrix>(std::move(stats.feature_distance)),
      args.lambda, UniformConstraint{args.k, CardinalityMode::kExact},
      DiversityKind::kSum);
  Output out(global.out);
  out.stream() << InstanceToJson(instance).dump() << '\n';
  return 0;
}

// --- run -----------------------------------------------------------------------

struct RunArgs {
  std::string instance;
  std::string algorithm = "gsemo";
  std::optional<int64_t> iterations;
};

void AddRun(CLI::App& app, RunArgs& args) {
  app.add_option("--instance", args.instance, "instance file")->required();
  app.add_option("--algorithm", args.algorithm,
                 "greedy, local_search, local_search2, gsemo or gsemo:<form>");
  app.add_option("--iterations", args.iterations, "GSEMO iteration budget");
}

int RunRun(const RunArgs& args, const GlobalFlags& global) {
  ValidateAlgorithmName(args.algorithm);
  const Instance instance = LoadInstance(args.instance);
  AlgorithmOptions options;
  options.trace_stride = global.trace_stride;
  options.gsemo_iterations = args.iterations;
  const RunResult run = RunAlgorithm(args.algorithm, instance,
                                     RngStream(global.seed, StreamId(0, args.algorithm)),
                                     options);
  Output out(global.out);
  out.stream() << RunResultToJson(run).dump() << '\n';
  return 0;
}

// --- bench ---------------------------------------------------------------------

struct BenchArgs {
  std::vector<std::string> instances;
  int n = 100;
  std::string ks = "10";
  std::string lambdas = "1";
  int per_cell = 1;
  std::string algorithms = "greedy,local_search,gsemo";
  int seeds = 1;
  int threads = 1;
  std::optional<int64_t> iterations;
};

void AddBench(CLI::App& app, BenchArgs& args) {
  app.add_option("--instances", args.instances,
                 "instance files; synthetic web instances when absent");
  app.add_option("--n", args.n, "items per synthetic instance");
  app.add_option("--k", args.ks, "comma-separated k values");
  app.add_option("--lambda", args.lambdas, "comma-separated lambda values");
  app.add_option("--per-cell", args.per_cell, "instances per (k, lambda)");
  app.add_option("--algorithms", args.algorithms, "comma-separated names");
  app.add_option("--seeds", args.seeds, "seeds per cell");
  app.add_option("--threads", args.threads, "worker threads");
  app.add_option("--iterations", args.iterations, "GSEMO iteration budget");
}

// Groups rows by (k, lambda) and compares every algorithm against the first
// by a paired signed-rank test over (instance, seed).
void WriteStats(std::ostream& out, const std::vector<BenchRow>& rows,
                const std::vector<std::string>& algorithms) {
  out << "k,lambda,algorithm,count,mean,std,p_vs_" << algorithms.front() << '\n';
  std::map<std::pair<int, double>, std::map<std::string, std::vector<double>>>
      cells;
  for (const BenchRow& row : rows) {
    cells[{row.k, row.lambda}][row.algorithm].push_back(row.objective);
  }
  out << std::setprecision(17);
  for (const auto& [key, by_algorithm] : cells) {
    const std::vector<double>& reference = by_algorithm.at(algorithms.front());
    for (const std::string& name : algorithms) {
      const std::vector<double>& values = by_algorithm.at(name);
      const StatsSummary s = Summarize(values);
      out << key.first << ',' << key.second << ',' << name << ',' << s.count
          << ',' << s.mean << ',' << s.std_dev << ',';
      if (name != algorithms.front()) {
        const TestResult test = WilcoxonSignedRank(values, reference);
        if (test.conclusive) {
          out << test.p_two_sided;
        } else {
          out << "inconclusive";
        }
      }
      out << '\n';
    }
  }
}

int RunBenchCommand(const BenchArgs& args, const GlobalFlags& global) {
  BenchPlan plan;
  plan.algorithms = ParseNameList(args.algorithms);
  if (plan.algorithms.empty()) throw std::invalid_argument("no algorithms");
  for (const std::string& name : plan.algorithms) ValidateAlgorithmName(name);
  plan.seeds_per_cell = args.seeds;
  plan.master_seed = global.seed;
  plan.threads = args.threads;
  plan.options.trace_stride = global.trace_stride;
  plan.options.gsemo_iterations = args.iterations;
  if (args.instances.empty()) {
    plan.instances = SyntheticSweep(args.n, ParseIntList(args.ks),
                                    ParseDoubleList(args.lambdas),
                                    args.per_cell, global.seed);
  } else {
    for (const std::string& path : args.instances) {
      plan.instances.push_back(
          {std::filesystem::path(path).stem().string(), LoadInstance(path)});
    }
  }
  const std::vector<BenchRow> rows = RunBench(plan);

  if (global.out.empty()) {
    WriteBenchTable(std::cout, rows);
    return 0;
  }
  const std::filesystem::path dir(global.out);
  std::filesystem::create_directories(dir);
  {
    std::ofstream table(dir / "results.csv");
    WriteBenchTable(table, rows);
  }
  {
    std::ofstream stats(dir / "stats.csv");
    WriteStats(stats, rows, plan.algorithms);
  }
  if (global.trace_stride > 0) {
    for (const auto& [name, curve] :
         CurvesByAlgorithm(rows, global.trace_stride)) {
      std::string file = name;
      std::replace(file.begin(), file.end(), ':', '_');
      std::ofstream curve_out(dir / ("curve_" + file + ".csv"));
      WriteCurve(curve_out, curve);
    }
  }
  return 0;
}

// --- dynamic -------------------------------------------------------------------

struct DynamicArgs {
  std::string instance;
  int n = 100;
  int k = 10;
  double lambda = 1.0;
  int changes = 10;
  int m = 20;
  std::optional<int64_t> t;
  int trials = 1;
  int max_swaps = 1;
};

void AddDynamic(CLI::App& app, DynamicArgs& args) {
  app.add_option("--instance", args.instance,
                 "instance file; a synthetic web instance when absent");
  app.add_option("--n", args.n, "items per synthetic instance");
  app.add_option("--k", args.k, "cardinality bound");
  app.add_option("--lambda", args.lambda, "diversity weight");
  app.add_option("--changes", args.changes, "changes per trial");
  app.add_option("--m", args.m, "perturbations per change");
  app.add_option("--t", args.t, "evaluations per change (default 10 k n)");
  app.add_option("--trials", args.trials, "independent trials");
  app.add_option("--max-swaps", args.max_swaps, "local search swaps: 1 or 2");
}

int RunDynamicCommand(const DynamicArgs& args, const GlobalFlags& global) {
  if (args.trials < 1 || args.changes < 0) {
    throw std::invalid_argument("dynamic: need trials >= 1 and changes >= 0");
  }
  const std::vector<DynamicAlgorithm> algorithms = {
      {DynamicAlgorithm::Kind::kGsemo, "gsemo", Formulation::kMatroidSum},
      {DynamicAlgorithm::Kind::kLocalSearch, "local_search",
       Formulation::kMatroidSum, args.max_swaps},
  };
  Output out(global.out);
  out.stream() << "trial,change_index,algorithm,objective,evaluations\n"
               << std::setprecision(17);
  for (int trial = 0; trial < args.trials; ++trial) {
    RngStream rng(global.seed, StreamId(trial, "dynamic"));
    const Instance initial =
        args.instance.empty()
            ? GenSyntheticWeb(args.n, rng, args.k, args.lambda,
                              DiversityKind::kSum, CardinalityMode::kAtMost)
            : LoadInstance(args.instance);
    DynamicSchedule schedule;
    schedule.evaluations_per_change =
        args.t.value_or(10LL * initial.k() * initial.n());
    for (int c = 0; c < args.changes; ++c) {
      schedule.changes.push_back(SampleChange(rng, initial, args.m));
    }
    const Subset start = initial.is_cardinality()
                             ? GreedySum(initial).best
                             : ExtendToBasis(Subset(initial.n()),
                                             initial.constraint());
    const DynamicOutcome outcome =
        RunDynamic(initial, schedule, algorithms, start, rng.Fork(1));
    for (const DynamicRecord& r : outcome.records) {
      out.stream() << trial << ',' << r.change_index << ',' << r.algorithm
                   << ',' << r.objective << ',' << r.evaluations << '\n';
    }
  }
  return 0;
}

// --- verify --------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> instances;
};

void AddVerify(CLI::App& app, VerifyArgs& args) {
  app.add_option("instances", args.instances,
                 "instance files; a bundled suite when absent");
}

int RunVerify(const VerifyArgs& args, const GlobalFlags& global) {
  std::vector<NamedInstance> instances;
  if (args.instances.empty()) {
    instances = BundledVerifyInstances(global.seed);
  } else {
    for (const std::string& path : args.instances) {
      instances.push_back(
          {std::filesystem::path(path).stem().string(), LoadInstance(path)});
    }
  }
  const std::vector<VerifyRow> rows = VerifyInstances(instances, global.seed);
  Output out(global.out);
  out.stream() << "instance_id,algorithm,objective,opt,ratio,achieved,pass\n"
               << std::setprecision(17);
  bool all = true;
  for (const VerifyRow& r : rows) {
    out.stream() << r.instance_id << ',' << r.algorithm << ',' << r.objective
                 << ',' << r.opt << ',' << r.ratio << ',' << r.achieved << ','
                 << (r.pass ? "pass" : "FAIL") << '\n';
    all = all && r.pass;
  }
  return all ? 0 : kExitVerifyFailed;
}

// --- hard ----------------------------------------------------------------------

struct HardArgs {
  int n = 18;
};

int RunHard(const HardArgs& args, const GlobalFlags& global) {
  Output out(global.out);
  out.stream() << InstanceToJson(HardMinInstance(args.n)).dump() << '\n';
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Result diversification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags global;
  app.add_option("--seed", global.seed, "master seed");
  app.add_option("--out", global.out, "output file (directory for bench)");
  app.add_option("--trace-stride", global.trace_stride,
                 "record the best objective every this many evaluations")
      ->check(CLI::NonNegativeNumber);

  GenArgs gen;
  AddGen(*app.add_subcommand("gen", "write a synthetic web instance"), gen);
  FeaturizeArgs featurize;
  AddFeaturize(*app.add_subcommand("featurize",
                                   "build a feature-selection instance"),
               featurize);
  RunArgs run;
  AddRun(*app.add_subcommand("run", "run one algorithm on one instance"), run);
  BenchArgs bench;
  AddBench(*app.add_subcommand("bench", "run a benchmark plan"), bench);
  DynamicArgs dynamic;
  AddDynamic(*app.add_subcommand("dynamic", "run the dynamic protocol"),
             dynamic);
  VerifyArgs verify;
  AddVerify(*app.add_subcommand("verify", "check approximation ratios"),
            verify);
  HardArgs hard;
  app.add_subcommand("hard", "write the stuck-GSEMO min-diversity instance")
      ->add_option("--n", hard.n, "number of items, a multiple of 18");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "gen") return RunGen(gen, global);
    if (name == "featurize") return RunFeaturize(featurize, global);
    if (name == "run") return RunRun(run, global);
    if (name == "bench") return RunBenchCommand(bench, global);
    if (name == "dynamic") return RunDynamicCommand(dynamic, global);
    if (name == "verify") return RunVerify(verify, global);
    return RunHard(hard, global);
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace
}  // namespace divopt

int main(int argc, char** argv) { return divopt::Main(argc, argv); }
