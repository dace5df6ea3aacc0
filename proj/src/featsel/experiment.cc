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

#include "dsmin/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "dsmin/errors.h"
#include "dsmin/trace_io.h"

namespace dsmin {
namespace {

ExperimentRow RunOne(const DatasetPtr& ds, const ExperimentConfig& config, double lambda,
                     const std::string& method) {
  CostModel cost = config.cost;
  cost.lambda = lambda;
  const FeatSelObjective objective = BuildObjective(ds, cost, config.alpha, MiMode::kNonFactored);
  ExperimentRow row;
  row.lambda = lambda;
  row.method = method;
  if (method == "grf" || method == "grnf") {
    const GreedySelection g = GreedySelect(
        ds, cost, method == "grf" ? GreedyMode::kGrF : GreedyMode::kGrNF, std::nullopt, config.alpha);
    row.selected = g.selected;
    row.iterations = static_cast<int>(g.order.size());
  } else {
    OptimizationTrace t;
    if (method == "subsup") {
      t = SubSup(objective.instance, config.solver);
    } else if (method == "supsub") {
      t = SupSub(objective.instance, config.solver);
    } else {
      t = ModMod(objective.instance, config.solver);
    }
    row.selected = t.final_iterate().set;
    row.iterations = t.accepted_steps();
  }
  row.objective = objective.instance(row.selected);
  row.cost = (*objective.cost)(row.selected);
  row.mutual_information = row.cost - row.objective;
  row.accuracy = NaiveBayesCV(*ds, row.selected, config.folds, config.alpha, config.seed);
  return row;
}

std::string JoinOneBased(const Subset& x, char sep) {
  std::string out;
  for (int j : x.elements()) {
    if (!out.empty()) out += sep;
    out += std::to_string(j + 1);
  }
  return out;
}

}  // namespace

std::vector<std::string> ParseMethods(const std::string& text) {
  const auto& all = AllFeatselMethods();
  std::vector<bool> chosen(all.size(), false);
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "all") {
      chosen.assign(all.size(), true);
      continue;
    }
    auto it = std::find(all.begin(), all.end(), item);
    if (it == all.end()) throw ParseError("unknown feature selection method '" + item + "'");
    chosen[it - all.begin()] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (chosen[i]) out.push_back(all[i]);
  }
  if (out.empty()) throw ParseError("no feature selection methods given");
  return out;
}

std::vector<double> LambdaGridForSizes(DatasetPtr ds, const std::vector<int>& sizes,
                                       double alpha) {
  const GreedySelection g = GreedySelect(ds, CostModel::ModularCardinality(0.0), GreedyMode::kGrNF,
                                         std::nullopt, alpha);
  const int steps = static_cast<int>(g.order.size());
  std::vector<double> gains(steps);
  for (int i = 0; i < steps; ++i) gains[i] = g.values[i] - g.values[i + 1];
  std::vector<double> out;
  for (int k : sizes) {
    if (k < 1) throw DomainError("lambda grid sizes must be positive");
    k = std::min(k, steps);
    double hi = gains[0];
    for (int i = 1; i < k; ++i) hi = std::min(hi, gains[i]);
    // Stop after k steps: every earlier gain beats lambda, gain k + 1 does not.
    const double lo = k < steps ? gains[k] : 0.0;
    out.push_back(lo < hi ? 0.5 * (lo + hi) : hi * (1.0 - 1e-6));
  }
  return out;
}

std::vector<ExperimentRow> RunFeatselExperiment(DatasetPtr ds, const ExperimentConfig& config) {
  ValidateCostModel(config.cost, ds->features());
  std::vector<double> lambdas = config.lambdas;
  std::sort(lambdas.begin(), lambdas.end());
  for (double l : lambdas) {
    if (!(l >= 0.0)) throw DomainError("lambdas must be non-negative");
  }
  std::vector<std::string> methods;
  for (const auto& m : AllFeatselMethods()) {
    if (std::find(config.methods.begin(), config.methods.end(), m) != config.methods.end()) {
      methods.push_back(m);
    }
  }
  if (methods.size() != config.methods.size()) throw DomainError("unknown or repeated method");

  const std::size_t jobs = lambdas.size() * methods.size();
  std::vector<ExperimentRow> rows(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) {
      try {
        rows[i] = RunOne(ds, config, lambdas[i / methods.size()], methods[i % methods.size()]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(jobs, config.threads > 0 ? config.threads : hw);
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string ExperimentCsv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "lambda,method,num_selected,objective,mutual_information,cost,accuracy,iterations,"
         "selected_features\n";
  for (const ExperimentRow& r : rows) {
    out << FormatDouble(r.lambda) << ',' << r.method << ',' << r.selected.size() << ','
        << FormatDouble(r.objective) << ',' << FormatDouble(r.mutual_information) << ','
        << FormatDouble(r.cost) << ',' << FormatDouble(r.accuracy) << ',' << r.iterations << ','
        << JoinOneBased(r.selected, ' ') << '\n';
  }
  return out.str();
}

nlohmann::json ExperimentJson(const std::vector<ExperimentRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ExperimentRow& r : rows) {
    nlohmann::json features = nlohmann::json::array();
    for (int j : r.selected.elements()) features.push_back(j + 1);
    out.push_back({{"lambda", r.lambda},
                   {"method", r.method},
                   {"selected_features", features},
                   {"objective", r.objective},
                   {"mutual_information", r.mutual_information},
                   {"cost", r.cost},
                   {"accuracy", r.accuracy},
                   {"iterations", r.iterations}});
  }
  return out;
}

}  // namespace dsmin
