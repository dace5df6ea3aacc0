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

#include "dsmin/trace_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dsmin {
namespace {

using nlohmann::json;

json OneBased(const Subset& x) {
  json out = json::array();
  for (int j : x.elements()) out.push_back(j + 1);
  return out;
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::string FormatDouble(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

json TraceToJson(const OptimizationTrace& trace, bool include_timing) {
  json iterates = json::array();
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    const TraceIterate& it = trace.iterates[i];
    iterates.push_back({{"iteration", i},
                        {"set", OneBased(it.set)},
                        {"value", it.value},
                        {"oracle_calls", it.oracle_calls},
                        {"millis", include_timing ? it.millis : 0.0}});
  }
  const SolverOptions& o = trace.options;
  return json{
      {"algorithm", trace.algorithm},
      {"options",
       {{"epsilon", o.epsilon},
        {"max_iters", o.max_iters},
        {"heuristic", ToString(o.heuristic)},
        {"ub_strategy", ToString(o.upper_bound_strategy)},
        {"seed", o.seed}}},
      {"constraint", trace.constraint},
      {"termination", ToString(trace.termination)},
      {"locally_optimal", trace.locally_optimal},
      {"final", {{"set", OneBased(trace.final_iterate().set)}, {"value", trace.final_iterate().value}}},
      {"iterates", iterates},
  };
}

std::string TraceToCsv(const OptimizationTrace& trace, bool include_timing) {
  std::ostringstream out;
  out << "iteration,value,oracle_calls,millis\n";
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    const TraceIterate& it = trace.iterates[i];
    out << i << ',' << FormatDouble(it.value) << ',' << it.oracle_calls << ','
        << FormatDouble(include_timing ? it.millis : 0.0) << '\n';
  }
  return out.str();
}

void WriteTraceFiles(const OptimizationTrace& trace, const std::string& prefix,
                     bool include_timing) {
  WriteFile(prefix + ".json", TraceToJson(trace, include_timing).dump(2) + "\n");
  WriteFile(prefix + ".csv", TraceToCsv(trace, include_timing));
}

}  // namespace dsmin
