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

#ifndef DSMIN_TRACE_IO_H_
#define DSMIN_TRACE_IO_H_

#include <string>

#include "dsmin/dsopt.h"
#include "json.hpp"

namespace dsmin {

// Sets are written as sorted 1-based index arrays. With include_timing off
// every millis field is 0, so equal runs give byte-identical files.
nlohmann::json TraceToJson(const OptimizationTrace& trace, bool include_timing);

// Header "iteration,value,oracle_calls,millis", one row per iterate.
std::string TraceToCsv(const OptimizationTrace& trace, bool include_timing);

// Shortest decimal form that round-trips.
std::string FormatDouble(double x);

// Writes <prefix>.json and <prefix>.csv. Throws std::runtime_error on I/O failure.
void WriteTraceFiles(const OptimizationTrace& trace, const std::string& prefix,
                     bool include_timing);

}  // namespace dsmin

#endif  // DSMIN_TRACE_IO_H_
