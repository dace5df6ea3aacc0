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

#include "dsmin/dataset.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dsmin/errors.h"

namespace dsmin {

Dataset::Dataset(std::vector<std::vector<int>> columns, std::vector<int> labels,
                 std::vector<std::string> class_names)
    : columns_(std::move(columns)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)) {
  if (labels_.empty()) throw DomainError("dataset has no rows");
  if (class_names_.empty()) throw DomainError("dataset has no classes");
  class_counts_.assign(classes(), 0);
  for (int c : labels_) {
    if (c < 0 || c >= classes()) throw DomainError("class id out of range");
    ++class_counts_[c];
  }
  arity_.reserve(columns_.size());
  for (const auto& col : columns_) {
    if (col.size() != labels_.size()) throw DomainError("all columns must have one value per row");
    int top = 0;
    for (int v : col) {
      if (v < 0) throw DomainError("feature values must be non-negative");
      top = std::max(top, v);
    }
    arity_.push_back(top + 1);
  }
}

namespace {

[[noreturn]] void Fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool ParseInt(std::string_view s, long long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

// Integer-valued feature entry; "1" and "1.0" are both accepted.
bool ParseValue(std::string_view s, int& out) {
  long long i = 0;
  if (ParseInt(s, i)) {
    if (i < 0 || i > 1'000'000) return false;
    out = static_cast<int>(i);
    return true;
  }
  double d = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
  if (ec != std::errc() || ptr != s.data() + s.size()) return false;
  if (d < 0.0 || d > 1e6 || std::floor(d) != d) return false;
  out = static_cast<int>(d);
  return true;
}

std::vector<std::string_view> Tokens(std::string_view line, bool commas) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [&](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\r' || (commas && ch == ',');
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct RawRow {
  std::string label;
  std::vector<std::pair<int, int>> entries;  // (0-based index, value)
};

// Dense class ids for raw labels.
std::pair<std::vector<int>, std::vector<std::string>> EncodeLabels(const std::vector<RawRow>& rows) {
  bool numeric = true;
  for (const RawRow& r : rows) {
    double d = 0.0;
    std::string_view s = r.label;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      numeric = false;
      break;
    }
  }
  std::vector<std::string> names;
  std::vector<int> ids;
  if (numeric) {
    std::map<double, std::string> by_value;
    std::vector<double> values;
    for (const RawRow& r : rows) {
      std::string_view s = r.label;
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      double d = 0.0;
      std::from_chars(s.data(), s.data() + s.size(), d);
      by_value.emplace(d, r.label);
      values.push_back(d);
    }
    std::map<double, int> index;
    for (const auto& [v, name] : by_value) {
      index.emplace(v, static_cast<int>(names.size()));
      names.push_back(name);
    }
    for (double v : values) ids.push_back(index.at(v));
  } else {
    std::map<std::string, int> index;
    for (const RawRow& r : rows) index.emplace(r.label, 0);
    for (auto& [name, id] : index) {
      id = static_cast<int>(names.size());
      names.push_back(name);
    }
    for (const RawRow& r : rows) ids.push_back(index.at(r.label));
  }
  return {std::move(ids), std::move(names)};
}

}  // namespace

Dataset ParseDataset(std::istream& in, DatasetFormat format, std::optional<int> n_features) {
  std::vector<RawRow> rows;
  std::string line;
  int line_no = 0;
  int width = 0;
  std::optional<int> dense_width;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokens(line, format == DatasetFormat::kDense);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    RawRow row;
    row.label = std::string(tokens[0]);
    if (format == DatasetFormat::kSparse) {
      long long previous = 0;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string_view tok = tokens[t];
        const std::size_t colon = tok.find(':');
        if (colon == std::string_view::npos) Fail(line_no, "expected idx:val, got '" + std::string(tok) + "'");
        long long idx = 0;
        if (!ParseInt(tok.substr(0, colon), idx) || idx < 1) {
          Fail(line_no, "bad feature index in '" + std::string(tok) + "'");
        }
        if (idx <= previous) Fail(line_no, "feature indices must be strictly increasing");
        if (n_features && idx > *n_features) {
          Fail(line_no, "feature index " + std::to_string(idx) + " exceeds " +
                            std::to_string(*n_features));
        }
        int value = 0;
        if (!ParseValue(tok.substr(colon + 1), value)) {
          Fail(line_no, "bad feature value in '" + std::string(tok) + "'");
        }
        previous = idx;
        if (value != 0) row.entries.emplace_back(static_cast<int>(idx - 1), value);
        width = std::max(width, static_cast<int>(idx));
      }
    } else {
      const int w = static_cast<int>(tokens.size()) - 1;
      if (dense_width && *dense_width != w) {
        Fail(line_no, "expected " + std::to_string(*dense_width) + " values, got " + std::to_string(w));
      }
      dense_width = w;
      for (int t = 0; t < w; ++t) {
        int value = 0;
        if (!ParseValue(tokens[t + 1], value)) {
          Fail(line_no, "bad feature value '" + std::string(tokens[t + 1]) + "'");
        }
        if (value != 0) row.entries.emplace_back(t, value);
      }
      width = w;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("dataset has no rows");
  if (n_features) {
    if (format == DatasetFormat::kDense && *n_features != width) {
      throw ParseError("dense rows have " + std::to_string(width) + " features, expected " +
                       std::to_string(*n_features));
    }
    width = *n_features;
  }
  auto [ids, names] = EncodeLabels(rows);
  std::vector<std::vector<int>> columns(width, std::vector<int>(rows.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [j, v] : rows[r].entries) columns[j][r] = v;
  }
  return Dataset(std::move(columns), std::move(ids), std::move(names));
}

Dataset ReadDataset(const std::string& path, DatasetFormat format, std::optional<int> n_features) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset '" + path + "'");
  try {
    return ParseDataset(in, format, n_features);
  } catch (const ParseError& e) {
    throw ParseError("'" + path + "' " + e.what());
  }
}

DatasetFormat ParseDatasetFormat(const std::string& s) {
  if (s == "sparse") return DatasetFormat::kSparse;
  if (s == "dense") return DatasetFormat::kDense;
  throw ParseError("unknown dataset format '" + s + "'");
}

Dataset MakeDuplicatedFeatureDataset(int replicas, int noise_features) {
  if (replicas < 1 || noise_features < 0 || noise_features > 12) {
    throw DomainError("replicas must be positive and noise_features in 0..12");
  }
  const int width = 3 + noise_features;
  std::vector<std::vector<int>> columns(width);
  std::vector<int> labels;
  for (int r = 0; r < replicas; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int slot = 0; slot < 4; ++slot) {
        const int noise = slot == 0 ? 1 : 0;
        for (int bits = 0; bits < (1 << noise_features); ++bits) {
          labels.push_back(c);
          columns[0].push_back(c ^ noise);
          columns[1].push_back(noise);
          columns[2].push_back(c ^ noise);
          for (int k = 0; k < noise_features; ++k) columns[3 + k].push_back((bits >> k) & 1);
        }
      }
    }
  }
  return Dataset(std::move(columns), std::move(labels), {"0", "1"});
}

}  // namespace dsmin
