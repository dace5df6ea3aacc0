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

#include "dsmin/constraint.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>

#include "dsmin/errors.h"

namespace dsmin {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Knapsack tables above this many cells are refused.
constexpr double kMaxKnapsackCells = 2e8;

bool IsNonNegativeInteger(double x) { return x >= 0.0 && std::floor(x) == x; }

// Element indices sorted by ascending weight, ties to the lower index.
std::vector<int> AscendingOrder(const std::vector<double>& w, const std::vector<int>& among) {
  std::vector<int> order = among;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  return order;
}

std::vector<int> AllElements(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Up to `limit` of the strictly negative weights among `among`, most negative first.
void TakeNegatives(const std::vector<double>& w, const std::vector<int>& among, int limit,
                   Subset& out) {
  int taken = 0;
  for (int j : AscendingOrder(w, among)) {
    if (taken >= limit || w[j] >= 0.0) break;
    out.insert(j);
    ++taken;
  }
}

Subset Kruskal(const std::vector<double>& w, const SpanningTree& t) {
  const int m = static_cast<int>(t.edges.size());
  Subset tree(m);
  UnionFind uf(t.vertices);
  for (int e : AscendingOrder(w, AllElements(m))) {
    if (uf.Union(t.edges[e].first, t.edges[e].second)) tree.insert(e);
  }
  return tree;
}

Subset KnapsackDp(const std::vector<double>& w, const Knapsack& k) {
  const int n = static_cast<int>(w.size());
  // Only strictly negative items can lower the objective.
  std::vector<int> items;
  long long total_cost = 0;
  for (int j = 0; j < n; ++j) {
    if (w[j] < 0.0) {
      items.push_back(j);
      total_cost += static_cast<long long>(k.costs[j]);
    }
  }
  const long long cap = std::min<long long>(static_cast<long long>(std::floor(k.budget)), total_cost);
  if (static_cast<double>(items.size()) * static_cast<double>(cap + 1) > kMaxKnapsackCells) {
    throw TooLargeError("knapsack table too large");
  }
  const std::size_t width = static_cast<std::size_t>(cap) + 1;
  std::vector<double> best(width, 0.0);
  std::vector<char> take(items.size() * width, 0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int j = items[i];
    const long long c = static_cast<long long>(k.costs[j]);
    for (long long b = cap; b >= c; --b) {
      const double with = best[b - c] + w[j];
      if (with < best[b]) {
        best[b] = with;
        take[i * width + b] = 1;
      }
    }
  }
  Subset out(n);
  long long b = cap;
  for (std::size_t i = items.size(); i-- > 0;) {
    if (take[i * width + b]) {
      out.insert(items[i]);
      b -= static_cast<long long>(k.costs[items[i]]);
    }
  }
  return out;
}

const json& Field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("constraint is missing field '") + name + "'");
  return *it;
}

int IntField(const json& j, const char* name) {
  const json& v = Field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("'") + name + "' must be an integer");
  return v.get<int>();
}

std::vector<int> OneBasedList(const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
  std::vector<int> out;
  for (const json& v : arr) {
    if (!v.is_number_integer() || v.get<int>() < 1) {
      throw ParseError(std::string("'") + what + "' must hold positive integers");
    }
    out.push_back(v.get<int>() - 1);
  }
  return out;
}

}  // namespace

std::string Constraint::kind() const {
  return std::visit(Overloaded{
                        [](const NoConstraint&) { return std::string("none"); },
                        [](const CardinalityLe&) { return std::string("card_le"); },
                        [](const CardinalityEq&) { return std::string("card_eq"); },
                        [](const PartitionMatroid&) { return std::string("partition_matroid"); },
                        [](const SpanningTree&) { return std::string("spanning_tree"); },
                        [](const Knapsack&) { return std::string("knapsack"); },
                    },
                    body);
}

void ValidateConstraint(const Constraint& c, int n) {
  std::visit(
      Overloaded{
          [](const NoConstraint&) {},
          [n](const CardinalityLe& k) {
            if (k.k < 0 || k.k > n) throw DomainError("card_le bound must lie in 0..n");
          },
          [n](const CardinalityEq& k) {
            if (k.k < 0 || k.k > n) throw DomainError("card_eq bound must lie in 0..n");
          },
          [n](const PartitionMatroid& p) {
            if (p.blocks.size() != p.quotas.size()) {
              throw DomainError("partition matroid needs one quota per block");
            }
            std::vector<int> seen(n, 0);
            for (const auto& block : p.blocks) {
              for (int j : block) {
                if (j < 0 || j >= n) throw DomainError("partition block element out of range");
                if (seen[j]++) throw DomainError("partition blocks overlap");
              }
            }
            if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
              throw DomainError("partition blocks must cover the ground set");
            }
            for (int q : p.quotas) {
              if (q < 0) throw DomainError("partition quotas must be non-negative");
            }
          },
          [n](const SpanningTree& t) {
            if (static_cast<int>(t.edges.size()) != n) {
              throw DomainError("spanning tree ground set must be the edge list");
            }
            if (t.vertices < 1) throw DomainError("graph needs at least one vertex");
            UnionFind uf(t.vertices);
            int components = t.vertices;
            for (const auto& [u, v] : t.edges) {
              if (u < 0 || v < 0 || u >= t.vertices || v >= t.vertices) {
                throw DomainError("edge endpoint out of range");
              }
              if (uf.Union(u, v)) --components;
            }
            if (components != 1) throw DomainError("spanning tree constraint on a disconnected graph");
          },
          [n](const Knapsack& k) {
            if (static_cast<int>(k.costs.size()) != n) {
              throw DomainError("knapsack needs one cost per element");
            }
            for (double c : k.costs) {
              if (!IsNonNegativeInteger(c)) {
                throw DomainError("knapsack costs must be non-negative integers");
              }
            }
            if (!(k.budget >= 0.0)) throw DomainError("knapsack budget must be non-negative");
          },
      },
      c.body);
}

bool IsFeasible(const Constraint& c, const Subset& x) {
  return std::visit(
      Overloaded{
          [](const NoConstraint&) { return true; },
          [&](const CardinalityLe& k) { return x.size() <= k.k; },
          [&](const CardinalityEq& k) { return x.size() == k.k; },
          [&](const PartitionMatroid& p) {
            for (std::size_t b = 0; b < p.blocks.size(); ++b) {
              int count = 0;
              for (int j : p.blocks[b]) count += x.contains(j) ? 1 : 0;
              if (count > p.quotas[b]) return false;
            }
            return true;
          },
          [&](const SpanningTree& t) {
            if (x.size() != t.vertices - 1) return false;
            UnionFind uf(t.vertices);
            for (int e : x.elements()) {
              if (!uf.Union(t.edges[e].first, t.edges[e].second)) return false;
            }
            return true;
          },
          [&](const Knapsack& k) {
            double total = 0.0;
            for (int j : x.elements()) total += k.costs[j];
            return total <= k.budget;
          },
      },
      c.body);
}

Subset ModularMinimizeConstrained(const AffineModular& m, const Constraint& c) {
  const int n = m.n();
  const std::vector<double>& w = m.weights;
  return std::visit(
      Overloaded{
          [&](const NoConstraint&) {
            Subset out(n);
            for (int j = 0; j < n; ++j) {
              if (w[j] < 0.0) out.insert(j);
            }
            return out;
          },
          [&](const CardinalityLe& k) {
            Subset out(n);
            TakeNegatives(w, AllElements(n), k.k, out);
            return out;
          },
          [&](const CardinalityEq& k) {
            Subset out(n);
            const std::vector<int> order = AscendingOrder(w, AllElements(n));
            for (int i = 0; i < k.k; ++i) out.insert(order[i]);
            return out;
          },
          [&](const PartitionMatroid& p) {
            Subset out(n);
            for (std::size_t b = 0; b < p.blocks.size(); ++b) {
              TakeNegatives(w, p.blocks[b], p.quotas[b], out);
            }
            return out;
          },
          [&](const SpanningTree& t) { return Kruskal(w, t); },
          [&](const Knapsack& k) { return KnapsackDp(w, k); },
      },
      c.body);
}

Constraint ParseConstraint(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("constraint must be a JSON object");
    const json& kind_field = Field(j, "kind");
    if (!kind_field.is_string()) throw ParseError("'kind' must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "none") return {NoConstraint{}};
    if (kind == "card_le") return {CardinalityLe{IntField(j, "k")}};
    if (kind == "card_eq") return {CardinalityEq{IntField(j, "k")}};
    if (kind == "partition_matroid") {
      PartitionMatroid p;
      const json& blocks = Field(j, "blocks");
      if (!blocks.is_array()) throw ParseError("'blocks' must be an array");
      for (const json& b : blocks) p.blocks.push_back(OneBasedList(b, "blocks"));
      const json& quotas = Field(j, "quotas");
      if (quotas.is_number_integer()) {
        p.quotas.assign(p.blocks.size(), quotas.get<int>());
      } else {
        if (!quotas.is_array()) throw ParseError("'quotas' must be an integer or array");
        for (const json& q : quotas) {
          if (!q.is_number_integer()) throw ParseError("'quotas' must hold integers");
          p.quotas.push_back(q.get<int>());
        }
      }
      return {std::move(p)};
    }
    if (kind == "spanning_tree") {
      SpanningTree t;
      t.vertices = IntField(j, "vertices");
      const json& edges = Field(j, "edges");
      if (!edges.is_array()) throw ParseError("'edges' must be an array");
      for (const json& e : edges) {
        const std::vector<int> uv = OneBasedList(e, "edges");
        if (uv.size() != 2) throw ParseError("each edge must be [u, v]");
        t.edges.emplace_back(uv[0], uv[1]);
      }
      return {std::move(t)};
    }
    if (kind == "knapsack") {
      Knapsack k;
      const json& costs = Field(j, "costs");
      if (!costs.is_array()) throw ParseError("'costs' must be an array");
      for (const json& c : costs) {
        if (!c.is_number()) throw ParseError("'costs' must hold numbers");
        k.costs.push_back(c.get<double>());
      }
      const json& budget = Field(j, "budget");
      if (!budget.is_number()) throw ParseError("'budget' must be a number");
      k.budget = budget.get<double>();
      return {std::move(k)};
    }
    throw ParseError("unknown constraint kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed constraint: ") + e.what());
  }
}

json ToJson(const Constraint& c) {
  return std::visit(
      Overloaded{
          [](const NoConstraint&) { return json{{"kind", "none"}}; },
          [](const CardinalityLe& k) { return json{{"kind", "card_le"}, {"k", k.k}}; },
          [](const CardinalityEq& k) { return json{{"kind", "card_eq"}, {"k", k.k}}; },
          [](const PartitionMatroid& p) {
            json blocks = json::array();
            for (const auto& b : p.blocks) {
              json block = json::array();
              for (int j : b) block.push_back(j + 1);
              blocks.push_back(block);
            }
            return json{{"kind", "partition_matroid"}, {"blocks", blocks}, {"quotas", p.quotas}};
          },
          [](const SpanningTree& t) {
            json edges = json::array();
            for (const auto& [u, v] : t.edges) edges.push_back({u + 1, v + 1});
            return json{{"kind", "spanning_tree"}, {"vertices", t.vertices}, {"edges", edges}};
          },
          [](const Knapsack& k) {
            return json{{"kind", "knapsack"}, {"costs", k.costs}, {"budget", k.budget}};
          },
      },
      c.body);
}

Constraint ParseConstraintArg(std::string_view text) {
  if (text.empty() || text == "none") return {NoConstraint{}};
  for (std::string_view prefix : {"card_le=", "card_eq="}) {
    if (text.substr(0, prefix.size()) != prefix) continue;
    const std::string_view digits = text.substr(prefix.size());
    int k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad cardinality in constraint '" + std::string(text) + "'");
    }
    if (prefix == "card_le=") return {CardinalityLe{k}};
    return {CardinalityEq{k}};
  }
  const std::string path(text);
  std::ifstream in(path);
  if (!in) throw ParseError("constraint '" + path + "' is neither a shorthand nor a readable file");
  try {
    return ParseConstraint(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace dsmin
