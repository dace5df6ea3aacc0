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

#ifndef DSMIN_CONSTRAINT_H_
#define DSMIN_CONSTRAINT_H_

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dsmin/set_function.h"
#include "json.hpp"

namespace dsmin {

struct NoConstraint {};

struct CardinalityLe {
  int k = 0;
};

struct CardinalityEq {
  int k = 0;
};

// At most quotas[i] elements from blocks[i]; the blocks partition the
// ground set.
struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;
  std::vector<int> quotas;
};

// Ground set = edges; feasible sets are the spanning trees of the graph.
struct SpanningTree {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

// Costs must be non-negative integers (stored as doubles for parsing).
struct Knapsack {
  std::vector<double> costs;
  double budget = 0.0;
};

struct Constraint {
  std::variant<NoConstraint, CardinalityLe, CardinalityEq, PartitionMatroid, SpanningTree,
               Knapsack>
      body;

  // "none", "card_le", "card_eq", "partition_matroid", "spanning_tree", "knapsack".
  std::string kind() const;
  bool is_none() const { return std::holds_alternative<NoConstraint>(body); }
};

// Throws DomainError when the constraint is malformed for a ground set of
// size n or admits no feasible set (e.g. a disconnected graph).
void ValidateConstraint(const Constraint& c, int n);

bool IsFeasible(const Constraint& c, const Subset& x);

// Exact minimizer of an affine modular function over the feasible sets.
// Ties go to lower indices. Requires a validated constraint.
Subset ModularMinimizeConstrained(const AffineModular& m, const Constraint& c);

// JSON form uses 1-based elements/vertices:
//   {"kind": "card_le", "k": 2}
//   {"kind": "partition_matroid", "blocks": [[1,2],[3]], "quotas": [1,1]}
//   {"kind": "spanning_tree", "vertices": 3, "edges": [[1,2],[2,3],[1,3]]}
//   {"kind": "knapsack", "costs": [2,3,1], "budget": 4}
// Throws ParseError.
Constraint ParseConstraint(const nlohmann::json& j);
nlohmann::json ToJson(const Constraint& c);

// Command-line shorthand: "none", "card_le=K", "card_eq=K", or a path to a
// JSON file in the form above.
Constraint ParseConstraintArg(std::string_view text);

}  // namespace dsmin

#endif  // DSMIN_CONSTRAINT_H_
