#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "liechain/errors.hpp"
#include "liechain/formulas.hpp"
#include "liechain/group_type.hpp"
#include "liechain/subgroup_db.hpp"

namespace liechain {

/// Brute-force length and depth by memoized recursion over the maximal
/// connected subgroup graph:
///   l(G) = 1 + max l(M),  depth(G) = 1 + min depth(M),  l(1) = depth(1) = 0.
/// Any node whose maximal subgroup list is incomplete aborts the search with
/// IncompleteDatabaseError, so every memoized value is exact relative to the
/// database. Lookups and inserts are linearizable; two threads may compute
/// the same node concurrently, which is harmless since the result is the same.
class Oracle {
 public:
  struct Options {
    bool use_cache = true;
  };

  struct Values {
    std::int64_t length = 0;
    std::int64_t depth = 0;
  };

  Oracle() = default;
  explicit Oracle(Options options) : options_(options) {}

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  Values evaluate(const GroupType& g) {
    if (g.is_trivial()) return {};
    if (options_.use_cache) {
      std::shared_lock lock(memo_mutex_);
      if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    }
    const MaximalSubgroups maximals = maximal_subgroups(g);
    if (!maximals.completeness.complete) throw IncompleteDatabaseError(g.spec());

    Values out{0, std::numeric_limits<std::int64_t>::max()};
    for (const auto& entry : maximals.entries) {
      const Values v = evaluate(entry.subgroup);
      out.length = std::max(out.length, v.length);
      out.depth = std::min(out.depth, v.depth);
    }
    out.length += 1;
    out.depth += 1;
    if (options_.use_cache) {
      std::unique_lock lock(memo_mutex_);
      memo_.emplace(g, out);
    }
    return out;
  }

  std::int64_t length(const GroupType& g) { return evaluate(g).length; }
  std::int64_t depth(const GroupType& g) { return evaluate(g).depth; }

  /// Maximal subgroups of `g` with simple-factor lists shared across calls.
  MaximalSubgroups maximal_subgroups(const GroupType& g) {
    return maximal_connected_with(g, [this](const SimpleType& s) -> const MaximalSubgroups& {
      return simple_maximals(s);
    });
  }

  std::size_t memo_size() const {
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
  }

 private:
  const MaximalSubgroups& simple_maximals(const SimpleType& s) {
    {
      std::shared_lock lock(simple_mutex_);
      if (auto it = simple_.find(s); it != simple_.end()) return it->second;
    }
    MaximalSubgroups computed = maximal_connected_simple(s);
    std::unique_lock lock(simple_mutex_);
    // std::map nodes are stable, so references stay valid after later inserts.
    return simple_.emplace(s, std::move(computed)).first->second;
  }

  Options options_{};
  mutable std::shared_mutex memo_mutex_;
  std::unordered_map<GroupType, Values> memo_;
  mutable std::shared_mutex simple_mutex_;
  std::map<SimpleType, MaximalSubgroups> simple_;
};

/// Formula depth, upgraded to the oracle's exact value when the group lies
/// in the curated closure.
inline BoundsOrExact refined_depth(const GroupType& g, Oracle& oracle) {
  const BoundsOrExact formula = depth(g);
  if (formula.is_exact() || !in_curated_closure(g)) return formula;
  return BoundsOrExact::exact_value(oracle.depth(g));
}

struct CrossValidation {
  GroupType group;
  std::int64_t formula_length = 0;
  std::int64_t oracle_length = 0;
  BoundsOrExact formula_depth;
  std::int64_t oracle_depth = 0;
  bool pass = false;
};

/// Oracle against formulas: lengths must agree, and the oracle depth must
/// equal the formula depth when exact or lie in its interval otherwise.
inline std::vector<CrossValidation> cross_validate(const std::vector<GroupType>& scope, Oracle& oracle) {
  std::vector<CrossValidation> out;
  out.reserve(scope.size());
  for (const auto& g : scope) {
    CrossValidation row;
    row.group = g;
    row.formula_length = length(g);
    row.formula_depth = depth(g);
    const Oracle::Values v = oracle.evaluate(g);
    row.oracle_length = v.length;
    row.oracle_depth = v.depth;
    row.pass = row.formula_length == row.oracle_length && row.formula_depth.contains(row.oracle_depth);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace liechain
