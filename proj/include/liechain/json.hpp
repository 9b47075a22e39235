#pragma once

#include <json.hpp>

#include <string>

#include "liechain/chains.hpp"
#include "liechain/formulas.hpp"
#include "liechain/oracle.hpp"
#include "liechain/subgroup_db.hpp"

// JSON shapes of the query, chain, report and cross-validation outputs.
// Keys are emitted in insertion order so output is byte-deterministic.

namespace liechain::json {

using Json = nlohmann::ordered_json;

inline Json params(const EmbeddingKind& k) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, kind::Reducible>) {
          return Json{{"k", v.k}};
        } else if constexpr (std::is_same_v<T, kind::TensorProduct>) {
          return Json{{"left", family_name(v.left)},
                      {"a", v.a},
                      {"right", family_name(v.right)},
                      {"b", v.b},
                      {"equal_factors", v.equal_factors}};
        } else if constexpr (std::is_same_v<T, kind::ClassicalInSU>) {
          return Json{{"family", family_name(v.family)}};
        } else if constexpr (std::is_same_v<T, kind::IrreducibleSimple>) {
          return Json{{"source", v.source}};
        } else if constexpr (std::is_same_v<T, kind::ExceptionalTable>) {
          return Json{{"row", v.row}};
        } else if constexpr (std::is_same_v<T, kind::Diagonal>) {
          return Json{{"factor", v.factor.spec()}};
        } else if constexpr (std::is_same_v<T, kind::FactorMax>) {
          return Json{{"factor_index", v.factor_index},
                      {"factor", v.factor.spec()},
                      {"inner", {{"kind", v.inner->name()}, {"params", params(*v.inner)}}}};
        } else {
          return Json::object();
        }
      },
      k.value);
}

inline Json maximals(const GroupType& parent, const MaximalSubgroups& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) {
    entries.push_back({{"subgroup", e.subgroup.spec()}, {"kind", e.kind.name()}, {"params", params(e.kind)}});
  }
  return {{"parent", parent.spec()},
          {"entries", std::move(entries)},
          {"complete", m.completeness.complete},
          {"reason", m.completeness.reason}};
}

inline Json chain(const Chain& c) {
  Json nodes = Json::array();
  for (const auto& n : c.nodes) nodes.push_back(n.spec());
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(s.name());
  return {{"nodes", std::move(nodes)}, {"steps", std::move(steps)}, {"length", c.length()}};
}

inline Json bounds(const BoundsOrExact& b) {
  if (b.is_exact()) return Json(b.lower);
  return Json{{"lower", b.lower}, {"upper", b.upper}};
}

inline Json check(const CheckResult& c) {
  return {{"claim", c.claim},
          {"paper_ref", c.statement},
          {"inputs", c.inputs},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"pass", c.pass}};
}

inline Json cross_validation(const CrossValidation& row) {
  return {{"group", row.group.spec()},
          {"formula_l", row.formula_length},
          {"oracle_l", row.oracle_length},
          {"formula_depth", bounds(row.formula_depth)},
          {"oracle_depth", row.oracle_depth},
          {"pass", row.pass}};
}

inline Json verify(const VerifyReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"parent", s.parent.spec()}, {"child", s.child.spec()}, {"verdict", verdict_name(s.verdict)}});
  }
  Json out{{"steps", std::move(steps)}, {"overall", overall_name(r.overall)}};
  if (r.invalid_step) out["invalid_step"] = *r.invalid_step;
  if (!r.unknown_steps.empty()) out["unknown_steps"] = r.unknown_steps;
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

}  // namespace liechain::json
