#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "liechain/errors.hpp"
#include "liechain/formulas.hpp"
#include "liechain/group_type.hpp"
#include "liechain/oracle.hpp"
#include "liechain/parse.hpp"
#include "liechain/subgroup_db.hpp"

namespace liechain {

/// G = G_0 > G_1 > ... > G_t = 1 with one embedding annotation per step.
struct Chain {
  std::vector<GroupType> nodes;
  std::vector<EmbeddingKind> steps;

  std::size_t length() const noexcept { return steps.size(); }
};

/// Annotates consecutive pairs by looking the child up among the parent's
/// maximal connected subgroups; unmatched steps are marked Terminal.
inline Chain annotate(std::vector<GroupType> nodes) {
  Chain c;
  c.steps.reserve(nodes.empty() ? 0 : nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    EmbeddingKind k{kind::Terminal{}};
    if (!nodes[i].is_trivial()) {
      for (auto& e : maximal_connected(nodes[i]).entries) {
        if (e.subgroup == nodes[i + 1]) {
          k = std::move(e.kind);
          break;
        }
      }
    }
    c.steps.push_back(std::move(k));
  }
  c.nodes = std::move(nodes);
  return c;
}

namespace detail {

inline std::vector<GroupType> torus_descent(GroupType g) {
  std::vector<GroupType> out{g};
  while (g.torus_rank() > 0) {
    g = g.with_torus(g.torus_rank() - 1);
    out.push_back(g);
  }
  return out;
}

/// First step of a longest chain of a simple group.
inline GroupType longest_entry(const SimpleType& s) {
  const int n = s.degree();
  switch (s.family()) {
    case Family::SU: return canonicalize(Family::SU, n - 1) * GroupType::torus(1);
    case Family::Sp: return canonicalize(Family::SU, 2) * canonicalize(Family::Sp, n - 2);
    case Family::SO: return canonicalize(Family::SO, 4) * canonicalize(Family::SO, n - 4);
    case Family::G2: return canonicalize(Family::SU, 3);
    case Family::F4: return canonicalize(Family::SO, 9);
    case Family::E6: return canonicalize(Family::SO, 10) * GroupType::torus(1);
    case Family::E7: return canonicalize(Family::SO, 12) * canonicalize(Family::SU, 2);
    case Family::E8: return canonicalize(Family::SO, 16);
  }
  return {};
}

// Torus first, then simple factors in canonical order.
inline std::vector<GroupType> longest_nodes(const GroupType& g) {
  if (g.is_trivial()) return {g};
  if (g.torus_rank() > 0) {
    if (g.is_torus()) return torus_descent(g);
    std::vector<GroupType> out{g};
    auto tail = longest_nodes(g.with_torus(g.torus_rank() - 1));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
  if (g.is_simple()) {
    std::vector<GroupType> out{g};
    auto tail = longest_nodes(longest_entry(g.factors().front()));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
  const SimpleType first = g.factors().front();
  const GroupType rest = g.without_one(first);
  std::vector<GroupType> out;
  for (const auto& node : longest_nodes(GroupType::simple(first))) out.push_back(node * rest);
  auto tail = longest_nodes(rest);
  out.insert(out.end(), tail.begin() + 1, tail.end());
  return out;
}

}  // namespace detail

/// An unrefinable chain of length l(G): SU_n > SU_{n-1}T_1 > SU_{n-1} > ...,
/// Sp_{2k} splitting off Sp_2 blocks, SO_n splitting off SO_4 blocks, and the
/// exceptional groups entering through G2 > SU_3, F4 > SO_9, E6 > SO_10 T_1,
/// E7 > SO_12 SU_2, E8 > SO_16.
inline Chain max_chain(const GroupType& g) { return annotate(detail::longest_nodes(g)); }

/// Curated shortest descent of a simple type down to SU_2.
struct Descent {
  std::vector<GroupType> nodes;
  std::string provenance;
};

inline Descent min_descent(const SimpleType& s) {
  const GroupType self = GroupType::simple(s);
  const GroupType su2 = canonicalize(Family::SU, 2);
  const int n = s.degree();
  switch (s.family()) {
    case Family::SU:
      if (n == 2) return {{self}, "SU(2)"};
      if (n == 3) return {{self, su2}, "SO(3) < SU(3) irreducible"};
      if (n == 7) {
        return {{self, canonicalize(Family::SO, 7), canonicalize(Family::G2), su2}, "SU(7) > SO(7) > G2 > SU(2)"};
      }
      if (n % 2 == 0) return {{self, canonicalize(Family::Sp, n), su2}, "SU(n) > Sp(n) > principal SU(2)"};
      return {{self, canonicalize(Family::SO, n), su2}, "SU(n) > SO(n) > principal SU(2)"};
    case Family::Sp: return {{self, su2}, "principal SU(2) < Sp(n)"};
    case Family::SO:
      if (n == 7) return {{self, canonicalize(Family::G2), su2}, "SO(7) > G2 > SU(2)"};
      if (n == 8) return {{self, canonicalize(Family::SU, 3), su2}, "SO(8) > SU(3) adjoint > SU(2)"};
      if (n % 2 == 0) {
        return {{self, canonicalize(Family::SO, n - 1), su2}, "SO(2r) > SO(2r-1) > principal SU(2)"};
      }
      return {{self, su2}, "principal SU(2) < SO(n), n odd >= 9"};
    case Family::E6: return {{self, canonicalize(Family::F4), su2}, "E6 > F4 > A1"};
    default: return {{self, su2}, std::string(family_name(s.family())) + " > A1"};
  }
}

namespace detail {

inline void append_greedy_min(GroupType node, Oracle& oracle, std::vector<GroupType>& out) {
  while (!node.is_trivial()) {
    const std::int64_t target = oracle.depth(node) - 1;
    const MaximalSubgroups m = oracle.maximal_subgroups(node);
    auto it = std::find_if(m.entries.begin(), m.entries.end(),
                           [&](const MaximalEntry& e) { return oracle.depth(e.subgroup) == target; });
    node = it->subgroup;
    out.push_back(node);
  }
}

}  // namespace detail

/// A chain of length depth(G) when depth is exact: tori, S^k x T_z (torus,
/// then diagonals, then the curated descent of S), or, given an oracle, any
/// group in the curated closure (greedy descent along oracle depths).
inline std::optional<Chain> min_chain(const GroupType& g, Oracle* oracle = nullptr) {
  const BoundsOrExact formula = depth(g);
  if (!formula.is_exact()) {
    if (oracle == nullptr || !in_curated_closure(g)) return std::nullopt;
    std::vector<GroupType> nodes{g};
    detail::append_greedy_min(g, *oracle, nodes);
    return annotate(std::move(nodes));
  }
  std::vector<GroupType> nodes = detail::torus_descent(g);
  GroupType node = nodes.back();
  if (!node.is_trivial()) {
    const SimpleType s = node.factors().front();
    while (node.factors().size() > 1) {
      node = node.without_one(s);
      nodes.push_back(node);
    }
    const Descent d = min_descent(s);
    nodes.insert(nodes.end(), d.nodes.begin() + 1, d.nodes.end());
    nodes.push_back(GroupType::torus(1));
    nodes.push_back(GroupType::trivial());
  }
  return annotate(std::move(nodes));
}

struct StepVerdict {
  GroupType parent;
  GroupType child;
  Verdict verdict;
};

enum class Overall { valid, invalid, valid_modulo_unknown };

inline const char* overall_name(Overall o) {
  switch (o) {
    case Overall::valid: return "valid";
    case Overall::invalid: return "invalid";
    case Overall::valid_modulo_unknown: return "valid-modulo-unknown";
  }
  return "?";
}

struct VerifyReport {
  std::vector<StepVerdict> steps;
  Overall overall = Overall::valid;
  std::optional<std::size_t> invalid_step;
  std::vector<std::size_t> unknown_steps;
  std::string reason;
};

/// Checks that each step is a maximal connected subgroup and that the chain
/// is well formed: nonempty, strictly decreasing dimension, ending at 1.
inline VerifyReport verify_chain(const Chain& c) {
  VerifyReport r;
  if (c.nodes.empty()) {
    r.overall = Overall::invalid;
    r.reason = "empty chain";
    return r;
  }
  if (c.steps.size() + 1 != c.nodes.size()) {
    r.overall = Overall::invalid;
    r.reason = "step count does not match node count";
    return r;
  }
  for (std::size_t i = 0; i + 1 < c.nodes.size(); ++i) {
    const GroupType& parent = c.nodes[i];
    const GroupType& child = c.nodes[i + 1];
    Verdict v = Verdict::no;
    if (dims(child).dim < dims(parent).dim) v = is_maximal_step(parent, child);
    r.steps.push_back({parent, child, v});
    if (v == Verdict::no && !r.invalid_step) {
      r.invalid_step = i;
      r.reason = child.spec() + " is not a maximal connected subgroup of " + parent.spec();
      if (dims(child).dim >= dims(parent).dim) r.reason = "dimension does not decrease at step " + std::to_string(i);
    }
    if (v == Verdict::unknown) r.unknown_steps.push_back(i);
  }
  if (r.invalid_step) {
    r.overall = Overall::invalid;
  } else if (!c.nodes.back().is_trivial()) {
    r.overall = Overall::invalid;
    r.reason = "chain does not end at the trivial group";
  } else if (!r.unknown_steps.empty()) {
    r.overall = Overall::valid_modulo_unknown;
  }
  return r;
}

/// One group-spec per line, descending, "1" last. Blank lines and lines
/// starting with '#' are skipped.
inline Chain parse_chain(std::string_view text) {
  std::vector<GroupType> nodes;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      nodes.push_back(parse_group(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return annotate(std::move(nodes));
}

inline std::string format_chain(const Chain& c) {
  std::string out;
  for (const auto& n : c.nodes) out += n.spec() + "\n";
  return out;
}

}  // namespace liechain
