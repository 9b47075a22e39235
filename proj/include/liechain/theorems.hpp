#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "liechain/chains.hpp"
#include "liechain/formulas.hpp"
#include "liechain/group_type.hpp"
#include "liechain/oracle.hpp"
#include "liechain/subgroup_db.hpp"
#include "liechain/surd.hpp"

namespace liechain {

/// Every canonical simple type with degree <= max_degree (exceptional types
/// always included), in canonical order.
inline std::vector<SimpleType> simple_types_up_to_degree(int max_degree) {
  std::vector<SimpleType> out;
  for (int n = 2; n <= max_degree; ++n) out.push_back(SimpleType::su(n));
  for (int n = 4; n <= max_degree; n += 2) out.push_back(SimpleType::sp(n));
  for (int n = 7; n <= max_degree; ++n) out.push_back(SimpleType::so(n));
  for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8}) {
    out.push_back(SimpleType::exceptional(f));
  }
  return out;
}

/// Every canonical group type of dimension at most max_dim whose classical
/// factors have degree <= max_degree, including all tori and the trivial group.
inline std::vector<GroupType> enumerate_groups(std::int64_t max_dim, int max_degree) {
  std::vector<SimpleType> simple;
  for (const auto& s : simple_types_up_to_degree(max_degree)) {
    if (s.dim() <= max_dim) simple.push_back(s);
  }
  std::vector<GroupType> out;
  std::vector<SimpleType> current;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t used) {
    for (std::int64_t z = 0; used + z <= max_dim; ++z) out.emplace_back(static_cast<int>(z), current);
    for (std::size_t i = from; i < simple.size(); ++i) {
      if (used + simple[i].dim() > max_dim) continue;
      current.push_back(simple[i]);
      rec(i, used + simple[i].dim());
      current.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Products of at most `max_factors` items drawn from T_1..T_5 and the
/// curated simple types, canonicalized and deduplicated, in first-seen order.
inline std::vector<GroupType> curated_scope(int max_factors) {
  std::vector<GroupType> items;
  for (int k = 1; k <= 5; ++k) items.push_back(GroupType::torus(k));
  for (const auto& s : curated_simple_types()) items.push_back(GroupType::simple(s));
  std::vector<GroupType> out;
  std::unordered_set<GroupType> seen;
  std::function<void(std::size_t, int, const GroupType&)> rec = [&](std::size_t from, int left, const GroupType& acc) {
    for (std::size_t i = from; i < items.size(); ++i) {
      const GroupType g = acc * items[i];
      if (seen.insert(g).second) out.push_back(g);
      if (left > 1) rec(i, left - 1, g);
    }
  };
  rec(0, max_factors, GroupType::trivial());
  return out;
}

struct SuiteOptions {
  int max_degree = 60;
  std::int64_t max_dim = 60;
};

struct SuiteResult {
  std::string name;
  Report report;
  double seconds = 0;
};

namespace suites {

inline Report general(const SuiteOptions& o) {
  Report r;
  for (const auto& g : enumerate_groups(o.max_dim, o.max_degree)) r.append(check_general(g));
  for (const auto& s : simple_types_up_to_degree(o.max_degree)) {
    const std::int64_t l = length(s);
    r.add("general.simple", "2r <= l(S) < 3r", s.spec(), std::to_string(l), std::to_string(s.rank()),
          2 * s.rank() <= l && l < 3 * s.rank());
  }
  return r;
}

inline Report dimlen(const SuiteOptions& o) {
  Report r;
  for (const auto& g : enumerate_groups(o.max_dim, o.max_degree)) r.append(check_dimlen(g));
  for (const auto& s : simple_types_up_to_degree(o.max_degree)) r.append(check_dimlen(GroupType::simple(s)));
  return r;
}

inline Report sqrt_bound(const SuiteOptions& o) {
  Report r;
  for (const auto& g : enumerate_groups(o.max_dim, o.max_degree)) {
    if (!g.is_trivial()) r.append(check_sqrt_lower_bound(g));
  }
  for (const auto& s : simple_types_up_to_degree(o.max_degree)) {
    r.append(check_sqrt_lower_bound(GroupType::simple(s)));
  }
  const Surd e8 = beta_constant() * (Surd::sqrt(248) - alpha_constant());
  r.add("sqrt.e8_equality", "l(E8) = beta (sqrt(248) - alpha)", "E8", "20", e8.display(), e8 == Surd(20));
  // Grid of rationals in quarter steps around each premise boundary.
  for (int i = 0; i <= 48; ++i) {
    for (int j = 0; j <= 48; ++j) {
      for (int base : {0, 75}) {
        const Rational x = Rational(base + i, 4) + (base ? 3 : 0);
        const Rational y = Rational(base + j, 4) + (base ? 3 : 0);
        const ElemResult e = elem_inequalities(x, y);
        if (!e.consistent()) {
          r.add("sqrt.elementary", "elementary inequalities (i)-(iii)", "x=" + x.str() + " y=" + y.str(), "", "", false);
        }
      }
    }
  }
  r.add("sqrt.elementary", "elementary inequalities (i)-(iii)", "quarter-step grid", "", "", true);
  return r;
}

inline Report smalll(const SuiteOptions&) {
  Report r;
  std::vector<int> tuple;
  std::size_t tuples = 0;
  std::function<void(int, int)> rec = [&](int k, int n1) {
    if (static_cast<int>(tuple.size()) == k) {
      ++tuples;
      const Surd d = smalll_deficit(tuple);
      const bool excluded = n1 == 7 && k == 2;
      const bool pass = excluded ? d.sign() < 0 : d.sign() >= 0;
      if (!pass || excluded) {
        std::string in;
        for (int v : tuple) in += (in.empty() ? "" : ",") + std::to_string(v);
        r.add(excluded ? "smalll.excluded" : "smalll.claim", excluded ? "deficit < 0 at (n_1,k)=(7,2)" : "deficit >= 0",
              "(" + in + ")", d.display(), "0", pass);
      }
      return;
    }
    for (int v = 7; v <= n1; ++v) {
      tuple.push_back(v);
      rec(k, n1);
      tuple.pop_back();
    }
  };
  std::size_t count = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int n1 = 7; n1 <= 20; ++n1) {
      tuple = {n1};
      rec(k, n1);
    }
  }
  for (const auto& c : r.checks) count += c.pass ? 0 : 1;
  r.add("smalll.claim", "deficit >= 0 unless (n_1,k)=(7,2)", "2<=k<=4, 7<=n_i<=n_1<=20",
        std::to_string(tuples) + " tuples", std::to_string(count) + " failures", count == 0);
  return r;
}

/// Depth of the complex form, as data: one more than the compact depth.
inline std::int64_t complex_depth_table(const SimpleType& s) {
  static const std::map<std::string, std::int64_t> table = {
      {"SU(2)", 3}, {"SU(3)", 4}, {"SU(4)", 5}, {"SU(5)", 5}, {"SU(6)", 5}, {"SU(7)", 6}, {"SU(8)", 5},
      {"Sp(4)", 4}, {"Sp(6)", 4}, {"Sp(8)", 4}, {"SO(7)", 5}, {"SO(8)", 5}, {"SO(9)", 4}, {"SO(10)", 5},
      {"G2", 4},    {"F4", 4},    {"E6", 5},    {"E7", 4},    {"E8", 4}};
  auto it = table.find(s.spec());
  return it == table.end() ? -1 : it->second;
}

inline Report liedep(const SuiteOptions& o, Oracle& oracle) {
  Report r;
  for (const auto& s : simple_types_up_to_degree(o.max_degree)) {
    const std::int64_t d = depth_simple(s);
    r.add("liedep.range", "depth(S) in {2,3,4,5}", s.spec(), std::to_string(d), "", d >= 2 && d <= 5);
    if (const std::int64_t c = complex_depth_table(s); c >= 0) {
      r.add("liedep.complex", "depth(S) = depth(S(C)) - 1", s.spec(), std::to_string(d), std::to_string(c - 1),
            d == c - 1);
    }
    if (auto chain = min_chain(GroupType::simple(s))) {
      const VerifyReport v = verify_chain(*chain);
      r.add("liedep.witness", "min_chain has length depth(S) and verifies", s.spec(),
            std::to_string(chain->length()), std::to_string(d),
            static_cast<std::int64_t>(chain->length()) == d && v.overall != Overall::invalid);
    }
  }
  for (const auto& s : curated_simple_types()) {
    const std::int64_t od = oracle.depth(GroupType::simple(s));
    r.add("liedep.oracle", "oracle depth = depth(S)", s.spec(), std::to_string(od), std::to_string(depth_simple(s)),
          od == depth_simple(s));
  }
  return r;
}

inline Report depbds(const SuiteOptions& o, Oracle& oracle) {
  Report r;
  for (const auto& s : curated_simple_types()) {
    for (int k = 1; k <= 4 && k * s.dim() <= 3 * o.max_dim; ++k) {
      const GroupType g = power(GroupType::simple(s), k);
      const std::int64_t od = oracle.depth(g);
      r.add("depbds.homog", "depth(S^k) = depth(S) + k - 1", g.spec(), std::to_string(od),
            std::to_string(depth_simple(s) + k - 1), od == depth_simple(s) + k - 1);
    }
  }
  for (const auto& g : enumerate_groups(o.max_dim, o.max_degree)) {
    if (!in_curated_closure(g) || g.torus_rank() > 0) continue;
    const BoundsOrExact b = depth(g);
    const std::int64_t od = oracle.depth(g);
    r.add("depbds.bounds", "z + sum(k_i+1) <= depth(G) <= z + sum(k_i+depth(S_i)-1)", g.spec(), std::to_string(od),
          b.str(), b.contains(od));
  }
  return r;
}

/// l(G) = depth(G) or cd(G) = 1, decided from refined depth; `undetermined`
/// when the interval straddles the question.
enum class Decision { yes, no, undetermined };

inline Decision decide_cd_equals(const GroupType& g, std::int64_t value, Oracle& oracle) {
  const BoundsOrExact cd = chain_difference(length(g), refined_depth(g, oracle));
  if (!cd.contains(value)) return Decision::no;
  return cd.is_exact() ? Decision::yes : Decision::undetermined;
}

inline Report classification(const char* claim, const char* statement, std::int64_t cd_value,
                             bool (*predicted)(const GroupType&), const SuiteOptions& o, Oracle& oracle) {
  Report r;
  std::size_t members = 0;
  for (const auto& g : enumerate_groups(o.max_dim, o.max_degree)) {
    if (g.is_trivial()) continue;
    const Decision d = decide_cd_equals(g, cd_value, oracle);
    const bool expected = predicted(g);
    if (d == Decision::yes) ++members;
    if (d == Decision::undetermined || (d == Decision::yes) != expected) {
      const BoundsOrExact cd = chain_difference(length(g), refined_depth(g, oracle));
      r.add(claim, statement, g.spec(), "cd=" + cd.str(), expected ? "predicted member" : "predicted non-member",
            false);
    }
  }
  r.add(std::string(claim) + ".members", statement, "dim <= " + std::to_string(o.max_dim), std::to_string(members), "",
        true);
  return r;
}

inline Report ld(const SuiteOptions& o, Oracle& oracle) {
  return classification("ld", "l(G) = depth(G) iff G is a torus or G' = SU_2", 0, &is_length_eq_depth, o, oracle);
}

inline Report cd(const SuiteOptions& o, Oracle& oracle) {
  return classification("cd", "cd(G) = 1 iff G' in {SU_3, SU_2^2, SU_3 x SU_2}", 1, &is_cd_one, o, oracle);
}

inline Report lcd(const SuiteOptions& o, Oracle& oracle) {
  Report r;
  for (const auto& g : enumerate_groups(o.max_dim, o.max_degree)) {
    if (g.is_torus()) continue;
    r.append(check_lcd(g, refined_depth(g, oracle)));
  }
  for (const auto& s : simple_types_up_to_degree(o.max_degree)) r.append(check_lcd(GroupType::simple(s)));
  return r;
}

inline Report complex(const SuiteOptions& o) {
  Report r;
  for (const auto& s : simple_types_up_to_degree(std::min(o.max_degree, 40))) {
    const GroupType g = GroupType::simple(s);
    r.add("complex", "l(S) < l(S(C))", s.spec(), std::to_string(length(g)),
          std::to_string(length_complex_semisimple(g)), length(g) < length_complex_semisimple(g));
  }
  return r;
}

/// min over classical G on C^n of l(G).
inline std::int64_t min_classical_length(std::int64_t n) {
  std::int64_t best = f_classical(Family::SU, n);
  if (n >= 4 && n % 2 == 0) best = std::min(best, f_classical(Family::Sp, n));
  if (n >= 7) best = std::min(best, f_classical(Family::SO, n));
  return best;
}

inline Report tables(const SuiteOptions& o) {
  Report r;
  for (const auto& h : simple_types_up_to_degree(std::min(o.max_degree, 30))) {
    if (!is_classical(h.family())) continue;
    const std::int64_t n = min_irrep_dim(h);
    const std::int64_t fh = length(h);
    for (Family f : {Family::SU, Family::Sp, Family::SO}) {
      if ((f == Family::Sp && (n < 4 || n % 2 != 0)) || (f == Family::SO && n < 7)) continue;
      const std::int64_t fg = f_classical(f, n);
      r.add("tables.classical_embedding", "f_G(N(H,k)) > f_H(k)", h.spec() + " in " + std::string(family_name(f)) + "(" +
            std::to_string(n) + ")", std::to_string(fg), std::to_string(fh), fg > fh);
    }
  }
  const std::array<std::pair<Family, std::int64_t>, 5> m_row = {
      {{Family::G2, 7}, {Family::F4, 31}, {Family::E6, 32}, {Family::E7, 69}, {Family::E8, 309}}};
  for (const auto& [f, m] : m_row) {
    const SimpleType h = SimpleType::exceptional(f);
    const std::int64_t computed = min_classical_length(min_irrep_dim(h));
    r.add("tables.exceptional_m", "m = min f_G(N(H))", h.spec(), std::to_string(computed), std::to_string(m),
          computed == m);
    r.add("tables.exceptional_bound", "l(H) < m", h.spec(), std::to_string(length(h)), std::to_string(m), length(h) < m);
  }
  return r;
}

inline Report lendim(const SuiteOptions& o) {
  Report r;
  for (const auto& s : simple_types_up_to_degree(o.max_degree)) {
    if (!is_classical(s.family())) continue;
    const Surd f = lendim_formula(s);
    r.add("lendim", "length as a function of dim is exact", s.spec(), f.str(), std::to_string(length(s)),
          f == Surd(static_cast<long long>(length(s))));
  }
  for (Family fam : {Family::SU, Family::Sp, Family::SO}) {
    const SimpleType s = SimpleType::classical(fam, 400);
    const double ratio = static_cast<double>(length(s)) / std::sqrt(static_cast<double>(s.dim()));
    const double limit = length_dimension_limit(fam).to_double();
    r.add("lendim.limit", "|l(S)/sqrt(dim S) - limit| < 0.05 at degree 400", s.spec(), std::to_string(ratio),
          std::to_string(limit), std::abs(ratio - limit) < 0.05);
  }
  return r;
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"general", "dimlen", "sqrt",    "smalll", "liedep", "depbds",
                                                 "ld",      "cd",     "lcd",     "complex", "tables", "lendim"};
  return names;
}

/// Runs one named suite; throws DomainError for an unknown name.
inline Report run_suite(const std::string& name, const SuiteOptions& o, Oracle& oracle) {
  if (name == "general") return suites::general(o);
  if (name == "dimlen") return suites::dimlen(o);
  if (name == "sqrt") return suites::sqrt_bound(o);
  if (name == "smalll") return suites::smalll(o);
  if (name == "liedep") return suites::liedep(o, oracle);
  if (name == "depbds") return suites::depbds(o, oracle);
  if (name == "ld") return suites::ld(o, oracle);
  if (name == "cd") return suites::cd(o, oracle);
  if (name == "lcd") return suites::lcd(o, oracle);
  if (name == "complex") return suites::complex(o);
  if (name == "tables") return suites::tables(o);
  if (name == "lendim") return suites::lendim(o);
  throw DomainError("unknown suite: " + name);
}

}  // namespace liechain
