#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "liechain/errors.hpp"
#include "liechain/group_type.hpp"

namespace liechain {

struct EmbeddingKind;

/// Why a subgroup is maximal connected in its parent.
namespace kind {

/// Stabilizer of a non-degenerate k-space: (SU_k x SU_{n-k})T_1, Sp_k x Sp_{n-k}, SO_k x SO_{n-k}.
struct Reducible {
  int k;
};

/// Cl_a (x) Cl_b acting on the tensor product of natural modules, n = ab.
/// `equal_factors` marks a = b within one family, where maximality is not
/// settled by the classification tables.
struct TensorProduct {
  Family left;
  int a;
  Family right;
  int b;
  bool equal_factors;
};

/// Sp_n or SO_n inside SU_n.
struct ClassicalInSU {
  Family family;
};

/// SU_{n/2}T_1 inside Sp_n or SO_n (n even).
struct LeviHalf {};

/// Simple subgroup acting irreducibly on the natural module, not itself a
/// classical group on it; `source` names the module.
struct IrreducibleSimple {
  std::string source;
};

/// A row of the exceptional-group table, e.g. "F4 > B4".
struct ExceptionalTable {
  std::string row;
};

/// D(S^2) replacing two copies of S.
struct Diagonal {
  SimpleType factor;
};

/// One copy of a simple factor replaced by one of its maximal subgroups.
struct FactorMax {
  int factor_index;
  SimpleType factor;
  std::shared_ptr<const EmbeddingKind> inner;
};

/// G'Z_0 with Z_0 of codimension one in the central torus.
struct TorusDrop {};

/// A chain step with no database justification (user-supplied chains).
struct Terminal {};

}  // namespace kind

struct EmbeddingKind {
  using Variant = std::variant<kind::Reducible, kind::TensorProduct, kind::ClassicalInSU, kind::LeviHalf,
                               kind::IrreducibleSimple, kind::ExceptionalTable, kind::Diagonal,
                               kind::FactorMax, kind::TorusDrop, kind::Terminal>;
  Variant value;

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(value);
  }

  template <typename T>
  const T& as() const {
    return std::get<T>(value);
  }

  std::string name() const {
    static constexpr std::array<const char*, 10> names = {
        "reducible",         "tensor_product",    "classical_in_su", "levi_half",  "irreducible_simple",
        "exceptional_table", "diagonal",          "factor_max",      "torus_drop", "terminal"};
    return names[value.index()];
  }

  /// Short human-readable label, e.g. "reducible k=1" or "factor SU(3): tensor 2x3".
  std::string describe() const {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, kind::Reducible>) {
            return "reducible k=" + std::to_string(v.k);
          } else if constexpr (std::is_same_v<T, kind::TensorProduct>) {
            return "tensor " + std::string(family_name(v.left)) + "(" + std::to_string(v.a) + ") (x) " +
                   std::string(family_name(v.right)) + "(" + std::to_string(v.b) + ")" +
                   (v.equal_factors ? " [a=b]" : "");
          } else if constexpr (std::is_same_v<T, kind::ClassicalInSU>) {
            return "classical " + std::string(family_name(v.family)) + " in SU";
          } else if constexpr (std::is_same_v<T, kind::LeviHalf>) {
            return "Levi SU(n/2)T";
          } else if constexpr (std::is_same_v<T, kind::IrreducibleSimple>) {
            return "irreducible: " + v.source;
          } else if constexpr (std::is_same_v<T, kind::ExceptionalTable>) {
            return "exceptional table: " + v.row;
          } else if constexpr (std::is_same_v<T, kind::Diagonal>) {
            return "diagonal " + v.factor.spec();
          } else if constexpr (std::is_same_v<T, kind::FactorMax>) {
            return "factor " + v.factor.spec() + ": " + v.inner->describe();
          } else if constexpr (std::is_same_v<T, kind::TorusDrop>) {
            return "torus drop";
          } else {
            return "unannotated";
          }
        },
        value);
  }
};

struct MaximalEntry {
  GroupType subgroup;
  EmbeddingKind kind;
};

struct CompletenessFlag {
  bool complete = true;
  std::string reason;
};

struct MaximalSubgroups {
  std::vector<MaximalEntry> entries;
  CompletenessFlag completeness;

  bool contains(const GroupType& g) const {
    return std::any_of(entries.begin(), entries.end(), [&](const MaximalEntry& e) { return e.subgroup == g; });
  }
};

/// Simple types whose maximal connected subgroup lists are complete.
inline const std::vector<SimpleType>& curated_simple_types() {
  static const std::vector<SimpleType> curated = {
      SimpleType::su(2), SimpleType::su(3), SimpleType::su(4), SimpleType::su(5), SimpleType::su(6),
      SimpleType::sp(4), SimpleType::sp(6), SimpleType::so(7), SimpleType::so(8),
      SimpleType::exceptional(Family::G2)};
  return curated;
}

inline bool is_curated(const SimpleType& s) {
  const auto& c = curated_simple_types();
  return std::find(c.begin(), c.end(), s) != c.end();
}

/// True when every simple factor is curated (tori are always covered).
inline bool in_curated_closure(const GroupType& g) {
  return std::all_of(g.factors().begin(), g.factors().end(), [](const SimpleType& s) { return is_curated(s); });
}

namespace detail {

class EntryCollector {
 public:
  void add(const GroupType& g, EmbeddingKind kind) {
    if (seen_.insert(g).second) entries_.push_back({g, std::move(kind)});
  }

  std::vector<MaximalEntry> take() { return std::move(entries_); }

 private:
  std::unordered_set<GroupType> seen_;
  std::vector<MaximalEntry> entries_;
};

inline GroupType with_t1(const GroupType& g) { return g * GroupType::torus(1); }

inline void add_special_unitary(int n, EntryCollector& out) {
  for (int k = 1; k <= n / 2; ++k) {
    out.add(with_t1(canonicalize(Family::SU, k) * canonicalize(Family::SU, n - k)), {kind::Reducible{k}});
  }
  for (int a = 2; a * a <= n; ++a) {
    if (n % a != 0) continue;
    const int b = n / a;
    out.add(canonicalize(Family::SU, a) * canonicalize(Family::SU, b),
            {kind::TensorProduct{Family::SU, a, Family::SU, b, a == b}});
  }
  if (n % 2 == 0 && n >= 4) out.add(canonicalize(Family::Sp, n), {kind::ClassicalInSU{Family::Sp}});
  out.add(canonicalize(Family::SO, n), {kind::ClassicalInSU{Family::SO}});
  if (n == 6) {
    out.add(canonicalize(Family::SU, 3), {kind::IrreducibleSimple{"SU(3) on the symmetric square of C^3"}});
  }
}

inline void add_symplectic(int n, EntryCollector& out) {
  for (int k = 2; k <= n / 2; k += 2) {
    out.add(canonicalize(Family::Sp, k) * canonicalize(Family::Sp, n - k), {kind::Reducible{k}});
  }
  out.add(with_t1(canonicalize(Family::SU, n / 2)), {kind::LeviHalf{}});
  for (int a = 2; a <= n / 3; a += 2) {
    if (n % a != 0) continue;
    const int b = n / a;
    out.add(canonicalize(Family::Sp, a) * canonicalize(Family::SO, b),
            {kind::TensorProduct{Family::Sp, a, Family::SO, b, false}});
  }
  out.add(canonicalize(Family::SU, 2),
          {kind::IrreducibleSimple{"principal SU(2) on the irreducible " + std::to_string(n) + "-dim module"}});
}

inline void add_orthogonal(int n, EntryCollector& out) {
  for (int k = 1; k <= n / 2; ++k) {
    out.add(canonicalize(Family::SO, k) * canonicalize(Family::SO, n - k), {kind::Reducible{k}});
  }
  if (n % 2 == 0) out.add(with_t1(canonicalize(Family::SU, n / 2)), {kind::LeviHalf{}});
  for (int a = 3; a * a <= n; ++a) {
    if (n % a != 0) continue;
    const int b = n / a;
    out.add(canonicalize(Family::SO, a) * canonicalize(Family::SO, b),
            {kind::TensorProduct{Family::SO, a, Family::SO, b, a == b}});
  }
  for (int a = 2; a * a <= n; a += 2) {
    if (n % a != 0 || (n / a) % 2 != 0) continue;
    const int b = n / a;
    out.add(canonicalize(Family::Sp, a) * canonicalize(Family::Sp, b),
            {kind::TensorProduct{Family::Sp, a, Family::Sp, b, a == b}});
  }
  if (n == 7) {
    out.add(canonicalize(Family::G2), {kind::IrreducibleSimple{"G2 on its 7-dim module"}});
  } else if (n == 8) {
    out.add(canonicalize(Family::SU, 3), {kind::IrreducibleSimple{"SU(3) on its adjoint module"}});
  } else if (n % 2 == 1) {
    out.add(canonicalize(Family::SU, 2),
            {kind::IrreducibleSimple{"principal SU(2) on the irreducible " + std::to_string(n) + "-dim module"}});
  }
}

struct TableRow {
  const char* label;
  GroupType subgroup;
};

inline GroupType su(int n) { return canonicalize(Family::SU, n); }
inline GroupType sp(int n) { return canonicalize(Family::Sp, n); }
inline GroupType so(int n) { return canonicalize(Family::SO, n); }
inline GroupType ex(Family f) { return canonicalize(f); }

inline std::vector<TableRow> exceptional_rows(Family f) {
  const GroupType t1 = GroupType::torus(1);
  switch (f) {
    case Family::G2:
      return {{"A2", su(3)}, {"A1^2", su(2) * su(2)}, {"A1", su(2)}};
    case Family::F4:
      return {{"B4", so(9)}, {"C3A1", sp(6) * su(2)}, {"A2^2", su(3) * su(3)}, {"A1G2", su(2) * ex(Family::G2)},
              {"A1", su(2)}};
    case Family::E6:
      return {{"D5T1", so(10) * t1}, {"A5A1", su(6) * su(2)}, {"A2^3", su(3) * su(3) * su(3)},
              {"F4", ex(Family::F4)},  {"C4", sp(8)},          {"A2G2", su(3) * ex(Family::G2)},
              {"G2", ex(Family::G2)},  {"A2", su(3)}};
    case Family::E7:
      return {{"D6A1", so(12) * su(2)},         {"A5A2", su(6) * su(3)},           {"A7", su(8)},
              {"E6T1", ex(Family::E6) * t1},    {"G2C3", ex(Family::G2) * sp(6)},  {"F4A1", ex(Family::F4) * su(2)},
              {"A1^2", su(2) * su(2)},          {"A2", su(3)},                     {"A1", su(2)}};
    case Family::E8:
      return {{"E7A1", ex(Family::E7) * su(2)}, {"E6A2", ex(Family::E6) * su(3)}, {"D8", so(16)},
              {"A8", su(9)},                    {"A4^2", su(5) * su(5)},          {"G2F4", ex(Family::G2) * ex(Family::F4)},
              {"A2A1", su(3) * su(2)},          {"B2", sp(4)},                    {"A1", su(2)}};
    default: return {};
  }
}

}  // namespace detail

/// Maximal connected subgroups of a simple compact group, as group types,
/// generated from the classical reducible/tensor/classical-in-SU rows, the
/// exceptional table and a small curated set of irreducible simple
/// subgroups. Results are deduplicated after canonicalization (first kind
/// wins). Lists for non-curated types may miss irreducible simple subgroups.
inline MaximalSubgroups maximal_connected_simple(const SimpleType& s) {
  detail::EntryCollector out;
  switch (s.family()) {
    case Family::SU: detail::add_special_unitary(s.degree(), out); break;
    case Family::Sp: detail::add_symplectic(s.degree(), out); break;
    case Family::SO: detail::add_orthogonal(s.degree(), out); break;
    default: {
      const std::string parent(family_name(s.family()));
      for (auto& row : detail::exceptional_rows(s.family())) {
        out.add(row.subgroup, {kind::ExceptionalTable{parent + " > " + row.label}});
      }
    }
  }
  MaximalSubgroups result{out.take(), {}};
  if (is_curated(s)) {
    result.completeness = {true, "curated coverage: " + s.spec()};
  } else {
    result.completeness = {false, "irreducible simple subgroups of " + s.spec() + " not enumerated"};
  }
  return result;
}

/// Maximal connected subgroups of an arbitrary compact connected group:
/// a torus drop, each distinct simple factor replaced by one of its maximal
/// subgroups, and a diagonal for each repeated factor.
template <typename SimpleLookup>
MaximalSubgroups maximal_connected_with(const GroupType& g, SimpleLookup&& simple_lookup) {
  if (g.is_trivial()) throw TrivialGroupError();
  if (g.is_simple()) return simple_lookup(g.factors().front());

  detail::EntryCollector out;
  CompletenessFlag flag{true, ""};
  if (g.torus_rank() > 0) out.add(g.with_torus(g.torus_rank() - 1), {kind::TorusDrop{}});
  const auto groups = g.grouped();
  for (int i = 0; i < static_cast<int>(groups.size()); ++i) {
    const SimpleType& factor = groups[i].type;
    const GroupType rest = g.without_one(factor);
    const MaximalSubgroups& inner = simple_lookup(factor);
    for (const auto& e : inner.entries) {
      out.add(rest * e.subgroup,
              {kind::FactorMax{i, factor, std::make_shared<const EmbeddingKind>(e.kind)}});
    }
    if (groups[i].multiplicity >= 2) out.add(rest, {kind::Diagonal{factor}});
    if (!inner.completeness.complete) {
      flag.complete = false;
      if (!flag.reason.empty()) flag.reason += "; ";
      flag.reason += inner.completeness.reason;
    }
  }
  if (flag.complete) flag.reason = "curated coverage: all factors";
  return {out.take(), flag};
}

inline MaximalSubgroups maximal_connected(const GroupType& g) {
  return maximal_connected_with(g, [](const SimpleType& s) { return maximal_connected_simple(s); });
}

enum class Verdict { yes, no, unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

inline Verdict is_maximal_step(const GroupType& parent, const GroupType& child) {
  if (parent.is_trivial()) return Verdict::no;
  const MaximalSubgroups m = maximal_connected(parent);
  if (m.contains(child)) return Verdict::yes;
  return m.completeness.complete ? Verdict::no : Verdict::unknown;
}

/// Minimal dimension of a nontrivial irreducible representation of the
/// simply connected cover, restricted to N > k and not a classical group
/// on C^N for classical types.
inline std::int64_t min_irrep_dim(const SimpleType& s) {
  const std::int64_t k = s.degree();
  switch (s.family()) {
    case Family::SU:
      if (k == 2) return 4;
      if (k == 3) return 6;
      if (k == 4) return 10;
      return k * (k - 1) / 2;
    case Family::Sp:
      if (k == 4) return 10;
      return k * (k - 1) / 2 - 1;
    case Family::SO:
      if (k >= 7 && k <= 14 && k != 8) return std::int64_t{1} << ((k - 1) / 2);
      return k * (k - 1) / 2;
    case Family::G2: return 7;
    case Family::F4: return 26;
    case Family::E6: return 27;
    case Family::E7: return 56;
    case Family::E8: return 248;
  }
  return 0;
}

}  // namespace liechain
