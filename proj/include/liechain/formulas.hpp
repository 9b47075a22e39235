#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "liechain/errors.hpp"
#include "liechain/group_type.hpp"
#include "liechain/surd.hpp"

namespace liechain {

/// Either an exact value or a closed interval [lower, upper].
struct BoundsOrExact {
  std::int64_t lower = 0;
  std::int64_t upper = 0;

  static BoundsOrExact exact_value(std::int64_t v) { return {v, v}; }
  static BoundsOrExact bounds(std::int64_t lo, std::int64_t hi) { return {lo, hi}; }

  bool is_exact() const noexcept { return lower == upper; }
  std::int64_t exact() const {
    if (!is_exact()) throw DomainError("value is only known within [" + std::to_string(lower) + ", " +
                                       std::to_string(upper) + "]");
    return lower;
  }
  bool contains(std::int64_t v) const noexcept { return lower <= v && v <= upper; }

  std::string str() const {
    if (is_exact()) return std::to_string(lower);
    return "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
  }

  friend bool operator==(const BoundsOrExact&, const BoundsOrExact&) = default;
};

// ---------------------------------------------------------------- length

/// Length of a classical simple group: 2n-2 (SU), 3n/2-1 (Sp), n+floor(n/4)-1 (SO).
inline std::int64_t f_classical(Family family, std::int64_t n) {
  switch (family) {
    case Family::SU:
      if (n >= 2) return 2 * n - 2;
      break;
    case Family::Sp:
      if (n >= 4 && n % 2 == 0) return 3 * n / 2 - 1;
      break;
    case Family::SO:
      if (n >= 7) return n + n / 4 - 1;
      break;
    default: break;
  }
  throw MalformedTypeError("f_classical: " + std::string(family_name(family)) + "_" + std::to_string(n) +
                           " out of range");
}

inline std::int64_t length(const SimpleType& s) {
  switch (s.family()) {
    case Family::G2: return 5;
    case Family::F4: return 11;
    case Family::E6: return 13;
    case Family::E7: return 17;
    case Family::E8: return 20;
    default: return f_classical(s.family(), s.degree());
  }
}

/// l(G) = z + sum of l(S_i).
inline std::int64_t length(const GroupType& g) {
  std::int64_t total = g.torus_rank();
  for (const auto& s : g.factors()) total += length(s);
  return total;
}

/// Length of the complex semisimple group G(C): dim B + rank, with
/// dim B = (dim + rank)/2.
inline std::int64_t length_complex_semisimple(const GroupType& g) {
  if (g.torus_rank() != 0) throw DomainError("length_complex_semisimple requires a semisimple group");
  const Dims d = dims(g);
  return (d.dim + d.rank) / 2 + d.rank;
}

// ---------------------------------------------------------------- depth

inline std::int64_t depth_simple(const SimpleType& s) {
  const int n = s.degree();
  switch (s.family()) {
    case Family::SU:
      if (n == 2) return 2;
      if (n == 3) return 3;
      if (n == 7) return 5;
      return 4;
    case Family::Sp: return 3;
    case Family::SO:
      if (n == 7 || n % 2 == 0) return 4;
      return 3;
    case Family::G2: return 3;
    case Family::F4: return 3;
    case Family::E6: return 4;
    case Family::E7: return 3;
    case Family::E8: return 3;
  }
  return 0;
}

/// Exact for tori and for G' = S^k; otherwise the interval
/// [z + sum(k_i + 1), z + sum(k_i + depth(S_i) - 1)].
inline BoundsOrExact depth(const GroupType& g) {
  const std::int64_t z = g.torus_rank();
  const auto groups = g.grouped();
  if (groups.empty()) return BoundsOrExact::exact_value(z);
  if (groups.size() == 1) {
    return BoundsOrExact::exact_value(z + depth_simple(groups[0].type) + groups[0].multiplicity - 1);
  }
  std::int64_t lo = z;
  std::int64_t hi = z;
  for (const auto& [type, k] : groups) {
    lo += k + 1;
    hi += k + depth_simple(type) - 1;
  }
  return BoundsOrExact::bounds(lo, hi);
}

inline BoundsOrExact chain_difference(std::int64_t len, const BoundsOrExact& dep) {
  return BoundsOrExact::bounds(len - dep.upper, len - dep.lower);
}

inline BoundsOrExact chain_difference(const GroupType& g) { return chain_difference(length(g), depth(g)); }

/// l(G) = depth(G) exactly when G is a torus or G' = SU_2.
inline bool is_length_eq_depth(const GroupType& g) {
  return g.factors().empty() || (g.factors().size() == 1 && g.factors()[0] == SimpleType::su(2));
}

/// The chain-difference-one classification as stated: G' one of SU_3,
/// SU_2^2, SU_3 x SU_2.
inline bool is_cd_one(const GroupType& g) {
  const GroupType d = g.derived();
  const GroupType su2 = GroupType::simple(SimpleType::su(2));
  const GroupType su3 = GroupType::simple(SimpleType::su(3));
  return d == su3 || d == su2 * su2 || d == su3 * su2;
}

// ---------------------------------------------------------------- reports

struct CheckResult {
  std::string claim;
  std::string statement;
  std::string inputs;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }

  void add(std::string claim, std::string statement, std::string inputs, std::string lhs, std::string rhs,
           bool pass) {
    checks.push_back({std::move(claim), std::move(statement), std::move(inputs), std::move(lhs), std::move(rhs),
                      pass});
  }

  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

/// z + 2r <= l(G) <= z + 3r - t, with r = rank G' and t the number of simple factors.
inline Report check_general(const GroupType& g) {
  Report r;
  const std::int64_t z = g.torus_rank();
  const std::int64_t rank = dims(g.derived()).rank;
  const std::int64_t t = static_cast<std::int64_t>(g.factors().size());
  const std::int64_t l = length(g);
  r.add("general.lower", "z + 2r <= l(G)", g.spec(), std::to_string(z + 2 * rank), std::to_string(l),
        z + 2 * rank <= l);
  r.add("general.upper", "l(G) <= z + 3r - t", g.spec(), std::to_string(l), std::to_string(z + 3 * rank - t),
        l <= z + 3 * rank - t);
  return r;
}

/// dim G - l(G) <= dim G' <= 3 (dim G - l(G)); for simple S also 3 l(S) <= 2 dim S
/// with equality only for SU_2.
inline Report check_dimlen(const GroupType& g) {
  Report r;
  const std::int64_t delta = dims(g).dim - length(g);
  const std::int64_t dim_derived = dims(g.derived()).dim;
  r.add("dimlen.lower", "dim G - l(G) <= dim G'", g.spec(), std::to_string(delta), std::to_string(dim_derived),
        delta <= dim_derived);
  r.add("dimlen.upper", "dim G' <= 3 (dim G - l(G))", g.spec(), std::to_string(dim_derived),
        std::to_string(3 * delta), dim_derived <= 3 * delta);
  r.add("dimlen.torus", "l(G) = dim G iff G is a torus", g.spec(), std::to_string(length(g)),
        std::to_string(dims(g).dim), (length(g) == dims(g).dim) == g.is_torus());
  if (g.is_simple()) {
    const SimpleType s = g.factors().front();
    const std::int64_t l3 = 3 * length(s);
    const std::int64_t d2 = 2 * s.dim();
    r.add("dimlen.simple", "3 l(S) <= 2 dim S, equality iff S = SU_2", g.spec(), std::to_string(l3),
          std::to_string(d2), l3 <= d2 && ((l3 == d2) == (s == SimpleType::su(2))));
  }
  return r;
}

/// Lower-bound constant xi: alpha for E6, E7, E8 and 1 otherwise.
inline Surd xi_constant(const SimpleType& s) {
  const Family f = s.family();
  if (f == Family::E6 || f == Family::E7 || f == Family::E8) return alpha_constant();
  return Surd(1);
}

/// l(G) >= beta (sqrt(dim G) - alpha), exactly; simple S also against xi.
inline Report check_sqrt_lower_bound(const GroupType& g) {
  Report r;
  const Surd l(static_cast<long long>(length(g)));
  const Surd root = Surd::sqrt(static_cast<long long>(dims(g).dim));
  const Surd bound = beta_constant() * (root - alpha_constant());
  r.add("sqrt.general", "l(G) >= beta (sqrt(dim G) - alpha)", g.spec(), l.display(), bound.display(), l >= bound);
  if (g.is_simple()) {
    const Surd simple_bound = beta_constant() * (root - xi_constant(g.factors().front()));
    r.add("sqrt.simple", "l(S) >= beta (sqrt(dim S) - xi)", g.spec(), l.display(), simple_bound.display(),
          l >= simple_bound);
  }
  return r;
}

/// Length of a classical simple group written as a function of d = dim S.
inline Surd lendim_formula(const SimpleType& s) {
  const long long d = s.dim();
  switch (s.family()) {
    case Family::SU: return Surd(2) * Surd::sqrt(d + 1) - Surd(2);
    case Family::Sp:
      return Surd::rational(3, 2) * Surd::sqrt(2) * Surd::sqrt(Rational(8 * d + 1, 8)) - Surd::rational(7, 4);
    case Family::SO: {
      const int k = s.degree() % 4;
      return beta_constant() * Surd::sqrt(Rational(8 * d + 1, 8)) - Surd::rational(2 * k + 3, 8);
    }
    default: break;
  }
  throw DomainError("lendim_formula requires a classical type, got " + s.spec());
}

/// lim l(S)/sqrt(dim S) as the degree grows: 2, 3/sqrt(2), 5/2^(3/2).
inline Surd length_dimension_limit(Family family) {
  switch (family) {
    case Family::SU: return Surd(2);
    case Family::Sp: return Surd::rational(3, 2) * Surd::sqrt(2);
    case Family::SO: return beta_constant();
    default: break;
  }
  throw DomainError("length_dimension_limit requires a classical family");
}

struct ElemResult {
  bool premise_i = false;
  bool holds_i = false;
  bool premise_ii = false;
  bool holds_ii = false;
  bool premise_iii = false;
  bool holds_iii = false;

  /// Every clause whose premise holds also has its conclusion hold.
  bool consistent() const {
    return (!premise_i || holds_i) && (!premise_ii || holds_ii) && (!premise_iii || holds_iii);
  }
};

/// (i) x >= 1: 1 + beta sqrt(x) >= beta sqrt(x+1);
/// (ii) x, y >= 3: sqrt(x) + sqrt(y) >= sqrt(x+y) + 1;
/// (iii) x, y >= 78: sqrt(x) + sqrt(y) >= sqrt(x+y) + alpha.
/// Conclusions are evaluated exactly whether or not the premise holds.
inline ElemResult elem_inequalities(const Rational& x, const Rational& y) {
  ElemResult r;
  const Surd beta = beta_constant();
  const Surd sx = Surd::sqrt(x);
  const Surd sy = Surd::sqrt(y);
  const Surd sxy = Surd::sqrt(x + y);
  r.premise_i = x >= 1;
  r.holds_i = Surd(1) + beta * sx >= beta * Surd::sqrt(x + 1);
  r.premise_ii = x >= 3 && y >= 3;
  r.holds_ii = sx + sy >= sxy + Surd(1);
  r.premise_iii = x >= 78 && y >= 78;
  r.holds_iii = sx + sy >= sxy + alpha_constant();
  return r;
}

/// (5/4) sum n_i - (7/4) k - (5/4) sqrt(sum n_i (n_i - 1)) - sqrt(sum_{i>=2} n_i)
/// for a tuple with k >= 2 and n_1 >= n_i >= 7.
inline Surd smalll_deficit(std::span<const int> n) {
  if (n.size() < 2) throw DomainError("smalll_deficit needs at least two entries");
  long long sum = 0;
  long long sum_pairs = 0;
  long long tail = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 7 || n[i] > n[0]) throw DomainError("smalll_deficit needs n_1 >= n_i >= 7");
    sum += n[i];
    sum_pairs += static_cast<long long>(n[i]) * (n[i] - 1);
    if (i > 0) tail += n[i];
  }
  const long long k = static_cast<long long>(n.size());
  return Surd::rational(5 * sum - 7 * k, 4) - Surd::rational(5, 4) * Surd::sqrt(sum_pairs) - Surd::sqrt(tail);
}

/// Constant `a` with l(S) <= 2 cd(S) + a as stated for simple S: 2 for SU_2,
/// SU_3, SU_4; 1 for Sp_4, SO_7; 0 otherwise.
inline std::int64_t simple_factor_constant(const SimpleType& s) {
  if (s == SimpleType::su(2) || s == SimpleType::su(3) || s == SimpleType::su(4)) return 2;
  if (s == SimpleType::sp(4) || s == SimpleType::so(7)) return 1;
  return 0;
}

/// Chain-difference bounds: l(G') <= 2 cd(G) + 2 and
/// dim G' <= (beta^-1 (2 cd + 2) + alpha)^2, evaluated at the lower end of
/// `dep`-derived cd; plus the per-factor statements for simple and
/// homogeneous G' and the superadditivity of cd over homogeneous parts.
inline Report check_lcd(const GroupType& g, const BoundsOrExact& dep) {
  Report r;
  const GroupType derived = g.derived();
  const std::int64_t l_derived = length(derived);
  const BoundsOrExact cd = chain_difference(length(g), dep);
  const std::int64_t cd_lo = cd.lower;
  r.add("lcd.length", "l(G') <= 2 cd(G) + 2", g.spec(), std::to_string(l_derived), std::to_string(2 * cd_lo + 2),
        l_derived <= 2 * cd_lo + 2);

  const Surd root = beta_inverse() * Surd(static_cast<long long>(2 * cd_lo + 2)) + alpha_constant();
  const Surd bound = root * root;
  const Surd dim_derived(static_cast<long long>(dims(derived).dim));
  r.add("lcd.dim", "dim G' <= (beta^-1 (2 cd(G) + 2) + alpha)^2", g.spec(), dim_derived.display(), bound.display(),
        dim_derived <= bound);

  const auto groups = derived.grouped();
  if (groups.size() == 1) {
    const auto& [s, k] = groups[0];
    const std::int64_t ls = length(s);
    if (k == 1) {
      const std::int64_t cds = ls - depth_simple(s);
      const std::int64_t a = simple_factor_constant(s);
      r.add("lcd.simple_factor", "l(S) <= 2 cd(S) + a", s.spec() + " a=" + std::to_string(a), std::to_string(ls),
            std::to_string(2 * cds + a), ls <= 2 * cds + a);
    } else {
      const std::int64_t lk = k * ls;
      const std::int64_t cdk = lk - (depth_simple(s) + k - 1);
      if (s == SimpleType::su(2)) {
        r.add("lcd.homogeneous", "l(SU_2^k) = 2 cd(SU_2^k) + 2", derived.spec(), std::to_string(lk),
              std::to_string(2 * cdk + 2), lk == 2 * cdk + 2);
      } else {
        r.add("lcd.homogeneous", "l(S^k) <= 2 cd(S^k)", derived.spec(), std::to_string(lk), std::to_string(2 * cdk),
              lk <= 2 * cdk);
      }
    }
  } else if (groups.size() > 1) {
    std::int64_t sum = 0;
    for (const auto& [s, k] : groups) sum += k * length(s) - (depth_simple(s) + k - 1);
    r.add("lcd.superadditive", "cd(G) >= sum cd(S_i^k_i)", g.spec(), std::to_string(cd_lo), std::to_string(sum),
          cd_lo >= sum);
  }
  return r;
}

inline Report check_lcd(const GroupType& g) { return check_lcd(g, depth(g)); }

}  // namespace liechain
