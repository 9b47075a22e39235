#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liechain/errors.hpp"

namespace liechain {

/// Families of compact simple Lie groups. The enumerator order is the
/// total order used to normalize factor multisets.
enum class Family : std::uint8_t { SU, Sp, SO, G2, F4, E6, E7, E8 };

constexpr bool is_classical(Family f) noexcept {
  return f == Family::SU || f == Family::Sp || f == Family::SO;
}

constexpr bool is_exceptional(Family f) noexcept { return !is_classical(f); }

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::SO: return "SO";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

/// One simple compact factor, canonical up to isogeny. Degree is the n of
/// SU_n / Sp_n / SO_n and 0 for exceptional families.
class SimpleType {
 public:
  /// Canonical classical type; throws MalformedTypeError for SU_1, Sp_2,
  /// odd Sp, SO_n with n < 7 and every other non-canonical degree.
  static SimpleType classical(Family family, int degree) {
    if (!is_classical(family)) {
      throw MalformedTypeError(std::string(family_name(family)) + " takes no degree");
    }
    bool ok = false;
    switch (family) {
      case Family::SU: ok = degree >= 2; break;
      case Family::Sp: ok = degree >= 4 && degree % 2 == 0; break;
      case Family::SO: ok = degree >= 7; break;
      default: break;
    }
    if (!ok) {
      throw MalformedTypeError(std::string(family_name(family)) + "_" + std::to_string(degree) +
                               " is not a canonical simple type");
    }
    return SimpleType(family, degree);
  }

  static SimpleType exceptional(Family family) {
    if (!is_exceptional(family)) {
      throw MalformedTypeError(std::string(family_name(family)) + " requires a degree");
    }
    return SimpleType(family, 0);
  }

  static SimpleType su(int n) { return classical(Family::SU, n); }
  static SimpleType sp(int n) { return classical(Family::Sp, n); }
  static SimpleType so(int n) { return classical(Family::SO, n); }

  constexpr Family family() const noexcept { return family_; }
  constexpr int degree() const noexcept { return degree_; }

  std::int64_t dim() const noexcept {
    const std::int64_t n = degree_;
    switch (family_) {
      case Family::SU: return n * n - 1;
      case Family::Sp: return n * (n + 1) / 2;
      case Family::SO: return n * (n - 1) / 2;
      case Family::G2: return 14;
      case Family::F4: return 52;
      case Family::E6: return 78;
      case Family::E7: return 133;
      case Family::E8: return 248;
    }
    return 0;
  }

  std::int64_t rank() const noexcept {
    switch (family_) {
      case Family::SU: return degree_ - 1;
      case Family::Sp: return degree_ / 2;
      case Family::SO: return degree_ / 2;
      case Family::G2: return 2;
      case Family::F4: return 4;
      case Family::E6: return 6;
      case Family::E7: return 7;
      case Family::E8: return 8;
    }
    return 0;
  }

  /// "SU(5)", "G2", ...
  std::string spec() const {
    if (is_exceptional(family_)) return std::string(family_name(family_));
    return std::string(family_name(family_)) + "(" + std::to_string(degree_) + ")";
  }

  friend constexpr auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend constexpr bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  constexpr SimpleType(Family f, int d) : family_(f), degree_(d) {}

  Family family_;
  int degree_;
};

struct Dims {
  std::int64_t dim = 0;
  std::int64_t rank = 0;

  friend Dims operator+(Dims a, Dims b) { return {a.dim + b.dim, a.rank + b.rank}; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// A simple factor together with its multiplicity, S^k.
struct FactorPower {
  SimpleType type;
  int multiplicity;
};

/// Compact connected Lie group up to isogeny: T_z times a multiset of
/// simple factors kept sorted, so structural equality is group-type equality.
class GroupType {
 public:
  GroupType() = default;

  GroupType(int torus_rank, std::vector<SimpleType> factors)
      : torus_rank_(torus_rank), factors_(std::move(factors)) {
    if (torus_rank_ < 0) throw MalformedTypeError("negative torus rank");
    std::sort(factors_.begin(), factors_.end());
  }

  static GroupType trivial() { return {}; }
  static GroupType torus(int k) { return GroupType(k, {}); }
  static GroupType simple(SimpleType s) { return GroupType(0, {s}); }

  int torus_rank() const noexcept { return torus_rank_; }
  std::span<const SimpleType> factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return torus_rank_ == 0 && factors_.empty(); }
  bool is_torus() const noexcept { return factors_.empty(); }
  bool is_simple() const noexcept { return torus_rank_ == 0 && factors_.size() == 1; }
  bool is_semisimple() const noexcept { return torus_rank_ == 0; }

  /// The derived subgroup G' (drops the central torus).
  GroupType derived() const { return GroupType(0, factors_); }

  /// Factors grouped as S_i^{k_i}, pairwise distinct S_i, in canonical order.
  std::vector<FactorPower> grouped() const {
    std::vector<FactorPower> out;
    for (const auto& f : factors_) {
      if (!out.empty() && out.back().type == f) {
        ++out.back().multiplicity;
      } else {
        out.push_back({f, 1});
      }
    }
    return out;
  }

  int multiplicity(const SimpleType& s) const {
    return static_cast<int>(std::count(factors_.begin(), factors_.end(), s));
  }

  GroupType with_torus(int z) const { return GroupType(z, factors_); }

  /// Same group with one copy of `s` removed; `s` must be a factor.
  GroupType without_one(const SimpleType& s) const {
    auto fs = factors_;
    auto it = std::find(fs.begin(), fs.end(), s);
    if (it == fs.end()) throw std::logic_error("without_one: factor not present");
    fs.erase(it);
    return GroupType(torus_rank_, std::move(fs));
  }

  friend GroupType operator*(const GroupType& a, const GroupType& b) {
    auto fs = a.factors_;
    fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
    return GroupType(a.torus_rank_ + b.torus_rank_, std::move(fs));
  }

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend auto operator<=>(const GroupType& a, const GroupType& b) {
    if (auto c = a.torus_rank_ <=> b.torus_rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

  /// Group-spec text accepted by parse_group: "SU(3) x SU(2)^2 x T^2", "1".
  std::string spec() const {
    if (is_trivial()) return "1";
    std::string out;
    auto append = [&out](const std::string& term) {
      if (!out.empty()) out += " x ";
      out += term;
    };
    for (const auto& [type, k] : grouped()) {
      append(k == 1 ? type.spec() : type.spec() + "^" + std::to_string(k));
    }
    if (torus_rank_ == 1) append("T");
    if (torus_rank_ > 1) append("T^" + std::to_string(torus_rank_));
    return out;
  }

 private:
  int torus_rank_ = 0;
  std::vector<SimpleType> factors_;
};

inline Dims dims(const SimpleType& s) { return {s.dim(), s.rank()}; }

inline Dims dims(const GroupType& g) {
  Dims d{g.torus_rank(), g.torus_rank()};
  for (const auto& s : g.factors()) d = d + dims(s);
  return d;
}

/// Maps a raw (family, degree) in the parse range onto its canonical group
/// type, resolving the low-rank coincidences SU_1 = SO_1 = 1, Sp_2 = SO_3 =
/// SU_2, SO_2 = T_1, SO_4 = SU_2^2, SO_5 = Sp_4 and SO_6 = SU_4.
inline GroupType canonicalize(Family family, int degree) {
  if (is_exceptional(family)) return GroupType::simple(SimpleType::exceptional(family));
  if (degree <= 0) {
    throw MalformedTypeError(std::string(family_name(family)) + " degree must be positive");
  }
  switch (family) {
    case Family::SU:
      if (degree == 1) return GroupType::trivial();
      return GroupType::simple(SimpleType::su(degree));
    case Family::Sp:
      if (degree % 2 != 0) {
        throw MalformedTypeError("Sp degree must be even, got " + std::to_string(degree));
      }
      if (degree == 2) return GroupType::simple(SimpleType::su(2));
      return GroupType::simple(SimpleType::sp(degree));
    case Family::SO:
      switch (degree) {
        case 1: return GroupType::trivial();
        case 2: return GroupType::torus(1);
        case 3: return GroupType::simple(SimpleType::su(2));
        case 4: return GroupType(0, {SimpleType::su(2), SimpleType::su(2)});
        case 5: return GroupType::simple(SimpleType::sp(4));
        case 6: return GroupType::simple(SimpleType::su(4));
        default: return GroupType::simple(SimpleType::so(degree));
      }
    default: break;
  }
  throw MalformedTypeError("unknown family");
}

inline GroupType canonicalize(Family family) {
  return GroupType::simple(SimpleType::exceptional(family));
}

inline GroupType power(const GroupType& g, int k) {
  GroupType out;
  for (int i = 0; i < k; ++i) out = out * g;
  return out;
}

}  // namespace liechain

template <>
struct std::hash<liechain::SimpleType> {
  std::size_t operator()(const liechain::SimpleType& s) const noexcept {
    return (static_cast<std::size_t>(s.family()) << 20) ^ static_cast<std::size_t>(s.degree());
  }
};

template <>
struct std::hash<liechain::GroupType> {
  std::size_t operator()(const liechain::GroupType& g) const noexcept {
    std::size_t h = std::hash<int>{}(g.torus_rank());
    for (const auto& s : g.factors()) {
      h ^= std::hash<liechain::SimpleType>{}(s) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
