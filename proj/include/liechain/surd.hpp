#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace liechain {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact element of a multi-quadratic field Q(sqrt(p1), ..., sqrt(pm)):
/// a finite sum of rational multiples of sqrt(s) over distinct squarefree s.
/// Those square roots are linearly independent over Q, so the representation
/// is unique and equality is coefficient-wise. Ordering is decided exactly by
/// splitting off the largest prime and squaring (see sign()).
class Surd {
 public:
  Surd() = default;
  Surd(const Rational& q) { add_term(1, q); }                  // NOLINT(implicit)
  Surd(long long n) : Surd(Rational(n)) {}                      // NOLINT(implicit)
  Surd(int n) : Surd(Rational(n)) {}                            // NOLINT(implicit)

  static Surd rational(long long num, long long den) { return Surd(Rational(num, den)); }

  /// sqrt(q) for rational q >= 0.
  static Surd sqrt(const Rational& q) {
    if (q < 0) throw std::domain_error("Surd::sqrt of a negative rational");
    if (q == 0) return {};
    // sqrt(a/b) = sqrt(a*b) / b
    const BigInt a = boost::multiprecision::numerator(q);
    const BigInt b = boost::multiprecision::denominator(q);
    const BigInt ab = a * b;
    if (ab > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      throw std::overflow_error("Surd::sqrt radicand out of range");
    }
    auto [square, free] = split_square(static_cast<std::uint64_t>(ab));
    Surd out;
    out.add_term(free, Rational(BigInt(square), b));
    return out;
  }

  static Surd sqrt(long long n) { return sqrt(Rational(n)); }

  bool is_zero() const noexcept { return terms_.empty(); }

  /// Exact sign in {-1, 0, 1}.
  int sign() const {
    if (terms_.empty()) return 0;
    const std::uint64_t p = largest_prime();
    if (p == 1) return terms_.begin()->second.sign();
    // this = a + b*sqrt(p) with a, b free of sqrt(p)
    Surd a;
    Surd b;
    for (const auto& [key, coeff] : terms_) {
      if (key % p == 0) b.add_term(key / p, coeff);
      else a.add_term(key, coeff);
    }
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with p*b^2
    const Surd d = a * a - b * b * Surd(Rational(static_cast<long long>(p)));
    return sa * d.sign();
  }

  double to_double() const {
    long double sum = 0;
    for (const auto& [key, coeff] : terms_) {
      sum += static_cast<long double>(coeff.convert_to<long double>()) *
             std::sqrt(static_cast<long double>(key));
    }
    return static_cast<double>(sum);
  }

  /// Exact form such as "8*sqrt(2) - 2*sqrt(62)" or "-7/4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
      Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
      if (first) {
        if (coeff < 0) out += "-";
      } else {
        out += coeff < 0 ? " - " : " + ";
      }
      first = false;
      if (key == 1) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += "sqrt(" + std::to_string(key) + ")";
      }
    }
    return out;
  }

  /// Exact form followed by a 4-decimal rendering, e.g. "8*sqrt(2) (11.3137)".
  std::string display() const {
    std::ostringstream os;
    os << str();
    if (!(terms_.size() == 1 && terms_.begin()->first == 1 &&
          boost::multiprecision::denominator(terms_.begin()->second) == 1)) {
      os << " (" << std::fixed << std::setprecision(4) << to_double() << ")";
    }
    return os.str();
  }

  friend Surd operator+(const Surd& x, const Surd& y) {
    Surd out = x;
    for (const auto& [key, coeff] : y.terms_) out.add_term(key, coeff);
    return out;
  }

  friend Surd operator-(const Surd& x) {
    Surd out;
    for (const auto& [key, coeff] : x.terms_) out.terms_.emplace(key, -coeff);
    return out;
  }

  friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

  friend Surd operator*(const Surd& x, const Surd& y) {
    Surd out;
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        // sqrt(s)*sqrt(t) = g*sqrt((s/g)*(t/g)), g = gcd(s, t)
        const std::uint64_t g = std::gcd(kx, ky);
        const std::uint64_t sx = kx / g;
        const std::uint64_t sy = ky / g;
        if (sy != 0 && sx > std::numeric_limits<std::uint64_t>::max() / sy) {
          throw std::overflow_error("Surd product radicand out of range");
        }
        out.add_term(sx * sy, cx * cy * Rational(static_cast<long long>(g)));
      }
    }
    return out;
  }

  Surd& operator+=(const Surd& y) { return *this = *this + y; }
  Surd& operator-=(const Surd& y) { return *this = *this - y; }
  Surd& operator*=(const Surd& y) { return *this = *this * y; }

  friend bool operator==(const Surd& x, const Surd& y) { return (x - y).is_zero(); }

  friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void add_term(std::uint64_t key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// n = square^2 * free with free squarefree.
  static std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t n) {
    std::uint64_t square = 1;
    std::uint64_t free = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) square *= p;
      if (e % 2 == 1) free *= p;
    }
    free *= n;
    return {square, free};
  }

  static std::uint64_t largest_prime_factor(std::uint64_t n) {
    std::uint64_t best = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        best = p;
        n /= p;
      }
    }
    return n > 1 ? std::max(best, n) : best;
  }

  std::uint64_t largest_prime() const {
    std::uint64_t best = 1;
    for (const auto& kv : terms_) best = std::max(best, largest_prime_factor(kv.first));
    return best;
  }

  std::map<std::uint64_t, Rational> terms_;
};

/// sqrt(248) - sqrt(128) = 4.4343...
inline Surd alpha_constant() { return Surd::sqrt(248) - Surd::sqrt(128); }

/// 5 * 2^(-3/2) = 5*sqrt(2)/4 = 1.7677...
inline Surd beta_constant() { return Surd::rational(5, 4) * Surd::sqrt(2); }

/// 1 / beta = 2*sqrt(2)/5.
inline Surd beta_inverse() { return Surd::rational(2, 5) * Surd::sqrt(2); }

}  // namespace liechain
