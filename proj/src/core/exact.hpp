#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "core/errors.hpp"

namespace fptlct {

// Signed 128-bit integer. Every arithmetic helper below is checked and throws
// OverflowError instead of wrapping.
using Int = __int128;

namespace exact {

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int gcd(Int a, Int b);

// Floor and ceiling of a / b for b > 0.
Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

std::string to_string(Int v);
// Parses an optionally signed decimal integer; throws DomainError on junk.
Int parse_int(std::string_view text);

// Deterministic trial-division test, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

}  // namespace exact

// Exact fraction, always stored with den > 0 and gcd(|num|, den) = 1.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int n);  // NOLINT(google-explicit-constructor): integers embed in Q
  Rational(Int n, Int d);

  // Accepts "n/d" or "n" with optional leading sign.
  static Rational parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Int floor() const { return exact::floor_div(num_, den_); }
  Int ceil() const { return exact::ceil_div(num_, den_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Canonical "n/d" form, also for integers ("2/1").
  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

Rational rational_normalize(Int n, Int d);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& a);

// q = p^e for a prime p < 2^31 with q < 2^63.
class PrimePower {
 public:
  PrimePower(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint64_t q() const { return q_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t e_;
  std::uint64_t q_;
};

PrimePower prime_power(std::int64_t p, std::int64_t e);

// Largest e >= 0 with p^e <= bound.
std::uint32_t max_exponent_below(std::uint32_t p, std::uint64_t bound);

}  // namespace fptlct
