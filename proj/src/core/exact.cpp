#include "core/exact.hpp"

#include <algorithm>
#include <limits>

namespace fptlct {
namespace exact {

namespace {
constexpr Int kIntMin = static_cast<Int>(static_cast<unsigned __int128>(1) << 127);
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) {
  if (a == kIntMin) throw OverflowError("integer overflow in negation");
  return -a;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? checked_neg(a) : a;
  b = b < 0 ? checked_neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int floor_div(Int a, Int b) {
  if (b <= 0) throw DomainError("floor_div requires a positive divisor");
  Int q = a / b;
  if ((a % b) != 0 && a < 0) --q;
  return q;
}

Int ceil_div(Int a, Int b) {
  if (b <= 0) throw DomainError("ceil_div requires a positive divisor");
  Int q = a / b;
  if ((a % b) != 0 && a > 0) ++q;
  return q;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw DomainError("expected an integer, got '" + std::string(text) + "'");
  Int value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw DomainError("expected an integer, got '" + std::string(text) + "'");
    }
    value = checked_add(checked_mul(value, 10), c - '0');
  }
  return negative ? checked_neg(value) : value;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace exact

Rational::Rational(Int n) : num_(n), den_(1) {}

Rational::Rational(Int n, Int d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  if (d < 0) {
    n = exact::checked_neg(n);
    d = exact::checked_neg(d);
  }
  const Int g = exact::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational rational_normalize(Int n, Int d) { return Rational(n, d); }

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(exact::parse_int(text));
  return Rational(exact::parse_int(trim(text.substr(0, slash))),
                  exact::parse_int(trim(text.substr(slash + 1))));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = exact::checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  // Reduce by gcd of the denominators first to keep intermediates small.
  const Int g = exact::gcd(den_, o.den_);
  const Int lhs = exact::checked_mul(num_, o.den_ / g);
  const Int rhs = exact::checked_mul(o.num_, den_ / g);
  *this = Rational(exact::checked_add(lhs, rhs), exact::checked_mul(den_ / g, o.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  const Int g1 = exact::gcd(num_, o.den_);
  const Int g2 = exact::gcd(o.num_, den_);
  const Int n1 = g1 == 0 ? num_ : num_ / g1;
  const Int d2 = g1 == 0 ? o.den_ : o.den_ / g1;
  const Int n2 = g2 == 0 ? o.num_ : o.num_ / g2;
  const Int d1 = g2 == 0 ? den_ : den_ / g2;
  *this = Rational(exact::checked_mul(n1, n2), exact::checked_mul(d1, d2));
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  Rational inv;
  inv.num_ = o.num_ < 0 ? exact::checked_neg(o.den_) : o.den_;
  inv.den_ = o.num_ < 0 ? exact::checked_neg(o.num_) : o.num_;
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const Int lhs = exact::checked_mul(a.num_, b.den_);
  const Int rhs = exact::checked_mul(b.num_, a.den_);
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  return exact::to_string(num_) + "/" + exact::to_string(den_);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a) { return a.num() < 0 ? -a : a; }

PrimePower::PrimePower(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  if (p >= (1u << 31) || !exact::is_prime(p)) {
    throw DomainError("not a prime below 2^31: " + std::to_string(p));
  }
  if (e == 0) throw DomainError("Frobenius exponent must be positive");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q_ > (kLimit - 1) / p) {
      throw OverflowError(std::to_string(p) + "^" + std::to_string(e) + " does not fit below 2^63");
    }
    q_ *= p;
  }
}

PrimePower prime_power(std::int64_t p, std::int64_t e) {
  if (p < 2 || p > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("not a prime below 2^31: " + std::to_string(p));
  }
  if (e < 1 || e > std::numeric_limits<std::uint32_t>::max()) {
    throw DomainError("Frobenius exponent must be positive");
  }
  return PrimePower(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
}

std::uint32_t max_exponent_below(std::uint32_t p, std::uint64_t bound) {
  if (p < 2) throw DomainError("base must be at least 2");
  std::uint32_t e = 0;
  std::uint64_t q = 1;
  while (q <= bound / p) {
    q *= p;
    ++e;
  }
  return e;
}

}  // namespace fptlct
