#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "core/exact.hpp"

namespace fptlct {

// Variable count and characteristic shared by every polynomial in a computation.
struct Ambient {
  std::uint32_t n = 0;
  std::uint32_t p = 0;

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

void require_same_ambient(const Ambient& a, const Ambient& b);

namespace gf {

// Residue arithmetic modulo p < 2^31; products fit in 62 bits.
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t k, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
// Reduces an arbitrary signed integer into [0, p).
std::uint64_t reduce(Int v, std::uint64_t p);

}  // namespace gf

class GFElement {
 public:
  GFElement(std::uint64_t residue, std::uint32_t p);
  std::uint64_t residue() const { return residue_; }
  std::uint32_t modulus() const { return p_; }

  GFElement operator+(const GFElement& o) const;
  GFElement operator-(const GFElement& o) const;
  GFElement operator*(const GFElement& o) const;
  GFElement inverse() const;

  friend bool operator==(const GFElement&, const GFElement&) = default;

 private:
  std::uint64_t residue_;
  std::uint32_t p_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& o) const;
  // Every exponent is strictly below `bound`.
  bool all_below(std::uint64_t bound) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const;

 private:
  std::vector<std::uint32_t> exps_;
  std::uint64_t degree_ = 0;
};

// Degree reverse lexicographic comparison: negative, zero or positive.
int degrevlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sorts descending in degrevlex (leading monomial first).
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_compare(a, b) > 0;
  }
};

struct Term {
  Monomial monomial;
  std::uint64_t coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial over F_p in canonical form: terms sorted descending in
// degrevlex, no zero coefficients.
class GFPoly {
 public:
  explicit GFPoly(Ambient ambient) : ambient_(ambient) {}
  // Takes arbitrary (unsorted, repeated, unreduced) terms and canonicalizes.
  GFPoly(Ambient ambient, std::vector<Term> terms);

  // Trusted path: `terms` must already be sorted, reduced and nonzero.
  static GFPoly from_canonical(Ambient ambient, std::vector<Term> terms);
  static GFPoly constant(Ambient ambient, std::uint64_t c);
  static GFPoly monomial(Ambient ambient, Monomial m, std::uint64_t c = 1);
  static GFPoly variable(Ambient ambient, std::size_t index);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t constant_term() const;

  // Requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }

  GFPoly operator-() const;
  GFPoly scaled(std::uint64_t c) const;
  GFPoly shifted(const Monomial& m, std::uint64_t c) const;
  // Divides by the leading coefficient; zero stays zero.
  GFPoly monic() const;

  std::uint64_t total_degree() const;

  friend bool operator==(const GFPoly& a, const GFPoly& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }
  // Degrevlex comparison of the term sequences; a total order on polynomials.
  friend bool operator<(const GFPoly& a, const GFPoly& b);

  std::string to_string() const;

 private:
  Ambient ambient_;
  std::vector<Term> terms_;
};

GFPoly poly_add(const GFPoly& f, const GFPoly& g);
GFPoly poly_sub(const GFPoly& f, const GFPoly& g);
GFPoly poly_mul(const GFPoly& f, const GFPoly& g);
GFPoly poly_pow(const GFPoly& f, std::uint64_t r);

// f * g with every term having an exponent >= bound dropped as it is formed.
// This is multiplication in F_p[x] / (x_1^bound, ..., x_n^bound).
GFPoly poly_mul_truncated(const GFPoly& f, const GFPoly& g, std::uint64_t bound);

// f^r modulo (x_1^q, ..., x_n^q), truncating after each multiplication.
GFPoly poly_pow_truncated(const GFPoly& f, std::uint64_t r, const PrimePower& q);

// Drops every term with some exponent >= bound.
GFPoly truncate(const GFPoly& f, std::uint64_t bound);

// The Frobenius image f^q, computed termwise since c^p = c in F_p.
GFPoly frobenius_power(const GFPoly& f, const PrimePower& q);

std::string variable_name(std::size_t index, std::uint32_t n);
std::string format_monomial(const Monomial& m, std::uint32_t n);

}  // namespace fptlct
