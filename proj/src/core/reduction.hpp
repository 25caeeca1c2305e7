#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/exact.hpp"
#include "core/groebner.hpp"

namespace fptlct {

struct IntTerm {
  Monomial monomial;
  Int coeff;

  friend bool operator==(const IntTerm&, const IntTerm&) = default;
};

// Integer-coefficient polynomial; terms sorted descending in degrevlex with
// no zero coefficients.
class IntPoly {
 public:
  explicit IntPoly(std::uint32_t n) : n_(n) {}
  IntPoly(std::uint32_t n, std::vector<IntTerm> terms);

  std::uint32_t n() const { return n_; }
  const std::vector<IntTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const;

 private:
  std::uint32_t n_;
  std::vector<IntTerm> terms_;
};

IntPoly parse_int_poly(std::string_view text, std::uint32_t n, std::size_t column_offset = 0);

class IntegerIdeal {
 public:
  // Requires at least one generator, all in n variables.
  IntegerIdeal(std::uint32_t n, std::vector<IntPoly> generators);

  std::uint32_t n() const { return n_; }
  const std::vector<IntPoly>& generators() const { return generators_; }

  std::string to_string() const;

 private:
  std::uint32_t n_;
  std::vector<IntPoly> generators_;
};

IntegerIdeal parse_integer_ideal(std::string_view text, std::uint32_t n);

GFPoly reduce_mod_p(const IntPoly& f, std::uint32_t p);
// Coefficientwise reduction with zero generators dropped. Throws
// DegenerateReductionError when nothing survives.
Ideal reduce_mod_p(const IntegerIdeal& ideal, std::uint32_t p);

// a + m^d, generators of a followed by the degree-d monomials; not minimized.
Ideal truncate_ideal(const Ideal& a, std::uint32_t d);
IntegerIdeal truncate_ideal(const IntegerIdeal& a, std::uint32_t d);

struct CorpusEntry {
  std::vector<std::string> gens;
  IntegerIdeal ideal;
  Rational lct0;
  std::string provenance;  // "monomial-LP" or "literature"
};

std::vector<CorpusEntry> parse_corpus(std::string_view json_text);
std::vector<CorpusEntry> load_corpus(const std::string& path);
// The corpus shipped with the library.
const std::vector<CorpusEntry>& corpus();

// Monomial ideal of all terms of the generators. Its lct is the exact value
// for monomial ideals and a cross-check (exact under Newton
// non-degeneracy) otherwise.
MonomialIdeal term_ideal(const IntegerIdeal& ideal);

namespace reduction {
std::string_view builtin_corpus_json();
}

}  // namespace fptlct
