#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/gfpoly.hpp"

namespace fptlct {

struct GroebnerOptions {
  // S-pairs processed before giving up with CapacityError.
  std::size_t max_pairs = 100000;
};

// Remainder of multivariate division of f by `divisors` under degrevlex.
// No term of the result is divisible by a leading monomial of `divisors`.
GFPoly normal_form(const GFPoly& f, const std::vector<GFPoly>& divisors);

// Reduced Groebner basis (monic, sorted by ascending leading monomial).
std::vector<GFPoly> reduced_groebner_basis(const std::vector<GFPoly>& generators,
                                           const GroebnerOptions& options = {});

// Row-reduces generators as F_p-vectors; the generated ideal is unchanged.
// The result is monic with pairwise distinct leading monomials.
std::vector<GFPoly> linear_basis(const std::vector<GFPoly>& generators);

class Ideal {
 public:
  explicit Ideal(Ambient ambient) : ambient_(ambient) {}
  // Zero generators are stripped; the zero ideal has no generators.
  Ideal(Ambient ambient, std::vector<GFPoly> generators);

  static Ideal unit(Ambient ambient);
  static Ideal maximal(Ambient ambient);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<GFPoly>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool all_monomial() const;

  // Computed once per value and shared between copies.
  const std::vector<GFPoly>& groebner_basis(const GroebnerOptions& options = {}) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<GFPoly> basis;
  };

  Ambient ambient_;
  std::vector<GFPoly> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Returns `ideal` with its Groebner basis cache populated.
Ideal buchberger(const Ideal& ideal, const GroebnerOptions& options = {});

bool ideal_member(const GFPoly& f, const Ideal& ideal);
// I is contained in J.
bool ideal_contains(const Ideal& j, const Ideal& i);
bool ideal_equal(const Ideal& i, const Ideal& j);
bool is_unit_ideal(const Ideal& ideal);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);

// Monomial ideal stored by its minimal generators (an antichain under
// divisibility). Sorted descending in degrevlex.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::uint32_t n) : n_(n) {}
  MonomialIdeal(std::uint32_t n, std::vector<Monomial> generators);

  static MonomialIdeal unit(std::uint32_t n);
  static MonomialIdeal maximal(std::uint32_t n);
  // m^d: every monomial of total degree d.
  static MonomialIdeal maximal_power(std::uint32_t n, std::uint32_t d);
  // Requires every generator to be a single term.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  std::uint32_t n() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return !generators_.empty() && generators_.back().is_one(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  MonomialIdeal operator+(const MonomialIdeal& other) const;
  MonomialIdeal operator*(const MonomialIdeal& other) const;
  MonomialIdeal power(std::uint64_t k) const;
  MonomialIdeal bracket_power(std::uint64_t q) const;
  // (x^a)^[1/q] = (x^floor(a/q)), generator by generator.
  MonomialIdeal frobenius_root(std::uint64_t q) const;

  Ideal to_ideal(std::uint32_t p) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string() const;

 private:
  std::uint32_t n_;
  std::vector<Monomial> generators_;
};

// Minimal elements under divisibility, sorted descending in degrevlex.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> monomials);

}  // namespace fptlct
