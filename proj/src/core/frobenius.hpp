#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "core/exact.hpp"
#include "core/gfpoly.hpp"
#include "core/groebner.hpp"
#include "core/lp.hpp"

namespace fptlct {

struct FrobeniusOptions {
  // Generator cap for explicit powers a^N of non-principal, non-monomial ideals.
  std::size_t max_power_generators = 2000;
  // Distinct truncated products kept per level of the nu dynamic program.
  std::size_t max_level_products = 20000;
  // Largest q^n for which the monomial-order lookup table is materialized.
  std::uint64_t max_order_table = std::uint64_t{1} << 25;
  GroebnerOptions groebner;
  lp::PackingOptions packing;
};

struct NuValue {
  PrimePower q;
  std::uint64_t nu;
  // Size of a generating set of a; bounds how far fpt can sit above nu/q.
  std::uint64_t generators = 1;
};

// [nu/q, (nu+mu)/q] with mu generators; contains fpt at the origin. From
// a^(mu(p-1) + p s) in (a^s)^[p], (nu(e)+mu)/p^e never increases in e.
struct FptEnclosure {
  Rational low;
  Rational high;
  PrimePower q;

  Rational width() const { return high - low; }
  bool contains(const Rational& x) const { return low <= x && x <= high; }
};

struct TestIdealResult {
  Ideal ideal;
  Rational lambda;
  std::uint32_t e_used;
  bool stabilized;
};

// Ideal generated by g^q for each generator g.
Ideal bracket_power(const Ideal& ideal, const PrimePower& q);

// Components g_gamma of g = sum_gamma g_gamma^q x^gamma over the basis
// {x^gamma : 0 <= gamma_i < q}. Only nonzero components are returned.
std::vector<GFPoly> root_components(const GFPoly& g, std::uint64_t q);

// b^[1/q]: the smallest ideal J with b contained in J^[q].
Ideal frobenius_root(const Ideal& b, const PrimePower& q);

// (f^N)^[1/q] without expanding f^N, via the base-p digits of N and
// (h^p g)^[1/p] = h g^[1/p].
Ideal frobenius_root_principal_power(const GFPoly& f, std::uint64_t exponent, const PrimePower& q);

// Largest r with a^r not contained in (x_1^q, ..., x_n^q); zero for a = (0).
// Generators must vanish at the origin.
NuValue nu(const Ideal& a, std::uint32_t e, const FrobeniusOptions& options = {});

// nu(1), ..., nu(e_max) for one ideal. `on_level` runs after each value.
using NuLevelCallback = std::function<void(std::uint32_t e, std::uint64_t nu)>;
std::vector<std::uint64_t> nu_sequence(const Ideal& a, std::uint32_t e_max,
                                       const FrobeniusOptions& options = {},
                                       const NuLevelCallback& on_level = {});

// Generators of a after deduplication; 1 for the zero ideal.
std::uint64_t generator_count(const Ideal& a);

FptEnclosure enclosure_from_nu(const NuValue& value);
FptEnclosure fpt_enclosure(const Ideal& a, std::uint32_t e, const FrobeniusOptions& options = {});

// One term (a^ceil(lambda q))^[1/q] of the ascending chain defining tau.
Ideal test_ideal_step(const Ideal& a, const Rational& lambda, const PrimePower& q,
                      const FrobeniusOptions& options = {});

// Walks the chain for e = 1, 2, ... until two consecutive terms agree or
// e_max is reached. Throws InvariantViolation if the chain fails to ascend.
TestIdealResult test_ideal(const Ideal& a, const Rational& lambda, std::uint32_t e_max,
                           const FrobeniusOptions& options = {});

// Some generator is nonzero at the origin, i.e. the ideal is not inside m.
bool is_unit_at_origin(const Ideal& ideal);

// True iff some chain term I_e with e <= e_max is not inside m, which proves
// tau(a^lambda) is trivial at the origin. Unlike test_ideal this never stops
// early. A global unit check would also see singular points away from 0.
bool test_ideal_unit_within(const Ideal& a, const Rational& lambda, std::uint32_t e_max,
                            const FrobeniusOptions& options = {});

// Point value for fpt at the origin. The grid is every fraction with
// denominator <= max_denominator inside the intersection of the enclosures
// for e .. e_max. Returns the smallest grid point at which no chain term up to
// e_max leaves m, provided the grid point just below the window was shown to
// have test ideal trivial at the origin. nullopt when that proof is missing or the grid is empty.
std::optional<Rational> confirm_fpt_point(const Ideal& a, std::uint32_t e, std::uint32_t e_max,
                                          std::uint64_t max_denominator,
                                          const FrobeniusOptions& options = {});

}  // namespace fptlct
