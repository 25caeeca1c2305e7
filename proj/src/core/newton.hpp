#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/exact.hpp"
#include "core/groebner.hpp"
#include "core/lp.hpp"

namespace fptlct {

// conv(points) + nonnegative orthant. Dominated points are pruned.
class NewtonPolytope {
 public:
  NewtonPolytope(std::uint32_t n, std::vector<std::vector<std::uint64_t>> points);
  static NewtonPolytope of(const MonomialIdeal& ideal);

  std::uint32_t n() const { return n_; }
  const std::vector<std::vector<std::uint64_t>>& points() const { return points_; }
  bool contains_origin() const;

 private:
  std::uint32_t n_;
  std::vector<std::vector<std::uint64_t>> points_;
};

struct OrderResult {
  lp::Status status;
  Rational optimum;              // when Optimal
  std::vector<Rational> witness;  // z_j, one per point
};

// The LP  max sum z_j  s.t.  sum z_j a_j <= v,  z >= 0.
OrderResult newton_order_lp(const NewtonPolytope& polytope, const std::vector<Rational>& v);

// max { t >= 0 : v in t P }. Throws DomainError for an empty polytope or one
// containing the origin (the order is then unbounded).
Rational newton_order(const NewtonPolytope& polytope, const std::vector<Rational>& v);

// lct at the origin; nullopt stands for +infinity (the unit ideal) and the
// zero ideal gives 0.
std::optional<Rational> lct_monomial(const MonomialIdeal& ideal);

// J(a^lambda) for a monomial ideal: x^u is a member iff ord(u + 1) > lambda.
MonomialIdeal multiplier_ideal_monomial(const MonomialIdeal& ideal, const Rational& lambda,
                                        std::uint64_t max_box = 4000000);

// Every value ord(u + 1) in (0, bound] over the enumeration box for bound,
// ascending. Contains every jumping number <= bound.
std::vector<Rational> jumping_candidates(const MonomialIdeal& ideal, const Rational& bound,
                                         std::uint64_t max_box = 4000000);

}  // namespace fptlct
