#include "core/newton.hpp"

#include <algorithm>
#include <set>

namespace fptlct {

namespace {

bool dominates(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

NewtonPolytope::NewtonPolytope(std::uint32_t n, std::vector<std::vector<std::uint64_t>> points) : n_(n) {
  for (const auto& pt : points) {
    if (pt.size() != n) throw DomainError("exponent point has the wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates(points[i], points[j]);
    }
    if (!dominated) points_.push_back(points[i]);
  }
}

NewtonPolytope NewtonPolytope::of(const MonomialIdeal& ideal) {
  std::vector<std::vector<std::uint64_t>> pts;
  for (const auto& g : ideal.generators()) pts.emplace_back(g.exponents().begin(), g.exponents().end());
  return NewtonPolytope(ideal.n(), std::move(pts));
}

bool NewtonPolytope::contains_origin() const {
  return std::any_of(points_.begin(), points_.end(), [](const auto& pt) {
    return std::all_of(pt.begin(), pt.end(), [](std::uint64_t x) { return x == 0; });
  });
}

OrderResult newton_order_lp(const NewtonPolytope& polytope, const std::vector<Rational>& v) {
  if (polytope.points().empty()) throw DomainError("Newton polytope of the zero ideal is empty");
  if (v.size() != polytope.n()) throw DomainError("weight vector has the wrong dimension");
  // With z_j = t theta_j the condition v in t P becomes linear in z.
  lp::Problem problem;
  problem.num_vars = polytope.points().size();
  problem.objective.assign(problem.num_vars, Rational(1));
  for (std::uint32_t i = 0; i < polytope.n(); ++i) {
    lp::Constraint row;
    for (const auto& pt : polytope.points()) row.coeffs.emplace_back(static_cast<Int>(pt[i]));
    row.rhs = v[i];
    problem.constraints.push_back(std::move(row));
  }
  lp::Result r = lp::maximize(problem);
  if (r.status == lp::Status::Optimal && !lp::satisfies(problem, r.solution)) {
    throw InvariantViolation("LP witness violates its constraints");
  }
  return {r.status, r.optimum, std::move(r.solution)};
}

Rational newton_order(const NewtonPolytope& polytope, const std::vector<Rational>& v) {
  for (const auto& x : v) {
    if (x < Rational(0)) throw DomainError("weight vector must be nonnegative");
  }
  const OrderResult r = newton_order_lp(polytope, v);
  if (r.status == lp::Status::Unbounded) throw DomainError("order is unbounded: the polytope contains the origin");
  if (r.status != lp::Status::Optimal) throw InvariantViolation("order LP infeasible for a nonnegative weight");
  return r.optimum;
}

std::optional<Rational> lct_monomial(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return Rational(0);
  if (ideal.is_unit()) return std::nullopt;
  return newton_order(NewtonPolytope::of(ideal), std::vector<Rational>(ideal.n(), Rational(1)));
}

namespace {

// Calls visit(u) for every u in [0, cap]^n.
template <typename Visit>
void for_each_in_box(std::uint32_t n, std::uint64_t cap, std::uint64_t max_box, Visit visit) {
  std::uint64_t cells = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cells > max_box / (cap + 1)) {
      throw CapacityError("monomial enumeration box exceeds " + std::to_string(max_box) + " points");
    }
    cells *= cap + 1;
  }
  std::vector<std::uint64_t> u(n, 0);
  for (std::uint64_t c = 0; c < cells; ++c) {
    visit(u);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (++u[i] <= cap) break;
      u[i] = 0;
    }
  }
}

// ceil(lambda M), where M is the largest coordinate among the points. For
// t slightly above lambda, row i of the LP has sum z_j a_j^(i) <= t M, which
// is below ceil(lambda M) + 1, so larger coordinates leave the row slack and
// cannot matter for minimal generators.
std::uint64_t box_cap(const NewtonPolytope& polytope, const Rational& lambda) {
  std::uint64_t m = 0;
  for (const auto& pt : polytope.points()) {
    for (auto x : pt) m = std::max(m, x);
  }
  const Int cap = (lambda * Rational(static_cast<Int>(m))).ceil();
  if (cap > static_cast<Int>(UINT32_MAX)) throw CapacityError("enumeration box is too large");
  return static_cast<std::uint64_t>(cap);
}

std::vector<Rational> shifted_weight(const std::vector<std::uint64_t>& u) {
  std::vector<Rational> v;
  v.reserve(u.size());
  for (auto x : u) v.emplace_back(static_cast<Int>(x) + 1);
  return v;
}

}  // namespace

MonomialIdeal multiplier_ideal_monomial(const MonomialIdeal& ideal, const Rational& lambda, std::uint64_t max_box) {
  if (ideal.is_zero()) throw DomainError("multiplier ideal of the zero ideal is undefined here");
  if (lambda < Rational(0)) throw DomainError("multiplier ideal exponent must be nonnegative");
  if (ideal.is_unit() || lambda.is_zero()) return MonomialIdeal::unit(ideal.n());
  const NewtonPolytope polytope = NewtonPolytope::of(ideal);
  std::vector<Monomial> members;
  for_each_in_box(ideal.n(), box_cap(polytope, lambda), max_box, [&](const std::vector<std::uint64_t>& u) {
    if (newton_order(polytope, shifted_weight(u)) > lambda) {
      members.emplace_back(std::vector<std::uint32_t>(u.begin(), u.end()));
    }
  });
  return MonomialIdeal(ideal.n(), std::move(members));
}

std::vector<Rational> jumping_candidates(const MonomialIdeal& ideal, const Rational& bound, std::uint64_t max_box) {
  if (ideal.is_zero() || ideal.is_unit()) throw DomainError("jumping numbers need a nonzero proper ideal");
  if (bound <= Rational(0)) return {};
  const NewtonPolytope polytope = NewtonPolytope::of(ideal);
  std::set<Rational> values;
  for_each_in_box(ideal.n(), box_cap(polytope, bound), max_box, [&](const std::vector<std::uint64_t>& u) {
    Rational ord = newton_order(polytope, shifted_weight(u));
    if (ord <= bound) values.insert(std::move(ord));
  });
  return {values.begin(), values.end()};
}

}  // namespace fptlct
