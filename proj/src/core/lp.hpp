#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "core/exact.hpp"

namespace fptlct::lp {

enum class Sense { LessEqual, GreaterEqual, Equal };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rational> coeffs;
  Sense sense = Sense::LessEqual;
  Rational rhs;
};

// maximize objective . x  subject to the constraints and x >= 0.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;
};

struct Result {
  Status status = Status::Infeasible;
  Rational optimum;                // meaningful when Optimal
  std::vector<Rational> solution;  // meaningful when Optimal
};

// Two-phase dense tableau simplex over exact rationals with Bland's rule.
Result maximize(const Problem& problem);

// True iff x satisfies every constraint and x >= 0, checked exactly.
bool satisfies(const Problem& problem, const std::vector<Rational>& x);

struct PackingOptions {
  std::size_t max_nodes = 200000;
};

// max sum(alpha) over nonnegative integer alpha with sum_j alpha_j * columns[j] <= bound.
// Every column must be nonzero (otherwise the program is unbounded).
std::uint64_t max_packing(const std::vector<std::vector<std::uint64_t>>& columns,
                          const std::vector<std::uint64_t>& bound,
                          const PackingOptions& options = {});

}  // namespace fptlct::lp
