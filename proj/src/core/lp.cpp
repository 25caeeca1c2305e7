#include "core/lp.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace fptlct::lp {

namespace {

class Tableau {
 public:
  // rows x cols coefficient block plus one rhs column; row `rows` is the objective.
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1)), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return at(r, cols_); }
  Rational& obj(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (!at(pr, c).is_zero()) at(pr, c) *= inv;
    }
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const Rational factor = at(r, pc);
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        if (!at(pr, c).is_zero()) at(r, c) -= factor * at(pr, c);
      }
    }
    basis_[pr] = pc;
  }

  // Bland's rule on columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (obj(c) < Rational(0)) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Rational& a = at(r, *entering);
        if (a <= Rational(0)) continue;
        const Rational ratio = rhs(r) / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void drop_row(std::size_t r) {
    std::vector<Rational> next;
    next.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      for (std::size_t c = 0; c <= cols_; ++c) next.push_back(at(i, c));
    }
    cells_ = std::move(next);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result maximize(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  if (problem.objective.size() != n) throw DomainError("objective length does not match variable count");
  const std::size_t m = problem.constraints.size();

  // Normalize to nonnegative right-hand sides.
  std::vector<Constraint> rows = problem.constraints;
  for (auto& row : rows) {
    if (row.coeffs.size() != n) throw DomainError("constraint length does not match variable count");
    if (row.rhs < Rational(0)) {
      for (auto& a : row.coeffs) a = -a;
      row.rhs = -row.rhs;
      if (row.sense == Sense::LessEqual) {
        row.sense = Sense::GreaterEqual;
      } else if (row.sense == Sense::GreaterEqual) {
        row.sense = Sense::LessEqual;
      }
    }
  }

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& row : rows) {
    if (row.sense != Sense::Equal) ++slack_count;
    if (row.sense != Sense::LessEqual) ++artificial_count;
  }
  const std::size_t first_artificial = n + slack_count;
  const std::size_t cols = first_artificial + artificial_count;

  Tableau t(m, cols);
  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = rows[r].coeffs[c];
    t.rhs(r) = rows[r].rhs;
    switch (rows[r].sense) {
      case Sense::LessEqual:
        t.at(r, next_slack) = 1;
        t.basis()[r] = next_slack++;
        break;
      case Sense::GreaterEqual:
        t.at(r, next_slack++) = -1;
        t.at(r, next_artificial) = 1;
        t.basis()[r] = next_artificial++;
        break;
      case Sense::Equal:
        t.at(r, next_artificial) = 1;
        t.basis()[r] = next_artificial++;
        break;
    }
  }

  Result result;
  if (artificial_count > 0) {
    // Phase one: maximize -(sum of artificials).
    for (std::size_t c = first_artificial; c < cols; ++c) t.obj(c) = 1;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basis()[r] < first_artificial) continue;
      for (std::size_t c = 0; c <= cols; ++c) t.obj(c) -= t.at(r, c);
    }
    t.optimize(cols);
    if (t.obj(cols) < Rational(0)) {
      result.status = Status::Infeasible;
      return result;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < first_artificial) {
        ++r;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (!t.at(r, c).is_zero()) {
          col = c;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
        ++r;
      } else {
        t.drop_row(r);
      }
    }
    for (std::size_t c = first_artificial; c < cols; ++c) {
      for (std::size_t r = 0; r < t.rows(); ++r) t.at(r, c) = 0;
    }
  }

  // Phase two.
  for (std::size_t c = 0; c <= cols; ++c) t.obj(c) = 0;
  for (std::size_t c = 0; c < n; ++c) t.obj(c) = -problem.objective[c];
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const Rational factor = t.obj(t.basis()[r]);
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c <= cols; ++c) t.obj(c) -= factor * t.at(r, c);
  }
  if (!t.optimize(first_artificial)) {
    result.status = Status::Unbounded;
    return result;
  }
  result.status = Status::Optimal;
  result.optimum = t.obj(cols);
  result.solution.assign(n, Rational(0));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) result.solution[t.basis()[r]] = t.rhs(r);
  }
  return result;
}

bool satisfies(const Problem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.num_vars) return false;
  for (const auto& v : x) {
    if (v < Rational(0)) return false;
  }
  for (const auto& row : problem.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coeffs[j] * x[j];
    switch (row.sense) {
      case Sense::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Sense::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case Sense::Equal:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

class PackingSearch {
 public:
  PackingSearch(const std::vector<std::vector<std::uint64_t>>& columns,
                const std::vector<std::uint64_t>& bound, const PackingOptions& options)
      : columns_(columns), bound_(bound), options_(options) {}

  std::uint64_t run() {
    const std::size_t k = columns_.size();
    std::vector<std::uint64_t> lower(k, 0);
    std::vector<std::optional<std::uint64_t>> upper(k);
    explore(lower, upper);
    return best_;
  }

 private:
  void explore(const std::vector<std::uint64_t>& lower,
               const std::vector<std::optional<std::uint64_t>>& upper) {
    if (++nodes_ > options_.max_nodes) {
      throw CapacityError("integer packing exceeded " + std::to_string(options_.max_nodes) + " nodes");
    }
    const std::size_t k = columns_.size();
    const std::size_t m = bound_.size();

    std::vector<std::uint64_t> residual = bound_;
    std::uint64_t base = 0;
    for (std::size_t j = 0; j < k; ++j) {
      base += lower[j];
      for (std::size_t i = 0; i < m; ++i) {
        const unsigned __int128 used = static_cast<unsigned __int128>(lower[j]) * columns_[j][i];
        if (used > residual[i]) return;
        residual[i] -= static_cast<std::uint64_t>(used);
      }
    }

    Problem lp;
    lp.num_vars = k;
    lp.objective.assign(k, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
      Constraint row;
      for (std::size_t j = 0; j < k; ++j) row.coeffs.emplace_back(static_cast<Int>(columns_[j][i]));
      row.rhs = static_cast<Int>(residual[i]);
      lp.constraints.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (!upper[j]) continue;
      if (*upper[j] < lower[j]) return;
      Constraint row;
      row.coeffs.assign(k, Rational(0));
      row.coeffs[j] = 1;
      row.rhs = static_cast<Int>(*upper[j] - lower[j]);
      lp.constraints.push_back(std::move(row));
    }
    const Result relax = maximize(lp);
    if (relax.status == Status::Unbounded) throw DomainError("packing program is unbounded");
    if (relax.status != Status::Optimal) return;

    const auto bound = base + static_cast<std::uint64_t>(relax.optimum.floor());
    if (bound <= best_ && found_) return;

    // Rounding down stays feasible because all data is nonnegative.
    std::uint64_t rounded = base;
    std::optional<std::size_t> fractional;
    for (std::size_t j = 0; j < k; ++j) {
      rounded += static_cast<std::uint64_t>(relax.solution[j].floor());
      if (!fractional && !relax.solution[j].is_integer()) fractional = j;
    }
    if (!found_ || rounded > best_) {
      best_ = rounded;
      found_ = true;
    }
    if (!fractional || bound <= best_) return;

    const std::size_t j = *fractional;
    const auto cut = lower[j] + static_cast<std::uint64_t>(relax.solution[j].floor());
    {
      auto next_lower = lower;
      next_lower[j] = cut + 1;
      explore(next_lower, upper);
    }
    {
      auto next_upper = upper;
      next_upper[j] = cut;
      explore(lower, next_upper);
    }
  }

  const std::vector<std::vector<std::uint64_t>>& columns_;
  const std::vector<std::uint64_t>& bound_;
  PackingOptions options_;
  std::size_t nodes_ = 0;
  std::uint64_t best_ = 0;
  bool found_ = false;
};

}  // namespace

std::uint64_t max_packing(const std::vector<std::vector<std::uint64_t>>& columns,
                          const std::vector<std::uint64_t>& bound, const PackingOptions& options) {
  for (const auto& col : columns) {
    if (col.size() != bound.size()) throw DomainError("packing column has wrong length");
    if (std::all_of(col.begin(), col.end(), [](std::uint64_t v) { return v == 0; })) {
      throw DomainError("packing column is zero; the program is unbounded");
    }
  }
  if (columns.empty()) return 0;
  return PackingSearch(columns, bound, options).run();
}

}  // namespace fptlct::lp
