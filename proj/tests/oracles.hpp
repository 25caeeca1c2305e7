// Slow reference computations used to check the library. None of them share
// code paths with the fast routines they check beyond basic polynomial and
// rational arithmetic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "core/exact.hpp"
#include "core/frobenius.hpp"
#include "core/gfpoly.hpp"
#include "core/groebner.hpp"

namespace oracle {

using fptlct::GFPoly;
using fptlct::Ideal;
using fptlct::Int;
using fptlct::Rational;

// binom(r, k) mod p is nonzero iff every base-p digit of k is at most the
// matching digit of r.
inline bool lucas_nonzero(std::uint64_t r, std::uint64_t k, std::uint64_t p) {
  while (k != 0) {
    if (k % p > r % p) return false;
    k /= p;
    r /= p;
  }
  return true;
}

// (x^a + y^b)^r lies outside (x^q, y^q) iff some binom(r,k) survives mod p
// with a k < q and b (r - k) < q.
inline bool binomial_survives(std::uint64_t a, std::uint64_t b, std::uint64_t r, std::uint64_t p,
                              std::uint64_t q) {
  const std::uint64_t k_hi = std::min<std::uint64_t>(r, (q - 1) / a);
  const std::uint64_t need = r > (q - 1) / b ? r - (q - 1) / b : 0;  // r - k <= (q-1)/b
  for (std::uint64_t k = need; k <= k_hi; ++k) {
    if (lucas_nonzero(r, k, p)) return true;
  }
  return false;
}

// nu for x^a + y^b by binary search over r (survival is monotone in r).
inline std::uint64_t binomial_nu(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t q) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 2 * q;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (binomial_survives(a, b, mid, p, q)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// The straightforward definition: a^r is outside m^[q] iff the F_p-span of
// all products of r generators, truncated mod (x_i^q), is nonzero.
inline std::uint64_t dp_nu(const Ideal& a, std::uint64_t q) {
  std::vector<GFPoly> level{GFPoly::constant(a.ambient(), 1)};
  std::uint64_t r = 0;
  for (;;) {
    std::vector<GFPoly> next;
    for (const auto& f : level) {
      for (const auto& g : a.generators()) {
        GFPoly h = fptlct::poly_mul_truncated(f, g, q);
        if (!h.is_zero()) next.push_back(std::move(h));
      }
    }
    next = fptlct::linear_basis(next);
    if (next.empty()) return r;
    level = std::move(next);
    ++r;
  }
}

// Expand f^N, then take the root.
inline Ideal expand_then_root(const GFPoly& f, std::uint64_t n, const fptlct::PrimePower& q) {
  return fptlct::frobenius_root(Ideal(f.ambient(), {fptlct::poly_pow(f, n)}), q);
}

// Solves the square system M z = v exactly; nullopt if singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> v) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(v[piv], v[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      v[r] -= f * v[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) v[i] /= m[i][i];
  return v;
}

// max sum z  s.t.  sum z_j a_j <= v, z >= 0, by enumerating basic solutions:
// choose which constraints are tight and which variables are basic.
inline Rational vertex_order(const std::vector<std::vector<std::uint64_t>>& points, const std::vector<Rational>& v) {
  const std::size_t n = v.size();
  const std::size_t k = points.size();
  Rational best(0);
  // Each basic solution has some set B of nonzero variables (|B| <= n) whose
  // columns restricted to a tight row set T with |T| = |B| are invertible.
  for (std::uint32_t bmask = 1; bmask < (1u << k); ++bmask) {
    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < k; ++j) {
      if (bmask >> j & 1) vars.push_back(j);
    }
    if (vars.size() > n) continue;
    for (std::uint32_t tmask = 1; tmask < (1u << n); ++tmask) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < n; ++i) {
        if (tmask >> i & 1) rows.push_back(i);
      }
      if (rows.size() != vars.size()) continue;
      std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(vars.size()));
      std::vector<Rational> rhs(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < vars.size(); ++c) m[r][c] = Rational(static_cast<Int>(points[vars[c]][rows[r]]));
        rhs[r] = v[rows[r]];
      }
      const auto z = solve(m, rhs);
      if (!z) continue;
      bool feasible = std::all_of(z->begin(), z->end(), [](const Rational& x) { return x >= Rational(0); });
      for (std::size_t i = 0; i < n && feasible; ++i) {
        Rational lhs(0);
        for (std::size_t c = 0; c < vars.size(); ++c) lhs += (*z)[c] * Rational(static_cast<Int>(points[vars[c]][i]));
        feasible = lhs <= v[i];
      }
      if (!feasible) continue;
      Rational total(0);
      for (const auto& x : *z) total += x;
      best = fptlct::max(best, total);
    }
  }
  return best;
}

}  // namespace oracle
