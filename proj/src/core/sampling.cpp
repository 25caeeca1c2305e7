#include "core/sampling.hpp"

#include "core/frobenius.hpp"

namespace fptlct {

namespace {

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

GFPoly random_poly(std::mt19937_64& rng, Ambient ambient, std::uint32_t max_degree, std::uint32_t max_terms,
                   bool vanish_at_origin) {
  const auto count = uniform(rng, 1, max_terms);
  std::vector<Term> terms;
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto degree = uniform(rng, vanish_at_origin ? 1 : 0, max_degree);
    std::vector<std::uint32_t> exps(ambient.n, 0);
    // Spread `degree` over the variables.
    for (std::uint64_t k = 0; k < degree; ++k) ++exps[uniform(rng, 0, ambient.n - 1)];
    terms.push_back({Monomial(std::move(exps)), uniform(rng, 1, ambient.p - 1)});
  }
  return GFPoly(ambient, std::move(terms));
}

bool adjunction_holds(const Ideal& b, const Ideal& c, const PrimePower& q) {
  const bool left = ideal_contains(bracket_power(c, q), b);
  const bool right = ideal_contains(c, frobenius_root(b, q));
  return left == right;
}

AdjunctionSample random_adjunction_sample(std::mt19937_64& rng) {
  static constexpr std::uint32_t primes[] = {2, 3, 5};
  const Ambient ambient{static_cast<std::uint32_t>(uniform(rng, 1, 2)), primes[uniform(rng, 0, 2)]};
  const PrimePower q(ambient.p, static_cast<std::uint32_t>(uniform(rng, 1, 2)));

  std::vector<GFPoly> c_gens;
  for (auto k = uniform(rng, 1, 2); k > 0; --k) {
    c_gens.push_back(random_poly(rng, ambient, static_cast<std::uint32_t>(uniform(rng, 1, 4)), 3, true));
  }
  Ideal c(ambient, c_gens);

  std::vector<GFPoly> b_gens;
  const bool inside = uniform(rng, 0, 1) == 1;
  for (auto k = uniform(rng, 1, 2); k > 0; --k) {
    // Combinations of q-th powers land in c^[q]; only generators whose q-th
    // power fits the degree budget of 4 are usable.
    GFPoly g(ambient);
    if (inside) {
      for (const auto& h : c_gens) {
        const std::uint64_t used = q.q() * h.total_degree();
        if (used > 4) continue;
        const auto cofactor = random_poly(rng, ambient, static_cast<std::uint32_t>(4 - used), 2);
        g = poly_add(g, poly_mul(cofactor, frobenius_power(h, q)));
      }
    }
    if (g.is_zero()) g = random_poly(rng, ambient, 4, 3);
    b_gens.push_back(std::move(g));
  }
  return {Ideal(ambient, std::move(b_gens)), std::move(c), q};
}

}  // namespace fptlct
