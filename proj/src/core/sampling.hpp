#pragma once

#include <cstdint>
#include <random>

#include "core/groebner.hpp"

namespace fptlct {

// Random polynomial with up to max_terms terms of total degree <= max_degree.
// With vanish_at_origin the constant term is dropped.
GFPoly random_poly(std::mt19937_64& rng, Ambient ambient, std::uint32_t max_degree, std::uint32_t max_terms,
                   bool vanish_at_origin = false);

// Checks  b in c^[q]  <=>  b^[1/q] in c  on one pair of ideals.
bool adjunction_holds(const Ideal& b, const Ideal& c, const PrimePower& q);

struct AdjunctionSample {
  Ideal b;
  Ideal c;
  PrimePower q;
};

// n <= 2, p in {2,3,5}, e in {1,2}, degree <= 4, at most two generators per side.
// About half of the samples are built so that b lies in c^[q].
AdjunctionSample random_adjunction_sample(std::mt19937_64& rng);

}  // namespace fptlct
