#pragma once

#include <string>

#include "core/gfpoly.hpp"
#include "core/groebner.hpp"
#include "core/parse.hpp"

namespace testing {

inline fptlct::GFPoly poly(const std::string& text, std::uint32_t n, std::uint32_t p) {
  return fptlct::parse_gfpoly(text, n, p);
}

inline fptlct::Ideal ideal(const std::string& gens, std::uint32_t n, std::uint32_t p) {
  return fptlct::Ideal(fptlct::Ambient{n, p}, fptlct::parse_gfpoly_list(gens, n, p));
}

inline fptlct::Ideal ideal_of(const fptlct::MonomialIdeal& m, std::uint32_t p) { return m.to_ideal(p); }

}  // namespace testing
