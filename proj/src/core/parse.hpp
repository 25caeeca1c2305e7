#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/exact.hpp"
#include "core/gfpoly.hpp"

namespace fptlct {

// One parsed term before any coefficient reduction.
struct RawTerm {
  std::vector<std::uint32_t> exponents;
  Int coeff;
};

// Parses one polynomial in the text grammar
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' uint)?
//   var    := 'x' uint | 'x' | 'y' | 'z'
//   coeff  := uint
//
// `x`, `y`, `z` alias x1, x2, x3. Whitespace is ignored. A variable index
// above n is rejected. `column_offset` shifts reported columns when the text
// is a slice of a longer line.
std::vector<RawTerm> parse_raw_poly(std::string_view text, std::uint32_t n,
                                    std::size_t column_offset = 0);

GFPoly parse_gfpoly(std::string_view text, std::uint32_t n, std::uint32_t p);

// Splits a comma-separated generator list, keeping each slice's column.
struct TextSlice {
  std::string_view text;
  std::size_t column_offset;
};
std::vector<TextSlice> split_generators(std::string_view text);

std::vector<GFPoly> parse_gfpoly_list(std::string_view text, std::uint32_t n, std::uint32_t p);

}  // namespace fptlct
