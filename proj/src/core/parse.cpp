#include "core/parse.hpp"

#include <cctype>
#include <limits>

namespace fptlct {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::uint32_t n, std::size_t column_offset)
      : text_(text), n_(n), offset_(column_offset) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, offset_ + pos_ + 1);
  }

  std::uint64_t uint(std::uint64_t limit, const char* what) {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (limit - d) / 10) fail(std::string(what) + " too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  RawTerm term(bool negative) {
    RawTerm t{std::vector<std::uint32_t>(n_, 0), 1};
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = static_cast<Int>(uint(std::numeric_limits<std::uint64_t>::max(), "coefficient"));
    } else {
      factor(t);
    }
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      factor(t);
    }
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  void factor(RawTerm& t) {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    std::size_t index = 0;
    if (c == 'x') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::uint64_t i = uint(std::numeric_limits<std::uint32_t>::max(), "variable index");
        if (i == 0) {
          pos_ = start;
          fail("variable indices start at 1");
        }
        index = static_cast<std::size_t>(i - 1);
      } else {
        index = 0;
      }
    } else if (c == 'y') {
      ++pos_;
      index = 1;
    } else if (c == 'z') {
      ++pos_;
      index = 2;
    } else {
      fail("expected a variable");
    }
    if (index >= n_) {
      throw ParseError("variable index " + std::to_string(index + 1) + " exceeds variable count " +
                           std::to_string(n_),
                       1, offset_ + start + 1);
    }
    std::uint64_t power = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      power = uint(std::numeric_limits<std::uint32_t>::max(), "exponent");
    }
    const std::uint64_t total = std::uint64_t{t.exponents[index]} + power;
    if (total > std::numeric_limits<std::uint32_t>::max()) fail("exponent exceeds 2^32");
    t.exponents[index] = static_cast<std::uint32_t>(total);
  }

  std::string_view text_;
  std::uint32_t n_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawTerm> parse_raw_poly(std::string_view text, std::uint32_t n,
                                    std::size_t column_offset) {
  if (n == 0) throw DomainError("variable count must be positive");
  return PolyParser(text, n, column_offset).run();
}

GFPoly parse_gfpoly(std::string_view text, std::uint32_t n, std::uint32_t p) {
  if (!exact::is_prime(p) || p >= (1u << 31)) throw DomainError("not a prime below 2^31: " + std::to_string(p));
  const Ambient ambient{n, p};
  std::vector<Term> terms;
  for (auto& raw : parse_raw_poly(text, n)) {
    terms.push_back({Monomial(std::move(raw.exponents)), gf::reduce(raw.coeff, p)});
  }
  return GFPoly(ambient, std::move(terms));
}

std::vector<TextSlice> split_generators(std::string_view text) {
  std::vector<TextSlice> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back({text.substr(start, i - start), start});
      start = i + 1;
    }
  }
  return out;
}

std::vector<GFPoly> parse_gfpoly_list(std::string_view text, std::uint32_t n, std::uint32_t p) {
  if (!exact::is_prime(p) || p >= (1u << 31)) throw DomainError("not a prime below 2^31: " + std::to_string(p));
  const Ambient ambient{n, p};
  std::vector<GFPoly> out;
  for (const auto& slice : split_generators(text)) {
    std::vector<Term> terms;
    for (auto& raw : parse_raw_poly(slice.text, n, slice.column_offset)) {
      terms.push_back({Monomial(std::move(raw.exponents)), gf::reduce(raw.coeff, p)});
    }
    out.emplace_back(ambient, std::move(terms));
  }
  return out;
}

}  // namespace fptlct
