#include "core/reduction.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "core/parse.hpp"

namespace fptlct {

IntPoly::IntPoly(std::uint32_t n, std::vector<IntTerm> terms) : n_(n) {
  std::map<Monomial, Int, DegRevLexGreater> acc;
  for (auto& t : terms) {
    if (t.monomial.size() != n) throw DomainError("term has the wrong number of variables");
    auto [it, fresh] = acc.emplace(t.monomial, t.coeff);
    if (!fresh) it->second = exact::checked_add(it->second, t.coeff);
  }
  for (auto& [m, c] : acc) {
    if (c != 0) terms_.push_back({m, c});
  }
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    const Int mag = negative ? exact::checked_neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += exact::to_string(mag);
    } else if (mag == 1) {
      out += format_monomial(t.monomial, n_);
    } else {
      out += exact::to_string(mag) + "*" + format_monomial(t.monomial, n_);
    }
  }
  return out;
}

IntPoly parse_int_poly(std::string_view text, std::uint32_t n, std::size_t column_offset) {
  std::vector<IntTerm> terms;
  for (auto& raw : parse_raw_poly(text, n, column_offset)) {
    terms.push_back({Monomial(std::move(raw.exponents)), raw.coeff});
  }
  return IntPoly(n, std::move(terms));
}

IntegerIdeal::IntegerIdeal(std::uint32_t n, std::vector<IntPoly> generators)
    : n_(n), generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("integer ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (g.n() != n) throw DomainError("generator has the wrong number of variables");
  }
}

std::string IntegerIdeal::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + generators_[i].to_string() + "\"";
  }
  return out + "]";
}

IntegerIdeal parse_integer_ideal(std::string_view text, std::uint32_t n) {
  std::vector<IntPoly> gens;
  for (const auto& slice : split_generators(text)) gens.push_back(parse_int_poly(slice.text, n, slice.column_offset));
  return IntegerIdeal(n, std::move(gens));
}

GFPoly reduce_mod_p(const IntPoly& f, std::uint32_t p) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    const std::uint64_t c = gf::reduce(t.coeff, p);
    if (c != 0) terms.push_back({t.monomial, c});
  }
  // Dropping terms keeps the order, so the result is already canonical.
  return GFPoly::from_canonical(Ambient{f.n(), p}, std::move(terms));
}

Ideal reduce_mod_p(const IntegerIdeal& ideal, std::uint32_t p) {
  if (!exact::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  std::vector<GFPoly> gens;
  for (const auto& g : ideal.generators()) {
    GFPoly r = reduce_mod_p(g, p);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  if (gens.empty()) {
    throw DegenerateReductionError("every generator vanishes modulo " + std::to_string(p));
  }
  return Ideal(Ambient{ideal.n(), p}, std::move(gens));
}

Ideal truncate_ideal(const Ideal& a, std::uint32_t d) {
  if (d == 0) throw DomainError("truncation degree must be positive");
  std::vector<GFPoly> gens = a.generators();
  const auto box = MonomialIdeal::maximal_power(a.ambient().n, d);
  for (const auto& m : box.generators()) {
    gens.push_back(GFPoly::monomial(a.ambient(), m));
  }
  return Ideal(a.ambient(), std::move(gens));
}

IntegerIdeal truncate_ideal(const IntegerIdeal& a, std::uint32_t d) {
  if (d == 0) throw DomainError("truncation degree must be positive");
  std::vector<IntPoly> gens = a.generators();
  const auto box = MonomialIdeal::maximal_power(a.n(), d);
  for (const auto& m : box.generators()) {
    gens.emplace_back(a.n(), std::vector<IntTerm>{{m, 1}});
  }
  return IntegerIdeal(a.n(), std::move(gens));
}

std::vector<CorpusEntry> parse_corpus(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("corpus is not valid JSON: ") + e.what(), 1, e.byte);
  }
  if (!doc.is_array()) throw ParseError("corpus must be a JSON array", 1, 1);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    const std::string where = "corpus entry " + std::to_string(i);
    try {
      const auto n = item.at("n").get<std::uint32_t>();
      std::vector<std::string> texts = item.at("gens").get<std::vector<std::string>>();
      std::vector<IntPoly> gens;
      for (const auto& t : texts) gens.push_back(parse_int_poly(t, n));
      out.push_back({texts, IntegerIdeal(n, std::move(gens)), Rational::parse(item.at("lct0").get<std::string>()),
                     item.at("provenance").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(where + ": " + e.what(), 1, 1);
    }
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

MonomialIdeal term_ideal(const IntegerIdeal& ideal) {
  std::vector<Monomial> monos;
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms()) monos.push_back(t.monomial);
  }
  return MonomialIdeal(ideal.n(), std::move(monos));
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = parse_corpus(reduction::builtin_corpus_json());
  return entries;
}

}  // namespace fptlct
