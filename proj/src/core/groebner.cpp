#include "core/groebner.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fptlct {

namespace {

GFPoly drop_leading(const GFPoly& f) {
  std::vector<Term> rest(f.terms().begin() + 1, f.terms().end());
  return GFPoly::from_canonical(f.ambient(), std::move(rest));
}

// f - c * m * g, where the leading terms cancel.
GFPoly cancel_leading(const GFPoly& f, const GFPoly& g) {
  const auto p = f.ambient().p;
  const Term& lt = f.leading();
  const Term& lg = g.leading();
  const std::uint64_t c = gf::mul(lt.coeff, gf::inv(lg.coeff, p), p);
  return poly_sub(f, g.shifted(lt.monomial / lg.monomial, c));
}

std::string quote_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += '"' + items[i] + '"';
  }
  return out + "]";
}

}  // namespace

GFPoly normal_form(const GFPoly& f, const std::vector<GFPoly>& divisors) {
  for (const auto& g : divisors) {
    require_same_ambient(f.ambient(), g.ambient());
    if (g.is_zero()) throw DomainError("normal_form divisor list contains zero");
  }
  GFPoly rest = f;
  std::vector<Term> remainder;
  while (!rest.is_zero()) {
    const Monomial& lm = rest.leading().monomial;
    const GFPoly* divisor = nullptr;
    for (const auto& g : divisors) {
      if (g.leading().monomial.divides(lm)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      rest = cancel_leading(rest, *divisor);
    } else {
      remainder.push_back(rest.leading());
      rest = drop_leading(rest);
    }
  }
  // Leading terms are peeled off in descending order.
  return GFPoly::from_canonical(f.ambient(), std::move(remainder));
}

std::vector<GFPoly> linear_basis(const std::vector<GFPoly>& generators) {
  std::map<Monomial, GFPoly, DegRevLexGreater> pivots;
  for (const auto& g : generators) {
    GFPoly f = g;
    while (!f.is_zero()) {
      auto it = pivots.find(f.leading().monomial);
      if (it == pivots.end()) break;
      f = cancel_leading(f, it->second);
    }
    if (f.is_zero()) continue;
    f = f.monic();
    pivots.emplace(f.leading().monomial, std::move(f));
  }
  std::vector<GFPoly> out;
  out.reserve(pivots.size());
  for (auto& [m, f] : pivots) out.push_back(std::move(f));
  return out;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Selection order: degree of lcm, then degrevlex of lcm, then indices.
bool pair_before(const Pair& a, const Pair& b) {
  const int c = degrevlex_compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  return std::tie(a.j, a.i) < std::tie(b.j, b.i);
}

GFPoly s_polynomial(const GFPoly& f, const GFPoly& g, const Monomial& l) {
  // Both inputs are monic.
  return poly_sub(f.shifted(l / f.leading().monomial, 1), g.shifted(l / g.leading().monomial, 1));
}

}  // namespace

std::vector<GFPoly> reduced_groebner_basis(const std::vector<GFPoly>& generators,
                                           const GroebnerOptions& options) {
  std::vector<GFPoly> basis;
  if (generators.empty()) return basis;
  const Ambient ambient = generators.front().ambient();
  for (const auto& g : generators) require_same_ambient(ambient, g.ambient());

  for (auto& g : linear_basis(generators)) {
    if (g.is_constant()) return {GFPoly::constant(ambient, 1)};
    basis.push_back(std::move(g));
  }

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& a = basis[i].leading().monomial;
      const Monomial& b = basis[k].leading().monomial;
      // Product criterion: coprime leading monomials reduce to zero.
      if (gcd(a, b).is_one()) continue;
      pairs.push_back({i, k, lcm(a, b)});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > options.max_pairs) {
      throw CapacityError("Buchberger exceeded " + std::to_string(options.max_pairs) + " S-pairs");
    }
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
    const Pair pair = *best;
    pairs.erase(best);
    GFPoly h = normal_form(s_polynomial(basis[pair.i], basis[pair.j], pair.lcm), basis);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {GFPoly::constant(ambient, 1)};
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<GFPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading().monomial;
      const Monomial& mj = basis[j].leading().monomial;
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce.
  std::vector<GFPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GFPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const GFPoly& g = minimal[i];
    GFPoly tail = normal_form(drop_leading(g), others);
    reduced.push_back(poly_add(GFPoly::from_canonical(ambient, {g.leading()}), tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const GFPoly& a, const GFPoly& b) {
    return degrevlex_compare(a.leading().monomial, b.leading().monomial) < 0;
  });
  return reduced;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(Ambient ambient, std::vector<GFPoly> generators) : ambient_(ambient) {
  for (auto& g : generators) {
    require_same_ambient(ambient_, g.ambient());
    if (g.is_zero()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ambient ambient) { return Ideal(ambient, {GFPoly::constant(ambient, 1)}); }

Ideal Ideal::maximal(Ambient ambient) {
  std::vector<GFPoly> gens;
  for (std::size_t i = 0; i < ambient.n; ++i) gens.push_back(GFPoly::variable(ambient, i));
  return Ideal(ambient, std::move(gens));
}

bool Ideal::all_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const GFPoly& g) { return g.is_monomial(); });
}

const std::vector<GFPoly>& Ideal::groebner_basis(const GroebnerOptions& options) const {
  std::call_once(cache_->once, [&] { cache_->basis = reduced_groebner_basis(generators_, options); });
  return cache_->basis;
}

std::string Ideal::to_string() const {
  std::vector<std::string> items;
  for (const auto& g : generators_) items.push_back(g.to_string());
  return quote_list(items);
}

Ideal buchberger(const Ideal& ideal, const GroebnerOptions& options) {
  ideal.groebner_basis(options);
  return ideal;
}

bool ideal_member(const GFPoly& f, const Ideal& ideal) {
  require_same_ambient(f.ambient(), ideal.ambient());
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  if (ideal.all_monomial()) {
    for (const auto& t : f.terms()) {
      bool hit = false;
      for (const auto& g : ideal.generators()) {
        if (g.leading().monomial.divides(t.monomial)) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }
  return normal_form(f, ideal.groebner_basis()).is_zero();
}

bool ideal_contains(const Ideal& j, const Ideal& i) {
  require_same_ambient(i.ambient(), j.ambient());
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [&](const GFPoly& g) { return ideal_member(g, j); });
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
  require_same_ambient(i.ambient(), j.ambient());
  if (i.is_zero() || j.is_zero()) return i.is_zero() && j.is_zero();
  return i.groebner_basis() == j.groebner_basis();
}

bool is_unit_ideal(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (g.is_constant()) return true;
  }
  if (ideal.is_zero() || ideal.all_monomial()) return false;
  const auto& gb = ideal.groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  require_same_ambient(i.ambient(), j.ambient());
  std::vector<GFPoly> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal(i.ambient(), std::move(gens));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  require_same_ambient(i.ambient(), j.ambient());
  std::vector<GFPoly> gens;
  for (const auto& a : i.generators()) {
    for (const auto& b : j.generators()) gens.push_back(poly_mul(a, b));
  }
  return Ideal(i.ambient(), std::move(gens));
}

// ---------------------------------------------------------------------------
// MonomialIdeal

std::vector<Monomial> minimize_monomials(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_compare(a, b) < 0; });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    // Any divisor of m precedes it in ascending degrevlex order.
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const Monomial& k) { return k.divides(m); });
    if (!dominated) kept.push_back(std::move(m));
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(std::uint32_t n, std::vector<Monomial> generators) : n_(n) {
  for (const auto& m : generators) {
    if (m.size() != n) throw DomainError("monomial arity does not match ambient");
  }
  generators_ = minimize_monomials(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::uint32_t n) { return MonomialIdeal(n, {Monomial(n)}); }

MonomialIdeal MonomialIdeal::maximal(std::uint32_t n) {
  std::vector<Monomial> gens;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal_power(std::uint32_t n, std::uint32_t d) {
  std::vector<Monomial> gens;
  std::vector<std::uint32_t> e(n, 0);
  // Enumerate compositions of d into n parts.
  auto rec = [&](auto&& self, std::uint32_t var, std::uint32_t left) -> void {
    if (var + 1 == n) {
      e[var] = left;
      gens.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  if (n == 0) throw DomainError("variable count must be positive");
  rec(rec, 0, d);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw DomainError("generator '" + g.to_string() + "' is not a monomial");
    gens.push_back(g.leading().monomial);
  }
  return MonomialIdeal(ideal.ambient().n, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Monomial& m) { return contains(m); });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Monomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  std::vector<Monomial> gens;
  gens.reserve(generators_.size() * other.generators_.size());
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) gens.push_back(a * b);
  }
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::power(std::uint64_t k) const {
  MonomialIdeal result = unit(n_);
  MonomialIdeal base = *this;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

MonomialIdeal MonomialIdeal::bracket_power(std::uint64_t q) const {
  std::vector<Monomial> gens;
  for (const auto& g : generators_) {
    std::vector<std::uint32_t> e(g.exponents());
    for (auto& x : e) {
      const std::uint64_t v = std::uint64_t{x} * q;
      if (v > 0xffffffffull) throw OverflowError("monomial exponent exceeds 2^32");
      x = static_cast<std::uint32_t>(v);
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::frobenius_root(std::uint64_t q) const {
  std::vector<Monomial> gens;
  for (const auto& g : generators_) {
    std::vector<std::uint32_t> e(g.exponents());
    for (auto& x : e) x = static_cast<std::uint32_t>(x / q);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n_, std::move(gens));
}

Ideal MonomialIdeal::to_ideal(std::uint32_t p) const {
  const Ambient ambient{n_, p};
  std::vector<GFPoly> gens;
  for (const auto& g : generators_) gens.push_back(GFPoly::monomial(ambient, g));
  return Ideal(ambient, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::vector<std::string> items;
  for (const auto& g : generators_) {
    const std::string s = format_monomial(g, n_);
    items.push_back(s.empty() ? "1" : s);
  }
  return quote_list(items);
}

}  // namespace fptlct
