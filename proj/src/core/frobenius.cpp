#include "core/frobenius.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace fptlct {

namespace {

void require_characteristic(const Ambient& ambient, const PrimePower& q) {
  if (ambient.p != q.p()) {
    throw DomainError("ideal lives in characteristic " + std::to_string(ambient.p) +
                      " but the Frobenius power is for p = " + std::to_string(q.p()));
  }
}

void require_vanishing_at_origin(const Ideal& a) {
  for (const auto& g : a.generators()) {
    if (g.constant_term() != 0) {
      throw DomainError("generator '" + g.to_string() + "' does not vanish at the origin");
    }
  }
}

}  // namespace

Ideal bracket_power(const Ideal& ideal, const PrimePower& q) {
  require_characteristic(ideal.ambient(), q);
  std::vector<GFPoly> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(frobenius_power(g, q));
  return Ideal(ideal.ambient(), std::move(gens));
}

std::vector<GFPoly> root_components(const GFPoly& g, std::uint64_t q) {
  const std::uint32_t n = g.ambient().n;
  // A term c x^(q beta + gamma) contributes c x^beta to component gamma;
  // c needs no q-th root because c^p = c in F_p.
  std::map<Monomial, std::vector<Term>, DegRevLexGreater> buckets;
  for (const auto& t : g.terms()) {
    std::vector<std::uint32_t> beta(n);
    std::vector<std::uint32_t> gamma(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      beta[i] = static_cast<std::uint32_t>(t.monomial[i] / q);
      gamma[i] = static_cast<std::uint32_t>(t.monomial[i] % q);
    }
    buckets[Monomial(std::move(gamma))].push_back({Monomial(std::move(beta)), t.coeff});
  }
  std::vector<GFPoly> out;
  out.reserve(buckets.size());
  for (auto& [gamma, terms] : buckets) {
    // Distinct source monomials with equal gamma have distinct beta, and the
    // map beta -> q beta + gamma preserves degrevlex order.
    out.push_back(GFPoly::from_canonical(g.ambient(), std::move(terms)));
  }
  return out;
}

Ideal frobenius_root(const Ideal& b, const PrimePower& q) {
  require_characteristic(b.ambient(), q);
  std::vector<GFPoly> comps;
  for (const auto& g : b.generators()) {
    auto parts = root_components(g, q.q());
    comps.insert(comps.end(), std::make_move_iterator(parts.begin()),
                 std::make_move_iterator(parts.end()));
  }
  return Ideal(b.ambient(), linear_basis(comps));
}

namespace {

// (f^N)^[1/p^e] = f^outer * (inner), with inner stored as a linear basis.
struct PowerRoot {
  std::uint64_t outer;
  std::vector<GFPoly> inner;
};

class PrincipalRootEngine {
 public:
  explicit PrincipalRootEngine(GFPoly f) : f_(std::move(f)), p_(f_.ambient().p) {}

  PowerRoot root(std::uint64_t exponent, std::uint32_t e) {
    std::vector<GFPoly> inner{GFPoly::constant(f_.ambient(), 1)};
    for (std::uint32_t k = 0; k < e; ++k) {
      const std::uint64_t digit = exponent % p_;
      exponent /= p_;
      const GFPoly& factor = small_power(digit);
      std::vector<GFPoly> comps;
      for (const auto& g : inner) {
        for (auto& c : root_components(poly_mul(factor, g), p_)) comps.push_back(std::move(c));
      }
      inner = linear_basis(comps);
      if (inner.empty()) break;
    }
    return {exponent, std::move(inner)};
  }

  // f^r is not in (x_1^(p^e), ..., x_n^(p^e)).
  bool survives(std::uint64_t r, std::uint32_t e) {
    // The adjunction turns this into: the root is not inside the maximal ideal.
    const PowerRoot pr = root(r, e);
    if (pr.outer != 0) return false;
    return std::any_of(pr.inner.begin(), pr.inner.end(),
                       [](const GFPoly& g) { return g.constant_term() != 0; });
  }

  const GFPoly& f() const { return f_; }

 private:
  const GFPoly& small_power(std::uint64_t d) {
    auto it = powers_.find(d);
    if (it != powers_.end()) return it->second;
    return powers_.emplace(d, poly_pow(f_, d)).first->second;
  }

  GFPoly f_;
  std::uint64_t p_;
  std::unordered_map<std::uint64_t, GFPoly> powers_;
};

}  // namespace

Ideal frobenius_root_principal_power(const GFPoly& f, std::uint64_t exponent, const PrimePower& q) {
  require_characteristic(f.ambient(), q);
  PrincipalRootEngine engine(f);
  PowerRoot pr = engine.root(exponent, q.e());
  if (pr.inner.empty()) return Ideal(f.ambient());
  const GFPoly outer = poly_pow(f, pr.outer);
  std::vector<GFPoly> gens;
  gens.reserve(pr.inner.size());
  for (const auto& g : pr.inner) gens.push_back(poly_mul(outer, g));
  return Ideal(f.ambient(), std::move(gens));
}

namespace {

// ord(w) = max { j : x^w in M^j } for a monomial ideal M inside the maximal ideal.
class MonomialOrder {
 public:
  MonomialOrder(const MonomialIdeal& m, std::uint64_t box, const FrobeniusOptions& options)
      : n_(m.n()), box_(box), packing_(options.packing) {
    for (const auto& g : m.generators()) {
      columns_.emplace_back(g.exponents().begin(), g.exponents().end());
    }
    if (columns_.empty()) return;
    std::uint64_t cells = 1;
    bool fits = true;
    for (std::uint32_t i = 0; i < n_ && fits; ++i) {
      if (cells > options.max_order_table / box_) {
        fits = false;
      } else {
        cells *= box_;
      }
    }
    if (fits) build_table(cells);
  }

  std::uint64_t operator()(const std::vector<std::uint64_t>& w) {
    if (columns_.empty()) return 0;
    if (!table_.empty()) {
      std::uint64_t index = 0;
      for (std::uint32_t i = n_; i-- > 0;) index = index * box_ + w[i];
      return table_[index];
    }
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    const std::uint64_t v = lp::max_packing(columns_, w, packing_);
    memo_.emplace(w, v);
    return v;
  }

 private:
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
      std::size_t h = 0x9e3779b97f4a7c15ull;
      for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
      return h;
    }
  };

  void build_table(std::uint64_t cells) {
    table_.assign(cells, 0);
    std::vector<std::uint64_t> offsets;
    for (const auto& col : columns_) {
      std::uint64_t off = 0;
      for (std::uint32_t i = n_; i-- > 0;) off = off * box_ + col[i];
      offsets.push_back(off);
    }
    std::vector<std::uint64_t> w(n_, 0);
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      std::uint32_t best = 0;
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        bool fits = true;
        for (std::uint32_t i = 0; i < n_; ++i) {
          if (columns_[j][i] > w[i]) {
            fits = false;
            break;
          }
        }
        // w - column has a smaller index, so it is already filled.
        if (fits) best = std::max(best, table_[idx - offsets[j]] + 1);
      }
      table_[idx] = best;
      for (std::uint32_t i = 0; i < n_; ++i) {
        if (++w[i] < box_) break;
        w[i] = 0;
      }
    }
  }

  std::uint32_t n_;
  std::uint64_t box_;
  lp::PackingOptions packing_;
  std::vector<std::vector<std::uint64_t>> columns_;
  std::vector<std::uint32_t> table_;
  std::unordered_map<std::vector<std::uint64_t>, std::uint64_t, VecHash> memo_;
};

struct SplitIdeal {
  MonomialIdeal monomial;
  std::vector<GFPoly> other;  // monic, deduplicated
};

SplitIdeal split_generators(const Ideal& a) {
  std::vector<Monomial> monos;
  std::set<GFPoly> others;
  for (const auto& g : a.generators()) {
    if (g.is_monomial()) {
      monos.push_back(g.leading().monomial);
    } else {
      others.insert(g.monic());
    }
  }
  return {MonomialIdeal(a.ambient().n, std::move(monos)), {others.begin(), others.end()}};
}

std::uint64_t principal_nu(PrincipalRootEngine& engine, std::uint64_t previous, std::uint32_t e) {
  // nu(e) lies in [p nu(e-1), p nu(e-1) + p - 1]: Frobenius is flat, and
  // f^(nu+1) in m^[q] forces f^(p(nu+1)) in m^[pq]. Survival is monotone in r,
  // so binary search the window.
  const std::uint64_t p = engine.f().ambient().p;
  std::uint64_t lo = p * previous;
  std::uint64_t hi = p * previous + p - 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (engine.survives(mid, e)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::uint64_t packing_nu(const MonomialIdeal& m, const PrimePower& q, const FrobeniusOptions& options) {
  std::vector<std::vector<std::uint64_t>> columns;
  for (const auto& g : m.generators()) columns.emplace_back(g.exponents().begin(), g.exponents().end());
  const std::vector<std::uint64_t> bound(m.n(), q.q() - 1);
  return lp::max_packing(columns, bound, options.packing);
}

// Level-by-level products of the non-monomial generators, each level scored
// against the best monomial completion of its surviving terms.
std::uint64_t mixed_nu(const SplitIdeal& split, const Ambient& ambient, const PrimePower& q,
                       const FrobeniusOptions& options) {
  MonomialOrder order(split.monomial, q.q(), options);
  const std::uint64_t top = q.q() - 1;
  std::set<GFPoly> level{GFPoly::constant(ambient, 1)};
  std::uint64_t best = 0;
  std::vector<std::uint64_t> w(ambient.n);
  for (std::uint64_t i = 0;; ++i) {
    for (const auto& prod : level) {
      for (const auto& t : prod.terms()) {
        for (std::uint32_t k = 0; k < ambient.n; ++k) w[k] = top - t.monomial[k];
        best = std::max(best, i + order(w));
      }
    }
    std::set<GFPoly> next;
    for (const auto& prod : level) {
      for (const auto& g : split.other) {
        GFPoly h = poly_mul_truncated(prod, g, q.q());
        if (!h.is_zero()) next.insert(h.monic());
      }
    }
    if (next.empty()) break;
    if (next.size() > options.max_level_products) {
      throw CapacityError("nu: more than " + std::to_string(options.max_level_products) +
                          " distinct truncated products at level " + std::to_string(i + 1));
    }
    level = std::move(next);
  }
  return best;
}

void check_nu_bound(const Ideal& a, const PrimePower& q, std::uint64_t value) {
  const std::uint64_t cap = std::uint64_t{a.ambient().n} * (q.q() - 1);
  if (value > cap) {
    throw InvariantViolation("nu = " + std::to_string(value) + " exceeds n(q-1) = " + std::to_string(cap));
  }
}

}  // namespace

std::vector<std::uint64_t> nu_sequence(const Ideal& a, std::uint32_t e_max, const FrobeniusOptions& options,
                                       const NuLevelCallback& on_level) {
  if (e_max == 0) return {};
  const PrimePower top(a.ambient().p, e_max);  // validates p and p^e_max < 2^63
  require_vanishing_at_origin(a);
  std::vector<std::uint64_t> out;
  out.reserve(e_max);
  if (a.is_zero()) {
    for (std::uint32_t e = 1; e <= e_max; ++e) {
      out.push_back(0);
      if (on_level) on_level(e, 0);
    }
    return out;
  }

  SplitIdeal split = split_generators(a);
  if (split.monomial.is_zero() && split.other.size() == 1) {
    PrincipalRootEngine engine(split.other.front());
    std::uint64_t previous = 0;
    for (std::uint32_t e = 1; e <= e_max; ++e) {
      previous = principal_nu(engine, previous, e);
      check_nu_bound(a, PrimePower(a.ambient().p, e), previous);
      out.push_back(previous);
      if (on_level) on_level(e, previous);
    }
    return out;
  }
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    const PrimePower q(a.ambient().p, e);
    const std::uint64_t v = split.other.empty() ? packing_nu(split.monomial, q, options)
                                                : mixed_nu(split, a.ambient(), q, options);
    check_nu_bound(a, q, v);
    if (!out.empty() && v < a.ambient().p * out.back()) {
      throw InvariantViolation("nu(" + std::to_string(e) + ") < p nu(" + std::to_string(e - 1) + ")");
    }
    out.push_back(v);
    if (on_level) on_level(e, v);
  }
  return out;
}

NuValue nu(const Ideal& a, std::uint32_t e, const FrobeniusOptions& options) {
  const PrimePower q(a.ambient().p, e);
  require_vanishing_at_origin(a);
  if (a.is_zero()) return {q, 0, 1};
  SplitIdeal split = split_generators(a);
  std::uint64_t value;
  if (split.monomial.is_zero() && split.other.size() == 1) {
    value = nu_sequence(a, e, options).back();
  } else if (split.other.empty()) {
    value = packing_nu(split.monomial, q, options);
  } else {
    value = mixed_nu(split, a.ambient(), q, options);
  }
  check_nu_bound(a, q, value);
  return {q, value, generator_count(a)};
}

std::uint64_t generator_count(const Ideal& a) {
  if (a.is_zero()) return 1;
  const SplitIdeal split = split_generators(a);
  const std::uint64_t split_count = split.monomial.generators().size() + split.other.size();
  std::uint64_t best = std::min<std::uint64_t>(split_count, linear_basis(a.generators()).size());
  if (!split.other.empty() && best > 1) {
    try {
      best = std::min<std::uint64_t>(best, a.groebner_basis().size());
    } catch (const CapacityError&) {
      // keep the cheaper count; it is still a valid generating set
    }
  }
  return std::max<std::uint64_t>(1, best);
}

FptEnclosure enclosure_from_nu(const NuValue& value) {
  if (value.generators == 0) throw DomainError("generator count must be positive");
  const Int q = static_cast<Int>(value.q.q());
  const Int v = static_cast<Int>(value.nu);
  return {Rational(v, q), Rational(v, q) + Rational(static_cast<Int>(value.generators), q), value.q};
}

FptEnclosure fpt_enclosure(const Ideal& a, std::uint32_t e, const FrobeniusOptions& options) {
  return enclosure_from_nu(nu(a, e, options));
}

namespace {

std::vector<GFPoly> power_generators(const Ideal& a, std::uint64_t exponent, const FrobeniusOptions& options) {
  const Ambient ambient = a.ambient();
  auto multiply = [&](const std::vector<GFPoly>& x, const std::vector<GFPoly>& y) {
    if (x.size() * y.size() > options.max_power_generators * options.max_power_generators) {
      throw CapacityError("ideal power expansion exceeds the generator cap");
    }
    std::vector<GFPoly> prods;
    prods.reserve(x.size() * y.size());
    for (const auto& f : x) {
      for (const auto& g : y) prods.push_back(poly_mul(f, g));
    }
    auto basis = linear_basis(prods);
    if (basis.size() > options.max_power_generators) {
      throw CapacityError("ideal power has more than " + std::to_string(options.max_power_generators) +
                          " independent generators");
    }
    return basis;
  };
  std::vector<GFPoly> result{GFPoly::constant(ambient, 1)};
  std::vector<GFPoly> base = linear_basis(a.generators());
  while (exponent != 0) {
    if (exponent & 1) result = multiply(result, base);
    exponent >>= 1;
    if (exponent != 0) base = multiply(base, base);
  }
  return result;
}

}  // namespace

Ideal test_ideal_step(const Ideal& a, const Rational& lambda, const PrimePower& q,
                      const FrobeniusOptions& options) {
  require_characteristic(a.ambient(), q);
  if (lambda < Rational(0)) throw DomainError("test ideal exponent must be nonnegative");
  const Int n_int = (lambda * Rational(static_cast<Int>(q.q()))).ceil();
  if (n_int == 0) return Ideal::unit(a.ambient());
  if (a.is_zero()) return Ideal(a.ambient());
  if (n_int > static_cast<Int>(UINT64_MAX)) throw OverflowError("power exponent exceeds 2^64");
  const auto exponent = static_cast<std::uint64_t>(n_int);

  if (a.generators().size() == 1) {
    return frobenius_root_principal_power(a.generators().front(), exponent, q);
  }
  if (a.all_monomial()) {
    // Monomial powers stay monomial and are minimized, so no generator cap.
    return MonomialIdeal::from_ideal(a).power(exponent).frobenius_root(q.q()).to_ideal(a.ambient().p);
  }
  return frobenius_root(Ideal(a.ambient(), power_generators(a, exponent, options)), q);
}

TestIdealResult test_ideal(const Ideal& a, const Rational& lambda, std::uint32_t e_max,
                           const FrobeniusOptions& options) {
  if (e_max == 0) throw DomainError("e_max must be positive");
  const PrimePower top(a.ambient().p, e_max);  // p^e_max < 2^63
  Ideal previous = test_ideal_step(a, lambda, PrimePower(a.ambient().p, 1), options);
  for (std::uint32_t e = 2; e <= e_max; ++e) {
    Ideal current = test_ideal_step(a, lambda, PrimePower(a.ambient().p, e), options);
    if (!ideal_contains(current, previous)) {
      throw InvariantViolation("test ideal chain is not ascending at e = " + std::to_string(e));
    }
    if (ideal_equal(previous, current)) return {current, lambda, e, true};
    previous = std::move(current);
  }
  return {previous, lambda, e_max, false};
}

bool is_unit_at_origin(const Ideal& ideal) {
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const GFPoly& g) { return g.constant_term() != 0; });
}

bool test_ideal_unit_within(const Ideal& a, const Rational& lambda, std::uint32_t e_max,
                            const FrobeniusOptions& options) {
  if (lambda < Rational(0)) throw DomainError("test ideal exponent must be nonnegative");
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    if (is_unit_at_origin(test_ideal_step(a, lambda, PrimePower(a.ambient().p, e), options))) return true;
  }
  return false;
}

std::optional<Rational> confirm_fpt_point(const Ideal& a, std::uint32_t e, std::uint32_t e_max,
                                          std::uint64_t max_denominator, const FrobeniusOptions& options) {
  if (max_denominator == 0) throw DomainError("grid denominator bound must be positive");
  e_max = std::max(e, e_max);
  const auto nus = nu_sequence(a, e_max, options);
  const std::uint64_t mu = generator_count(a);
  Rational low(0);
  Rational high(static_cast<Int>(a.ambient().n) + 1);
  for (std::uint32_t k = e; k <= e_max; ++k) {
    const FptEnclosure enc = enclosure_from_nu({PrimePower(a.ambient().p, k), nus[k - 1], mu});
    low = max(low, enc.low);
    high = min(high, enc.high);
  }
  if (high < low) throw InvariantViolation("fpt enclosures for different e are disjoint");

  std::set<Rational> grid;
  std::optional<Rational> below;
  for (std::uint64_t d = 1; d <= max_denominator; ++d) {
    const Int den = static_cast<Int>(d);
    const Int first = (low * Rational(den)).ceil();
    const Int last = (high * Rational(den)).floor();
    for (Int k = first; k <= last; ++k) grid.insert(Rational(k, den));
    if (first > 0) {
      const Rational candidate(first - 1, den);
      if (!below || *below < candidate) below = candidate;
    }
  }
  if (grid.empty()) return std::nullopt;
  // fpt > 0 always, so a window starting at 0 needs no lower witness.
  if (below && !test_ideal_unit_within(a, *below, e_max, options)) return std::nullopt;
  for (const auto& candidate : grid) {
    if (!test_ideal_unit_within(a, candidate, e_max, options)) return candidate;
  }
  return std::nullopt;
}

}  // namespace fptlct
