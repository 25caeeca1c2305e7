#include "core/gfpoly.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace fptlct {

void require_same_ambient(const Ambient& a, const Ambient& b) {
  if (!(a == b)) {
    throw DomainError("ambient mismatch: (n=" + std::to_string(a.n) + ", p=" + std::to_string(a.p) +
                      ") vs (n=" + std::to_string(b.n) + ", p=" + std::to_string(b.p) + ")");
  }
}

namespace gf {

std::uint64_t pow(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (k != 0) {
    if (k & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    k >>= 1;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

std::uint64_t reduce(Int v, std::uint64_t p) {
  Int r = v % static_cast<Int>(p);
  if (r < 0) r += static_cast<Int>(p);
  return static_cast<std::uint64_t>(r);
}

}  // namespace gf

GFElement::GFElement(std::uint64_t residue, std::uint32_t p) : residue_(residue % p), p_(p) {
  if (!exact::is_prime(p)) throw DomainError("field modulus must be prime");
}

GFElement GFElement::operator+(const GFElement& o) const {
  if (o.p_ != p_) throw DomainError("field mismatch");
  return {gf::add(residue_, o.residue_, p_), p_};
}

GFElement GFElement::operator-(const GFElement& o) const {
  if (o.p_ != p_) throw DomainError("field mismatch");
  return {gf::sub(residue_, o.residue_, p_), p_};
}

GFElement GFElement::operator*(const GFElement& o) const {
  if (o.p_ != p_) throw DomainError("field mismatch");
  return {gf::mul(residue_, o.residue_, p_), p_};
}

GFElement GFElement::inverse() const { return {gf::inv(residue_, p_), p_}; }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

bool Monomial::all_below(std::uint64_t bound) const {
  for (auto e : exps_) {
    if (e >= bound) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    std::uint32_t s;
    if (__builtin_add_overflow(a.exps_[i], b.exps_[i], &s)) {
      throw OverflowError("monomial exponent exceeds 2^32");
    }
    r.exps_[i] = s;
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw DomainError("monomial quotient is not a monomial");
    r.exps_[i] = a.exps_[i] - b.exps_[i];
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// GFPoly

namespace {

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return degrevlex_compare(a.monomial, b.monomial) > 0;
  });
}

using Accumulator = std::unordered_map<Monomial, std::uint64_t, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  sort_terms(out);
  return out;
}

}  // namespace

GFPoly::GFPoly(Ambient ambient, std::vector<Term> terms) : ambient_(ambient) {
  const std::uint64_t p = ambient.p;
  Accumulator acc;
  for (auto& t : terms) {
    if (t.monomial.size() != ambient.n) throw DomainError("monomial arity does not match ambient");
    auto& slot = acc[t.monomial];
    slot = gf::add(slot, t.coeff % p, p);
  }
  terms_ = drain(acc);
}

GFPoly GFPoly::from_canonical(Ambient ambient, std::vector<Term> terms) {
  GFPoly r(ambient);
  r.terms_ = std::move(terms);
  return r;
}

GFPoly GFPoly::constant(Ambient ambient, std::uint64_t c) {
  return monomial(ambient, Monomial(ambient.n), c);
}

GFPoly GFPoly::monomial(Ambient ambient, Monomial m, std::uint64_t c) {
  GFPoly r(ambient);
  c %= ambient.p;
  if (c != 0) r.terms_.push_back({std::move(m), c});
  return r;
}

GFPoly GFPoly::variable(Ambient ambient, std::size_t index) {
  std::vector<std::uint32_t> e(ambient.n, 0);
  e.at(index) = 1;
  return monomial(ambient, Monomial(std::move(e)));
}

std::uint64_t GFPoly::constant_term() const {
  if (terms_.empty() || !terms_.back().monomial.is_one()) return 0;
  return terms_.back().coeff;
}

GFPoly GFPoly::operator-() const {
  GFPoly r = *this;
  for (auto& t : r.terms_) t.coeff = ambient_.p - t.coeff;
  return r;
}

GFPoly GFPoly::scaled(std::uint64_t c) const {
  c %= ambient_.p;
  GFPoly r(ambient_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = gf::mul(t.coeff, c, ambient_.p);
  return r;
}

GFPoly GFPoly::shifted(const Monomial& m, std::uint64_t c) const {
  c %= ambient_.p;
  GFPoly r(ambient_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves degrevlex order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, gf::mul(t.coeff, c, ambient_.p)});
  return r;
}

GFPoly GFPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(gf::inv(leading().coeff, ambient_.p));
}

std::uint64_t GFPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool operator<(const GFPoly& a, const GFPoly& b) {
  const std::size_t k = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < k; ++i) {
    const int c = degrevlex_compare(a.terms_[i].monomial, b.terms_[i].monomial);
    if (c != 0) return c < 0;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string variable_name(std::size_t index, std::uint32_t n) {
  if (n <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

std::string format_monomial(const Monomial& m, std::uint32_t n) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(i, n);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string GFPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    const std::string mono = format_monomial(t.monomial, ambient_.n);
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += mono;
    } else {
      out += std::to_string(t.coeff) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic

GFPoly poly_add(const GFPoly& f, const GFPoly& g) {
  require_same_ambient(f.ambient(), g.ambient());
  const std::uint64_t p = f.ambient().p;
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  auto a = f.terms().begin();
  auto b = g.terms().begin();
  while (a != f.terms().end() || b != g.terms().end()) {
    int c;
    if (a == f.terms().end()) {
      c = -1;
    } else if (b == g.terms().end()) {
      c = 1;
    } else {
      c = degrevlex_compare(a->monomial, b->monomial);
    }
    if (c > 0) {
      out.push_back(*a++);
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      const std::uint64_t s = gf::add(a->coeff, b->coeff, p);
      if (s != 0) out.push_back({a->monomial, s});
      ++a;
      ++b;
    }
  }
  // Merge of two sorted canonical lists is already canonical.
  return GFPoly::from_canonical(f.ambient(), std::move(out));
}

GFPoly poly_sub(const GFPoly& f, const GFPoly& g) { return poly_add(f, -g); }

namespace {

GFPoly multiply(const GFPoly& f, const GFPoly& g, std::uint64_t bound) {
  require_same_ambient(f.ambient(), g.ambient());
  const std::uint64_t p = f.ambient().p;
  Accumulator acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      Monomial m = a.monomial * b.monomial;
      if (bound != 0 && !m.all_below(bound)) continue;
      auto& slot = acc[m];
      slot = (slot + a.coeff * b.coeff) % p;
    }
  }
  return GFPoly::from_canonical(f.ambient(), drain(acc));
}

}  // namespace

GFPoly poly_mul(const GFPoly& f, const GFPoly& g) { return multiply(f, g, 0); }

GFPoly poly_mul_truncated(const GFPoly& f, const GFPoly& g, std::uint64_t bound) {
  if (bound == 0) throw DomainError("truncation bound must be positive");
  return multiply(f, g, bound);
}

GFPoly poly_pow(const GFPoly& f, std::uint64_t r) {
  GFPoly result = GFPoly::constant(f.ambient(), 1);
  GFPoly base = f;
  while (r != 0) {
    if (r & 1) result = poly_mul(result, base);
    r >>= 1;
    if (r != 0) base = poly_mul(base, base);
  }
  return result;
}

GFPoly truncate(const GFPoly& f, std::uint64_t bound) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    if (t.monomial.all_below(bound)) kept.push_back(t);
  }
  return GFPoly::from_canonical(f.ambient(), std::move(kept));
}

GFPoly poly_pow_truncated(const GFPoly& f, std::uint64_t r, const PrimePower& q) {
  if (f.ambient().p != q.p()) throw DomainError("characteristic does not match prime power");
  const std::uint64_t bound = q.q();
  GFPoly result = truncate(GFPoly::constant(f.ambient(), 1), bound);
  GFPoly base = truncate(f, bound);
  while (r != 0 && !result.is_zero()) {
    if (r & 1) result = multiply(result, base, bound);
    r >>= 1;
    if (r != 0) base = multiply(base, base, bound);
  }
  return result;
}

GFPoly frobenius_power(const GFPoly& f, const PrimePower& q) {
  if (f.ambient().p != q.p()) throw DomainError("characteristic does not match prime power");
  if (q.q() > std::numeric_limits<std::uint32_t>::max()) {
    if (!f.is_constant()) throw OverflowError("monomial exponent exceeds 2^32");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<std::uint32_t> e(t.monomial.exponents());
    for (auto& x : e) {
      const std::uint64_t v = std::uint64_t{x} * q.q();
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw OverflowError("monomial exponent exceeds 2^32");
      }
      x = static_cast<std::uint32_t>(v);
    }
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return GFPoly(f.ambient(), std::move(terms));
}

}  // namespace fptlct
