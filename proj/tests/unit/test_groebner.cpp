#include <doctest.h>

#include <algorithm>
#include <random>

#include "core/sampling.hpp"
#include "helpers.hpp"

using namespace fptlct;
using testing::ideal;
using testing::poly;

TEST_CASE("normal_form examples") {
  CHECK(normal_form(poly("x^2*y", 2, 5), {poly("x^2", 2, 5)}).is_zero());
  CHECK(normal_form(poly("x + y", 2, 5), {poly("x", 2, 5)}) == poly("y", 2, 5));
  const auto f = poly("x*y + y^2", 2, 5);
  const auto g = poly("x*y - 1", 2, 5);
  const auto r = normal_form(f, {g});
  CHECK(r == poly("y^2 + 1", 2, 5));
  // f = 1*g + r
  CHECK(poly_add(g, r) == f);
}

TEST_CASE("buchberger examples") {
  CHECK(ideal("x, y", 2, 5).groebner_basis() == std::vector<GFPoly>{poly("y", 2, 5), poly("x", 2, 5)});
  const auto gb = ideal("x^2 + y, x*y", 2, 5).groebner_basis();
  CHECK(std::find(gb.begin(), gb.end(), poly("y^2", 2, 5)) != gb.end());
  CHECK(Ideal(Ambient{2, 5}).groebner_basis().empty());
  CHECK_THROWS_AS(ideal("x^3 + y^2 + x*y, y^3 + x^2*y + x", 2, 7).groebner_basis(GroebnerOptions{1}),
                  CapacityError);
}

TEST_CASE("membership and equality examples") {
  CHECK(ideal_member(poly("y^2", 2, 5), ideal("x^2 + y, x*y", 2, 5)));
  CHECK_FALSE(ideal_member(poly("x", 1, 5), ideal("x^2", 1, 5)));
  CHECK(ideal_member(GFPoly(Ambient{2, 5}), ideal("x^2", 2, 5)));
  CHECK(ideal_equal(ideal("x, y", 2, 5), ideal("y, x + y", 2, 5)));
  CHECK_FALSE(ideal_equal(ideal("x^2", 1, 5), ideal("x", 1, 5)));
  CHECK(ideal_equal(ideal("x + y, y", 2, 5), ideal("x, y", 2, 5)));
}

TEST_CASE("is_unit_ideal examples") {
  CHECK(is_unit_ideal(ideal("x, x + 1", 1, 7)));
  CHECK_FALSE(is_unit_ideal(ideal("x, y", 2, 7)));
  CHECK(is_unit_ideal(ideal("3", 1, 7)));
  CHECK_FALSE(is_unit_ideal(Ideal(Ambient{1, 7})));
}

namespace {

Ideal random_ideal(std::mt19937_64& rng, Ambient amb, std::uint32_t max_gens, std::uint32_t deg) {
  std::vector<GFPoly> gens;
  const auto k = std::uniform_int_distribution<std::uint32_t>(1, max_gens)(rng);
  for (std::uint32_t i = 0; i < k; ++i) gens.push_back(random_poly(rng, amb, deg, 3, true));
  return Ideal(amb, gens);
}

}  // namespace

TEST_CASE("reduced basis is invariant under permutation and scaling") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Ambient amb{static_cast<std::uint32_t>(1 + i % 3), i % 2 ? 5u : 7u};
    const auto a = random_ideal(rng, amb, 3, 3);
    auto gens = a.generators();
    std::reverse(gens.begin(), gens.end());
    for (auto& g : gens) g = g.scaled(2);
    CHECK(Ideal(amb, gens).groebner_basis() == a.groebner_basis());
  }
}

TEST_CASE("ideal absorption and S-pairs reduce to zero") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const Ambient amb{static_cast<std::uint32_t>(1 + i % 3), i % 2 ? 3u : 7u};
    const auto a = random_ideal(rng, amb, 3, 3);
    const auto& gb = a.groebner_basis();
    for (const auto& g : a.generators()) {
      const auto h = random_poly(rng, amb, 2, 3);
      CHECK(normal_form(poly_mul(g, h), gb).is_zero());
    }
    for (std::size_t s = 0; s < gb.size(); ++s) {
      CHECK(gb[s].leading().coeff == 1);
      for (std::size_t t = 0; t < gb.size(); ++t) {
        if (s == t) continue;
        // reduced: no term of gb[s] is divisible by the head of gb[t]
        for (const auto& term : gb[s].terms()) CHECK_FALSE(gb[t].leading().monomial.divides(term.monomial));
        const Monomial l = lcm(gb[s].leading().monomial, gb[t].leading().monomial);
        const auto sp = poly_sub(gb[s].shifted(l / gb[s].leading().monomial, 1),
                                 gb[t].shifted(l / gb[t].leading().monomial, 1));
        CHECK(normal_form(sp, gb).is_zero());
      }
    }
  }
}

TEST_CASE("monomial fast path agrees with Buchberger") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::uint32_t> ex(0, 4);
  for (int i = 0; i < 80; ++i) {
    const std::uint32_t n = 1 + i % 3;
    auto rand_mono = [&] {
      std::vector<std::uint32_t> e(n);
      for (auto& x : e) x = ex(rng);
      return Monomial(e);
    };
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(rand_mono());
    const MonomialIdeal m(n, gens);
    const Ideal as_ideal = m.to_ideal(5);
    for (int k = 0; k < 5; ++k) {
      const Monomial probe = rand_mono();
      CHECK(m.contains(probe) == ideal_member(GFPoly::monomial(Ambient{n, 5}, probe), as_ideal));
      // Force the general path by adding a zero-sum binomial
      const GFPoly via_gb = GFPoly::monomial(Ambient{n, 5}, probe);
      CHECK(m.contains(probe) == normal_form(via_gb, as_ideal.groebner_basis()).is_zero());
    }
  }
}

TEST_CASE("monomial ideal operations") {
  const MonomialIdeal xy(2, {Monomial({1, 0}), Monomial({0, 1})});
  CHECK(xy.power(2) == MonomialIdeal::maximal_power(2, 2));
  CHECK(xy.bracket_power(3) == MonomialIdeal(2, {Monomial({3, 0}), Monomial({0, 3})}));
  const MonomialIdeal a(2, {Monomial({5, 3})});
  CHECK(a.frobenius_root(5) == MonomialIdeal(2, {Monomial({1, 0})}));
  CHECK(MonomialIdeal(2, {Monomial({1, 0}), Monomial({2, 1})}).generators().size() == 1);
  CHECK(xy.contains(MonomialIdeal::maximal_power(2, 3)));
  CHECK_FALSE(MonomialIdeal::maximal_power(2, 3).contains(xy));
}

TEST_CASE("ideal containment and sums") {
  CHECK(ideal_contains(ideal("x, y", 2, 3), ideal("x^2 + y^3, x*y", 2, 3)));
  CHECK_FALSE(ideal_contains(ideal("x^2, y", 2, 3), ideal("x", 2, 3)));
  CHECK(ideal_equal(ideal_sum(ideal("x", 2, 3), ideal("y", 2, 3)), ideal("x, y", 2, 3)));
  CHECK(ideal_equal(ideal_product(ideal("x, y", 2, 3), ideal("x, y", 2, 3)), ideal("x^2, x*y, y^2", 2, 3)));
}
