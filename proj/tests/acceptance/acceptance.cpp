// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// blocking criterion fails. Tolerances are exact unless stated in the line.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/experiment.hpp"
#include "core/frobenius.hpp"
#include "core/newton.hpp"
#include "core/parse.hpp"
#include "core/sampling.hpp"
#include "oracles.hpp"

using namespace fptlct;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string note;  // non-blocking findings
};

int failures = 0;

void run(const char* id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= budget_s;
  const bool ok = out.pass && in_time;
  if (!ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, budget_s);
  std::cout << (ok ? "PASS " : "FAIL ") << id << " " << title << " [" << timing << "] " << out.detail;
  if (!in_time) std::cout << " (over time budget)";
  if (!out.note.empty()) std::cout << " | note: " << out.note;
  std::cout << std::endl;
}

Ideal principal(const GFPoly& f) { return Ideal(f.ambient(), {f}); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  std::cout << "fptlct acceptance (exact arithmetic; zero tolerance unless noted)\n";

  run("C1", "Frobenius-root adjunction, 300 random pairs", 60, [] {
    std::mt19937_64 rng(1);
    int bad = 0;
    int inside = 0;
    for (int i = 0; i < 300; ++i) {
      const auto s = random_adjunction_sample(rng);
      if (!adjunction_holds(s.b, s.c, s.q)) ++bad;
      if (ideal_contains(bracket_power(s.c, s.q), s.b)) ++inside;
    }
    return Outcome{bad == 0, std::to_string(bad) + " failures, " + std::to_string(inside) + " pairs with b in c^[q]"};
  });

  run("C2", "maximal ideal: nu = n(q-1) and enclosure contains n", 10, [] {
    int checked = 0;
    int bad = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
      for (std::uint32_t n = 1; n <= 3; ++n) {
        const Ideal m = Ideal::maximal(Ambient{n, p});
        const auto nus = nu_sequence(m, max_exponent_below(p, 10000));
        for (std::uint32_t e = 1; e <= nus.size(); ++e) {
          const PrimePower q(p, e);
          const auto enc = enclosure_from_nu({q, nus[e - 1], generator_count(m)});
          ++checked;
          if (nus[e - 1] != n * (q.q() - 1) || !enc.contains(Rational(n))) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " (p, e, n) cases, " + std::to_string(bad) + " mismatches"};
  });

  run("C3", "cusp x^2+y^3 sweep 5 <= p <= 47, q_max 1e5, target 5/6", 300, [] {
    const auto a = parse_integer_ideal("x^2 + y^3", 2);
    SweepOptions opts;
    opts.q_max = 100000;
    opts.jobs = 4;
    const auto res = sweep(a, primes_in_range(5, 47), opts);
    const Rational target(5, 6);
    const auto report = convergence_report(res.records, target, res.warnings);
    int above = 0;
    int oracle_bad = 0;
    std::vector<std::string> rate_misses;
    bool rate_blocking_ok = true;
    for (const auto& r : res.records) {
      const std::uint64_t q = PrimePower(r.p, r.e).q();
      if (r.low > target) ++above;
      if (r.p <= 7 && r.nu != oracle::binomial_nu(2, 3, r.p, q)) ++oracle_bad;
      const Rational bound = Rational(2, r.p) + Rational(1, static_cast<Int>(q));
      if (target - r.low > bound) {
        rate_misses.push_back(std::to_string(r.p) + "^" + std::to_string(r.e));
        if (r.p <= 7) rate_blocking_ok = false;
      }
    }
    Outcome out;
    out.pass = above == 0 && oracle_bad == 0 && rate_blocking_ok && res.warnings.empty() && report.monotone_ok;
    out.detail = std::to_string(res.records.size()) + " records; (a) low <= 5/6 violations: " + std::to_string(above) +
                 "; binomial oracle mismatches at p = 5, 7: " + std::to_string(oracle_bad) +
                 "; (b) 5/6 - low <= 2/p + 1/q misses: " + std::to_string(rate_misses.size()) +
                 "; max_gap " + report.max_gap->to_string() + "; trend_ok " + (*report.trend_ok ? "true" : "false");
    if (!rate_misses.empty()) {
      std::string list;
      for (const auto& m : rate_misses) list += (list.empty() ? "" : ",") + m;
      out.note = "(b) is an empirical rate target, non-blocking above p = 7; missed at " + list;
    }
    return out;
  });

  run("C4", "truncation bound for x^2+y^3, p in {7,13}, 3 <= d <= 8", 120, [] {
    const auto a = parse_integer_ideal("x^2 + y^3", 2);
    int checked = 0;
    int bad = 0;
    for (std::uint32_t p : {7u, 13u}) {
      const Ideal base = reduce_mod_p(a, p);
      const std::uint32_t e_max = max_exponent_below(p, 10000);
      const auto nu_a = nu_sequence(base, e_max);
      const std::uint64_t mu_a = generator_count(base);
      for (std::uint32_t d = 3; d <= 8; ++d) {
        const Ideal trunc = reduce_mod_p(truncate_ideal(a, d), p);
        const auto nu_t = nu_sequence(trunc, e_max);
        const std::uint64_t mu_t = generator_count(trunc);
        for (std::uint32_t e = 1; e <= e_max; ++e) {
          const PrimePower q(p, e);
          const auto E = enclosure_from_nu({q, nu_a[e - 1], mu_a});
          const auto F = enclosure_from_nu({q, nu_t[e - 1], mu_t});
          const Rational dist = max(Rational(0), max(F.low - E.high, E.low - F.high));
          ++checked;
          if (dist > Rational(2, d) + E.width() + F.width()) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " (p, d, e) cases, " + std::to_string(bad) + " violations"};
  });

  run("C5", "test ideal spot values over F_7 for (x^2, y^3)", 30, [] {
    const Ideal a(Ambient{2, 7}, parse_gfpoly_list("x^2, y^3", 2, 7));
    const auto half = test_ideal(a, Rational(1, 2), 3);
    const auto at = test_ideal(a, Rational(5, 6), 3);
    const Ideal m = Ideal::maximal(Ambient{2, 7});
    const bool ok = is_unit_ideal(half.ideal) && ideal_equal(at.ideal, m) && at.stabilized && at.e_used <= 3;
    return Outcome{ok, std::string("tau(a^1/2) unit: ") + (is_unit_ideal(half.ideal) ? "yes" : "no") +
                           "; tau(a^5/6) = (x, y): " + (ideal_equal(at.ideal, m) ? "yes" : "no") +
                           ", stabilized at e = " + std::to_string(at.e_used)};
  });

  run("C6", "tau chain: 100 random principal ideals, lambda on k/12", 180, [] {
    std::mt19937_64 rng(6);
    const std::uint32_t primes[] = {3, 5, 7};
    const std::uint32_t e_max = 3;
    int containment_bad = 0;
    int chain_bad = 0;
    long pairs = 0;
    for (int i = 0; i < 100; ++i) {
      const Ambient amb{2, primes[i % 3]};
      GFPoly f(amb);
      while (f.is_zero()) f = random_poly(rng, amb, 4, 4, true);
      const Ideal a = principal(f);
      std::vector<Ideal> tau;
      for (int k = 0; k <= 12; ++k) {
        const Rational lambda(k, 12);
        Ideal prev = test_ideal_step(a, lambda, PrimePower(amb.p, 1));
        for (std::uint32_t e = 2; e <= e_max; ++e) {
          Ideal cur = test_ideal_step(a, lambda, PrimePower(amb.p, e));
          if (!ideal_contains(cur, prev)) ++chain_bad;
          prev = std::move(cur);
        }
        tau.push_back(test_ideal(a, lambda, e_max).ideal);
      }
      for (std::size_t s = 0; s < tau.size(); ++s) {
        for (std::size_t t = s + 1; t < tau.size(); ++t) {
          ++pairs;
          if (!ideal_contains(tau[s], tau[t])) ++containment_bad;
        }
      }
    }
    return Outcome{containment_bad == 0 && chain_bad == 0,
                   std::to_string(pairs) + " (lambda < mu) pairs, " + std::to_string(containment_bad) +
                       " containment failures, " + std::to_string(chain_bad) + " chain steps not ascending (e <= 3)"};
  });

  run("C7", "LP exactness for lct of monomial ideals", 60, [] {
    auto mono = [](std::uint32_t n, std::vector<std::vector<std::uint32_t>> gens) {
      std::vector<Monomial> ms;
      for (auto& g : gens) ms.emplace_back(std::move(g));
      return MonomialIdeal(n, std::move(ms));
    };
    int bad = 0;
    if (lct_monomial(mono(2, {{1, 0}, {0, 1}})) != Rational(2)) ++bad;
    if (lct_monomial(mono(2, {{2, 0}, {0, 3}})) != Rational(5, 6)) ++bad;
    for (std::uint32_t a = 1; a <= 4; ++a) {
      if (lct_monomial(mono(1, {{a}})) != Rational(1, a)) ++bad;
    }
    const int example_bad = bad;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> ex(0, 6);
    for (int i = 0; i < 100; ++i) {
      const std::uint32_t n = 1 + i % 3;
      std::vector<Monomial> gens;
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int g = 0; g < k; ++g) {
        std::vector<std::uint32_t> e(n);
        do {
          for (auto& x : e) x = ex(rng);
        } while (std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; }));
        gens.emplace_back(e);
      }
      const auto poly = NewtonPolytope::of(MonomialIdeal(n, gens));
      std::vector<Rational> v;
      for (std::uint32_t j = 0; j < n; ++j) v.emplace_back(static_cast<Int>(1 + rng() % 4), static_cast<Int>(1 + rng() % 4));
      const auto res = newton_order_lp(poly, v);
      if (res.status != lp::Status::Optimal) {
        ++bad;
        continue;
      }
      // witness: z >= 0, sum z_j a_j <= v, sum z_j = optimum
      Rational total(0);
      bool feasible = res.witness.size() == poly.points().size();
      for (std::uint32_t r = 0; r < n && feasible; ++r) {
        Rational row(0);
        for (std::size_t j = 0; j < poly.points().size(); ++j) {
          row += res.witness[j] * Rational(static_cast<Int>(poly.points()[j][r]));
        }
        feasible = row <= v[r];
      }
      for (const auto& z : res.witness) {
        feasible = feasible && z >= Rational(0);
        total += z;
      }
      if (!feasible || total != res.optimum) ++bad;
      if (res.optimum != oracle::vertex_order(poly.points(), v)) ++bad;
      for (const Rational c : {Rational(1, 2), Rational(2), Rational(3)}) {
        std::vector<Rational> cv;
        for (const auto& x : v) cv.push_back(c * x);
        if (newton_order(poly, cv) != c * res.optimum) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(example_bad) + " example mismatches, " + std::to_string(bad - example_bad) +
                                 " failures over 100 random ideals (witness, vertex oracle, scaling)"};
  });

  run("C8", "principal-power root vs expand-then-root over F_2, F_3", 60, [] {
    std::mt19937_64 rng(8);
    int checked = 0;
    int bad = 0;
    for (std::uint32_t p : {2u, 3u}) {
      for (int i = 0; i < 20; ++i) {
        const Ambient amb{static_cast<std::uint32_t>(1 + i % 2), p};
        const GFPoly f = random_poly(rng, amb, 3, 3);
        for (std::uint32_t e = 1; e <= 2; ++e) {
          const PrimePower q(p, e);
          for (std::uint64_t N = 0; N <= 12; ++N) {
            ++checked;
            if (!ideal_equal(frobenius_root_principal_power(f, N, q), oracle::expand_then_root(f, N, q))) ++bad;
          }
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checked) + " (f, N, e) cases, " + std::to_string(bad) + " mismatches"};
  });

  run("C9", "determinism: CLI sweep of C3 with --jobs 1 and --jobs 4", 600, [] {
    const std::string cli = FPTLCT_CLI_PATH;
    const std::string base = "acceptance_c9_";
    std::vector<std::string> outputs;
    for (const char* jobs : {"1", "4", "1", "4"}) {
      const std::string path = base + std::to_string(outputs.size()) + ".json";
      const std::string cmd = "\"" + cli + "\" sweep --gens \"x^2+y^3\" -n 2 --primes 5..47 --qmax 100000 --target 5/6 --jobs " +
                              jobs + " --out " + path + " 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (status != 0) return Outcome{false, "CLI exited with status " + std::to_string(status)};
      outputs.push_back(slurp(path));
      std::remove(path.c_str());
    }
    bool same = !outputs.front().empty();
    for (const auto& o : outputs) same = same && o == outputs.front();
    return Outcome{same, std::to_string(outputs.size()) + " runs, " + std::to_string(outputs.front().size()) +
                             " bytes each, " + (same ? "byte-identical" : "outputs differ")};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
