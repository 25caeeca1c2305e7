#include "fptlct/fptlct.h"

#include <cstring>
#include <new>
#include <random>
#include <string>

#include <json.hpp>

#include "core/experiment.hpp"
#include "core/frobenius.hpp"
#include "core/newton.hpp"
#include "core/parse.hpp"
#include "core/reduction.hpp"
#include "core/sampling.hpp"

struct fptlct_ideal {
  fptlct::Ideal value;
};
struct fptlct_monomial_ideal {
  fptlct::MonomialIdeal value;
};
struct fptlct_int_ideal {
  fptlct::IntegerIdeal value;
};
struct fptlct_report {
  fptlct::ConvergenceReport value;
};

namespace {

thread_local std::string last_error;

fptlct_status fail(fptlct_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

fptlct_status status_of(const fptlct::Error& err) {
  if (dynamic_cast<const fptlct::DegenerateReductionError*>(&err)) return FPTLCT_ERR_DEGENERATE;
  switch (err.kind()) {
    case fptlct::ErrorKind::Domain:
      return FPTLCT_ERR_DOMAIN;
    case fptlct::ErrorKind::Overflow:
      return FPTLCT_ERR_OVERFLOW;
    case fptlct::ErrorKind::Capacity:
      return FPTLCT_ERR_CAPACITY;
    case fptlct::ErrorKind::Parse:
      return FPTLCT_ERR_PARSE;
    case fptlct::ErrorKind::Invariant:
      return FPTLCT_ERR_INVARIANT;
    case fptlct::ErrorKind::Io:
      return FPTLCT_ERR_IO;
  }
  return FPTLCT_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
fptlct_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return FPTLCT_OK;
  } catch (const fptlct::Error& err) {
    return fail(status_of(err), err.what());
  } catch (const std::bad_alloc&) {
    return fail(FPTLCT_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& err) {
    return fail(FPTLCT_ERR_INTERNAL, err.what());
  } catch (...) {
    return fail(FPTLCT_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool any_null() { return false; }
template <typename T, typename... Rest>
bool any_null(const T* first, const Rest*... rest) {
  return first == nullptr || any_null(rest...);
}

fptlct_status null_argument() { return fail(FPTLCT_ERR_ARGUMENT, "null argument"); }

fptlct::PrimePower power_for(const fptlct::Ideal& ideal, std::uint32_t e) {
  return fptlct::PrimePower(ideal.ambient().p, e);
}

}  // namespace

extern "C" {

const char* fptlct_last_error(void) { return last_error.c_str(); }

const char* fptlct_version(void) { return "0.1.0"; }

void fptlct_string_free(char* s) { delete[] s; }

fptlct_status fptlct_ideal_parse(const char* gens, uint32_t n, uint32_t p, fptlct_ideal** out) {
  if (any_null(gens, out)) return null_argument();
  return guarded([&] {
    if (!fptlct::exact::is_prime(p)) throw fptlct::DomainError(std::to_string(p) + " is not prime");
    if (n == 0) throw fptlct::DomainError("variable count must be positive");
    auto polys = fptlct::parse_gfpoly_list(gens, n, p);
    *out = new fptlct_ideal{fptlct::Ideal(fptlct::Ambient{n, p}, std::move(polys))};
  });
}

void fptlct_ideal_free(fptlct_ideal* ideal) { delete ideal; }

fptlct_status fptlct_ideal_format(const fptlct_ideal* ideal, char** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = dup_string(ideal->value.to_string()); });
}

fptlct_status fptlct_ideal_groebner(const fptlct_ideal* ideal, char** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] {
    const auto& basis = ideal->value.groebner_basis();
    *out = dup_string(fptlct::Ideal(ideal->value.ambient(), basis).to_string());
  });
}

fptlct_status fptlct_ideal_contains(const fptlct_ideal* j, const fptlct_ideal* i, int* out) {
  if (any_null(j, i, out)) return null_argument();
  return guarded([&] { *out = fptlct::ideal_contains(j->value, i->value) ? 1 : 0; });
}

fptlct_status fptlct_ideal_equal(const fptlct_ideal* a, const fptlct_ideal* b, int* out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = fptlct::ideal_equal(a->value, b->value) ? 1 : 0; });
}

fptlct_status fptlct_ideal_is_unit(const fptlct_ideal* ideal, int* out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = fptlct::is_unit_ideal(ideal->value) ? 1 : 0; });
}

fptlct_status fptlct_ideal_truncate(const fptlct_ideal* ideal, uint32_t d, fptlct_ideal** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = new fptlct_ideal{fptlct::truncate_ideal(ideal->value, d)}; });
}

fptlct_status fptlct_bracket_power(const fptlct_ideal* ideal, uint32_t e, fptlct_ideal** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = new fptlct_ideal{fptlct::bracket_power(ideal->value, power_for(ideal->value, e))}; });
}

fptlct_status fptlct_frobenius_root(const fptlct_ideal* ideal, uint32_t e, fptlct_ideal** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = new fptlct_ideal{fptlct::frobenius_root(ideal->value, power_for(ideal->value, e))}; });
}

fptlct_status fptlct_nu(const fptlct_ideal* ideal, uint32_t e, uint64_t* out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = fptlct::nu(ideal->value, e).nu; });
}

fptlct_status fptlct_fpt_enclosure(const fptlct_ideal* ideal, uint32_t e, uint64_t* nu, char** low, char** high) {
  if (any_null(ideal, nu, low, high)) return null_argument();
  return guarded([&] {
    const auto v = fptlct::nu(ideal->value, e);
    const auto enc = fptlct::enclosure_from_nu(v);
    *nu = v.nu;
    *low = dup_string(enc.low.to_string());
    *high = dup_string(enc.high.to_string());
  });
}

fptlct_status fptlct_fpt_point(const fptlct_ideal* ideal, uint32_t e, uint32_t e_max, uint64_t max_denominator,
                               char** point) {
  if (any_null(ideal, point)) return null_argument();
  return guarded([&] {
    const auto value = fptlct::confirm_fpt_point(ideal->value, e, e_max, max_denominator);
    *point = value ? dup_string(value->to_string()) : nullptr;
  });
}

fptlct_status fptlct_test_ideal(const fptlct_ideal* ideal, const char* lambda, uint32_t e_max, fptlct_ideal** out,
                                uint32_t* e_used, int* stabilized) {
  if (any_null(ideal, lambda, out, e_used, stabilized)) return null_argument();
  return guarded([&] {
    auto r = fptlct::test_ideal(ideal->value, fptlct::Rational::parse(lambda), e_max);
    *e_used = r.e_used;
    *stabilized = r.stabilized ? 1 : 0;
    *out = new fptlct_ideal{std::move(r.ideal)};
  });
}

fptlct_status fptlct_monomial_ideal_parse(const char* gens, uint32_t n, fptlct_monomial_ideal** out) {
  if (any_null(gens, out)) return null_argument();
  return guarded([&] {
    if (n == 0) throw fptlct::DomainError("variable count must be positive");
    const auto ideal = fptlct::parse_integer_ideal(gens, n);
    for (const auto& g : ideal.generators()) {
      if (g.terms().size() != 1) {
        throw fptlct::DomainError("generator '" + g.to_string() + "' is not a single term");
      }
    }
    *out = new fptlct_monomial_ideal{fptlct::term_ideal(ideal)};
  });
}

void fptlct_monomial_ideal_free(fptlct_monomial_ideal* ideal) { delete ideal; }

fptlct_status fptlct_monomial_ideal_format(const fptlct_monomial_ideal* ideal, char** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = dup_string(ideal->value.to_string()); });
}

fptlct_status fptlct_lct(const fptlct_monomial_ideal* ideal, char** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] {
    const auto v = fptlct::lct_monomial(ideal->value);
    *out = dup_string(v ? v->to_string() : "inf");
  });
}

fptlct_status fptlct_multiplier_ideal(const fptlct_monomial_ideal* ideal, const char* lambda,
                                      fptlct_monomial_ideal** out) {
  if (any_null(ideal, lambda, out)) return null_argument();
  return guarded([&] {
    *out = new fptlct_monomial_ideal{
        fptlct::multiplier_ideal_monomial(ideal->value, fptlct::Rational::parse(lambda))};
  });
}

fptlct_status fptlct_jumping_candidates(const fptlct_monomial_ideal* ideal, const char* bound, char** out) {
  if (any_null(ideal, bound, out)) return null_argument();
  return guarded([&] {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : fptlct::jumping_candidates(ideal->value, fptlct::Rational::parse(bound))) {
      arr.push_back(r.to_string());
    }
    *out = dup_string(arr.dump());
  });
}

fptlct_status fptlct_int_ideal_parse(const char* gens, uint32_t n, fptlct_int_ideal** out) {
  if (any_null(gens, out)) return null_argument();
  return guarded([&] {
    if (n == 0) throw fptlct::DomainError("variable count must be positive");
    *out = new fptlct_int_ideal{fptlct::parse_integer_ideal(gens, n)};
  });
}

void fptlct_int_ideal_free(fptlct_int_ideal* ideal) { delete ideal; }

fptlct_status fptlct_int_ideal_reduce(const fptlct_int_ideal* ideal, uint32_t p, fptlct_ideal** out) {
  if (any_null(ideal, out)) return null_argument();
  return guarded([&] { *out = new fptlct_ideal{fptlct::reduce_mod_p(ideal->value, p)}; });
}

fptlct_status fptlct_sweep(const fptlct_int_ideal* ideal, const uint32_t* primes, size_t count,
                           const fptlct_sweep_options* options, const char* target, fptlct_report** out) {
  if (any_null(ideal, options, out) || (count > 0 && primes == nullptr)) return null_argument();
  return guarded([&] {
    fptlct::SweepOptions opts;
    opts.q_max = options->q_max;
    opts.jobs = options->jobs;
    opts.timing = options->timing != 0;
    std::optional<fptlct::Rational> goal;
    if (target) goal = fptlct::Rational::parse(target);
    auto result = fptlct::sweep(ideal->value, std::vector<uint32_t>(primes, primes + count), opts);
    *out = new fptlct_report{
        fptlct::convergence_report(std::move(result.records), goal, std::move(result.warnings))};
  });
}

void fptlct_report_free(fptlct_report* report) { delete report; }

namespace {
fptlct::Format to_format(fptlct_format f) {
  switch (f) {
    case FPTLCT_FORMAT_JSON:
      return fptlct::Format::Json;
    case FPTLCT_FORMAT_CSV:
      return fptlct::Format::Csv;
  }
  throw fptlct::DomainError("unknown output format");
}
}  // namespace

fptlct_status fptlct_report_render(const fptlct_report* report, fptlct_format format, char** out) {
  if (any_null(report, out)) return null_argument();
  return guarded([&] { *out = dup_string(fptlct::render(report->value, to_format(format))); });
}

fptlct_status fptlct_report_emit(const fptlct_report* report, fptlct_format format, const char* path) {
  if (any_null(report, path)) return null_argument();
  return guarded([&] { fptlct::emit(report->value, to_format(format), path); });
}

fptlct_status fptlct_report_exit_code(const fptlct_report* report, int* out) {
  if (any_null(report, out)) return null_argument();
  return guarded([&] { *out = fptlct::report_exit_code(report->value); });
}

fptlct_status fptlct_report_flags(const fptlct_report* report, int* monotone_ok, int* below_lct_ok, int* trend_ok) {
  if (any_null(report, monotone_ok, below_lct_ok, trend_ok)) return null_argument();
  return guarded([&] {
    const auto& r = report->value;
    *monotone_ok = r.monotone_ok ? 1 : 0;
    *below_lct_ok = r.below_lct_ok ? (*r.below_lct_ok ? 1 : 0) : -1;
    *trend_ok = r.trend_ok ? (*r.trend_ok ? 1 : 0) : -1;
  });
}

fptlct_status fptlct_report_record_count(const fptlct_report* report, size_t* out) {
  if (any_null(report, out)) return null_argument();
  *out = report->value.records.size();
  return FPTLCT_OK;
}

fptlct_status fptlct_report_warnings(const fptlct_report* report, char** out) {
  if (any_null(report, out)) return null_argument();
  return guarded([&] {
    std::string text;
    for (const auto& w : report->value.warnings) {
      text += "warning: p=" + std::to_string(w.p);
      if (w.e != 0) text += " e=" + std::to_string(w.e);
      text += " " + fptlct::to_string(w.kind) + ": " + w.message + "\n";
    }
    *out = dup_string(text);
  });
}

fptlct_status fptlct_primes_in_range(uint32_t lo, uint32_t hi, uint32_t* buffer, size_t cap, size_t* count) {
  if (any_null(count) || (cap > 0 && buffer == nullptr)) return null_argument();
  return guarded([&] {
    const auto primes = fptlct::primes_in_range(lo, hi);
    *count = primes.size();
    for (size_t i = 0; i < primes.size() && i < cap; ++i) buffer[i] = primes[i];
  });
}

fptlct_status fptlct_corpus_json(char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = dup_string(std::string(fptlct::reduction::builtin_corpus_json())); });
}

fptlct_status fptlct_corpus_verify(char** out, int* all_ok) {
  if (any_null(out, all_ok)) return null_argument();
  return guarded([&] {
    std::string text;
    bool ok = true;
    for (const auto& entry : fptlct::corpus()) {
      const auto lp = fptlct::lct_monomial(fptlct::term_ideal(entry.ideal));
      const std::string lp_text = lp ? lp->to_string() : "inf";
      const bool match = lp && *lp == entry.lct0;
      const bool blocking = entry.provenance == "monomial-LP";
      if (blocking && !match) ok = false;
      text += std::string(match ? "ok  " : (blocking ? "FAIL" : "note")) + "  " + entry.ideal.to_string() +
              "  lct0=" + entry.lct0.to_string() + "  [" + entry.provenance + "]  term-ideal LP " + lp_text +
              (blocking ? "" : " (non-blocking)") + "\n";
    }
    *out = dup_string(text);
    *all_ok = ok ? 1 : 0;
  });
}

fptlct_status fptlct_self_check(uint64_t seed, uint32_t count, uint32_t* failures) {
  if (any_null(failures)) return null_argument();
  return guarded([&] {
    std::mt19937_64 rng(seed);
    uint32_t bad = 0;
    for (uint32_t i = 0; i < count; ++i) {
      const auto s = fptlct::random_adjunction_sample(rng);
      if (!fptlct::adjunction_holds(s.b, s.c, s.q)) ++bad;
    }
    *failures = bad;
  });
}

}  // extern "C"
