// Command-line front end; talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fptlct/fptlct.h"

namespace {

struct CliFailure {
  fptlct_status status;
  std::string message;
};

int exit_code_for(fptlct_status status) {
  switch (status) {
    case FPTLCT_OK:
      return 0;
    case FPTLCT_ERR_CAPACITY:
    case FPTLCT_ERR_OVERFLOW:
      return 2;
    case FPTLCT_ERR_INVARIANT:
    case FPTLCT_ERR_INTERNAL:
      return 3;
    default:
      return 1;
  }
}

void check(fptlct_status status) {
  if (status != FPTLCT_OK) throw CliFailure{status, fptlct_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  fptlct_string_free(s);
  return out;
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using IdealPtr = std::unique_ptr<fptlct_ideal, Deleter<fptlct_ideal, fptlct_ideal_free>>;
using MonoPtr = std::unique_ptr<fptlct_monomial_ideal, Deleter<fptlct_monomial_ideal, fptlct_monomial_ideal_free>>;
using IntPtr = std::unique_ptr<fptlct_int_ideal, Deleter<fptlct_int_ideal, fptlct_int_ideal_free>>;
using ReportPtr = std::unique_ptr<fptlct_report, Deleter<fptlct_report, fptlct_report_free>>;

IdealPtr parse_ideal(const std::string& gens, uint32_t n, uint32_t p) {
  fptlct_ideal* raw = nullptr;
  check(fptlct_ideal_parse(gens.c_str(), n, p, &raw));
  return IdealPtr(raw);
}

MonoPtr parse_monomial(const std::string& gens, uint32_t n) {
  fptlct_monomial_ideal* raw = nullptr;
  check(fptlct_monomial_ideal_parse(gens.c_str(), n, &raw));
  return MonoPtr(raw);
}

// "a..b" or "p1,p2,...".
std::vector<uint32_t> parse_primes(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots != std::string::npos) {
      const auto lo = static_cast<uint32_t>(std::stoul(text.substr(0, dots)));
      const auto hi = static_cast<uint32_t>(std::stoul(text.substr(dots + 2)));
      size_t count = 0;
      check(fptlct_primes_in_range(lo, hi, nullptr, 0, &count));
      std::vector<uint32_t> out(count);
      check(fptlct_primes_in_range(lo, hi, out.data(), out.size(), &count));
      return out;
    }
    std::vector<uint32_t> out;
    size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      out.push_back(static_cast<uint32_t>(std::stoul(piece)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  } catch (const std::logic_error&) {
    throw CliFailure{FPTLCT_ERR_ARGUMENT, "cannot read prime list '" + text + "'; use a..b or p1,p2,..."};
  }
}

struct Common {
  std::string gens;
  uint32_t n = 0;
  uint32_t p = 0;
  uint32_t e = 1;
};

void add_ideal_options(CLI::App* cmd, Common& c, bool with_prime) {
  cmd->add_option("--gens", c.gens, "comma-separated generators")->required();
  cmd->add_option("-n", c.n, "number of variables")->required()->check(CLI::PositiveNumber);
  if (with_prime) cmd->add_option("-p", c.p, "prime characteristic")->required()->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F-pure thresholds, test ideals and log canonical thresholds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fptlct_version()));

  Common c;
  std::string lambda;
  uint32_t emax = 6;
  uint64_t max_den = 0;
  bool point = false;

  auto* nu_cmd = app.add_subcommand("nu", "nu(e): largest r with a^r outside (x_1^q, ..., x_n^q)");
  add_ideal_options(nu_cmd, c, true);
  nu_cmd->add_option("-e", c.e, "Frobenius exponent, q = p^e")->check(CLI::PositiveNumber);

  auto* fpt_cmd = app.add_subcommand("fpt", "enclosure [nu/q, (nu+mu)/q] of the F-pure threshold at 0, mu generators");
  add_ideal_options(fpt_cmd, c, true);
  fpt_cmd->add_option("-e", c.e, "Frobenius exponent, q = p^e")->check(CLI::PositiveNumber);
  fpt_cmd->add_flag("--point", point, "try to confirm an exact value with test ideals");
  fpt_cmd->add_option("--emax", emax, "chain length for the test ideals behind --point")->check(CLI::PositiveNumber);
  fpt_cmd->add_option("--max-den", max_den, "grid denominator bound for --point (default q)");

  auto* froot_cmd = app.add_subcommand("froot", "Frobenius root b^[1/q]");
  add_ideal_options(froot_cmd, c, true);
  froot_cmd->add_option("-e", c.e, "Frobenius exponent, q = p^e")->check(CLI::PositiveNumber);

  auto* tau_cmd = app.add_subcommand("tau", "test ideal tau(a^lambda)");
  add_ideal_options(tau_cmd, c, true);
  tau_cmd->add_option("--lambda", lambda, "exponent n/d")->required();
  tau_cmd->add_option("--emax", emax, "longest chain to try")->check(CLI::PositiveNumber);

  auto* lct_cmd = app.add_subcommand("lct", "lct of a monomial ideal");
  add_ideal_options(lct_cmd, c, false);

  auto* mult_cmd = app.add_subcommand("mult-ideal", "multiplier ideal of a monomial ideal");
  add_ideal_options(mult_cmd, c, false);
  mult_cmd->add_option("--lambda", lambda, "exponent n/d")->required();

  auto* jumps_cmd = app.add_subcommand("jumps", "jumping-number candidates up to a bound");
  add_ideal_options(jumps_cmd, c, false);
  jumps_cmd->add_option("--bound,--lambda", lambda, "upper bound n/d")->required();

  std::string primes_text;
  uint64_t qmax = 10000;
  std::string target;
  std::string out_path;
  std::string format;
  unsigned jobs = 1;
  bool timing = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "fpt enclosures across primes against an lct target");
  add_ideal_options(sweep_cmd, c, false);
  sweep_cmd->add_option("--primes", primes_text, "a..b or p1,p2,...")->required();
  sweep_cmd->add_option("--qmax", qmax, "largest p^e per prime")->check(CLI::Range(uint64_t{2}, uint64_t{1} << 62));
  sweep_cmd->add_option("--target", target, "lct target n/d");
  sweep_cmd->add_option("--out", out_path, "report path (stdout if absent)");
  sweep_cmd->add_option("--format", format, "csv or json (default from --out extension, else json)")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--timing", timing, "fill elapsed_ms (output is then not reproducible)");

  bool verify = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "print the shipped lct corpus");
  corpus_cmd->add_flag("--verify", verify, "cross-check every entry with the monomial LP");

  uint64_t seed = 0;
  uint32_t count = 100;
  auto* check_cmd = app.add_subcommand("check", "randomized Frobenius-root adjunction checks");
  check_cmd->add_option("--seed", seed, "random seed");
  check_cmd->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (nu_cmd->parsed()) {
      auto a = parse_ideal(c.gens, c.n, c.p);
      uint64_t v = 0;
      check(fptlct_nu(a.get(), c.e, &v));
      std::cout << v << "\n";
    } else if (fpt_cmd->parsed()) {
      auto a = parse_ideal(c.gens, c.n, c.p);
      uint64_t v = 0;
      char* lo = nullptr;
      char* hi = nullptr;
      check(fptlct_fpt_enclosure(a.get(), c.e, &v, &lo, &hi));
      std::cout << "[" << take(lo) << ", " << take(hi) << "]\n";
      if (point) {
        uint64_t den = max_den;
        if (den == 0) {
          den = 1;
          for (uint32_t i = 0; i < c.e; ++i) den *= c.p;
        }
        char* value = nullptr;
        check(fptlct_fpt_point(a.get(), c.e, emax, den, &value));
        if (value) {
          std::cout << "fpt = " << take(value) << "\n";
        } else {
          std::cout << "fpt point not confirmed\n";
        }
      }
    } else if (froot_cmd->parsed()) {
      auto a = parse_ideal(c.gens, c.n, c.p);
      fptlct_ideal* root = nullptr;
      check(fptlct_frobenius_root(a.get(), c.e, &root));
      IdealPtr holder(root);
      char* text = nullptr;
      check(fptlct_ideal_format(root, &text));
      std::cout << take(text) << "\n";
    } else if (tau_cmd->parsed()) {
      auto a = parse_ideal(c.gens, c.n, c.p);
      fptlct_ideal* tau = nullptr;
      uint32_t used = 0;
      int stable = 0;
      check(fptlct_test_ideal(a.get(), lambda.c_str(), emax, &tau, &used, &stable));
      IdealPtr holder(tau);
      char* text = nullptr;
      check(fptlct_ideal_groebner(tau, &text));
      std::cout << take(text) << "\ne_used = " << used << "\nstabilized = " << (stable ? "true" : "false") << "\n";
    } else if (lct_cmd->parsed()) {
      auto a = parse_monomial(c.gens, c.n);
      char* text = nullptr;
      check(fptlct_lct(a.get(), &text));
      std::cout << take(text) << "\n";
    } else if (mult_cmd->parsed()) {
      auto a = parse_monomial(c.gens, c.n);
      fptlct_monomial_ideal* j = nullptr;
      check(fptlct_multiplier_ideal(a.get(), lambda.c_str(), &j));
      MonoPtr holder(j);
      char* text = nullptr;
      check(fptlct_monomial_ideal_format(j, &text));
      std::cout << take(text) << "\n";
    } else if (jumps_cmd->parsed()) {
      auto a = parse_monomial(c.gens, c.n);
      char* text = nullptr;
      check(fptlct_jumping_candidates(a.get(), lambda.c_str(), &text));
      std::cout << take(text) << "\n";
    } else if (sweep_cmd->parsed()) {
      fptlct_int_ideal* raw = nullptr;
      check(fptlct_int_ideal_parse(c.gens.c_str(), c.n, &raw));
      IntPtr ideal(raw);
      const auto primes = parse_primes(primes_text);
      if (format.empty()) {
        const bool csv = out_path.size() >= 4 && out_path.compare(out_path.size() - 4, 4, ".csv") == 0;
        format = csv ? "csv" : "json";
      }
      const fptlct_format fmt = format == "csv" ? FPTLCT_FORMAT_CSV : FPTLCT_FORMAT_JSON;
      fptlct_sweep_options opts{qmax, jobs, timing ? 1 : 0};
      fptlct_report* rep = nullptr;
      check(fptlct_sweep(ideal.get(), primes.data(), primes.size(), &opts, target.empty() ? nullptr : target.c_str(),
                         &rep));
      ReportPtr report(rep);
      char* warnings = nullptr;
      check(fptlct_report_warnings(rep, &warnings));
      std::cerr << take(warnings);
      if (out_path.empty()) {
        char* text = nullptr;
        check(fptlct_report_render(rep, fmt, &text));
        std::cout << take(text);
      } else {
        check(fptlct_report_emit(rep, fmt, out_path.c_str()));
      }
      int code = 0;
      check(fptlct_report_exit_code(rep, &code));
      if (code == 3) std::cerr << "error: a hard invariant failed (see monotone_ok / below_lct_ok)\n";
      return code;
    } else if (corpus_cmd->parsed()) {
      if (verify) {
        char* text = nullptr;
        int ok = 0;
        check(fptlct_corpus_verify(&text, &ok));
        std::cout << take(text);
        return ok ? 0 : 3;
      }
      char* text = nullptr;
      check(fptlct_corpus_json(&text));
      std::cout << take(text);
    } else if (check_cmd->parsed()) {
      uint32_t failures = 0;
      check(fptlct_self_check(seed, count, &failures));
      std::cout << count << " instances, " << failures << " failures\n";
      return failures == 0 ? 0 : 3;
    }
  } catch (const CliFailure& failure) {
    std::cerr << "error: " << failure.message << "\n";
    return exit_code_for(failure.status);
  }
  return 0;
}
