// Copyright 2026 The egfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand prints one output record, either
// as readable text (default) or as a JSON object with --format json. Exact
// results are emitted as canonical num/den decimal strings; floats carry an
// explicit precision_bits field. Exit codes: 0 success, 1 verification
// failure, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "egfkit/bernoulli.hpp"
#include "egfkit/bigfloat.hpp"
#include "egfkit/calculus.hpp"
#include "egfkit/seq.hpp"
#include "egfkit/verify.hpp"
#include "egfkit/zeta_series.hpp"
#include "egfkit/zeta_special.hpp"

namespace {

using egfkit::BigComplex;
using egfkit::BigReal;
using egfkit::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr long kDefaultPrec = 128;
constexpr std::size_t kDefaultTerms = 40;

struct CommonOpts {
  std::string format = "text";
  std::string config_path;
};

struct Defaults {
  std::optional<long> prec;
  std::optional<long> terms;
};

ordered_json rational_json(const Rational& r) {
  return ordered_json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

ordered_json complex_json(const BigComplex& z) {
  return ordered_json{{"re", z.real().str()}, {"im", z.imag().str()}};
}

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--config", opts->config_path,
                  "key=value file with default prec/terms");
}

void emit(const CommonOpts& opts, const ordered_json& record, const std::string& text) {
  if (opts.format == "json") {
    std::cout << record.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
}

long parse_positive_long(const std::string& value, const std::string& what) {
  std::size_t pos = 0;
  long parsed = 0;
  try {
    parsed = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + ": \"" + value + "\"");
  }
  if (pos != value.size() || parsed <= 0) {
    throw std::invalid_argument("invalid " + what + ": \"" + value + "\"");
  }
  return parsed;
}

Defaults load_defaults(const CommonOpts& opts) {
  Defaults d;
  if (const char* env = std::getenv("EGFKIT_PREC")) {
    d.prec = parse_positive_long(env, "EGFKIT_PREC");
  }
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      throw std::invalid_argument("cannot open config file: " + opts.config_path);
    }
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        continue;
      }
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("malformed config line: \"" + line + "\"");
      }
      const std::string key = line.substr(0, eq);
      const std::string value = line.substr(eq + 1);
      if (key == "prec") {
        d.prec = parse_positive_long(value, "config prec");
      } else if (key == "terms") {
        d.terms = parse_positive_long(value, "config terms");
      } else {
        throw std::invalid_argument("unknown config key: \"" + key + "\"");
      }
    }
  }
  return d;
}

int cmd_bernoulli(const CommonOpts& opts, long n) {
  const Rational value = egfkit::bernoulli_number(static_cast<std::size_t>(n));
  ordered_json record{{"command", "bernoulli"},
                      {"inputs", {{"n", n}}},
                      {"result", rational_json(value)}};
  emit(opts, record, "B_" + std::to_string(n) + " = " + value.str());
  return 0;
}

int cmd_bernoulli_poly(const CommonOpts& opts, long n, const std::optional<std::string>& x_text) {
  const egfkit::Poly poly = egfkit::bernoulli_poly(static_cast<std::size_t>(n));
  ordered_json inputs{{"n", n}};
  if (x_text) {
    const Rational x = Rational::from_string(*x_text);
    inputs["x"] = x.str();
    const Rational value = poly.eval(x);
    ordered_json record{{"command", "bernoulli-poly"},
                        {"inputs", inputs},
                        {"result", rational_json(value)}};
    emit(opts, record,
         "B_" + std::to_string(n) + "(" + x.str() + ") = " + value.str());
    return 0;
  }
  ordered_json coeffs = ordered_json::array();
  for (const Rational& c : poly.coeffs()) {
    coeffs.push_back(rational_json(c));
  }
  ordered_json record{{"command", "bernoulli-poly"},
                      {"inputs", inputs},
                      {"result", {{"coeffs", coeffs}}}};
  emit(opts, record, "B_" + std::to_string(n) + "(x) = " + poly.str());
  return 0;
}

int cmd_faulhaber(const CommonOpts& opts, long n, long m) {
  const Rational value =
      egfkit::faulhaber_sum(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  ordered_json record{{"command", "faulhaber"},
                      {"inputs", {{"n", n}, {"m", m}}},
                      {"result", rational_json(value)}};
  emit(opts, record,
       "sum_{j=1}^{" + std::to_string(m) + "} j^" + std::to_string(n) + " = " + value.str());
  return 0;
}

int cmd_zeta_neg(const CommonOpts& opts, long n) {
  const Rational value = egfkit::zeta_neg(static_cast<std::size_t>(n));
  ordered_json record{{"command", "zeta-neg"},
                      {"inputs", {{"n", n}}},
                      {"result", rational_json(value)}};
  emit(opts, record, "zeta(-" + std::to_string(n) + ") = " + value.str());
  return 0;
}

int cmd_hurwitz_neg(const CommonOpts& opts, long n, const std::string& a_text) {
  const Rational a = Rational::from_string(a_text);
  const Rational value = egfkit::hurwitz_neg(static_cast<std::size_t>(n), a);
  ordered_json record{{"command", "hurwitz-neg"},
                      {"inputs", {{"n", n}, {"a", a.str()}}},
                      {"result", rational_json(value)}};
  emit(opts, record,
       "zeta(-" + std::to_string(n) + ", " + a.str() + ") = " + value.str());
  return 0;
}

int cmd_zeta_eval(const CommonOpts& opts, const std::string& s_text,
                  std::optional<long> terms_flag, std::optional<long> prec_flag,
                  bool report_flag) {
  const Defaults defaults = load_defaults(opts);
  const long prec = prec_flag.value_or(defaults.prec.value_or(kDefaultPrec));
  const long terms =
      terms_flag.value_or(defaults.terms.value_or(static_cast<long>(kDefaultTerms)));
  if (prec < 53) {
    throw std::invalid_argument("prec too small");
  }
  if (terms < 0) {
    throw std::invalid_argument("terms must be nonnegative");
  }
  const BigComplex s = egfkit::parse_complex(s_text, static_cast<mpfr_prec_t>(prec));
  const egfkit::ZetaReport report = egfkit::zeta_via_differences(
      s, static_cast<std::size_t>(terms), static_cast<mpfr_prec_t>(prec));

  ordered_json result{{"value", report.final.real().str()}};
  if (!report.final.imag().is_zero()) {
    result["im"] = report.final.imag().str();
  }
  result["precision_bits"] = prec;
  ordered_json extras{{"terms", terms},
                      {"reference", complex_json(report.reference)},
                      {"abs_error", report.abs_error.str()}};
  if (report_flag) {
    ordered_json sums = ordered_json::array();
    for (const BigComplex& t : report.partial_sums) {
      sums.push_back(complex_json(t));
    }
    ordered_json errors = ordered_json::array();
    for (const BigReal& e : egfkit::partial_sum_errors(report)) {
      errors.push_back(e.str());
    }
    extras["partial_sums"] = sums;
    extras["errors"] = errors;
  }
  ordered_json record{{"command", "zeta-eval"},
                      {"inputs",
                       {{"s", s_text},
                        {"terms", terms},
                        {"prec", prec},
                        {"report", report_flag}}},
                      {"result", result},
                      {"extras", extras}};

  std::ostringstream text;
  text << "zeta(" << s_text << ") = " << report.final.real().str();
  if (!report.final.imag().is_zero()) {
    text << " + (" << report.final.imag().str() << ")*i";
  }
  text << "  (N=" << terms << ", prec=" << prec << ")";
  text << "\nreference = " << report.reference.real().str();
  if (!report.reference.imag().is_zero()) {
    text << " + (" << report.reference.imag().str() << ")*i";
  }
  text << "\nabs_error = " << report.abs_error.str();
  if (report_flag) {
    const std::vector<BigReal> errors = egfkit::partial_sum_errors(report);
    for (std::size_t n = 0; n < report.partial_sums.size(); ++n) {
      text << "\nT_" << n << " = " << report.partial_sums[n].real().str();
      if (!report.partial_sums[n].imag().is_zero()) {
        text << " + (" << report.partial_sums[n].imag().str() << ")*i";
      }
      text << "  |T-ref| = " << errors[n].str();
    }
  }
  emit(opts, record, text.str());
  return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite, long max_order,
               std::optional<long> seed) {
  egfkit::verify::Options vopts;
  if (max_order > 0) {
    vopts.max_order = static_cast<std::size_t>(max_order);
  }
  if (seed) {
    vopts.seed = static_cast<std::uint64_t>(*seed);
  }
  std::vector<egfkit::verify::SuiteResult> results;
  if (suite == "all") {
    results = egfkit::verify::run_all(vopts);
  } else {
    results.push_back(egfkit::verify::run_suite(suite, vopts));
  }

  std::size_t cases = 0;
  std::size_t failures = 0;
  ordered_json suites = ordered_json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    cases += r.cases;
    failures += r.failures;
    ordered_json entry{{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.messages.empty()) {
      entry["messages"] = r.messages;
    }
    suites.push_back(entry);
    text << (r.passed() ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (r.failures > 0) {
      text << ", " << r.failures << " failures";
    }
    text << ")\n";
    for (const std::string& m : r.messages) {
      text << "     " << m << "\n";
    }
  }
  if (failures == 0) {
    text << "all checks passed (" << cases << " cases)";
  } else {
    text << failures << " of " << cases << " checks failed";
  }

  ordered_json record{{"command", "verify"},
                      {"inputs",
                       {{"suite", suite},
                        {"max_order", max_order},
                        {"seed", seed ? ordered_json(*seed) : ordered_json(nullptr)}}},
                      {"result",
                       {{"passed", failures == 0},
                        {"cases", cases},
                        {"failures", failures}}},
                      {"extras", {{"suites", suites}}}};
  emit(opts, record, text.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli/zeta sequence algebra and a forward-difference zeta evaluator"};
  app.require_subcommand(1);

  CommonOpts opts;

  long bern_n = 0;
  auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli number B_n");
  bernoulli_cmd->add_option("n", bern_n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
  add_common(bernoulli_cmd, &opts);

  long poly_n = 0;
  std::string poly_x;
  auto* poly_cmd = app.add_subcommand("bernoulli-poly", "Bernoulli polynomial B_n(x)");
  poly_cmd->add_option("n", poly_n, "degree n >= 0")->required()->check(CLI::NonNegativeNumber);
  auto* poly_x_opt = poly_cmd->add_option("x", poly_x, "optional rational evaluation point");
  add_common(poly_cmd, &opts);

  long fh_n = 0;
  long fh_m = 0;
  auto* faulhaber_cmd = app.add_subcommand("faulhaber", "Power sum over j = 1..m of j^n");
  faulhaber_cmd->add_option("n", fh_n, "exponent n >= 0")->required()->check(CLI::NonNegativeNumber);
  faulhaber_cmd->add_option("m", fh_m, "upper limit m >= 1")->required()->check(CLI::PositiveNumber);
  add_common(faulhaber_cmd, &opts);

  long zn_n = 0;
  auto* zeta_neg_cmd = app.add_subcommand("zeta-neg", "Exact zeta(-n)");
  zeta_neg_cmd->add_option("n", zn_n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
  add_common(zeta_neg_cmd, &opts);

  long hw_n = 0;
  std::string hw_a;
  auto* hurwitz_cmd = app.add_subcommand("hurwitz-neg", "Exact Hurwitz zeta(-n, a), 0 < a <= 1");
  hurwitz_cmd->add_option("n", hw_n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
  hurwitz_cmd->add_option("a", hw_a, "rational a as p/q")->required();
  add_common(hurwitz_cmd, &opts);

  std::string ze_s;
  std::optional<long> ze_terms;
  std::optional<long> ze_prec;
  bool ze_report = false;
  auto* zeta_eval_cmd =
      app.add_subcommand("zeta-eval", "Evaluate zeta(s) by the forward-difference series");
  zeta_eval_cmd->add_option("s", ze_s, "argument, e.g. \"2\", \"0.5\", \"2+3i\"")->required();
  zeta_eval_cmd->add_option("--terms", ze_terms, "number of rows N");
  zeta_eval_cmd->add_option("--prec", ze_prec, "precision in bits (>= 53)");
  zeta_eval_cmd->add_flag("--report", ze_report, "include the partial-sum trace");
  add_common(zeta_eval_cmd, &opts);

  std::string vf_suite = "all";
  long vf_max_order = 0;
  std::optional<long> vf_seed;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named identity suite");
  verify_cmd->add_option("--suite", vf_suite, "suite name or \"all\"")->capture_default_str();
  verify_cmd->add_option("--max-order", vf_max_order, "override the suite's default order");
  verify_cmd->add_option("--seed", vf_seed, "seed for randomized suites");
  add_common(verify_cmd, &opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (bernoulli_cmd->parsed()) {
      return cmd_bernoulli(opts, bern_n);
    }
    if (poly_cmd->parsed()) {
      std::optional<std::string> x;
      if (poly_x_opt->count() > 0) {
        x = poly_x;
      }
      return cmd_bernoulli_poly(opts, poly_n, x);
    }
    if (faulhaber_cmd->parsed()) {
      return cmd_faulhaber(opts, fh_n, fh_m);
    }
    if (zeta_neg_cmd->parsed()) {
      return cmd_zeta_neg(opts, zn_n);
    }
    if (hurwitz_cmd->parsed()) {
      return cmd_hurwitz_neg(opts, hw_n, hw_a);
    }
    if (zeta_eval_cmd->parsed()) {
      return cmd_zeta_eval(opts, ze_s, ze_terms, ze_prec, ze_report);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(opts, vf_suite, vf_max_order, vf_seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
