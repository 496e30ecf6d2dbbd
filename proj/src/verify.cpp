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

#include "egfkit/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "egfkit/bernoulli.hpp"
#include "egfkit/binomial.hpp"
#include "egfkit/calculus.hpp"
#include "egfkit/fwd_diff.hpp"
#include "egfkit/poly.hpp"
#include "egfkit/seq.hpp"
#include "egfkit/zeta_series.hpp"
#include "egfkit/zeta_special.hpp"

namespace egfkit::verify {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& result) : r_(result) {}

  void expect(bool ok, const std::string& what) {
    ++r_.cases;
    if (!ok) {
      ++r_.failures;
      if (r_.messages.size() < 8) {
        r_.messages.push_back(what);
      }
    }
  }

 private:
  SuiteResult& r_;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(gen_), den(gen_));
  }

  Rational nonzero_rational() {
    for (;;) {
      Rational r = rational();
      if (!r.is_zero()) {
        return r;
      }
    }
  }

  std::size_t size(std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return d(gen_);
  }

  EgfSeq seq(std::size_t max_order) {
    const std::size_t K = size(1, max_order);
    std::vector<Rational> c;
    c.reserve(K);
    for (std::size_t i = 0; i < K; ++i) {
      c.push_back(rational());
    }
    return EgfSeq(std::move(c));
  }

 private:
  std::mt19937_64 gen_;
};

std::string describe(const std::string& what, std::size_t index) {
  std::ostringstream os;
  os << what << " (case " << index << ")";
  return os.str();
}

SuiteResult suite_lemma_1_2(const Options& opts) {
  SuiteResult r{.name = "lemma-1-2"};
  Checker check(r);
  Rng rng(opts.seed ^ 0x12);
  const std::size_t max_order = opts.max_order ? opts.max_order : 16;
  for (std::size_t it = 0; it < 200; ++it) {
    const EgfSeq a = rng.seq(max_order);
    const EgfSeq b = rng.seq(max_order);
    const EgfSeq c = rng.seq(max_order);
    const Rational lambda = rng.rational();
    check.expect(star(a, b) == star(b, a), describe("commutativity", it));
    check.expect(star(star(a, b), c) == star(a, star(b, c)), describe("associativity", it));
    check.expect(star(a, add(b, c)) == add(star(a, b), star(a, c)), describe("distributivity", it));
    check.expect(star(a, scale(lambda, b)) == scale(lambda, star(a, b)),
                 describe("scalar compatibility", it));
  }
  return r;
}

SuiteResult suite_lemma_1_4(const Options& opts) {
  SuiteResult r{.name = "lemma-1-4"};
  Checker check(r);
  Rng rng(opts.seed ^ 0x14);
  const std::size_t max_order = opts.max_order ? opts.max_order : 16;
  for (std::size_t it = 0; it < 200; ++it) {
    const EgfSeq a = rng.seq(max_order);
    const EgfSeq b = rng.seq(max_order);
    const std::size_t K = std::min(a.order(), b.order());
    const Rational j = rng.nonzero_rational();
    const EgfSeq gj = geometric(j, K);
    const EgfSeq gm1 = geometric(Rational(-1), K);
    check.expect(hadamard(geometric(Rational(1), b.order()), b) == b,
                 describe("ones is the hadamard identity", it));
    check.expect(star(identity(a.order()), a) == a, describe("id is the star identity", it));
    check.expect(hadamard(gj, star(a, b)) == star(hadamard(gj, a), hadamard(gj, b)),
                 describe("geometric scaling distributes over star", it));
    check.expect(star(hadamard(gm1, a), b) ==
                     hadamard(gm1, star(a, hadamard(gm1, b))),
                 describe("alternating-sign conjugation", it));
  }
  // (-1 B) star (-1 H) = id
  const std::size_t K = opts.max_order ? opts.max_order : 30;
  const EgfSeq gm1 = geometric(Rational(-1), K);
  check.expect(star(hadamard(gm1, bernoulli_numbers(K)), hadamard(gm1, H_seq(K))) == identity(K),
               "signed Bernoulli-harmonic inverse pair");
  return r;
}

SuiteResult suite_bernoulli(const Options& opts) {
  SuiteResult r{.name = "bernoulli"};
  Checker check(r);
  const std::size_t K = opts.max_order ? opts.max_order : 60;
  const EgfSeq B = bernoulli_numbers(K);
  check.expect(B == inverse(H_seq(K)), "recursion route equals harmonic-inverse route");
  check.expect(star(B, H_seq(K)) == identity(K), "B star H = id");
  for (std::size_t k = 1; 2 * k + 1 < K; ++k) {
    std::ostringstream os;
    os << "B_" << 2 * k + 1 << " = 0";
    check.expect(B[2 * k + 1].is_zero(), os.str());
  }
  // sum_k C(n,k) B_k = (-1)^n B_n
  const std::size_t n_max = std::min<std::size_t>(K - 1, 50);
  std::vector<mpz_class> row{1_mpz};
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += Rational(row[k]) * B[k];
    }
    const Rational expected = (n % 2 == 0) ? B[n] : -B[n];
    std::ostringstream os;
    os << "alternating-sign symmetry at n = " << n;
    check.expect(sum == expected, os.str());
    next_binomial_row(row);
  }
  return r;
}

SuiteResult suite_faulhaber(const Options& opts) {
  SuiteResult r{.name = "faulhaber"};
  Checker check(r);
  const unsigned long n_max = opts.max_order ? opts.max_order : 10;
  for (unsigned long n = 0; n <= n_max; ++n) {
    for (unsigned long m = 1; m <= 100; ++m) {
      std::ostringstream os;
      os << "closed form vs brute force at n=" << n << " m=" << m;
      check.expect(faulhaber_sum(n, m) == power_sum_bruteforce(n, m), os.str());
    }
  }
  // s_n(m) = (B_{n+1}(m+1) - B_{n+1}(1)) / (n+1)
  for (unsigned long n = 0; n <= 12; ++n) {
    const Poly Bp = bernoulli_poly(n + 1);
    const Rational at_one = Bp.eval(Rational(1));
    for (unsigned long m = 1; m <= 100; ++m) {
      const Rational rhs = (Bp.eval(Rational(static_cast<long>(m) + 1)) - at_one) /
                           Rational(static_cast<long>(n) + 1);
      std::ostringstream os;
      os << "Bernoulli-polynomial difference form at n=" << n << " m=" << m;
      check.expect(faulhaber_sum(n, m) == rhs, os.str());
    }
  }
  // (0, s_0(m), 2 s_1(m), ...) = B(m+1) - B(1)
  const std::size_t order = 20;
  for (unsigned long m = 1; m <= 20; ++m) {
    std::vector<Rational> lhs(order, Rational(0));
    for (std::size_t n = 1; n < order; ++n) {
      lhs[n] = Rational(static_cast<long>(n)) * faulhaber_sum(n - 1, m);
    }
    const EgfSeq rhs = sub(bernoulli_poly_seq(Rational(static_cast<long>(m) + 1), order),
                           bernoulli_poly_seq(Rational(1), order));
    std::ostringstream os;
    os << "power-sum generating identity at m=" << m;
    check.expect(EgfSeq(std::move(lhs)) == rhs, os.str());
  }
  return r;
}

SuiteResult suite_polynomials(const Options& opts) {
  SuiteResult r{.name = "polynomials"};
  Checker check(r);
  const std::size_t n_max = opts.max_order ? opts.max_order : 30;
  std::vector<Poly> B;  // B[k] = k-th Bernoulli polynomial
  B.reserve(n_max + 2);
  for (std::size_t k = 0; k <= n_max + 1; ++k) {
    B.push_back(bernoulli_poly(k));
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Poly xn = Poly::monomial(Rational(1), n);
    {
      Poly sum;
      const std::vector<mpz_class> row = binomial_row(n);
      for (std::size_t k = 0; k <= n; ++k) {
        sum = sum + (Rational(row[k]) / Rational(static_cast<long>(n - k) + 1)) * B[k];
      }
      std::ostringstream os;
      os << "harmonic-weighted Bernoulli sum is x^n at n=" << n;
      check.expect(sum == xn, os.str());
    }
    {
      Poly sum;
      const std::vector<mpz_class> row = binomial_row(n + 1);
      for (std::size_t k = 0; k <= n + 1; ++k) {
        sum = sum + Rational(row[k]) * B[k];
      }
      std::ostringstream os;
      os << "binomial Bernoulli sum telescopes at n=" << n;
      check.expect(sum == taylor_shift(B[n + 1], Rational(1)), os.str());
    }
    {
      const Poly diff = taylor_shift(B[n + 1], Rational(1)) - B[n + 1];
      std::ostringstream os;
      os << "difference of Bernoulli polynomials at n=" << n;
      check.expect((Rational(1, static_cast<long>(n) + 1) * diff) == xn, os.str());
    }
    {
      const Poly reflected = compose_affine(B[n], Rational(1), Rational(-1));
      const Poly expected = (n % 2 == 0) ? B[n] : -B[n];
      std::ostringstream os;
      os << "reflection symmetry at n=" << n;
      check.expect(reflected == expected, os.str());
    }
    {
      const Poly at_minus_x = compose_affine(B[n], Rational(0), Rational(-1));
      const Poly lhs = (n % 2 == 0) ? at_minus_x : -at_minus_x;
      Poly rhs = B[n];
      if (n >= 1) {
        rhs = rhs + Poly::monomial(Rational(static_cast<long>(n)), n - 1);
      }
      std::ostringstream os;
      os << "complement identity at n=" << n;
      check.expect(lhs == rhs, os.str());
    }
  }
  return r;
}

SuiteResult suite_theorems(const Options& opts) {
  SuiteResult r{.name = "theorems"};
  Checker check(r);
  const std::size_t m21 = opts.max_order ? opts.max_order : 30;
  for (std::size_t m = 1; m <= m21; ++m) {
    std::ostringstream os;
    os << "alternating zeta sum identity at m=" << m;
    check.expect(theorem21_check(m).holds(), os.str());
  }
  for (std::size_t m = 0; m <= m21; ++m) {
    std::ostringstream os;
    os << "delta form at m=" << m;
    check.expect(theorem21_delta_check(m).holds(), os.str());
  }
  const std::vector<Rational> as{Rational(1), Rational(1, 2), Rational(1, 3),
                                 Rational(2, 3), Rational(1, 4)};
  const std::size_t m23 = opts.max_order ? std::min<std::size_t>(opts.max_order, 20) : 20;
  for (std::size_t m = 1; m <= m23; ++m) {
    for (const Rational& a : as) {
      std::ostringstream os;
      os << "Hurwitz identity at m=" << m << " a=" << a;
      check.expect(theorem23_check(m, a).holds(), os.str());
    }
  }
  for (std::size_t n = 0; n <= 30; ++n) {
    std::ostringstream os;
    os << "hurwitz at a=1 equals zeta at n=" << n;
    check.expect(hurwitz_neg(n, Rational(1)) == zeta_neg(n), os.str());
  }
  for (std::size_t k = 1; k <= 14; ++k) {
    std::ostringstream os;
    os << "trivial zero at -" << 2 * k;
    check.expect(zeta_neg(2 * k).is_zero(), os.str());
  }
  return r;
}

SuiteResult suite_vectors(const Options& opts) {
  SuiteResult r{.name = "vectors"};
  Checker check(r);
  const std::size_t K = opts.max_order ? opts.max_order : 20;
  const EgfSeq id = identity(K);
  const EgfSeq gm1 = geometric(Rational(-1), K);
  const EgfSeq mH = hadamard(gm1, H_seq(K));
  const EgfSeq mB = hadamard(gm1, bernoulli_numbers(K));
  const EgfSeq w = minus_z_seq(K);
  const EgfSeq Z = zeta_neg_vector(K);
  check.expect(sub(id, mH) == star(mH, star(w, Z)),
               "zeta vector against signed harmonic");
  check.expect(sub(mB, id) == star(id, star(w, Z)),
               "zeta vector against signed Bernoulli");
  for (const Rational& a : {Rational(1, 2), Rational(1, 3)}) {
    std::ostringstream os;
    os << "Hurwitz vector identity at a=" << a;
    check.expect(sub(bernoulli_poly_seq(a, K), id) == star(w, hurwitz_neg_vector(K, a)),
                 os.str());
  }
  const std::size_t K18 = opts.max_order ? opts.max_order : 30;
  const EgfSeq g30 = geometric(Rational(-1), K18);
  check.expect(star(hadamard(g30, bernoulli_numbers(K18)), hadamard(g30, H_seq(K18))) ==
                   identity(K18),
               "signed inverse pair at order 30");
  return r;
}

SuiteResult suite_fwd_diff(const Options& opts) {
  SuiteResult r{.name = "fwd-diff"};
  Checker check(r);
  Rng rng(opts.seed ^ 0xfd);
  const std::size_t max_len = opts.max_order ? opts.max_order : 20;
  for (std::size_t it = 0; it < 100; ++it) {
    const std::size_t len = rng.size(1, max_len);
    ValueTable<Rational> f;
    f.values.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
      f.values.push_back(rng.rational());
    }
    const ValueTable<Rational> rec = diff_table_recursive(f);
    const EgfSeq via_star = diff_seq_via_star(f);
    bool ok = true;
    for (std::size_t n = 0; n < len; ++n) {
      const Rational direct = forward_diff(f, n);
      if (direct != rec.values[n] || direct != via_star[n]) {
        ok = false;
        break;
      }
    }
    check.expect(ok, describe("triple-route agreement", it));
  }
  // linearity
  for (std::size_t it = 0; it < 50; ++it) {
    const std::size_t len = rng.size(1, max_len);
    ValueTable<Rational> f, g, combo;
    const Rational alpha = rng.rational();
    const Rational beta = rng.rational();
    for (std::size_t i = 0; i < len; ++i) {
      f.values.push_back(rng.rational());
      g.values.push_back(rng.rational());
      combo.values.push_back(alpha * f.values[i] + beta * g.values[i]);
    }
    bool ok = true;
    for (std::size_t n = 0; n < len; ++n) {
      if (forward_diff(combo, n) != alpha * forward_diff(f, n) + beta * forward_diff(g, n)) {
        ok = false;
        break;
      }
    }
    check.expect(ok, describe("linearity", it));
  }
  // polynomial tables: differences of order > deg vanish, order deg hits d! * lead
  for (std::size_t it = 0; it < 25; ++it) {
    const std::size_t deg = rng.size(0, 5);
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k <= deg; ++k) {
      coeffs.push_back(rng.rational());
    }
    coeffs[deg] = rng.nonzero_rational();
    const Poly p{std::vector<Rational>(coeffs)};
    ValueTable<Rational> f;
    const std::size_t len = deg + 4;
    for (std::size_t i = 0; i < len; ++i) {
      f.values.push_back(p.eval(Rational(static_cast<long>(i))));
    }
    bool ok = forward_diff(f, deg) == Rational(factorial(deg)) * coeffs[deg];
    for (std::size_t n = deg + 1; n < len && ok; ++n) {
      ok = forward_diff(f, n).is_zero();
    }
    check.expect(ok, describe("degree annihilation", it));
  }
  return r;
}

SuiteResult suite_integral(const Options& opts) {
  SuiteResult r{.name = "integral"};
  Checker check(r);
  const std::size_t n_max = opts.max_order ? opts.max_order : 25;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const ShiftedSeq S = s_poly_shifted(n);
    const Rational integral = definite_integral_01(S);
    std::ostringstream os;
    os << "integral equals zeta(-" << n << ")";
    check.expect(integral == zeta_neg(n), os.str());

    // closed chain: ((-1)^{n+1}/((n+1)(n+2))) sum C(n+2,k) B_k = (-1)^n B_{n+1}/(n+1)
    const EgfSeq B = bernoulli_numbers(n + 2);
    const std::vector<mpz_class> row = binomial_row(n + 2);
    Rational sum;
    for (std::size_t k = 0; k <= n; ++k) {
      sum += Rational(row[k]) * B[k];
    }
    Rational chain_a = sum / Rational(mpz_class((n + 1) * (n + 2)));
    if (n % 2 == 0) {
      chain_a = -chain_a;  // (-1)^{n+1}
    }
    Rational chain_b = B[n + 1] / Rational(static_cast<long>(n) + 1);
    if (n % 2 == 1) {
      chain_b = -chain_b;
    }
    std::ostringstream os2;
    os2 << "closed-form chain at n=" << n;
    check.expect(integral == chain_a && chain_a == chain_b, os2.str());
  }
  // shift mutual inverse and basis round trip
  Rng rng(opts.seed ^ 0x41);
  for (std::size_t it = 0; it < 50; ++it) {
    const std::size_t deg = rng.size(0, 15);
    std::vector<Rational> c;
    for (std::size_t k = 0; k <= deg; ++k) {
      c.push_back(rng.rational());
    }
    const Poly p{std::move(c)};
    check.expect(to_poly(from_poly(p)) == p, describe("basis round trip", it));
    const ShiftedSeq s = from_poly(p);
    check.expect(differentiate_shifted(integrate_shifted(s)) == s,
                 describe("shift mutual inverse", it));
  }
  for (std::size_t n = 0; n <= 15; ++n) {
    std::ostringstream os;
    os << "shifted and monomial power-sum forms agree at n=" << n;
    check.expect(to_poly(s_poly_shifted(n)) == s_poly(n), os.str());
  }
  return r;
}

SuiteResult suite_zeta_series(const Options& opts) {
  SuiteResult r{.name = "zeta-series"};
  Checker check(r);
  const mpfr_prec_t prec = 128;
  const std::size_t N = opts.max_order ? opts.max_order : 40;
  const BigReal tol = BigReal::from_string("1e-8", prec);
  for (long s_int : {2L, 3L, 4L}) {
    const BigComplex s(BigReal(s_int, prec));
    const ZetaReport report = zeta_via_differences(s, N, prec);
    std::ostringstream os;
    os << "series matches reference at s=" << s_int;
    check.expect(report.abs_error < tol, os.str());
    if (s_int == 2) {
      const BigReal basel = BigReal::pi(prec) * BigReal::pi(prec) / BigReal(6L, prec);
      check.expect(abs(report.final.real() - basel) < tol && report.final.imag().is_zero(),
                   "series matches pi^2/6 at s=2");
    }
  }
  // each row equals the factorial-normalized forward difference of the
  // gamma-weighted table f(i) = i! (1+i)^{-s}
  {
    const mpfr_prec_t wp = prec + 64;
    const BigComplex s(BigReal(2L, prec));
    const ZetaReport report = zeta_via_differences(s, 20, prec);
    const BigReal e_const = BigReal::e(prec);
    ValueTable<BigReal> table;
    mpz_class fact = 1;
    for (std::size_t i = 0; i <= 20; ++i) {
      if (i > 0) {
        fact *= static_cast<unsigned long>(i);
      }
      table.values.push_back(BigReal(fact, wp) *
                             pow_real_base(BigReal(static_cast<long>(i) + 1, wp),
                                           BigComplex(BigReal(-2L, wp)))
                                 .real());
    }
    const BigReal tol_bits = BigReal::pow2(-(static_cast<long>(prec) - 16), prec);
    bool ok = true;
    for (std::size_t n = 1; n <= 20 && ok; ++n) {
      const BigComplex row_n =
          (report.partial_sums[n] - report.partial_sums[n - 1]) / e_const;
      const BigReal expected = forward_diff(table, n, prec) / BigReal(factorial(n), prec);
      ok = abs(row_n.real() - expected) < tol_bits && row_n.imag().is_zero();
    }
    check.expect(ok, "rows equal normalized forward differences");
  }
  return r;
}

using SuiteFn = std::function<SuiteResult(const Options&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"lemma-1-2", suite_lemma_1_2},
      {"lemma-1-4", suite_lemma_1_4},
      {"bernoulli", suite_bernoulli},
      {"faulhaber", suite_faulhaber},
      {"polynomials", suite_polynomials},
      {"theorems", suite_theorems},
      {"vectors", suite_vectors},
      {"fwd-diff", suite_fwd_diff},
      {"integral", suite_integral},
      {"zeta-series", suite_zeta_series},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) {
      n.push_back(name);
    }
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
  if (name == "all") {
    SuiteResult merged{.name = "all"};
    for (const SuiteResult& r : run_all(opts)) {
      merged.cases += r.cases;
      merged.failures += r.failures;
      for (const std::string& m : r.messages) {
        if (merged.messages.size() < 8) {
          merged.messages.push_back(r.name + ": " + m);
        }
      }
    }
    return merged;
  }
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name == name) {
      return fn(opts);
    }
  }
  throw std::invalid_argument("unknown suite: \"" + name + "\"");
}

std::vector<SuiteResult> run_all(const Options& opts) {
  std::vector<SuiteResult> results;
  results.reserve(registry().size());
  for (const auto& [name, fn] : registry()) {
    results.push_back(fn(opts));
  }
  return results;
}

}  // namespace egfkit::verify
