#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "cdalg/element.hpp"
#include "sedseq/binet.hpp"
#include "sedseq/identities.hpp"
#include "sedseq/term.hpp"
#include "triseq/matrix.hpp"
#include "triseq/roots.hpp"
#include "triseq/sequence.hpp"

namespace cli {

namespace {

using cdalg::Element;
using sedseq::BinetForm;
using sedseq::CxElement;
using triseq::Rational;
using triseq::TriParams;
using RatElem = Element<Rational>;

std::string rat_str(const Rational& v) { return triseq::format_rational(v); }

struct Collector {
  std::vector<CheckResult>& out;
  std::string suite;

  void pass_fail(const std::string& check, bool ok, double residual, bool exact,
                 const std::string& note = "") {
    out.push_back({suite, check, ok ? "PASS" : "FAIL", residual, exact, note});
  }
  void exact_zero(const std::string& check, const Rational& residual) {
    pass_fail(check, residual == 0, residual.get_d(), true);
  }
  void skip(const std::string& check, const std::string& reason) {
    out.push_back({suite, check, "SKIP", 0.0, false, reason});
  }
};

std::vector<triseq::NamedSequence> selected_sequences(const VerifyOptions& options) {
  if (!options.name) return triseq::sequence_catalog();
  return {triseq::named_sequence(*options.name)};
}

bool root_constructible(const TriParams& p) { return triseq::discriminant(p) > 0; }

std::string delta_reason(const TriParams& p) {
  return "delta = " + rat_str(triseq::discriminant(p)) + " <= 0";
}

Rational max_abs(const RatElem& x) {
  Rational worst(0);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rational a = abs(x[i]);
    if (a > worst) worst = a;
  }
  return worst;
}

// ---------------------------------------------------------------- tables ---

const std::vector<std::pair<std::string, std::vector<long>>> kForwardTable = {
    {"tribonacci", {0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149}},
    {"tribonacci-lucas", {3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443}},
    {"padovan", {1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12}},
    {"perrin", {3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17}},
    {"padovan-perrin", {0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4}},
    {"narayana", {0, 1, 1, 1, 2, 3, 4, 6, 9, 13, 19}},
    {"third-order-jacobsthal", {0, 1, 1, 2, 5, 9, 18, 37, 73, 146, 293}},
    {"third-order-jacobsthal-lucas", {2, 1, 5, 10, 17, 37, 74, 145, 293, 586, 1169}},
};

const std::vector<std::pair<std::string, std::vector<long>>> kBackwardTable = {
    {"tribonacci", {0, 0, 1, -1, 0, 2, -3, 1, 4, -8, 5}},
    {"tribonacci-lucas", {3, -1, -1, 5, -5, -1, 11, -15, 3, 23, -41}},
    {"padovan", {1, 0, 1, 0, 0, 1, -1, 1, 0, -1, 2}},
    {"perrin", {3, -1, 1, 2, -3, 4, -2, -1, 5, -7, 6}},
};

void suite_tables(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "tables"};
  bool matched = false;
  for (const auto& [name, row] : kForwardTable) {
    if (options.name && *options.name != name) continue;
    matched = true;
    const TriParams p = triseq::named_sequence(name).params;
    Rational worst(0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      Rational diff = abs(triseq::seq_term(p, static_cast<long>(i)) - row[i]);
      if (diff > worst) worst = diff;
    }
    col.exact_zero("table " + name + " n=0..10", worst);
  }
  for (const auto& [name, row] : kBackwardTable) {
    if (options.name && *options.name != name) continue;
    matched = true;
    const TriParams p = triseq::named_sequence(name).params;
    Rational worst(0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      Rational diff = abs(triseq::seq_term(p, -static_cast<long>(i)) - row[i]);
      if (diff > worst) worst = diff;
    }
    col.exact_zero("table " + name + " n=0..-10", worst);
  }
  if (options.name && !matched) {
    col.skip("table " + *options.name, "no reference table for this sequence");
  }
}

// ----------------------------------------------------------------- binet ---

void suite_binet(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "binet"};
  for (const auto& entry : selected_sequences(options)) {
    const TriParams& p = entry.params;
    if (!root_constructible(p)) {
      col.skip("binet scalar " + entry.name, delta_reason(p));
      col.skip("binet sedenion " + entry.name, delta_reason(p));
      continue;
    }
    double worst_scalar = 0.0;
    for (long n = -20; n <= 40; ++n) {
      const double exact = triseq::seq_term(p, n).get_d();
      const std::complex<double> value = triseq::binet_scalar_complex(p, n);
      const double scale = std::max(1.0, std::abs(exact));
      worst_scalar = std::max(worst_scalar, std::abs(value.real() - exact) / scale);
      worst_scalar = std::max(worst_scalar, std::abs(value.imag()) / scale);
    }
    col.pass_fail("binet scalar " + entry.name + " n=-20..40",
                  worst_scalar < options.tolerance_scalar, worst_scalar, false);

    double worst_sed = 0.0;
    for (long n = -10; n <= 30; ++n) {
      const RatElem exact = sedseq::sed_term(p, n).value;
      const CxElement main_form = sedseq::sed_binet(p, n, BinetForm::kMain);
      const CxElement alt_form = sedseq::sed_binet(p, n, BinetForm::kAlternative);
      for (std::size_t i = 0; i < 16; ++i) {
        const double e = exact[i].get_d();
        const double scale = std::max(1.0, std::abs(e));
        worst_sed = std::max(worst_sed, std::abs(main_form[i] - e) / scale);
        worst_sed = std::max(worst_sed, std::abs(alt_form[i] - e) / scale);
        worst_sed = std::max(worst_sed, std::abs(main_form[i] - alt_form[i]) / scale);
      }
    }
    col.pass_fail("binet sedenion both forms " + entry.name + " n=-10..30",
                  worst_sed < options.tolerance, worst_sed, false);
  }
}

// -------------------------------------------------------------------- gf ---

void suite_gf(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "gf"};
  for (const auto& entry : selected_sequences(options)) {
    const auto coeffs = sedseq::gf_coefficients(entry.params, 31);
    Rational worst(0);
    for (long k = 0; k <= 30; ++k) {
      const Rational diff = max_abs(coeffs[static_cast<std::size_t>(k)].value -
                                    sedseq::sed_term(entry.params, k).value);
      if (diff > worst) worst = diff;
    }
    col.exact_zero("gf coefficients " + entry.name + " k=0..30", worst);
  }
}

// ------------------------------------------------------------------- sum ---

void suite_sum(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "sum"};
  for (const auto& entry : selected_sequences(options)) {
    const TriParams& p = entry.params;
    if (p.r + p.s + p.t == 1) {
      col.skip("sum " + entry.name, "r + s + t - 1 = 0 (formula singular)");
      continue;
    }
    Rational direct(0);
    Rational worst_scalar(0);
    for (long n = 0; n <= 50; ++n) {
      direct += triseq::seq_term(p, n);
      const Rational diff = abs(triseq::sum_scalar(p, n) - direct);
      if (diff > worst_scalar) worst_scalar = diff;
    }
    col.exact_zero("sum scalar " + entry.name + " n=0..50", worst_scalar);

    RatElem direct_sed(4);
    Rational worst_sed(0);
    for (long n = 0; n <= 30; ++n) {
      direct_sed = direct_sed + sedseq::sed_term(p, n).value;
      const Rational diff = max_abs(sedseq::sed_sum(p, n) - direct_sed);
      if (diff > worst_sed) worst_sed = diff;
    }
    col.exact_zero("sum sedenion " + entry.name + " n=0..30", worst_sed);
  }
}

// ------------------------------------------------------------------ norm ---

void suite_norm(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "norm"};
  for (const auto& entry : selected_sequences(options)) {
    const TriParams& p = entry.params;
    if (!root_constructible(p)) {
      col.skip("norm closed " + entry.name, delta_reason(p));
      continue;
    }
    double worst = 0.0;
    for (long n = 0; n <= 20; ++n) {
      const double direct = sedseq::sed_norm_direct(sedseq::sed_term(p, n)).get_d();
      const double closed = sedseq::sed_norm_closed(p, n);
      worst = std::max(worst, std::abs(closed - direct) / std::max(1.0, direct));
    }
    col.pass_fail("norm closed vs direct " + entry.name + " n=0..20",
                  worst < options.tolerance, worst, false);
  }
}

// ------------------------------------------------------------ identities ---

void run_identity_range(Collector& col, const std::string& check, const std::string& id,
                        const TriParams& params, long n_lo, long n_hi, long m_lo,
                        long m_hi, double tol) {
  const bool exact = sedseq::identity_info(id).exact;
  double worst = 0.0;
  bool ok = true;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (long m = m_lo; m <= m_hi; ++m) {
      const auto rep = sedseq::check_identity(id, params, n, m, tol);
      worst = std::max(worst, rep.residual);
      ok = ok && rep.passed;
    }
  }
  col.pass_fail(check, ok, worst, exact);
}

void suite_identities(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "identities"};
  const TriParams trib = triseq::named_sequence("tribonacci").params;
  const double tol = options.tolerance;

  // Tribonacci / Tribonacci-Lucas statements.
  run_identity_range(col, "I1 tribonacci-lucas n=1..20", "I1", trib, 1, 20, 0, 0, tol);
  run_identity_range(col, "I5 addition n=0..20 m=3..10", "I5", trib, 0, 20, 3, 10, tol);
  run_identity_range(col, "I6 addition n=0..20 m=3..10", "I6", trib, 0, 20, 3, 10, tol);
  run_identity_range(col, "I12 44T from D_n n=-5..20", "I12", trib, -5, 20, 0, 0, tol);
  run_identity_range(col, "I13 K from D_n n=-5..20", "I13", trib, -5, 20, 0, 0, tol);

  for (const auto& entry : selected_sequences(options)) {
    const TriParams& p = entry.params;
    run_identity_range(col, "I2 conjugate sum " + entry.name + " n=-5..20", "I2", p, -5,
                       20, 0, 0, tol);

    if (root_constructible(p)) {
      run_identity_range(col, "I3 shift sum " + entry.name + " n=0..20", "I3", p, 0, 20,
                         0, 0, tol);
      run_identity_range(col, "I4 binomial sum " + entry.name + " n=0..20", "I4", p, 0,
                         20, 0, 0, tol);
      run_identity_range(col, "I7 scalar quadratic " + entry.name + " n=0..20", "I7", p,
                         0, 20, 0, 0, tol);
      run_identity_range(col, "I8 sedenion quadratic " + entry.name + " n=0..20", "I8", p,
                         0, 20, 0, 0, tol);
      run_identity_range(col, "I9 remark(a) " + entry.name, "I9", p, 0, 0, 0, 0, tol);
      run_identity_range(col, "I10 remark(b) " + entry.name, "I10", p, 0, 0, 0, 0, tol);
      run_identity_range(col, "I11 second term " + entry.name, "I11", p, 0, 0, 0, 0, tol);
    } else {
      for (const char* id : {"I3", "I4", "I7", "I8", "I9", "I10", "I11"}) {
        col.skip(std::string(id) + " " + entry.name, delta_reason(p));
      }
    }

    if (p.s == 1 && p.t == 1) {
      run_identity_range(col, "I14 matrix " + entry.name + " n=0..30", "I14", p, 0, 30, 0,
                         0, tol);
      run_identity_range(col, "I15 U expansion " + entry.name + " n=0..20", "I15", p, 0,
                         20, 0, 0, tol);
    } else {
      col.skip("I14 matrix " + entry.name, "matrix form requires s = 1 and t = 1");
      col.skip("I15 U expansion " + entry.name, "matrix form requires s = 1 and t = 1");
    }

    // Howard addition identity.
    Rational worst_howard(0);
    for (long n = -5; n <= 15; ++n) {
      for (long m = 0; m <= 8; ++m) {
        const Rational diff = abs(triseq::howard_residual(p, n, m));
        if (diff > worst_howard) worst_howard = diff;
      }
    }
    col.exact_zero("howard addition " + entry.name + " n=-5..15 m=0..8", worst_howard);
  }

  // D_n determinants across every compatible ordered pair in the selection.
  const auto& catalog = triseq::sequence_catalog();
  for (const auto& x : selected_sequences(options)) {
    for (const auto& y : catalog) {
      if (!x.params.same_recurrence(y.params)) continue;
      Rational worst(0);
      for (long n = -20; n <= 20; ++n) {
        const Rational diff = abs(triseq::det_D(x.params, y.params, n));
        if (diff > worst) worst = diff;
      }
      col.exact_zero("detD " + x.name + "/" + y.name + " n=-20..20", worst);
    }
  }
}

// ---------------------------------------------------------------- matrix ---

void suite_matrix(const VerifyOptions& options, std::vector<CheckResult>& out) {
  Collector col{out, "matrix"};
  for (const auto& entry : selected_sequences(options)) {
    const TriParams& p = entry.params;
    const Rational &r = p.r, &s = p.s, &t = p.t;

    Rational worst_term(0);
    for (long n = 0; n <= 60; ++n) {
      const Rational diff = abs(triseq::seq_term_matrix(p, n) - triseq::seq_term(p, n));
      if (diff > worst_term) worst_term = diff;
    }
    col.exact_zero("matrix term agreement " + entry.name + " n=0..60", worst_term);

    const auto u = [&](long i) { return triseq::u_term(r, s, t, i); };
    bool entries_ok = true;
    for (long n = 0; n <= 30 && entries_ok; ++n) {
      const triseq::Matrix3 mn = triseq::matrix_power_entries(r, s, t, n);
      const triseq::Matrix3 expected(
          {u(n + 2), Rational(s * u(n + 1) + t * u(n)), Rational(t * u(n + 1)),
           u(n + 1), Rational(s * u(n) + t * u(n - 1)), Rational(t * u(n)),
           u(n), Rational(s * u(n - 1) + t * u(n - 2)), Rational(t * u(n - 1))});
      entries_ok = (mn == expected);
    }
    col.pass_fail("matrix entry formula " + entry.name + " n=0..30", entries_ok,
                  entries_ok ? 0.0 : 1.0, true);

    bool det_ok = true;
    const triseq::Matrix3 m = triseq::companion_m(r, s, t);
    for (long n = 0; n <= 10; ++n) {
      det_ok = det_ok && (m.pow(n).det() == triseq::rational_pow(t, n));
    }
    col.pass_fail("matrix det(M^n) = t^n " + entry.name + " n=0..10", det_ok,
                  det_ok ? 0.0 : 1.0, true);

    const std::array<Rational, 3> want{r, s, t};
    const bool char_ok = triseq::companion_m(r, s, t).char_poly_coeffs() == want &&
                         triseq::companion_n(r, s, t).char_poly_coeffs() == want &&
                         triseq::companion_o(r, s, t).char_poly_coeffs() == want;
    col.pass_fail("matrix char poly M,N,O " + entry.name, char_ok, char_ok ? 0.0 : 1.0,
                  true);

    if (t == 1) {
      Rational worst_u(0);
      for (long n = 1; n <= 20; ++n) {
        const Rational diff = abs(u(-n) - (u(n + 1) * u(n + 1) - u(n + 2) * u(n)));
        if (diff > worst_u) worst_u = diff;
      }
      col.exact_zero("matrix U negative-index " + entry.name + " n=1..20", worst_u);
    }
  }
}

// ----------------------------------------------------------------- cdalg ---

RatElem random_element(std::mt19937& rng, int level) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  RatElem x(level);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    x[i] = q;
  }
  return x;
}

void suite_cdalg(std::vector<CheckResult>& out) {
  Collector col{out, "cdalg"};
  const auto basis = [](int level, std::size_t i) { return RatElem::basis(level, i); };

  col.exact_zero("zero-divisor (e3+e10)(e6-e15)",
                 max_abs((basis(4, 3) + basis(4, 10)) * (basis(4, 6) - basis(4, 15))));
  col.exact_zero("zero-divisor (e2-e14)(e3+e15)",
                 max_abs((basis(4, 2) - basis(4, 14)) * (basis(4, 3) + basis(4, 15))));

  {
    RatElem x(4), y(4);
    for (std::size_t i = 0; i < 16; ++i) {
      x[i] = Rational(static_cast<long>(i) + 1);
      y[i] = Rational(static_cast<long>(2 * i) + 3);
    }
    cdalg::OpCount ops;
    const RatElem counted = cdalg::multiply_counted(x, y, ops);
    const bool ok = ops.multiplications == 256 && ops.additions == 240 && counted == x * y;
    col.pass_fail("opcount sedenion product = 256 mult / 240 add", ok, ok ? 0.0 : 1.0,
                  true);

    bool formula_ok = true;
    for (int level = 0; level <= 5; ++level) {
      const auto cost = cdalg::naive_product_cost(level);
      const long long dim = 1LL << level;
      formula_ok = formula_ok && cost.multiplications == dim * dim &&
                   cost.additions == dim * (dim - 1);
    }
    col.pass_fail("opcount formula levels 0..5", formula_ok, formula_ok ? 0.0 : 1.0, true);
  }

  std::mt19937 rng(424242);
  {
    bool ok = true;
    for (int level = 0; level <= 5; ++level) {
      for (int round = 0; round < 6; ++round) {
        const RatElem x = random_element(rng, level);
        ok = ok && cdalg::conjugate(cdalg::conjugate(x)) == x;
      }
    }
    col.pass_fail("involution levels 0..5", ok, ok ? 0.0 : 1.0, true);
  }
  {
    bool ok = true;
    for (int level = 0; level <= 4; ++level) {
      const std::size_t n = std::size_t{1} << level;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const RatElem x = basis(level, i), y = basis(level, j);
          ok = ok && cdalg::conjugate(x * y) == cdalg::conjugate(y) * cdalg::conjugate(x);
        }
      }
    }
    col.pass_fail("anti-automorphism basis pairs levels 0..4", ok, ok ? 0.0 : 1.0, true);
  }
  {
    bool ok = true;
    for (int level = 0; level <= 5; ++level) {
      for (int round = 0; round < 4; ++round) {
        const RatElem x = random_element(rng, level);
        const RatElem expected = RatElem::scalar(level, cdalg::norm_sq(x));
        ok = ok && x * cdalg::conjugate(x) == expected &&
             cdalg::conjugate(x) * x == expected;
      }
    }
    col.pass_fail("norm identity levels 0..5", ok, ok ? 0.0 : 1.0, true);
  }
  {
    bool ok = true;
    Rational a(3, 2), b(-5, 3);
    a.canonicalize();
    b.canonicalize();
    for (int level = 0; level <= 4; ++level) {
      for (int round = 0; round < 3; ++round) {
        const RatElem x = random_element(rng, level);
        const RatElem y = random_element(rng, level);
        const RatElem z = random_element(rng, level);
        ok = ok && (a * x + b * y) * z == a * (x * z) + b * (y * z);
        ok = ok && z * (a * x + b * y) == a * (z * x) + b * (z * y);
      }
    }
    col.pass_fail("bilinearity levels 0..4", ok, ok ? 0.0 : 1.0, true);
  }
  {
    bool low_ok = true;
    for (int level = 0; level <= 1; ++level) {
      const std::size_t n = std::size_t{1} << level;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          low_ok = low_ok &&
                   basis(level, i) * basis(level, j) == basis(level, j) * basis(level, i);
        }
      }
    }
    bool witness_ok = true;
    for (int level = 2; level <= 5; ++level) {
      witness_ok = witness_ok && basis(level, 1) * basis(level, 2) !=
                                     basis(level, 2) * basis(level, 1);
    }
    col.pass_fail("commutativity holds <=1, witness fails at 2..5", low_ok && witness_ok,
                  (low_ok && witness_ok) ? 0.0 : 1.0, true);
  }
  {
    bool low_ok = true;
    for (int level = 0; level <= 2; ++level) {
      const std::size_t n = std::size_t{1} << level;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            const RatElem x = basis(level, i), y = basis(level, j), z = basis(level, k);
            low_ok = low_ok && (x * y) * z == x * (y * z);
          }
    }
    bool witness_ok = true;
    for (int level = 3; level <= 5; ++level) {
      const RatElem x = basis(level, 1), y = basis(level, 2), z = basis(level, 4);
      witness_ok = witness_ok && (x * y) * z != x * (y * z);
    }
    col.pass_fail("associativity holds <=2, witness fails at 3..5", low_ok && witness_ok,
                  (low_ok && witness_ok) ? 0.0 : 1.0, true);
  }
  {
    bool ok = true;
    for (int level = 0; level <= 4; ++level) {
      const std::size_t n = std::size_t{1} << level;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const RatElem x = basis(level, i), y = basis(level, j);
          ok = ok && (x * y) * x == x * (y * x);
        }
      }
    }
    col.pass_fail("flexibility basis triples levels 0..4", ok, ok ? 0.0 : 1.0, true);
  }
  {
    bool ok = true;
    for (int level = 0; level <= 3; ++level) {
      const std::size_t n = std::size_t{1} << level;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const RatElem x = basis(level, i), y = basis(level, j);
          ok = ok && cdalg::norm_sq(x * y) == cdalg::norm_sq(x) * cdalg::norm_sq(y);
        }
      }
    }
    const RatElem zd_x = basis(4, 3) + basis(4, 10);
    const RatElem zd_y = basis(4, 6) - basis(4, 15);
    const bool fails_at_4 = cdalg::norm_sq(zd_x * zd_y) == 0 &&
                            cdalg::norm_sq(zd_x) * cdalg::norm_sq(zd_y) == 4;
    col.pass_fail("norm multiplicativity holds <=3, zero divisors break it at 4",
                  ok && fails_at_4, (ok && fails_at_4) ? 0.0 : 1.0, true);
  }
}

}  // namespace

const std::vector<std::string> kSuiteNames = {
    "all", "tables", "binet", "gf", "sum", "norm", "identities", "matrix", "cdalg"};

bool is_suite(const std::string& name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  const auto want = [&](const char* suite) {
    return options.suite == "all" || options.suite == suite;
  };
  if (want("tables")) suite_tables(options, out);
  if (want("binet")) suite_binet(options, out);
  if (want("gf")) suite_gf(options, out);
  if (want("sum")) suite_sum(options, out);
  if (want("norm")) suite_norm(options, out);
  if (want("identities")) suite_identities(options, out);
  if (want("matrix")) suite_matrix(options, out);
  if (want("cdalg")) suite_cdalg(out);
  return out;
}

}  // namespace cli
