#include "sedseq/binet.hpp"

#include <stdexcept>

#include "triseq/sequence.hpp"

namespace sedseq {

using std::complex;
using triseq::complex_ipow;

RootSedenions root_sedenions(const triseq::RootData& roots) {
  RootSedenions out;
  const complex<double> alpha(roots.alpha, 0.0);
  complex<double> pa(1.0, 0.0), pb(1.0, 0.0), pg(1.0, 0.0);
  for (std::size_t s = 0; s < 16; ++s) {
    out.alpha_hat[s] = pa;
    out.beta_hat[s] = pb;
    out.gamma_hat[s] = pg;
    pa *= alpha;
    pb *= roots.beta;
    pg *= roots.gamma;
  }
  return out;
}

CxElement to_complex(const RatElement& x) {
  CxElement out(x.level());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out[i] = complex<double>(x[i].get_d(), 0.0);
  }
  return out;
}

CxElement sed_binet(const triseq::TriParams& params, long n, BinetForm form) {
  const triseq::RootData rd = triseq::cubic_roots(params);
  const complex<double> alpha(rd.alpha, 0.0);
  const complex<double> denom_a = (alpha - rd.beta) * (alpha - rd.gamma);
  const complex<double> denom_b = (rd.beta - alpha) * (rd.beta - rd.gamma);
  const complex<double> denom_g = (rd.gamma - alpha) * (rd.gamma - rd.beta);
  const RootSedenions hats = root_sedenions(rd);

  if (form == BinetForm::kMain) {
    if (n >= 0) {
      return complex<double>(rd.p * complex_ipow(alpha, n) / denom_a) * hats.alpha_hat +
             complex<double>(rd.q * complex_ipow(rd.beta, n) / denom_b) * hats.beta_hat +
             complex<double>(rd.rr * complex_ipow(rd.gamma, n) / denom_g) * hats.gamma_hat;
    }
    if (params.t == 0) {
      throw std::domain_error("Binet at negative indices requires t != 0");
    }
    const double r = params.r.get_d();
    const double s = params.s.get_d();
    const double t = params.t.get_d();
    const auto front = [&](complex<double> x) { return (x * x - r * x - s) / t; };
    const long m = -n;
    return complex<double>(front(alpha) * rd.p * complex_ipow(alpha, 1 - m) / denom_a) *
               hats.alpha_hat +
           complex<double>(front(rd.beta) * rd.q * complex_ipow(rd.beta, 1 - m) / denom_b) *
               hats.beta_hat +
           complex<double>(front(rd.gamma) * rd.rr * complex_ipow(rd.gamma, 1 - m) / denom_g) *
               hats.gamma_hat;
  }

  // Alternative form, valid for any integer n; needs the n = -1 term.
  if (params.t == 0) {
    throw std::domain_error("alternative Binet form requires t != 0");
  }
  const double r = params.r.get_d();
  const double t = params.t.get_d();
  const CxElement v0 = to_complex(sed_term(params, 0).value);
  const CxElement v1 = to_complex(sed_term(params, 1).value);
  const CxElement vm1 = to_complex(sed_term(params, -1).value);

  const auto piece = [&](complex<double> root, complex<double> denom) {
    const CxElement numerator = complex<double>(root * root - r * root) * v0 +
                                root * v1 + complex<double>(t, 0.0) * vm1;
    return complex<double>(complex_ipow(root, n) / denom) * numerator;
  };
  return piece(alpha, (alpha - rd.gamma) * (alpha - rd.beta)) +
         piece(rd.beta, (rd.beta - rd.gamma) * (rd.beta - alpha)) +
         piece(rd.gamma, (rd.gamma - alpha) * (rd.gamma - rd.beta));
}

double sed_norm_closed(const triseq::TriParams& params, long n) {
  const triseq::RootData rd = triseq::cubic_roots(params);
  const complex<double> alpha(rd.alpha, 0.0);
  const complex<double> beta = rd.beta;
  const complex<double> gamma = rd.gamma;

  const auto tilde_sq = [](complex<double> x) {  // 1 + x^2 + ... + x^30
    complex<double> sum(0.0, 0.0), pw(1.0, 0.0);
    const complex<double> x2 = x * x;
    for (int k = 0; k < 16; ++k) {
      sum += pw;
      pw *= x2;
    }
    return sum;
  };
  const auto tilde = [](complex<double> x) {  // 1 + x + ... + x^15
    complex<double> sum(0.0, 0.0), pw(1.0, 0.0);
    for (int k = 0; k < 16; ++k) {
      sum += pw;
      pw *= x;
    }
    return sum;
  };

  const complex<double> psi = (alpha - beta) * (alpha - gamma) * (beta - gamma);
  const complex<double> total =
      (beta - gamma) * (beta - gamma) * rd.p * rd.p * tilde_sq(alpha) *
          complex_ipow(alpha, 2 * n) +
      (gamma - alpha) * (gamma - alpha) * rd.q * rd.q * tilde_sq(beta) *
          complex_ipow(beta, 2 * n) +
      (alpha - beta) * (alpha - beta) * rd.rr * rd.rr * tilde_sq(gamma) *
          complex_ipow(gamma, 2 * n) +
      2.0 * (beta - gamma) * (gamma - alpha) * rd.p * rd.q * tilde(alpha * beta) *
          complex_ipow(alpha * beta, n) +
      2.0 * (beta - gamma) * (alpha - beta) * rd.p * rd.rr * tilde(alpha * gamma) *
          complex_ipow(alpha * gamma, n) +
      2.0 * (gamma - alpha) * (alpha - beta) * rd.q * rd.rr * tilde(beta * gamma) *
          complex_ipow(beta * gamma, n);
  return (total / (psi * psi)).real();
}

}  // namespace sedseq
