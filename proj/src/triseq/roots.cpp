#include "triseq/roots.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "triseq/sequence.hpp"

namespace triseq {

Rational discriminant(const TriParams& params) {
  const Rational &r = params.r, &s = params.s, &t = params.t;
  return r * r * r * t / 27 - r * r * s * s / 108 + r * s * t / 6 - s * s * s / 27 +
         t * t / 4;
}

RootData cubic_roots(const TriParams& params) {
  RootData data;
  data.delta = discriminant(params);
  if (data.delta <= 0) {
    std::ostringstream msg;
    msg << "irreducible-casus / repeated-root regime not supported: delta = "
        << format_rational(data.delta) << " <= 0";
    throw std::domain_error(msg.str());
  }
  const double r = params.r.get_d();
  const double s = params.s.get_d();
  const double t = params.t.get_d();

  const double sqrt_delta = std::sqrt(data.delta.get_d());
  const double base = r * r * r / 27.0 + r * s / 6.0 + t / 2.0;
  data.big_a = std::cbrt(base + sqrt_delta);
  data.big_b = std::cbrt(base - sqrt_delta);

  double alpha = r / 3.0 + data.big_a + data.big_b;
  // One Newton step on x^3 - r x^2 - s x - t recovers the digits the
  // cube-root route loses.  alpha is a simple root, so f'(alpha) != 0.
  const double f = ((alpha - r) * alpha - s) * alpha - t;
  const double fp = (3.0 * alpha - 2.0 * r) * alpha - s;
  if (fp != 0.0) alpha -= f / fp;
  data.alpha = alpha;

  // Deflate: beta, gamma are the roots of x^2 + (alpha - r) x + (alpha^2 - r alpha - s),
  // a conjugate pair since delta > 0.  Im(beta) > 0 matches the omega convention
  // (A > B whenever delta > 0).
  const double pair_sum = r - alpha;                    // beta + gamma
  const double pair_prod = (alpha - r) * alpha - s;     // beta * gamma
  const double disc = 4.0 * pair_prod - pair_sum * pair_sum;
  const double imag = std::sqrt(std::max(disc, 0.0)) / 2.0;
  data.beta = std::complex<double>(pair_sum / 2.0, imag);
  data.gamma = std::conj(data.beta);

  const double v0 = params.v0.get_d();
  const double v1 = params.v1.get_d();
  const double v2 = params.v2.get_d();
  data.p = std::complex<double>(v2 - pair_sum * v1 + pair_prod * v0, 0.0);
  data.q = v2 - (alpha + data.gamma) * v1 + alpha * data.gamma * v0;
  data.rr = std::conj(data.q);
  return data;
}

std::complex<double> complex_ipow(std::complex<double> z, long n) {
  if (n < 0) return 1.0 / complex_ipow(z, -n);
  std::complex<double> result(1.0, 0.0);
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

std::complex<double> binet_scalar_complex(const TriParams& params, long n) {
  const RootData rd = cubic_roots(params);
  const std::complex<double> alpha(rd.alpha, 0.0);
  const std::complex<double> denom_a = (alpha - rd.beta) * (alpha - rd.gamma);
  const std::complex<double> denom_b = (rd.beta - alpha) * (rd.beta - rd.gamma);
  const std::complex<double> denom_g = (rd.gamma - alpha) * (rd.gamma - rd.beta);
  if (n >= 0) {
    return rd.p * complex_ipow(alpha, n) / denom_a +
           rd.q * complex_ipow(rd.beta, n) / denom_b +
           rd.rr * complex_ipow(rd.gamma, n) / denom_g;
  }
  if (params.t == 0) {
    throw std::domain_error("Binet at negative indices requires t != 0");
  }
  const double r = params.r.get_d();
  const double s = params.s.get_d();
  const double t = params.t.get_d();
  const auto front = [&](std::complex<double> x) { return (x * x - r * x - s) / t; };
  const long m = -n;
  return front(alpha) * rd.p * complex_ipow(alpha, 1 - m) / denom_a +
         front(rd.beta) * rd.q * complex_ipow(rd.beta, 1 - m) / denom_b +
         front(rd.gamma) * rd.rr * complex_ipow(rd.gamma, 1 - m) / denom_g;
}

double binet_scalar(const TriParams& params, long n) {
  return binet_scalar_complex(params, n).real();
}

}  // namespace triseq
