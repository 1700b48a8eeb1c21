#pragma once

// Characteristic roots of x^3 - r x^2 - s x - t in the Delta > 0 regime
// (one real root alpha, conjugate complex pair beta/gamma), and scalar
// Binet evaluation.

#include <complex>

#include "triseq/params.hpp"

namespace triseq {

/// Roots and Binet data for a fixed parameter set.  Only constructible when
/// Delta > 0.
struct RootData {
  double alpha = 0.0;
  std::complex<double> beta, gamma;  // gamma = conj(beta), Im(beta) > 0
  Rational delta;                    // exact discriminant expression
  double big_a = 0.0, big_b = 0.0;   // the real cube roots A, B
  // Binet numerators for the given initial values:
  //   P = V2 - (beta+gamma)V1 + beta*gamma*V0 (real),
  //   Q = V2 - (alpha+gamma)V1 + alpha*gamma*V0,  R = conj(Q).
  std::complex<double> p, q, rr;
};

/// Delta(r,s,t) = r^3 t/27 - r^2 s^2/108 + r s t/6 - s^3/27 + t^2/4, exact.
Rational discriminant(const TriParams& params);

/// Throws std::domain_error when Delta <= 0 (irreducible-casus /
/// repeated-root regime not supported).
RootData cubic_roots(const TriParams& params);

/// Binet formula value before taking the real part; the imaginary part is
/// numerical noise.  n < 0 uses the negative-subscript form and requires
/// t != 0.
std::complex<double> binet_scalar_complex(const TriParams& params, long n);

/// Real part of binet_scalar_complex.
double binet_scalar(const TriParams& params, long n);

/// z^n by binary exponentiation, inverting for n < 0.
std::complex<double> complex_ipow(std::complex<double> z, long n);

}  // namespace triseq
