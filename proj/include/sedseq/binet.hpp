#pragma once

// Root-based evaluation of sedenion terms: both Binet forms and the
// closed-form norm.

#include <complex>

#include "cdalg/element.hpp"
#include "sedseq/term.hpp"
#include "triseq/roots.hpp"

namespace sedseq {

using CxElement = cdalg::Element<std::complex<double>>;

/// alpha-hat = sum_s alpha^s e_s, and likewise for beta, gamma.
struct RootSedenions {
  CxElement alpha_hat{4}, beta_hat{4}, gamma_hat{4};
};

RootSedenions root_sedenions(const triseq::RootData& roots);

CxElement to_complex(const RatElement& x);

enum class BinetForm {
  kMain,         // P alpha-hat alpha^n / ((alpha-beta)(alpha-gamma)) + ...
  kAlternative,  // ((alpha^2 - r alpha) V-hat_0 + alpha V-hat_1 + t V-hat_-1) alpha^n / ... + ...
};

/// Componentwise imaginary parts are numerical noise; both forms agree with
/// the exact term within 1e-8 relative per coefficient.  Negative n and the
/// alternative form require t != 0.
CxElement sed_binet(const triseq::TriParams& params, long n, BinetForm form);

/// Closed-form norm evaluated with the geometric partial sums
/// x-tilde = 1 + x^2 + ... + x^30 and xy-tilde = 1 + xy + ... + (xy)^15:
///   ((beta-gamma)^2 P^2 a-tilde alpha^2n + (gamma-alpha)^2 Q^2 b-tilde beta^2n
///    + (alpha-beta)^2 R^2 g-tilde gamma^2n
///    + 2(beta-gamma)(gamma-alpha) PQ ab-tilde (alpha beta)^n
///    + 2(beta-gamma)(alpha-beta) PR ag-tilde (alpha gamma)^n
///    + 2(gamma-alpha)(alpha-beta) QR bg-tilde (beta gamma)^n) / psi^2
/// with psi = (alpha-beta)(alpha-gamma)(beta-gamma).
double sed_norm_closed(const triseq::TriParams& params, long n);

}  // namespace sedseq
