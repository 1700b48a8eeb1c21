#pragma once

// Generalized Tribonacci sedenions: the level-4 element whose sixteen
// coefficients are consecutive sequence values, with exact conjugate, norm,
// generating-function coefficients and summation.

#include <vector>

#include "cdalg/element.hpp"
#include "triseq/params.hpp"

namespace sedseq {

using Rational = triseq::Rational;
using RatElement = cdalg::Element<Rational>;

/// V-hat_n: coefficient s is V_{n+s} for s = 0..15.
struct SedenionTerm {
  long n = 0;
  RatElement value{4};
};

SedenionTerm sed_term(const triseq::TriParams& params, long n);

/// V_n - sum_{s>=1} V_{n+s} e_s.
RatElement sed_conjugate(const SedenionTerm& x);

/// Exact sum of the sixteen squared coefficients; equals the e0 coefficient
/// of value * conjugate(value).
Rational sed_norm_direct(const SedenionTerm& x);

/// Power-series coefficients 0..count-1 of
///   (V-hat_0 + (V-hat_1 - r V-hat_0) x + (V-hat_2 - r V-hat_1 - s V-hat_0) x^2)
///     / (1 - r x - s x^2 - t x^3),
/// exact; coefficient k equals sed_term(k).
std::vector<SedenionTerm> gf_coefficients(const triseq::TriParams& params,
                                          std::size_t count);

/// Sum of V-hat_0..V-hat_n via the closed formula
///   (V-hat_{n+2} + (1-r) V-hat_{n+1} + t V-hat_n + phi) / (r+s+t-1)
/// with phi_s = mu - (r+s+t-1)(V_0 + ... + V_{s-1}),
/// mu = (r+s-1)V_0 + (r-1)V_1 - V_2.  Requires r+s+t != 1.
RatElement sed_sum(const triseq::TriParams& params, long n);

}  // namespace sedseq
