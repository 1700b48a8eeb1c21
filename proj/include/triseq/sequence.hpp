#pragma once

// Exact terms of generalized Tribonacci sequences for all integer indices,
// summation, the D_n determinant and the Howard addition identity.

#include <vector>

#include "triseq/params.hpp"

namespace triseq {

/// V_n, exact.  Forward iteration for n >= 0; for n < 0 the backward
/// extension V_{-n} = -(s/t)V_{-(n-1)} - (r/t)V_{-(n-2)} + (1/t)V_{-(n-3)},
/// which requires t != 0.
Rational seq_term(const TriParams& params, long n);

/// The window V_lo..V_hi (inclusive) as a vector.
std::vector<Rational> seq_range(const TriParams& params, long lo, long hi);

/// U_n = V_n(0, 0, 1; r, s, t).
Rational u_term(const Rational& r, const Rational& s, const Rational& t, long n);

/// Sum of V_0..V_n via the closed formula
///   (V_{n+2} + (1-r)V_{n+1} + tV_n + (r+s-1)V_0 + (r-1)V_1 - V_2) / (r+s+t-1);
/// requires r+s+t != 1.
Rational sum_scalar(const TriParams& params, long n);

/// The 4x4 determinant with rows (X_k, Y_k, Y_{k+1}, Y_{k+2}) for
/// k = n, 2, 1, 0.  Zero for any two sequences sharing (r, s, t).
Rational det_D(const TriParams& x_params, const TriParams& y_params, long n);

/// Left side minus right side of
///   V_{n+2m} = J_m V_{n+m} - t^m J_{-m} V_n + t^m V_{n-m}
/// with J = V(3, r, r^2+2s; r, s, t).  Requires t != 0.
Rational howard_residual(const TriParams& params, long n, long m);

}  // namespace triseq
