#include "triseq/sequence.hpp"

#include <array>
#include <stdexcept>

namespace triseq {

namespace {

void require_negatives_defined(const TriParams& params) {
  if (params.t == 0) {
    throw std::domain_error("negative extension undefined: t = 0");
  }
}

}  // namespace

Rational seq_term(const TriParams& params, long n) {
  if (n >= 0) {
    if (n == 0) return params.v0;
    if (n == 1) return params.v1;
    if (n == 2) return params.v2;
    Rational a = params.v0, b = params.v1, c = params.v2;
    for (long k = 3; k <= n; ++k) {
      Rational next = params.r * c + params.s * b + params.t * a;
      a = std::move(b);
      b = std::move(c);
      c = std::move(next);
    }
    return c;
  }
  require_negatives_defined(params);
  // Walk down: V_{k-1} = (V_{k+2} - r V_{k+1} - s V_k) / t.
  Rational lo = params.v0, mid = params.v1, hi = params.v2;
  for (long k = 0; k > n; --k) {
    Rational prev = (hi - params.r * mid - params.s * lo) / params.t;
    hi = std::move(mid);
    mid = std::move(lo);
    lo = std::move(prev);
  }
  return lo;
}

std::vector<Rational> seq_range(const TriParams& params, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("seq_range: lo > hi");
  if (lo < 0) require_negatives_defined(params);
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  const auto put = [&](long n, Rational v) {
    if (n >= lo && n <= hi) out[static_cast<std::size_t>(n - lo)] = std::move(v);
  };
  put(0, params.v0);
  put(1, params.v1);
  put(2, params.v2);
  if (hi > 2) {
    Rational a = params.v0, b = params.v1, c = params.v2;
    for (long k = 3; k <= hi; ++k) {
      Rational next = params.r * c + params.s * b + params.t * a;
      a = std::move(b);
      b = std::move(c);
      c = next;
      put(k, std::move(next));
    }
  }
  if (lo < 0) {
    Rational l = params.v0, m = params.v1, h = params.v2;
    for (long k = -1; k >= lo; --k) {
      Rational prev = (h - params.r * m - params.s * l) / params.t;
      h = std::move(m);
      m = std::move(l);
      l = prev;
      put(k, std::move(prev));
    }
  }
  return out;
}

Rational u_term(const Rational& r, const Rational& s, const Rational& t, long n) {
  return seq_term(TriParams{Rational(0), Rational(0), Rational(1), r, s, t}, n);
}

Rational sum_scalar(const TriParams& params, long n) {
  if (n < 0) throw std::invalid_argument("sum_scalar requires n >= 0");
  const Rational eps = params.r + params.s + params.t - 1;
  if (eps == 0) {
    throw std::domain_error("summation formula singular: r + s + t - 1 = 0");
  }
  const Rational numerator = seq_term(params, n + 2) + (1 - params.r) * seq_term(params, n + 1) +
                             params.t * seq_term(params, n) +
                             (params.r + params.s - 1) * params.v0 +
                             (params.r - 1) * params.v1 - params.v2;
  return numerator / eps;
}

namespace {

Rational det4(const std::array<std::array<Rational, 4>, 4>& m) {
  // Forced to Rational: gmpxx expression templates must not outlive their
  // operands.
  const auto det3 = [](const std::array<std::array<Rational, 3>, 3>& a) -> Rational {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  Rational total(0);
  for (int j = 0; j < 4; ++j) {
    std::array<std::array<Rational, 3>, 3> minor;
    for (int i = 1; i < 4; ++i) {
      int cc = 0;
      for (int jj = 0; jj < 4; ++jj) {
        if (jj == j) continue;
        minor[i - 1][cc++] = m[i][jj];
      }
    }
    const Rational cofactor = m[0][j] * det3(minor);
    total += (j % 2 == 0) ? cofactor : -cofactor;
  }
  return total;
}

}  // namespace

Rational det_D(const TriParams& x_params, const TriParams& y_params, long n) {
  if (!x_params.same_recurrence(y_params)) {
    throw std::invalid_argument("det_D: sequences must share (r, s, t)");
  }
  std::array<std::array<Rational, 4>, 4> rows;
  const long ks[4] = {n, 2, 1, 0};
  for (int i = 0; i < 4; ++i) {
    const long k = ks[i];
    rows[i] = {seq_term(x_params, k), seq_term(y_params, k), seq_term(y_params, k + 1),
               seq_term(y_params, k + 2)};
  }
  return det4(rows);
}

Rational howard_residual(const TriParams& params, long n, long m) {
  if (params.t == 0) throw std::domain_error("addition identity requires t != 0");
  const TriParams lucas{Rational(3), params.r, params.r * params.r + 2 * params.s,
                        params.r, params.s, params.t};
  const Rational tm = rational_pow(params.t, m);
  const Rational lhs = seq_term(params, n + 2 * m);
  const Rational rhs = seq_term(lucas, m) * seq_term(params, n + m) -
                       tm * seq_term(lucas, -m) * seq_term(params, n) +
                       tm * seq_term(params, n - m);
  return lhs - rhs;
}

}  // namespace triseq
