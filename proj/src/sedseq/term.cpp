#include "sedseq/term.hpp"

#include <stdexcept>

#include "triseq/sequence.hpp"

namespace sedseq {

SedenionTerm sed_term(const triseq::TriParams& params, long n) {
  std::vector<Rational> window = triseq::seq_range(params, n, n + 15);
  return SedenionTerm{n, RatElement(4, std::move(window))};
}

RatElement sed_conjugate(const SedenionTerm& x) { return cdalg::conjugate(x.value); }

Rational sed_norm_direct(const SedenionTerm& x) { return cdalg::norm_sq(x.value); }

std::vector<SedenionTerm> gf_coefficients(const triseq::TriParams& params,
                                          std::size_t count) {
  if (count == 0) throw std::invalid_argument("gf_coefficients requires count >= 1");
  const RatElement v0 = sed_term(params, 0).value;
  const RatElement v1 = sed_term(params, 1).value;
  const RatElement v2 = sed_term(params, 2).value;
  // Numerator N0 + N1 x + N2 x^2 over 1 - r x - s x^2 - t x^3; the series
  // coefficients then satisfy c_k = N_k + r c_{k-1} + s c_{k-2} + t c_{k-3}.
  const RatElement n1 = v1 - params.r * v0;
  const RatElement n2 = v2 - params.r * v1 - params.s * v0;

  std::vector<SedenionTerm> out;
  out.reserve(count);
  out.push_back(SedenionTerm{0, v0});
  if (count >= 2) out.push_back(SedenionTerm{1, n1 + params.r * out[0].value});
  if (count >= 3) {
    out.push_back(SedenionTerm{2, n2 + params.r * out[1].value + params.s * out[0].value});
  }
  for (std::size_t k = 3; k < count; ++k) {
    RatElement next = params.r * out[k - 1].value + params.s * out[k - 2].value +
                      params.t * out[k - 3].value;
    out.push_back(SedenionTerm{static_cast<long>(k), std::move(next)});
  }
  return out;
}

RatElement sed_sum(const triseq::TriParams& params, long n) {
  if (n < 0) throw std::invalid_argument("sed_sum requires n >= 0");
  const Rational eps = params.r + params.s + params.t - 1;
  if (eps == 0) {
    throw std::domain_error("summation formula singular: r + s + t - 1 = 0");
  }
  const Rational mu =
      (params.r + params.s - 1) * params.v0 + (params.r - 1) * params.v1 - params.v2;

  const RatElement top = sed_term(params, n + 2).value +
                         Rational(1 - params.r) * sed_term(params, n + 1).value +
                         params.t * sed_term(params, n).value;
  const std::vector<Rational> head = triseq::seq_range(params, 0, 14);

  RatElement out(4);
  Rational prefix(0);  // V_0 + ... + V_{s-1}
  for (std::size_t s = 0; s < 16; ++s) {
    if (s > 0) prefix += head[s - 1];
    out[s] = (top[s] + mu - eps * prefix) / eps;
  }
  return out;
}

}  // namespace sedseq
