#include "triseq/matrix.hpp"

#include <stdexcept>

#include "triseq/sequence.hpp"

namespace triseq {

Matrix3 Matrix3::identity() {
  Matrix3 m;
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 2) = 1;
  return m;
}

Matrix3 Matrix3::operator*(const Matrix3& other) const {
  Matrix3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational sum(0);
      for (int k = 0; k < 3; ++k) sum += at(i, k) * other.at(k, j);
      out.at(i, j) = std::move(sum);
    }
  }
  return out;
}

std::array<Rational, 3> Matrix3::operator*(const std::array<Rational, 3>& v) const {
  std::array<Rational, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = at(i, 0) * v[0] + at(i, 1) * v[1] + at(i, 2) * v[2];
  }
  return out;
}

Matrix3 Matrix3::pow(long n) const {
  if (n < 0) throw std::invalid_argument("Matrix3::pow requires n >= 0");
  Matrix3 result = identity();
  Matrix3 base = *this;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rational Matrix3::trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

Rational Matrix3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

std::array<Rational, 3> Matrix3::char_poly_coeffs() const {
  // char(x) = x^3 - tr x^2 + (sum of principal 2x2 minors) x - det
  //         = x^3 - r x^2 - s x - t
  const Rational minors = (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) +
                          (at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0)) +
                          (at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0));
  return {trace(), -minors, det()};
}

Matrix3 companion_m(const Rational& r, const Rational& s, const Rational& t) {
  return Matrix3({r, s, t, Rational(1), Rational(0), Rational(0), Rational(0),
                  Rational(1), Rational(0)});
}

Matrix3 companion_n(const Rational& r, const Rational& s, const Rational& t) {
  return Matrix3({r, Rational(1), Rational(0), s, Rational(0), Rational(1), t,
                  Rational(0), Rational(0)});
}

Matrix3 companion_o(const Rational& r, const Rational& s, const Rational& t) {
  return Matrix3({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                  Rational(1), t, s, r});
}

Matrix3 matrix_power_entries(const Rational& r, const Rational& s, const Rational& t,
                             long n) {
  if (n < 0) throw std::invalid_argument("matrix_power_entries requires n >= 0");
  return companion_m(r, s, t).pow(n);
}

Rational seq_term_matrix(const TriParams& params, long n) {
  if (n < 0) throw std::invalid_argument("seq_term_matrix requires n >= 0");
  const Matrix3 mn = companion_m(params.r, params.s, params.t).pow(n);
  const std::array<Rational, 3> state = mn * std::array<Rational, 3>{params.v2, params.v1, params.v0};
  return state[2];  // (V_{n+2}, V_{n+1}, V_n)
}

}  // namespace triseq
