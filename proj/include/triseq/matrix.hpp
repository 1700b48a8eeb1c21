#pragma once

// Companion-matrix formulation: M^n by binary exponentiation, the U-sequence
// entry structure of M^n, and the alternative companion shapes N and O.

#include <array>

#include "triseq/params.hpp"

namespace triseq {

/// 3x3 matrix with exact rational entries, row-major.
class Matrix3 {
 public:
  Matrix3() = default;
  explicit Matrix3(std::array<Rational, 9> entries) : m_(std::move(entries)) {}

  static Matrix3 identity();

  const Rational& at(int row, int col) const { return m_[row * 3 + col]; }
  Rational& at(int row, int col) { return m_[row * 3 + col]; }

  Matrix3 operator*(const Matrix3& other) const;
  std::array<Rational, 3> operator*(const std::array<Rational, 3>& v) const;
  bool operator==(const Matrix3& other) const { return m_ == other.m_; }

  /// M^n for n >= 0.
  Matrix3 pow(long n) const;

  Rational trace() const;
  Rational det() const;

  /// Coefficients (r, s, t) with char(x) = x^3 - r x^2 - s x - t.
  std::array<Rational, 3> char_poly_coeffs() const;

 private:
  std::array<Rational, 9> m_{};
};

/// M = [[r, s, t], [1, 0, 0], [0, 1, 0]];  det M = t.
Matrix3 companion_m(const Rational& r, const Rational& s, const Rational& t);

/// N = M transposed.
Matrix3 companion_n(const Rational& r, const Rational& s, const Rational& t);

/// O = [[0, 1, 0], [0, 0, 1], [t, s, r]]: the index-reversed companion;
/// O * (V_n, V_{n+1}, V_{n+2})^T = (V_{n+1}, V_{n+2}, V_{n+3})^T.
Matrix3 companion_o(const Rational& r, const Rational& s, const Rational& t);

/// M^n for n >= 0.  Entry (i, j) equals the U-sequence combination
///   [[U_{n+2}, sU_{n+1}+tU_n, tU_{n+1}],
///    [U_{n+1}, sU_n+tU_{n-1}, tU_n],
///    [U_n,     sU_{n-1}+tU_{n-2}, tU_{n-1}]].
Matrix3 matrix_power_entries(const Rational& r, const Rational& s, const Rational& t,
                             long n);

/// V_n for n >= 0 via (V_{n+2}, V_{n+1}, V_n)^T = M^n (V_2, V_1, V_0)^T.
Rational seq_term_matrix(const TriParams& params, long n);

}  // namespace triseq
