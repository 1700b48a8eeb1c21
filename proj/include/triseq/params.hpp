#pragma once

// Parameter sets for third-order linear recurrences
//   V_n = r*V_{n-1} + s*V_{n-2} + t*V_{n-3},   V_0, V_1, V_2 given,
// together with the catalog of named special cases.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace triseq {

using Rational = mpq_class;
using Integer = mpz_class;

/// The six defining numbers of a generalized Tribonacci sequence.
struct TriParams {
  Rational v0, v1, v2;  // initial values
  Rational r, s, t;     // recurrence coefficients

  bool operator==(const TriParams& other) const {
    return v0 == other.v0 && v1 == other.v1 && v2 == other.v2 && r == other.r &&
           s == other.s && t == other.t;
  }
  bool same_recurrence(const TriParams& other) const {
    return r == other.r && s == other.s && t == other.t;
  }
};

struct NamedSequence {
  std::string name;
  TriParams params;
};

/// The twelve named sequences, in catalog order.
const std::vector<NamedSequence>& sequence_catalog();

/// Looks a sequence up by name; throws std::invalid_argument listing the
/// valid names otherwise.
NamedSequence named_sequence(const std::string& name);

/// Parses "p/q" or a bare integer, with optional sign.  Result is canonical.
Rational parse_rational(const std::string& text);

/// Decimal string for integers, "p/q" otherwise.  Round-trips through
/// parse_rational exactly.
std::string format_rational(const Rational& value);

/// value^n for integer n (n < 0 requires value != 0).
Rational rational_pow(const Rational& value, long n);

}  // namespace triseq
