#include "triseq/params.hpp"

#include <sstream>
#include <stdexcept>

namespace triseq {

namespace {

TriParams make(long v0, long v1, long v2, long r, long s, long t) {
  return TriParams{Rational(v0), Rational(v1), Rational(v2),
                   Rational(r), Rational(s), Rational(t)};
}

}  // namespace

const std::vector<NamedSequence>& sequence_catalog() {
  static const std::vector<NamedSequence> catalog = {
      {"tribonacci", make(0, 1, 1, 1, 1, 1)},
      {"tribonacci-lucas", make(3, 1, 3, 1, 1, 1)},
      {"padovan", make(1, 1, 1, 0, 1, 1)},
      {"pell-padovan", make(1, 1, 1, 0, 2, 1)},
      {"jacobsthal-padovan", make(1, 1, 1, 0, 1, 2)},
      {"perrin", make(3, 0, 2, 0, 1, 1)},
      {"pell-perrin", make(3, 0, 2, 0, 2, 1)},
      {"jacobsthal-perrin", make(3, 0, 2, 0, 1, 2)},
      {"padovan-perrin", make(0, 0, 1, 0, 1, 1)},
      {"narayana", make(0, 1, 1, 1, 0, 1)},
      {"third-order-jacobsthal", make(0, 1, 1, 1, 1, 2)},
      {"third-order-jacobsthal-lucas", make(2, 1, 5, 1, 1, 2)},
  };
  return catalog;
}

NamedSequence named_sequence(const std::string& name) {
  for (const auto& entry : sequence_catalog()) {
    if (entry.name == name) return entry;
  }
  std::ostringstream msg;
  msg << "unknown sequence \"" << name << "\"; valid names:";
  for (const auto& entry : sequence_catalog()) msg << " " << entry.name;
  throw std::invalid_argument(msg.str());
}

Rational parse_rational(const std::string& text) {
  Rational value;
  try {
    value = Rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: \"" + text + "\"");
  }
  if (value.get_den() == 0) {
    throw std::invalid_argument("zero denominator: \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_str();  // canonical "p" or "p/q"
}

Rational rational_pow(const Rational& value, long n) {
  if (n < 0) {
    if (value == 0) throw std::domain_error("0 cannot be raised to a negative power");
    return 1 / rational_pow(value, -n);
  }
  Rational result(1);
  Rational base = value;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace triseq
