#pragma once

// Cayley-Dickson algebra tower: exact construction, conjugation,
// multiplication, norm, basis tables and operation counting for the
// levels 0 (reals) through 5 (trigintaduonions).
//
// An element at level n is a pair (a, b) of level n-1 elements, stored as
// 2^n flat coefficients with a in the low half and b in the high half.
// The product rule is
//
//     (a,b)(c,d) = (ac - d̄b, da + bc̄)
//
// applied recursively down to plain scalar multiplication at level 0.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdalg {

inline constexpr int kMaxLevel = 5;

inline int check_level(int level) {
  if (level < 0 || level > kMaxLevel) {
    throw std::invalid_argument("level must be in 0..=" + std::to_string(kMaxLevel) +
                                ", got " + std::to_string(level));
  }
  return level;
}

/// Scalar-operation counter for the naive table-expansion product.
/// Subtractions count as additions; negations are free.
struct OpCount {
  long long multiplications = 0;
  long long additions = 0;
};

/// Multiplications and additions of one naive table-expansion product of
/// two dense elements: 4^level multiplications, 2^level*(2^level - 1)
/// additions.  Level 4 gives the classic 256 / 240.
inline OpCount naive_product_cost(int level) {
  check_level(level);
  const long long dim = 1LL << level;
  return OpCount{dim * dim, dim * (dim - 1)};
}

/// Element of the level-n Cayley-Dickson algebra with coefficients in a
/// scalar ring S (exact rationals, doubles or complex doubles; mixing
/// scalar kinds is a type error).
template <typename S>
class Element {
 public:
  explicit Element(int level)
      : level_(check_level(level)), coeffs_(std::size_t{1} << level, S(0)) {}

  Element(int level, std::vector<S> coeffs)
      : level_(check_level(level)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != (std::size_t{1} << level_)) {
      throw std::invalid_argument("expected 2^level coefficients");
    }
  }

  static Element zero(int level) { return Element(level); }

  /// Basis element e_i.  Encoding: e_i = (e_i, 0) for i < 2^(n-1),
  /// otherwise e_i = (0, e_{i - 2^(n-1)}).
  static Element basis(int level, std::size_t i) {
    Element e(level);
    if (i >= e.dim()) {
      throw std::out_of_range("basis index " + std::to_string(i) +
                              " out of range for level " + std::to_string(level));
    }
    e.coeffs_[i] = S(1);
    return e;
  }

  /// value * e0.
  static Element scalar(int level, S value) {
    Element e(level);
    e.coeffs_[0] = std::move(value);
    return e;
  }

  int level() const { return level_; }
  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<S>& coeffs() const { return coeffs_; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  S& operator[](std::size_t i) { return coeffs_[i]; }

  bool operator==(const Element& other) const = default;

 private:
  int level_;
  std::vector<S> coeffs_;
};

namespace detail {

template <typename S>
void require_same_level(const Element<S>& x, const Element<S>& y) {
  if (x.level() != y.level()) {
    throw std::invalid_argument("incompatible levels: " + std::to_string(x.level()) +
                                " vs " + std::to_string(y.level()));
  }
}

// In-place conjugate of a flat coefficient block: the real coefficient is
// fixed, every other one negates (the recursive (ā, -b) rule flattens to
// exactly this).
template <typename S>
void conjugate_block(std::span<S> x) {
  for (std::size_t i = 1; i < x.size(); ++i) x[i] = -x[i];
}

template <typename S>
std::vector<S> multiply_rec(std::span<const S> x, std::span<const S> y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const auto a = x.first(h);
  const auto b = x.last(h);
  const auto c = y.first(h);
  const auto d = y.last(h);

  std::vector<S> c_conj(c.begin(), c.end());
  conjugate_block(std::span<S>(c_conj));
  std::vector<S> d_conj(d.begin(), d.end());
  conjugate_block(std::span<S>(d_conj));

  const std::vector<S> ac = multiply_rec<S>(a, c);
  const std::vector<S> dcb = multiply_rec<S>(std::span<const S>(d_conj), b);
  const std::vector<S> da = multiply_rec<S>(d, a);
  const std::vector<S> bcc = multiply_rec<S>(b, std::span<const S>(c_conj));

  std::vector<S> out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - dcb[i];
    out[h + i] = da[i] + bcc[i];
  }
  return out;
}

}  // namespace detail

template <typename S>
Element<S> operator+(const Element<S>& x, const Element<S>& y) {
  detail::require_same_level(x, y);
  Element<S> out(x.level());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] + y[i];
  return out;
}

template <typename S>
Element<S> operator-(const Element<S>& x, const Element<S>& y) {
  detail::require_same_level(x, y);
  Element<S> out(x.level());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = x[i] - y[i];
  return out;
}

template <typename S>
Element<S> operator-(const Element<S>& x) {
  Element<S> out(x.level());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = -x[i];
  return out;
}

/// Recursive doubling product; the reference multiplication semantics.
template <typename S>
Element<S> operator*(const Element<S>& x, const Element<S>& y) {
  detail::require_same_level(x, y);
  return Element<S>(x.level(),
                    detail::multiply_rec<S>(std::span<const S>(x.coeffs()),
                                            std::span<const S>(y.coeffs())));
}

template <typename S>
Element<S> operator*(const S& c, const Element<S>& x) {
  Element<S> out(x.level());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = c * x[i];
  return out;
}

template <typename S>
Element<S> operator*(const Element<S>& x, const S& c) {
  return c * x;
}

template <typename S>
Element<S> conjugate(const Element<S>& x) {
  Element<S> out = x;
  for (std::size_t i = 1; i < out.dim(); ++i) out[i] = -out[i];
  return out;
}

/// Sum of squared coefficients; equals the e0 coefficient of x * conj(x).
template <typename S>
S norm_sq(const Element<S>& x) {
  S total(0);
  for (std::size_t i = 0; i < x.dim(); ++i) total = total + x[i] * x[i];
  return total;
}

/// Signed basis product table: e_i e_j = sign * e_k.  Rows and columns are
/// signed permutations of the basis.  Built once per level by multiplying
/// basis elements with the doubling rule.
class MulTable {
 public:
  struct Entry {
    std::int8_t sign;  // +1 or -1
    std::uint8_t index;
  };

  static const MulTable& at(int level) {
    check_level(level);
    static const MulTable tables[kMaxLevel + 1] = {
        MulTable(0), MulTable(1), MulTable(2), MulTable(3), MulTable(4), MulTable(5)};
    return tables[level];
  }

  int level() const { return level_; }
  std::size_t dim() const { return std::size_t{1} << level_; }

  Entry operator()(std::size_t i, std::size_t j) const {
    const std::size_t n = dim();
    if (i >= n || j >= n) throw std::out_of_range("basis index out of range");
    return entries_[i * n + j];
  }

 private:
  explicit MulTable(int level) : level_(level) {
    const std::size_t n = dim();
    entries_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto ei = Element<int>::basis(level, i);
      for (std::size_t j = 0; j < n; ++j) {
        const auto p = ei * Element<int>::basis(level, j);
        Entry e{0, 0};
        for (std::size_t k = 0; k < n; ++k) {
          if (p[k] != 0) {
            e = Entry{static_cast<std::int8_t>(p[k]), static_cast<std::uint8_t>(k)};
            break;
          }
        }
        entries_.push_back(e);
      }
    }
  }

  int level_;
  std::vector<Entry> entries_;
};

inline const MulTable& mul_table(int level) { return MulTable::at(level); }

/// Naive table-expansion product.  Evaluates every coefficient pair (no
/// sparsity shortcuts) and accumulates the scalar multiplications and
/// additions actually performed into ops.  A dense level-4 product measures
/// 256 multiplications and 240 additions.
template <typename S>
Element<S> multiply_counted(const Element<S>& x, const Element<S>& y, OpCount& ops) {
  detail::require_same_level(x, y);
  const MulTable& table = MulTable::at(x.level());
  const std::size_t n = x.dim();
  Element<S> out(x.level());
  std::vector<bool> started(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = table(i, j);
      S term = x[i] * y[j];
      ++ops.multiplications;
      if (e.sign < 0) term = -term;
      if (started[e.index]) {
        out[e.index] = out[e.index] + term;
        ++ops.additions;
      } else {
        out[e.index] = std::move(term);
        started[e.index] = true;
      }
    }
  }
  return out;
}

}  // namespace cdalg
