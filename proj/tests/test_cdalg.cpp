#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include <random>
#include <vector>

#include "cdalg/element.hpp"

using cdalg::Element;
using cdalg::MulTable;
using cdalg::OpCount;
using Rat = mpq_class;
using RatElem = Element<Rat>;

namespace {

Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Deterministic small-rational elements for the exactness properties.
struct RandomElements {
  std::mt19937 rng{20240817};
  std::uniform_int_distribution<long> num{-9, 9};
  std::uniform_int_distribution<long> den{1, 4};

  RatElem next(int level) {
    RatElem x(level);
    for (std::size_t i = 0; i < x.dim(); ++i) x[i] = rat(num(rng), den(rng));
    return x;
  }
};

RatElem basis(int level, std::size_t i) { return RatElem::basis(level, i); }

}  // namespace

TEST_CASE("basis construction and bounds") {
  const RatElem e0 = basis(4, 0);
  CHECK(e0[0] == 1);
  for (std::size_t i = 1; i < 16; ++i) CHECK(e0[i] == 0);

  // e15 at level 4 is (0, e7): high half, position 7.
  const RatElem e15 = basis(4, 15);
  CHECK(e15[15] == 1);
  CHECK(e15[8 + 7] == 1);

  CHECK_THROWS_AS(basis(2, 4), std::out_of_range);
  CHECK_THROWS_AS(RatElem(6), std::invalid_argument);
  CHECK_THROWS_AS(RatElem(-1), std::invalid_argument);

  // e0 is the multiplicative identity of the sedenions.
  RandomElements gen;
  const RatElem x = gen.next(4);
  CHECK(e0 * x == x);
  CHECK(x * e0 == x);
}

TEST_CASE("addition is componentwise") {
  const RatElem sum = basis(4, 3) + basis(4, 10);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(sum[i] == ((i == 3 || i == 10) ? 1 : 0));
  }

  RandomElements gen;
  const RatElem x = gen.next(3);
  CHECK(x + RatElem::zero(3) == x);

  const RatElem a(1, {rat(1), rat(2)});
  const RatElem b(1, {rat(3), rat(4)});
  const RatElem c = a + b;
  CHECK(c[0] == 4);
  CHECK(c[1] == 6);

  CHECK_THROWS_WITH_AS(basis(2, 0) + basis(3, 0), doctest::Contains("incompatible levels"),
                       std::invalid_argument);
}

TEST_CASE("conjugation fixes the real part and negates imaginaries") {
  CHECK(cdalg::conjugate(basis(3, 0)) == basis(3, 0));
  CHECK(cdalg::conjugate(basis(3, 7)) == -basis(3, 7));

  const RatElem x = rat(2) * basis(4, 0) + rat(3) * basis(4, 5) - basis(4, 12);
  const RatElem expected = rat(2) * basis(4, 0) - rat(3) * basis(4, 5) + basis(4, 12);
  CHECK(cdalg::conjugate(x) == expected);
}

TEST_CASE("the two zero-divisor products vanish at level 4") {
  const RatElem p1 = (basis(4, 3) + basis(4, 10)) * (basis(4, 6) - basis(4, 15));
  CHECK(p1 == RatElem::zero(4));

  const RatElem p2 = (basis(4, 2) - basis(4, 14)) * (basis(4, 3) + basis(4, 15));
  CHECK(p2 == RatElem::zero(4));
}

TEST_CASE("quaternion basis products") {
  // Sign fixed by expanding the doubling rule at levels 1..2: e1 e2 = +e3.
  CHECK(basis(2, 1) * basis(2, 2) == basis(2, 3));
  CHECK(basis(2, 2) * basis(2, 1) == -basis(2, 3));
  CHECK(basis(2, 1) * basis(2, 1) == -basis(2, 0));
  CHECK_THROWS_AS(basis(2, 0) * basis(4, 0), std::invalid_argument);
}

TEST_CASE("norm_sq sums squared coefficients") {
  CHECK(cdalg::norm_sq(basis(4, 9)) == 1);
  CHECK(cdalg::norm_sq(RatElem::zero(4)) == 0);
  CHECK(cdalg::norm_sq(basis(4, 3) + basis(4, 10)) == 2);
}

TEST_CASE("multiplication table") {
  for (int level = 0; level <= 5; ++level) {
    const MulTable& table = cdalg::mul_table(level);
    const std::size_t n = table.dim();

    // Row 0: e0 e_j = +e_j.
    for (std::size_t j = 0; j < n; ++j) {
      const auto e = table(0, j);
      CHECK(e.sign == 1);
      CHECK(e.index == j);
    }

    // Every row and column is a signed permutation of the basis.
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<bool> row_seen(n, false), col_seen(n, false);
      for (std::size_t j = 0; j < n; ++j) {
        const auto r = table(i, j);
        const auto c = table(j, i);
        CHECK((r.sign == 1 || r.sign == -1));
        CHECK(!row_seen[r.index]);
        CHECK(!col_seen[c.index]);
        row_seen[r.index] = true;
        col_seen[c.index] = true;
      }
    }

    // Table entries agree with the doubling-rule products.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto e = table(i, j);
        CHECK(basis(level, i) * basis(level, j) ==
              rat(e.sign) * basis(level, e.index));
      }
    }
  }

  // Regrouping the first zero-divisor product through table entries:
  // e3 e6 - e3 e15 + e10 e6 - e10 e15 = 0.
  const MulTable& sed = cdalg::mul_table(4);
  RatElem regroup(4);
  const auto accumulate = [&](std::size_t i, std::size_t j, long weight) {
    const auto e = sed(i, j);
    regroup[e.index] += rat(weight * e.sign);
  };
  accumulate(3, 6, 1);
  accumulate(3, 15, -1);
  accumulate(10, 6, 1);
  accumulate(10, 15, -1);
  CHECK(regroup == RatElem::zero(4));
}

TEST_CASE("naive operation counts") {
  CHECK(cdalg::naive_product_cost(0).multiplications == 1);
  CHECK(cdalg::naive_product_cost(0).additions == 0);
  CHECK(cdalg::naive_product_cost(2).multiplications == 16);
  CHECK(cdalg::naive_product_cost(2).additions == 12);
  CHECK(cdalg::naive_product_cost(4).multiplications == 256);
  CHECK(cdalg::naive_product_cost(4).additions == 240);
  CHECK_THROWS_AS(cdalg::naive_product_cost(6), std::invalid_argument);

  // The instrumented table-expansion product of two dense sedenions measures
  // exactly the formula counts, and the formula holds at every level.
  RandomElements gen;
  for (int level = 0; level <= 5; ++level) {
    RatElem x(level), y(level);
    for (std::size_t i = 0; i < x.dim(); ++i) {
      x[i] = rat(static_cast<long>(i) + 1);
      y[i] = rat(static_cast<long>(i) + 2);
    }
    OpCount ops;
    const RatElem counted = cdalg::multiply_counted(x, y, ops);
    CHECK(ops.multiplications == cdalg::naive_product_cost(level).multiplications);
    CHECK(ops.additions == cdalg::naive_product_cost(level).additions);
    CHECK(counted == x * y);
  }

  // Counted path agrees with the recursive doubling product on random
  // exact instances.
  for (int level = 0; level <= 4; ++level) {
    for (int round = 0; round < 8; ++round) {
      const RatElem x = gen.next(level);
      const RatElem y = gen.next(level);
      OpCount ops;
      CHECK(cdalg::multiply_counted(x, y, ops) == x * y);
    }
  }
}

TEST_CASE("double-scalar elements share the algebra structure") {
  using DblElem = Element<double>;
  const DblElem x(4, {0.5, -1.25, 2.0, 0.0, 3.5, 0.0, 0.0, -0.75, 1.0, 0.0, 4.0, 0.0, 0.0,
                      0.0, -2.5, 0.25});
  CHECK(cdalg::conjugate(cdalg::conjugate(x)) == x);

  // The zero-divisor cancellation is sign-exact, so it also lands on 0.0.
  const DblElem zd = (DblElem::basis(4, 3) + DblElem::basis(4, 10)) *
                     (DblElem::basis(4, 6) - DblElem::basis(4, 15));
  CHECK(zd == DblElem::zero(4));

  const double n = cdalg::norm_sq(x);
  const DblElem prod = x * cdalg::conjugate(x);
  CHECK(prod[0] == doctest::Approx(n).epsilon(1e-12));
  for (std::size_t i = 1; i < 16; ++i) CHECK(prod[i] == doctest::Approx(0.0));

  // Counted and recursive paths accumulate in different orders, so doubles
  // agree only up to roundoff.
  cdalg::OpCount ops;
  const DblElem counted = cdalg::multiply_counted(x, x, ops);
  const DblElem recursive = x * x;
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(counted[i] == doctest::Approx(recursive[i]).epsilon(1e-12));
  }
  CHECK(ops.multiplications == 256);
}

TEST_CASE("involution: conjugate twice is the identity") {
  RandomElements gen;
  for (int level = 0; level <= 5; ++level) {
    for (int round = 0; round < 10; ++round) {
      const RatElem x = gen.next(level);
      CHECK(cdalg::conjugate(cdalg::conjugate(x)) == x);
    }
  }
}

TEST_CASE("conjugation is an anti-automorphism on basis pairs") {
  for (int level = 0; level <= 4; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const RatElem x = basis(level, i);
        const RatElem y = basis(level, j);
        CHECK(cdalg::conjugate(x * y) == cdalg::conjugate(y) * cdalg::conjugate(x));
      }
    }
  }
}

TEST_CASE("x conj(x) = conj(x) x = norm_sq(x) e0") {
  RandomElements gen;
  for (int level = 0; level <= 5; ++level) {
    for (int round = 0; round < 6; ++round) {
      const RatElem x = gen.next(level);
      const RatElem expected = RatElem::scalar(level, cdalg::norm_sq(x));
      CHECK(x * cdalg::conjugate(x) == expected);
      CHECK(cdalg::conjugate(x) * x == expected);
    }
  }
}

TEST_CASE("multiplication is bilinear") {
  RandomElements gen;
  for (int level = 0; level <= 4; ++level) {
    for (int round = 0; round < 4; ++round) {
      const RatElem x = gen.next(level);
      const RatElem y = gen.next(level);
      const RatElem z = gen.next(level);
      const Rat a = rat(3, 2), b = rat(-5, 3);
      CHECK((a * x + b * y) * z == a * (x * z) + b * (y * z));
      CHECK(z * (a * x + b * y) == a * (z * x) + b * (z * y));
    }
  }
}

TEST_CASE("commutativity holds up to level 1 and fails from level 2 on") {
  for (int level = 0; level <= 1; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(basis(level, i) * basis(level, j) == basis(level, j) * basis(level, i));
      }
    }
  }
  for (int level = 2; level <= 5; ++level) {
    // e1 e2 = e3 but e2 e1 = -e3.
    const RatElem xy = basis(level, 1) * basis(level, 2);
    const RatElem yx = basis(level, 2) * basis(level, 1);
    CHECK(xy != yx);
  }
}

TEST_CASE("associativity holds up to level 2 and fails from level 3 on") {
  for (int level = 0; level <= 2; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const RatElem x = basis(level, i);
          const RatElem y = basis(level, j);
          const RatElem z = basis(level, k);
          CHECK((x * y) * z == x * (y * z));
        }
      }
    }
  }
  for (int level = 3; level <= 5; ++level) {
    const RatElem x = basis(level, 1);
    const RatElem y = basis(level, 2);
    const RatElem z = basis(level, 4);
    CHECK((x * y) * z != x * (y * z));
  }
}

TEST_CASE("flexibility (x y) x = x (y x) over all basis triples up to level 4") {
  for (int level = 0; level <= 4; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const RatElem x = basis(level, i);
        const RatElem y = basis(level, j);
        CHECK((x * y) * x == x * (y * x));
      }
    }
  }
}

TEST_CASE("norm multiplicativity holds through level 3 and fails at level 4") {
  RandomElements gen;
  for (int level = 0; level <= 3; ++level) {
    const std::size_t n = std::size_t{1} << level;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const RatElem x = basis(level, i);
        const RatElem y = basis(level, j);
        CHECK(cdalg::norm_sq(x * y) == cdalg::norm_sq(x) * cdalg::norm_sq(y));
      }
    }
    // ... and on random octonion-and-below elements.
    for (int round = 0; round < 6; ++round) {
      const RatElem x = gen.next(level);
      const RatElem y = gen.next(level);
      CHECK(cdalg::norm_sq(x * y) == cdalg::norm_sq(x) * cdalg::norm_sq(y));
    }
  }

  // The zero divisors witness the failure at level 4.
  const RatElem x1 = basis(4, 3) + basis(4, 10);
  const RatElem y1 = basis(4, 6) - basis(4, 15);
  CHECK(cdalg::norm_sq(x1 * y1) == 0);
  CHECK(cdalg::norm_sq(x1) * cdalg::norm_sq(y1) == 4);

  const RatElem x2 = basis(4, 2) - basis(4, 14);
  const RatElem y2 = basis(4, 3) + basis(4, 15);
  CHECK(cdalg::norm_sq(x2 * y2) == 0);
  CHECK(cdalg::norm_sq(x2) * cdalg::norm_sq(y2) == 4);
}
