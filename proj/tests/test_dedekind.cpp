#include <doctest.h>

#include <cmath>
#include <numeric>

#include "folidx/dedekind.hpp"
#include "folidx/errors.hpp"

using folidx::cotangent_pair_exact;
using folidx::cotangent_pair_float;
using folidx::cotangent_pair_sum;
using folidx::dedekind_sum;
using folidx::LensDatum;
using folidx::Rational;
using folidx::sawtooth;

TEST_CASE("sawtooth basics") {
  CHECK(sawtooth(Rational(0)) == Rational(0));
  CHECK(sawtooth(Rational(5)) == Rational(0));
  CHECK(sawtooth(Rational(-3)) == Rational(0));
  CHECK(sawtooth(Rational(7, 2)) == Rational(0));  // 3.5 - 3 - 0.5
  CHECK(sawtooth(Rational(1, 3)) == Rational(-1, 6));
  CHECK(sawtooth(Rational(2, 3)) == Rational(1, 6));
  CHECK(sawtooth(Rational(-1, 3)) == Rational(1, 6));

  // always in (-1/2, 1/2)
  for (long long num = -20; num <= 20; ++num)
    for (long long den = 1; den <= 7; ++den) {
      Rational v = sawtooth(Rational(num, den));
      CHECK(v > Rational(-1, 2));
      CHECK(v < Rational(1, 2));
    }
}

TEST_CASE("dedekind sum values") {
  CHECK(dedekind_sum(1, 1) == Rational(0));   // empty sum
  CHECK(dedekind_sum(5, 1) == Rational(0));
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));   // (-1/6)^2 + (1/6)^2
  CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
  CHECK(dedekind_sum(1, 2) == Rational(0));
  CHECK_THROWS_AS(dedekind_sum(1, 0), folidx::ValidationError);
}

TEST_CASE("dedekind sum symmetries") {
  for (long long k = 1; k <= 24; ++k)
    for (long long h = -k; h <= 2 * k; ++h) {
      CHECK(dedekind_sum(h + k, k) == dedekind_sum(h, k));
      CHECK(dedekind_sum(-h, k) == -dedekind_sum(h, k));
    }
  for (long long p = 2; p <= 40; ++p)
    for (long long h = 1; h < p; ++h)
      CHECK(dedekind_sum(p - h, p) == -dedekind_sum(h, p));
}

TEST_CASE("dedekind reciprocity for all coprime pairs up to 50") {
  for (long long h = 1; h <= 50; ++h)
    for (long long k = 1; k <= 50; ++k) {
      if (std::gcd(h, k) != 1) continue;
      Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
      Rational rhs = Rational(-1, 4) +
                     Rational(1, 12) * (Rational(h, k) + Rational(k, h) + Rational(1, h * k));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("lens datum validation") {
  LensDatum d = LensDatum::make(5, 7, -1);
  CHECK(d.m == 2);  // reduced into {1,...,p-1}
  CHECK(d.n == 4);
  CHECK_THROWS_AS(LensDatum::make(1, 1, 1), folidx::InvalidLensDatum);
  CHECK_THROWS_AS(LensDatum::make(6, 2, 1), folidx::InvalidLensDatum);
  CHECK_THROWS_AS(LensDatum::make(6, 1, 3), folidx::InvalidLensDatum);
  CHECK_THROWS_AS(LensDatum::make(4, 0, 1), folidx::InvalidLensDatum);
}

TEST_CASE("modular inverse") {
  CHECK(folidx::mod_inverse(2, 3) == 2);
  CHECK(folidx::mod_inverse(3, 7) == 5);
  CHECK(folidx::mod_inverse(1, 2) == 1);
  CHECK_THROWS_AS(folidx::mod_inverse(2, 4), folidx::InvalidLensDatum);
}

TEST_CASE("cotangent pair sum rejects corrupt raw data") {
  // bypasses make(): gcd(m,p) = 2
  LensDatum corrupt{6, 2, 1};
  CHECK_THROWS_AS(cotangent_pair_sum(corrupt), folidx::InvalidLensDatum);
  CHECK_THROWS_AS(cotangent_pair_exact(corrupt), folidx::InvalidLensDatum);
  CHECK_THROWS_AS(cotangent_pair_float(corrupt), folidx::InvalidLensDatum);
}

TEST_CASE("cotangent pair sum frozen values") {
  // cot^2(pi/3) + cot^2(2 pi/3) = 1/3 + 1/3
  CHECK(cotangent_pair_exact(LensDatum::make(3, 1, 1)) == Rational(2, 3));
  // closed form (p-1)(p-2)/3 at p = 5
  CHECK(cotangent_pair_exact(LensDatum::make(5, 1, 1)) == Rational(4));
  // direct evaluation, also 12 s(2,3)
  CHECK(cotangent_pair_exact(LensDatum::make(3, 1, 2)) == Rational(-2, 3));
  CHECK(Rational(12) * dedekind_sum(2, 3) == Rational(-2, 3));
}

TEST_CASE("cotangent pair sum channels agree") {
  for (long long p = 2; p <= 40; ++p)
    for (long long m = 1; m < p; ++m) {
      if (std::gcd(m, p) != 1) continue;
      auto pair = cotangent_pair_sum(LensDatum::make(p, m, 1));
      CHECK(std::abs(pair.floating - pair.exact.to_double()) < folidx::kCotangentTolerance);
    }
}

TEST_CASE("cotangent pair closed form for every p up to 200") {
  for (long long p = 2; p <= 200; ++p)
    CHECK(cotangent_pair_exact(LensDatum::make(p, 1, 1)) == Rational((p - 1) * (p - 2), 3));
}

TEST_CASE("cotangent pair sum is symmetric in m and n") {
  for (long long p : {5, 7, 12, 30})
    for (long long m = 1; m < p; ++m)
      for (long long n = 1; n < p; ++n) {
        if (std::gcd(m, p) != 1 || std::gcd(n, p) != 1) continue;
        CHECK(cotangent_pair_exact(LensDatum::make(p, m, n)) ==
              cotangent_pair_exact(LensDatum::make(p, n, m)));
      }
}
