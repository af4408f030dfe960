#include "folidx/dedekind.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "folidx/errors.hpp"

namespace folidx {

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(1, 2);
}

Rational dedekind_sum(long long h, long long k) {
  if (k < 1) throw ValidationError("dedekind_sum requires k >= 1");
  Rational sum(0);
  for (long long i = 1; i < k; ++i) {
    sum += sawtooth(Rational(i, k)) * sawtooth(Rational(BigInt(h) * i, BigInt(k)));
  }
  return sum;
}

LensDatum LensDatum::make(long long p, long long m, long long n) {
  if (p < 2) throw InvalidLensDatum("lens datum requires p >= 2, got p = " + std::to_string(p));
  auto reduce = [p](long long v) { return ((v % p) + p) % p; };
  LensDatum d{p, reduce(m), reduce(n)};
  if (std::gcd(d.m, p) != 1)
    throw InvalidLensDatum("gcd(m, p) != 1 for m = " + std::to_string(m) +
                           ", p = " + std::to_string(p));
  if (std::gcd(d.n, p) != 1)
    throw InvalidLensDatum("gcd(n, p) != 1 for n = " + std::to_string(n) +
                           ", p = " + std::to_string(p));
  return d;
}

long long mod_inverse(long long a, long long m) {
  long long r0 = m, r1 = ((a % m) + m) % m;
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1)
    throw InvalidLensDatum("no modular inverse: gcd(" + std::to_string(a) + ", " +
                           std::to_string(m) + ") != 1");
  return ((t0 % m) + m) % m;
}

double cot_of_index(long long r, long long p) {
  // cot is pi-periodic and odd about pi/2, so reduce to an argument in
  // (0, pi/2] where tan is well conditioned.
  if (2 * r == p) return 0.0;
  double sign = 1.0;
  if (2 * r > p) {
    r = p - r;
    sign = -1.0;
  }
  double x = M_PI * static_cast<double>(r) / static_cast<double>(p);
  return sign / std::tan(x);
}

Rational cotangent_pair_exact(const LensDatum& datum) {
  LensDatum d = LensDatum::make(datum.p, datum.m, datum.n);
  long long a = (d.m * mod_inverse(d.n, d.p)) % d.p;
  return Rational(4 * d.p) * dedekind_sum(a, d.p);
}

double cotangent_pair_float(const LensDatum& datum) {
  LensDatum d = LensDatum::make(datum.p, datum.m, datum.n);
  double sum = 0.0;
  for (long long k = 1; k < d.p; ++k) {
    sum += cot_of_index((k * d.m) % d.p, d.p) * cot_of_index((k * d.n) % d.p, d.p);
  }
  return sum;
}

CotangentPair cotangent_pair_sum(const LensDatum& datum) {
  CotangentPair pair{cotangent_pair_exact(datum), cotangent_pair_float(datum)};
  double diff = std::abs(pair.floating - pair.exact.to_double());
  if (!(diff < kCotangentTolerance))
    throw std::logic_error("cotangent pair channels disagree by " + std::to_string(diff) +
                           " at p=" + std::to_string(datum.p) + " m=" + std::to_string(datum.m) +
                           " n=" + std::to_string(datum.n));
  return pair;
}

}  // namespace folidx
