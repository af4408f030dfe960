#pragma once

#include "folidx/rational.hpp"

namespace folidx {

// Float-vs-exact agreement demanded from the cotangent pair sum. 1e-9 leaves
// several orders of magnitude of headroom over double error at p <= 200.
inline constexpr double kCotangentTolerance = 1e-9;

// Sawtooth ((x)): 0 at integers, otherwise x - floor(x) - 1/2. Lands in
// (-1/2, 1/2).
Rational sawtooth(const Rational& x);

// Dedekind sum s(h,k) = sum_{i=1}^{k-1} ((i/k)) ((h i/k)), evaluated exactly
// from the sawtooth definition. k >= 1; h may be any integer.
Rational dedekind_sum(long long h, long long k);

// Rotation numbers of a lens-space boundary signature operator: the group
// order p and the two rotation integers, reduced into {1, ..., p-1} and
// coprime to p.
struct LensDatum {
  long long p = 0;
  long long m = 0;
  long long n = 0;

  // Validates and reduces; throws InvalidLensDatum if p < 2 or a gcd
  // condition fails.
  static LensDatum make(long long p, long long m, long long n);
};

// Modular inverse of a mod m (m >= 1, gcd(a,m) = 1 required).
long long mod_inverse(long long a, long long m);

// cot(pi r / p) for 1 <= r <= p-1, with the index folded into (0, p/2] so
// the argument stays small where cot is large.
double cot_of_index(long long r, long long p);

// Exact value of sum_{k=1}^{p-1} cot(k m pi/p) cot(k n pi/p), obtained as
// 4 p s(m n^{-1} mod p, p) via the substitution k -> n^{-1} k.
Rational cotangent_pair_exact(const LensDatum& datum);

// The same sum evaluated directly in floating point.
double cotangent_pair_float(const LensDatum& datum);

struct CotangentPair {
  Rational exact;
  double floating = 0.0;
};

// Both channels; the two are checked against each other within
// kCotangentTolerance (a violation means broken arithmetic, not bad input,
// and raises std::logic_error).
CotangentPair cotangent_pair_sum(const LensDatum& datum);

}  // namespace folidx
