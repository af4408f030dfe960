#include "folidx/sweep.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace folidx {

namespace {

struct PairDiff {
  double diff = -1.0;
  long long p = 0, m = 0, n = 0;
};

// Order-independent "worst pair" rule: larger diff wins, ties go to the
// lexicographically smallest (p, m, n). Keeps the parallel reduction
// deterministic.
bool worse_than(const PairDiff& a, const PairDiff& b) {
  if (a.diff != b.diff) return a.diff > b.diff;
  if (a.p != b.p) return a.p < b.p;
  if (a.m != b.m) return a.m < b.m;
  return a.n < b.n;
}

void absorb(SweepOutcome& out, const SweepOutcome& local) {
  out.pairs_checked += local.pairs_checked;
  out.closed_form_ok = out.closed_form_ok && local.closed_form_ok;
  out.within_tolerance = out.within_tolerance && local.within_tolerance;
  // worst_p == 0 means no pair with positive diff was seen (record() only
  // replaces on strict increase), matching the serial scan.
  if (local.worst_p == 0) return;
  PairDiff current{out.max_abs_diff, out.worst_p, out.worst_m, out.worst_n};
  PairDiff candidate{local.max_abs_diff, local.worst_p, local.worst_m, local.worst_n};
  if (out.worst_p == 0 || worse_than(candidate, current)) {
    out.max_abs_diff = candidate.diff;
    out.worst_p = candidate.p;
    out.worst_m = candidate.m;
    out.worst_n = candidate.n;
  }
}

void record(SweepOutcome& out, double diff, long long p, long long m, long long n) {
  ++out.pairs_checked;
  if (!(diff < kCotangentTolerance)) out.within_tolerance = false;
  if (diff > out.max_abs_diff) {
    out.max_abs_diff = diff;
    out.worst_p = p;
    out.worst_m = m;
    out.worst_n = n;
  }
}

std::vector<long long> units_mod(long long p) {
  std::vector<long long> units;
  for (long long m = 1; m < p; ++m)
    if (std::gcd(m, p) == 1) units.push_back(m);
  return units;
}

// Integer sawtooth sum over the common denominator: with r = a*i mod p,
// 4p * s(a,p) = (1/p) * sum_i (2i-p)(2r-p).
long long sawtooth_pair_numerator(long long a, long long p) {
  long long sum = 0;
  for (long long i = 1; i < p; ++i) {
    long long r = (a * i) % p;
    sum += (2 * i - p) * (2 * r - p);
  }
  return sum;
}

void sweep_one_p_kernel(long long p, SweepOutcome& out) {
  std::vector<double> cot(p, 0.0);
  for (long long r = 1; r < p; ++r) cot[r] = cot_of_index(r, p);

  std::vector<long long> units = units_mod(p);
  std::vector<long long> numerator(p, 0);
  std::vector<long long> inverse(p, 0);
  for (long long a : units) {
    numerator[a] = sawtooth_pair_numerator(a, p);
    inverse[a] = mod_inverse(a, p);
  }

  if (3 * numerator[1] != p * (p - 1) * (p - 2)) out.closed_form_ok = false;

  for (long long m : units) {
    for (long long n : units) {
      long long a = (m * inverse[n]) % p;
      double sum = 0.0;
      for (long long k = 1; k < p; ++k) sum += cot[(k * m) % p] * cot[(k * n) % p];
      double exact = static_cast<double>(numerator[a]) / static_cast<double>(p);
      record(out, std::abs(sum - exact), p, m, n);
    }
  }
}

void sweep_one_p_reference(long long p, SweepOutcome& out) {
  if (cotangent_pair_exact(LensDatum::make(p, 1, 1)) != Rational((p - 1) * (p - 2), 3))
    out.closed_form_ok = false;
  std::vector<long long> units = units_mod(p);
  for (long long m : units) {
    for (long long n : units) {
      LensDatum datum{p, m, n};
      double diff = std::abs(cotangent_pair_float(datum) - cotangent_pair_exact(datum).to_double());
      record(out, diff, p, m, n);
    }
  }
}

}  // namespace

SweepOutcome eta_sweep_serial(long long max_p) {
  SweepOutcome out;
  for (long long p = 2; p <= max_p; ++p) sweep_one_p_reference(p, out);
  return out;
}

SweepOutcome eta_sweep_parallel(long long max_p) {
  SweepOutcome out;
  out.pairs_checked = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    SweepOutcome local;
#pragma omp for schedule(dynamic)
    for (long long p = 2; p <= max_p; ++p) sweep_one_p_kernel(p, local);
#pragma omp critical(folidx_sweep_merge)
    absorb(out, local);
  }
#else
  for (long long p = 2; p <= max_p; ++p) sweep_one_p_kernel(p, out);
#endif
  return out;
}

}  // namespace folidx
