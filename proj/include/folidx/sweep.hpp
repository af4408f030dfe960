#pragma once

#include "folidx/dedekind.hpp"

namespace folidx {

// Cross-validation sweep over every lens datum with p <= max_p: the floating
// cotangent pair sum is compared against the exact Dedekind-channel value
// for all coprime (m, n), and the closed form (p-1)(p-2)/3 is checked at
// m = n = 1.
struct SweepOutcome {
  long long pairs_checked = 0;
  double max_abs_diff = 0.0;
  long long worst_p = 0;
  long long worst_m = 0;
  long long worst_n = 0;
  bool closed_form_ok = true;
  bool within_tolerance = true;  // every pair within kCotangentTolerance
};

// Reference implementation: straightforward per-pair evaluation, one
// Rational dedekind_sum and one trigonometric cotangent sum per pair. The
// baseline for tests and the benchmark.
SweepOutcome eta_sweep_serial(long long max_p);

// Production kernel: per-p cotangent tables, integer sawtooth sums over the
// common denominator for the exact channel, and an OpenMP loop over p.
// Produces bitwise the same outcome as the serial reference.
SweepOutcome eta_sweep_parallel(long long max_p);

}  // namespace folidx
