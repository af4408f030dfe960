#pragma once

#include <optional>
#include <vector>

#include "folidx/dedekind.hpp"
#include "folidx/rational.hpp"

namespace folidx {

// Transverse signature problem: a cyclic group of order p acting with
// isolated fixed points (rotation numbers per fixed point) plus the first
// Pontryagin integral over the blown-up quotient, and optionally over the
// original quotient.
struct SignatureProblem {
  long long p = 0;
  std::vector<LensDatum> fixed_points;
  Rational p1_blowup;
  std::optional<Rational> p1_original;

  // Validates that every fixed point carries the same p.
  static SignatureProblem make(long long p, std::vector<LensDatum> fixed_points,
                               Rational p1_blowup,
                               std::optional<Rational> p1_original = std::nullopt);
};

// Eta invariant of the boundary signature operator on the lens space:
// eta(B) = -(1/p) sum_k cot(pi k m/p) cot(pi k n/p), evaluated through the
// exact Dedekind channel.
Rational eta_lens_signature(const LensDatum& datum);

// eta(B) together with the doubled operator value 2 eta(B) and the constant
// kernel dimension h = 2 (the two constant forms).
struct LensEta {
  Rational boundary;
  Rational doubled;
  int h_value = 2;
};

LensEta lens_eta(const LensDatum& datum);

struct SignatureValue {
  Rational value;
  bool integral = false;  // genuine signatures are integers; false flags inconsistent inputs
};

// Blowup form: (1/3) * p1_blowup + sum_j (1/p) * cot pair sum_j + N.
SignatureValue transverse_signature(const SignatureProblem& problem);

// Original form (no +N): (1/3) * p1_original + sum_j (1/p) * cot pair sum_j.
// Requires p1_original.
SignatureValue transverse_signature_original(const SignatureProblem& problem);

// Whether (1/3)(p1_original - p1_blowup) = N holds exactly. Requires
// p1_original.
bool blowup_defect_check(const SignatureProblem& problem);

}  // namespace folidx
