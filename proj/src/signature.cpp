#include "folidx/signature.hpp"

#include <string>

#include "folidx/errors.hpp"

namespace folidx {

SignatureProblem SignatureProblem::make(long long p, std::vector<LensDatum> fixed_points,
                                        Rational p1_blowup,
                                        std::optional<Rational> p1_original) {
  if (p < 2) throw InvalidLensDatum("signature problem requires p >= 2");
  for (const LensDatum& d : fixed_points) {
    if (d.p != p)
      throw InvalidLensDatum("fixed point with p = " + std::to_string(d.p) +
                             " in a problem with p = " + std::to_string(p));
    LensDatum::make(d.p, d.m, d.n);  // re-validate gcd conditions
  }
  return SignatureProblem{p, std::move(fixed_points), std::move(p1_blowup),
                          std::move(p1_original)};
}

Rational eta_lens_signature(const LensDatum& datum) {
  return -(Rational(1, datum.p) * cotangent_pair_exact(datum));
}

LensEta lens_eta(const LensDatum& datum) {
  Rational eta = eta_lens_signature(datum);
  return LensEta{eta, Rational(2) * eta, 2};
}

namespace {

Rational cot_sum_term(const SignatureProblem& problem) {
  Rational sum(0);
  for (const LensDatum& d : problem.fixed_points)
    sum += Rational(1, problem.p) * cotangent_pair_exact(d);
  return sum;
}

SignatureValue finish(Rational value) {
  bool integral = value.is_integer();
  return SignatureValue{std::move(value), integral};
}

}  // namespace

SignatureValue transverse_signature(const SignatureProblem& problem) {
  Rational n(static_cast<long long>(problem.fixed_points.size()));
  return finish(Rational(1, 3) * problem.p1_blowup + cot_sum_term(problem) + n);
}

SignatureValue transverse_signature_original(const SignatureProblem& problem) {
  if (!problem.p1_original)
    throw MissingOriginalIntegral("original p1 integral not supplied");
  return finish(Rational(1, 3) * *problem.p1_original + cot_sum_term(problem));
}

bool blowup_defect_check(const SignatureProblem& problem) {
  if (!problem.p1_original)
    throw MissingOriginalIntegral("original p1 integral not supplied");
  Rational n(static_cast<long long>(problem.fixed_points.size()));
  return Rational(1, 3) * (*problem.p1_original - problem.p1_blowup) == n;
}

}  // namespace folidx
