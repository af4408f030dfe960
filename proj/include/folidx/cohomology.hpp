#pragma once

#include <optional>
#include <vector>

#include "folidx/group_action.hpp"
#include "folidx/rational.hpp"

namespace folidx {

// Basic Betti numbers b_0 ... b_q of a codimension-q foliation.
using BettiVector = std::vector<long long>;

// Alternating sum of a Betti vector.
long long basic_euler(const BettiVector& betti);

// Cohomology model of a transverse fiber with a holonomy action of a single
// finite-order generator: torus ranks act through a matrix on degree one,
// spheres and circles through a sign on the top class, products
// componentwise.
struct FiberModel {
  enum class Kind { torus, sphere2, circle, product };

  Kind kind = Kind::circle;
  int torus_rank = 0;
  IntMatrix h1_action;
  int top_sign = 1;
  std::vector<FiberModel> factors;

  static FiberModel torus(int rank, IntMatrix h1);
  static FiberModel torus(int rank);  // identity holonomy
  static FiberModel sphere2(int top_sign = 1);
  static FiberModel circle(int top_sign = 1);
  static FiberModel product(std::vector<FiberModel> factors);
};

BettiVector fiber_betti(const FiberModel& fiber);

// Graded action of the cyclic group on H*(fiber) induced by the fiber's
// holonomy descriptor.
GradedAction fiber_action(const FiberModel& fiber, FiniteCyclicGroup group);

// Betti numbers of the basic complex of a suspension: the chi-isotypic part
// of the fiber cohomology under the holonomy group. The trivial character
// gives the basic Betti numbers themselves.
BettiVector suspension_basic_betti(const FiberModel& fiber, FiniteCyclicGroup group,
                                   const Character& chi);

// Flat line bundle over a circle. Triviality of the holonomy multiplier is
// the only thing that matters for cohomology; a rational multiplier is
// compared to 1 exactly, anything else is supplied as a flag.
class FlatCircleBundle {
 public:
  static FlatCircleBundle trivial() { return FlatCircleBundle(true, std::nullopt); }
  static FlatCircleBundle nontrivial() { return FlatCircleBundle(false, std::nullopt); }
  static FlatCircleBundle multiplier(const Rational& lambda);

  bool is_trivial() const { return trivial_; }
  const std::optional<Rational>& holonomy() const { return lambda_; }

 private:
  FlatCircleBundle(bool t, std::optional<Rational> l) : trivial_(t), lambda_(std::move(l)) {}
  bool trivial_;
  std::optional<Rational> lambda_;
};

// (1,1) for the trivial bundle, (0,0) otherwise: a nontrivial flat twist
// kills both cohomology groups of the circle.
BettiVector flat_circle_betti(const FlatCircleBundle& bundle);

// Basic Betti numbers of the hyperbolic torus-bundle example: the untwisted
// circle summand in degrees (0,1) plus the flat-twisted summand shifted into
// degrees (1,2). Nontrivial holonomy gives (1,1,0); the hypothetical trivial
// twist gives (1,2,1).
BettiVector carriere_basic_betti(const FlatCircleBundle& bundle);

}  // namespace folidx
