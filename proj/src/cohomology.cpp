#include "folidx/cohomology.hpp"

#include <string>

#include "folidx/errors.hpp"

namespace folidx {

long long basic_euler(const BettiVector& betti) {
  long long chi = 0;
  long long sign = 1;
  for (long long b : betti) {
    chi += sign * b;
    sign = -sign;
  }
  return chi;
}

FiberModel FiberModel::torus(int rank, IntMatrix h1) {
  if (rank < 1) throw ValidationError("torus rank must be >= 1");
  if (h1.size() != rank)
    throw ValidationError("torus holonomy matrix must be " + std::to_string(rank) + " square");
  FiberModel f;
  f.kind = Kind::torus;
  f.torus_rank = rank;
  f.h1_action = std::move(h1);
  return f;
}

FiberModel FiberModel::torus(int rank) { return torus(rank, IntMatrix::identity(rank)); }

FiberModel FiberModel::sphere2(int top_sign) {
  if (top_sign != 1 && top_sign != -1) throw ValidationError("top sign must be +1 or -1");
  FiberModel f;
  f.kind = Kind::sphere2;
  f.top_sign = top_sign;
  return f;
}

FiberModel FiberModel::circle(int top_sign) {
  if (top_sign != 1 && top_sign != -1) throw ValidationError("top sign must be +1 or -1");
  FiberModel f;
  f.kind = Kind::circle;
  f.top_sign = top_sign;
  return f;
}

FiberModel FiberModel::product(std::vector<FiberModel> factors) {
  if (factors.empty()) throw ValidationError("product fiber needs at least one factor");
  FiberModel f;
  f.kind = Kind::product;
  f.factors = std::move(factors);
  return f;
}

namespace {

BettiVector convolve(const BettiVector& a, const BettiVector& b) {
  BettiVector c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  int n = 0;
  for (const IntMatrix& b : blocks) n += b.size();
  IntMatrix m(n);
  int off = 0;
  for (const IntMatrix& b : blocks) {
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.size();
  }
  return m;
}

// Kuenneth: degree k of a product is the direct sum over i+j=k of tensor
// factors, acted on by the Kronecker product of the factor actions.
GradedAction combine(const GradedAction& a, const GradedAction& b) {
  GradedAction c;
  c.group = a.group;
  size_t qa = a.degrees.size(), qb = b.degrees.size();
  for (size_t k = 0; k + 1 <= qa + qb - 1; ++k) {
    std::vector<IntMatrix> blocks;
    for (size_t i = 0; i < qa; ++i) {
      size_t j = k - i;
      if (i > k || j >= qb) continue;
      if (a.degrees[i] == 0 || b.degrees[j] == 0) continue;
      blocks.push_back(kronecker(a.generator[i], b.generator[j]));
    }
    IntMatrix m = block_diagonal(blocks);
    c.degrees.push_back(m.size());
    c.generator.push_back(m);
  }
  return c;
}

IntMatrix one_by_one(long long v) {
  IntMatrix m(1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace

BettiVector fiber_betti(const FiberModel& fiber) {
  switch (fiber.kind) {
    case FiberModel::Kind::torus: {
      BettiVector b(fiber.torus_rank + 1);
      // binomial coefficients C(rank, k)
      b[0] = 1;
      for (int k = 1; k <= fiber.torus_rank; ++k)
        b[k] = b[k - 1] * (fiber.torus_rank - k + 1) / k;
      return b;
    }
    case FiberModel::Kind::sphere2:
      return {1, 0, 1};
    case FiberModel::Kind::circle:
      return {1, 1};
    case FiberModel::Kind::product: {
      BettiVector b = fiber_betti(fiber.factors[0]);
      for (size_t i = 1; i < fiber.factors.size(); ++i)
        b = convolve(b, fiber_betti(fiber.factors[i]));
      return b;
    }
  }
  throw ValidationError("unknown fiber kind");
}

GradedAction fiber_action(const FiberModel& fiber, FiniteCyclicGroup group) {
  switch (fiber.kind) {
    case FiberModel::Kind::torus:
      return exterior_power_action(fiber.h1_action, fiber.torus_rank, group);
    case FiberModel::Kind::sphere2: {
      GradedAction a;
      a.group = group;
      a.degrees = {1, 0, 1};
      a.generator = {one_by_one(1), IntMatrix(0), one_by_one(fiber.top_sign)};
      return a;
    }
    case FiberModel::Kind::circle: {
      GradedAction a;
      a.group = group;
      a.degrees = {1, 1};
      a.generator = {one_by_one(1), one_by_one(fiber.top_sign)};
      return a;
    }
    case FiberModel::Kind::product: {
      GradedAction a = fiber_action(fiber.factors[0], group);
      for (size_t i = 1; i < fiber.factors.size(); ++i)
        a = combine(a, fiber_action(fiber.factors[i], group));
      return a;
    }
  }
  throw ValidationError("unknown fiber kind");
}

BettiVector suspension_basic_betti(const FiberModel& fiber, FiniteCyclicGroup group,
                                   const Character& chi) {
  GradedAction action = fiber_action(fiber, group);
  validate_action(action);
  BettiVector betti(action.degrees.size());
  for (size_t k = 0; k < action.degrees.size(); ++k)
    betti[k] = isotypic_multiplicity(action, static_cast<int>(k), chi);
  return betti;
}

FlatCircleBundle FlatCircleBundle::multiplier(const Rational& lambda) {
  if (!(lambda > Rational(0)))
    throw NonpositiveHolonomy("flat circle bundle multiplier must be > 0, got " + lambda.str());
  return FlatCircleBundle(lambda == Rational(1), lambda);
}

BettiVector flat_circle_betti(const FlatCircleBundle& bundle) {
  return bundle.is_trivial() ? BettiVector{1, 1} : BettiVector{0, 0};
}

BettiVector carriere_basic_betti(const FlatCircleBundle& bundle) {
  BettiVector twisted = flat_circle_betti(bundle);
  return {1, 1 + twisted[0], twisted[1]};
}

}  // namespace folidx
