#pragma once

#include <complex>
#include <string>
#include <vector>

#include "folidx/errors.hpp"

namespace folidx {

// Dense square matrix over the integers. Sizes in this library are tiny
// (cohomology of low-dimensional fibers), so everything is exact long long.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int size() const { return n_; }
  long long& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  long long at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix pow(long long e) const;
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  long long trace() const;
  long long det() const;  // Bareiss fraction-free elimination
  std::vector<std::vector<long long>> rows() const;
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<long long> a_;
};

// k-th exterior power: entries are the k x k minors of a, with k-subsets of
// rows/columns ordered lexicographically.
IntMatrix exterior_power(const IntMatrix& a, int k);

// Kronecker product (row-major block layout).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

struct FiniteCyclicGroup {
  long long order = 1;
};

// Character of a finite cyclic group: the generator maps to
// exp(2 pi i j / order). The sign character (j = order/2, order even) is the
// +-1 twist used for orientation line bundles.
class Character {
 public:
  static Character trivial(FiniteCyclicGroup g) { return Character(g, 0); }
  static Character rho(FiniteCyclicGroup g, long long j);
  static Character sign(FiniteCyclicGroup g);

  long long index() const { return index_; }
  FiniteCyclicGroup group() const { return group_; }
  bool is_trivial() const { return index_ == 0; }
  bool is_sign() const { return group_.order % 2 == 0 && index_ == group_.order / 2; }

  // Value on generator^t.
  std::complex<double> value(long long t) const;

 private:
  Character(FiniteCyclicGroup g, long long j) : group_(g), index_(j) {}
  FiniteCyclicGroup group_;
  long long index_;
};

// A finite cyclic group acting on a graded cohomology model: one matrix per
// degree for the chosen generator.
struct GradedAction {
  FiniteCyclicGroup group;
  std::vector<long long> degrees;       // dimensions d_0 ... d_q
  std::vector<IntMatrix> generator;     // generator matrix per degree
};

// Checks shape and the group relation generator^order = identity in every
// degree (which also forces invertibility over the integers). Throws
// RelationViolation naming the offending degree.
void validate_action(const GradedAction& action);

// Multiplicity of chi in the given degree by character averaging:
// (1/|G|) sum_g conj(chi(g)) tr(g). The average must land on a nonnegative
// integer within 1e-9, else NonIntegralMultiplicity.
long long isotypic_multiplicity(const GradedAction& action, int degree, const Character& chi);

// Multiplicities of the trivial character across all degrees.
std::vector<long long> invariant_betti(const GradedAction& action);

// Averaging projector (1/|G|) sum_g g on one degree, as a row-major double
// matrix. Exposed for property checks.
std::vector<double> averaging_projector(const GradedAction& action, int degree);

// Graded action induced on the full exterior algebra by a matrix on degree
// one: degree k acts by the k-th exterior power (degree 0 by identity,
// degree n by the determinant).
GradedAction exterior_power_action(const IntMatrix& matrix_on_h1, int top_degree,
                                   FiniteCyclicGroup group);

}  // namespace folidx
