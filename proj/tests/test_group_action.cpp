#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "folidx/errors.hpp"
#include "folidx/group_action.hpp"

using folidx::Character;
using folidx::FiniteCyclicGroup;
using folidx::GradedAction;
using folidx::IntMatrix;

namespace {

IntMatrix quarter_turn() { return IntMatrix::from_rows({{0, -1}, {1, 0}}); }

// Z4 quarter turn acting on the cohomology of the 2-torus.
GradedAction z4_torus_action() {
  return folidx::exterior_power_action(quarter_turn(), 2, FiniteCyclicGroup{4});
}

// Deterministic finite-order integer matrices: a block diagonal of cyclotomic
// companion blocks whose orders divide group_order, conjugated by a random
// unimodular matrix.
struct UnimodularPair {
  IntMatrix u, u_inv;
};

UnimodularPair random_unimodular(int n, std::mt19937& rng) {
  IntMatrix u = IntMatrix::identity(n);
  IntMatrix u_inv = IntMatrix::identity(n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int step = 0; step < 2 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    int c = coef(rng);
    if (i == j || c == 0) continue;
    IntMatrix e = IntMatrix::identity(n);
    e.at(i, j) = c;
    IntMatrix e_inv = IntMatrix::identity(n);
    e_inv.at(i, j) = -c;
    u = u * e;
    u_inv = e_inv * u_inv;
  }
  return {u, u_inv};
}

std::vector<IntMatrix> blocks_for_order(long long group_order) {
  struct Block {
    long long order;
    std::vector<std::vector<long long>> rows;
  };
  static const std::vector<Block> pool = {
      {1, {{1}}},
      {2, {{-1}}},
      {3, {{0, -1}, {1, -1}}},
      {4, {{0, -1}, {1, 0}}},
      {6, {{0, -1}, {1, 1}}},
      {5, {{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}},
      {8, {{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}},
      {10, {{0, 0, 0, -1}, {1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, 1}}},
      {12, {{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}},
  };
  std::vector<IntMatrix> out;
  for (const Block& b : pool)
    if (group_order % b.order == 0) out.push_back(IntMatrix::from_rows(b.rows));
  return out;
}

IntMatrix random_finite_order_matrix(long long group_order, int max_dim, std::mt19937& rng) {
  auto blocks = blocks_for_order(group_order);
  std::vector<IntMatrix> chosen;
  int dim = 0;
  std::uniform_int_distribution<size_t> pick(0, blocks.size() - 1);
  while (true) {
    const IntMatrix& b = blocks[pick(rng)];
    if (dim + b.size() > max_dim) break;
    chosen.push_back(b);
    dim += b.size();
    if (dim == max_dim) break;
  }
  if (chosen.empty()) chosen.push_back(blocks[0]);
  dim = 0;
  for (const IntMatrix& b : chosen) dim += b.size();
  IntMatrix diag(dim);
  int off = 0;
  for (const IntMatrix& b : chosen) {
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j) diag.at(off + i, off + j) = b.at(i, j);
    off += b.size();
  }
  auto [u, u_inv] = random_unimodular(dim, rng);
  return u * diag * u_inv;
}

}  // namespace

TEST_CASE("integer matrix determinant and powers") {
  CHECK(quarter_turn().det() == 1);
  CHECK(IntMatrix::from_rows({{2, 1}, {1, 1}}).det() == 1);
  CHECK(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).det() == 0);
  CHECK(IntMatrix::from_rows({{3, 1, 0}, {-1, 2, 5}, {4, 0, 2}}).det() == 34);
  CHECK(quarter_turn().pow(4) == IntMatrix::identity(2));
  CHECK(quarter_turn().pow(2) == IntMatrix::from_rows({{-1, 0}, {0, -1}}));
  CHECK(IntMatrix(0).det() == 1);
}

TEST_CASE("validate_action accepts true actions and names violations") {
  CHECK_NOTHROW(folidx::validate_action(z4_torus_action()));

  GradedAction identity_action{FiniteCyclicGroup{7}, {2, 3}, {IntMatrix::identity(2),
                                                              IntMatrix::identity(3)}};
  CHECK_NOTHROW(folidx::validate_action(identity_action));

  // infinite-order hyperbolic matrix
  GradedAction bad{FiniteCyclicGroup{4}, {2},
                   {IntMatrix::from_rows({{2, 1}, {1, 1}})}};
  CHECK_THROWS_AS(folidx::validate_action(bad), folidx::RelationViolation);
  try {
    folidx::validate_action(bad);
  } catch (const folidx::RelationViolation& e) {
    CHECK(std::string(e.what()).find("degree 0") != std::string::npos);
    CHECK(std::string(e.what()).find("[[2,1],[1,1]]") != std::string::npos);
  }

  GradedAction mismatched{FiniteCyclicGroup{2}, {3}, {IntMatrix::identity(2)}};
  CHECK_THROWS_AS(folidx::validate_action(mismatched), folidx::ValidationError);
}

TEST_CASE("isotypic multiplicities of the quarter turn on torus cohomology") {
  GradedAction action = z4_torus_action();
  FiniteCyclicGroup z4{4};
  // invariant forms: constants and the area form only
  CHECK(folidx::isotypic_multiplicity(action, 0, Character::trivial(z4)) == 1);
  CHECK(folidx::isotypic_multiplicity(action, 1, Character::trivial(z4)) == 0);
  CHECK(folidx::isotypic_multiplicity(action, 2, Character::trivial(z4)) == 1);
  // each eigencharacter picks up one line in degree one
  CHECK(folidx::isotypic_multiplicity(action, 1, Character::rho(z4, 1)) == 1);
  CHECK(folidx::isotypic_multiplicity(action, 1, Character::rho(z4, 2)) == 0);
  CHECK(folidx::isotypic_multiplicity(action, 1, Character::rho(z4, 3)) == 1);
}

TEST_CASE("invariant betti vectors") {
  CHECK(folidx::invariant_betti(z4_torus_action()) == std::vector<long long>{1, 0, 1});

  // Z2 flip on the circle: dim H^0 = 1 but dim H^1 = 0
  GradedAction flip{FiniteCyclicGroup{2}, {1, 1},
                    {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})}};
  CHECK(folidx::invariant_betti(flip) == std::vector<long long>{1, 0});

  // trivial action keeps the raw betti numbers
  GradedAction trivial{FiniteCyclicGroup{1}, {1, 2, 1},
                       {IntMatrix::identity(1), IntMatrix::identity(2), IntMatrix::identity(1)}};
  CHECK(folidx::invariant_betti(trivial) == std::vector<long long>{1, 2, 1});
}

TEST_CASE("degree zero constants are always invariant") {
  GradedAction action{FiniteCyclicGroup{6}, {1}, {IntMatrix::identity(1)}};
  CHECK(folidx::isotypic_multiplicity(action, 0, Character::trivial(FiniteCyclicGroup{6})) == 1);
}

TEST_CASE("inconsistent action and character raise NonIntegralMultiplicity") {
  // order-2 matrix declared under a Z3 average
  GradedAction lying{FiniteCyclicGroup{3}, {1}, {IntMatrix::from_rows({{-1}})}};
  CHECK_THROWS_AS(
      folidx::isotypic_multiplicity(lying, 0, Character::trivial(FiniteCyclicGroup{3})),
      folidx::NonIntegralMultiplicity);
}

TEST_CASE("exterior power action of the quarter turn") {
  GradedAction action = z4_torus_action();
  CHECK(action.degrees == std::vector<long long>{1, 2, 1});
  CHECK(action.generator[0].trace() == 1);
  CHECK(action.generator[1].trace() == 0);
  CHECK(action.generator[2].trace() == 1);  // determinant 1

  GradedAction hyper =
      folidx::exterior_power_action(IntMatrix::from_rows({{2, 1}, {1, 1}}), 2,
                                    FiniteCyclicGroup{1});
  CHECK(hyper.generator[2] == IntMatrix::from_rows({{1}}));

  GradedAction id3 = folidx::exterior_power_action(IntMatrix::identity(3), 3,
                                                   FiniteCyclicGroup{1});
  for (const IntMatrix& m : id3.generator) CHECK(m == IntMatrix::identity(m.size()));

  CHECK_THROWS_AS(folidx::exterior_power_action(quarter_turn(), 3, FiniteCyclicGroup{4}),
                  folidx::ValidationError);
}

TEST_CASE("exterior powers are functorial") {
  std::mt19937 rng(7);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 30; ++trial) {
      IntMatrix a = random_finite_order_matrix(12, dim, rng);
      IntMatrix b = random_finite_order_matrix(12, dim, rng);
      if (a.size() != dim || b.size() != dim) continue;
      for (int k = 0; k <= dim; ++k)
        CHECK(folidx::exterior_power(a * b, k) ==
              folidx::exterior_power(a, k) * folidx::exterior_power(b, k));
    }
  }
}

TEST_CASE("character decomposition is complete for cyclic groups up to order 12") {
  std::mt19937 rng(11);
  for (long long order = 1; order <= 12; ++order) {
    FiniteCyclicGroup g{order};
    for (int trial = 0; trial < 8; ++trial) {
      IntMatrix m = random_finite_order_matrix(order, 4, rng);
      GradedAction action{g, {m.size()}, {m}};
      folidx::validate_action(action);
      long long total = 0;
      for (long long j = 0; j < order; ++j)
        total += folidx::isotypic_multiplicity(action, 0, Character::rho(g, j));
      CHECK(total == m.size());
    }
  }
}

TEST_CASE("averaging projector is idempotent with trace the invariant betti") {
  std::mt19937 rng(13);
  for (long long order : {2, 3, 4, 6, 12}) {
    FiniteCyclicGroup g{order};
    IntMatrix m = random_finite_order_matrix(order, 4, rng);
    GradedAction action{g, {m.size()}, {m}};
    folidx::validate_action(action);
    std::vector<double> p = folidx::averaging_projector(action, 0);
    int n = m.size();
    double trace = 0.0;
    for (int i = 0; i < n; ++i) {
      trace += p[static_cast<size_t>(i) * n + i];
      for (int j = 0; j < n; ++j) {
        double pij = 0.0;
        for (int k = 0; k < n; ++k)
          pij += p[static_cast<size_t>(i) * n + k] * p[static_cast<size_t>(k) * n + j];
        CHECK(std::abs(pij - p[static_cast<size_t>(i) * n + j]) < 1e-9);
      }
    }
    long long invariant =
        folidx::isotypic_multiplicity(action, 0, Character::trivial(g));
    CHECK(std::abs(trace - static_cast<double>(invariant)) < 1e-9);
  }
}

TEST_CASE("sign character needs even order") {
  CHECK(Character::sign(FiniteCyclicGroup{2}).index() == 1);
  CHECK(Character::sign(FiniteCyclicGroup{4}).index() == 2);
  CHECK(Character::sign(FiniteCyclicGroup{4}).is_sign());
  CHECK_THROWS_AS(Character::sign(FiniteCyclicGroup{3}), folidx::ValidationError);
}
