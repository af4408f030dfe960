#include <doctest.h>

#include "folidx/errors.hpp"
#include "folidx/gauss_bonnet.hpp"

using folidx::Character;
using folidx::ExtendedSpace;
using folidx::FiberModel;
using folidx::FiniteCyclicGroup;
using folidx::FoliationExample;
using folidx::IntMatrix;
using folidx::IrrationalFlowTorus;
using folidx::LeafClosureModel;
using folidx::OrientationTwist;
using folidx::QuotientBetti;
using folidx::SingleLeaf;
using folidx::SpaceKind;
using folidx::SphericalRep;
using folidx::Stratum;
using folidx::SuspensionClosure;

namespace {

Stratum stratum(const std::string& name, SpaceKind kind, long long euler_closed,
                LeafClosureModel model) {
  return Stratum{name, ExtendedSpace{kind, euler_closed}, std::move(model),
                 OrientationTwist::trivial};
}

SuspensionClosure circle_closure(int sign, long long order) {
  return SuspensionClosure{FiberModel::circle(sign), FiniteCyclicGroup{order}};
}

}  // namespace

TEST_CASE("extended euler characteristic") {
  // open interval: one-point compactification is a circle
  CHECK(folidx::extended_euler({SpaceKind::open, 0}) == -1);
  // sphere minus three points: compactification glues three ends to a point
  CHECK(folidx::extended_euler({SpaceKind::open, 0}) == -1);
  // two points, closed
  CHECK(folidx::extended_euler({SpaceKind::closed, 2}) == 2);

  // removing a point from a closed space drops chi by one
  for (long long chi : {-2LL, 0LL, 1LL, 2LL, 5LL}) {
    ExtendedSpace closed{SpaceKind::closed, chi};
    ExtendedSpace punctured{SpaceKind::open, chi};  // compactification restores the point
    CHECK(folidx::extended_euler(punctured) == folidx::extended_euler(closed) - 1);
  }
}

TEST_CASE("leaf closure euler values") {
  CHECK(folidx::leaf_closure_euler(SingleLeaf{}) == 1);
  CHECK(folidx::leaf_closure_euler(IrrationalFlowTorus{}) == 0);
  CHECK(folidx::leaf_closure_euler(QuotientBetti{{1, 2, 1}}) == 0);
  CHECK(folidx::leaf_closure_euler(QuotientBetti{{1, 0}}) == 1);
  // circle suspension with a flip: constants only
  CHECK(folidx::leaf_closure_euler(circle_closure(-1, 2)) == 1);
  // untwisted circle closure: Poincare duality, chi = 0
  CHECK(folidx::leaf_closure_euler(circle_closure(1, 1)) == 0);
}

TEST_CASE("gauss-bonnet assembly of the catalog shapes") {
  FoliationExample rotation{
      "rotation",
      {stratum("poles", SpaceKind::closed, 2, SingleLeaf{}),
       stratum("principal", SpaceKind::open, 0, IrrationalFlowTorus{})},
      std::nullopt};
  CHECK(folidx::gauss_bonnet(rotation) == 2);

  FoliationExample carriere{
      "carriere", {stratum("all", SpaceKind::closed, 0, IrrationalFlowTorus{})}, std::nullopt};
  CHECK(folidx::gauss_bonnet(carriere) == 0);

  FoliationExample klein{
      "klein",
      {stratum("flip", SpaceKind::closed, 2, circle_closure(-1, 2)),
       stratum("principal", SpaceKind::open, 0, circle_closure(1, 1))},
      std::nullopt};
  CHECK(folidx::gauss_bonnet(klein) == 2);

  // strata with vanishing quotient characteristics contribute nothing
  FoliationExample zeros{
      "zeros",
      {stratum("a", SpaceKind::closed, 0, SingleLeaf{}),
       stratum("b", SpaceKind::open, 1, QuotientBetti{{1, 0, 1}})},
      std::nullopt};
  CHECK(folidx::gauss_bonnet(zeros) == 0);

  CHECK_THROWS_AS(folidx::gauss_bonnet(FoliationExample{"empty", {}, std::nullopt}),
                  folidx::ValidationError);
}

TEST_CASE("gauss-bonnet is additive over strata") {
  std::vector<Stratum> part1 = {stratum("a", SpaceKind::closed, 3, SingleLeaf{})};
  std::vector<Stratum> part2 = {stratum("b", SpaceKind::open, 1, QuotientBetti{{2, 1}}),
                                stratum("c", SpaceKind::closed, 2, circle_closure(-1, 2))};
  std::vector<Stratum> all = part1;
  all.insert(all.end(), part2.begin(), part2.end());
  CHECK(folidx::gauss_bonnet({"all", all, std::nullopt}) ==
        folidx::gauss_bonnet({"p1", part1, std::nullopt}) +
            folidx::gauss_bonnet({"p2", part2, std::nullopt}));
}

namespace {

// the three circle strata of the quarter-turn suspension
FoliationExample z4_example() {
  folidx::RhoTable table;
  table.group_order = 4;
  table.per_stratum = {{1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}};
  return FoliationExample{
      "z4",
      {stratum("z4-fixed", SpaceKind::closed, 2, SingleLeaf{}),
       stratum("z2-fixed", SpaceKind::closed, 1, SingleLeaf{}),
       stratum("principal", SpaceKind::open, 0, SingleLeaf{})},
      table};
}

}  // namespace

TEST_CASE("representation-valued assembly of the quarter-turn example") {
  FoliationExample example = z4_example();
  FiniteCyclicGroup z4{4};
  CHECK(folidx::rep_valued_gauss_bonnet(example, Character::rho(z4, 0)) == 2);
  CHECK(folidx::rep_valued_gauss_bonnet(example, Character::rho(z4, 1)) == -1);
  CHECK(folidx::rep_valued_gauss_bonnet(example, Character::rho(z4, 2)) == 0);
  CHECK(folidx::rep_valued_gauss_bonnet(example, Character::rho(z4, 3)) == -1);

  // the trivial column of the table equals the plain leaf-closure values, so
  // the trivial character reproduces the plain assembly
  CHECK(folidx::rep_valued_gauss_bonnet(example, Character::trivial(z4)) ==
        folidx::gauss_bonnet(example));
}

TEST_CASE("rep-valued assembly without a table needs suspension closures") {
  FoliationExample bare{
      "bare", {stratum("a", SpaceKind::closed, 2, SingleLeaf{})}, std::nullopt};
  CHECK_THROWS_AS(
      folidx::rep_valued_gauss_bonnet(bare, Character::trivial(FiniteCyclicGroup{4})),
      folidx::MissingRhoTable);

  // single quarter-turn torus stratum over a disk-like quotient
  SuspensionClosure closure{FiberModel::torus(2, IntMatrix::from_rows({{0, -1}, {1, 0}})),
                            FiniteCyclicGroup{4}};
  FoliationExample fallback{
      "fallback", {stratum("t", SpaceKind::closed, 1, closure)}, std::nullopt};
  FiniteCyclicGroup z4{4};
  CHECK(folidx::rep_valued_gauss_bonnet(fallback, Character::rho(z4, 0)) == 2);
  CHECK(folidx::rep_valued_gauss_bonnet(fallback, Character::rho(z4, 1)) == -1);
  CHECK(folidx::rep_valued_gauss_bonnet(fallback, Character::rho(z4, 2)) == 0);
  CHECK(folidx::rep_valued_gauss_bonnet(fallback, Character::rho(z4, 3)) == -1);

  // group order mismatch cannot be evaluated
  CHECK_THROWS_AS(
      folidx::rep_valued_gauss_bonnet(fallback, Character::trivial(FiniteCyclicGroup{2})),
      folidx::MissingRhoTable);
}

TEST_CASE("h values of the spherical de Rham operator") {
  CHECK(folidx::h_de_rham(SphericalRep::trivial, true) == 2);
  CHECK(folidx::h_de_rham(SphericalRep::trivial, false) == 1);
  CHECK(folidx::h_de_rham(SphericalRep::sign, false) == 1);
  CHECK(folidx::h_de_rham(SphericalRep::sign, true) == 0);
  CHECK(folidx::h_de_rham(SphericalRep::other, true) == 0);
  CHECK(folidx::h_de_rham(SphericalRep::other, false) == 0);
}

TEST_CASE("the beta coefficient collapses to one in both orientation cases") {
  for (bool preserving : {true, false}) {
    int total = folidx::h_de_rham(SphericalRep::sign, preserving) +
                folidx::h_de_rham(SphericalRep::trivial, preserving);
    CHECK(total == 2);  // (h(xi) + h(1)) / 2 = 1
  }
}

TEST_CASE("the spherical de Rham eta invariant vanishes identically") {
  CHECK(folidx::eta_de_rham_sphere(SphericalRep::trivial) == folidx::Rational(0));
  CHECK(folidx::eta_de_rham_sphere(SphericalRep::sign) == folidx::Rational(0));
  CHECK(folidx::eta_de_rham_sphere(SphericalRep::other) == folidx::Rational(0));
}

TEST_CASE("orientation twist selects the sign character on suspension closures") {
  // flip closure of the Klein example: twisting by the orientation character
  // counts the anti-invariant classes instead
  SuspensionClosure flip = circle_closure(-1, 2);
  CHECK(folidx::leaf_closure_euler(flip, OrientationTwist::trivial) == 1);
  CHECK(folidx::leaf_closure_euler(flip, OrientationTwist::sign) == -1);  // 0 - 1

  // no +-1 character exists on an odd-order group
  CHECK_THROWS_AS(folidx::leaf_closure_euler(circle_closure(1, 3), OrientationTwist::sign),
                  folidx::ValidationError);
}
