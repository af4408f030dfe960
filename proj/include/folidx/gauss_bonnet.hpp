#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "folidx/cohomology.hpp"
#include "folidx/rational.hpp"

namespace folidx {

// Euler characteristic bookkeeping for possibly-open quotient spaces: open
// spaces are counted through their one-point compactification minus 1.
enum class SpaceKind { closed, open };

struct ExtendedSpace {
  SpaceKind kind = SpaceKind::closed;
  long long euler_closed = 0;  // chi of the space itself, or of its one-point compactification
};

long long extended_euler(const ExtendedSpace& space);

// Orientation twist of the normal bundle along a stratum, as a character
// flag. Zero-dimensional quotients are always orientable, hence trivial.
enum class OrientationTwist { trivial, sign };

// Models for the twisted basic Euler characteristic of a representative leaf
// closure.
struct SingleLeaf {};              // chi = 1
struct IrrationalFlowTorus {};     // chi = 0
struct QuotientBetti {
  BettiVector betti;               // chi = alternating sum, twist already folded in
};
struct SuspensionClosure {
  FiberModel fiber;
  FiniteCyclicGroup group;
};

using LeafClosureModel =
    std::variant<SingleLeaf, IrrationalFlowTorus, QuotientBetti, SuspensionClosure>;

long long leaf_closure_euler(const LeafClosureModel& model,
                             OrientationTwist twist = OrientationTwist::trivial);

struct Stratum {
  std::string name;
  ExtendedSpace quotient;
  LeafClosureModel leaf_closure;
  OrientationTwist twist = OrientationTwist::trivial;
};

// chi^rho values of representative leaf closures: one row per stratum, one
// column per character of the cyclic structure group.
struct RhoTable {
  long long group_order = 1;
  std::vector<std::vector<long long>> per_stratum;
};

struct FoliationExample {
  std::string name;
  std::vector<Stratum> strata;
  std::optional<RhoTable> rho_table;
};

// Basic Euler characteristic as the stratified assembly
// sum_j chi(M_j / Fbar) * chi(L_j, F, O_j).
long long gauss_bonnet(const FoliationExample& example);

// Representation-valued variant: the leaf-closure factors are the chi^rho
// entries of the rho table (or, when every stratum is a suspension closure
// over rho's group, the alternating isotypic multiplicities).
long long rep_valued_gauss_bonnet(const FoliationExample& example, const Character& rho);

// Isotropy representation type of the spherical de Rham operator: trivial,
// the +-1 orientation character, or anything else.
enum class SphericalRep { trivial, sign, other };

// Kernel dimension h of the equivariant spherical de Rham operator by case:
// (trivial, preserving) -> 2, (trivial, reversing) -> 1, (sign, reversing)
// -> 1, everything else -> 0.
int h_de_rham(SphericalRep sigma, bool orientation_preserving);

// Eta invariant of the spherical de Rham operator: identically zero for
// every representation type. Exposed so coefficient identities can be
// checked against h_de_rham.
Rational eta_de_rham_sphere(SphericalRep sigma);

}  // namespace folidx
