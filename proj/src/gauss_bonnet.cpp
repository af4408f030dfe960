#include "folidx/gauss_bonnet.hpp"

#include "folidx/errors.hpp"

namespace folidx {

long long extended_euler(const ExtendedSpace& space) {
  return space.kind == SpaceKind::closed ? space.euler_closed : space.euler_closed - 1;
}

namespace {

Character twist_character(const SuspensionClosure& closure, OrientationTwist twist) {
  return twist == OrientationTwist::trivial ? Character::trivial(closure.group)
                                            : Character::sign(closure.group);
}

}  // namespace

long long leaf_closure_euler(const LeafClosureModel& model, OrientationTwist twist) {
  return std::visit(
      [&](const auto& m) -> long long {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SingleLeaf>) {
          return 1;
        } else if constexpr (std::is_same_v<T, IrrationalFlowTorus>) {
          return 0;
        } else if constexpr (std::is_same_v<T, QuotientBetti>) {
          return basic_euler(m.betti);
        } else {
          return basic_euler(
              suspension_basic_betti(m.fiber, m.group, twist_character(m, twist)));
        }
      },
      model);
}

long long gauss_bonnet(const FoliationExample& example) {
  if (example.strata.empty())
    throw ValidationError("foliation example needs at least one stratum");
  long long chi = 0;
  for (const Stratum& s : example.strata)
    chi += extended_euler(s.quotient) * leaf_closure_euler(s.leaf_closure, s.twist);
  return chi;
}

namespace {

// chi^rho of a suspension-closure leaf: alternating sum of the rho-isotypic
// multiplicities in the fiber cohomology.
long long rep_closure_euler(const SuspensionClosure& closure, const Character& rho) {
  BettiVector betti = suspension_basic_betti(closure.fiber, closure.group, rho);
  return basic_euler(betti);
}

}  // namespace

long long rep_valued_gauss_bonnet(const FoliationExample& example, const Character& rho) {
  if (example.strata.empty())
    throw ValidationError("foliation example needs at least one stratum");
  if (example.rho_table) {
    const RhoTable& table = *example.rho_table;
    if (table.group_order != rho.group().order)
      throw MissingRhoTable("rho table is for group order " +
                            std::to_string(table.group_order) + ", character lives in order " +
                            std::to_string(rho.group().order));
    if (table.per_stratum.size() != example.strata.size())
      throw ValidationError("rho table must have one row per stratum");
    long long chi = 0;
    for (size_t j = 0; j < example.strata.size(); ++j) {
      const auto& row = table.per_stratum[j];
      if (static_cast<long long>(row.size()) != table.group_order)
        throw ValidationError("rho table row " + std::to_string(j) +
                              " must have one entry per character");
      chi += extended_euler(example.strata[j].quotient) * row[rho.index()];
    }
    return chi;
  }
  // No table: usable only when every leaf closure is a suspension closure
  // over rho's group, so chi^rho can be evaluated isotypically.
  long long chi = 0;
  for (const Stratum& s : example.strata) {
    const auto* closure = std::get_if<SuspensionClosure>(&s.leaf_closure);
    if (closure == nullptr || closure->group.order != rho.group().order)
      throw MissingRhoTable(
          "no rho table and stratum '" + s.name +
          "' is not a suspension closure over the character's group");
    chi += extended_euler(s.quotient) * rep_closure_euler(*closure, rho);
  }
  return chi;
}

int h_de_rham(SphericalRep sigma, bool orientation_preserving) {
  if (sigma == SphericalRep::trivial) return orientation_preserving ? 2 : 1;
  if (sigma == SphericalRep::sign) return orientation_preserving ? 0 : 1;
  return 0;
}

Rational eta_de_rham_sphere(SphericalRep) { return Rational(0); }

}  // namespace folidx
