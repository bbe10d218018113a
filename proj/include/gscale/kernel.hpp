#ifndef GSCALE_KERNEL_HPP_
#define GSCALE_KERNEL_HPP_

// Generic operations on a right LCM monoid, built from the family
// primitives. All of them check that their arguments belong to `m` and throw
// FamilyMismatch otherwise.

#include <span>

#include "gscale/element.hpp"
#include "gscale/monoid.hpp"

namespace gscale {

  Element multiply(Monoid const& m, Element const& s, Element const& t);

  // s_0 s_1 ⋯ s_{k-1}; the identity for an empty span.
  Element fold(Monoid const& m, std::span<Element const> word);

  LcmOutcome right_lcm(Monoid const& m, Element const& s, Element const& t);

  bool is_core(Monoid const& m, Element const& s);

  bool is_noncore_irreducible(Monoid const& m, Element const& s);

  // s ⋒ t, i.e. sS ∩ tS is nonempty.
  bool intersects(Monoid const& m, Element const& s, Element const& t);

  // s ∼ t. Decided as: the right LCM exists and both cofactors are core.
  bool core_equivalent(Monoid const& m, Element const& s, Element const& t);

  // Does s·u = r hold for some u? Decided via the right LCM: r ∈ sS iff
  // sS ∩ rS = rS, i.e. the cofactor of r is a unit.
  bool left_divides(Monoid const& m, Element const& s, Element const& r);

}  // namespace gscale

#endif  // GSCALE_KERNEL_HPP_
