#include "gscale/kernel.hpp"

#include "gscale/error.hpp"

namespace gscale {

  namespace {
    void check_owner(Monoid const& m, Element const& x) {
      if (!m.owns(x)) {
        throw FamilyMismatch("element of family tag " + std::to_string(x.family())
                             + " used with " + m.kind() + " (tag "
                             + std::to_string(m.tag()) + ")");
      }
    }
  }  // namespace

  Element multiply(Monoid const& m, Element const& s, Element const& t) {
    check_owner(m, s);
    check_owner(m, t);
    return m.multiply(s, t);
  }

  Element fold(Monoid const& m, std::span<Element const> word) {
    Element acc = m.identity();
    for (auto const& x : word) {
      check_owner(m, x);
      acc = m.multiply(acc, x);
    }
    return acc;
  }

  LcmOutcome right_lcm(Monoid const& m, Element const& s, Element const& t) {
    check_owner(m, s);
    check_owner(m, t);
    if (s == t) {
      return LcmOutcome(Meet{s, m.identity(), m.identity()});
    }
    return m.right_lcm(s, t);
  }

  bool is_core(Monoid const& m, Element const& s) {
    check_owner(m, s);
    return m.is_core(s);
  }

  bool is_noncore_irreducible(Monoid const& m, Element const& s) {
    check_owner(m, s);
    return m.is_noncore_irreducible(s);
  }

  bool intersects(Monoid const& m, Element const& s, Element const& t) {
    return right_lcm(m, s, t).is_meet();
  }

  bool core_equivalent(Monoid const& m, Element const& s, Element const& t) {
    auto out = right_lcm(m, s, t);
    if (out.is_orthogonal()) {
      return false;
    }
    return m.is_core(out.meet().cofactor_left)
           && m.is_core(out.meet().cofactor_right);
  }

  bool left_divides(Monoid const& m, Element const& s, Element const& r) {
    auto out = right_lcm(m, s, r);
    return out.is_meet() && m.is_unit(out.meet().cofactor_right);
  }

}  // namespace gscale
