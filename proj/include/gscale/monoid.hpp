#ifndef GSCALE_MONOID_HPP_
#define GSCALE_MONOID_HPP_

// The primitive contract every monoid family implements. The generic derived
// operations (⋒, core equivalence, ...) live in kernel.hpp and only talk to a
// family through this interface.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gscale/element.hpp"

namespace gscale {

  // Witness s·left_core = (letters[0]⋯letters[k-1])·right_core, with every
  // letter noncore irreducible and both adjustments in the core. This shows
  // s ∼ letters[0]⋯letters[k-1].
  struct IrreducibleFactorization {
    Element              source;
    std::vector<Element> letters;
    Element              left_core;
    Element              right_core;
  };

  // Representatives of distinct ∼-classes, in the family's deterministic
  // order. `exhaustive` is true only if every class has been listed.
  struct ClassEnumeration {
    std::vector<Element> classes;
    bool                 exhaustive = false;
  };

  class Monoid {
   public:
    explicit Monoid(std::string kind);
    Monoid(Monoid const&)            = delete;
    Monoid& operator=(Monoid const&) = delete;
    virtual ~Monoid();

    FamilyTag tag() const noexcept {
      return tag_;
    }

    // Short family identifier such as "axb" or "graph_product".
    std::string const& kind() const noexcept {
      return kind_;
    }

    Element make(Payload p) const {
      return Element(tag_, std::move(p));
    }

    bool owns(Element const& x) const noexcept {
      return x.family() == tag_;
    }

    ////////////////////////////////////////////////////////////////////////
    // Monoid structure. Arguments are assumed to belong to this monoid; the
    // kernel wrappers check that.
    ////////////////////////////////////////////////////////////////////////

    virtual Element    identity() const                                 = 0;
    virtual Element    multiply(Element const&, Element const&) const  = 0;
    virtual LcmOutcome right_lcm(Element const&, Element const&) const = 0;

    // Closed-form membership in S_c.
    virtual bool is_core(Element const&) const = 0;
    virtual bool is_unit(Element const&) const = 0;
    // Inverse of a unit, nullopt otherwise.
    virtual std::optional<Element> inverse(Element const&) const = 0;

    virtual bool is_noncore_irreducible(Element const&) const = 0;
    // nullopt means "not factorable" (only legal for families that are not
    // noncore factorable).
    virtual std::optional<IrreducibleFactorization>
    factor_noncore(Element const&) const = 0;

    virtual ClassEnumeration enumerate_irreducible_classes(std::size_t cap) const
        = 0;
    // Generators of the core used for the α/β analysis.
    virtual std::vector<Element> enumerate_core_generators() const = 0;

    ////////////////////////////////////////////////////////////////////////
    // Atoms: non-units that are not a product of two non-units. Graph
    // products need them for their vertex monoids. The defaults are correct
    // whenever S_c = S^*.
    ////////////////////////////////////////////////////////////////////////

    virtual bool core_is_units() const {
      return true;
    }
    virtual bool has_nontrivial_units() const = 0;
    // Atoms up to right multiplication by units.
    virtual ClassEnumeration     enumerate_atoms(std::size_t cap) const;
    virtual bool                 is_atom(Element const& x) const;
    // Exact factorization x = a_1⋯a_k into atoms (k = 0 iff x is a unit,
    // in which case {x} is returned if x is not the identity).
    virtual std::vector<Element> factor_atoms(Element const& x) const;

    ////////////////////////////////////////////////////////////////////////
    // Sampling, bounded enumeration (for oracles), syntax.
    ////////////////////////////////////////////////////////////////////////

    virtual Element random_element(std::mt19937_64& rng, unsigned size) const
        = 0;
    // All elements whose family-specific size is at most `bound`.
    virtual std::vector<Element> enumerate_elements(unsigned bound) const = 0;
    // A few hand-picked elements exercised by the sampled checks.
    virtual std::vector<Element> spot_elements() const {
      return {};
    }

    virtual std::string format(Element const&) const  = 0;
    virtual Element     parse(std::string_view) const = 0;

    // The family's closed-form scale, where one is known; used only to
    // cross-check the constructed scale.
    virtual std::optional<std::uint64_t>
    closed_form_scale(Element const&) const {
      return std::nullopt;
    }

   private:
    FamilyTag   tag_;
    std::string kind_;
  };

  // Splits "(0,2)(1,3)" or "[a:(1,1)][b:(0,2)]" into top-level bracket
  // groups. Whitespace between groups is ignored.
  std::vector<std::string> split_element_list(std::string_view text);

}  // namespace gscale

#endif  // GSCALE_MONOID_HPP_
