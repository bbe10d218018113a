#ifndef GSCALE_FAMILIES_AXB_HPP_
#define GSCALE_FAMILIES_AXB_HPP_

#include <optional>
#include <vector>

#include "gscale/monoid.hpp"

namespace gscale {

  // The ax+b-semigroup ℕ ⋊ 𝒩 where 𝒩 ⊂ ℕ^× is generated by a set of primes
  // (all primes when unrestricted). Elements are pairs (m, p), m ≥ 0, p ∈ 𝒩,
  // with (m,p)(n,q) = (m + pn, pq). Payload: {m, p}.
  //
  // With an empty prime set this is (ℕ, +), the vertex monoid of
  // right-angled Artin monoids.
  class AxbMonoid final : public Monoid {
   public:
    // nullopt = every prime.
    explicit AxbMonoid(std::optional<std::vector<std::int64_t>> primes);

    Element pair(std::int64_t m, std::int64_t p) const;

    std::optional<std::vector<std::int64_t>> const& primes() const noexcept {
      return primes_;
    }

    bool allowed_multiplier(std::int64_t p) const;

    Element    identity() const override;
    Element    multiply(Element const&, Element const&) const override;
    LcmOutcome right_lcm(Element const&, Element const&) const override;
    bool       is_core(Element const&) const override;
    bool       is_unit(Element const&) const override;
    std::optional<Element> inverse(Element const&) const override;
    bool is_noncore_irreducible(Element const&) const override;
    std::optional<IrreducibleFactorization>
                         factor_noncore(Element const&) const override;
    ClassEnumeration     enumerate_irreducible_classes(std::size_t) const override;
    std::vector<Element> enumerate_core_generators() const override;

    bool core_is_units() const override {
      return false;
    }
    bool has_nontrivial_units() const override {
      return false;
    }
    ClassEnumeration     enumerate_atoms(std::size_t cap) const override;
    bool                 is_atom(Element const& x) const override;
    std::vector<Element> factor_atoms(Element const& x) const override;

    Element random_element(std::mt19937_64&, unsigned) const override;
    std::vector<Element> enumerate_elements(unsigned bound) const override;
    std::vector<Element> spot_elements() const override;
    std::string          format(Element const&) const override;
    Element              parse(std::string_view) const override;
    std::optional<std::uint64_t>
    closed_form_scale(Element const&) const override;

   private:
    // i-th prime of 𝒩's generating set (nullopt past the end).
    std::optional<std::int64_t> prime_at(std::size_t i) const;

    std::optional<std::vector<std::int64_t>> primes_;
  };

}  // namespace gscale

#endif  // GSCALE_FAMILIES_AXB_HPP_
