#ifndef GSCALE_FAMILIES_ALG_DYN_F2T_HPP_
#define GSCALE_FAMILIES_ALG_DYN_F2T_HPP_

#include <string>
#include <vector>

#include "gscale/monoid.hpp"
#include "gscale/poly2.hpp"

namespace gscale {

  struct PolyGenerator {
    std::string name;
    Poly2       poly;
  };

  // 𝔽₂[t] ⋊ ℕ^k where the i-th generator acts by multiplication with a
  // polynomial f_i. The f_i must be pairwise coprime of degree >= 1.
  // Ledrappier's shift is f = (t, 1+t).
  //
  // Elements (g, n) with (g,n)(h,m) = (g + f^n h, n + m).
  // Payload: {n_1..n_k, limbs of g...}.
  class AlgDynF2tMonoid final : public Monoid {
   public:
    explicit AlgDynF2tMonoid(std::vector<PolyGenerator> generators);

    static std::vector<PolyGenerator> ledrappier();

    std::vector<PolyGenerator> const& generators() const noexcept {
      return gens_;
    }

    Element                    pair(Poly2 const& g, std::vector<std::int64_t> const& n) const;
    Poly2                      poly_part(Element const& s) const;
    std::vector<std::int64_t>  exponents(Element const& s) const;
    Poly2                      power_product(std::vector<std::int64_t> const& n) const;

    // (g, n) ↦ [G : f^n G] = 2^{Σ deg f_i · n_i}. A homomorphism to ℕ^×,
    // trivial exactly on G. Not a generalized scale once k >= 2.
    std::uint64_t index_homomorphism(Element const& s) const;

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
    bool                 has_nontrivial_units() const override {
      return true;
    }

    Element random_element(std::mt19937_64&, unsigned) const override;
    std::vector<Element> enumerate_elements(unsigned bound) const override;
    std::vector<Element> spot_elements() const override;
    std::string          format(Element const&) const override;
    Element              parse(std::string_view) const override;
    std::optional<std::uint64_t>
    closed_form_scale(Element const&) const override;

   private:
    std::vector<PolyGenerator> gens_;
  };

}  // namespace gscale

#endif  // GSCALE_FAMILIES_ALG_DYN_F2T_HPP_
