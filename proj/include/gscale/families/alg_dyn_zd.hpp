#ifndef GSCALE_FAMILIES_ALG_DYN_ZD_HPP_
#define GSCALE_FAMILIES_ALG_DYN_ZD_HPP_

#include <string>
#include <vector>

#include "gscale/int_lattice.hpp"
#include "gscale/monoid.hpp"

namespace gscale {

  // Shape of the acting monoid P of integer matrices.
  enum class MatrixMonoidKind {
    Free,         // free on the generators
    Commutative,  // ℕ^k, generators commute and are pairwise independent
    Flip,         // ⟨p₀, x⟩ ⊂ M₂(ℤ), p₀ = diag(p,1), x the coordinate swap
  };

  struct MatrixGenerator {
    std::string  name;
    lattice::Mat matrix;
  };

  struct AlgDynZdSpec {
    std::size_t                  dim = 1;
    MatrixMonoidKind             kind = MatrixMonoidKind::Commutative;
    std::vector<MatrixGenerator> generators;  // Free and Commutative
    std::int64_t                 flip_p = 2;  // Flip

    static AlgDynZdSpec flip(std::int64_t p);
    // Throws ConfigError naming the violated invariant.
    void validate() const;
  };

  // ℤ^d ⋊ P with (m,p)(n,q) = (m + A_p n, pq). Payload: {m_1..m_d, P-part}
  // where the P-part is the exponent vector (Commutative), the generator
  // word (Free), or {a, b, ε} for p₀^a p₁^b x^ε (Flip).
  class AlgDynZdMonoid final : public Monoid {
   public:
    explicit AlgDynZdMonoid(AlgDynZdSpec spec);

    AlgDynZdSpec const& spec() const noexcept {
      return spec_;
    }
    std::size_t dim() const noexcept {
      return spec_.dim;
    }

    Element      pair(lattice::Vec const& m, Payload const& p) const;
    lattice::Vec translation(Element const& s) const;
    Payload      p_part(Element const& s) const;
    lattice::Mat matrix_of(Payload const& p) const;

    // P-structure.
    Payload                p_identity() const;
    Payload                p_mul(Payload const& p, Payload const& q) const;
    bool                   p_is_unit(Payload const& p) const;
    bool                   p_is_atom(Payload const& p) const;
    std::optional<Payload> p_lcm(Payload const& p, Payload const& q) const;
    // c with p·c = r, assuming r ∈ pP.
    Payload              p_left_quotient(Payload const& p, Payload const& r) const;
    // Atoms of P up to right multiplication by units.
    std::vector<Payload> p_atoms() const;
    // p = a_1⋯a_k·u with atoms a_i and a unit u (identity if P^* trivial).
    std::pair<std::vector<Payload>, Payload> p_factor(Payload const& p) const;
    std::string                              p_format(Payload const& p) const;
    Payload                                  p_parse(std::string_view text) const;

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
    std::size_t p_length(Payload const& p) const;

    AlgDynZdSpec              spec_;
    std::vector<lattice::Mat> gen_matrices_;  // Flip: {p₀, p₁, x}
  };

}  // namespace gscale

#endif  // GSCALE_FAMILIES_ALG_DYN_ZD_HPP_
