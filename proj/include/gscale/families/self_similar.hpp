#ifndef GSCALE_FAMILIES_SELF_SIMILAR_HPP_
#define GSCALE_FAMILIES_SELF_SIMILAR_HPP_

#include <string>
#include <vector>

#include "gscale/monoid.hpp"

namespace gscale {

  // A finite group acting self-similarly on X^*, given by tables indexed by
  // group element and letter.
  struct SelfSimilarAction {
    std::string                   alphabet;      // one char per letter
    std::vector<std::string>      group_names;   // element labels
    std::vector<std::vector<int>> mul;           // mul[g][h] = gh
    std::vector<std::vector<int>> action;        // action[g][x] = g(x)
    std::vector<std::vector<int>> restriction;   // restriction[g][x] = g|_x

    // Trivial group on the given alphabet.
    static SelfSimilarAction free_monoid(std::string alphabet);

    // Throws ConfigError naming the violated invariant.
    void validate() const;
  };

  // The Zappa–Szép product X^* ⋈ G. Elements (w, g) with product
  // (v,g)(w,h) = (v g(w), g|_w h). Payload: {g, x_1, ..., x_n}.
  class SelfSimilarMonoid final : public Monoid {
   public:
    explicit SelfSimilarMonoid(SelfSimilarAction action);

    Element pair(std::vector<int> const& word, int g) const;
    Element pair(std::string_view word, std::string_view g) const;

    std::size_t alphabet_size() const noexcept {
      return act_.alphabet.size();
    }
    std::size_t group_order() const noexcept {
      return act_.group_names.size();
    }
    static std::size_t word_length(Element const& s) {
      return s.payload().size() - 1;
    }

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
      return group_order() > 1;
    }

    Element random_element(std::mt19937_64&, unsigned) const override;
    std::vector<Element> enumerate_elements(unsigned bound) const override;
    std::vector<Element> spot_elements() const override;
    std::string          format(Element const&) const override;
    Element              parse(std::string_view) const override;
    std::optional<std::uint64_t>
    closed_form_scale(Element const&) const override;

   private:
    // Applies g to the word [first, last); returns g|_word.
    int act_on(int g, std::vector<std::int64_t>::iterator first,
               std::vector<std::int64_t>::iterator last) const;

    SelfSimilarAction act_;
    int               identity_ = 0;
    std::vector<int>  inverse_;
  };

}  // namespace gscale

#endif  // GSCALE_FAMILIES_SELF_SIMILAR_HPP_
