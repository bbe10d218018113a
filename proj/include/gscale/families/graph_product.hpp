#ifndef GSCALE_FAMILIES_GRAPH_PRODUCT_HPP_
#define GSCALE_FAMILIES_GRAPH_PRODUCT_HPP_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gscale/monoid.hpp"

namespace gscale {

  struct GraphProductVertex {
    std::string                   name;
    std::shared_ptr<Monoid const> monoid;
  };

  // Graph product S(Λ, (S_v)) of right LCM monoids: the free product of the
  // vertex monoids modulo st = ts for s ∈ S_v, t ∈ S_w, {v,w} an edge of Λ.
  // With no edges this is the free product.
  //
  // Elements are reduced syllable words (each syllable a non-identity
  // element of one vertex monoid, no two syllables of the same vertex
  // joinable through commuting syllables), listed in the lexicographically
  // least order by vertex index. Payload: {count, (v, len, vertex payload)...}.
  class GraphProductMonoid final : public Monoid {
   public:
    struct Syllable {
      std::size_t vertex;
      Element     value;
    };
    using Word = std::vector<Syllable>;

    GraphProductMonoid(std::vector<GraphProductVertex>                  vertices,
                       std::vector<std::pair<std::size_t, std::size_t>> edges,
                       std::string kind = "graph_product");

    std::size_t vertex_count() const noexcept {
      return vertices_.size();
    }
    GraphProductVertex const& vertex(std::size_t v) const {
      return vertices_.at(v);
    }
    bool adjacent(std::size_t v, std::size_t w) const {
      return adj_[v][w];
    }
    std::vector<std::pair<std::size_t, std::size_t>> const& edges() const noexcept {
      return edges_;
    }
    // Coconnected components of Λ, each sorted, ordered by least vertex.
    std::vector<std::vector<std::size_t>> const& lambda_components() const noexcept {
      return comps_;
    }
    std::size_t lambda_component_of(std::size_t v) const {
      return comp_of_[v];
    }

    // Embeds a vertex element as a one-syllable element.
    Element embed(std::size_t v, Element const& x) const;
    Word    syllables(Element const& s) const;
    Element from_word(Word w) const;
    // Image under the projection onto the j-th coconnected component.
    Word project(Word const& w, std::size_t j) const;

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

    bool                 core_is_units() const override;
    bool                 has_nontrivial_units() const override;
    ClassEnumeration     enumerate_atoms(std::size_t cap) const override;
    bool                 is_atom(Element const& x) const override;
    std::vector<Element> factor_atoms(Element const& x) const override;

    Element random_element(std::mt19937_64&, unsigned) const override;
    std::vector<Element> enumerate_elements(unsigned bound) const override;
    std::vector<Element> spot_elements() const override;
    std::string          format(Element const&) const override;
    Element              parse(std::string_view) const override;

   private:
    Word normalize(Word w) const;
    bool append(Word& out, Syllable const& y) const;
    Word lex_order(Word w) const;
    bool is_component_core(Word const& proj, std::size_t j) const;
    // (a, b) with s·a = y·b generating sS ∩ yS, or nullopt if s ⊥ y.
    std::optional<std::pair<Element, Element>> lcm_with_syllable(Element const& s,
                                                                 Syllable const& y) const;
    // w = core·units, where `core` has no unit syllable that can be moved
    // to the end.
    std::pair<Word, Word> split_terminal_units(Word w) const;
    // Atom factorization of a word all of whose syllables lie in one
    // multi-vertex component, units glued onto neighbouring atoms.
    std::vector<Word> atom_letters(Word const& w) const;

    std::vector<GraphProductVertex>                  vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<bool>>                   adj_;
    std::vector<std::vector<std::size_t>>            comps_;
    std::vector<std::size_t>                         comp_of_;
  };

}  // namespace gscale

#endif  // GSCALE_FAMILIES_GRAPH_PRODUCT_HPP_
