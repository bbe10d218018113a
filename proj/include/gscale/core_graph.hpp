#ifndef GSCALE_CORE_GRAPH_HPP_
#define GSCALE_CORE_GRAPH_HPP_

// The core graph Γ(S): vertices are ∼-classes of noncore irreducibles, edges
// join intersecting classes. Its coconnected components drive everything
// downstream.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gscale/element.hpp"
#include "gscale/monoid.hpp"

namespace gscale {

  // A cardinality in ℕ ∪ {∞}; nullopt is ∞.
  using Cardinality = std::optional<std::uint64_t>;

  std::string format_cardinality(Cardinality c);

  using Adjacency = std::vector<std::vector<bool>>;

  struct CoreGraph {
    std::vector<Element>                             vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
    Adjacency                                        adjacency;
    // Coconnected components, each sorted, ordered by least vertex index.
    std::vector<std::vector<std::size_t>> components;
    std::vector<std::size_t>              vertex_component;
    std::vector<Cardinality>              component_cards;
    bool                                  exhaustive = false;

    // Edges with both ends in component c.
    std::vector<std::pair<std::size_t, std::size_t>> component_edges(std::size_t c) const;
  };

  CoreGraph build_core_graph(Monoid const& m, std::size_t cap);

  // Connected components of the complement graph, two ways.
  std::vector<std::vector<std::size_t>> complement_components_union_find(Adjacency const& adj);
  std::vector<std::vector<std::size_t>> complement_components_bfs(Adjacency const& adj);

  // Index of the stored vertex core equivalent to s, if any.
  std::optional<std::size_t> find_vertex(CoreGraph const& g, Monoid const& m, Element const& s);

  // i(s). Throws PreconditionError "unknown class" if s matches no vertex.
  std::size_t component_of(CoreGraph const& g, Monoid const& m, Element const& s);

  // α_a([s]) = [as], returned as the stored representative when s's image
  // is in the graph (pass nullptr to skip canonicalization).
  Element alpha_act(Monoid const& m, Element const& a, Element const& s,
                    CoreGraph const* g = nullptr);

  enum class BetaKind {
    Identity,    // fixes every vertex
    Preserving,  // maps every component onto itself
    Permuting,   // moves some component to another
  };

  struct BetaGenerator {
    Element                  generator;
    BetaKind                 kind = BetaKind::Identity;
    std::vector<std::size_t> component_map;  // c -> β_a(c)
    bool                     bijective    = true;  // α_a permutes the vertices
    bool                     automorphism = true;  // β_a preserves edges
    bool                     closed       = true;  // every image was found
  };

  struct BetaSummary {
    std::vector<BetaGenerator> generators;
    bool                       conclusive          = false;  // graph exhaustive
    bool                       preserves_components = true;
  };

  BetaSummary beta_component_action(Monoid const& m, CoreGraph const& g);

  std::string to_string(BetaKind k);

  // Graphviz; one cluster per coconnected component.
  std::string to_dot(CoreGraph const& g, Monoid const& m);

}  // namespace gscale

#endif  // GSCALE_CORE_GRAPH_HPP_
