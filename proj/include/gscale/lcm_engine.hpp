#ifndef GSCALE_LCM_ENGINE_HPP_
#define GSCALE_LCM_ENGINE_HPP_

// Right LCMs of products of noncore irreducibles computed square by square,
// and reordering of such products by component.
//
// Grid conventions: s = s_1⋯s_m along the left edge, t = t_1⋯t_n along the
// top. Square (k, ℓ), 0 ≤ k < m, 0 ≤ ℓ < n, takes s_{k+1}^{(ℓ)} and
// t_{ℓ+1}^{(k)} and produces t_{ℓ+1}^{(k+1)} and s_{k+1}^{(ℓ+1)} with
//   s_{k+1}^{(ℓ)} t_{ℓ+1}^{(k+1)} = t_{ℓ+1}^{(k)} s_{k+1}^{(ℓ+1)}.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gscale/core_graph.hpp"
#include "gscale/element.hpp"
#include "gscale/monoid.hpp"

namespace gscale {

  struct IrreducibleWord {
    std::vector<Element>     letters;
    std::vector<std::size_t> component_trace;

    std::size_t size() const noexcept {
      return letters.size();
    }
  };

  // Checks every letter and fills the trace.
  IrreducibleWord make_word(Monoid const& m, CoreGraph const& g, std::vector<Element> letters);

  enum class CellTag { Core, Irreducible };
  enum class Process : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };
  enum class GridOutcome { Orthogonal, Complete };

  struct GridDiagram {
    std::size_t m = 0;
    std::size_t n = 0;
    // s_cells[k][ℓ] = s_{k+1}^{(ℓ)}, ℓ = 0..n; t_cells[ℓ][k] = t_{ℓ+1}^{(k)}, k = 0..m.
    std::vector<std::vector<std::optional<Element>>> s_cells, t_cells;
    std::vector<std::vector<std::optional<CellTag>>> s_tags, t_tags;
    // process[k][ℓ], filled in evaluation order.
    std::vector<std::vector<std::optional<Process>>> process;
    std::vector<std::string>                         log;

    GridOutcome                                      outcome = GridOutcome::Complete;
    std::optional<std::pair<std::size_t, std::size_t>> orthogonal_at;
    std::optional<Element>                           lcm;            // s · t_1^{(m)}⋯t_n^{(m)}
    std::optional<Element>                           s_cofactor;     // t_1^{(m)}⋯t_n^{(m)}
    std::optional<Element>                           t_cofactor;     // s_1^{(n)}⋯s_m^{(n)}
    bool                                             oracle_agrees = false;
  };

  Process classify_square(Monoid const& m, CoreGraph const& g, Element const& s_cell,
                          Element const& t_cell);

  // Throws PreconditionError "balanced factorization violated at (k,ℓ)"
  // (or "edge inside component at (k,ℓ)") when the family misbehaves.
  GridDiagram word_lcm(Monoid const& m, CoreGraph const& g, IrreducibleWord const& s,
                       IrreducibleWord const& t);

  // sigma[k] is the index of the letter of s whose component ends up at
  // position k.
  IrreducibleWord permute_word(Monoid const& m, CoreGraph const& g, IrreducibleWord const& s,
                               std::vector<std::size_t> const& sigma);

  // Sorted component indices.
  std::vector<std::size_t> component_multiset(IrreducibleWord const& s);

  char           to_char(Process p);
  nlohmann::json to_json(GridDiagram const& d, Monoid const& m);
  std::string    render_grid(GridDiagram const& d, Monoid const& m);

}  // namespace gscale

#endif  // GSCALE_LCM_ENGINE_HPP_
