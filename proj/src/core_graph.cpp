#include "gscale/core_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gscale/error.hpp"
#include "gscale/kernel.hpp"

namespace gscale {

  std::string format_cardinality(Cardinality c) {
    return c ? std::to_string(*c) : "inf";
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  CoreGraph::component_edges(std::size_t c) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto const& e : edges) {
      if (vertex_component[e.first] == c && vertex_component[e.second] == c) {
        out.push_back(e);
      }
    }
    return out;
  }

  namespace {
    std::vector<std::vector<std::size_t>> canonical(std::vector<std::vector<std::size_t>> cs) {
      for (auto& c : cs) {
        std::sort(c.begin(), c.end());
      }
      std::sort(cs.begin(), cs.end());
      return cs;
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };
  }  // namespace

  std::vector<std::vector<std::size_t>> complement_components_union_find(Adjacency const& adj) {
    auto const n = adj.size();
    UnionFind  uf(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!adj[i][j]) {
          uf.unite(i, j);
        }
      }
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) {
      groups[uf.find(i)].push_back(i);
    }
    std::erase_if(groups, [](auto const& g) { return g.empty(); });
    return canonical(std::move(groups));
  }

  std::vector<std::vector<std::size_t>> complement_components_bfs(Adjacency const& adj) {
    auto const                            n = adj.size();
    std::vector<bool>                     seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) {
        continue;
      }
      std::vector<std::size_t> comp{s};
      seen[s] = true;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        for (std::size_t w = 0; w < n; ++w) {
          if (!seen[w] && w != comp[k] && !adj[comp[k]][w]) {
            seen[w] = true;
            comp.push_back(w);
          }
        }
      }
      out.push_back(std::move(comp));
    }
    return canonical(std::move(out));
  }

  CoreGraph build_core_graph(Monoid const& m, std::size_t cap) {
    if (cap == 0) {
      throw PreconditionError("build_core_graph: cap must be at least 1");
    }
    CoreGraph g;
    auto      ce = m.enumerate_irreducible_classes(cap);
    g.exhaustive = ce.exhaustive;
    for (auto const& x : ce.classes) {
      bool dup = std::any_of(g.vertices.begin(), g.vertices.end(),
                             [&](Element const& v) { return core_equivalent(m, v, x); });
      if (!dup) {
        g.vertices.push_back(x);
      }
    }
    auto const n = g.vertices.size();
    g.adjacency.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (intersects(m, g.vertices[i], g.vertices[j])) {
          g.adjacency[i][j] = g.adjacency[j][i] = true;
          g.edges.emplace_back(i, j);
        }
      }
    }
    g.components = complement_components_union_find(g.adjacency);
    g.vertex_component.assign(n, 0);
    for (std::size_t c = 0; c < g.components.size(); ++c) {
      for (auto v : g.components[c]) {
        g.vertex_component[v] = c;
      }
      g.component_cards.push_back(g.components[c].size());
    }
    return g;
  }

  std::optional<std::size_t> find_vertex(CoreGraph const& g, Monoid const& m, Element const& s) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (g.vertices[i] == s || core_equivalent(m, g.vertices[i], s)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::size_t component_of(CoreGraph const& g, Monoid const& m, Element const& s) {
    auto v = find_vertex(g, m, s);
    if (!v) {
      throw PreconditionError("unknown class: " + m.format(s)
                              + " matches no vertex of the core graph");
    }
    return g.vertex_component[*v];
  }

  Element alpha_act(Monoid const& m, Element const& a, Element const& s, CoreGraph const* g) {
    if (!is_core(m, a)) {
      throw PreconditionError("alpha_act: " + m.format(a) + " is not in the core");
    }
    Element as = multiply(m, a, s);
    if (g) {
      if (auto v = find_vertex(*g, m, as)) {
        return g->vertices[*v];
      }
    }
    return as;
  }

  BetaSummary beta_component_action(Monoid const& m, CoreGraph const& g) {
    BetaSummary out;
    out.conclusive = g.exhaustive;
    auto const n   = g.vertices.size();
    for (auto const& a : m.enumerate_core_generators()) {
      BetaGenerator b;
      b.generator = a;
      std::vector<std::optional<std::size_t>> image(n);
      for (std::size_t i = 0; i < n; ++i) {
        image[i] = find_vertex(g, m, multiply(m, a, g.vertices[i]));
        b.closed = b.closed && image[i].has_value();
      }
      std::vector<bool> hit(n, false);
      for (auto const& im : image) {
        if (im) {
          b.bijective = b.bijective && !hit[*im];
          hit[*im]    = true;
        }
      }
      b.bijective = b.bijective && b.closed;
      for (std::size_t i = 0; i < n && b.closed; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (g.adjacency[i][j] != g.adjacency[*image[i]][*image[j]]) {
            b.automorphism = false;
          }
        }
      }
      bool fixes_all = b.closed;
      for (std::size_t i = 0; i < n && b.closed; ++i) {
        fixes_all = fixes_all && *image[i] == i;
      }
      bool preserves = b.closed;
      for (std::size_t c = 0; c < g.components.size(); ++c) {
        std::size_t target = c;
        if (b.closed) {
          target = g.vertex_component[*image[g.components[c].front()]];
          for (auto v : g.components[c]) {
            if (g.vertex_component[*image[v]] != target) {
              b.automorphism = false;
            }
          }
        }
        b.component_map.push_back(target);
        preserves = preserves && target == c;
      }
      b.kind = fixes_all ? BetaKind::Identity
                         : (preserves ? BetaKind::Preserving : BetaKind::Permuting);
      out.preserves_components = out.preserves_components && preserves;
      out.generators.push_back(std::move(b));
    }
    return out;
  }

  std::string to_string(BetaKind k) {
    switch (k) {
      case BetaKind::Identity:
        return "identity";
      case BetaKind::Preserving:
        return "component-preserving";
      case BetaKind::Permuting:
        return "permutes components";
    }
    return "?";
  }

  namespace {
    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out.push_back('\\');
        }
        out.push_back(c);
      }
      return out;
    }
  }  // namespace

  std::string to_dot(CoreGraph const& g, Monoid const& m) {
    std::ostringstream os;
    os << "graph core {\n";
    os << "  // " << m.kind() << ", " << g.vertices.size() << " vertices, " << g.edges.size()
       << " edges" << (g.exhaustive ? "" : ", not exhaustive") << "\n";
    for (std::size_t c = 0; c < g.components.size(); ++c) {
      os << "  subgraph cluster_" << c << " {\n";
      os << "    label=\"V" << c << " |V|=" << format_cardinality(g.component_cards[c])
         << "\";\n";
      for (auto v : g.components[c]) {
        os << "    n" << v << " [label=\"" << dot_escape(m.format(g.vertices[v])) << "\"];\n";
      }
      os << "  }\n";
    }
    for (auto const& [a, b] : g.edges) {
      os << "  n" << a << " -- n" << b << ";\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace gscale
