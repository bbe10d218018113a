#include "gscale/families/graph_product.hpp"

#include <algorithm>
#include <set>

#include "gscale/error.hpp"
#include "gscale/kernel.hpp"

namespace gscale {

  namespace {
    GraphProductMonoid::Word concat(GraphProductMonoid::Word a,
                                    GraphProductMonoid::Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }  // namespace

  GraphProductMonoid::GraphProductMonoid(
      std::vector<GraphProductVertex>                  vertices,
      std::vector<std::pair<std::size_t, std::size_t>> edges, std::string kind)
      : Monoid(std::move(kind)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    auto const n = vertices_.size();
    if (n == 0) {
      throw ConfigError("vertices", "at least one vertex required");
    }
    std::set<std::string> names;
    for (std::size_t v = 0; v < n; ++v) {
      if (!vertices_[v].monoid) {
        throw ConfigError("vertices[" + std::to_string(v) + "]", "missing vertex monoid");
      }
      if (!names.insert(vertices_[v].name).second) {
        throw ConfigError("vertices[" + std::to_string(v) + "].name",
                          "duplicate vertex name \"" + vertices_[v].name + "\"");
      }
    }
    adj_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [a, b] = edges_[i];
      if (a >= n || b >= n || a == b) {
        throw ConfigError("edges[" + std::to_string(i) + "]", "invalid edge");
      }
      adj_[a][b] = adj_[b][a] = true;
    }
    // Connected components of the complement graph.
    comp_of_.assign(n, n);
    for (std::size_t start = 0; start < n; ++start) {
      if (comp_of_[start] != n) {
        continue;
      }
      std::size_t const        id = comps_.size();
      std::vector<std::size_t> comp{start};
      comp_of_[start] = id;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        for (std::size_t w = 0; w < n; ++w) {
          if (w != comp[k] && !adj_[comp[k]][w] && comp_of_[w] == n) {
            comp_of_[w] = id;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps_.push_back(std::move(comp));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal form
  ////////////////////////////////////////////////////////////////////////

  // Appends y, merging it into the nearest syllable of the same vertex it
  // can reach through commuting syllables. Returns true if that merge
  // cancelled to the identity.
  bool GraphProductMonoid::append(Word& out, Syllable const& y) const {
    auto const& m = *vertices_[y.vertex].monoid;
    for (std::size_t i = out.size(); i > 0; --i) {
      auto& s = out[i - 1];
      if (s.vertex == y.vertex) {
        auto merged = m.multiply(s.value, y.value);
        if (merged == m.identity()) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
          return true;
        }
        s.value = std::move(merged);
        return false;
      }
      if (!adj_[s.vertex][y.vertex]) {
        break;
      }
    }
    out.push_back(y);
    return false;
  }

  GraphProductMonoid::Word GraphProductMonoid::normalize(Word w) const {
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].value == vertices_[w[i].vertex].monoid->identity()) {
        continue;
      }
      if (append(out, w[i])) {
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
        return normalize(std::move(out));
      }
    }
    return lex_order(std::move(out));
  }

  GraphProductMonoid::Word GraphProductMonoid::lex_order(Word w) const {
    std::vector<bool> placed(w.size(), false);
    Word              out;
    while (out.size() < w.size()) {
      std::size_t best = w.size();
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (placed[j]) {
          continue;
        }
        bool ready = true;
        for (std::size_t i = 0; i < j && ready; ++i) {
          ready = placed[i] || adj_[w[i].vertex][w[j].vertex];
        }
        if (ready && (best == w.size() || w[j].vertex < w[best].vertex)) {
          best = j;
        }
      }
      placed[best] = true;
      out.push_back(w[best]);
    }
    return out;
  }

  Element GraphProductMonoid::from_word(Word w) const {
    w = normalize(std::move(w));
    Payload p{static_cast<std::int64_t>(w.size())};
    for (auto const& s : w) {
      p.push_back(static_cast<std::int64_t>(s.vertex));
      p.push_back(static_cast<std::int64_t>(s.value.payload().size()));
      p.insert(p.end(), s.value.payload().begin(), s.value.payload().end());
    }
    return make(std::move(p));
  }

  GraphProductMonoid::Word GraphProductMonoid::syllables(Element const& s) const {
    Word        out;
    auto const& p = s.payload();
    std::size_t i = 1;
    for (std::int64_t k = 0; k < p[0]; ++k) {
      auto const v   = static_cast<std::size_t>(p[i]);
      auto const len = static_cast<std::size_t>(p[i + 1]);
      auto const b   = p.begin() + static_cast<std::ptrdiff_t>(i + 2);
      out.push_back({v, vertices_[v].monoid->make(Payload(b, b + static_cast<std::ptrdiff_t>(len)))});
      i += 2 + len;
    }
    return out;
  }

  Element GraphProductMonoid::embed(std::size_t v, Element const& x) const {
    if (!vertices_.at(v).monoid->owns(x)) {
      throw FamilyMismatch("graph_product: element does not belong to vertex "
                           + vertices_[v].name);
    }
    return from_word({{v, x}});
  }

  GraphProductMonoid::Word GraphProductMonoid::project(Word const& w, std::size_t j) const {
    Word out;
    for (auto const& s : w) {
      if (comp_of_[s.vertex] == j) {
        out.push_back(s);
      }
    }
    return normalize(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid structure
  ////////////////////////////////////////////////////////////////////////

  Element GraphProductMonoid::identity() const {
    return make({0});
  }

  Element GraphProductMonoid::multiply(Element const& s, Element const& t) const {
    return from_word(concat(syllables(s), syllables(t)));
  }

  std::pair<GraphProductMonoid::Word, GraphProductMonoid::Word>
  GraphProductMonoid::split_terminal_units(Word w) const {
    Word units;
    for (bool again = true; again;) {
      again = false;
      for (std::size_t i = w.size(); i > 0; --i) {
        auto const& y = w[i - 1];
        if (!vertices_[y.vertex].monoid->is_unit(y.value)) {
          continue;
        }
        bool terminal = true;
        for (std::size_t j = i; j < w.size() && terminal; ++j) {
          terminal = adj_[y.vertex][w[j].vertex];
        }
        if (terminal) {
          units.insert(units.begin(), y);
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i - 1));
          again = true;
          break;
        }
      }
    }
    return {std::move(w), std::move(units)};
  }

  // With s = s̄·u (u the terminal units of s), every syllable of s̄ survives
  // right multiplication. So s̄X ∈ yS needs an initial v-syllable a of s̄ with
  // a ⋒ y in S_v; writing s̄ = a·r and a·c₁ = y·c₂ gives
  // sS ∩ yS = a·(rS ∩ c₁S).
  std::optional<std::pair<Element, Element>>
  GraphProductMonoid::lcm_with_syllable(Element const& s, Syllable const& y) const {
    auto const& m = *vertices_[y.vertex].monoid;
    if (auto yi = m.inverse(y.value)) {
      return std::pair{identity(), multiply(from_word({{y.vertex, *yi}}), s)};
    }
    auto [core, units] = split_terminal_units(syllables(s));
    Word units_inv;
    for (auto it = units.rbegin(); it != units.rend(); ++it) {
      units_inv.push_back({it->vertex, *vertices_[it->vertex].monoid->inverse(it->value)});
    }
    std::size_t initial = core.size();
    bool        blocked = false;
    for (std::size_t i = 0; i < core.size(); ++i) {
      if (core[i].vertex == y.vertex) {
        initial = i;
        break;
      }
      if (!adj_[core[i].vertex][y.vertex]) {
        blocked = true;
        break;
      }
    }
    if (blocked) {
      return std::nullopt;
    }
    if (initial == core.size()) {
      // Everything in s̄ commutes with y.
      return std::pair{from_word(concat(units_inv, {y})), from_word(core)};
    }
    auto const a   = core[initial].value;
    auto const out = gscale::right_lcm(m, a, y.value);
    if (out.is_orthogonal()) {
      return std::nullopt;
    }
    Word rest = core;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(initial));
    auto const r   = from_word(rest);
    auto const sub = lcm_with_syllable(r, {y.vertex, out.meet().cofactor_left});
    if (!sub) {
      return std::nullopt;
    }
    return std::pair{from_word(concat(units_inv, syllables(sub->first))),
                     multiply(from_word({{y.vertex, out.meet().cofactor_right}}), sub->second)};
  }

  // sS ∩ y₁T'S = y₁·(b₁S ∩ T'S) where s·a₁ = y₁·b₁.
  LcmOutcome GraphProductMonoid::right_lcm(Element const& s, Element const& t) const {
    Element left  = identity();
    Element right = identity();
    Element cur   = s;
    for (auto const& y : syllables(t)) {
      auto step = lcm_with_syllable(cur, y);
      if (!step) {
        return LcmOutcome::orthogonal();
      }
      left = multiply(left, step->first);
      cur  = step->second;
    }
    right = cur;
    Element lcm = multiply(s, left);
    if (multiply(t, right) != lcm) {
      throw ContractViolation("graph_product: lcm cofactors disagree for " + format(s) + ", "
                              + format(t));
    }
    return LcmOutcome(Meet{lcm, left, right});
  }

  bool GraphProductMonoid::is_component_core(Word const& proj, std::size_t j) const {
    if (comps_[j].size() == 1) {
      return proj.empty() || vertices_[proj[0].vertex].monoid->is_core(proj[0].value);
    }
    return std::all_of(proj.begin(), proj.end(), [&](Syllable const& y) {
      return vertices_[y.vertex].monoid->is_unit(y.value);
    });
  }

  bool GraphProductMonoid::is_core(Element const& s) const {
    auto const w = syllables(s);
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      if (!is_component_core(project(w, j), j)) {
        return false;
      }
    }
    return true;
  }

  bool GraphProductMonoid::is_unit(Element const& s) const {
    auto const w = syllables(s);
    return std::all_of(w.begin(), w.end(), [&](Syllable const& y) {
      return vertices_[y.vertex].monoid->is_unit(y.value);
    });
  }

  std::optional<Element> GraphProductMonoid::inverse(Element const& s) const {
    if (!is_unit(s)) {
      return std::nullopt;
    }
    auto w = syllables(s);
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back({it->vertex, *vertices_[it->vertex].monoid->inverse(it->value)});
    }
    return from_word(std::move(out));
  }

  bool GraphProductMonoid::is_noncore_irreducible(Element const& s) const {
    auto const  w        = syllables(s);
    std::size_t noncore  = 0;
    bool        ok       = false;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      auto proj = project(w, j);
      if (is_component_core(proj, j)) {
        continue;
      }
      ++noncore;
      if (comps_[j].size() == 1) {
        ok = proj.size() == 1
             && vertices_[proj[0].vertex].monoid->is_noncore_irreducible(proj[0].value);
      } else {
        std::size_t nonunits = 0;
        ok                   = true;
        for (auto const& y : proj) {
          auto const& m = *vertices_[y.vertex].monoid;
          if (!m.is_unit(y.value)) {
            ++nonunits;
            ok = ok && m.is_atom(y.value);
          }
        }
        ok = ok && nonunits == 1;
      }
    }
    return noncore == 1 && ok;
  }

  std::vector<GraphProductMonoid::Word> GraphProductMonoid::atom_letters(Word const& w) const {
    std::vector<Word> letters;
    Word              pending;
    for (auto const& y : w) {
      auto const& m = *vertices_[y.vertex].monoid;
      if (m.is_unit(y.value)) {
        pending.push_back(y);
        continue;
      }
      for (auto const& a : m.factor_atoms(y.value)) {
        Word letter = std::move(pending);
        pending.clear();
        letter.push_back({y.vertex, a});
        letters.push_back(std::move(letter));
      }
    }
    if (!pending.empty()) {
      if (letters.empty()) {
        letters.push_back(std::move(pending));
      } else {
        letters.back() = concat(letters.back(), pending);
      }
    }
    return letters;
  }

  // s·(Π a_j) = (Π L_j)·(Π b_j)·c over the coconnected components of Λ, where
  // c collects the core projections and a_j, b_j are the per-component
  // core adjustments; components commute with each other.
  std::optional<IrreducibleFactorization>
  GraphProductMonoid::factor_noncore(Element const& s) const {
    if (is_core(s)) {
      throw PreconditionError("graph_product: factor_noncore of core element " + format(s));
    }
    auto const               w = syllables(s);
    IrreducibleFactorization f;
    f.source = s;
    Word left, right, core_part;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      auto proj = project(w, j);
      if (is_component_core(proj, j)) {
        core_part = concat(core_part, proj);
        continue;
      }
      if (comps_[j].size() == 1) {
        auto const  v  = proj[0].vertex;
        auto const& m  = *vertices_[v].monoid;
        auto        vf = m.factor_noncore(proj[0].value);
        if (!vf) {
          return std::nullopt;
        }
        for (auto const& l : vf->letters) {
          f.letters.push_back(from_word({{v, l}}));
        }
        left.push_back({v, vf->left_core});
        right.push_back({v, vf->right_core});
      } else {
        for (auto& l : atom_letters(proj)) {
          f.letters.push_back(from_word(std::move(l)));
        }
      }
    }
    f.left_core  = from_word(std::move(left));
    f.right_core = from_word(concat(right, core_part));
    return f;
  }

  ClassEnumeration GraphProductMonoid::enumerate_irreducible_classes(std::size_t cap) const {
    ClassEnumeration out;
    out.exhaustive = true;
    for (auto const& comp : comps_) {
      for (auto v : comp) {
        auto const& m = *vertices_[v].monoid;
        if (out.classes.size() >= cap) {
          out.exhaustive = false;
          return out;
        }
        auto ce = comp.size() == 1 ? m.enumerate_irreducible_classes(cap - out.classes.size())
                                   : m.enumerate_atoms(cap - out.classes.size());
        out.exhaustive = out.exhaustive && ce.exhaustive;
        // Left unit multiples u_w·a_v with w ≁ v are further classes.
        if (comp.size() > 1 && m.has_nontrivial_units()) {
          out.exhaustive = false;
        }
        for (auto const& x : ce.classes) {
          out.classes.push_back(from_word({{v, x}}));
        }
      }
    }
    if (out.classes.size() >= cap) {
      out.exhaustive = false;
    }
    return out;
  }

  std::vector<Element> GraphProductMonoid::enumerate_core_generators() const {
    std::vector<Element> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto const& m      = *vertices_[v].monoid;
      bool const  single = comps_[comp_of_[v]].size() == 1;
      for (auto const& g : m.enumerate_core_generators()) {
        if (single || m.is_unit(g)) {
          out.push_back(from_word({{v, g}}));
        }
      }
    }
    return out;
  }

  bool GraphProductMonoid::core_is_units() const {
    for (auto const& comp : comps_) {
      if (comp.size() == 1 && !vertices_[comp[0]].monoid->core_is_units()) {
        return false;
      }
    }
    return true;
  }

  bool GraphProductMonoid::has_nontrivial_units() const {
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [](auto const& v) { return v.monoid->has_nontrivial_units(); });
  }

  ClassEnumeration GraphProductMonoid::enumerate_atoms(std::size_t cap) const {
    ClassEnumeration out;
    out.exhaustive = !has_nontrivial_units();
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (out.classes.size() >= cap) {
        out.exhaustive = false;
        return out;
      }
      auto ce        = vertices_[v].monoid->enumerate_atoms(cap - out.classes.size());
      out.exhaustive = out.exhaustive && ce.exhaustive;
      for (auto const& x : ce.classes) {
        out.classes.push_back(from_word({{v, x}}));
      }
    }
    return out;
  }

  bool GraphProductMonoid::is_atom(Element const& x) const {
    std::size_t nonunits = 0;
    bool        ok       = true;
    for (auto const& y : syllables(x)) {
      auto const& m = *vertices_[y.vertex].monoid;
      if (!m.is_unit(y.value)) {
        ++nonunits;
        ok = ok && m.is_atom(y.value);
      }
    }
    return ok && nonunits == 1;
  }

  std::vector<Element> GraphProductMonoid::factor_atoms(Element const& x) const {
    if (x == identity()) {
      return {};
    }
    if (is_unit(x)) {
      return {x};
    }
    std::vector<Element> out;
    for (auto& l : atom_letters(syllables(x))) {
      out.push_back(from_word(std::move(l)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sampling and syntax
  ////////////////////////////////////////////////////////////////////////

  Element GraphProductMonoid::random_element(std::mt19937_64& rng, unsigned size) const {
    std::uniform_int_distribution<unsigned>    len(0, size);
    std::uniform_int_distribution<std::size_t> pick(0, vertices_.size() - 1);
    Word                                       w;
    for (unsigned k = len(rng); k > 0; --k) {
      auto v = pick(rng);
      w.push_back({v, vertices_[v].monoid->random_element(rng, 2)});
    }
    return from_word(std::move(w));
  }

  std::vector<Element> GraphProductMonoid::enumerate_elements(unsigned bound) const {
    std::vector<Syllable> alphabet;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto const& m = *vertices_[v].monoid;
      std::size_t taken = 0;
      for (auto const& x : m.enumerate_elements(1)) {
        if (x != m.identity() && taken < 6) {
          alphabet.push_back({v, x});
          ++taken;
        }
      }
    }
    std::set<Element> seen{identity()};
    std::vector<Word> frontier{Word{}};
    for (unsigned len = 1; len <= bound; ++len) {
      std::vector<Word> next;
      for (auto const& w : frontier) {
        for (auto const& y : alphabet) {
          auto grown = w;
          grown.push_back(y);
          if (seen.insert(from_word(grown)).second) {
            next.push_back(std::move(grown));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<Element> GraphProductMonoid::spot_elements() const {
    auto ce = enumerate_irreducible_classes(8);
    if (ce.classes.empty()) {
      return {identity()};
    }
    return {identity(), ce.classes.front(), multiply(ce.classes.front(), ce.classes.back())};
  }

  std::string GraphProductMonoid::format(Element const& s) const {
    auto const w = syllables(s);
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& y : w) {
      out += "[" + vertices_[y.vertex].name + ":" + vertices_[y.vertex].monoid->format(y.value)
             + "]";
    }
    return out;
  }

  Element GraphProductMonoid::parse(std::string_view text) const {
    auto t = text;
    while (!t.empty() && t.front() == ' ') {
      t.remove_prefix(1);
    }
    while (!t.empty() && t.back() == ' ') {
      t.remove_suffix(1);
    }
    if (t.empty() || t == "1") {
      return identity();
    }
    Word w;
    for (auto const& group : split_element_list(t)) {
      if (group.size() < 3 || group.front() != '[' || group.back() != ']') {
        throw ParseError("graph_product: expected \"[vertex:element]\", got \"" + group + "\"");
      }
      auto colon = group.find(':');
      if (colon == std::string::npos) {
        throw ParseError("graph_product: expected \"[vertex:element]\", got \"" + group + "\"");
      }
      auto name = group.substr(1, colon - 1);
      auto it   = std::find_if(vertices_.begin(), vertices_.end(),
                               [&](auto const& v) { return v.name == name; });
      if (it == vertices_.end()) {
        throw ParseError("graph_product: unknown vertex \"" + name + "\"");
      }
      auto v = static_cast<std::size_t>(it - vertices_.begin());
      w.push_back({v, it->monoid->parse(group.substr(colon + 1, group.size() - colon - 2))});
    }
    return from_word(std::move(w));
  }

}  // namespace gscale
