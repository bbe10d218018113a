#include "gscale/lcm_engine.hpp"

#include <algorithm>
#include <sstream>

#include "gscale/error.hpp"
#include "gscale/kernel.hpp"

namespace gscale {

  namespace {
    std::string at(std::size_t k, std::size_t l) {
      return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
    }

    CellTag tag_of(Monoid const& m, Element const& x, std::string const& where) {
      if (is_core(m, x)) {
        return CellTag::Core;
      }
      if (is_noncore_irreducible(m, x)) {
        return CellTag::Irreducible;
      }
      throw PreconditionError("cell " + m.format(x) + where
                              + " is neither core nor noncore irreducible");
    }
  }  // namespace

  IrreducibleWord make_word(Monoid const& m, CoreGraph const& g, std::vector<Element> letters) {
    if (letters.empty()) {
      throw PreconditionError("irreducible word must be nonempty");
    }
    IrreducibleWord w;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (!is_noncore_irreducible(m, letters[k])) {
        throw PreconditionError("letter " + std::to_string(k) + " " + m.format(letters[k])
                                + " is not a noncore irreducible");
      }
      w.component_trace.push_back(component_of(g, m, letters[k]));
    }
    w.letters = std::move(letters);
    return w;
  }

  Process classify_square(Monoid const& m, CoreGraph const& g, Element const& s_cell,
                          Element const& t_cell) {
    auto ts = tag_of(m, s_cell, "");
    auto tt = tag_of(m, t_cell, "");
    if (ts == CellTag::Irreducible && tt == CellTag::Irreducible) {
      return component_of(g, m, s_cell) == component_of(g, m, t_cell) ? Process::A : Process::B;
    }
    if (ts == CellTag::Irreducible) {
      return Process::C;
    }
    if (tt == CellTag::Irreducible) {
      return Process::D;
    }
    return Process::E;
  }

  GridDiagram word_lcm(Monoid const& m, CoreGraph const& g, IrreducibleWord const& s,
                       IrreducibleWord const& t) {
    if (s.letters.empty() || t.letters.empty()) {
      throw PreconditionError("word_lcm: words must be nonempty");
    }
    GridDiagram d;
    d.m = s.size();
    d.n = t.size();
    d.s_cells.assign(d.m, std::vector<std::optional<Element>>(d.n + 1));
    d.s_tags.assign(d.m, std::vector<std::optional<CellTag>>(d.n + 1));
    d.t_cells.assign(d.n, std::vector<std::optional<Element>>(d.m + 1));
    d.t_tags.assign(d.n, std::vector<std::optional<CellTag>>(d.m + 1));
    d.process.assign(d.m, std::vector<std::optional<Process>>(d.n));
    for (std::size_t k = 0; k < d.m; ++k) {
      d.s_cells[k][0] = s.letters[k];
      d.s_tags[k][0]  = CellTag::Irreducible;
    }
    for (std::size_t l = 0; l < d.n; ++l) {
      d.t_cells[l][0] = t.letters[l];
      d.t_tags[l][0]  = CellTag::Irreducible;
    }

    auto const fold_s = fold(m, s.letters);
    auto const fold_t = fold(m, t.letters);
    auto const oracle = right_lcm(m, fold_s, fold_t);

    for (std::size_t k = 0; k < d.m; ++k) {
      for (std::size_t l = 0; l < d.n; ++l) {
        Element const& sc = *d.s_cells[k][l];
        Element const& tc = *d.t_cells[l][k];
        auto const     p  = classify_square(m, g, sc, tc);
        d.process[k][l]   = p;
        d.log.push_back(std::string(1, to_char(p)) + " at " + at(k, l));

        auto outcome = right_lcm(m, sc, tc);
        if (p == Process::A && !core_equivalent(m, sc, tc)) {
          if (outcome.is_meet()) {
            throw PreconditionError("edge inside component at " + at(k, l) + ": "
                                    + m.format(sc) + " and " + m.format(tc) + " intersect");
          }
          d.outcome       = GridOutcome::Orthogonal;
          d.orthogonal_at = std::pair{k, l};
          d.log.push_back("orthogonal at " + at(k, l));
          d.oracle_agrees = oracle.is_orthogonal();
          return d;
        }
        if (outcome.is_orthogonal()) {
          throw PreconditionError("balanced factorization violated at " + at(k, l) + ": "
                                  + m.format(sc) + " and " + m.format(tc)
                                  + " have no common multiple");
        }
        auto const& meet   = outcome.meet();
        auto const  new_t  = meet.cofactor_left;
        auto const  new_s  = meet.cofactor_right;
        auto const  where  = " at " + at(k, l);
        auto const  tag_t  = tag_of(m, new_t, where);
        auto const  tag_s  = tag_of(m, new_s, where);

        bool ok = true;
        switch (p) {
          case Process::A:
          case Process::E:
            ok = tag_t == CellTag::Core && tag_s == CellTag::Core;
            break;
          case Process::B:
            ok = tag_t == CellTag::Irreducible && tag_s == CellTag::Irreducible
                 && component_of(g, m, new_t) == component_of(g, m, tc)
                 && component_of(g, m, new_s) == component_of(g, m, sc);
            break;
          case Process::C:
            ok = tag_t == CellTag::Core && tag_s == CellTag::Irreducible;
            break;
          case Process::D:
            ok = tag_t == CellTag::Irreducible && tag_s == CellTag::Core;
            break;
        }
        if (!ok) {
          throw PreconditionError("balanced factorization violated at " + at(k, l) + ": "
                                  + m.format(sc) + " " + m.format(new_t) + " = "
                                  + m.format(tc) + " " + m.format(new_s));
        }
        if (multiply(m, sc, new_t) != multiply(m, tc, new_s)) {
          throw ContractViolation("square " + at(k, l) + " does not commute");
        }
        d.t_cells[l][k + 1] = new_t;
        d.t_tags[l][k + 1]  = tag_t;
        d.s_cells[k][l + 1] = new_s;
        d.s_tags[k][l + 1]  = tag_s;
      }
    }

    std::vector<Element> right_col, bottom_row;
    for (std::size_t l = 0; l < d.n; ++l) {
      right_col.push_back(*d.t_cells[l][d.m]);
    }
    for (std::size_t k = 0; k < d.m; ++k) {
      bottom_row.push_back(*d.s_cells[k][d.n]);
    }
    d.outcome    = GridOutcome::Complete;
    d.s_cofactor = fold(m, right_col);
    d.t_cofactor = fold(m, bottom_row);
    d.lcm        = multiply(m, fold_s, *d.s_cofactor);
    if (*d.lcm != multiply(m, fold_t, *d.t_cofactor)) {
      throw ContractViolation("grid edges disagree: s·t^{(m)} != t·s^{(n)}");
    }
    d.oracle_agrees = oracle.is_meet() && core_equivalent(m, *d.lcm, oracle.meet().lcm);
    return d;
  }

  namespace {
    // Exchanges the components at positions k, k+1 of w in place.
    void swap_step(Monoid const& m, CoreGraph const& g, IrreducibleWord& w, std::size_t k) {
      auto const ck = w.component_trace[k];
      auto const cn = w.component_trace[k + 1];
      if (ck == cn) {
        return;
      }
      Element const& x = w.letters[k];
      Element const& y = w.letters[k + 1];
      std::optional<Element> found_t, found_st;
      for (auto v : g.components[cn]) {
        auto const& cand = g.vertices[v];
        auto        o    = right_lcm(m, x, cand);
        if (o.is_meet() && core_equivalent(m, o.meet().cofactor_left, y)) {
          found_t  = cand;
          found_st = o.meet().cofactor_right;
          break;
        }
      }
      if (!found_t) {
        throw ContractViolation("permute_word: no vertex of component " + std::to_string(cn)
                                + " completes the square at position " + std::to_string(k));
      }
      auto const xy  = multiply(m, x, y);
      auto const tst = multiply(m, *found_t, *found_st);
      auto       o   = right_lcm(m, xy, tst);
      if (o.is_orthogonal() || !is_core(m, o.meet().cofactor_left)
          || !is_core(m, o.meet().cofactor_right)) {
        throw ContractViolation("permute_word: swapped pair is not core equivalent at position "
                                + std::to_string(k));
      }
      Element a            = o.meet().cofactor_left;
      w.letters[k]         = *found_t;
      w.letters[k + 1]     = multiply(m, *found_st, o.meet().cofactor_right);
      w.component_trace[k] = cn;
      w.component_trace[k + 1] = ck;
      // Push the core leftover a to the right end.
      for (std::size_t j = k + 2; j < w.letters.size(); ++j) {
        auto oj = right_lcm(m, a, w.letters[j]);
        if (oj.is_orthogonal()) {
          throw ContractViolation("permute_word: core element orthogonal to a letter");
        }
        w.letters[j] = oj.meet().cofactor_left;
        a            = oj.meet().cofactor_right;
      }
    }
  }  // namespace

  IrreducibleWord permute_word(Monoid const& m, CoreGraph const& g, IrreducibleWord const& s,
                               std::vector<std::size_t> const& sigma) {
    auto const n = s.size();
    if (sigma.size() != n) {
      throw PreconditionError("permute_word: permutation has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto i : sigma) {
      if (i >= n || seen[i]) {
        throw PreconditionError("permute_word: not a permutation");
      }
      seen[i] = true;
    }
    IrreducibleWord          w   = s;
    std::vector<std::size_t> cur(n);
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = i;
    }
    for (std::size_t k = 0; k < n; ++k) {
      auto j = static_cast<std::size_t>(std::find(cur.begin(), cur.end(), sigma[k]) - cur.begin());
      while (j > k) {
        swap_step(m, g, w, j - 1);
        std::swap(cur[j - 1], cur[j]);
        --j;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_noncore_irreducible(m, w.letters[k])
          || component_of(g, m, w.letters[k]) != s.component_trace[sigma[k]]) {
        throw ContractViolation("permute_word: letter " + std::to_string(k)
                                + " landed in the wrong component");
      }
      w.component_trace[k] = s.component_trace[sigma[k]];
    }
    if (!core_equivalent(m, fold(m, w.letters), fold(m, s.letters))) {
      throw ContractViolation("permute_word: result is not core equivalent to the input");
    }
    return w;
  }

  std::vector<std::size_t> component_multiset(IrreducibleWord const& s) {
    auto out = s.component_trace;
    std::sort(out.begin(), out.end());
    return out;
  }

  char to_char(Process p) {
    return static_cast<char>(p);
  }

  nlohmann::json to_json(GridDiagram const& d, Monoid const& m) {
    using nlohmann::json;
    auto cell = [&](std::optional<Element> const& e, std::optional<CellTag> const& tg) -> json {
      if (!e) {
        return nullptr;
      }
      return json{{"element", m.format(*e)},
                  {"tag", *tg == CellTag::Core ? "core" : "irreducible"}};
    };
    json j;
    j["m"]       = d.m;
    j["n"]       = d.n;
    j["outcome"] = d.outcome == GridOutcome::Complete ? "complete" : "orthogonal";
    json sc      = json::array();
    for (std::size_t k = 0; k < d.m; ++k) {
      json row = json::array();
      for (std::size_t l = 0; l <= d.n; ++l) {
        row.push_back(cell(d.s_cells[k][l], d.s_tags[k][l]));
      }
      sc.push_back(row);
    }
    json tc = json::array();
    for (std::size_t l = 0; l < d.n; ++l) {
      json row = json::array();
      for (std::size_t k = 0; k <= d.m; ++k) {
        row.push_back(cell(d.t_cells[l][k], d.t_tags[l][k]));
      }
      tc.push_back(row);
    }
    j["s_cells"] = sc;
    j["t_cells"] = tc;
    json pr      = json::array();
    for (auto const& row : d.process) {
      std::string r;
      for (auto const& p : row) {
        r.push_back(p ? to_char(*p) : '.');
      }
      pr.push_back(r);
    }
    j["process"] = pr;
    j["log"]     = d.log;
    if (d.orthogonal_at) {
      j["orthogonal_at"] = {d.orthogonal_at->first, d.orthogonal_at->second};
    }
    if (d.lcm) {
      j["lcm"]        = m.format(*d.lcm);
      j["s_cofactor"] = m.format(*d.s_cofactor);
      j["t_cofactor"] = m.format(*d.t_cofactor);
    }
    j["oracle_agrees"] = d.oracle_agrees;
    return j;
  }

  std::string render_grid(GridDiagram const& d, Monoid const& m) {
    // Core cells carry a trailing '*'.
    auto label = [&](std::optional<Element> const& e, std::optional<CellTag> const& tg) {
      if (!e) {
        return std::string("?");
      }
      return m.format(*e) + (*tg == CellTag::Core ? "*" : "");
    };
    std::size_t w = 1;
    for (std::size_t k = 0; k < d.m; ++k) {
      for (std::size_t l = 0; l <= d.n; ++l) {
        w = std::max(w, label(d.s_cells[k][l], d.s_tags[k][l]).size());
      }
    }
    for (std::size_t l = 0; l < d.n; ++l) {
      for (std::size_t k = 0; k <= d.m; ++k) {
        w = std::max(w, label(d.t_cells[l][k], d.t_tags[l][k]).size());
      }
    }
    std::size_t const step   = w + 6;
    std::size_t const offset = w / 2 + 1;
    std::size_t const width  = offset + d.n * step + w / 2 + 2;
    auto put_centered = [](std::string& line, std::size_t center, std::string const& s) {
      std::size_t start = center >= s.size() / 2 ? center - s.size() / 2 : 0;
      for (std::size_t i = 0; i < s.size() && start + i < line.size(); ++i) {
        line[start + i] = s[i];
      }
    };

    std::ostringstream os;
    for (std::size_t k = 0; k <= d.m; ++k) {
      std::string row(width, ' ');
      for (std::size_t l = 0; l <= d.n; ++l) {
        row[offset + l * step] = 'o';
      }
      for (std::size_t l = 0; l < d.n; ++l) {
        auto const x0 = offset + l * step;
        for (std::size_t x = x0 + 1; x < x0 + step; ++x) {
          row[x] = '-';
        }
        put_centered(row, x0 + step / 2, " " + label(d.t_cells[l][k], d.t_tags[l][k]) + " ");
      }
      while (!row.empty() && row.back() == ' ') {
        row.pop_back();
      }
      os << row << "\n";
      if (k == d.m) {
        break;
      }
      std::string bar(width, ' ');
      std::string mid(width, ' ');
      for (std::size_t l = 0; l <= d.n; ++l) {
        bar[offset + l * step] = '|';
        put_centered(mid, offset + l * step, label(d.s_cells[k][l], d.s_tags[k][l]));
        if (l < d.n && d.process[k][l]) {
          mid[offset + l * step + step / 2] = to_char(*d.process[k][l]);
        }
      }
      for (auto* line : {&bar, &mid, &bar}) {
        std::string r = *line;
        while (!r.empty() && r.back() == ' ') {
          r.pop_back();
        }
        os << r << "\n";
      }
    }
    if (d.outcome == GridOutcome::Orthogonal) {
      os << "orthogonal at square " << at(d.orthogonal_at->first, d.orthogonal_at->second)
         << "\n";
    } else {
      os << "lcm " << m.format(*d.lcm) << "\n";
    }
    return os.str();
  }

}  // namespace gscale
