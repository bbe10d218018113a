#include "gscale/scale.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "gscale/arith.hpp"
#include "gscale/error.hpp"
#include "gscale/kernel.hpp"

namespace gscale {

  std::string to_string(Status s) {
    switch (s) {
      case Status::Pass:
        return "pass";
      case Status::Fail:
        return "fail";
      case Status::Inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Freeness in ℕ^×
  ////////////////////////////////////////////////////////////////////////

  bool exponent_vectors_independent(std::vector<std::uint64_t> const& gens) {
    std::map<std::int64_t, std::size_t> col;
    std::vector<std::map<std::int64_t, std::int64_t>> fac;
    for (auto g : gens) {
      if (g < 2) {
        return false;
      }
      std::map<std::int64_t, std::int64_t> f;
      for (auto p : arith::prime_factors(static_cast<std::int64_t>(g))) {
        ++f[p];
        col.emplace(p, 0);
      }
      fac.push_back(std::move(f));
    }
    std::size_t c = 0;
    for (auto& [p, i] : col) {
      i = c++;
    }
    std::vector<std::vector<__int128>> rows;
    for (auto const& f : fac) {
      std::vector<__int128> r(col.size(), 0);
      for (auto [p, e] : f) {
        r[col[p]] = e;
      }
      rows.push_back(std::move(r));
    }
    // Fraction-free elimination; rows are kept primitive.
    std::size_t rank = 0;
    for (std::size_t j = 0; j < col.size() && rank < rows.size(); ++j) {
      auto piv = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](auto const& r) { return r[j] != 0; });
      if (piv == rows.end()) {
        continue;
      }
      std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), piv);
      auto const& p = rows[rank];
      for (std::size_t i = rank + 1; i < rows.size(); ++i) {
        if (rows[i][j] == 0) {
          continue;
        }
        auto const a = p[j];
        auto const b = rows[i][j];
        __int128   g = 0;
        for (std::size_t k = 0; k < col.size(); ++k) {
          rows[i][k] = rows[i][k] * a - p[k] * b;
          auto v     = rows[i][k] < 0 ? -rows[i][k] : rows[i][k];
          g          = std::gcd(static_cast<std::int64_t>(g), static_cast<std::int64_t>(v));
        }
        if (g > 1) {
          for (auto& x : rows[i]) {
            x /= g;
          }
        }
      }
      ++rank;
    }
    return rank == rows.size();
  }

  namespace {
    struct Product {
      std::uint64_t              value;
      std::vector<std::uint64_t> factors;
    };

    void enumerate_products(std::vector<std::uint64_t> const& gens, std::uint64_t bound,
                            std::size_t from, std::uint64_t value,
                            std::vector<std::uint64_t>& factors, std::vector<Product>& out,
                            std::size_t limit) {
      if (out.size() >= limit) {
        return;
      }
      out.push_back({value, factors});
      for (std::size_t i = from; i < gens.size(); ++i) {
        if (value > bound / gens[i]) {
          continue;
        }
        factors.push_back(gens[i]);
        enumerate_products(gens, bound, i, value * gens[i], factors, out, limit);
        factors.pop_back();
      }
    }

    std::string join_factors(std::vector<std::uint64_t> const& f) {
      if (f.empty()) {
        return "1";
      }
      std::string s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        s += (i ? "*" : "") + std::to_string(f[i]);
      }
      return s;
    }
  }  // namespace

  std::optional<std::string> find_collision(std::vector<std::uint64_t> const& gens,
                                            std::uint64_t                     bound) {
    auto g = gens;
    std::sort(g.begin(), g.end());
    std::vector<Product>       all;
    std::vector<std::uint64_t> scratch;
    enumerate_products(g, bound, 0, 1, scratch, all, 20'000'000);
    std::stable_sort(all.begin(), all.end(),
                     [](Product const& a, Product const& b) { return a.value < b.value; });
    for (std::size_t i = 1; i < all.size(); ++i) {
      if (all[i].value == all[i - 1].value) {
        return std::to_string(all[i].value) + " = " + join_factors(all[i - 1].factors) + " = "
               + join_factors(all[i].factors);
      }
    }
    return std::nullopt;
  }

  Verdict check_freeness(std::vector<Cardinality> const& cards, std::uint64_t bound) {
    Verdict v;
    v.status = Status::Fail;
    if (cards.empty()) {
      v.reason = "no coconnected components; the generated submonoid is trivial";
      return v;
    }
    std::vector<std::uint64_t> finite;
    for (std::size_t i = 0; i < cards.size(); ++i) {
      if (!cards[i]) {
        v.reason = "component of infinite cardinality";
        v.witnesses.push_back("component " + std::to_string(i) + " is infinite");
        return v;
      }
      if (*cards[i] < 2) {
        v.reason = "component of cardinality " + std::to_string(*cards[i]);
        v.witnesses.push_back("component " + std::to_string(i) + " has cardinality "
                              + std::to_string(*cards[i]));
        return v;
      }
      finite.push_back(*cards[i]);
    }
    std::map<std::uint64_t, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < finite.size(); ++i) {
      where[finite[i]].push_back(i);
    }
    for (auto const& [c, idx] : where) {
      if (idx.size() > 1) {
        v.reason = "duplicate component cardinality " + std::to_string(c);
        v.witnesses.push_back("duplicate cardinality " + std::to_string(c));
        return v;
      }
    }
    if (exponent_vectors_independent(finite)) {
      v.status   = Status::Pass;
      v.reason   = "free on " + std::to_string(finite.size())
                 + (finite.size() == 1 ? " generator" : " generators");
      v.coverage = "exact exponent-rank check";
      return v;
    }
    v.reason = "cardinalities satisfy a multiplicative relation";
    if (auto w = find_collision(finite, bound)) {
      v.witnesses.push_back(*w);
    } else {
      v.witnesses.push_back("exponent vectors dependent; no collision below "
                            + std::to_string(bound));
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsemigroups of ℕ^×
  ////////////////////////////////////////////////////////////////////////

  NxSubsemigroup::NxSubsemigroup(std::vector<std::uint64_t> gens) : generators(std::move(gens)) {
    std::sort(generators.begin(), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (generators[i] < 2) {
        throw PreconditionError("subsemigroup generators must be at least 2");
      }
      if (i && generators[i] == generators[i - 1]) {
        throw PreconditionError("duplicate subsemigroup generator "
                                + std::to_string(generators[i]));
      }
    }
  }

  namespace {
    // Is n a product of at least `min_factors` generators?
    bool representable(std::vector<std::uint64_t> const& gens, std::uint64_t n,
                       std::size_t min_factors,
                       std::unordered_map<std::uint64_t, bool>& memo) {
      if (n == 1) {
        return min_factors == 0;
      }
      if (min_factors == 0) {
        if (auto it = memo.find(n); it != memo.end()) {
          return it->second;
        }
      }
      bool ok = false;
      for (auto g : gens) {
        if (g > n) {
          break;
        }
        if (n % g == 0
            && representable(gens, n / g, min_factors ? min_factors - 1 : 0, memo)) {
          ok = true;
          break;
        }
      }
      if (min_factors == 0) {
        memo[n] = ok;
      }
      return ok;
    }
  }  // namespace

  std::vector<std::uint64_t> NxSubsemigroup::irreducibles() const {
    std::vector<std::uint64_t>              out;
    std::unordered_map<std::uint64_t, bool> memo;
    for (auto g : generators) {
      if (!representable(generators, g, 2, memo)) {
        out.push_back(g);
      }
    }
    return out;
  }

  bool NxSubsemigroup::contains(std::uint64_t n) const {
    if (n == 0) {
      return false;
    }
    std::unordered_map<std::uint64_t, bool> memo;
    return representable(generators, n, 0, memo);
  }

  std::vector<std::uint64_t> NxSubsemigroup::elements_up_to(std::uint64_t cutoff) const {
    std::vector<Product>       all;
    std::vector<std::uint64_t> scratch;
    if (cutoff >= 1) {
      enumerate_products(generators, cutoff, 0, 1, scratch, all, 50'000'000);
    }
    std::vector<std::uint64_t> out;
    out.reserve(all.size());
    for (auto const& p : all) {
      out.push_back(p.value);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<std::uint64_t> factor_in_nx(std::uint64_t n, NxSubsemigroup const& nx) {
    if (n == 0) {
      throw PreconditionError("0 is not in any subsemigroup of the positive integers");
    }
    auto irr = nx.irreducibles();
    if (!exponent_vectors_independent(irr)) {
      auto w = find_collision(irr, default_freeness_bound);
      throw PreconditionError("subsemigroup is not free" + (w ? ": " + *w : std::string()));
    }
    std::sort(irr.rbegin(), irr.rend());
    std::vector<std::uint64_t>                  out;
    std::function<bool(std::uint64_t, std::size_t)> go = [&](std::uint64_t r, std::size_t from) {
      if (r == 1) {
        return true;
      }
      for (std::size_t i = from; i < irr.size(); ++i) {
        if (r % irr[i] == 0) {
          out.push_back(irr[i]);
          if (go(r / irr[i], i)) {
            return true;
          }
          out.pop_back();
        }
      }
      return false;
    };
    if (!go(n, 0)) {
      throw PreconditionError(std::to_string(n) + " is not in the subsemigroup");
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ZetaResult zeta_partial(NxSubsemigroup const& nx, double beta, std::uint64_t cutoff) {
    if (cutoff < 1) {
      throw PreconditionError("zeta cutoff must be at least 1");
    }
    ZetaResult z;
    auto       elems = nx.elements_up_to(cutoff);
    z.terms          = elems.size();
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
      z.partial += std::pow(static_cast<double>(*it), 1.0 - beta);
    }
    auto irr = nx.irreducibles();
    z.divergent = !irr.empty() && beta <= 1.0;
    if (!z.divergent) {
      double e = 1.0;
      for (auto g : irr) {
        e /= 1.0 - std::pow(static_cast<double>(g), 1.0 - beta);
      }
      z.euler = e;
    }
    return z;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conditions
  ////////////////////////////////////////////////////////////////////////

  std::vector<Element> default_samples(Monoid const& m, CoreGraph const& g, std::size_t limit) {
    std::vector<Element>                          out;
    std::unordered_set<Element, ElementHash>      seen;
    auto add = [&](Element const& x) {
      if (out.size() < limit && seen.insert(x).second) {
        out.push_back(x);
      }
    };
    auto guarded = [&](auto&& f) {
      try {
        f();
      } catch (OverflowError const&) {
      }
    };
    add(m.identity());
    auto const& V = g.vertices;
    for (auto const& v : V) {
      add(v);
    }
    for (auto const& a : m.enumerate_core_generators()) {
      add(a);
      for (auto const& v : V) {
        guarded([&] {
          add(multiply(m, a, v));
          add(multiply(m, v, a));
        });
      }
    }
    for (auto const& x : m.spot_elements()) {
      add(x);
    }
    for (auto const& a : V) {
      for (auto const& b : V) {
        guarded([&] { add(multiply(m, a, b)); });
      }
    }
    std::size_t const n3 = V.size() * V.size() * V.size();
    std::mt19937_64   rng(0x5ca1e);
    if (n3 <= limit / 2) {
      for (auto const& a : V) {
        for (auto const& b : V) {
          for (auto const& c : V) {
            guarded([&] { add(multiply(m, multiply(m, a, b), c)); });
          }
        }
      }
    } else if (!V.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, V.size() - 1);
      for (std::size_t i = 0; i < limit / 4; ++i) {
        guarded([&] { add(fold(m, std::vector{V[pick(rng)], V[pick(rng)], V[pick(rng)]})); });
      }
    }
    for (unsigned size = 1; size <= 4; ++size) {
      for (int i = 0; i < 50; ++i) {
        guarded([&] { add(m.random_element(rng, size)); });
      }
    }
    return out;
  }

  namespace {
    void taint(Verdict& v, bool exhaustive) {
      if (!exhaustive && v.status == Status::Pass) {
        v.status = Status::Inconclusive;
        v.reason = "inconclusive at cap: core graph enumeration is not exhaustive";
      }
    }

    void add_witness(Verdict& v, std::string w) {
      if (v.witnesses.size() < 8) {
        v.witnesses.push_back(std::move(w));
      }
    }
  }  // namespace

  ScaleReport check_conditions(Monoid const& m, CoreGraph const& g,
                               std::vector<Element> const& samples) {
    ScaleReport r;
    r.graph_exhaustive = g.exhaustive;

    // (i)
    r.cond_i = check_freeness(g.component_cards);
    if (!g.exhaustive) {
      r.cond_i.status = Status::Inconclusive;
      r.cond_i.reason = "inconclusive at cap: component cardinalities are lower bounds ("
                        + r.cond_i.reason + ")";
    }
    if (r.cond_i.passed()) {
      r.scale_on_components = g.component_cards;
    }

    // (ii). Components only merge as the graph grows, so a found edge stays
    // inside its component.
    r.cond_ii.status = Status::Pass;
    std::size_t bad  = 0;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
      auto edges = g.component_edges(c);
      if (!edges.empty()) {
        ++bad;
        for (auto const& [a, b] : edges) {
          add_witness(r.cond_ii, "V" + std::to_string(c) + ": " + m.format(g.vertices[a])
                                     + " -- " + m.format(g.vertices[b]));
        }
      }
    }
    if (bad) {
      r.cond_ii.status = Status::Fail;
      r.cond_ii.reason = std::to_string(bad) + " coconnected component(s) with edges";
    } else {
      r.cond_ii.reason = "all components edge-free";
    }
    r.cond_ii.coverage = std::to_string(g.components.size()) + " components, "
                         + std::to_string(g.edges.size()) + " edges";
    taint(r.cond_ii, g.exhaustive);

    // (iii)
    r.cond_iii.status    = Status::Pass;
    std::size_t noncore  = 0;
    std::size_t skipped  = 0;
    std::size_t failures = 0;
    for (auto const& x : samples) {
      try {
        if (is_core(m, x)) {
          continue;
        }
        ++noncore;
        auto f = m.factor_noncore(x);
        bool ok = f.has_value() && !f->letters.empty() && is_core(m, f->left_core)
                  && is_core(m, f->right_core);
        if (ok) {
          for (auto const& l : f->letters) {
            ok = ok && is_noncore_irreducible(m, l);
          }
        }
        ok = ok
             && multiply(m, x, f->left_core) == multiply(m, fold(m, f->letters), f->right_core);
        if (!ok) {
          ++failures;
          add_witness(r.cond_iii, m.format(x));
        }
      } catch (OverflowError const&) {
        ++skipped;
      }
    }
    if (failures) {
      r.cond_iii.status = Status::Fail;
      r.cond_iii.reason = std::to_string(failures) + " sampled element(s) without a valid "
                          "noncore factorization";
    } else {
      r.cond_iii.reason = "every sampled noncore element factors";
    }
    r.cond_iii.coverage = std::to_string(samples.size()) + " samples, "
                          + std::to_string(noncore) + " noncore, "
                          + std::to_string(skipped) + " skipped on overflow";

    // (iv), on stored vertices and on their right shifts by core generators
    // (a unit shift can move a cofactor across components).
    r.cond_iv.status   = Status::Pass;
    std::size_t pairs  = 0;
    std::size_t broken = 0;
    auto const  n      = g.vertices.size();
    std::vector<Element> shifts{m.identity()};
    for (auto const& b : m.enumerate_core_generators()) {
      shifts.push_back(b);
    }
    auto balanced = [&](Element const& s, std::size_t ci, Element const& t,
                        std::size_t cj) -> std::string {
      auto o = right_lcm(m, s, t);
      if (o.is_orthogonal()) {
        return "orthogonal";
      }
      auto const& tp = o.meet().cofactor_left;
      auto const& sp = o.meet().cofactor_right;
      if (!is_noncore_irreducible(m, tp) || !is_noncore_irreducible(m, sp)) {
        return "cofactor not noncore irreducible";
      }
      auto ct = find_vertex(g, m, tp);
      auto cs = find_vertex(g, m, sp);
      if (!ct || !cs) {
        return "cofactor outside the enumerated graph";
      }
      if (g.vertex_component[*ct] != cj || g.vertex_component[*cs] != ci) {
        return "components not preserved";
      }
      return "";
    };
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto const ci = g.vertex_component[i];
        auto const cj = g.vertex_component[j];
        if (ci == cj) {
          continue;
        }
        auto const& s = g.vertices[i];
        auto const& t = g.vertices[j];
        for (std::size_t k = 0; k < shifts.size(); ++k) {
          std::vector<std::pair<Element, Element>> cases;
          if (k == 0) {
            cases.emplace_back(s, t);
          } else {
            try {
              cases.emplace_back(s, multiply(m, t, shifts[k]));
              cases.emplace_back(multiply(m, s, shifts[k]), t);
            } catch (OverflowError const&) {
              continue;
            }
          }
          for (auto const& [x, y] : cases) {
            ++pairs;
            auto why = balanced(x, ci, y, cj);
            if (!why.empty()) {
              ++broken;
              add_witness(r.cond_iv, m.format(x) + ", " + m.format(y) + ": " + why);
            }
          }
        }
      }
    }
    if (broken) {
      r.cond_iv.status = Status::Fail;
      r.cond_iv.reason = std::to_string(broken) + " cross-component pair(s) unbalanced";
      if (!g.exhaustive) {
        r.cond_iv.status = Status::Inconclusive;
        r.cond_iv.reason = "inconclusive at cap: " + r.cond_iv.reason;
      }
    } else {
      r.cond_iv.reason = "all cross-component pairs balanced";
    }
    r.cond_iv.coverage = std::to_string(pairs) + " cross-component pairs";
    taint(r.cond_iv, g.exhaustive);

    std::array<Verdict const*, 4> all{&r.cond_i, &r.cond_ii, &r.cond_iii, &r.cond_iv};
    if (std::any_of(all.begin(), all.end(), [](auto* v) { return v->failed(); })) {
      r.exists = Status::Fail;
    } else if (std::all_of(all.begin(), all.end(), [](auto* v) { return v->passed(); })) {
      r.exists = Status::Pass;
    } else {
      r.exists = Status::Inconclusive;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // The scale
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_scale(ScaleReport const& r) {
      if (r.exists != Status::Pass) {
        throw PreconditionError("no generalized scale: existence is " + to_string(r.exists));
      }
    }

    std::vector<std::uint64_t> finite_cards(ScaleReport const& r) {
      std::vector<std::uint64_t> out;
      for (auto c : r.scale_on_components) {
        out.push_back(c.value());
      }
      return out;
    }
  }  // namespace

  std::uint64_t scale_value(Monoid const& m, CoreGraph const& g, ScaleReport const& r,
                            Element const& s) {
    require_scale(r);
    if (is_core(m, s)) {
      return 1;
    }
    auto f = m.factor_noncore(s);
    if (!f) {
      throw ContractViolation("no noncore factorization of " + m.format(s)
                              + " although condition (iii) passed");
    }
    std::uint64_t n = 1;
    for (auto const& l : f->letters) {
      auto c = component_of(g, m, l);
      n      = arith::umul(n, r.scale_on_components.at(c).value());
    }
    return n;
  }

  std::vector<Element> transversal(Monoid const& m, CoreGraph const& g, ScaleReport const& r,
                                   std::uint64_t n) {
    require_scale(r);
    auto const     cards = finite_cards(r);
    NxSubsemigroup nx(cards);
    if (!nx.contains(n)) {
      throw PreconditionError(std::to_string(n) + " is not a value of the scale");
    }
    std::vector<std::size_t> comps;
    for (auto f : factor_in_nx(n, nx)) {
      comps.push_back(static_cast<std::size_t>(
          std::find(cards.begin(), cards.end(), f) - cards.begin()));
    }
    std::vector<Element> out;
    std::vector<Element> word(comps.size());
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == comps.size()) {
        out.push_back(fold(m, word));
        return;
      }
      for (auto v : g.components[comps[k]]) {
        word[k] = g.vertices[v];
        go(k + 1);
      }
    };
    go(0);
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (intersects(m, out[i], out[j])) {
          throw ContractViolation("transversal members " + m.format(out[i]) + " and "
                                  + m.format(out[j]) + " intersect");
        }
      }
    }
    return out;
  }

  bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed(); });
  }

  AxiomReport verify_scale_axioms(Monoid const& m, CoreGraph const& g, ScaleReport const& r,
                                  std::vector<Element> const& samples) {
    require_scale(r);
    auto const     cards = finite_cards(r);
    NxSubsemigroup nx(cards);
    std::set<std::uint64_t> irr(cards.begin(), cards.end());

    // Cached scale values; overflowing samples are dropped.
    std::vector<Element>       xs;
    std::vector<std::uint64_t> ns;
    for (auto const& x : samples) {
      try {
        ns.push_back(scale_value(m, g, r, x));
        xs.push_back(x);
      } catch (OverflowError const&) {
      }
    }
    std::size_t const P = std::min<std::size_t>(xs.size(), 120);

    auto nx_lcm = [&](std::uint64_t a, std::uint64_t b) {
      std::map<std::uint64_t, int> ea, eb;
      for (auto f : factor_in_nx(a, nx)) {
        ++ea[f];
      }
      for (auto f : factor_in_nx(b, nx)) {
        ++eb[f];
      }
      std::uint64_t out = 1;
      for (auto c : cards) {
        for (int k = 0; k < std::max(ea[c], eb[c]); ++k) {
          out = arith::umul(out, c);
        }
      }
      return out;
    };

    AxiomReport rep;
    auto        run = [&](std::string name, auto&& body) {
      AxiomCheck c;
      c.name = std::move(name);
      auto fail = [&](std::string w) {
        if (c.failures.size() < 8) {
          c.failures.push_back(std::move(w));
        }
      };
      body(c, fail);
      rep.checks.push_back(std::move(c));
    };
    auto pair_loop = [&](auto&& f) {
      for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = 0; j < P; ++j) {
          try {
            f(i, j);
          } catch (OverflowError const&) {
          }
        }
      }
    };

    run("multiplicative", [&](AxiomCheck& c, auto&& fail) {
      pair_loop([&](std::size_t i, std::size_t j) {
        auto st = multiply(m, xs[i], xs[j]);
        ++c.checked;
        if (scale_value(m, g, r, st) != arith::umul(ns[i], ns[j])) {
          fail(m.format(xs[i]) + " * " + m.format(xs[j]));
        }
      });
    });
    run("equal scale implies equivalent or orthogonal", [&](AxiomCheck& c, auto&& fail) {
      pair_loop([&](std::size_t i, std::size_t j) {
        if (i >= j || ns[i] != ns[j]) {
          return;
        }
        ++c.checked;
        if (!core_equivalent(m, xs[i], xs[j]) && intersects(m, xs[i], xs[j])) {
          fail(m.format(xs[i]) + ", " + m.format(xs[j]));
        }
      });
    });
    run("every value is met from every element", [&](AxiomCheck& c, auto&& fail) {
      std::map<std::uint64_t, std::vector<Element>> cache;
      for (auto n : nx.elements_up_to(36)) {
        cache[n] = transversal(m, g, r, n);
      }
      for (std::size_t i = 0; i < std::min<std::size_t>(xs.size(), 40); ++i) {
        for (auto const& [n, tr] : cache) {
          ++c.checked;
          if (tr.size() != n) {
            fail("transversal of " + std::to_string(n) + " has " + std::to_string(tr.size())
                 + " members");
          }
          bool met = std::any_of(tr.begin(), tr.end(),
                                 [&](Element const& t) { return intersects(m, xs[i], t); });
          if (!met) {
            fail(m.format(xs[i]) + " meets nothing of scale " + std::to_string(n));
          }
        }
      }
    });
    run("distinct irreducible values intersect", [&](AxiomCheck& c, auto&& fail) {
      pair_loop([&](std::size_t i, std::size_t j) {
        if (i >= j || ns[i] == ns[j] || !irr.count(ns[i]) || !irr.count(ns[j])) {
          return;
        }
        ++c.checked;
        if (!intersects(m, xs[i], xs[j])) {
          fail(m.format(xs[i]) + ", " + m.format(xs[j]));
        }
      });
    });
    run("scale of lcm generates the intersection", [&](AxiomCheck& c, auto&& fail) {
      pair_loop([&](std::size_t i, std::size_t j) {
        if (i >= j) {
          return;
        }
        auto o = right_lcm(m, xs[i], xs[j]);
        if (o.is_orthogonal()) {
          return;
        }
        ++c.checked;
        if (scale_value(m, g, r, o.meet().lcm) != nx_lcm(ns[i], ns[j])) {
          fail(m.format(xs[i]) + ", " + m.format(xs[j]));
        }
      });
    });
    run("scale one exactly on the core", [&](AxiomCheck& c, auto&& fail) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++c.checked;
        if ((ns[i] == 1) != is_core(m, xs[i])) {
          fail(m.format(xs[i]));
        }
      }
    });
    run("invariant under the core action", [&](AxiomCheck& c, auto&& fail) {
      for (auto const& a : m.enumerate_core_generators()) {
        for (std::size_t i = 0; i < P; ++i) {
          try {
            ++c.checked;
            if (scale_value(m, g, r, multiply(m, a, xs[i])) != ns[i]) {
              fail(m.format(a) + " * " + m.format(xs[i]));
            }
          } catch (OverflowError const&) {
          }
        }
      }
    });
    run("irreducible values on noncore irreducibles", [&](AxiomCheck& c, auto&& fail) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        ++c.checked;
        if (irr.count(ns[i]) != static_cast<std::size_t>(is_noncore_irreducible(m, xs[i]))) {
          fail(m.format(xs[i]));
        }
      }
    });
    run("agrees with the closed form", [&](AxiomCheck& c, auto&& fail) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (auto cf = m.closed_form_scale(xs[i])) {
          ++c.checked;
          if (*cf != ns[i]) {
            fail(m.format(xs[i]) + ": " + std::to_string(ns[i]) + " vs "
                 + std::to_string(*cf));
          }
        }
      }
    });
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  nlohmann::json to_json(Verdict const& v) {
    return {{"status", to_string(v.status)},
            {"reason", v.reason},
            {"witnesses", v.witnesses},
            {"coverage", v.coverage}};
  }

  nlohmann::json to_json(ScaleReport const& r, CoreGraph const& g, Monoid const& m) {
    nlohmann::json j;
    j["family"]           = m.kind();
    j["exists"]           = to_string(r.exists);
    j["graph_exhaustive"] = r.graph_exhaustive;
    j["cond_i"]           = to_json(r.cond_i);
    j["cond_ii"]          = to_json(r.cond_ii);
    j["cond_iii"]         = to_json(r.cond_iii);
    j["cond_iv"]          = to_json(r.cond_iv);
    auto comps            = nlohmann::json::array();
    for (std::size_t c = 0; c < g.components.size(); ++c) {
      auto verts = nlohmann::json::array();
      for (auto v : g.components[c]) {
        verts.push_back(m.format(g.vertices[v]));
      }
      comps.push_back({{"index", c},
                       {"cardinality", format_cardinality(g.component_cards[c])},
                       {"vertices", verts},
                       {"edges", g.component_edges(c).size()}});
    }
    j["components"] = comps;
    auto table      = nlohmann::json::array();
    for (auto c : r.scale_on_components) {
      table.push_back(format_cardinality(c));
    }
    j["scale_on_components"] = table;
    return j;
  }

  nlohmann::json to_json(AxiomReport const& r) {
    auto out = nlohmann::json::array();
    for (auto const& c : r.checks) {
      out.push_back({{"check", c.name},
                     {"checked", c.checked},
                     {"passed", c.passed()},
                     {"failures", c.failures}});
    }
    return out;
  }

}  // namespace gscale
