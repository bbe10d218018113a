#ifndef GSCALE_TESTS_SUPPORT_HPP_
#define GSCALE_TESTS_SUPPORT_HPP_

// Fixtures and brute-force oracles shared by the unit tests and the
// acceptance binary. Oracles only use multiply() on finite boxes.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gscale/core_graph.hpp"
#include "gscale/error.hpp"
#include "gscale/family_config.hpp"
#include "gscale/kernel.hpp"

namespace gscale::testing {

  inline std::string config_path(std::string const& name) {
    return std::string(GSCALE_SOURCE_DIR) + "/configs/" + name + ".json";
  }

  inline MonoidHandle bundled(std::string const& name) {
    return load_family_file(config_path(name));
  }

  inline MonoidHandle inline_family(std::string const& json) {
    return load_family(parse_family_config(nlohmann::json::parse(json)));
  }

  // A family with a finite box of small elements for the oracles.
  struct Fixture {
    std::string  name;
    MonoidHandle handle;
    unsigned     box_bound;
    unsigned     sample_size;

    Monoid const& m() const {
      return *handle;
    }
  };

  inline std::vector<Fixture> fixture_pool() {
    return {
        {"axb{2,3}", inline_family(R"({"kind":"axb","primes":[2,3]})"), 12, 4},
        {"selfsimilar-binary", bundled("selfsimilar-binary"), 4, 4},
        {"free-monoid", bundled("free-monoid"), 3, 4},
        {"freely-doubled", bundled("freely-doubled"), 3, 3},
        {"z2-flip", bundled("z2-flip"), 2, 3},
        {"commutative{2,3}",
         inline_family(R"({"kind":"alg_dyn_zd","monoid":"commutative","dim":1,
           "generators":[{"name":"a","matrix":[[2]]},{"name":"b","matrix":[[3]]}]})"),
         3, 3},
        {"ledrappier", bundled("ledrappier"), 3, 3},
        {"graph-products-gone-mad", bundled("graph-products-gone-mad"), 4, 3},
        {"raam-path", bundled("raam-path"), 3, 3},
        {"raam-star", bundled("raam-star"), 3, 3},
    };
  }

  inline std::vector<Element> core_samples(Monoid const& m, std::mt19937_64& rng,
                                           std::size_t count) {
    auto gens = m.enumerate_core_generators();
    std::vector<Element> out{m.identity()};
    if (gens.empty()) {
      return out;
    }
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int>         len(1, 3);
    while (out.size() < count) {
      Element a = m.identity();
      for (int k = len(rng); k > 0; --k) {
        a = multiply(m, a, gens[pick(rng)]);
      }
      out.push_back(a);
    }
    return out;
  }

  // Finite box E with all products s·u (s, u ∈ E) that land in E.
  class Box {
   public:
    Box(Monoid const& m, unsigned bound) : m_(m), elems_(m.enumerate_elements(bound)) {
      for (std::size_t i = 0; i < elems_.size(); ++i) {
        index_.emplace(elems_[i], i);
      }
    }

    std::vector<Element> const& elements() const noexcept {
      return elems_;
    }
    bool contains(Element const& x) const {
      return index_.count(x) != 0;
    }

    // {s·u : u ∈ E} ∩ E
    std::unordered_set<Element, ElementHash> multiples(Element const& s) const {
      std::unordered_set<Element, ElementHash> out;
      for (auto const& u : elems_) {
        try {
          auto c = multiply(m_, s, u);
          if (contains(c)) {
            out.insert(std::move(c));
          }
        } catch (OverflowError const&) {
        }
      }
      return out;
    }

    // s·a = t·r with a core (from `cores`), t and r noncore, all inside E.
    bool has_noncore_split(Element const& s, std::vector<Element> const& cores) const {
      for (auto const& a : cores) {
        Element sa = multiply(m_, s, a);
        for (auto const& t : elems_) {
          if (is_core(m_, t)) {
            continue;
          }
          for (auto const& r : elems_) {
            if (!is_core(m_, r) && multiply(m_, t, r) == sa) {
              return true;
            }
          }
        }
      }
      return false;
    }

   private:
    Monoid const&                                       m_;
    std::vector<Element>                                elems_;
    std::unordered_map<Element, std::size_t, ElementHash> index_;
  };

  // Brute-force check of a right LCM outcome on a box. Returns a
  // description of the first discrepancy.
  inline std::optional<std::string> lcm_box_discrepancy(Monoid const& m, Box const& box,
                                                        Element const& s, Element const& t) {
    auto o    = right_lcm(m, s, t);
    auto ms   = box.multiples(s);
    auto mt   = box.multiples(t);
    auto name = m.format(s) + ", " + m.format(t);
    if (o.is_orthogonal()) {
      for (auto const& c : ms) {
        if (mt.count(c)) {
          return "orthogonal but " + m.format(c) + " is a common multiple of " + name;
        }
      }
      return std::nullopt;
    }
    auto const& mt_ = o.meet();
    if (multiply(m, s, mt_.cofactor_left) != mt_.lcm
        || multiply(m, t, mt_.cofactor_right) != mt_.lcm) {
      return "cofactors do not reproduce the lcm for " + name;
    }
    auto mr = box.multiples(mt_.lcm);
    for (auto const& c : ms) {
      if (mt.count(c) && !mr.count(c)) {
        return "common multiple " + m.format(c) + " of " + name + " not in "
               + m.format(mt_.lcm) + "S";
      }
    }
    return std::nullopt;
  }

  inline std::vector<Element> random_noncore_irreducibles(Monoid const& m, CoreGraph const& g,
                                                          std::mt19937_64& rng,
                                                          std::size_t      count) {
    auto cores = core_samples(m, rng, 6);
    std::uniform_int_distribution<std::size_t> pv(0, g.vertices.size() - 1);
    std::uniform_int_distribution<std::size_t> pc(0, cores.size() - 1);
    std::vector<Element> out;
    while (out.size() < count) {
      out.push_back(multiply(m, multiply(m, cores[pc(rng)], g.vertices[pv(rng)]), cores[pc(rng)]));
    }
    return out;
  }

}  // namespace gscale::testing

#endif  // GSCALE_TESTS_SUPPORT_HPP_
