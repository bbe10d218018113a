#ifndef GSCALE_SCALE_HPP_
#define GSCALE_SCALE_HPP_

// Existence and construction of the generalized scale N, the checks of its
// axioms, factorization in LCM subsemigroups of ℕ^× and ζ partial sums.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gscale/core_graph.hpp"
#include "gscale/element.hpp"
#include "gscale/monoid.hpp"

namespace gscale {

  enum class Status { Pass, Fail, Inconclusive };

  std::string to_string(Status s);

  struct Verdict {
    Status                   status = Status::Inconclusive;
    std::string              reason;
    std::vector<std::string> witnesses;
    std::string              coverage;

    bool passed() const noexcept {
      return status == Status::Pass;
    }
    bool failed() const noexcept {
      return status == Status::Fail;
    }
  };

  struct ScaleReport {
    Verdict                  cond_i, cond_ii, cond_iii, cond_iv;
    std::vector<Cardinality> scale_on_components;  // only when cond_i passes
    Status                   exists = Status::Inconclusive;
    bool                     graph_exhaustive = false;
  };

  inline constexpr std::uint64_t default_freeness_bound = 1'000'000;

  // Do the cards freely generate a nontrivial submonoid of ℕ^×? Decided
  // exactly by the rank of the prime exponent matrix; the bounded collision
  // search supplies the smallest witness.
  Verdict check_freeness(std::vector<Cardinality> const& cards,
                         std::uint64_t                   bound = default_freeness_bound);

  // Smallest n ≤ bound with two distinct factorizations over gens, as
  // "36 = 4*9 = 6*6".
  std::optional<std::string> find_collision(std::vector<std::uint64_t> const& gens,
                                            std::uint64_t                     bound);

  bool exponent_vectors_independent(std::vector<std::uint64_t> const& gens);

  struct NxSubsemigroup {
    std::vector<std::uint64_t> generators;

    explicit NxSubsemigroup(std::vector<std::uint64_t> gens);

    // Generators that are not products of two or more generators.
    std::vector<std::uint64_t> irreducibles() const;
    bool                       contains(std::uint64_t n) const;
    // All elements ≤ cutoff, ascending.
    std::vector<std::uint64_t> elements_up_to(std::uint64_t cutoff) const;
  };

  // The multiset (ascending) of irreducibles with product n.
  std::vector<std::uint64_t> factor_in_nx(std::uint64_t n, NxSubsemigroup const& nx);

  struct ZetaResult {
    double                partial = 0;
    std::optional<double> euler;  // absent when divergent
    bool                  divergent = false;
    std::size_t           terms     = 0;
  };

  ZetaResult zeta_partial(NxSubsemigroup const& nx, double beta, std::uint64_t cutoff);

  // Products of at most three vertices, core-shifted vertices, spot and
  // random elements.
  std::vector<Element> default_samples(Monoid const& m, CoreGraph const& g,
                                       std::size_t limit = 20000);

  ScaleReport check_conditions(Monoid const& m, CoreGraph const& g,
                               std::vector<Element> const& samples);

  std::uint64_t scale_value(Monoid const& m, CoreGraph const& g, ScaleReport const& r,
                            Element const& s);

  // n pairwise orthogonal elements of N^{-1}(n), one per class.
  std::vector<Element> transversal(Monoid const& m, CoreGraph const& g, ScaleReport const& r,
                                   std::uint64_t n);

  struct AxiomCheck {
    std::string              name;
    std::size_t              checked = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool                    all_passed() const;
  };

  AxiomReport verify_scale_axioms(Monoid const& m, CoreGraph const& g, ScaleReport const& r,
                                  std::vector<Element> const& samples);

  nlohmann::json to_json(Verdict const& v);
  nlohmann::json to_json(ScaleReport const& r, CoreGraph const& g, Monoid const& m);
  nlohmann::json to_json(AxiomReport const& r);

}  // namespace gscale

#endif  // GSCALE_SCALE_HPP_
