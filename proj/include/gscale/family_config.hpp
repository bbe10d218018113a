#ifndef GSCALE_FAMILY_CONFIG_HPP_
#define GSCALE_FAMILY_CONFIG_HPP_

// Declarative family configurations (JSON) and the loader that turns them
// into monoid instances. Every invariant violation is reported as a
// ConfigError whose field path points into the document, e.g.
// "vertices[1].group.mul".

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gscale/monoid.hpp"

namespace gscale {

  // Optional "run" section: defaults for the CLI pipeline.
  struct RunOptions {
    std::optional<std::size_t>   cap;
    std::vector<double>          zeta_betas;
    std::optional<std::uint64_t> zeta_cutoff;
    std::optional<std::string>   out_dir;
  };

  struct FamilyConfig {
    std::string    kind;  // canonical: axb, self_similar, alg_dyn_zd, ...
    nlohmann::json params;
    RunOptions     run;
  };

  struct MonoidHandle {
    FamilyConfig                  config;
    std::shared_ptr<Monoid const> monoid;

    Monoid const& operator*() const {
      return *monoid;
    }
    Monoid const* operator->() const {
      return monoid.get();
    }
  };

  // Validates the top-level shape (kind, run section).
  FamilyConfig parse_family_config(nlohmann::json const& doc);
  FamilyConfig read_family_config(std::filesystem::path const& path);

  MonoidHandle load_family(FamilyConfig const& config);
  MonoidHandle load_family_file(std::filesystem::path const& path);

  // Builds a monoid from a (possibly nested) family object; `path` prefixes
  // field names in errors.
  std::shared_ptr<Monoid const> build_monoid(nlohmann::json const& j,
                                             std::string const&    path = "");

}  // namespace gscale

#endif  // GSCALE_FAMILY_CONFIG_HPP_
