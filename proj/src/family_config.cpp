#include "gscale/family_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "gscale/arith.hpp"
#include "gscale/error.hpp"
#include "gscale/families/alg_dyn_f2t.hpp"
#include "gscale/families/alg_dyn_zd.hpp"
#include "gscale/families/axb.hpp"
#include "gscale/families/graph_product.hpp"
#include "gscale/families/self_similar.hpp"

namespace gscale {

  using nlohmann::json;

  namespace {
    std::string join(std::string const& path, std::string const& name) {
      if (path.empty()) {
        return name;
      }
      if (name.empty()) {
        return path;
      }
      return name.front() == '[' ? path + name : path + "." + name;
    }

    std::string idx(std::size_t i) {
      return "[" + std::to_string(i) + "]";
    }

    // Re-anchors an error raised by a nested builder or validator.
    [[noreturn]] void rethrow_under(std::string const& path, ConfigError const& e) {
      std::string msg = e.what();
      auto        what = msg.substr(std::min(msg.size(), e.field().size() + 2));
      throw ConfigError(join(path, e.field()), what);
    }

    json const& require(json const& j, char const* key, std::string const& path) {
      if (!j.is_object()) {
        throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw ConfigError(join(path, key), "missing required field");
      }
      return *it;
    }

    std::int64_t as_int(json const& j, std::string const& path) {
      if (!j.is_number_integer()) {
        throw ConfigError(path, "expected an integer");
      }
      return j.get<std::int64_t>();
    }

    std::string as_string(json const& j, std::string const& path) {
      if (!j.is_string()) {
        throw ConfigError(path, "expected a string");
      }
      return j.get<std::string>();
    }

    json const& as_array(json const& j, std::string const& path) {
      if (!j.is_array()) {
        throw ConfigError(path, "expected an array");
      }
      return j;
    }

    std::string canonical_kind(std::string const& raw, std::string const& path) {
      std::string k;
      for (char c : raw) {
        if (c != '_' && c != '-' && c != ' ') {
          k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
      }
      static std::map<std::string, std::string> const names{
          {"axb", "axb"},
          {"selfsimilar", "self_similar"},
          {"algdynzd", "alg_dyn_zd"},
          {"algdynf2t", "alg_dyn_f2t"},
          {"graphproduct", "graph_product"},
          {"freeproduct", "free_product"},
      };
      auto it = names.find(k);
      if (it == names.end()) {
        throw ConfigError(path, "unknown family kind \"" + raw
                                    + "\" (expected axb, self_similar, alg_dyn_zd, "
                                      "alg_dyn_f2t, graph_product, free_product)");
      }
      return it->second;
    }

    ////////////////////////////////////////////////////////////////////////

    std::shared_ptr<Monoid const> build_axb(json const& j, std::string const& path) {
      auto has_primes = j.contains("primes");
      auto has_max    = j.contains("max_prime");
      if (has_primes && has_max) {
        throw ConfigError(join(path, "primes"), "give either primes or max_prime, not both");
      }
      if (has_primes) {
        std::vector<std::int64_t> primes;
        auto const&               arr = as_array(j["primes"], join(path, "primes"));
        for (std::size_t i = 0; i < arr.size(); ++i) {
          auto p = as_int(arr[i], join(path, "primes" + idx(i)));
          if (!arith::is_prime(p)) {
            throw ConfigError(join(path, "primes" + idx(i)),
                              std::to_string(p) + " is not a prime");
          }
          primes.push_back(p);
        }
        return std::make_shared<AxbMonoid>(primes);
      }
      if (has_max) {
        auto m = as_int(j["max_prime"], join(path, "max_prime"));
        if (m < 0 || m > 1000000) {
          throw ConfigError(join(path, "max_prime"), "must lie in [0, 1000000]");
        }
        std::vector<std::int64_t> primes;
        for (std::int64_t p = 2; p <= m; ++p) {
          if (arith::is_prime(p)) {
            primes.push_back(p);
          }
        }
        return std::make_shared<AxbMonoid>(primes);
      }
      return std::make_shared<AxbMonoid>(std::nullopt);
    }

    int group_index(json const& v, std::vector<std::string> const& names,
                    std::string const& path) {
      if (v.is_number_integer()) {
        auto i = v.get<std::int64_t>();
        if (i < 0 || static_cast<std::size_t>(i) >= names.size()) {
          throw ConfigError(path, "group index out of range");
        }
        return static_cast<int>(i);
      }
      auto s  = as_string(v, path);
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) {
        throw ConfigError(path, "unknown group element \"" + s + "\"");
      }
      return static_cast<int>(it - names.begin());
    }

    std::shared_ptr<Monoid const> build_self_similar(json const& j, std::string const& path) {
      auto alphabet = as_string(require(j, "alphabet", path), join(path, "alphabet"));
      if (!j.contains("group")) {
        auto act = SelfSimilarAction::free_monoid(alphabet);
        try {
          return std::make_shared<SelfSimilarMonoid>(std::move(act));
        } catch (ConfigError const& e) {
          rethrow_under(path, e);
        }
      }
      auto const        gpath = join(path, "group");
      auto const&       g     = j["group"];
      SelfSimilarAction act;
      act.alphabet = alphabet;
      auto const& els = as_array(require(g, "elements", gpath), join(gpath, "elements"));
      for (std::size_t i = 0; i < els.size(); ++i) {
        act.group_names.push_back(as_string(els[i], join(gpath, "elements" + idx(i))));
      }
      auto const  n    = act.group_names.size();
      auto const& mul  = as_array(require(g, "mul", gpath), join(gpath, "mul"));
      if (mul.size() != n) {
        throw ConfigError(join(gpath, "mul"), "expected " + std::to_string(n) + " rows");
      }
      for (std::size_t a = 0; a < n; ++a) {
        auto const  rp  = join(gpath, "mul" + idx(a));
        auto const& row = as_array(mul[a], rp);
        if (row.size() != n) {
          throw ConfigError(rp, "expected " + std::to_string(n) + " entries");
        }
        std::vector<int> r;
        for (std::size_t b = 0; b < n; ++b) {
          r.push_back(group_index(row[b], act.group_names, rp + idx(b)));
        }
        act.mul.push_back(std::move(r));
      }
      auto const& action = require(g, "action", gpath);
      auto const& restr  = require(g, "restriction", gpath);
      if (!action.is_object()) {
        throw ConfigError(join(gpath, "action"), "expected an object keyed by group element");
      }
      if (!restr.is_object()) {
        throw ConfigError(join(gpath, "restriction"),
                          "expected an object keyed by group element");
      }
      for (auto const& name : act.group_names) {
        auto const ap = join(gpath, "action." + name);
        if (!action.contains(name)) {
          throw ConfigError(ap, "missing entry");
        }
        auto             images = as_string(action[name], ap);
        std::vector<int> row;
        if (images.size() != alphabet.size()) {
          throw ConfigError(ap, "expected one image per letter of \"" + alphabet + "\"");
        }
        for (char c : images) {
          auto pos = alphabet.find(c);
          if (pos == std::string::npos) {
            throw ConfigError(ap, std::string("letter '") + c + "' not in alphabet");
          }
          row.push_back(static_cast<int>(pos));
        }
        act.action.push_back(std::move(row));

        auto const rp = join(gpath, "restriction." + name);
        if (!restr.contains(name)) {
          throw ConfigError(rp, "missing entry");
        }
        auto const& rr = as_array(restr[name], rp);
        if (rr.size() != alphabet.size()) {
          throw ConfigError(rp, "expected one restriction per letter");
        }
        std::vector<int> rrow;
        for (std::size_t x = 0; x < rr.size(); ++x) {
          rrow.push_back(group_index(rr[x], act.group_names, rp + idx(x)));
        }
        act.restriction.push_back(std::move(rrow));
      }
      try {
        return std::make_shared<SelfSimilarMonoid>(std::move(act));
      } catch (ConfigError const& e) {
        rethrow_under(path, e);
      }
    }

    lattice::Mat parse_matrix(json const& j, std::size_t dim, std::string const& path) {
      auto const&  rows = as_array(j, path);
      lattice::Mat m;
      if (rows.size() != dim) {
        throw ConfigError(path, "expected " + std::to_string(dim) + " rows");
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto const& row = as_array(rows[i], path + idx(i));
        if (row.size() != dim) {
          throw ConfigError(path + idx(i), "expected " + std::to_string(dim) + " entries");
        }
        lattice::Vec r;
        for (std::size_t k = 0; k < row.size(); ++k) {
          r.push_back(as_int(row[k], path + idx(i) + idx(k)));
        }
        m.push_back(std::move(r));
      }
      return m;
    }

    std::shared_ptr<Monoid const> build_alg_dyn_zd(json const& j, std::string const& path) {
      auto const kind = j.contains("monoid") ? as_string(j["monoid"], join(path, "monoid"))
                                             : std::string("commutative");
      AlgDynZdSpec spec;
      if (kind == "flip") {
        spec = AlgDynZdSpec::flip(as_int(require(j, "p", path), join(path, "p")));
      } else {
        if (kind == "free") {
          spec.kind = MatrixMonoidKind::Free;
        } else if (kind == "commutative") {
          spec.kind = MatrixMonoidKind::Commutative;
        } else {
          throw ConfigError(join(path, "monoid"),
                            "expected free, commutative or flip, got \"" + kind + "\"");
        }
        auto dim = as_int(require(j, "dim", path), join(path, "dim"));
        if (dim < 1 || dim > 8) {
          throw ConfigError(join(path, "dim"), "must lie in [1, 8]");
        }
        spec.dim          = static_cast<std::size_t>(dim);
        auto const  gpath = join(path, "generators");
        auto const& gens  = as_array(require(j, "generators", path), gpath);
        for (std::size_t i = 0; i < gens.size(); ++i) {
          auto const gp = gpath + idx(i);
          spec.generators.push_back(
              {as_string(require(gens[i], "name", gp), join(gp, "name")),
               parse_matrix(require(gens[i], "matrix", gp), spec.dim, join(gp, "matrix"))});
        }
      }
      try {
        return std::make_shared<AlgDynZdMonoid>(std::move(spec));
      } catch (ConfigError const& e) {
        rethrow_under(path, e);
      }
    }

    std::shared_ptr<Monoid const> build_alg_dyn_f2t(json const& j, std::string const& path) {
      std::vector<PolyGenerator> gens;
      auto const                 gpath = join(path, "generators");
      auto const&                arr   = as_array(require(j, "generators", path), gpath);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto const  gp   = gpath + idx(i);
        auto const  name = as_string(require(arr[i], "name", gp), join(gp, "name"));
        auto const& poly = require(arr[i], "poly", gp);
        Poly2       f;
        if (poly.is_string()) {
          try {
            f = Poly2::parse(poly.get<std::string>());
          } catch (ParseError const& e) {
            throw ConfigError(join(gp, "poly"), e.what());
          }
        } else {
          auto const&           exps = as_array(poly, join(gp, "poly"));
          std::vector<unsigned> es;
          for (std::size_t k = 0; k < exps.size(); ++k) {
            auto e = as_int(exps[k], join(gp, "poly") + idx(k));
            if (e < 0 || e > 4096) {
              throw ConfigError(join(gp, "poly") + idx(k), "exponent must lie in [0, 4096]");
            }
            es.push_back(static_cast<unsigned>(e));
          }
          f = Poly2::from_exponents(es);
        }
        gens.push_back({name, f});
      }
      try {
        return std::make_shared<AlgDynF2tMonoid>(std::move(gens));
      } catch (ConfigError const& e) {
        rethrow_under(path, e);
      }
    }

    std::shared_ptr<Monoid const> build_graph_product(json const& j, std::string const& path,
                                                      bool free) {
      auto const                      vpath = join(path, "vertices");
      auto const&                     vs    = as_array(require(j, "vertices", path), vpath);
      std::vector<GraphProductVertex> vertices;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        auto const vp   = vpath + idx(i);
        auto       name = vs[i].contains("name") ? as_string(vs[i]["name"], join(vp, "name"))
                                                 : "v" + std::to_string(i);
        if (name.empty() || name.find_first_of(":[]") != std::string::npos) {
          throw ConfigError(join(vp, "name"), "invalid vertex name \"" + name + "\"");
        }
        vertices.push_back({name, build_monoid(vs[i], vp)});
      }
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      if (j.contains("edges")) {
        if (free) {
          throw ConfigError(join(path, "edges"), "a free product has no edges");
        }
        auto const  epath = join(path, "edges");
        auto const& es    = as_array(j["edges"], epath);
        auto        endpoint = [&](json const& x, std::string const& p) -> std::size_t {
          if (x.is_string()) {
            auto s  = x.get<std::string>();
            auto it = std::find_if(vertices.begin(), vertices.end(),
                                   [&](auto const& v) { return v.name == s; });
            if (it == vertices.end()) {
              throw ConfigError(p, "unknown vertex \"" + s + "\"");
            }
            return static_cast<std::size_t>(it - vertices.begin());
          }
          auto k = as_int(x, p);
          if (k < 0 || static_cast<std::size_t>(k) >= vertices.size()) {
            throw ConfigError(p, "vertex index out of range");
          }
          return static_cast<std::size_t>(k);
        };
        for (std::size_t i = 0; i < es.size(); ++i) {
          auto const  ep = epath + idx(i);
          auto const& e  = as_array(es[i], ep);
          if (e.size() != 2) {
            throw ConfigError(ep, "an edge has exactly two endpoints");
          }
          auto a = endpoint(e[0], ep + "[0]");
          auto b = endpoint(e[1], ep + "[1]");
          if (a == b) {
            throw ConfigError(ep, "loops are not allowed");
          }
          for (auto const& [x, y] : edges) {
            if ((x == a && y == b) || (x == b && y == a)) {
              throw ConfigError(ep, "duplicate edge");
            }
          }
          edges.emplace_back(a, b);
        }
      }
      try {
        return std::make_shared<GraphProductMonoid>(std::move(vertices), std::move(edges),
                                                    free ? "free_product" : "graph_product");
      } catch (ConfigError const& e) {
        rethrow_under(path, e);
      }
    }

    RunOptions parse_run(json const& j) {
      RunOptions r;
      if (!j.is_object()) {
        throw ConfigError("run", "expected an object");
      }
      if (j.contains("cap")) {
        auto c = as_int(j["cap"], "run.cap");
        if (c < 1) {
          throw ConfigError("run.cap", "must be positive");
        }
        r.cap = static_cast<std::size_t>(c);
      }
      if (j.contains("zeta")) {
        auto const& z = j["zeta"];
        if (z.contains("betas")) {
          auto const& bs = as_array(z["betas"], "run.zeta.betas");
          for (std::size_t i = 0; i < bs.size(); ++i) {
            if (!bs[i].is_number()) {
              throw ConfigError("run.zeta.betas" + idx(i), "expected a number");
            }
            r.zeta_betas.push_back(bs[i].get<double>());
          }
        }
        if (z.contains("cutoff")) {
          auto c = as_int(z["cutoff"], "run.zeta.cutoff");
          if (c < 1) {
            throw ConfigError("run.zeta.cutoff", "must be positive");
          }
          r.zeta_cutoff = static_cast<std::uint64_t>(c);
        }
      }
      if (j.contains("out")) {
        r.out_dir = as_string(j["out"], "run.out");
      }
      return r;
    }
  }  // namespace

  std::shared_ptr<Monoid const> build_monoid(json const& j, std::string const& path) {
    auto kind = canonical_kind(as_string(require(j, "kind", path), join(path, "kind")),
                               join(path, "kind"));
    try {
      if (kind == "axb") {
        return build_axb(j, path);
      }
      if (kind == "self_similar") {
        return build_self_similar(j, path);
      }
      if (kind == "alg_dyn_zd") {
        return build_alg_dyn_zd(j, path);
      }
      if (kind == "alg_dyn_f2t") {
        return build_alg_dyn_f2t(j, path);
      }
      return build_graph_product(j, path, kind == "free_product");
    } catch (json::exception const& e) {
      throw ConfigError(path.empty() ? "<root>" : path, e.what());
    }
  }

  FamilyConfig parse_family_config(json const& doc) {
    FamilyConfig c;
    c.kind   = canonical_kind(as_string(require(doc, "kind", ""), "kind"), "kind");
    c.params = doc;
    if (doc.contains("run")) {
      c.run = parse_run(doc["run"]);
      c.params.erase("run");
    }
    return c;
  }

  FamilyConfig read_family_config(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError(path.string(), "cannot open file");
    }
    json doc;
    try {
      doc = json::parse(in, nullptr, true, true);
    } catch (json::parse_error const& e) {
      throw ConfigError(path.string(), std::string("invalid JSON: ") + e.what());
    }
    return parse_family_config(doc);
  }

  MonoidHandle load_family(FamilyConfig const& config) {
    return {config, build_monoid(config.params)};
  }

  MonoidHandle load_family_file(std::filesystem::path const& path) {
    return load_family(read_family_config(path));
  }

}  // namespace gscale
