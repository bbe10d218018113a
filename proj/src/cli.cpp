#include "gscale/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gscale/core_graph.hpp"
#include "gscale/error.hpp"
#include "gscale/family_config.hpp"
#include "gscale/kernel.hpp"
#include "gscale/lcm_engine.hpp"
#include "gscale/scale.hpp"

namespace gscale::cli {

  namespace {
    constexpr std::size_t builtin_cap = 1000;

    std::size_t resolve_cap(std::optional<std::size_t> flag, MonoidHandle const& h) {
      if (flag) {
        return *flag;
      }
      if (h.config.run.cap) {
        return *h.config.run.cap;
      }
      if (char const* env = std::getenv(cap_env_var); env && *env) {
        char*              end = nullptr;
        unsigned long long v   = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0) {
          throw ConfigError(cap_env_var, "must be a positive integer");
        }
        return static_cast<std::size_t>(v);
      }
      return builtin_cap;
    }

    std::string roman(int i) {
      static char const* const names[] = {"i", "ii", "iii", "iv"};
      return names[i];
    }

    std::string fmt_double(double x) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", x);
      return buf;
    }

    std::string zeta_csv(NxSubsemigroup const& nx, std::vector<double> const& betas,
                         std::uint64_t cutoff) {
      std::ostringstream os;
      os << "beta,partial_sum,euler_closed_form,abs_diff\n";
      for (double b : betas) {
        auto z = zeta_partial(nx, b, cutoff);
        os << fmt_double(b) << "," << fmt_double(z.partial) << ",";
        if (z.euler) {
          os << fmt_double(*z.euler) << "," << fmt_double(std::abs(z.partial - *z.euler));
        } else {
          os << "divergent,";
        }
        os << "\n";
      }
      return os.str();
    }

    std::vector<std::uint64_t> finite(std::vector<Cardinality> const& cards) {
      std::vector<std::uint64_t> out;
      for (auto c : cards) {
        out.push_back(c.value());
      }
      return out;
    }

    void write_file(std::filesystem::path const& p, std::string const& text) {
      std::ofstream f(p, std::ios::binary);
      if (!f) {
        throw ConfigError(p.string(), "cannot open for writing");
      }
      f << text;
    }

    std::vector<Element> parse_word(Monoid const& m, std::string const& spec) {
      std::vector<Element> out;
      for (auto const& piece : split_element_list(spec)) {
        out.push_back(m.parse(piece));
      }
      if (out.empty()) {
        throw ParseError("empty element list \"" + spec + "\"");
      }
      return out;
    }

    struct Analysis {
      CoreGraph            graph;
      std::vector<Element> samples;
      ScaleReport          report;
    };

    Analysis analyze(MonoidHandle const& h, std::size_t cap) {
      Analysis a;
      a.graph   = build_core_graph(*h, cap);
      a.samples = default_samples(*h, a.graph);
      a.report  = check_conditions(*h, a.graph, a.samples);
      return a;
    }

    int exit_for(Status s) {
      switch (s) {
        case Status::Pass:
          return exit_exists;
        case Status::Fail:
          return exit_absent;
        case Status::Inconclusive:
          return exit_inconclusive;
      }
      return exit_internal;
    }

    int cmd_analyze(std::string const& path, std::optional<std::size_t> cap_flag,
                    std::optional<std::string> out_flag, std::ostream& out) {
      auto       h   = load_family_file(path);
      auto const cap = resolve_cap(cap_flag, h);
      auto       a   = analyze(h, cap);
      auto const& g  = a.graph;
      auto const& r  = a.report;

      out << "family: " << h->kind() << "\n";
      out << "core graph: " << g.vertices.size() << " vertices, " << g.edges.size()
          << " edges, " << g.components.size() << " coconnected components"
          << (g.exhaustive ? "" : " (not exhaustive at cap " + std::to_string(cap) + ")")
          << "\n";
      for (std::size_t c = 0; c < g.components.size(); ++c) {
        out << "  V" << c << ": |V|=" << format_cardinality(g.component_cards[c]) << ", "
            << g.component_edges(c).size() << " edges\n";
      }
      Verdict const* conds[] = {&r.cond_i, &r.cond_ii, &r.cond_iii, &r.cond_iv};
      for (int i = 0; i < 4; ++i) {
        auto const& v = *conds[i];
        if (v.failed()) {
          out << "condition (" << roman(i) << ") failed: " << v.reason << "\n";
        } else {
          out << "condition (" << roman(i) << ") " << to_string(v.status) << ": " << v.reason
              << "\n";
        }
        for (auto const& w : v.witnesses) {
          out << "    witness: " << w << "\n";
        }
      }
      auto beta = beta_component_action(*h, g);
      for (auto const& b : beta.generators) {
        if (b.kind == BetaKind::Permuting) {
          out << "core generator " << h->format(b.generator) << " permutes components:";
          for (std::size_t c = 0; c < b.component_map.size(); ++c) {
            out << " V" << c << "->V" << b.component_map[c];
          }
          out << "\n";
        }
      }

      nlohmann::json doc = to_json(r, g, *h);
      doc["cap"]         = cap;
      doc["samples"]     = a.samples.size();
      auto beta_json     = nlohmann::json::array();
      for (auto const& b : beta.generators) {
        beta_json.push_back({{"generator", h->format(b.generator)},
                             {"kind", to_string(b.kind)},
                             {"component_map", b.component_map}});
      }
      doc["beta"] = beta_json;

      std::optional<std::string> zeta;
      if (r.exists == Status::Pass) {
        out << "scale exists:";
        for (std::size_t c = 0; c < r.scale_on_components.size(); ++c) {
          out << " N=" << format_cardinality(r.scale_on_components[c]) << " on V" << c;
        }
        out << "\n";
        auto ax = verify_scale_axioms(*h, g, r, a.samples);
        for (auto const& c : ax.checks) {
          out << "  check " << c.name << ": " << (c.passed() ? "ok" : "FAILED") << " ("
              << c.checked << " cases)\n";
        }
        doc["axioms"] = to_json(ax);
        auto const& run = h.config.run;
        if (!run.zeta_betas.empty()) {
          zeta = zeta_csv(NxSubsemigroup(finite(r.scale_on_components)), run.zeta_betas,
                          run.zeta_cutoff.value_or(1'000'000));
        }
      } else if (r.exists == Status::Fail) {
        out << "no generalized scale\n";
      } else {
        out << "inconclusive at cap " << cap << "\n";
      }

      auto out_dir = out_flag ? out_flag : h.config.run.out_dir;
      if (out_dir) {
        std::filesystem::path dir(*out_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "graph.dot", to_dot(g, *h));
        write_file(dir / "scale.json", doc.dump(2) + "\n");
        if (zeta) {
          write_file(dir / "zeta.csv", *zeta);
        }
        out << "artifacts written to " << dir.string() << "\n";
      }
      return exit_for(r.exists);
    }

    int cmd_lcm(std::string const& path, std::string const& s_spec, std::string const& t_spec,
                bool grid, bool json, std::optional<std::size_t> cap_flag, std::ostream& out) {
      auto        h = load_family_file(path);
      auto const& m = *h;
      auto        s = parse_word(m, s_spec);
      auto        t = parse_word(m, t_spec);
      if (!grid) {
        auto o = right_lcm(m, fold(m, s), fold(m, t));
        if (o.is_orthogonal()) {
          out << "Orthogonal\n";
        } else {
          out << "Meet lcm=" << m.format(o.meet().lcm)
              << " s_cofactor=" << m.format(o.meet().cofactor_left)
              << " t_cofactor=" << m.format(o.meet().cofactor_right) << "\n";
        }
        return 0;
      }
      auto g = build_core_graph(m, resolve_cap(cap_flag, h));
      auto d = word_lcm(m, g, make_word(m, g, s), make_word(m, g, t));
      if (json) {
        out << to_json(d, m).dump(2) << "\n";
        return 0;
      }
      out << render_grid(d, m);
      out << "process log:";
      for (auto const& row : d.process) {
        for (auto const& p : row) {
          if (p) {
            out << " " << to_char(*p);
          }
        }
      }
      out << "\n";
      out << (d.outcome == GridOutcome::Orthogonal ? "Orthogonal" : "Meet lcm=" + m.format(*d.lcm))
          << "\n";
      return 0;
    }

    int cmd_zeta(std::string const& path, std::vector<double> betas,
                 std::optional<std::uint64_t> cutoff, std::optional<std::size_t> cap_flag,
                 std::ostream& out, std::ostream& err) {
      auto h = load_family_file(path);
      if (betas.empty()) {
        betas = h.config.run.zeta_betas;
      }
      if (betas.empty()) {
        err << "error: --beta is required (no betas in the config either)\n";
        return exit_error;
      }
      if (!cutoff) {
        cutoff = h.config.run.zeta_cutoff;
      }
      if (!cutoff || *cutoff < 1) {
        err << "error: --cutoff must be a positive integer\n";
        return exit_error;
      }
      auto a = analyze(h, resolve_cap(cap_flag, h));
      if (a.report.exists != Status::Pass) {
        err << "no generalized scale (" << to_string(a.report.exists) << ")\n";
        return exit_for(a.report.exists);
      }
      out << zeta_csv(NxSubsemigroup(finite(a.report.scale_on_components)), betas, *cutoff);
      return 0;
    }

    int cmd_graph(std::string const& path, std::string const& dot,
                  std::optional<std::size_t> cap_flag, std::ostream& out) {
      auto h = load_family_file(path);
      auto g = build_core_graph(*h, resolve_cap(cap_flag, h));
      auto text = to_dot(g, *h);
      if (dot == "-") {
        out << text;
      } else {
        write_file(dot, text);
        out << g.vertices.size() << " vertices, " << g.edges.size() << " edges, "
            << g.components.size() << " components written to " << dot << "\n";
      }
      return 0;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized scales on right LCM monoids", "gscale"};
    app.require_subcommand(1);

    std::string                  config, s_spec, t_spec, dot;
    std::optional<std::size_t>   cap;
    std::optional<std::string>   out_dir;
    std::optional<std::uint64_t> cutoff;
    std::vector<double>          betas;
    bool                         grid = false, json = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "decide existence of the scale");
    analyze_cmd->add_option("config", config, "family config (JSON)")->required();
    analyze_cmd->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--out", out_dir, "artifact directory");

    auto* lcm_cmd = app.add_subcommand("lcm", "right LCM of two elements or words");
    lcm_cmd->add_option("config", config, "family config (JSON)")->required();
    lcm_cmd->add_option("s", s_spec, "element or word")->required();
    lcm_cmd->add_option("t", t_spec, "element or word")->required();
    lcm_cmd->add_flag("--grid", grid, "run the grid algorithm on the words");
    lcm_cmd->add_flag("--json", json, "grid as JSON");
    lcm_cmd->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);

    auto* zeta_cmd = app.add_subcommand("zeta", "partial sums of the zeta series");
    zeta_cmd->add_option("config", config, "family config (JSON)")->required();
    zeta_cmd->add_option("--beta", betas, "comma separated exponents")->delimiter(',');
    zeta_cmd->add_option("--cutoff", cutoff, "largest scale value summed");
    zeta_cmd->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);

    auto* graph_cmd = app.add_subcommand("graph", "export the core graph");
    graph_cmd->add_option("config", config, "family config (JSON)")->required();
    graph_cmd->add_option("--dot", dot, "output file, - for stdout")->required();
    graph_cmd->add_option("--cap", cap, "enumeration cap")->check(CLI::PositiveNumber);

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    }

    try {
      if (analyze_cmd->parsed()) {
        return cmd_analyze(config, cap, out_dir, out);
      }
      if (lcm_cmd->parsed()) {
        return cmd_lcm(config, s_spec, t_spec, grid, json, cap, out);
      }
      if (zeta_cmd->parsed()) {
        return cmd_zeta(config, betas, cutoff, cap, out, err);
      }
      if (graph_cmd->parsed()) {
        return cmd_graph(config, dot, cap, out);
      }
    } catch (ConfigError const& e) {
      err << "config error: " << e.what() << "\n";
      return exit_error;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return exit_error;
    } catch (PreconditionError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    } catch (FamilyMismatch const& e) {
      err << "error: " << e.what() << "\n";
      return exit_error;
    } catch (Error const& e) {
      err << "internal error: " << e.what() << "\n";
      return exit_internal;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << "\n";
      return exit_internal;
    }
    return exit_error;
  }

}  // namespace gscale::cli
