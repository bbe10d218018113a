#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gscale/arith.hpp"
#include "gscale/error.hpp"
#include "gscale/families/alg_dyn_f2t.hpp"
#include "gscale/families/axb.hpp"
#include "gscale/kernel.hpp"
#include "gscale/poly2.hpp"
#include "laws.hpp"

using namespace gscale;
using namespace gscale::testing;

namespace {
  std::vector<std::string> formatted(Monoid const& m, std::vector<Element> const& xs) {
    std::vector<std::string> out;
    for (auto const& x : xs) {
      out.push_back(m.format(x));
    }
    return out;
  }

  std::string config_error_field(std::string const& json) {
    try {
      inline_family(json);
    } catch (ConfigError const& e) {
      return e.field();
    }
    return "<no error>";
  }
}  // namespace

TEST_CASE("axb irreducibles are the prime multipliers") {
  AxbMonoid m(std::nullopt);
  for (int p = 2; p <= 30; ++p) {
    for (int k = 0; k < 4; ++k) {
      auto x = m.pair(k, p);
      CHECK(is_noncore_irreducible(m, x) == arith::is_prime(p));
    }
  }
  CHECK_FALSE(is_noncore_irreducible(m, m.pair(3, 1)));
}

TEST_CASE("axb classes in enumeration order") {
  AxbMonoid m(std::nullopt);
  auto      ce = m.enumerate_irreducible_classes(7);
  CHECK(formatted(m, ce.classes)
        == std::vector<std::string>{"(0,2)", "(1,2)", "(0,3)", "(1,3)", "(2,3)", "(0,5)", "(1,5)"});
  CHECK_FALSE(ce.exhaustive);
  AxbMonoid r({{2, 3, 5}});
  CHECK(r.enumerate_irreducible_classes(100).classes.size() == 10);
  CHECK(r.enumerate_irreducible_classes(100).exhaustive);
}

TEST_CASE("axb noncore factorizations") {
  AxbMonoid m(std::nullopt);
  auto      f = m.factor_noncore(m.parse("(0,12)"));
  REQUIRE(f);
  CHECK(formatted(m, f->letters) == std::vector<std::string>{"(0,2)", "(0,2)", "(0,3)"});
  CHECK(m.is_unit(f->left_core));
  CHECK(m.is_unit(f->right_core));
  auto g = m.factor_noncore(m.parse("(5,6)"));
  REQUIRE(g);
  CHECK(formatted(m, g->letters) == std::vector<std::string>{"(5,2)", "(0,3)"});
  CHECK(m.is_unit(g->left_core));
  CHECK(m.is_unit(g->right_core));
}

TEST_CASE("free monoid letters and prefixes") {
  auto h = inline_family(R"({"kind":"self_similar","alphabet":"ab"})");
  auto f = h->factor_noncore(h->parse("abba"));
  REQUIRE(f);
  CHECK(formatted(*h, f->letters)
        == std::vector<std::string>{h->format(h->parse("a")), h->format(h->parse("b")),
                                    h->format(h->parse("b")), h->format(h->parse("a"))});
  auto words = h->enumerate_elements(3);
  for (auto const& v : words) {
    for (auto const& w : words) {
      auto sv = h->format(v);
      auto sw = h->format(w);
      auto pv = sv.substr(1, sv.find(',') - 1);
      auto pw = sw.substr(1, sw.find(',') - 1);
      bool prefix = pv.rfind(pw, 0) == 0 || pw.rfind(pv, 0) == 0;
      CHECK(intersects(*h, v, w) == prefix);
    }
  }
}

TEST_CASE("self-similar binary classes") {
  auto h  = bundled("selfsimilar-binary");
  auto ce = h->enumerate_irreducible_classes(100);
  CHECK(ce.exhaustive);
  CHECK(formatted(*h, ce.classes) == std::vector<std::string>{"(a,e)", "(b,e)"});
}

TEST_CASE("self-similar validation") {
  CHECK(config_error_field(R"({"kind":"self_similar","alphabet":"a"})") == "alphabet");
  CHECK(config_error_field(R"({"kind":"self_similar","alphabet":"ab","group":{
      "elements":["e","g"],"mul":[["e","g"],["g","g"]],"action":{"e":"ab","g":"ba"},
      "restriction":{"e":["e","e"],"g":["g","g"]}}})")
        .starts_with("group"));
  // Z/2 cannot carry the odometer restriction.
  CHECK(config_error_field(R"({"kind":"self_similar","alphabet":"ab","group":{
      "elements":["e","g"],"mul":[["e","g"],["g","e"]],"action":{"e":"ab","g":"ba"},
      "restriction":{"e":["e","e"],"g":["e","g"]}}})")
        .starts_with("group"));
}

TEST_CASE("freely doubled classes form an empty graph") {
  auto h  = bundled("freely-doubled");
  auto g  = build_core_graph(*h, 100);
  CHECK(g.exhaustive);
  CHECK(formatted(*h, g.vertices) == std::vector<std::string>{"(0,p)", "(1,p)", "(0,q)", "(1,q)"});
  CHECK(g.edges.empty());
  CHECK(g.components.size() == 1);
}

TEST_CASE("algebraic dynamics validation") {
  CHECK(config_error_field(R"({"kind":"alg_dyn_zd","dim":1,
      "generators":[{"name":"u","matrix":[[1]]}]})")
            .find("generators[0]")
        == 0);
  CHECK(config_error_field(R"({"kind":"alg_dyn_zd","dim":2,
      "generators":[{"name":"a","matrix":[[2,0],[0,1]]},{"name":"b","matrix":[[1,1],[0,2]]}]})")
            .find("generators")
        == 0);
  CHECK(config_error_field(R"({"kind":"alg_dyn_zd","dim":1,
      "generators":[{"name":"a","matrix":[[2]]},{"name":"b","matrix":[[4]]}]})")
            .find("generators")
        == 0);
}

TEST_CASE("ledrappier classes") {
  auto h  = bundled("ledrappier");
  auto ce = h->enumerate_irreducible_classes(100);
  CHECK(ce.exhaustive);
  CHECK(formatted(*h, ce.classes)
        == std::vector<std::string>{"(0,sigma)", "(1,sigma)", "(0,id+sigma)", "(1,id+sigma)"});
  CHECK(config_error_field(R"({"kind":"alg_dyn_f2t","generators":[
      {"name":"a","poly":"t"},{"name":"b","poly":"t^2"}]})")
            .find("generators")
        == 0);
}

TEST_CASE("ledrappier index homomorphism") {
  auto        h = bundled("ledrappier");
  auto const& m = dynamic_cast<AlgDynF2tMonoid const&>(*h);
  auto        ce = m.enumerate_irreducible_classes(100);
  for (auto const& v : ce.classes) {
    CHECK(m.index_homomorphism(v) == 2);
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto x = m.random_element(rng, 4);
    auto y = m.random_element(rng, 4);
    CHECK(m.index_homomorphism(multiply(m, x, y)) == m.index_homomorphism(x) * m.index_homomorphism(y));
    CHECK((m.index_homomorphism(x) == 1) == is_core(m, x));
  }
  CHECK_FALSE(m.closed_form_scale(m.identity()).has_value());
}

TEST_CASE("polynomials over F2") {
  auto a = Poly2::parse("1+t");
  auto b = Poly2::parse("1+t+t^2");
  CHECK((a * a).to_string() == "1+t^2");
  CHECK(Poly2::gcd(a * b, a * a) == a);
  CHECK((a * b).mod(a).degree() == -1);
  auto inv = Poly2::inverse_mod(a, b);
  CHECK((a * inv).mod(b) == Poly2::parse("1"));
}

TEST_CASE("graph product normal forms") {
  auto h = bundled("raam-path");
  CHECK(h->parse("[a:(1,1)][b:(1,1)]") == h->parse("[b:(1,1)][a:(1,1)]"));
  CHECK(h->parse("[a:(1,1)][c:(1,1)][b:(1,1)]") == h->parse("[b:(1,1)][a:(1,1)][c:(1,1)]"));
  CHECK_FALSE(h->parse("[a:(1,1)][c:(1,1)]") == h->parse("[c:(1,1)][a:(1,1)]"));
  CHECK_FALSE(h->parse("[a:(1,1)][d:(1,1)]") == h->parse("[d:(1,1)][a:(1,1)]"));
  CHECK(h->format(h->identity()) == "1");
}

TEST_CASE("graph product lcm against box oracle") {
  for (auto name : {"graph-products-gone-mad", "raam-path", "raam-star", "raam-square"}) {
    auto h = bundled(name);
    Box  box(*h, 3);
    auto const& E = box.elements();
    for (std::size_t i = 0; i < E.size(); i += 3) {
      for (std::size_t j = 0; j < E.size(); j += 5) {
        auto d = lcm_box_discrepancy(*h, box, E[i], E[j]);
        INFO(name << ": " << d.value_or(""));
        CHECK_FALSE(d.has_value());
      }
    }
  }
}

TEST_CASE("config errors carry field paths") {
  CHECK(config_error_field(R"({"primes":[2]})") == "kind");
  CHECK(config_error_field(R"({"kind":"nope"})") == "kind");
  CHECK(config_error_field(R"({"kind":"axb","primes":[4]})").starts_with("primes"));
  CHECK(config_error_field(R"({"kind":"graph_product","vertices":[{"kind":"axb"},
      {"kind":"self_similar","alphabet":"ab","group":{"elements":["e"],"mul":[["x"]],
       "action":{"e":"ab"},"restriction":{"e":["e","e"]}}}]})")
            .starts_with("vertices[1].group"));
  CHECK(config_error_field(R"({"kind":"free_product","vertices":[{"kind":"axb"},{"kind":"axb"}],
      "edges":[[0,1]]})")
            .starts_with("edges"));
  CHECK(config_error_field(R"({"kind":"axb","run":{"cap":0}})").starts_with("run"));
  CHECK_THROWS_AS(read_family_config(config_path("does-not-exist")), ConfigError);
}

TEST_CASE("format and parse round trip") {
  for (auto const& p : prepared_pool()) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      auto x = p.m().random_element(rng, 3);
      INFO(p.fx.name << " " << p.m().format(x));
      CHECK(p.m().parse(p.m().format(x)) == x);
    }
  }
}

TEST_CASE("family laws") {
  for (auto const& r : run_laws("families", 1000, 12)) {
    INFO(r.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.cases >= 1000);
    CHECK(r.passed());
  }
}
