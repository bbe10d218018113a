#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gscale/error.hpp"
#include "gscale/families/axb.hpp"
#include "gscale/lcm_engine.hpp"
#include "laws.hpp"

using namespace gscale;
using namespace gscale::testing;

namespace {
  struct AxbSetup {
    AxbMonoid m{std::vector<std::int64_t>{2, 3, 5}};
    CoreGraph g = build_core_graph(m, 1000);

    IrreducibleWord word(std::vector<std::pair<int, int>> const& xs) const {
      std::vector<Element> letters;
      for (auto [k, p] : xs) {
        letters.push_back(m.pair(k, p));
      }
      return make_word(m, g, letters);
    }
  };
}  // namespace

TEST_CASE("square classification") {
  AxbSetup a;
  CHECK(classify_square(a.m, a.g, a.m.pair(0, 2), a.m.pair(1, 2)) == Process::A);
  CHECK(classify_square(a.m, a.g, a.m.pair(0, 2), a.m.pair(1, 3)) == Process::B);
  CHECK(classify_square(a.m, a.g, a.m.pair(3, 1), a.m.pair(0, 5)) == Process::D);
  CHECK(classify_square(a.m, a.g, a.m.pair(0, 5), a.m.pair(3, 1)) == Process::C);
  CHECK(classify_square(a.m, a.g, a.m.pair(3, 1), a.m.pair(1, 1)) == Process::E);
  CHECK(to_char(Process::E) == 'E');
}

TEST_CASE("grid with two B squares") {
  AxbSetup a;
  auto     d = word_lcm(a.m, a.g, a.word({{0, 2}, {0, 2}}), a.word({{1, 3}}));
  CHECK(d.outcome == GridOutcome::Complete);
  CHECK(d.process[0][0] == Process::B);
  CHECK(d.process[1][0] == Process::B);
  REQUIRE(d.lcm);
  CHECK(*d.lcm == a.m.pair(4, 12));
  CHECK(*d.t_cofactor == a.m.pair(1, 4));
  CHECK(multiply(a.m, a.m.pair(0, 4), *d.s_cofactor) == *d.lcm);
  CHECK(d.oracle_agrees);
}

TEST_CASE("grid stops at an orthogonal square") {
  AxbSetup a;
  auto     d = word_lcm(a.m, a.g, a.word({{0, 2}}), a.word({{1, 2}}));
  CHECK(d.outcome == GridOutcome::Orthogonal);
  REQUIRE(d.orthogonal_at);
  CHECK(*d.orthogonal_at == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK_FALSE(d.lcm);
  CHECK(d.oracle_agrees);
}

TEST_CASE("grid with equivalent letters") {
  AxbSetup a;
  auto     d = word_lcm(a.m, a.g, a.word({{0, 2}, {1, 3}}), a.word({{0, 2}, {0, 5}}));
  CHECK(d.outcome == GridOutcome::Complete);
  CHECK(d.process[0][0] == Process::A);
  CHECK(d.oracle_agrees);
  REQUIRE(d.lcm);
  CHECK(*d.lcm == right_lcm(a.m, a.m.pair(2, 6), a.m.pair(0, 10)).meet().lcm);
}

TEST_CASE("edge inside a component is reported") {
  auto h = bundled("graph-products-gone-mad");
  auto g = build_core_graph(*h, 1000);
  REQUIRE(g.edges.size() == 2);
  auto [i, j] = g.edges.front();
  auto s      = make_word(*h, g, {g.vertices[i]});
  auto t      = make_word(*h, g, {g.vertices[j]});
  CHECK_THROWS_WITH_AS(word_lcm(*h, g, s, t), doctest::Contains("edge inside component"),
                       PreconditionError);
}

TEST_CASE("permutations") {
  AxbSetup a;
  auto     w = a.word({{0, 2}, {0, 3}});
  auto     p = permute_word(a.m, a.g, w, {1, 0});
  CHECK(p.letters == a.word({{0, 3}, {0, 2}}).letters);
  CHECK(permute_word(a.m, a.g, w, {0, 1}).letters == w.letters);
  auto one = a.word({{2, 5}});
  CHECK(permute_word(a.m, a.g, one, {0}).letters == one.letters);
  auto three = a.word({{1, 2}, {2, 3}, {4, 5}});
  auto q     = permute_word(a.m, a.g, three, {2, 0, 1});
  CHECK(fold(a.m, q.letters).payload() == fold(a.m, three.letters).payload());
  CHECK(component_multiset(q) == component_multiset(three));
  CHECK(q.component_trace[0] == three.component_trace[2]);
  CHECK_THROWS_AS(permute_word(a.m, a.g, w, {0, 0}), PreconditionError);
}

TEST_CASE("grid output formats") {
  AxbSetup a;
  auto     d    = word_lcm(a.m, a.g, a.word({{0, 2}, {0, 2}}), a.word({{1, 3}}));
  auto     j    = to_json(d, a.m);
  CHECK(j.at("outcome") == "complete");
  CHECK(j.at("process") == nlohmann::json::array({"B", "B"}));
  auto text = render_grid(d, a.m);
  CHECK(text.find('B') != std::string::npos);
  CHECK(text == render_grid(word_lcm(a.m, a.g, a.word({{0, 2}, {0, 2}}), a.word({{1, 3}})), a.m));
}

TEST_CASE("lcm engine laws") {
  for (auto const& r : run_laws("lcm-engine", 1000, 14)) {
    INFO(r.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.cases >= 1000);
    CHECK(r.passed());
  }
}
