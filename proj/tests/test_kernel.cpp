#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gscale/error.hpp"
#include "gscale/families/axb.hpp"
#include "gscale/kernel.hpp"
#include "laws.hpp"

using namespace gscale;
using namespace gscale::testing;

namespace {
  AxbMonoid const& axb() {
    static AxbMonoid const m(std::nullopt);
    return m;
  }
  Element P(char const* s) {
    return axb().parse(s);
  }
}  // namespace

TEST_CASE("axb multiplication") {
  CHECK(multiply(axb(), P("(2,3)"), P("(1,2)")) == P("(5,6)"));
  CHECK(multiply(axb(), P("(0,1)"), P("(5,7)")) == P("(5,7)"));
  std::vector<Element> w{P("(0,2)"), P("(0,2)"), P("(0,3)")};
  CHECK(fold(axb(), w) == P("(0,12)"));
  CHECK(fold(axb(), std::span<Element const>{}) == axb().identity());
}

TEST_CASE("free monoid concatenation") {
  auto h = inline_family(R"({"kind":"self_similar","alphabet":"ab"})");
  CHECK(h->format(multiply(*h, h->parse("a"), h->parse("b"))) == h->format(h->parse("ab")));
}

TEST_CASE("axb right lcm") {
  CHECK(right_lcm(axb(), P("(0,2)"), P("(1,2)")).is_orthogonal());
  auto o = right_lcm(axb(), P("(0,2)"), P("(1,3)"));
  REQUIRE(o.is_meet());
  CHECK(o.meet().lcm == P("(4,6)"));
  CHECK(o.meet().cofactor_left == P("(2,3)"));
  CHECK(o.meet().cofactor_right == P("(1,2)"));
  auto same = right_lcm(axb(), P("(3,5)"), P("(3,5)"));
  REQUIRE(same.is_meet());
  CHECK(same.meet().lcm == P("(3,5)"));
  CHECK(axb().is_unit(same.meet().cofactor_left));
  CHECK(axb().is_unit(same.meet().cofactor_right));
}

TEST_CASE("axb core, intersection and equivalence") {
  CHECK(is_core(axb(), P("(5,1)")));
  CHECK_FALSE(is_core(axb(), P("(0,2)")));
  CHECK(intersects(axb(), P("(0,2)"), P("(1,3)")));
  CHECK_FALSE(intersects(axb(), P("(0,2)"), P("(1,2)")));
  CHECK(intersects(axb(), P("(7,1)"), P("(4,9)")));
  CHECK(core_equivalent(axb(), P("(3,2)"), P("(1,2)")));
  CHECK_FALSE(core_equivalent(axb(), P("(0,2)"), P("(1,2)")));
  CHECK(core_equivalent(axb(), P("(6,35)"), P("(6,35)")));
  CHECK(left_divides(axb(), P("(1,2)"), P("(5,6)")));
  CHECK_FALSE(left_divides(axb(), P("(0,2)"), P("(5,6)")));
}

TEST_CASE("self-similar core is the group") {
  auto h = bundled("selfsimilar-binary");
  CHECK(is_core(*h, h->parse("(,g)")));
  CHECK(is_core(*h, h->parse("(,e)")));
  CHECK_FALSE(is_core(*h, h->parse("(a,e)")));
}

TEST_CASE("elements of another family are rejected") {
  auto h = bundled("selfsimilar-binary");
  CHECK_THROWS_AS(multiply(axb(), P("(1,2)"), h->parse("(a,e)")), FamilyMismatch);
  CHECK_THROWS_AS(right_lcm(*h, P("(1,2)"), h->parse("(a,e)")), FamilyMismatch);
}

TEST_CASE("kernel laws") {
  for (auto const& r : run_laws("monoid-kernel", 1000, 11)) {
    INFO(r.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.cases >= 1000);
    CHECK(r.passed());
  }
}
