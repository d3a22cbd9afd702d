#include "doctest.h"

#include "dgbec/demos.hpp"

using namespace dgbec;

TEST_CASE("every demo passes over F7 and F2")
{
    for (const Field& f : {Field::prime(7), Field::prime(2)})
        for (const auto& name : demo_names()) {
            DemoResult r = run_demo(name, f);
            CHECK(r.name == name);
            CHECK(r.pass);
            CHECK_FALSE(r.facts.empty());
        }
    CHECK_THROWS(run_demo("nope", Field::prime(7)));
}

TEST_CASE("find_differential recovers a differential when one exists")
{
    RingPtr ke = ke_ring(fixture_window(), Field::prime(7));
    GModule g = g_plus(ke, simple_module(ke->alg, 0));
    DifferentialSearch s = find_differential(ke, g.object.base);
    CHECK(s.leibniz_consistent);
    REQUIRE(s.differential);
    CHECK(check_cdg_module({ke, g.object.base, *s.differential}).empty());
}

TEST_CASE("find_differential fails on k over the curved point")
{
    RingPtr cp = curved_point(Field::prime(7));
    DifferentialSearch s = find_differential(cp, simple_module(cp->alg, 0));
    CHECK(s.exhaustive);
    CHECK_FALSE(s.differential);
}

TEST_CASE("small KEX modules are pairwise non-isomorphic by dimension data")
{
    RingPtr r = kex_ring(fixture_window(), Field::prime(7));
    auto mods = kex_small_modules(r->alg);
    CHECK_FALSE(mods.empty());
    for (auto& [name, m] : mods) {
        CHECK(check_module(m).empty());
        CHECK(m.dim() <= 2);
    }
}

TEST_CASE("simple_module rejects algebras whose unit is not a character")
{
    CHECK_THROWS(simple_module(upper_triangular(fixture_window(), Field::prime(7)), 0));
}
