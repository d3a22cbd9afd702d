#include "doctest.h"

#include "dgbec/grading.hpp"

using namespace dgbec;

TEST_CASE("koszul signs on the standard Z datum")
{
    auto z = GradingDatum::integers(-4, 4);
    CHECK(z.koszul_sign(1, 1) == -1);
    CHECK(z.koszul_sign(2, 3) == 1);
    for (int b = -4; b <= 4; ++b) CHECK(z.koszul_sign(0, b) == 1);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            CHECK(z.koszul_sign(a, b) == z.koszul_sign(b, a));
            for (int c = -3; c <= 3; ++c)
                CHECK(z.koszul_sign(a + b, c) == z.koszul_sign(a, c) * z.koszul_sign(b, c));
        }
}

TEST_CASE("cyclic data reduce and keep bilinearity")
{
    for (int p = 1; p <= 3; ++p) {
        auto d = GradingDatum::cyclic(p);
        CHECK(validate_datum(d).empty());
        CHECK(d.koszul_sign(1, 1) == -1);
        CHECK(d.reduce(-1) == 2 * p - 1);
        for (int a = 0; a < 2 * p; ++a)
            for (int b = 0; b < 2 * p; ++b)
                for (int c = 0; c < 2 * p; ++c)
                    CHECK(d.koszul_sign(d.add(a, b), c) == d.koszul_sign(a, c) * d.koszul_sign(b, c));
    }
}

TEST_CASE("validate_datum reports each violated invariant")
{
    CHECK(validate_datum(GradingDatum::integers(-2, 3)).empty());
    CHECK(validate_datum(GradingDatum::integers(1, 3)) == std::vector<std::string>{"window must contain 0"});

    auto bad = GradingDatum::cyclic(1, {{0, 0}, {0, 0}});
    auto r = validate_datum(bad);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == "sigma(1,1)!=1");

    auto asym = GradingDatum::cyclic(2, {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}});
    auto r2 = validate_datum(asym);
    CHECK(std::find(r2.begin(), r2.end(), "sigma not symmetric") != r2.end());
}

TEST_CASE("window overflow is an error")
{
    auto z = GradingDatum::integers(-2, 2);
    CHECK(z.normalize(2) == 2);
    CHECK_THROWS_AS(z.normalize(3), DegreeError);
    CHECK(z.reduce(7) == 7);
}
