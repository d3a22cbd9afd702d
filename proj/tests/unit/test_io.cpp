#include "doctest.h"

#include "dgbec/fixtures.hpp"
#include "dgbec/io.hpp"
#include "dgbec/random.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

using namespace dgbec;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& name) { return read_file(std::string(DGBEC_FIXTURE_DIR) + "/" + name); }

}  // namespace

TEST_CASE("empty document has no definitions")
{
    Document d = parse_document("");
    CHECK(d.blocks.empty());
    CHECK(print_document(d).empty());
    CHECK(elaborate(d).order.empty());
}

TEST_CASE("the KE fixture parses to the KE ring")
{
    Store s = load_store(fixture("ke.dgb"));
    RingPtr ke = ke_ring(fixture_window(), Field::prime(7));
    REQUIRE(s.datum);
    CHECK(*s.datum == fixture_window());
    CHECK(s.field == Field::prime(7));
    REQUIRE(s.algebras.count("KE"));
    CHECK(*s.algebras.at("KE") == *ke->alg);
    REQUIRE(s.rings.count("R"));
    CHECK(s.rings.at("R")->d == ke->d);
    CHECK(s.rings.at("R")->h == ke->h);
    CHECK(s.ring_over.at("R") == "KE");
}

TEST_CASE("every fixture round-trips through the printer")
{
    for (const char* name : {"ke.dgb", "upper.dgb", "dual.dgb", "curved.dgb", "mf.dgb"}) {
        const std::string text = fixture(name);
        Document d = parse_document(text);
        CHECK(print_document(d) == text);
        Store a = elaborate(d), b = load_store(print_document(d));
        CHECK(a.order == b.order);
        for (auto& [n, x] : a.objects) CHECK(x.object == b.objects.at(n).object);
        for (auto& [n, x] : a.becs) CHECK(x == b.becs.at(n));
    }
}

TEST_CASE("printed values reload unchanged")
{
    Rng rng(5);
    RingPtr r = ke_ring(fixture_window(), Field::prime(7));
    for (int it = 0; it < 10; ++it) {
        DgObject x = random_object(Instance::CdgMod, r, rng, 2);
        BecObject b = phi(x).object;
        Document d;
        d.blocks = {datum_block(r->datum(), r->field()), algebra_block("KE", *r->alg), ring_block("R", "KE", *r),
                    object_block("X", "R", x), bec_block("B", "R", b)};
        Store s = load_store(print_document(d));
        CHECK(s.objects.at("X").object == x);
        CHECK(s.becs.at("B") == b);
    }
}

TEST_CASE("malformed input reports its line")
{
    const std::string text = fixture("ke.dgb");
    std::istringstream in(text);
    std::string line, out;
    std::size_t n = 0, bad = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto first = line.find_first_not_of(' ');
        if (!bad && n > 20 && first != std::string::npos && std::isdigit(static_cast<unsigned char>(line[first]))) {
            bad = n;
            line[first] = 'z';
        }
        out += line + "\n";
    }
    REQUIRE(bad > 0);
    try {
        load_store(out);
        FAIL("no error");
    } catch (const InputError& e) {
        CHECK(e.line() == bad);
    }
}

TEST_CASE("structural errors are input errors")
{
    CHECK_THROWS_AS(load_store("begin algebra A\nend\n"), InputError);
    CHECK_THROWS_AS(load_store("begin datum\nfield 7\ngroup Z\nwindow 0 1\nend\nbegin datum\nend\n"), InputError);
    CHECK_THROWS_AS(parse_document("begin datum\nfield 7\n"), InputError);
    CHECK_THROWS_AS(load_store("begin datum\nfield 6\ngroup Z\nwindow 0 1\nend\n"), std::exception);
}

TEST_CASE("field and window options override the datum")
{
    ElaborateOptions opt;
    opt.window = std::make_pair(-8, 8);
    Store s = load_store(fixture("ke.dgb"), opt);
    CHECK(*s.datum == GradingDatum::integers(-8, 8));
    opt.window = std::make_pair(-1, 1);
    CHECK_THROWS_AS(load_store(fixture("ke.dgb"), opt), InputError);
    ElaborateOptions q;
    q.field = Field::prime(11);
    CHECK(load_store(fixture("dual.dgb"), q).field == Field::prime(11));
}
