#include "doctest.h"

#include "dgbec/fixtures.hpp"

#include <algorithm>
#include <random>

using namespace dgbec;

namespace {

const GradingDatum Zw = GradingDatum::integers(-6, 6);
const Field F7 = Field::prime(7);

bool has(const Report& r, const std::string& s) { return std::find(r.begin(), r.end(), s) != r.end(); }

// brute force Hom^n for total dimension <= 6 over F_2: enumerate all
// homogeneous matrices and count those satisfying the sign rule on all basis
// elements
std::size_t brute_hom_count(const GradedModule& l, const GradedModule& m, int n)
{
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < l.dim(); ++b)
            if (l.datum().reduce(l.degrees[b] + n) == m.degrees[a]) pos.push_back({a, b});
    std::size_t count = 0, dim = 0;
    for (std::uint64_t mask = 0; mask < (1ull << pos.size()); ++mask) {
        Matrix f(l.field(), m.dim(), l.dim());
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (mask >> k & 1) f.set(pos[k].first, pos[k].second, 1);
        if (check_map({l, m, n, f}).empty()) ++count;
    }
    while ((std::size_t{1} << dim) < count) ++dim;
    return dim;
}

}  // namespace

TEST_CASE("KE is a valid graded algebra")
{
    auto ke = ke_algebra(Zw, F7);
    CHECK(check_algebra(*ke).empty());
    CHECK(ke->generators() == std::vector<std::size_t>{1});
    CHECK(check_algebra(*kex_algebra(Zw, F7)).empty());
    CHECK(check_algebra(*dual_numbers(Zw, F7)).empty());
    CHECK(check_algebra(*upper_triangular(Zw, F7)).empty());
    auto r = regular_module(ke);
    CHECK(check_module(r).empty());
    CHECK(check_module(simple_module(ke)).empty());
}

TEST_CASE("check reports")
{
    auto ke = ke_algebra(Zw, F7);
    GradedModule bad = simple_module(ke);
    bad.act[0].set(0, 0, 2);
    CHECK(has(check_module(bad), "unitality violated"));

    // R -> R[1] of degree -1: the identity matrix obeys the sign rule, the
    // map with f(e x) = +e f(x) does not
    auto r = regular_module(ke);
    auto r1 = shift(r, 1);
    CHECK(check_map({r, r1, -1, Matrix::identity(F7, 2)}).empty());
    Matrix wrong = Matrix::from_rows(F7, {{1, 0}, {0, -1}});
    CHECK(has(check_map({r, r1, -1, wrong}), "sign rule violated"));
    CHECK(has(check_map({r, r1, 0, Matrix::identity(F7, 2)}), "degree violated"));
}

TEST_CASE("compose")
{
    auto ke = ke_algebra(Zw, F7);
    auto r = regular_module(ke);
    auto id = identity_map(r);
    auto h = hom_graded(r, r, -1);
    REQUIRE(h.dim() == 1);
    GradedMap f{r, r, -1, h.basis[0]};
    CHECK(compose(id, f).m == f.m);
    auto ff = compose(f, f);
    CHECK(ff.degree == -2);
    CHECK(check_map(ff).empty());
    // direct evaluation on basis
    for (std::size_t j = 0; j < 2; ++j) CHECK(ff.m.column(j) == f.m * (f.m.column(j)));
    auto s = shift(r, 1);
    GradedMap sh{r, s, -1, Matrix::identity(F7, 2)};
    GradedMap shinv{s, r, 1, Matrix::identity(F7, 2)};
    CHECK(check_map(sh).empty());
    CHECK(check_map(shinv).empty());
    CHECK(compose(shinv, sh).m.is_identity());
    CHECK(compose(shinv, sh).degree == 0);
}

TEST_CASE("hom_graded dimensions")
{
    auto ke = ke_algebra(Zw, F7);
    auto r = regular_module(ke);
    CHECK(hom_graded(r, r, 0).contains(Matrix::identity(F7, 2)));
    CHECK(hom_graded(r, r, -1).dim() == 1);
    auto triv = trivial_algebra(Zw, F7);
    auto k = simple_module(triv);
    for (int n = -3; n <= 3; ++n) CHECK(hom_graded(k, k, n).dim() == (n == 0 ? 1u : 0u));

    // brute force cross-check over F_2
    auto F2 = Field::prime(2);
    auto ke2 = ke_algebra(Zw, F2);
    auto kex2 = kex_algebra(Zw, F2);
    std::vector<GradedModule> mods = {regular_module(ke2), simple_module(ke2), simple_module(ke2, -1),
                                      direct_sum(simple_module(ke2), regular_module(ke2))};
    for (auto& l : mods)
        for (auto& m : mods) {
            if (l.dim() + m.dim() > 6) continue;
            for (int n = -2; n <= 2; ++n) CHECK(hom_graded(l, m, n).dim() == brute_hom_count(l, m, n));
        }
    auto rx = regular_module(kex2);
    for (int n = -1; n <= 1; ++n) CHECK(hom_graded(rx, simple_module(kex2), n).dim() == brute_hom_count(rx, simple_module(kex2), n));
}

TEST_CASE("kernel, cokernel, image")
{
    auto ke = ke_algebra(Zw, F7);
    auto r = regular_module(ke);
    CHECK(kernel(identity_map(r)).object.dim() == 0);
    GradedMap zero{zero_module(ke), r, 0, Matrix(F7, 2, 0)};
    auto ck = cokernel(zero);
    CHECK(ck.object.dim() == 2);
    CHECK(ck.proj.is_identity());
    // e * (-): R -> R of degree -1
    GradedMap eps{r, r, -1, ke->left(1)};
    REQUIRE(check_map(eps).empty());
    auto k = kernel(eps);
    CHECK(k.object.dim() == 1);
    CHECK(k.object.degrees == std::vector<int>{-1});
    CHECK(check_module(k.object).empty());
    auto im = image(eps);
    CHECK(im.object.dim() == 1);
    CHECK(im.incl * im.corestriction == eps.m);
}

TEST_CASE("pullback and pushout")
{
    auto ke = ke_algebra(Zw, F7);
    auto r = regular_module(ke);
    auto k = simple_module(ke);
    Matrix p(F7, 1, 2);
    p.set(0, 0, 1);
    GradedMap epi{r, k, 0, p};
    REQUIRE(check_map(epi).empty());
    auto pb = pullback(epi, epi);
    CHECK(pb.object.dim() == 3);
    CHECK(check_module(pb.object).empty());
    CHECK(epi.m * pb.to_a == epi.m * pb.to_b);
    auto diag = pullback(identity_map(r), identity_map(r));
    CHECK(diag.object.dim() == 2);
    CHECK(diag.to_a == diag.to_b);
    GradedMap z{zero_module(ke), k, 0, Matrix(F7, 1, 0)};
    CHECK(pullback(epi, z).object.dim() == kernel(epi).object.dim());
    GradedMap inc{k, r, 0, Matrix::from_rows(F7, {{0}, {0}})};
    auto po = pushout(identity_map(r), identity_map(r));
    CHECK(po.object.dim() == 2);
    CHECK(po.from_a * Matrix::identity(F7, 2) == po.from_b);
}

TEST_CASE("free covers and resolutions")
{
    auto ke = ke_algebra(Zw, F7);
    auto r = regular_module(ke);
    auto c = free_cover(r);
    CHECK(c.generator_degrees == std::vector<int>{0});
    CHECK(free_cover(zero_module(ke)).free.dim() == 0);
    auto k = simple_module(ke);
    auto ck = free_cover(k);
    CHECK(ck.generator_degrees == std::vector<int>{0});
    CHECK(ck.free.dim() == 2);
    CHECK(rank(ck.epi) == 1);

    auto res = proj_resolution(k, 2);
    CHECK(res.exact);
    REQUIRE(res.stages.size() == 3);
    CHECK(res.stages[1].generator_degrees == std::vector<int>{-1});
    CHECK(res.stages[2].generator_degrees == std::vector<int>{-2});
    CHECK(res.last_kernel.object.degrees == std::vector<int>{-3});

    auto rp = proj_resolution(r, 0);
    CHECK(rp.last_kernel.object.dim() == 0);
    CHECK(proj_resolution(zero_module(ke), 2).stages[2].free.dim() == 0);
}

TEST_CASE("ext oracle")
{
    auto ke = ke_algebra(Zw, F7);
    auto r = regular_module(ke);
    auto k = simple_module(ke);
    auto km1 = simple_module(ke, -1);
    CHECK(ext_dim(r, k, 0) == hom0_dim(r, k));
    CHECK(ext_dim(r, km1, 1) == 0);
    CHECK(ext_dim(r, r, 1) == 0);
    CHECK(ext_dim(k, km1, 1) == 1);
    CHECK(ext_dim(k, k, 1) == 0);
    CHECK(ext_dim_total(k, k, 1) == 1);
    CHECK(ext_dim(k, simple_module(ke, -2), 2) == 1);
    // independence of the generator order
    auto dn = dual_numbers(Zw, F7);
    auto m = direct_sum(regular_module(dn), simple_module(dn));
    for (std::uint64_t seed : {3u, 17u, 99u})
        for (std::size_t n = 0; n < 3; ++n) CHECK(ext_dim(m, simple_module(dn), n, seed) == ext_dim(m, simple_module(dn), n));
}
