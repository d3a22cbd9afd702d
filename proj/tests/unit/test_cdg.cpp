#include "doctest.h"

#include "dgbec/fixtures.hpp"

#include <algorithm>

using namespace dgbec;

namespace {

const GradingDatum Zw = GradingDatum::integers(-6, 6);
const Field F7 = Field::prime(7);

bool has(const Report& r, const std::string& s) { return std::find(r.begin(), r.end(), s) != r.end(); }

Matrix col(const Field& f, std::vector<long long> v) { return Matrix::from_ints(f, v.size(), 1, v); }

bool closed_iso(const CdgModule& a, const CdgModule& b, const Matrix& f)
{
    return check_map({a.base, b.base, 0, f}).empty() && b.d * f == f * a.d && f.rows() == f.cols() &&
           rank(f) == f.rows();
}

}  // namespace

TEST_CASE("fixture rings satisfy the CDG axioms")
{
    for (auto& [name, r] : fixture_rings(F7)) {
        CAPTURE(name);
        CHECK(check_cdg_ring(*r).empty());
        CHECK(check_algebra(*r->alg).empty());
    }
    CHECK(check_cdg_ring(*dg_ring(ke_algebra(Zw, F7))).empty());
    CHECK(check_cdg_ring(*fixture_rings(Field::rationals())[1].ring).empty());
}

TEST_CASE("ring axiom violations are reported")
{
    auto a = ke_algebra(Zw, F7);
    Matrix d(F7, 2, 2);
    d.set(1, 1, 1);
    CHECK(has(check_cdg_ring(*make_ring(a, d, Matrix(F7, 2, 1))), "d not of degree 1"));

    // the dual numbers with central curvature 1 over Z/2
    auto dn = dual_numbers(GradingDatum::cyclic(1), F7);
    Matrix h(F7, 2, 1);
    h.set(0, 0, 1);
    CHECK(check_cdg_ring(*make_ring(dn, Matrix(F7, 2, 2), h)).empty());
    auto ke2 = ke_algebra(GradingDatum::cyclic(1), F7);
    // h must sit in even degree; e has odd degree
    Matrix he(F7, 2, 1);
    he.set(1, 0, 1);
    CHECK(has(check_cdg_ring(*make_ring(ke2, Matrix(F7, 2, 2), he)), "h not in degree 2"));
}

TEST_CASE("change of connection morphisms compose to the identity")
{
    auto z2 = GradingDatum::cyclic(1);
    Matrix d(F7, 2, 2);
    d.set(0, 1, 1);
    auto r = make_ring(ke_algebra(z2, F7), d, Matrix(F7, 2, 1));
    Matrix a = col(F7, {0, 3});
    auto s = transport(r, a);
    CHECK(check_cdg_ring(*s).empty());
    CdgRingMorphism f{r, s, Matrix::identity(F7, 2), a};
    CHECK(check_morphism(f).empty());
    auto back = transport(s, -a);
    CHECK(back->d == r->d);
    CHECK(back->h == r->h);
    CdgRingMorphism g{s, r, Matrix::identity(F7, 2), -a};
    CHECK(check_morphism(g).empty());
    auto gf = compose_morphisms(g, f);
    CHECK(gf.f.is_identity());
    CHECK(gf.a.is_zero());
    CdgRingMorphism wrong{r, s, Matrix::identity(F7, 2), col(F7, {0, 0})};
    // [a, -] vanishes on KE, so only the curvature axiom detects a wrong a
    CHECK(check_morphism(wrong) == Report{"f(h) != h + d(a) + a^2"});
}

TEST_CASE("Hom complexes")
{
    auto ke = ke_ring(Zw, F7);
    auto gk = g_plus(ke, simple_module(ke->alg)).object;
    CHECK(check_cdg_module(gk).empty());
    auto h = hom_complex_cdg(gk, gk);
    CHECK(h.d_squared_zero());
    CHECK(hom_differential(gk, gk, 0, Matrix::identity(F7, gk.dim())).is_zero());
    for (int n : h.degrees) CHECK(h.cohomology_dim(n) == 0);

    auto cp = curved_point(F7);
    auto gc = g_plus(cp, simple_module(cp->alg)).object;
    CHECK(check_cdg_module(gc).empty());
    CHECK(gc.d * gc.d == Matrix::identity(F7, 2));
    auto hc = hom_complex_cdg(gc, gc);
    CHECK(hc.d_squared_zero());
    for (int n : hc.degrees) CHECK(hc.cohomology_dim(n) == 0);
}

TEST_CASE("delta extension")
{
    auto t = delta_extension(trivial_ring(Zw, F7));
    CHECK(check_algebra(*t.ring).empty());
    Matrix delta = col(F7, {0, 1});
    CHECK(t.ring->product(delta, delta).is_zero());
    CHECK(t.partial * delta == col(F7, {1, 0}));

    auto e = delta_extension(ke_ring(Zw, F7));
    CHECK(check_algebra(*e.ring).empty());
    Matrix d4 = col(F7, {0, 0, 1, 0}), eps = col(F7, {0, 1, 0, 0});
    // delta e = 1 - e delta
    CHECK(e.ring->product(d4, eps) == col(F7, {1, 0, 0, -1}));
    CHECK(delta_product(e, d4, eps) == e.ring->product(d4, eps));

    auto c = delta_extension(curved_point(F7));
    CHECK(c.ring->product(col(F7, {0, 1}), col(F7, {0, 1})) == col(F7, {1, 0}));

    for (auto& [name, r] : fixture_rings(F7)) {
        CAPTURE(name);
        auto x = delta_extension(r);
        CHECK(check_algebra(*x.ring).empty());
        CHECK((x.partial * x.partial).is_zero());
        const std::size_t n = r->alg->dim();
        CHECK(rank(x.partial) == n);
        CHECK(x.partial.block(0, 0, 2 * n, n).is_zero());
        CHECK(pairing_rank(x).perfect());
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j)
                CHECK(delta_product(x, x.ring->basis_vector(i), x.ring->basis_vector(j)) ==
                      x.ring->product(x.ring->basis_vector(i), x.ring->basis_vector(j)));
    }
}

TEST_CASE("zero ring pairing is vacuously perfect")
{
    auto z = make_algebra(Zw, F7, {}, {});
    auto e = delta_extension(dg_ring(z));
    CHECK(pairing_rank(e).perfect());
    CHECK(pairing_rank(e).degrees.empty());
}

TEST_CASE("G plus and G minus")
{
    auto ke = ke_ring(Zw, F7);
    auto k = simple_module(ke->alg);
    auto g0 = g_plus(ke, zero_module(ke->alg));
    CHECK(g0.object.dim() == 0);

    auto gp = g_plus(ke, k);
    auto cover = free_cover(gp.object.base);
    CHECK(cover.generator_degrees == std::vector<int>{1});
    CHECK(rank(cover.epi) == 2);
    CHECK(cover.free.dim() == 2);

    for (auto& [name, r] : fixture_rings(F7)) {
        CAPTURE(name);
        auto m = regular_module(r->alg);
        for (auto& mm : {m, simple_module(r->alg)}) {
            if (name == "upper") continue;
            auto p = g_plus(r, mm);
            auto q = g_minus(r, mm);
            CHECK(check_cdg_module(p.object).empty());
            CHECK(check_cdg_module(q.object).empty());
            CHECK(ses_exact(p.sequence.incl, p.sequence.proj, p.sequence.sub.degrees, p.object.degrees(),
                            p.sequence.quotient.degrees));
            CHECK(ses_exact(q.sequence.incl, q.sequence.proj, q.sequence.sub.degrees, q.object.degrees(),
                            q.sequence.quotient.degrees));
            CHECK(check_map({p.sequence.sub, p.object.base, 0, p.sequence.incl}).empty());
            CHECK(check_map({p.object.base, p.sequence.quotient, 0, p.sequence.proj}).empty());
            CHECK(check_map({q.sequence.sub, q.object.base, 0, q.sequence.incl}).empty());
            CHECK(check_map({q.object.base, q.sequence.quotient, 0, q.sequence.proj}).empty());
            auto iso = g_minus_to_shifted_plus(r, mm);
            auto ps = cdg_shift(p.object, 1);
            CHECK(closed_iso(q.object, ps, iso));
            CHECK(iso * q.sequence.incl == p.sequence.incl);
            CHECK(p.sequence.proj * iso == q.sequence.proj);
        }
    }
}

TEST_CASE("G plus adjunction transport")
{
    auto ke = ke_ring(Zw, F7);
    auto k = simple_module(ke->alg);
    auto gk = g_plus(ke, k);
    Matrix f(F7, 2, 1);
    f.set(0, 0, 1);
    Matrix g = gplus_transport(k, gk.object, f);
    CHECK(closed_iso(gk.object, gk.object, g));
    CHECK(gplus_restrict(k, g) == f);

    auto zero = gplus_transport(k, gk.object, Matrix(F7, 2, 1));
    CHECK(zero.is_zero());

    // counit G+(N*) -> N
    auto n = g_plus(ke, regular_module(ke->alg)).object;
    auto counit = gplus_transport(n.base, n, Matrix::identity(F7, n.dim()));
    auto gn = g_plus(ke, n.base).object;
    CHECK(check_map({gn.base, n.base, 0, counit}).empty());
    CHECK(hom_differential(gn, n, 0, counit).is_zero());
    CHECK(rank(counit) == n.dim());
}

TEST_CASE("twists")
{
    auto ke = ke_ring(Zw, F7);
    auto m = g_plus(ke, regular_module(ke->alg)).object;
    CHECK(twist_cdg(m, Matrix(F7, m.dim(), m.dim())) == m);
    Matrix bad(F7, m.dim(), m.dim());
    bad.set(0, 0, 1);
    CHECK_THROWS_AS(twist_cdg(m, bad), NotMaurerCartan);
}

TEST_CASE("matrix factorizations")
{
    auto r = mf_ring(F7);
    auto free = free_module(r->alg, {0, 1});
    Matrix d(F7, 4, 4);
    d.set_block(2, 0, r->alg->left(1));
    d.set_block(0, 2, Matrix::identity(F7, 2));
    CdgModule m{r, free, d};
    CHECK(check_cdg_module(m).empty());
    CHECK(d * d == free.action(r->h));

    auto dp = matrix_factorization_ring(trivial_algebra(GradingDatum::cyclic(1), F7), Matrix(F7, 1, 1));
    CHECK(check_cdg_ring(*dp).empty());
    CHECK_THROWS_AS(matrix_factorization_ring(dual_numbers(Zw, F7), col(F7, {0, 1})), DegreeError);

    auto cp = curved_point(F7);
    CdgModule k{cp, simple_module(cp->alg), Matrix(F7, 1, 1)};
    CHECK(has(check_cdg_module(k), "d^2 != h"));
}

TEST_CASE("delta module round trip")
{
    for (auto& [name, r] : fixture_rings(F7)) {
        CAPTURE(name);
        auto e = delta_extension(r);
        auto m = g_plus(r, regular_module(r->alg)).object;
        auto n = to_delta_module(e, m);
        CHECK(check_module(n).empty());
        CHECK(from_delta_module(e, n) == m);
    }
}
