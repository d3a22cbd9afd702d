#include "doctest.h"

#include "dgbec/fixtures.hpp"
#include "dgbec/random.hpp"

using namespace dgbec;

namespace {

const Field F7 = Field::prime(7);

std::vector<std::pair<Instance, RingPtr>> all_rings()
{
    std::vector<std::pair<Instance, RingPtr>> r;
    for (auto& nr : fixture_rings(F7)) r.push_back({Instance::CdgMod, nr.ring});
    for (auto& nr : complex_rings(F7)) r.push_back({Instance::Complex, nr.ring});
    return r;
}

Matrix id(const DgObject& x) { return Matrix::identity(x.field(), x.dim()); }

}  // namespace

TEST_CASE("random objects are valid and Hom complexes are DG")
{
    Rng rng(7);
    for (auto& [inst, ring] : all_rings()) {
        for (int k = 0; k < 6; ++k) {
            DgObject x = random_object(inst, ring, rng), y = random_object(inst, ring, rng);
            DgObject z = random_object(inst, ring, rng);
            CHECK(check_object(x).empty());
            CHECK(max_component(x.degrees()) <= 3);
            HomComplex h = hom(x, y);
            CHECK(h.d_squared_zero());
            CHECK(d_hom(x, x, 0, id(x)).is_zero());
            // Leibniz for composition
            for (int n : {0, 1, -1}) {
                for (int m : {0, 1}) {
                    Matrix f = random_hom(x, y, n, rng), g = random_hom(y, z, m, rng);
                    Matrix lhs = d_hom(x, z, n + m, dg_compose(g, f));
                    Matrix rhs = d_hom(y, z, m, g) * f + (g * d_hom(x, y, n, f)).scaled(x.datum().parity_sign(m));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("shifts")
{
    Rng rng(3);
    auto ke = ke_ring(fixture_window(), F7);
    DgObject x = random_object(Instance::CdgMod, ke, rng);
    CHECK(shift(x, 0).object == x);
    CHECK(shift(shift(x, 1).object, -1).object == x);
    auto s = shift(x, 1);
    CHECK(is_closed(x, s.object, -1, s.to));
    CHECK(is_closed(s.object, x, 1, s.from));
    CHECK((s.from * s.to).is_identity());
    for (std::size_t i = 0; i < x.dim(); ++i) CHECK(s.object.degrees()[i] == x.degrees()[i] - 1);
}

TEST_CASE("cones")
{
    Rng rng(11);
    for (auto& [inst, ring] : all_rings()) {
        DgObject x = random_object(inst, ring, rng), y = random_object(inst, ring, rng);
        Matrix f = random_closed(x, y, 0, rng);
        ConeData c = cone(x, y, f);
        CHECK(check_object(c.object).empty());
        const DgObject& co = c.object;
        CHECK(mc_check(direct_sum(y, shift(x, 1).object), c.cochain));
        CHECK((c.cochain * c.cochain).is_zero());
        CHECK((c.pi_p * c.iota_p).is_zero());
        CHECK((c.pi * c.iota).is_zero());
        CHECK((c.pi_p * c.iota).is_identity());
        CHECK((c.pi * c.iota_p).is_identity());
        CHECK((c.iota * c.pi_p + c.iota_p * c.pi).is_identity());
        CHECK(is_closed(y, co, 0, c.iota));
        CHECK(is_closed(co, x, 1, c.pi));
        CHECK(d_hom(x, co, -1, c.iota_p) == c.iota * f);
        CHECK(d_hom(co, y, 0, c.pi_p) == -(f * c.pi));
        CHECK(ses_exact(c.iota, c.pi, y.degrees(), co.degrees(), shift(x, 1).object.degrees()));

        // cone(id) is contractible with sigma = iota' pi'
        ConeData ci = cone(x, x, id(x));
        Matrix sigma = ci.iota_p * ci.pi_p;
        CHECK(d_hom(ci.object, ci.object, -1, sigma).is_identity());
        CHECK((sigma * sigma).is_zero());
        CHECK(is_contractible(ci.object));

        // cone(0) is the direct sum
        ConeData c0 = cone(x, y, Matrix(F7, y.dim(), x.dim()));
        CHECK(c0.object == direct_sum(y, shift(x, 1).object));

        // Hom(Z, cone f) has the dimensions of the cone of Hom(Z, f)
        DgObject z = random_object(inst, ring, rng);
        HomComplex hc = hom(z, co), hy = hom(z, y), hx = hom(z, x);
        for (int n = -4; n <= 4; ++n) CHECK(hc.dim(n) == hy.dim(n) + hx.dim(n + 1));
    }
}

TEST_CASE("cone of an isomorphism of complexes is contractible")
{
    Rng rng(5);
    auto ring = complex_rings(F7)[1].ring;
    DgObject x = random_object(Instance::Complex, ring, rng);
    Matrix p = random_graded_automorphism(F7, x.degrees(), rng);
    // an isomorphic copy with transported structure
    DgObject y = x;
    Matrix pi = *inverse(p);
    for (auto& a : y.module.base.act) a = p * a * pi;
    y.module.d = p * x.module.d * pi;
    CHECK(is_closed_iso(x, y, p));
    CHECK(is_contractible(cone(x, y, p).object));
}

TEST_CASE("twists")
{
    Rng rng(13);
    auto ke = ke_ring(fixture_window(), F7);
    DgObject x = random_object(Instance::CdgMod, ke, rng);
    Matrix zero(F7, x.dim(), x.dim());
    CHECK(twist(x, zero) == x);
    CHECK(mc_check(x, zero));
    // twisting by the cone cochain and back
    DgObject y = random_object(Instance::CdgMod, ke, rng);
    Matrix f = random_closed(x, y, 0, rng);
    ConeData c = cone(x, y, f);
    CHECK(mc_check(c.object, -c.cochain));
    CHECK(twist(c.object, -c.cochain) == direct_sum(y, shift(x, 1).object));
    bool rejected = false;
    for (int k = 0; k < 50 && !rejected; ++k) {
        DgObject w = random_object(Instance::CdgMod, ke, rng);
        Matrix a = random_hom(w, w, 1, rng);
        if (!mc_check(w, a)) {
            CHECK_THROWS_AS(twist(w, a), NotMaurerCartan);
            rejected = true;
        }
    }
    CHECK(rejected);
}

TEST_CASE("totalizations")
{
    Rng rng(17);
    for (auto& [inst, ring] : all_rings()) {
        DgObject x = random_object(inst, ring, rng), y = random_object(inst, ring, rng);
        CHECK(tot({x}, {}).object == x);
        CHECK(is_contractible(tot({x, x}, {id(x)}).object));

        // two-term tot starting at -1 versus the cone
        Matrix f = random_closed(x, y, 0, rng);
        TotData t = tot({x, y}, {f}, -1);
        ConeData c = cone(x, y, f);
        const std::size_t nx = x.dim(), ny = y.dim();
        Matrix iso(F7, nx + ny, nx + ny);
        iso.set_block(0, nx, Matrix::identity(F7, ny));
        iso.set_block(ny, 0, -Matrix::identity(F7, nx));
        CHECK(is_closed_iso(t.object, c.object, iso));

        // composites must vanish
        Matrix g = random_closed(y, x, 0, rng);
        if (!(g * f).is_zero()) CHECK_THROWS_AS(tot({x, y, x}, {f, g}), DgError);
    }
}

TEST_CASE("null homotopies")
{
    auto ring = complex_rings(F7)[0].ring;
    auto k = simple_module(ring->alg);
    DgObject x = complex_from_terms(ring, 0, {k}, {});
    CHECK(!is_null_homotopic(x, x, 0, id(x)));
    CHECK(null_homotopy(x, x, 0, Matrix(F7, 1, 1))->is_zero());
    CHECK(h0_dim(x, x) == 1);
    DgObject c = complex_from_terms(ring, 0, {k, k}, {Matrix::identity(F7, 1)});
    auto t = contracting_homotopy(c);
    REQUIRE(t);
    CHECK(d_hom(c, c, -1, *t).is_identity());
    CHECK(h0_dim(c, c) == 0);
}

TEST_CASE("Z0 kernels and cokernels")
{
    Rng rng(19);
    for (auto& [inst, ring] : all_rings()) {
        DgObject x = random_object(inst, ring, rng), y = random_object(inst, ring, rng);
        CHECK(z0_kernel(x, x, id(x)).object.dim() == 0);
        Matrix f = random_closed(x, y, 0, rng);
        auto k = z0_kernel(x, y, f);
        auto q = z0_cokernel(x, y, f);
        CHECK(check_object(k.object).empty());
        CHECK(check_object(q.object).empty());
        CHECK((f * k.incl).is_zero());
        CHECK((q.proj * f).is_zero());
        CHECK(is_closed(k.object, x, 0, k.incl));
        CHECK(is_closed(y, q.object, 0, q.proj));
        CHECK(rank(k.incl) + rank(f) == x.dim());
        CHECK(rank(q.proj) + rank(f) == y.dim());
        CHECK(z0_cokernel(zero_object(inst, ring), y, Matrix(F7, y.dim(), 0)).proj.is_identity());
    }
    // 0 -> M -> G+(M) -> M[-1] -> 0 is exact as graded modules and G+(M) is a Z0 object
    auto ke = ke_ring(fixture_window(), F7);
    auto g = g_plus(ke, regular_module(ke->alg));
    CHECK(ses_exact(g.sequence.incl, g.sequence.proj, g.sequence.sub.degrees, g.object.degrees(),
                    g.sequence.quotient.degrees));
}
