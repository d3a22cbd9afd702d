#include "doctest.h"

#include "dgbec/bec.hpp"
#include "dgbec/fixtures.hpp"
#include "dgbec/random.hpp"

using namespace dgbec;

namespace {

const Field F5 = Field::prime(5);

std::vector<std::pair<Instance, RingPtr>> all_rings()
{
    std::vector<std::pair<Instance, RingPtr>> r;
    for (auto& nr : fixture_rings(F5)) r.push_back({Instance::CdgMod, nr.ring});
    for (auto& nr : complex_rings(F5)) r.push_back({Instance::Complex, nr.ring});
    return r;
}

Matrix id(const DgObject& x) { return Matrix::identity(x.field(), x.dim()); }

BecObject random_bec(Instance inst, const RingPtr& ring, Rng& rng)
{
    if (rng.coin()) return phi(random_object(inst, ring, rng, 2)).object;
    GradedModule m = random_graded_module(ring->alg, rng, 1, 2);
    return inst == Instance::Complex ? upsilon_complexes(ring, m) : upsilon_cdg(ring, m);
}

// Transport of structure along a random homogeneous change of basis.
BecBecObject conjugate(const BecBecObject& w, Rng& rng, Matrix& p)
{
    p = random_graded_automorphism(w.base.field(), w.base.degrees(), rng);
    Matrix pi = *inverse(p);
    BecBecObject r = w;
    for (auto& a : r.base.module.base.act) a = p * a * pi;
    r.base.module.d = p * w.base.module.d * pi;
    r.sigma = p * w.sigma * pi;
    r.tau = p * w.tau * pi;
    return r;
}

}  // namespace

TEST_CASE("Phi(A) is a bec object with its structure maps")
{
    Rng rng(1);
    for (auto& [inst, ring] : all_rings()) {
        for (int k = 0; k < 3; ++k) {
            DgObject a = random_object(inst, ring, rng);
            PhiData p = phi(a);
            CHECK(check_bec(p.object).empty());
            const DgObject& e = p.object.base;
            CHECK(is_closed(a, e, 1, p.iota));
            CHECK(is_closed(e, a, 0, p.pi));
            CHECK(d_hom(a, e, 0, p.iota_p) == p.iota);
            CHECK(d_hom(e, a, -1, p.pi_p) == p.pi);
            CHECK((p.pi_p * p.iota).is_identity());
            CHECK((p.pi * p.iota_p).is_identity());
            CHECK((p.pi * p.iota).is_zero());
            CHECK((p.pi_p * p.iota_p).is_zero());
            CHECK((p.iota * p.pi_p + p.iota_p * p.pi).is_identity());
            CHECK(psi_plus(p.object) == e);
            CHECK(psi_minus(p.object) == shift(e, 1).object);
        }
    }
}

TEST_CASE("bec object validation")
{
    auto ring = ke_ring(fixture_window(), F5);
    DgObject a = cdg_object(g_plus(ring, regular_module(ring->alg)).object);
    BecObject x = phi(a).object;
    BecObject bad = x;
    bad.sigma = x.sigma.scaled(2);
    CHECK(check_bec(bad) == Report{"d(sigma) != id"});
    bad.sigma = Matrix(F5, x.base.dim(), x.base.dim());
    CHECK(check_bec(bad) == Report{"d(sigma) != id"});
    bad.sigma = id(x.base);
    CHECK(check_bec(bad) == Report{"sigma not a morphism of degree -1"});
}

TEST_CASE("bec Hom complexes")
{
    Rng rng(2);
    for (auto& [inst, ring] : all_rings()) {
        BecObject x = random_bec(inst, ring, rng), y = random_bec(inst, ring, rng);
        SpanComplex h = bec_hom(x, y);
        CHECK(h.d_squared_zero());
        for (int i : h.degrees) {
            int n = x.base.datum().reduce(-static_cast<long long>(i));
            CHECK(h.dim(i) == cocycles(x.base, y.base, n).size());
        }
        // Z0 of the bec Hom complex is the set of sigma-compatible closed maps
        for (const Matrix& f : h.cocycles(0)) CHECK(is_bec_morphism(x, y, f));
        CHECK(d_bec(x, x, 0, id(x.base)).is_zero());
    }
}

TEST_CASE("adjunctions around Phi")
{
    Rng rng(3);
    for (auto& [inst, ring] : all_rings()) {
        for (int k = 0; k < 2; ++k) {
            BecObject x = random_bec(inst, ring, rng);
            DgObject a = random_object(inst, ring, rng);
            PhiData p = phi(a);

            auto left = cocycles(x.base, a, 0);
            auto left_bec = bec_hom(x, p.object).cocycles(0);
            CHECK(left.size() == left_bec.size());
            for (const Matrix& f : left) {
                Matrix g = adj_left(x, a, f);
                CHECK(is_bec_morphism(x, p.object, g));
                CHECK(adj_left_inverse(a, g) == f);
            }
            for (const Matrix& g : left_bec) CHECK(adj_left(x, a, adj_left_inverse(a, g)) == g);

            auto right = cocycles(a, x.base, 1);
            auto right_bec = bec_hom(p.object, x).cocycles(0);
            CHECK(right.size() == right_bec.size());
            for (const Matrix& f : right) {
                Matrix g = adj_right(a, x, f);
                CHECK(is_bec_morphism(p.object, x, g));
                CHECK(adj_right_inverse(a, g) == f);
            }
            for (const Matrix& g : right_bec) CHECK(adj_right(a, x, adj_right_inverse(a, g)) == g);
        }
    }
}

TEST_CASE("Xi(A) is an extension of A by A[-1]")
{
    Rng rng(4);
    for (auto& [inst, ring] : all_rings()) {
        DgObject a = random_object(inst, ring, rng), b = random_object(inst, ring, rng);
        XiData x = xi(a);
        CHECK(z0_ses_check(x.sub, x.object, a, x.incl, x.proj));
        CHECK(psi_plus(phi(a).object) == x.object);
        CHECK(xi_nat_iso(a).is_identity());
        for (const Matrix& f : cocycles(a, b, 0)) {
            XiData y = xi(b);
            Matrix xf = xi_map(f);
            CHECK(is_closed(x.object, y.object, 0, xf));
            CHECK(xf * x.incl == y.incl * f);
            CHECK(y.proj * xf == f * x.proj);
        }
    }
}

TEST_CASE("becbec is fully faithful on Hom complexes")
{
    Rng rng(5);
    for (auto& [inst, ring] : all_rings()) {
        DgObject a = random_object(inst, ring, rng), b = random_object(inst, ring, rng);
        BecBecObject u = becbec(a), v = becbec(b);
        CHECK(check_becbec(u).empty());
        SpanComplex h = becbec_hom(u, v);
        HomComplex g = hom(a, b);
        CHECK(h.d_squared_zero());
        for (int i = -6; i <= 6; ++i) {
            CHECK(h.dim(i) == g.dim(i));
            const MatrixSpan* s = h.space(i);
            const HomSpace* gs = g.space(i);
            if (!gs) continue;
            REQUIRE(s);
            std::vector<Matrix> images;
            for (const Matrix& f : gs->basis) {
                Matrix m = becbec_map(a, b, i, f);
                CHECK(s->contains(m));
                CHECK(becbec_preimage(a, b, m) == f);
                images.push_back(m);
                Matrix df = d_hom(a, b, i, f);
                CHECK(d_becbec(u, v, i, m) == becbec_map(a, b, i + 1, df));
            }
            CHECK(span_of_matrices(F5, s->rows, s->cols, images).dim() == s->dim());
            for (const Matrix& m : s->basis) CHECK(becbec_map(a, b, i, becbec_preimage(a, b, m)) == m);
        }
        // composition
        DgObject c = random_object(inst, ring, rng);
        for (int i : {0, 1}) {
            Matrix f = random_hom(a, b, i, rng), k = random_hom(b, c, -1, rng);
            CHECK(becbec_map(a, c, i - 1, dg_compose(k, f)) ==
                  becbec_map(b, c, -1, k) * becbec_map(a, b, i, f));
        }
    }
}

TEST_CASE("becbec objects come from A up to isomorphism")
{
    Rng rng(6);
    for (auto& [inst, ring] : all_rings()) {
        DgObject a = random_object(inst, ring, rng);
        Matrix p;
        BecBecObject w = conjugate(becbec(a), rng, p);
        CHECK(check_becbec(w).empty());
        BecBecInverse inv = becbec_inverse(w);
        CHECK(check_object(inv.object).empty());
        BecBecObject e = becbec(inv.object);
        CHECK(is_closed_iso(e.base, w.base, inv.iso));
        CHECK(w.sigma * inv.iso == inv.iso * e.sigma);
        CHECK(w.tau * inv.iso == inv.iso * e.tau);
        CHECK(inv.object.dim() == a.dim());
        CHECK(h0_dim(inv.object, a) == h0_dim(a, a));

        // the split object X + X[1] of a bec object
        BecObject x = random_bec(inst, ring, rng);
        CompositionIso c = difficult_composition_iso(x);
        BecBecInverse is = becbec_inverse(c.s_obj);
        BecBecObject es = becbec(is.object);
        CHECK(is_closed_iso(es.base, c.s_obj.base, is.iso));
        CHECK(c.s_obj.sigma * is.iso == is.iso * es.sigma);
        CHECK(c.s_obj.tau * is.iso == is.iso * es.tau);
    }
    auto ring = ke_ring(fixture_window(), F5);
    BecBecObject bad = becbec(cdg_object(g_plus(ring, regular_module(ring->alg)).object));
    bad.tau = bad.tau.scaled(2);
    CHECK(!check_becbec(bad).empty());
    CHECK_THROWS_AS(becbec_inverse(bad), DgError);
}

TEST_CASE("Upsilon is fully faithful and essentially surjective")
{
    Rng rng(7);
    for (auto& [inst, ring] : all_rings()) {
        for (int k = 0; k < 2; ++k) {
            GradedModule m = random_graded_module(ring->alg, rng, 2, 2);
            GradedModule n = random_graded_module(ring->alg, rng, 2, 2);
            auto up = [&](const GradedModule& g) {
                return inst == Instance::Complex ? upsilon_complexes(ring, g) : upsilon_cdg(ring, g);
            };
            BecObject um = up(m), un = up(n);
            CHECK(check_bec(um).empty());
            CHECK(bec_hom(um, un).cocycles(0).size() == hom_graded(m, n, 0).dim());
            for (const Matrix& f : hom_graded(m, n, 0).basis) CHECK(is_bec_morphism(um, un, upsilon_map(f)));

            BecObject x = random_bec(inst, ring, rng);
            UpsilonRecovery r = upsilon_recover(x);
            BecObject ur = up(r.module);
            CHECK(is_closed_iso(ur.base, x.base, r.iso));
            CHECK(x.sigma * r.iso == r.iso * ur.sigma);
            CHECK((r.idempotent * r.idempotent) == r.idempotent);
        }
    }
}

TEST_CASE("bec objects over complexes are contractible")
{
    Rng rng(8);
    for (auto& nr : complex_rings(F5)) {
        for (int k = 0; k < 3; ++k) {
            BecObject x = random_bec(Instance::Complex, nr.ring, rng);
            const Matrix& d = x.base.module.d;
            CHECK(d_bec(x, x, -1, d).is_identity());
            SpanComplex h = bec_hom(x, x);
            const MatrixSpan* s = h.space(-1);
            CHECK((s ? s->contains(d) : d.is_zero()));
            for (int i : h.degrees) CHECK(h.cohomology_dim(i) == 0);
        }
    }
}

TEST_CASE("natural isomorphisms")
{
    Rng rng(9);
    for (auto& [inst, ring] : all_rings()) {
        std::vector<BecObject> objs;
        for (int k = 0; k < 3; ++k) objs.push_back(random_bec(inst, ring, rng));
        Report r = nat_iso_suite(objs);
        CHECK(r.empty());
        for (auto& line : r) MESSAGE(line);
    }
    BecObject x = phi(cdg_object(g_plus(curved_point(F5), simple_module(curved_point(F5)->alg)).object)).object;
    x.sigma = x.sigma.scaled(3);
    CHECK(!nat_iso_suite({x}).empty());
}

TEST_CASE("twists become isomorphisms after Phi")
{
    Rng rng(10);
    for (auto& [inst, ring] : all_rings()) {
        DgObject x = random_object(inst, ring, rng), y = random_object(inst, ring, rng);
        ConeData c = cone(x, y, random_closed(x, y, 0, rng));
        const DgObject& a = c.object;
        Matrix alpha = -c.cochain;
        DgObject b = twist(a, alpha);
        Matrix t = phi_tilde(a, b, id(a));
        PhiData pa = phi(a), pb = phi(b);
        CHECK(is_closed_iso(pa.object.base, pb.object.base, t));
        CHECK(pb.object.sigma * t == t * pa.object.sigma);
        CHECK(t == pb.iota_p * pa.pi + pb.iota * pa.pi_p + pb.iota_p * alpha * pa.pi_p);
    }
}

TEST_CASE("Phi reflects exactness")
{
    Rng rng(11);
    for (auto& [inst, ring] : all_rings()) {
        DgObject x = random_object(inst, ring, rng), y = random_object(inst, ring, rng);
        Matrix f = random_closed(x, y, 0, rng);
        CHECK(becbec_map(x, y, 0, f) == Matrix::direct_sum(f, f));
        auto k = z0_kernel(x, y, f);
        auto q = z0_cokernel(k.object, x, k.incl);
        auto phi_ses = [](const DgObject& a, const DgObject& b, const DgObject& c, const Matrix& u, const Matrix& v) {
            return z0_ses_check(phi(a).object.base, phi(b).object.base, phi(c).object.base, phi_tilde(a, b, u),
                                phi_tilde(b, c, v));
        };
        CHECK(z0_ses_check(k.object, x, q.object, k.incl, q.proj));
        CHECK(phi_ses(k.object, x, q.object, k.incl, q.proj));
        Matrix zero(F5, x.dim(), k.object.dim());
        CHECK(z0_ses_check(k.object, x, y, zero, f) == phi_ses(k.object, x, y, zero, f));
        CHECK(z0_ses_check(k.object, x, y, k.incl, f) == phi_ses(k.object, x, y, k.incl, f));
    }
}
