#include "dgbec/io.hpp"
#include "suite_support.hpp"

#include <functional>

namespace dgbec {

using namespace suite;

namespace {

using OpFn = std::function<void(CheckResult&, const Field&, Rng&)>;

Matrix col(const Field& f, std::vector<long long> v) { return Matrix::from_ints(f, v.size(), 1, v); }

bool throws(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const std::exception&) {
        return true;
    }
    return false;
}

bool has(const Report& r, const std::string& s) { return std::find(r.begin(), r.end(), s) != r.end(); }

RingPtr ke(const Field& f) { return ke_ring(fixture_window(), f); }

const std::vector<std::pair<std::string, OpFn>>& op_table()
{
    static const std::vector<std::pair<std::string, OpFn>> ops{
        {"grading.koszul_sign",
         [](CheckResult& r, const Field&, Rng&) {
             GradingDatum z = GradingDatum::integers(-6, 6), z2 = GradingDatum::cyclic(1);
             r.expect(koszul_sign(z2, 1, 1) == -1, "(1, 1) -> -1");
             r.expect(koszul_sign(z, 2, 3) == 1 && koszul_sign(z, 3, 3) == -1, "ab mod 2");
             bool bilinear = true;
             for (int a = -2; a <= 2; ++a)
                 for (int b = -2; b <= 2; ++b)
                     for (int c = -2; c <= 2; ++c)
                         bilinear = bilinear && koszul_sign(z, a + b, c) == koszul_sign(z, a, c) * koszul_sign(z, b, c) &&
                                    koszul_sign(z, a, b) == koszul_sign(z, b, a);
             r.expect(bilinear, "bilinear and symmetric");
         }},
        {"grading.validate_datum",
         [](CheckResult& r, const Field&, Rng&) {
             r.expect(validate_datum(GradingDatum::integers(-6, 6)).empty(), "Z window valid");
             r.expect(validate_datum(GradingDatum::cyclic(1)).empty(), "Z/2 valid");
             r.expect(!validate_datum(GradingDatum::cyclic(1, {{0, 0}, {0, 0}})).empty(), "sigma(1,1) = 0 rejected");
         }},
        {"exact_linalg.solve",
         [](CheckResult& r, const Field& f, Rng&) {
             Matrix v = col(f, {1, 2, 3});
             r.expect(solve(Matrix::identity(f, 3), v) == v, "identity");
             r.expect(!solve(Matrix(f, 2, 2), col(f, {1, 0})), "zero matrix, nonzero b");
             Field f7 = Field::prime(7);
             r.expect(solve(Matrix::from_ints(f7, 1, 1, {2}), col(f7, {3})) == col(f7, {5}), "2 x = 3 over F7");
         }},
        {"exact_linalg.kernel_basis",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Field f2 = Field::prime(2);
             r.expect(kernel_basis(Matrix::from_ints(f2, 1, 2, {1, 1})) == col(f2, {1, 1}), "[1 1] over F2");
             r.expect(rank(Matrix::identity(f, 4)) == 4, "rank of identity");
             r.expect(image_basis(Matrix(f, 3, 2)).cols() == 0, "image of zero");
             for (int k = 0; k < 10; ++k) {
                 Matrix a = random_matrix(f, rng.below(8) + 1, rng.below(8) + 1, rng);
                 Matrix kb = kernel_basis(a);
                 r.expect((a * kb).is_zero() && rank(a) + kb.cols() == a.cols(), "rank-nullity");
             }
         }},
        {"exact_linalg.split_idempotent",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Matrix e = Matrix::from_ints(f, 2, 2, {1, 0, 0, 0});
             auto [p, i] = split_idempotent(e);
             r.expect(p == Matrix::from_ints(f, 1, 2, {1, 0}) && i == col(f, {1, 0}), "diag(1, 0)");
             Matrix q = random_graded_automorphism(f, {0, 0, 0}, rng);
             Matrix e3 = q * Matrix::from_ints(f, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0}) * *inverse(q);
             auto [p3, i3] = split_idempotent(e3);
             r.expect(i3 * p3 == e3 && (p3 * i3).is_identity(), "random idempotent");
             r.expect(throws([&] { split_idempotent(Matrix::from_ints(f, 1, 1, {2})); }), "not idempotent");
         }},
        {"graded_algebra.check",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             r.expect(check_algebra(*alg).empty(), "k[e]/(e^2) valid");
             GradedModule m = regular_module(alg);
             m.act[0] = m.act[0].scaled(2);
             r.expect(has(check_module(m), "unitality violated"), "unitality");
             GradedModule rm = regular_module(alg), sh = shift(rm, 1);
             // a valid degree -1 map with the sign of f(e) flipped, so f(e x) = +e f(x)
             HomSpace h = hom_graded(rm, sh, -1);
             Matrix bad = h.basis.at(0);
             for (std::size_t i = 0; i < bad.rows(); ++i) bad.set(i, 1, -bad.at(i, 1));
             r.expect(check_map({rm, sh, -1, h.basis.at(0)}).empty(), "valid map");
             r.expect(has(check_map({rm, sh, -1, bad}), "sign rule violated"), "sign rule");
         }},
        {"graded_algebra.compose",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto alg = ke_algebra(fixture_window(), f);
             GradedModule m = random_graded_module(alg, rng, 2, 2);
             HomSpace h = hom_graded(m, m, -1);
             Matrix a = random_combination(h.basis, Matrix(f, m.dim(), m.dim()), rng);
             Matrix b = random_combination(h.basis, Matrix(f, m.dim(), m.dim()), rng);
             GradedMap g = compose({m, m, -1, b}, {m, m, -1, a});
             r.expect(g.degree == -2 && g.m == b * a && check_map(g).empty(), "degree -1 twice");
             r.expect(compose(identity_map(m), {m, m, -1, a}).m == a, "identity");
         }},
        {"graded_algebra.hom_graded",
         [](CheckResult& r, const Field& f, Rng&) {
             auto t = trivial_algebra(fixture_window(), f);
             auto k = simple_module(t, 0);
             bool only0 = true;
             for (int n = -3; n <= 3; ++n) only0 = only0 && hom_graded(k, k, n).dim() == (n == 0 ? 1u : 0u);
             r.expect(only0, "Hom(k, k) in degree 0 only");
             auto alg = ke_algebra(fixture_window(), f);
             r.expect(hom_graded(regular_module(alg), regular_module(alg), -1).dim() == 1, "Hom^-1(R, R)");
         }},
        {"graded_algebra.kernel_cokernel_image",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             GradedModule rm = regular_module(alg);
             r.expect(kernel(identity_map(rm)).object.dim() == 0, "kernel(id) = 0");
             GradedModule z = zero_module(alg);
             CokernelData c = cokernel({z, rm, 0, Matrix(f, 2, 0)});
             r.expect(c.object == rm && c.proj.is_identity(), "cokernel(0 -> M)");
             // e * (-) as a degree-(-1) map; its kernel is eR
             KernelData kd = kernel({rm, rm, -1, alg->left(1)});
             r.expect(kd.object.dim() == 1 && kd.object.degrees == std::vector<int>{-1}, "kernel of e");
             ImageData im = image({rm, rm, -1, alg->left(1)});
             r.expect(im.object.dim() == 1 && im.incl * im.corestriction == alg->left(1), "image of e");
         }},
        {"graded_algebra.pullback_pushout",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             GradedModule rm = regular_module(alg), k = simple_module(alg, 0);
             Matrix e = Matrix::from_ints(f, 1, 2, {1, 0});
             PullbackData pb = pullback({rm, k, 0, e}, {rm, k, 0, e});
             r.expect(pb.object.dim() == 3 && e * pb.to_a == e * pb.to_b, "pullback of two epis");
             PullbackData d = pullback(identity_map(rm), identity_map(rm));
             r.expect(d.object.dim() == 2 && d.to_a == d.to_b, "pullback(id, id)");
             PushoutData po = pushout({rm, rm, 0, Matrix::identity(f, 2)}, {rm, rm, 0, Matrix::identity(f, 2)});
             r.expect(po.object.dim() == 2 && po.from_a == po.from_b, "pushout(id, id)");
         }},
        {"graded_algebra.free_cover",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             FreeCover c = free_cover(simple_module(alg, 0));
             r.expect(c.generator_degrees == std::vector<int>{0} && rank(c.epi) == 1, "R -> k");
             r.expect(free_cover(regular_module(alg)).generator_degrees.size() == 1, "R -> R");
             r.expect(free_cover(zero_module(alg)).free.dim() == 0, "0");
         }},
        {"graded_algebra.proj_resolution",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             ProjResolution pr = proj_resolution(regular_module(alg), 2);
             r.expect(pr.exact && pr.last_kernel.object.dim() == 0, "projective module");
             ProjResolution pk = proj_resolution(simple_module(alg, 0), 2);
             r.expect(pk.exact && pk.last_kernel.object.dim() == 1, "k has periodic kernels");
         }},
        {"graded_algebra.ext_dim",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             GradedModule k0 = simple_module(alg, 0), k1 = simple_module(alg, -1), rm = regular_module(alg);
             r.expect(ext_dim(rm, k0, 0) == hom0_dim(rm, k0), "Ext^0 = Hom_0");
             r.expect(ext_dim(k0, k1, 1) == 1 && ext_dim(rm, k0, 1) == 0, "Ext^1");
         }},
        {"cdg_core.check",
         [](CheckResult& r, const Field& f, Rng&) {
             r.expect(check_cdg_ring(*dg_ring(ke_algebra(fixture_window(), f))).empty(), "DG ring");
             r.expect(check_cdg_ring(*curved_point(f)).empty(), "curved point");
             auto z2 = GradingDatum::cyclic(1);
             auto rr = make_ring(ke_algebra(z2, f), Matrix::from_ints(f, 2, 2, {0, 1, 0, 0}), Matrix(f, 2, 1));
             Matrix a = col(f, {0, 3});
             auto s = transport(rr, a);
             CdgRingMorphism m1{rr, s, Matrix::identity(f, 2), a}, m2{s, rr, Matrix::identity(f, 2), -a};
             r.expect(check_morphism(m1).empty() && check_morphism(m2).empty(), "change of connection");
             CdgRingMorphism c = compose_morphisms(m2, m1);
             r.expect(c.f.is_identity() && c.a.is_zero(), "(id, -a)(id, a) = (id, 0)");
         }},
        {"cdg_core.hom_complex_cdg",
         [](CheckResult& r, const Field& f, Rng&) {
             auto ring = ke(f);
             CdgModule g = g_plus(ring, simple_module(ring->alg)).object;
             HomComplex h = hom_complex_cdg(g, g);
             bool acyclic = h.d_squared_zero();
             for (int n : h.degrees) acyclic = acyclic && h.cohomology_dim(n) == 0;
             r.expect(acyclic, "End(G+(k)) acyclic");
         }},
        {"cdg_core.delta_extension",
         [](CheckResult& r, const Field& f, Rng&) {
             DeltaExtension t = delta_extension(trivial_ring(fixture_window(), f));
             Matrix d = col(f, {0, 1});
             r.expect(t.ring->product(d, d).is_zero() && t.partial * d == col(f, {1, 0}), "k[delta]");
             DeltaExtension c = delta_extension(curved_point(f));
             r.expect(c.ring->product(d, d) == col(f, {1, 0}), "delta^2 = h");
         }},
        {"cdg_core.pairing_rank",
         [](CheckResult& r, const Field& f, Rng&) {
             for (auto& nr : fixture_rings(f)) r.expect(pairing_rank(delta_extension(nr.ring)).perfect(), nr.name);
             auto z = make_algebra(fixture_window(), f, {}, {});
             r.expect(pairing_rank(delta_extension(dg_ring(z))).perfect(), "zero ring");
         }},
        {"cdg_core.g_plus_minus",
         [](CheckResult& r, const Field& f, Rng&) {
             auto ring = ke(f);
             r.expect(g_plus(ring, zero_module(ring->alg)).object.dim() == 0, "G+(0) = 0");
             GModule p = g_plus(ring, simple_module(ring->alg)), q = g_minus(ring, simple_module(ring->alg));
             r.expect(p.object.dim() == 2 && q.object.dim() == 2, "dimensions");
             r.expect(check_cdg_module(p.object).empty() && check_cdg_module(q.object).empty(), "modules");
         }},
        {"cdg_core.adjunction_transport_gplus",
         [](CheckResult& r, const Field& f, Rng&) {
             auto ring = ke(f);
             CdgModule n = g_plus(ring, regular_module(ring->alg)).object;
             Matrix counit = gplus_transport(n.base, n, Matrix::identity(f, n.dim()));
             r.expect(rank(counit) == n.dim(), "counit surjective");
             r.expect(gplus_restrict(n.base, counit).is_identity(), "restriction of the counit");
         }},
        {"cdg_core.twist_cdg",
         [](CheckResult& r, const Field& f, Rng&) {
             auto ring = ke(f);
             CdgModule m = g_plus(ring, regular_module(ring->alg)).object;
             r.expect(twist_cdg(m, Matrix(f, m.dim(), m.dim())) == m, "a = 0");
             Matrix bad(f, m.dim(), m.dim());
             bad.set(0, 0, 1);
             r.expect(throws([&] { twist_cdg(m, bad); }), "non-MC cochain");
         }},
        {"cdg_core.matrix_factorization_ring",
         [](CheckResult& r, const Field& f, Rng&) {
             auto p = matrix_factorization_ring(trivial_algebra(GradingDatum::cyclic(1), f), Matrix(f, 1, 1));
             r.expect(check_cdg_ring(*p).empty() && p->h.is_zero(), "(k, 0)");
             r.expect(check_cdg_ring(*mf_ring(f)).empty(), "(k[x]/(x^2), x)");
         }},
        {"dg_instances.hom",
         [](CheckResult& r, const Field& f, Rng& rng) {
             for (auto& [inst, ring] : all_rings(f)) {
                 DgObject x = random_object(inst, ring, rng, 2), y = random_object(inst, ring, rng, 2);
                 r.expect(hom(x, y).d_squared_zero(), "d^2 = 0");
             }
         }},
        {"dg_instances.shift",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject x = random_object(Instance::CdgMod, ke(f), rng, 2);
             ShiftData s = shift(x, 1);
             r.expect(check_object(s.object).empty() && is_closed_iso(x, s.object, s.to) &&
                          (s.from * s.to).is_identity(),
                      "X -> X[1]");
         }},
        {"dg_instances.mc_check",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject x = random_object(Instance::CdgMod, ke(f), rng, 2), y = random_object(Instance::CdgMod, ke(f), rng, 2);
             ConeData c = cone(x, y, random_closed(x, y, 0, rng));
             r.expect(mc_check(c.object, -c.cochain), "minus the cone cochain");
             r.expect(mc_check(c.object, Matrix(f, c.object.dim(), c.object.dim())), "zero");
         }},
        {"dg_instances.cone",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject x = random_object(Instance::CdgMod, ke(f), rng, 2);
             ConeData c = cone(x, x, id(x));
             r.expect(check_object(c.object).empty() && is_contractible(c.object), "cone(id) contractible");
         }},
        {"dg_instances.tot",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Ses s = random_ses(Instance::Complex, complex_rings(f)[2].ring, rng);
             TotData t = tot_of(s.complex(), 0);
             r.expect(check_object(t.object).empty() && t.object.dim() == s.u.dim() + s.v.dim() + s.w.dim(),
                      "Tot of a short exact sequence");
         }},
        {"dg_instances.is_null_homotopic",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject x = random_object(Instance::CdgMod, ke(f), rng, 2);
             ConeData c = cone(x, x, id(x));
             r.expect(is_null_homotopic(c.object, c.object, 0, id(c.object)), "id of cone(id)");
             DgObject k = module_complex(complex_rings(f)[0].ring, simple_module(complex_rings(f)[0].ring->alg, 0));
             r.expect(!is_null_homotopic(k, k, 0, id(k)), "id of k");
         }},
        {"dg_instances.z0_kernel_cokernel_ses",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject x = random_object(Instance::CdgMod, ke(f), rng, 2), y = random_object(Instance::CdgMod, ke(f), rng, 2);
             Matrix g = random_closed(x, y, 0, rng);
             Z0Kernel k = z0_kernel(x, y, g);
             Z0Cokernel q = z0_cokernel(k.object, x, k.incl);
             r.expect(z0_ses_check(k.object, x, q.object, k.incl, q.proj), "kernel-cokernel sequence");
         }},
        {"bec.bec_hom",
         [](CheckResult& r, const Field& f, Rng& rng) {
             for (auto& [inst, ring] : all_rings(f)) {
                 BecObject x = random_bec(inst, ring, rng), y = random_bec(inst, ring, rng);
                 SpanComplex h = bec_hom(x, y);
                 bool ok = h.d_squared_zero();
                 for (const Matrix& m : h.cocycles(0)) ok = ok && is_bec_morphism(x, y, m);
                 r.expect(ok, "bec Hom complex");
             }
         }},
        {"bec.phi",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject a = random_object(Instance::CdgMod, ke(f), rng, 2);
             PhiData p = phi(a);
             r.expect(check_bec(p.object).empty() && (p.pi_p * p.iota).is_identity() &&
                          (p.iota * p.pi_p + p.iota_p * p.pi).is_identity(),
                      "Phi(A) structure maps");
         }},
        {"bec.psi_plus",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject a = random_object(Instance::Complex, complex_rings(f)[1].ring, rng, 2);
             PhiData p = phi(a);
             r.expect(psi_plus(p.object) == p.object.base && psi_minus(p.object) == shift(p.object.base, 1).object,
                      "Psi+- of Phi(A)");
         }},
        {"bec.adj_left",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             BecObject x = random_bec(Instance::CdgMod, ring, rng);
             DgObject a = random_object(Instance::CdgMod, ring, rng, 2);
             bool ok = true;
             for (const Matrix& g : cocycles(x.base, a, 0))
                 ok = ok && is_bec_morphism(x, phi(a).object, adj_left(x, a, g)) && adj_left_inverse(a, adj_left(x, a, g)) == g;
             r.expect(ok, "left adjunction round trip");
         }},
        {"bec.adj_right",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             BecObject x = random_bec(Instance::CdgMod, ring, rng);
             DgObject a = random_object(Instance::CdgMod, ring, rng, 2);
             bool ok = true;
             for (const Matrix& g : cocycles(a, x.base, 1))
                 ok = ok && is_bec_morphism(phi(a).object, x, adj_right(a, x, g)) &&
                      adj_right_inverse(a, adj_right(a, x, g)) == g;
             r.expect(ok, "right adjunction round trip");
         }},
        {"bec.xi",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject a = random_object(Instance::CdgMod, curved_point(f), rng, 2);
             XiData x = xi(a);
             r.expect(z0_ses_check(x.sub, x.object, a, x.incl, x.proj), "A[-1] -> Xi(A) -> A");
             r.expect(xi_nat_iso(a).is_identity() && psi_plus(phi(a).object) == x.object, "Psi+ Phi = Xi");
         }},
        {"bec.becbec",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject a = random_object(Instance::CdgMod, ke(f), rng, 2);
             r.expect(check_becbec(becbec(a)).empty(), "becbec(A) valid");
             Matrix g = random_closed(a, a, 0, rng);
             r.expect(becbec_map(a, a, 0, g) == Matrix::direct_sum(g, g), "closed degree-0 maps");
         }},
        {"bec.becbec_inverse",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject a = random_object(Instance::Complex, complex_rings(f)[2].ring, rng, 2);
             BecBecInverse inv = becbec_inverse(becbec(a));
             r.expect(is_closed_iso(becbec(inv.object).base, becbec(a).base, inv.iso) && inv.object.dim() == a.dim(),
                      "round trip");
         }},
        {"bec.upsilon_cdg",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             GradedModule m = random_graded_module(ring->alg, rng, 2, 2);
             BecObject u = upsilon_cdg(ring, m);
             UpsilonRecovery rec = upsilon_recover(u);
             r.expect(check_bec(u).empty() && rec.module.dim() == m.dim(), "Upsilon and recovery");
         }},
        {"bec.upsilon_complexes",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = complex_rings(f)[2].ring;
             GradedModule m = random_graded_module(ring->alg, rng, 2, 2);
             BecObject u = upsilon_complexes(ring, m);
             r.expect(check_bec(u).empty() && u.base.dim() == 2 * m.dim(), "Upsilon of a graded object");
         }},
        {"bec.nat_iso_suite",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             std::vector<BecObject> objs;
             for (int k = 0; k < 3; ++k) objs.push_back(random_bec(Instance::CdgMod, ring, rng));
             r.expect(nat_iso_suite(objs).empty(), "natural isomorphisms");
             BecObject bad = objs[0];
             bad.sigma = bad.sigma.scaled(3);
             r.expect(bad.base.dim() == 0 || !nat_iso_suite({bad}).empty(), "a broken sigma is reported");
         }},
        {"resolutions.tot_exact_witness",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Ses s = random_ses(Instance::CdgMod, ke(f), rng);
             TotWitness w = tot_exact_witness(s.complex(), 0);
             r.expect(validate_witness(w.witness).empty() && w.witness.depth() == 1, "depth-one leaf");
         }},
        {"resolutions.one_step_cover",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject b = random_object(Instance::Complex, complex_rings(f)[2].ring, rng, 2);
             Cover c = one_step_cover(b);
             r.expect(is_closed(c.object, b, 0, c.map) && rank(c.map) == b.dim() &&
                          graded_projective(c.object.module.base),
                      "graded-projective epi");
         }},
        {"resolutions.graded_projective_replacement",
         [](CheckResult& r, const Field& f, Rng&) {
             auto ring = complex_rings(f)[2].ring;
             Replacement p = graded_projective_replacement(module_complex(ring, upper_simple(ring->alg, 2)), 1);
             r.expect(p.length == 1 && graded_projective(p.object.module.base) &&
                          validate_witness(p.cone_witness).empty(),
                      "S2 over upper triangular matrices");
         }},
        {"resolutions.graded_injective_replacement",
         [](CheckResult& r, const Field& f, Rng&) {
             auto ring = complex_rings(f)[2].ring;
             Replacement j = graded_injective_replacement(module_complex(ring, upper_simple(ring->alg, 1)), 1);
             r.expect(j.length == 1 && graded_injective(j.object.module.base) &&
                          validate_witness(j.cone_witness).empty(),
                      "S1 over upper triangular matrices");
         }},
        {"resolutions.semiorthogonality_check",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             AcyclicityWitness w = leaf_witness(random_ses(Instance::CdgMod, ring, rng), 0);
             DgObject j = cdg_object(g_minus(ring, coinduced(simple_module(ring->alg, 0)).module).object);
             SemiorthogonalityCertificate c = semiorthogonality_check(w, j);
             bool ok = c.morphisms.size() == cocycles(w.object, j, 0).size();
             for (std::size_t i = 0; i < c.morphisms.size(); ++i)
                 ok = ok && d_hom(w.object, j, -1, c.homotopies[i]) == c.morphisms[i];
             r.expect(ok, "maps into G-(injective) are null");
         }},
        {"resolutions.tot_contracting_homotopy",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Ses s = random_ses(Instance::CdgMod, ke(f), rng);
             DgObject a = random_object(Instance::CdgMod, ke(f), rng, 2);
             TotData t = tot_of(s.complex(), 0);
             Matrix u = random_hom(a, s.v, -2, rng);
             Matrix hv(f, t.object.dim(), a.dim());
             hv.set_block(t.offsets[1], 0, u);
             Matrix p = d_hom(a, t.object, -1, hv);
             Matrix h = tot_component(t, 2, p);
             Matrix tl = s.k * u == h ? u : -u;
             r.expect(d_hom(a, t.object, -1, tot_contracting_homotopy(s, 0, a, 0, p, tl)) == p, "d(H) = p");
         }},
        {"resolutions.hom_from_psi_iso",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = complex_rings(f)[2].ring;
             PsiHomIso iso = hom_from_psi_iso(random_bec(Instance::Complex, ring, rng),
                                              random_object(Instance::Complex, ring, rng, 2));
             r.expect(iso.check.empty(), "chain isomorphism");
         }},
        {"resolutions.lift_through_psi",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             Ses s = random_ses(Instance::CdgMod, ring, rng);
             BecObject x = phi(random_object(Instance::CdgMod, ring, rng, 2)).object;
             TotData t = tot_of(s.complex(), 0);
             Matrix lift = lift_through_psi(x, s, 0, 0, Matrix(f, t.object.dim(), x.base.dim()),
                                            Matrix(f, phi(s.v).object.base.dim(), x.base.dim()));
             r.expect(lift.is_zero(), "zero input lifts to zero");
         }},
        {"resolutions.approach",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             Ses s = random_ses(Instance::CdgMod, ring, rng);
             DgObject fo = random_object(Instance::CdgMod, ring, rng, 2);
             TotData t = tot_of(s.complex(), 0);
             Approach z = approach(fo, s, 0, Matrix(f, t.object.dim(), fo.dim()));
             r.expect(z.fast_path && z.g == fo && validate_witness(z.cone_witness).empty(), "zero map fast path");
         }},
        {"resolutions.triangle_descent",
         [](CheckResult& r, const Field& f, Rng& rng) {
             auto ring = ke(f);
             Ses s = random_ses(Instance::CdgMod, ring, rng);
             TriangleData tri{s, 0, random_object(Instance::CdgMod, ring, rng, 2), Matrix()};
             tri.m = random_closed(tri.x(), tri.s, 0, rng);
             ConeData cx = tri.cone();
             DgObject p = random_object(Instance::CdgMod, ring, rng, 2);
             TriangleDescent td = triangle_descent(tri, p, Matrix(f, cx.object.dim(), p.dim()));
             r.expect(check_ses(td.ses) && td.ses.w == p, "zero map");
         }},
        {"resolutions.witness_to_totalization",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Ses s = random_ses(Instance::CdgMod, ke(f), rng);
             Totalization tz = witness_to_totalization(leaf_witness(s, 0));
             r.expect(tz.complex.terms.size() == 3 && (tz.proj * tz.incl).is_identity(), "leaf");
         }},
        {"resolutions.spade_cover",
         [](CheckResult& r, const Field& f, Rng& rng) {
             DgObject b = random_object(Instance::CdgMod, ke(f), rng, 2);
             FreeCover fc = free_cover(b.module.base);
             SpadeCover sc = spade_cover(b, fc.free, fc.epi);
             r.expect(is_closed(sc.c, b, 0, sc.epi) && rank(sc.epi) == b.dim() && fc.epi * sc.to_k == sc.epi,
                      "cover through K");
         }},
        {"resolutions.ext_class_is_split",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             GradedModule k0 = simple_module(alg, 0), k1 = simple_module(alg, -1), rm = regular_module(alg);
             r.expect(ext_class_is_split(zero_extension(k1, k0, 2)).split, "zero extension");
             NExtension e{{k1, rm, k0}, {col(f, {0, 1}), Matrix::from_ints(f, 1, 2, {1, 0})}};
             r.expect(!ext_class_is_split(e).split, "k -> R -> k");
         }},
        {"resolutions.epic_elementary_equivalence",
         [](CheckResult& r, const Field& f, Rng&) {
             auto alg = ke_algebra(fixture_window(), f);
             NExtension a = zero_extension(simple_module(alg, -2), simple_module(alg, 0), 2);
             ElementaryEquivalence idf;
             for (auto& t : a.terms) idf.push_back(idm(t));
             EpicEquivalence ee = epic_elementary_equivalence(a, a, idf);
             r.expect(is_exact(ee.c) && is_elementary_epimorphism(ee.c, a, ee.to_a), "identity");
         }},
        {"resolutions.graded_split_descent",
         [](CheckResult& r, const Field& f, Rng& rng) {
             Ses s = random_ses(Instance::CdgMod, wide_ke(f), rng);
             GradedSplitDescent d = graded_split_descent(ses_extension(s));
             r.expect(is_exact(d.c) && (d.retraction * d.c.maps[0]).is_identity(), "split short exact sequence");
         }},
        {"cli.parse",
         [](CheckResult& r, const Field& f, Rng&) {
             r.expect(parse_document("").blocks.empty() && load_store("").order.empty(), "empty document");
             Document doc;
             doc.blocks.push_back(datum_block(fixture_window(), f));
             doc.blocks.push_back(algebra_block("KE", *ke_algebra(fixture_window(), f)));
             const std::string text = print_document(doc);
             r.expect(print_document(parse_document(text)) == text, "print . parse is the identity");
             bool line = false;
             try {
                 load_store("begin datum\n  group Z\n  window -6 6\nend\nbegin algebra A\n  degrees [0]\n  unit 1 1\n  x/\n"
                            "end\n");
             } catch (const InputError& e) {
                 line = e.line() > 0;
             }
             r.expect(line, "errors carry a line number");
         }},
        {"cli.run",
         [](CheckResult& r, const Field& f, Rng&) {
             for (const std::string& name : {std::string("no-cdg-structure"), std::string("gplus-free")})
                 r.expect(run_demo(name, f).pass, name);
             r.expect(throws([&] { run_demo("no-such-demo", f); }), "unknown command");
         }},
        {"cli.demo_no_dg_on_summand",
         [](CheckResult& r, const Field& f, Rng&) { r.expect(demo_no_dg_on_summand(f).pass, "no differential"); }},
    };
    return ops;
}

}  // namespace

std::vector<CheckResult> op_coverage(const SuiteOptions& opt)
{
    std::vector<CheckResult> out;
    int k = 0;
    for (const auto& [name, fn] : op_table()) {
        CheckResult r;
        r.name = name;
        r.cases = 1;
        Rng rng(stream_seed(opt.seed, 100 + k++));
        try {
            fn(r, opt.field, rng);
        } catch (const std::exception& e) {
            r.expect(false, std::string("exception: ") + e.what());
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace dgbec
