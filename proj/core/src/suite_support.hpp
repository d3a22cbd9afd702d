#pragma once

#include "dgbec/linalg.hpp"
#include "dgbec/random.hpp"
#include "dgbec/suites.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dgbec::suite {

using InstanceRings = std::vector<std::pair<Instance, RingPtr>>;

inline Matrix id(const DgObject& x) { return Matrix::identity(x.field(), x.dim()); }
inline Matrix idm(const GradedModule& m) { return Matrix::identity(m.field(), m.dim()); }

inline InstanceRings all_rings(const Field& f)
{
    InstanceRings r;
    for (auto& nr : fixture_rings(f)) r.push_back({Instance::CdgMod, nr.ring});
    for (auto& nr : complex_rings(f)) r.push_back({Instance::Complex, nr.ring});
    return r;
}

inline RingPtr wide_ke(const Field& f) { return ke_ring(GradingDatum::integers(-12, 12), f); }
inline RingPtr wide_upper(const Field& f) { return dg_ring(upper_triangular(GradingDatum::integers(-12, 12), f)); }

inline BecObject random_bec(Instance inst, const RingPtr& ring, Rng& rng)
{
    if (rng.coin()) return phi(random_object(inst, ring, rng, 2)).object;
    GradedModule m = random_graded_module(ring->alg, rng, 1, 2);
    return inst == Instance::Complex ? upsilon_complexes(ring, m) : upsilon_cdg(ring, m);
}

inline DgObject nonzero_object(Instance inst, const RingPtr& ring, Rng& rng, std::size_t comp)
{
    DgObject a = random_object(inst, ring, rng, comp);
    while (a.dim() == 0) a = random_object(inst, ring, rng, comp);
    return a;
}

// 0 -> B -> cone(f) -> A[1] -> 0
inline Ses cone_ses(const DgObject& a, const DgObject& b, const Matrix& f)
{
    ConeData c = cone(a, b, f);
    return {b, c.object, shift(a, 1).object, c.iota, c.pi};
}

inline Ses random_ses(Instance inst, const RingPtr& ring, Rng& rng, std::size_t comp = 2)
{
    DgObject a = nonzero_object(inst, ring, rng, comp), b = nonzero_object(inst, ring, rng, comp);
    return cone_ses(a, b, random_closed(a, b, 0, rng));
}

// S_1 and S_2 over upper triangular 2x2 matrices (basis e11, e12, e22).
inline GradedModule upper_simple(const AlgebraPtr& alg, int which)
{
    GradedModule m;
    m.alg = alg;
    m.degrees = {0};
    for (std::size_t i = 0; i < 3; ++i) {
        Matrix a(alg->field(), 1, 1);
        if ((which == 1 && i == 0) || (which == 2 && i == 2)) a.set(0, 0, 1);
        m.act.push_back(a);
    }
    return m;
}

inline DgObject module_complex(const RingPtr& ring, const GradedModule& m)
{
    return complex_from_terms(ring, 0, {m}, {});
}

// U -> V -> cone(id_W) -> W[1] spliced from a short exact sequence.
inline ExactComplex four_term(const Ses& s)
{
    ConeData c2 = cone(s.w, s.w, id(s.w));
    return {{s.u, s.v, c2.object, shift(s.w, 1).object}, {s.j, c2.iota * s.k, c2.pi}};
}

inline Z0Extension ses_extension(const Ses& s) { return {{s.u, s.v, s.w}, {s.j, s.k}}; }
inline Z0Extension spliced_extension(const Ses& s)
{
    ExactComplex c = four_term(s);
    return {c.terms, c.maps};
}

inline std::size_t leaf_count(const AcyclicityWitness& w)
{
    std::size_t n = w.kind == WitnessKind::Leaf ? 1 : 0;
    for (auto& c : w.children) n += leaf_count(c);
    return n;
}

// 0 -> A -f-> B -g-> C -> 0 exact, by ranks of the plain matrices.
inline bool rank_exact(const Matrix& f, const Matrix& g, std::size_t a, std::size_t b, std::size_t c)
{
    if (f.rows() != b || f.cols() != a || g.rows() != c || g.cols() != b) return false;
    return (g * f).is_zero() && rank(f) == a && rank(g) == c && a + c == b;
}

inline std::uint64_t stream_seed(std::uint64_t seed, int stream) { return seed * 1000003ULL + 7919ULL * stream; }

}  // namespace dgbec::suite
