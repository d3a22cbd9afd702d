#include "dgbec/random.hpp"

#include <map>

namespace dgbec {

Scalar random_scalar(const Field& f, Rng& rng)
{
    if (f.is_rational()) return Scalar(f, static_cast<long long>(rng.between(-3, 3)));
    return Scalar::from_residue(f, static_cast<std::uint32_t>(rng.below(f.characteristic())));
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng)
{
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
    return m;
}

Matrix random_graded_automorphism(const Field& f, const std::vector<int>& degrees, Rng& rng)
{
    Matrix p(f, degrees.size(), degrees.size());
    for (int d : distinct_degrees(degrees)) {
        auto idx = indices_of_degree(degrees, d);
        Matrix b(f, idx.size(), idx.size());
        do b = random_matrix(f, idx.size(), idx.size(), rng);
        while (rank(b) != idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) p.set(idx[i], idx[j], b.at(i, j));
    }
    return p;
}

Matrix random_combination(const std::vector<Matrix>& basis, const Matrix& zero, Rng& rng)
{
    Matrix r = zero;
    for (auto& b : basis) r += b.scaled(random_scalar(zero.field(), rng));
    return r;
}

std::size_t max_component(const std::vector<int>& degrees)
{
    std::map<int, std::size_t> c;
    std::size_t m = 0;
    for (int d : degrees) m = std::max(m, ++c[d]);
    return m;
}

namespace {

int random_degree(const GradingDatum& dt, Rng& rng)
{
    if (dt.is_integer()) return rng.between(std::max(dt.lo(), -2), std::min(dt.hi(), 2));
    return rng.between(0, dt.order() - 1);
}

}  // namespace

GradedModule random_graded_module(const AlgebraPtr& alg, Rng& rng, std::size_t max_gens, std::size_t max_comp)
{
    const auto& dt = alg->datum();
    const Field& f = alg->field();
    for (;;) {
        std::vector<int> gdeg;
        std::size_t ng = rng.below(max_gens + 1);
        for (std::size_t i = 0; i < ng; ++i) gdeg.push_back(random_degree(dt, rng));
        GradedModule fm;
        try {
            fm = free_module(alg, gdeg);
        } catch (const DegreeError&) {
            continue;
        }
        if (fm.dim() == 0) return fm;
        std::vector<Matrix> rel;
        std::vector<int> reldeg;
        std::size_t nr = rng.below(3);
        for (std::size_t k = 0; k < nr; ++k) {
            int d = fm.degrees[rng.below(fm.dim())];
            Matrix v(f, fm.dim(), 1);
            for (std::size_t i : indices_of_degree(fm.degrees, d)) v.set(i, 0, random_scalar(f, rng));
            for (std::size_t i = 0; i < alg->dim(); ++i) {
                Matrix w = fm.act[i] * v;
                int wd = dt.reduce(static_cast<long long>(d) + alg->degree(i));
                rel.push_back(w);
                reldeg.push_back(wd);
            }
        }
        Matrix r(f, fm.dim(), rel.size());
        for (std::size_t c = 0; c < rel.size(); ++c) r.set_block(0, c, rel[c]);
        GradedModule m = descend_module(fm, cokernel_of(r, reldeg, fm.degrees));
        if (max_component(m.degrees) <= max_comp) return m;
    }
}

Matrix random_graded_map(const GradedModule& l, const GradedModule& m, int n, Rng& rng)
{
    HomSpace h = hom_graded(l, m, n);
    return random_combination(h.basis, Matrix(l.field(), m.dim(), l.dim()), rng);
}

namespace {

CdgModule conjugate(const CdgModule& m, const Matrix& p)
{
    Matrix pi = *inverse(p);
    CdgModule r = m;
    for (auto& a : r.base.act) a = p * a * pi;
    r.d = p * m.d * pi;
    return r;
}

CdgModule random_cdg_raw(const RingPtr& ring, Rng& rng, std::size_t max_comp, int depth)
{
    const bool plain = ring->d.is_zero() && ring->h.is_zero();
    for (;;) {
        int kind = static_cast<int>(rng.below(depth > 0 ? 4 : 3));
        CdgModule r;
        try {
            if (kind == 0) {
                r = g_plus(ring, random_graded_module(ring->alg, rng, 1, 2)).object;
            } else if (kind == 1) {
                r = g_minus(ring, random_graded_module(ring->alg, rng, 1, 2)).object;
            } else if (kind == 2) {
                if (!plain) continue;
                GradedModule m = random_graded_module(ring->alg, rng, 2, max_comp);
                r = {ring, m, Matrix(ring->field(), m.dim(), m.dim())};
            } else {
                DgObject x = cdg_object(random_cdg_raw(ring, rng, max_comp, depth - 1));
                DgObject y = cdg_object(random_cdg_raw(ring, rng, max_comp, depth - 1));
                r = cone(x, y, random_closed(x, y, 0, rng)).object.module;
            }
        } catch (const DegreeError&) {
            continue;
        }
        if (max_component(r.degrees()) <= max_comp) return r;
    }
}

}  // namespace

CdgModule random_cdg_module(const RingPtr& ring, Rng& rng, std::size_t max_comp)
{
    CdgModule m = random_cdg_raw(ring, rng, max_comp, 1);
    return conjugate(m, random_graded_automorphism(ring->field(), m.degrees(), rng));
}

DgObject random_object(Instance inst, const RingPtr& ring, Rng& rng, std::size_t max_comp)
{
    CdgModule m = random_cdg_module(ring, rng, max_comp);
    return inst == Instance::Complex ? complex_object(std::move(m)) : cdg_object(std::move(m));
}

Matrix random_hom(const DgObject& x, const DgObject& y, int n, Rng& rng)
{
    return random_graded_map(x.module.base, y.module.base, n, rng);
}

Matrix random_closed(const DgObject& x, const DgObject& y, int n, Rng& rng)
{
    return random_combination(cocycles(x, y, n), Matrix(x.field(), y.dim(), x.dim()), rng);
}

}  // namespace dgbec
