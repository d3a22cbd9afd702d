#include "dgbec/dg.hpp"

namespace dgbec {

namespace {

void same_instance(const DgObject& x, const DgObject& y)
{
    if (x.instance != y.instance) throw DgError("instance mismatch");
}

}  // namespace

Report check_object(const DgObject& x)
{
    Report r = check_cdg_module(x.module);
    if (x.instance == Instance::Complex) {
        const auto& ring = *x.ring();
        for (int d : ring.alg->degrees())
            if (d != 0) {
                r.push_back("complex base algebra not in degree 0");
                break;
            }
        if (!ring.d.is_zero() || !ring.h.is_zero()) r.push_back("complex base ring not plain");
    }
    return r;
}

DgObject cdg_object(CdgModule m) { return {Instance::CdgMod, std::move(m)}; }

DgObject complex_object(CdgModule m)
{
    DgObject x{Instance::Complex, std::move(m)};
    for (int d : x.ring()->alg->degrees())
        if (d != 0) throw DgError("complex base algebra not in degree 0");
    if (!x.ring()->d.is_zero() || !x.ring()->h.is_zero()) throw DgError("complex base ring not plain");
    return x;
}

DgObject complex_from_terms(const RingPtr& ring, int lo, const std::vector<GradedModule>& terms,
                            const std::vector<Matrix>& differentials)
{
    if (differentials.size() + 1 != terms.size() && !(terms.empty() && differentials.empty()))
        throw ShapeError("complex: need one differential between consecutive terms");
    GradedModule base = zero_module(ring->alg);
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (int d : terms[i].degrees)
            if (d != 0) throw DgError("complex terms must sit in degree 0");
        off.push_back(base.dim());
        base = direct_sum(base, shift(terms[i], -(lo + static_cast<int>(i))));
    }
    Matrix d(ring->field(), base.dim(), base.dim());
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        if (differentials[i].rows() != terms[i + 1].dim() || differentials[i].cols() != terms[i].dim())
            throw ShapeError("complex: differential shape");
        d.set_block(off[i + 1], off[i], differentials[i]);
    }
    return complex_object({ring, base, d});
}

DgObject zero_object(Instance inst, const RingPtr& ring) { return {inst, zero_cdg_module(ring)}; }

DgObject direct_sum(const DgObject& a, const DgObject& b)
{
    same_instance(a, b);
    return {a.instance, cdg_direct_sum(a.module, b.module)};
}

HomComplex hom(const DgObject& x, const DgObject& y)
{
    same_instance(x, y);
    return hom_complex_cdg(x.module, y.module);
}

Matrix d_hom(const DgObject& x, const DgObject& y, int n, const Matrix& f)
{
    return hom_differential(x.module, y.module, n, f);
}

Matrix dg_compose(const Matrix& g, const Matrix& f) { return g * f; }

bool is_morphism(const DgObject& x, const DgObject& y, int n, const Matrix& f)
{
    if (f.rows() != y.dim() || f.cols() != x.dim()) return false;
    return check_map({x.module.base, y.module.base, n, f}).empty();
}

bool is_closed(const DgObject& x, const DgObject& y, int n, const Matrix& f)
{
    return is_morphism(x, y, n, f) && d_hom(x, y, n, f).is_zero();
}

namespace {

// Coordinates of d: Hom^n -> Hom^{n+1}.
Matrix d_coords(const DgObject& x, const DgObject& y, int n, const HomSpace& s, const HomSpace& next)
{
    Matrix dm(x.field(), next.dim(), s.dim());
    for (std::size_t c = 0; c < s.dim(); ++c) dm.set_block(0, c, next.coords(d_hom(x, y, n, s.basis[c])));
    return dm;
}

}  // namespace

std::vector<Matrix> cocycles(const DgObject& x, const DgObject& y, int n)
{
    same_instance(x, y);
    std::vector<Matrix> r;
    HomSpace s = hom_graded(x.module.base, y.module.base, n);
    if (s.dim() == 0) return r;
    HomSpace next = hom_graded(x.module.base, y.module.base, n + 1);
    Matrix k = kernel_basis(d_coords(x, y, n, s, next));
    for (std::size_t c = 0; c < k.cols(); ++c) r.push_back(s.element(k.column(c)));
    return r;
}

std::size_t h0_dim(const DgObject& x, const DgObject& y) { return hom(x, y).cohomology_dim(0); }

ShiftData shift(const DgObject& x, int n)
{
    Matrix id = Matrix::identity(x.field(), x.dim());
    return {{x.instance, cdg_shift(x.module, n)}, id, id};
}

bool mc_check(const DgObject& x, const Matrix& a) { return is_maurer_cartan(x.module, a); }

DgObject twist(const DgObject& x, const Matrix& a) { return {x.instance, twist_cdg(x.module, a)}; }

ConeData cone(const DgObject& x, const DgObject& y, const Matrix& f)
{
    same_instance(x, y);
    if (!is_closed(x, y, 0, f)) throw DgError("not closed");
    const Field& fl = x.field();
    const std::size_t nx = x.dim(), ny = y.dim();
    DgObject sum = direct_sum(y, shift(x, 1).object);
    ConeData c;
    c.cochain = Matrix(fl, nx + ny, nx + ny);
    c.cochain.set_block(0, ny, f);
    c.object = twist(sum, c.cochain);
    c.iota = Matrix::vstack(Matrix::identity(fl, ny), Matrix(fl, nx, ny));
    c.pi = Matrix::hstack(Matrix(fl, nx, ny), Matrix::identity(fl, nx));
    c.iota_p = Matrix::vstack(Matrix(fl, ny, nx), Matrix::identity(fl, nx));
    c.pi_p = Matrix::hstack(Matrix::identity(fl, ny), Matrix(fl, ny, nx));
    return c;
}

TotData tot(const std::vector<DgObject>& terms, const std::vector<Matrix>& maps, int start)
{
    if (terms.empty()) throw DgError("tot of an empty complex");
    if (maps.size() + 1 != terms.size()) throw ShapeError("tot: need one map between consecutive terms");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (!is_closed(terms[i], terms[i + 1], 0, maps[i])) throw DgError("not closed");
        if (i + 1 < maps.size() && !(maps[i + 1] * maps[i]).is_zero()) throw DgError("composites nonzero");
    }
    TotData t;
    t.start = start;
    DgObject sum = zero_object(terms[0].instance, terms[0].ring());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        t.offsets.push_back(sum.dim());
        sum = direct_sum(sum, shift(terms[i], -(start + static_cast<int>(i))).object);
    }
    const auto& dt = sum.datum();
    t.cochain = Matrix(sum.field(), sum.dim(), sum.dim());
    for (std::size_t i = 0; i < maps.size(); ++i)
        t.cochain.set_block(t.offsets[i + 1], t.offsets[i],
                            maps[i].scaled(dt.parity_sign(start + static_cast<int>(i))));
    t.object = twist(sum, t.cochain);
    return t;
}

std::optional<Matrix> null_homotopy(const DgObject& x, const DgObject& y, int n, const Matrix& f)
{
    if (!is_closed(x, y, n, f)) throw DgError("not closed");
    Matrix zero(x.field(), y.dim(), x.dim());
    if (f.is_zero()) return zero;
    same_instance(x, y);
    HomSpace s = hom_graded(x.module.base, y.module.base, n);
    HomSpace prev = hom_graded(x.module.base, y.module.base, n - 1);
    auto c = solve(d_coords(x, y, n - 1, prev, s), s.coords(f));
    if (!c) return std::nullopt;
    return prev.element(*c);
}

bool is_null_homotopic(const DgObject& x, const DgObject& y, int n, const Matrix& f)
{
    return null_homotopy(x, y, n, f).has_value();
}

std::optional<Matrix> contracting_homotopy(const DgObject& x)
{
    return null_homotopy(x, x, 0, Matrix::identity(x.field(), x.dim()));
}

bool is_contractible(const DgObject& x) { return contracting_homotopy(x).has_value(); }

Z0Kernel z0_kernel(const DgObject& x, const DgObject& y, const Matrix& f)
{
    if (!is_closed(x, y, 0, f)) throw DgError("not closed");
    Subobject s = kernel_of(f, x.degrees(), y.degrees());
    return {{x.instance, {x.ring(), restrict_module(x.module.base, s), s.restrict(x.module.d)}}, s.incl};
}

Z0Cokernel z0_cokernel(const DgObject& x, const DgObject& y, const Matrix& f)
{
    if (!is_closed(x, y, 0, f)) throw DgError("not closed");
    Quotient q = cokernel_of(f, x.degrees(), y.degrees());
    return {{y.instance, {y.ring(), descend_module(y.module.base, q), q.descend(y.module.d)}}, q.proj, q.section};
}

bool z0_ses_check(const DgObject& a, const DgObject& b, const DgObject& c, const Matrix& f, const Matrix& g)
{
    if (!is_closed(a, b, 0, f) || !is_closed(b, c, 0, g)) return false;
    return ses_exact(f, g, a.degrees(), b.degrees(), c.degrees());
}

bool is_closed_iso(const DgObject& x, const DgObject& y, const Matrix& f)
{
    return x.dim() == y.dim() && is_closed(x, y, 0, f) && rank(f) == x.dim();
}

}  // namespace dgbec
