#include "dgbec/cdg.hpp"

#include <algorithm>

namespace dgbec {

namespace {

Matrix parity_diag(const GradingDatum& dt, const Field& f, const std::vector<int>& degs, int offset = 0)
{
    Matrix p(f, degs.size(), degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i) p.set(i, i, dt.parity_sign(degs[i] + offset));
    return p;
}

bool column_in_degree(const Matrix& v, const std::vector<int>& degs, int d)
{
    for (std::size_t i = 0; i < v.rows(); ++i)
        if (!v.is_zero_at(i, 0) && degs[i] != d) return false;
    return true;
}

}  // namespace

RingPtr make_ring(AlgebraPtr alg, Matrix d, Matrix h)
{
    if (d.rows() != alg->dim() || d.cols() != alg->dim()) throw ShapeError("ring differential shape");
    if (h.rows() != alg->dim() || h.cols() != 1) throw ShapeError("curvature must be a column");
    return std::make_shared<const CdgRing>(CdgRing{std::move(alg), std::move(d), std::move(h)});
}

RingPtr dg_ring(AlgebraPtr alg)
{
    Matrix d(alg->field(), alg->dim(), alg->dim()), h(alg->field(), alg->dim(), 1);
    return make_ring(std::move(alg), std::move(d), std::move(h));
}

Matrix graded_commutator(const GradedAlgebra& alg, const Matrix& a, int deg_a)
{
    Matrix p(alg.field(), alg.dim(), alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j) p.set(j, j, alg.datum().koszul_sign(deg_a, alg.degree(j)));
    return alg.left_mult(a) - alg.right_mult(a) * p;
}

Report check_cdg_ring(const CdgRing& r)
{
    Report rep;
    const auto& a = *r.alg;
    const auto& dt = a.datum();
    if (!is_homogeneous(r.d, a.degrees(), a.degrees(), 1, dt)) rep.push_back("d not of degree 1");
    if (!column_in_degree(r.h, a.degrees(), dt.reduce(2))) rep.push_back("h not in degree 2");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix rhs = a.left_mult(r.d.column(i)) + a.left(i).scaled(dt.parity_sign(a.degree(i))) * r.d;
        if (r.d * a.left(i) != rhs) {
            rep.push_back("Leibniz violated");
            break;
        }
    }
    if (r.d * r.d != graded_commutator(a, r.h, 2)) rep.push_back("d^2 != [h,-]");
    if (!(r.d * r.h).is_zero()) rep.push_back("d(h) != 0");
    return rep;
}

Report check_cdg_module(const CdgModule& m)
{
    Report rep = check_module(m.base);
    if (!rep.empty()) return rep;
    const auto& a = *m.ring->alg;
    const auto& dt = a.datum();
    if (m.d.rows() != m.dim() || m.d.cols() != m.dim()) return {"differential shape"};
    if (!is_homogeneous(m.d, m.degrees(), m.degrees(), 1, dt)) rep.push_back("d not of degree 1");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix rhs = m.base.action(m.ring->d.column(i)) + m.base.act[i].scaled(dt.parity_sign(a.degree(i))) * m.d;
        if (m.d * m.base.act[i] != rhs) {
            rep.push_back("Leibniz violated");
            break;
        }
    }
    if (m.d * m.d != m.base.action(m.ring->h)) rep.push_back("d^2 != h");
    return rep;
}

Report check_morphism(const CdgRingMorphism& m)
{
    Report rep;
    const auto& R = *m.source->alg;
    const auto& S = *m.target->alg;
    const auto& dt = S.datum();
    if (m.f.rows() != S.dim() || m.f.cols() != R.dim() || m.a.rows() != S.dim() || m.a.cols() != 1)
        return {"morphism shape"};
    if (!is_homogeneous(m.f, R.degrees(), S.degrees(), 0, dt)) rep.push_back("f not of degree 0");
    bool ring_map = m.f * R.unit() == S.unit();
    for (std::size_t i = 0; i < R.dim() && ring_map; ++i)
        if (m.f * R.left(i) != S.left_mult(m.f.column(i)) * m.f) ring_map = false;
    if (!ring_map) rep.push_back("f not a ring map");
    if (!column_in_degree(m.a, S.degrees(), dt.reduce(1))) rep.push_back("a not of degree 1");
    if (m.f * m.source->d != m.target->d * m.f + graded_commutator(S, m.a, 1) * m.f)
        rep.push_back("f(d r) != d f(r) + [a, f(r)]");
    if (m.f * m.source->h != m.target->h + m.target->d * m.a + S.product(m.a, m.a))
        rep.push_back("f(h) != h + d(a) + a^2");
    return rep;
}

CdgRingMorphism compose_morphisms(const CdgRingMorphism& g, const CdgRingMorphism& f)
{
    if (f.target->alg->dim() != g.source->alg->dim()) throw ShapeError("compose_morphisms: rings do not match");
    return {f.source, g.target, g.f * f.f, g.a + g.f * f.a};
}

RingPtr transport(const RingPtr& r, const Matrix& a)
{
    const auto& alg = *r->alg;
    Matrix d = r->d - graded_commutator(alg, a, 1);
    Matrix h = r->h - d * a - alg.product(a, a);
    return make_ring(r->alg, std::move(d), std::move(h));
}

CdgModule zero_cdg_module(const RingPtr& r) { return {r, zero_module(r->alg), Matrix(r->field(), 0, 0)}; }

CdgModule cdg_direct_sum(const CdgModule& a, const CdgModule& b)
{
    return {a.ring, direct_sum(a.base, b.base), Matrix::direct_sum(a.d, b.d)};
}

CdgModule cdg_shift(const CdgModule& m, int n)
{
    return {m.ring, shift(m.base, n), m.d.scaled(m.datum().parity_sign(n))};
}

Matrix hom_differential(const CdgModule& l, const CdgModule& m, int n, const Matrix& f)
{
    return m.d * f - (f * l.d).scaled(l.datum().parity_sign(n));
}

std::vector<int> hom_degree_range(const std::vector<int>& src, const std::vector<int>& tgt, const GradingDatum& dt)
{
    std::vector<int> r;
    if (!dt.is_integer()) {
        for (int n = 0; n < dt.order(); ++n) r.push_back(n);
        return r;
    }
    if (src.empty() || tgt.empty()) return r;
    auto [smin, smax] = std::minmax_element(src.begin(), src.end());
    auto [tmin, tmax] = std::minmax_element(tgt.begin(), tgt.end());
    for (int n = *tmin - *smax; n <= *tmax - *smin; ++n) r.push_back(n);
    return r;
}

const HomSpace* HomComplex::space(int n) const
{
    n = datum.reduce(n);
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == n) return &spaces[k];
    return nullptr;
}

std::size_t HomComplex::dim(int n) const
{
    auto* s = space(n);
    return s ? s->dim() : 0;
}

Matrix HomComplex::d(int n) const
{
    n = datum.reduce(n);
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == n) return differential[k];
    return Matrix(field, dim(n + 1), 0);
}

std::size_t HomComplex::cohomology_dim(int n) const { return dim(n) - rank(d(n)) - rank(d(n - 1)); }

bool HomComplex::d_squared_zero() const
{
    for (int n : degrees)
        if (!(d(n + 1) * d(n)).is_zero()) return false;
    return true;
}

HomComplex hom_complex_cdg(const CdgModule& l, const CdgModule& m)
{
    HomComplex h;
    h.datum = l.datum();
    h.field = l.field();
    h.degrees = hom_degree_range(l.degrees(), m.degrees(), h.datum);
    for (int n : h.degrees) h.spaces.push_back(hom_graded(l.base, m.base, n));
    for (std::size_t k = 0; k < h.degrees.size(); ++k) {
        int n = h.degrees[k];
        const HomSpace* next = h.space(n + 1);
        Matrix dm(h.field, next ? next->dim() : 0, h.spaces[k].dim());
        if (next)
            for (std::size_t c = 0; c < h.spaces[k].dim(); ++c)
                dm.set_block(0, c, next->coords(hom_differential(l, m, n, h.spaces[k].basis[c])));
        h.differential.push_back(std::move(dm));
    }
    return h;
}

DeltaExtension delta_extension(const RingPtr& r)
{
    const auto& a = *r->alg;
    const auto& dt = a.datum();
    const Field& f = a.field();
    const std::size_t n = a.dim();
    std::vector<int> degs = a.degrees();
    for (std::size_t i = 0; i < n; ++i) degs.push_back(dt.normalize(static_cast<long long>(a.degree(i)) + 1));
    Matrix p = parity_diag(dt, f, a.degrees());
    Matrix rh = a.right_mult(r->h);
    std::vector<Matrix> left;
    for (std::size_t i = 0; i < n; ++i) left.push_back(Matrix::direct_sum(a.left(i), a.left(i)));
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l(f, 2 * n, 2 * n);
        l.set_block(0, 0, a.left(i) * r->d);
        l.set_block(0, n, a.left(i) * rh * p);
        l.set_block(n, 0, a.left(i) * p);
        l.set_block(n, n, a.left(i) * r->d);
        left.push_back(std::move(l));
    }
    Matrix unit(f, 2 * n, 1);
    unit.set_block(0, 0, a.unit());
    DeltaExtension e;
    e.source = r;
    e.ring = std::make_shared<const GradedAlgebra>(dt, f, degs, std::move(left), std::move(unit));
    e.partial = Matrix(f, 2 * n, 2 * n);
    e.partial.set_block(0, n, p);
    e.rho = Matrix(f, n, 2 * n);
    e.rho.set_block(0, n, p);
    return e;
}

Matrix delta_product(const DeltaExtension& e, const Matrix& x, const Matrix& y)
{
    const auto& a = *e.source->alg;
    const std::size_t n = a.dim();
    Matrix r = x.block(0, 0, n, 1), s = x.block(n, 0, n, 1);
    Matrix u = y.block(0, 0, n, 1), v = y.block(n, 0, n, 1);
    Matrix p = parity_diag(a.datum(), a.field(), a.degrees());
    // (r + s delta)(u + v delta) = (ru + s d(u) + (-1)^{|v|} s v h) + (rv + (-1)^{|u|} s u + s d(v)) delta
    Matrix plain = a.product(r, u) + a.product(s, e.source->d * u) + a.product(s, a.product(p * v, e.source->h));
    Matrix dpart = a.product(r, v) + a.product(s, p * u) + a.product(s, e.source->d * v);
    return Matrix::vstack(plain, dpart);
}

bool PairingRanks::perfect() const
{
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (left_ranks[k] != dims[k] || right_ranks[k] != dims[k]) return false;
    return true;
}

PairingRanks pairing_rank(const DeltaExtension& e)
{
    const auto& a = *e.source->alg;
    const auto& dt = a.datum();
    const std::size_t n = a.dim();
    Matrix delta(a.field(), 2 * n, 1);
    delta.set_block(n, 0, a.unit());
    Matrix lmap = Matrix::vstack(e.rho, e.rho * e.ring->right_mult(delta));
    Matrix rmap = Matrix::vstack(e.rho, e.rho * e.ring->left_mult(delta));
    // rows: rho part lives in R[-1] (degree |r| + 1), the second part one degree higher
    std::vector<int> rowdeg;
    for (std::size_t i = 0; i < n; ++i) rowdeg.push_back(dt.reduce(static_cast<long long>(a.degree(i)) + 1));
    for (std::size_t i = 0; i < n; ++i) rowdeg.push_back(dt.reduce(static_cast<long long>(a.degree(i))));
    PairingRanks pr;
    const auto& cdeg = e.ring->degrees();
    for (int d : distinct_degrees(cdeg)) {
        auto ci = indices_of_degree(cdeg, d);
        std::vector<std::size_t> ri;
        for (std::size_t i = 0; i < n; ++i)
            if (rowdeg[i] == d) ri.push_back(i);
        for (std::size_t i = n; i < 2 * n; ++i)
            if (rowdeg[i] == d) ri.push_back(i);
        pr.degrees.push_back(d);
        pr.dims.push_back(ri.size() == ci.size() ? ci.size() : std::size_t(-1));
        pr.left_ranks.push_back(rank(lmap.select(ri, ci)));
        pr.right_ranks.push_back(rank(rmap.select(ri, ci)));
    }
    return pr;
}

GModule g_plus(const RingPtr& r, const GradedModule& m)
{
    const auto& a = *r->alg;
    const auto& dt = a.datum();
    const Field& f = a.field();
    const std::size_t n = m.dim();
    GModule g;
    CdgModule& x = g.object;
    x.ring = r;
    x.base.alg = r->alg;
    x.base.degrees = m.degrees;
    for (int d : m.degrees) x.base.degrees.push_back(dt.normalize(static_cast<long long>(d) + 1));
    for (std::size_t j = 0; j < a.dim(); ++j) {
        int s = dt.parity_sign(a.degree(j));
        Matrix act(f, 2 * n, 2 * n);
        act.set_block(0, 0, m.act[j]);
        act.set_block(0, n, m.action(r->d.column(j)).scaled(-s));
        act.set_block(n, n, m.act[j].scaled(s));
        x.base.act.push_back(std::move(act));
    }
    x.d = Matrix(f, 2 * n, 2 * n);
    x.d.set_block(0, n, m.action(r->h));
    x.d.set_block(n, 0, Matrix::identity(f, n));
    g.sequence.sub = m;
    g.sequence.quotient = shift(m, -1);
    g.sequence.incl = Matrix::vstack(Matrix::identity(f, n), Matrix(f, n, n));
    g.sequence.proj = Matrix::hstack(Matrix(f, n, n), Matrix::identity(f, n));
    return g;
}

GModule g_minus(const RingPtr& r, const GradedModule& m)
{
    const auto& a = *r->alg;
    const auto& dt = a.datum();
    const Field& f = a.field();
    const std::size_t n = m.dim();
    Matrix p = parity_diag(dt, f, m.degrees);
    GModule g;
    CdgModule& x = g.object;
    x.ring = r;
    x.base.alg = r->alg;
    x.base.degrees = m.degrees;
    for (int d : m.degrees) x.base.degrees.push_back(dt.normalize(static_cast<long long>(d) - 1));
    for (std::size_t j = 0; j < a.dim(); ++j) {
        int s = dt.parity_sign(a.degree(j));
        Matrix act(f, 2 * n, 2 * n);
        act.set_block(0, 0, m.act[j]);
        act.set_block(n, 0, m.action(r->d.column(j)).scaled(s) * p);
        act.set_block(n, n, m.act[j]);
        x.base.act.push_back(std::move(act));
    }
    x.d = Matrix(f, 2 * n, 2 * n);
    x.d.set_block(0, n, -p);
    x.d.set_block(n, 0, -(m.action(r->h) * p));
    g.sequence.sub = shift(m, 1);
    g.sequence.quotient = m;
    g.sequence.incl = Matrix::vstack(Matrix(f, n, n), p);
    g.sequence.proj = Matrix::hstack(Matrix::identity(f, n), Matrix(f, n, n));
    return g;
}

Matrix g_minus_to_shifted_plus(const RingPtr& r, const GradedModule& m)
{
    const Field& f = r->field();
    const std::size_t n = m.dim();
    Matrix iso(f, 2 * n, 2 * n);
    iso.set_block(0, n, parity_diag(r->datum(), f, m.degrees));
    iso.set_block(n, 0, Matrix::identity(f, n));
    return iso;
}

Matrix gplus_transport(const GradedModule& m, const CdgModule& n, const Matrix& f)
{
    if (f.rows() != n.dim() || f.cols() != m.dim()) throw ShapeError("gplus_transport: map shape");
    return Matrix::hstack(f, n.d * f);
}

Matrix gplus_restrict(const GradedModule& m, const Matrix& g) { return g.block(0, 0, g.rows(), m.dim()); }

bool is_maurer_cartan(const CdgModule& m, const Matrix& a)
{
    if (a.rows() != m.dim() || a.cols() != m.dim()) return false;
    GradedMap am{m.base, m.base, 1, a};
    if (!check_map(am).empty()) return false;
    return (hom_differential(m, m, 1, a) + a * a).is_zero();
}

CdgModule twist_cdg(const CdgModule& m, const Matrix& a)
{
    if (!is_maurer_cartan(m, a)) throw NotMaurerCartan();
    return {m.ring, m.base, m.d + a};
}

RingPtr matrix_factorization_ring(AlgebraPtr a, const Matrix& w)
{
    if (a->datum().is_integer()) throw DegreeError("factorization rings need a Z/2p grading");
    for (int d : a->degrees())
        if (d != 0) throw DegreeError("factorization rings need an algebra in degree 0");
    if (a->left_mult(w) != a->right_mult(w)) throw ShapeError("potential is not central");
    Matrix d(a->field(), a->dim(), a->dim());
    return make_ring(std::move(a), std::move(d), w);
}

GradedModule to_delta_module(const DeltaExtension& e, const CdgModule& m)
{
    GradedModule g;
    g.alg = e.ring;
    g.degrees = m.degrees();
    for (auto& x : m.base.act) g.act.push_back(x);
    for (auto& x : m.base.act) g.act.push_back(x * m.d);
    return g;
}

CdgModule from_delta_module(const DeltaExtension& e, const GradedModule& n)
{
    const auto& a = *e.source->alg;
    CdgModule m;
    m.ring = e.source;
    m.base.alg = e.source->alg;
    m.base.degrees = n.degrees;
    for (std::size_t i = 0; i < a.dim(); ++i) m.base.act.push_back(n.act[i]);
    m.d = Matrix(a.field(), n.dim(), n.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!a.unit().is_zero_at(i, 0)) m.d += n.act[a.dim() + i].scaled(a.unit().at(i, 0));
    return m;
}

}  // namespace dgbec
