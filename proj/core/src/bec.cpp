#include "dgbec/bec.hpp"

#include <algorithm>

namespace dgbec {

namespace {

Matrix vec(const Matrix& f)
{
    Matrix v(f.field(), f.rows() * f.cols(), 1);
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!f.is_zero_at(i, j)) v.set(i * f.cols() + j, 0, f.at(i, j));
    return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols)
{
    Matrix f(v.field(), rows, cols);
    for (std::size_t k = 0; k < rows * cols; ++k)
        if (!v.is_zero_at(k, 0)) f.set(k / cols, k % cols, v.at(k, 0));
    return f;
}

int column_degree(const Matrix& v, std::size_t c, const std::vector<int>& degrees)
{
    for (std::size_t r = 0; r < v.rows(); ++r)
        if (!v.is_zero_at(r, c)) return degrees[r];
    return 0;
}

// Submodule on the columns of incl with retraction p.
DgObject image_object(const DgObject& x, const Matrix& d, const Matrix& p, const Matrix& incl)
{
    DgObject a;
    a.instance = x.instance;
    a.module.ring = x.ring();
    a.module.base.alg = x.ring()->alg;
    for (std::size_t c = 0; c < incl.cols(); ++c) a.module.base.degrees.push_back(column_degree(incl, c, x.degrees()));
    for (auto& act : x.module.base.act) a.module.base.act.push_back(p * act * incl);
    a.module.d = p * d * incl;
    return a;
}

Matrix col_block(const Field& f, std::size_t top, std::size_t bottom, bool upper)
{
    // [I; 0] when upper, [0; I] otherwise; top and bottom are block heights
    std::size_t n = upper ? top : bottom;
    return upper ? Matrix::vstack(Matrix::identity(f, n), Matrix(f, bottom, n))
                 : Matrix::vstack(Matrix(f, top, n), Matrix::identity(f, n));
}

}  // namespace

std::optional<Matrix> MatrixSpan::coords(const Matrix& f) const
{
    if (f.rows() != rows || f.cols() != cols) return std::nullopt;
    if (basis.empty()) {
        if (f.is_zero()) return Matrix(field, 0, 1);
        return std::nullopt;
    }
    return solve(stacked, vec(f));
}

Matrix MatrixSpan::element(const Matrix& c) const
{
    Matrix f(field, rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!c.is_zero_at(k, 0)) f += basis[k].scaled(c.at(k, 0));
    return f;
}

MatrixSpan span_of_matrices(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Matrix>& gens)
{
    MatrixSpan s;
    s.field = field;
    s.rows = rows;
    s.cols = cols;
    Matrix all(field, rows * cols, gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) all.set_block(0, k, vec(gens[k]));
    s.stacked = image_basis(all);
    for (std::size_t k = 0; k < s.stacked.cols(); ++k) s.basis.push_back(unvec(s.stacked.column(k), rows, cols));
    return s;
}

MatrixSpan constrained_span(const HomSpace& h, const std::vector<std::function<Matrix(const Matrix&)>>& constraints)
{
    std::vector<Matrix> outs;
    for (auto& b : h.basis) {
        Matrix col(h.field, 0, 1);
        for (auto& c : constraints) col = Matrix::vstack(col, vec(c(b)));
        outs.push_back(col);
    }
    std::size_t height = outs.empty() ? 0 : outs[0].rows();
    Matrix k(h.field, height, h.basis.size());
    for (std::size_t j = 0; j < outs.size(); ++j) k.set_block(0, j, outs[j]);
    Matrix ker = kernel_basis(k);
    std::vector<Matrix> gens;
    for (std::size_t c = 0; c < ker.cols(); ++c) gens.push_back(h.element(ker.column(c)));
    return span_of_matrices(h.field, h.rows, h.cols, gens);
}

const MatrixSpan* SpanComplex::space(int i) const
{
    i = datum.reduce(i);
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == i) return &spaces[k];
    return nullptr;
}

std::size_t SpanComplex::dim(int i) const
{
    auto* s = space(i);
    return s ? s->dim() : 0;
}

Matrix SpanComplex::d(int i) const
{
    i = datum.reduce(i);
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] == i) return differential[k];
    return Matrix(field, dim(i + 1), 0);
}

std::size_t SpanComplex::cohomology_dim(int i) const { return dim(i) - rank(d(i)) - rank(d(i - 1)); }

std::vector<Matrix> SpanComplex::cocycles(int i) const
{
    std::vector<Matrix> r;
    const MatrixSpan* s = space(i);
    if (!s) return r;
    Matrix k = kernel_basis(d(i));
    for (std::size_t c = 0; c < k.cols(); ++c) r.push_back(s->element(k.column(c)));
    return r;
}

bool SpanComplex::d_squared_zero() const
{
    for (int i : degrees)
        if (!(d(i + 1) * d(i)).is_zero()) return false;
    return true;
}

namespace {

SpanComplex build_complex(const GradingDatum& dt, const Field& field, std::vector<int> degrees,
                          const std::function<MatrixSpan(int)>& make_space,
                          const std::function<Matrix(int, const Matrix&)>& diff)
{
    SpanComplex c;
    c.datum = dt;
    c.field = field;
    std::sort(degrees.begin(), degrees.end());
    c.degrees = degrees;
    for (int i : c.degrees) c.spaces.push_back(make_space(i));
    for (std::size_t k = 0; k < c.degrees.size(); ++k) {
        int i = c.degrees[k];
        const MatrixSpan* next = c.space(i + 1);
        Matrix m(field, next ? next->dim() : 0, c.spaces[k].dim());
        for (std::size_t j = 0; j < c.spaces[k].dim(); ++j) {
            Matrix out = diff(i, c.spaces[k].basis[j]);
            if (!next) {
                if (!out.is_zero()) throw DgError("differential leaves the complex");
                continue;
            }
            auto co = next->coords(out);
            if (!co) throw DgError("differential leaves the complex");
            m.set_block(0, j, *co);
        }
        c.differential.push_back(std::move(m));
    }
    return c;
}

std::vector<int> negated(const std::vector<int>& v, const GradingDatum& dt)
{
    std::vector<int> r;
    for (int x : v) r.push_back(dt.reduce(-static_cast<long long>(x)));
    return r;
}

}  // namespace

Report check_bec(const BecObject& x)
{
    Report r = check_object(x.base);
    if (!r.empty()) return r;
    const std::size_t n = x.base.dim();
    if (x.sigma.rows() != n || x.sigma.cols() != n || !is_morphism(x.base, x.base, -1, x.sigma))
        return {"sigma not a morphism of degree -1"};
    if (!d_hom(x.base, x.base, -1, x.sigma).is_identity()) r.push_back("d(sigma) != id");
    if (!(x.sigma * x.sigma).is_zero()) r.push_back("sigma^2 != 0");
    return r;
}

Matrix d_bec(const BecObject& x, const BecObject& y, int i, const Matrix& f)
{
    return y.sigma * f - (f * x.sigma).scaled(x.base.datum().parity_sign(i));
}

SpanComplex bec_hom(const BecObject& x, const BecObject& y)
{
    const auto& dt = x.base.datum();
    const GradedModule &xm = x.base.module.base, &ym = y.base.module.base;
    return build_complex(
        dt, x.base.field(), negated(hom_degree_range(xm.degrees, ym.degrees, dt), dt),
        [&](int i) {
            int n = dt.reduce(-static_cast<long long>(i));
            return constrained_span(hom_graded(xm, ym, n),
                                    {[&, n](const Matrix& f) { return d_hom(x.base, y.base, n, f); }});
        },
        [&](int i, const Matrix& f) { return d_bec(x, y, i, f); });
}

bool is_bec_morphism(const BecObject& x, const BecObject& y, const Matrix& f)
{
    return is_closed(x.base, y.base, 0, f) && y.sigma * f == f * x.sigma;
}

PhiData phi(const DgObject& a)
{
    DgObject s = shift(a, -1).object;
    ConeData c = cone(s, s, Matrix::identity(a.field(), a.dim()));
    const Field& f = a.field();
    const std::size_t n = a.dim();
    PhiData p;
    p.object = {c.object, c.iota_p * c.pi_p};
    p.iota = col_block(f, n, n, true);
    p.iota_p = col_block(f, n, n, false);
    p.pi = p.iota_p.transpose();
    p.pi_p = p.iota.transpose();
    return p;
}

DgObject psi_plus(const BecObject& x) { return x.base; }

DgObject psi_minus(const BecObject& x) { return shift(x.base, 1).object; }

Matrix becbec_map(const DgObject& a, const DgObject& b, int i, const Matrix& f)
{
    PhiData pa = phi(a), pb = phi(b);
    Matrix df = d_hom(a, b, i, f);
    return (pb.iota_p * f * pa.pi).scaled(a.datum().parity_sign(i)) + pb.iota * f * pa.pi_p +
           pb.iota_p * df * pa.pi_p;
}

Matrix becbec_preimage(const DgObject& a, const DgObject& b, const Matrix& g)
{
    return phi(b).pi_p * g * phi(a).iota;
}

Matrix phi_tilde(const DgObject& a, const DgObject& b, const Matrix& f) { return becbec_map(a, b, 0, f); }

Matrix adj_left(const BecObject& x, const DgObject& a, const Matrix& f)
{
    PhiData p = phi(a);
    return p.iota_p * f + p.iota * f * x.sigma;
}

Matrix adj_left_inverse(const DgObject& a, const Matrix& g) { return phi(a).pi * g; }

Matrix adj_right(const DgObject& a, const BecObject& x, const Matrix& f)
{
    PhiData p = phi(a);
    return f * p.pi_p + x.sigma * f * p.pi;
}

Matrix adj_right_inverse(const DgObject& a, const Matrix& g) { return g * phi(a).iota; }

XiData xi(const DgObject& a)
{
    PhiData p = phi(a);
    return {p.object.base, shift(a, -1).object, p.iota, p.pi};
}

Matrix xi_map(const Matrix& f) { return Matrix::direct_sum(f, f); }

Matrix xi_nat_iso(const DgObject& a) { return Matrix::identity(a.field(), 2 * a.dim()); }

Report check_becbec(const BecBecObject& w)
{
    Report r = check_object(w.base);
    if (!r.empty()) return r;
    const DgObject& b = w.base;
    if (!is_morphism(b, b, -1, w.sigma)) return {"sigma not a morphism of degree -1"};
    if (!is_morphism(b, b, 1, w.tau)) return {"tau not a morphism of degree 1"};
    if (!(w.sigma * w.sigma).is_zero()) r.push_back("sigma^2 != 0");
    if (!(w.tau * w.tau).is_zero()) r.push_back("tau^2 != 0");
    if (!(w.sigma * w.tau + w.tau * w.sigma).is_identity()) r.push_back("sigma tau + tau sigma != id");
    if (!d_hom(b, b, -1, w.sigma).is_identity()) r.push_back("d(sigma) != id");
    if (!d_hom(b, b, 1, w.tau).is_zero()) r.push_back("d(tau) != 0");
    return r;
}

BecBecObject becbec(const DgObject& a)
{
    PhiData p = phi(a);
    return {p.object.base, p.object.sigma, p.iota * p.pi};
}

Matrix d_becbec(const BecBecObject& u, const BecBecObject& v, int i, const Matrix& f)
{
    return v.tau * f - (f * u.tau).scaled(u.base.datum().parity_sign(i));
}

SpanComplex becbec_hom(const BecBecObject& u, const BecBecObject& v)
{
    const auto& dt = u.base.datum();
    const GradedModule &um = u.base.module.base, &vm = v.base.module.base;
    return build_complex(
        dt, u.base.field(), hom_degree_range(um.degrees, vm.degrees, dt),
        [&](int i) {
            return constrained_span(
                hom_graded(um, vm, i),
                {[&, i](const Matrix& f) { return d_hom(u.base, v.base, i, f); },
                 [&, i](const Matrix& f) {
                     return v.sigma * f - (f * u.sigma).scaled(dt.parity_sign(i));
                 }});
        },
        [&](int i, const Matrix& f) { return d_becbec(u, v, i, f); });
}

BecBecInverse becbec_inverse(const BecBecObject& w)
{
    Report r = check_becbec(w);
    if (!r.empty()) throw DgError("not a bec-bec object: " + r.front());
    DgObject u = twist(w.base, -w.tau);
    BecBecInverse inv;
    inv.idempotent = w.sigma * w.tau;
    auto [p, i] = split_idempotent(inv.idempotent);
    inv.object = image_object(u, u.module.d, p, i);
    PhiData pa = phi(inv.object);
    inv.iso = i * pa.pi + w.tau * i * pa.pi_p;
    return inv;
}

namespace {

BecObject upsilon(const RingPtr& ring, const GradedModule& m, Instance inst)
{
    CdgModule g = g_plus(ring, m).object;
    const std::size_t n = m.dim();
    Matrix s(ring->field(), 2 * n, 2 * n);
    s.set_block(0, n, Matrix::identity(ring->field(), n));
    DgObject x = inst == Instance::Complex ? complex_object(std::move(g)) : cdg_object(std::move(g));
    return {x, s};
}

}  // namespace

BecObject upsilon_cdg(const RingPtr& ring, const GradedModule& m) { return upsilon(ring, m, Instance::CdgMod); }

BecObject upsilon_complexes(const RingPtr& ring, const GradedModule& m)
{
    return upsilon(ring, m, Instance::Complex);
}

Matrix upsilon_map(const Matrix& f) { return Matrix::direct_sum(f, f); }

UpsilonRecovery upsilon_recover(const BecObject& x)
{
    UpsilonRecovery r;
    r.idempotent = x.sigma * x.base.module.d;
    auto [p, i] = split_idempotent(r.idempotent);
    r.module = image_object(x.base, x.base.module.d, p, i).module.base;
    r.iso = gplus_transport(r.module, x.base.module, i);
    return r;
}

CompositionIso difficult_composition_iso(const BecObject& x)
{
    const DgObject& a = x.base;
    const Field& f = a.field();
    const std::size_t n = a.dim();
    ConeData c = cone(a, a, Matrix::identity(f, n));
    CompositionIso r;
    r.e_obj = {c.object, c.iota_p * c.pi_p, c.iota * c.pi};
    // S = X + X[1] with closed structure maps of the same block shape
    const Matrix &io = c.iota, &pi = c.pi, &iop = c.iota_p, &pip = c.pi_p;
    const Matrix& sg = x.sigma;
    r.s_obj.base = direct_sum(a, shift(a, 1).object);
    r.s_obj.sigma = -(iop * sg * pi) + io * sg * pip + iop * pip;
    r.s_obj.tau = io * pi;
    r.s = iop * pi + io * pip + io * sg * pi;
    r.e = iop * pi + io * pip - io * sg * pi;
    return r;
}

Report nat_iso_suite(const std::vector<BecObject>& objects)
{
    Report rep;
    auto fail = [&](std::size_t k, const std::string& what) {
        rep.push_back("object " + std::to_string(k) + ": " + what);
    };
    std::vector<CompositionIso> isos;
    for (std::size_t k = 0; k < objects.size(); ++k) {
        const BecObject& x = objects[k];
        if (!check_bec(x).empty()) {
            fail(k, "invalid bec object");
            isos.push_back({});
            continue;
        }
        CompositionIso c = difficult_composition_iso(x);
        isos.push_back(c);
        if (!(becbec(psi_minus(x)) == c.e_obj)) fail(k, "becbec(Psi-(X)) differs from cone(id_X)");
        if (!check_becbec(c.e_obj).empty()) fail(k, "E is not a bec-bec object");
        if (!check_becbec(c.s_obj).empty()) fail(k, "S is not a bec-bec object");
        const DgObject &e = c.e_obj.base, &s = c.s_obj.base;
        if (!is_closed(e, s, 0, c.s) || !is_closed(s, e, 0, c.e)) fail(k, "s or e not closed");
        if (!(c.e * c.s).is_identity() || !(c.s * c.e).is_identity()) fail(k, "s and e not inverse");
        if (c.s_obj.sigma * c.s != c.s * c.e_obj.sigma) fail(k, "s does not commute with sigma");
        if (c.s_obj.tau * c.s != c.s * c.e_obj.tau) fail(k, "s does not commute with tau");
        // Psi+ of becbec(A) is Phi(A) on the nose; Psi+ Phi(A) is Xi(A)
        const DgObject& b = x.base;
        BecBecObject bb = becbec(b);
        PhiData p = phi(b);
        if (!(bb.base == p.object.base) || bb.sigma != p.object.sigma) fail(k, "Psi+ becbec(A) != Phi(A)");
        if (!(psi_plus(p.object) == xi(b).object) || !xi_nat_iso(b).is_identity()) fail(k, "Psi+ Phi(A) != Xi(A)");
    }
    for (std::size_t k = 0; k < objects.size(); ++k) {
        for (std::size_t l : {k, (k + 1) % objects.size()}) {
            const BecObject &x = objects[k], &y = objects[l];
            if (x.base.instance != y.base.instance || x.base.ring() != y.base.ring()) continue;
            if (!check_bec(x).empty() || !check_bec(y).empty()) continue;
            const CompositionIso &cx = isos[k], &cy = isos[l];
            for (const Matrix& z : cocycles(x.base, y.base, 0)) {
                PhiData pe = phi(shift(x.base, 1).object), pf = phi(shift(y.base, 1).object);
                Matrix g = pf.iota_p * z * pe.pi + pf.iota * z * pe.pi_p;
                if (g != becbec_map(shift(x.base, 1).object, shift(y.base, 1).object, 0, z))
                    fail(k, "becbec(z) formula mismatch");
                Matrix u = pf.iota_p * z * pe.pi + pf.iota * z * pe.pi_p + pf.iota * (y.sigma * z - z * x.sigma) * pe.pi;
                if (cy.s * g != u * cx.s) fail(k, "naturality square t g = u s fails");
                if (!is_closed(cx.s_obj.base, cy.s_obj.base, 0, u)) fail(k, "Phi-tilde(z) not closed");
                if (cy.s_obj.sigma * u != u * cx.s_obj.sigma || cy.s_obj.tau * u != u * cx.s_obj.tau)
                    fail(k, "Phi-tilde(z) not compatible with sigma and tau");
                if (xi_map(z) * xi_nat_iso(x.base) != xi_nat_iso(y.base) * becbec_map(x.base, y.base, 0, z))
                    fail(k, "Xi naturality fails");
            }
        }
    }
    return rep;
}

}  // namespace dgbec
