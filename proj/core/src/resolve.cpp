#include "dgbec/resolve.hpp"

#include <set>

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

Matrix id(const DgObject& x) { return Matrix::identity(x.field(), x.dim()); }
Matrix idm(const GradedModule& m) { return Matrix::identity(m.field(), m.dim()); }
Matrix zeros(const Field& f, std::size_t r, std::size_t c) { return Matrix(f, r, c); }

int sign(const GradingDatum& dt, int n) { return dt.parity_sign(n); }

// Unknowns u with basis b_u, equations sum_u apply(u, x_u) = rhs.
struct Unknown {
    std::vector<Matrix> basis;
    Matrix zero;
};
using Apply = std::function<std::vector<Matrix>(std::size_t, const Matrix&)>;

std::optional<std::vector<Matrix>> solve_system(const std::vector<Unknown>& unknowns, const Apply& apply,
                                                const std::vector<Matrix>& rhs)
{
    const Field& f = rhs.front().field();
    std::size_t rows = 0;
    for (auto& r : rhs) rows += r.rows() * r.cols();
    std::size_t cols = 0;
    for (auto& u : unknowns) cols += u.basis.size();
    Matrix b(f, rows, 1);
    {
        std::size_t off = 0;
        for (auto& r : rhs) {
            b.set_block(off, 0, vec(r));
            off += r.rows() * r.cols();
        }
    }
    std::vector<Matrix> out;
    for (auto& u : unknowns) out.push_back(u.zero);
    if (cols == 0) {
        if (!b.is_zero()) return std::nullopt;
        return out;
    }
    Matrix a(f, rows, cols);
    std::size_t c = 0;
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
        for (auto& e : unknowns[k].basis) {
            auto parts = apply(k, e);
            std::size_t off = 0;
            for (auto& p : parts) {
                a.set_block(off, c, vec(p));
                off += p.rows() * p.cols();
            }
            ++c;
        }
    }
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    c = 0;
    for (std::size_t k = 0; k < unknowns.size(); ++k)
        for (auto& e : unknowns[k].basis) {
            if (!x->is_zero_at(c, 0)) out[k] += e.scaled(x->at(c, 0));
            ++c;
        }
    return out;
}

// Some x in h with apply(x) = target.
std::optional<Matrix> solve_in(const HomSpace& h, const std::function<Matrix(const Matrix&)>& fn,
                               const Matrix& target)
{
    Unknown u{h.basis, Matrix(h.field, h.rows, h.cols)};
    auto r = solve_system({u}, [&](std::size_t, const Matrix& b) { return std::vector<Matrix>{fn(b)}; }, {target});
    if (!r) return std::nullopt;
    return r->front();
}

DgObject make_object(Instance inst, CdgModule m)
{
    return inst == Instance::Complex ? complex_object(std::move(m)) : cdg_object(std::move(m));
}

BecObject upsilon_for(Instance inst, const RingPtr& ring, const GradedModule& m)
{
    return inst == Instance::Complex ? upsilon_complexes(ring, m) : upsilon_cdg(ring, m);
}

Matrix block_piece(const Field& f, std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0,
                   const Matrix& m)
{
    Matrix p(f, rows, cols);
    p.set_block(r0, c0, m);
    return p;
}

// 0 -> in -> term -> out -> 0 exactness along a sequence with zero ends.
bool exact_sequence(const std::vector<std::vector<int>>& degs, const std::vector<Matrix>& maps, const Field& f)
{
    const std::size_t n = degs.size();
    if (maps.size() + 1 != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix in = i == 0 ? Matrix(f, degs[0].size(), 0) : maps[i - 1];
        Matrix out = i + 1 == n ? Matrix(f, 0, degs[i].size()) : maps[i];
        const std::vector<int> none;
        if (!exact_at(in, out, i == 0 ? none : degs[i - 1], degs[i], i + 1 == n ? none : degs[i + 1])) return false;
    }
    return true;
}

struct Z0Pullback {
    DgObject object;
    Matrix to_a, to_b;
};
Z0Pullback z0_pullback(const DgObject& a, const DgObject& b, const DgObject& z, const Matrix& f, const Matrix& g)
{
    DgObject s = direct_sum(a, b);
    Z0Kernel k = z0_kernel(s, z, Matrix::hstack(f, -g));
    const Field& fl = a.field();
    Matrix pa = Matrix::hstack(Matrix::identity(fl, a.dim()), Matrix(fl, a.dim(), b.dim()));
    Matrix pb = Matrix::hstack(Matrix(fl, b.dim(), a.dim()), Matrix::identity(fl, b.dim()));
    return {k.object, pa * k.incl, pb * k.incl};
}

}  // namespace

bool is_z0_exact(const ExactComplex& s)
{
    if (s.terms.empty() || s.maps.size() + 1 != s.terms.size()) return false;
    for (std::size_t i = 0; i < s.maps.size(); ++i)
        if (!is_closed(s.terms[i], s.terms[i + 1], 0, s.maps[i])) return false;
    std::vector<std::vector<int>> degs;
    for (auto& t : s.terms) degs.push_back(t.degrees());
    return exact_sequence(degs, s.maps, s.terms[0].field());
}

TotData tot_of(const ExactComplex& s, int start) { return tot(s.terms, s.maps, start); }

bool check_ses(const Ses& s) { return z0_ses_check(s.u, s.v, s.w, s.j, s.k); }

const char* witness_kind_name(WitnessKind k)
{
    switch (k) {
    case WitnessKind::Zero: return "zero";
    case WitnessKind::Leaf: return "leaf";
    case WitnessKind::Shift: return "shift";
    case WitnessKind::Cone: return "cone";
    case WitnessKind::Summand: return "summand";
    case WitnessKind::HomotopyEquivalence: return "equivalence";
    }
    return "?";
}

int AcyclicityWitness::depth() const
{
    switch (kind) {
    case WitnessKind::Zero: return 0;
    case WitnessKind::Leaf: return 1;
    case WitnessKind::Cone: return children.at(0).depth() + children.at(1).depth();
    default: return children.at(0).depth();
    }
}

std::size_t AcyclicityWitness::node_count() const
{
    std::size_t n = 1;
    for (auto& c : children) n += c.node_count();
    return n;
}

namespace {

void validate_into(const AcyclicityWitness& w, const std::string& path, Report& rep)
{
    auto fail = [&](const std::string& what) { rep.push_back(path + ": " + what); };
    auto need = [&](std::size_t n) {
        if (w.children.size() != n) {
            fail("expected " + std::to_string(n) + " children");
            return false;
        }
        return true;
    };
    const DgObject& x = w.object;
    try {
        switch (w.kind) {
        case WitnessKind::Zero:
            if (!need(0)) return;
            if (x.dim() != 0) fail("zero node on a nonzero object");
            break;
        case WitnessKind::Leaf:
            if (!need(0)) return;
            if (!check_ses(w.ses)) {
                fail("sequence is not Z0-exact");
                return;
            }
            if (!(tot_of(w.ses.complex(), w.start).object == x)) fail("object is not the totalization");
            break;
        case WitnessKind::Shift:
            if (!need(1)) return;
            if (!(shift(w.children[0].object, w.shift).object == x)) fail("object is not the shift");
            break;
        case WitnessKind::Cone: {
            if (!need(2)) return;
            const DgObject &a = w.children[0].object, &b = w.children[1].object;
            if (!is_closed(a, b, 0, w.map)) {
                fail("cone map not closed");
                return;
            }
            if (!(cone(a, b, w.map).object == x)) fail("object is not the cone");
            break;
        }
        case WitnessKind::Summand: {
            if (!need(1)) return;
            const DgObject& z = w.children[0].object;
            if (!is_closed(x, z, 0, w.incl)) fail("inclusion not closed");
            else if (!is_closed(z, x, 0, w.proj)) fail("projection not closed");
            else if (!is_morphism(x, x, -1, w.homotopy) ||
                     d_hom(x, x, -1, w.homotopy) != id(x) - w.proj * w.incl)
                fail("summand homotopy fails");
            break;
        }
        case WitnessKind::HomotopyEquivalence: {
            if (!need(1)) return;
            const DgObject& z = w.children[0].object;
            if (!is_closed(x, z, 0, w.u)) fail("u not closed");
            else if (!is_closed(z, x, 0, w.v)) fail("v not closed");
            else if (!is_morphism(x, x, -1, w.h1) || d_hom(x, x, -1, w.h1) != id(x) - w.v * w.u)
                fail("first homotopy fails");
            else if (!is_morphism(z, z, -1, w.h2) || d_hom(z, z, -1, w.h2) != id(z) - w.u * w.v)
                fail("second homotopy fails");
            break;
        }
        }
    } catch (const std::exception& e) {
        fail(e.what());
        return;
    }
    for (std::size_t i = 0; i < w.children.size(); ++i)
        validate_into(w.children[i], path + "/" + std::to_string(i) + ":" + witness_kind_name(w.children[i].kind),
                      rep);
}

}  // namespace

Report validate_witness(const AcyclicityWitness& w)
{
    Report rep;
    validate_into(w, witness_kind_name(w.kind), rep);
    return rep;
}

AcyclicityWitness zero_witness(const DgObject& zero)
{
    AcyclicityWitness w;
    w.kind = WitnessKind::Zero;
    w.object = zero;
    return w;
}

AcyclicityWitness leaf_witness(const Ses& s, int start)
{
    AcyclicityWitness w;
    w.kind = WitnessKind::Leaf;
    w.ses = s;
    w.start = start;
    w.object = tot_of(s.complex(), start).object;
    return w;
}

AcyclicityWitness contractible_witness(const DgObject& x, const Matrix& contraction)
{
    const Field& f = x.field();
    AcyclicityWitness w;
    w.kind = WitnessKind::HomotopyEquivalence;
    w.object = x;
    w.children.push_back(zero_witness(zero_object(x.instance, x.ring())));
    w.u = Matrix(f, 0, x.dim());
    w.v = Matrix(f, x.dim(), 0);
    w.h1 = contraction;
    w.h2 = Matrix(f, 0, 0);
    return w;
}

std::optional<Matrix> signed_combination(const DgObject& x, const DgObject& y, const std::vector<Matrix>& pieces,
                                         bool require_iso)
{
    const std::size_t k = pieces.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Matrix m(x.field(), y.dim(), x.dim());
        for (std::size_t i = 0; i < k; ++i) m += (mask >> i) & 1 ? -pieces[i] : pieces[i];
        if (require_iso ? is_closed_iso(x, y, m) : is_closed(x, y, 0, m)) return m;
    }
    return std::nullopt;
}

std::optional<HomotopyInverse> find_homotopy_inverse(const DgObject& x, const DgObject& y, const Matrix& u)
{
    const Field& f = x.field();
    HomSpace hv = hom_graded(y.module.base, x.module.base, 0);
    HomSpace h1 = hom_graded(x.module.base, x.module.base, -1);
    HomSpace h2 = hom_graded(y.module.base, y.module.base, -1);
    std::vector<Unknown> unknowns = {{hv.basis, Matrix(f, x.dim(), y.dim())},
                                     {h1.basis, Matrix(f, x.dim(), x.dim())},
                                     {h2.basis, Matrix(f, y.dim(), y.dim())}};
    Matrix z1(f, x.dim(), y.dim()), zx(f, x.dim(), x.dim()), zy(f, y.dim(), y.dim());
    Apply apply = [&](std::size_t k, const Matrix& b) -> std::vector<Matrix> {
        if (k == 0) return {d_hom(y, x, 0, b), b * u, u * b};
        if (k == 1) return {z1, d_hom(x, x, -1, b), zy};
        return {z1, zx, d_hom(y, y, -1, b)};
    };
    auto r = solve_system(unknowns, apply, {z1, id(x), id(y)});
    if (!r) return std::nullopt;
    return HomotopyInverse{(*r)[0], (*r)[1], (*r)[2]};
}

TotWitness tot_exact_witness(const ExactComplex& s, int start)
{
    if (!is_z0_exact(s)) throw DgError("not exact");
    TotWitness out;
    out.tot = tot_of(s, start);
    const DgObject& t = out.tot.object;
    const Field& f = t.field();
    const std::size_t m = s.terms.size() - 1;
    if (m == 0) {
        out.witness = zero_witness(t);
        return out;
    }
    if (m == 1) {
        Matrix inv = *inverse(s.maps[0]);
        Matrix h = block_piece(f, t.dim(), t.dim(), out.tot.offsets[0], out.tot.offsets[1], inv);
        for (int c : {1, -1}) {
            Matrix hc = h.scaled(c);
            if (d_hom(t, t, -1, hc).is_identity()) {
                out.witness = contractible_witness(t, hc);
                return out;
            }
        }
        throw DgError("two-term contraction failed");
    }
    if (m == 2) {
        out.witness = leaf_witness({s.terms[0], s.terms[1], s.terms[2], s.maps[0], s.maps[1]}, start);
        return out;
    }
    // splice off the last short exact sequence and recurse
    const DgObject& xm1 = s.terms[m - 1];
    Z0Kernel kk = z0_kernel(xm1, s.terms[m], s.maps[m - 1]);
    Matrix eps = left_inverse(kk.incl) * s.maps[m - 2];
    if (kk.incl * eps != s.maps[m - 2]) throw DgError("image and kernel differ");
    ExactComplex a;
    for (std::size_t i = 0; i + 1 < m; ++i) a.terms.push_back(s.terms[i]);
    a.terms.push_back(kk.object);
    for (std::size_t i = 0; i + 2 < m; ++i) a.maps.push_back(s.maps[i]);
    a.maps.push_back(eps);
    TotWitness wa = tot_exact_witness(a, start);
    Ses b{kk.object, xm1, s.terms[m], kk.incl, s.maps[m - 1]};
    const int sb = start + static_cast<int>(m) - 1;
    TotData tb = tot_of(b.complex(), sb);
    const DgObject& ta = wa.tot.object;
    Matrix theta = block_piece(f, ta.dim(), tb.object.dim(), wa.tot.offsets[m - 1], tb.offsets[0],
                               Matrix::identity(f, kk.object.dim()));
    ConeData cd = cone(tb.object, ta, theta);
    const std::size_t na = ta.dim(), nc = cd.object.dim(), nt = t.dim();
    std::vector<Matrix> pieces;
    for (std::size_t i = 0; i + 1 < m; ++i)
        pieces.push_back(block_piece(f, nc, nt, wa.tot.offsets[i], out.tot.offsets[i],
                                     Matrix::identity(f, s.terms[i].dim())));
    pieces.push_back(block_piece(f, nc, nt, na + tb.offsets[1], out.tot.offsets[m - 1],
                                 Matrix::identity(f, xm1.dim())));
    pieces.push_back(block_piece(f, nc, nt, na + tb.offsets[2], out.tot.offsets[m],
                                 Matrix::identity(f, s.terms[m].dim())));
    pieces.push_back(block_piece(f, nc, nt, na + tb.offsets[0], out.tot.offsets[m - 2], eps));
    auto u = signed_combination(t, cd.object, pieces, false);
    if (!u) throw DgError("no closed comparison map");
    // retraction: transposed identity blocks with the signs of u, kappa on the K block of Tot(A)
    struct Block {
        std::size_t c, o, n;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i + 1 < m; ++i) blocks.push_back({wa.tot.offsets[i], out.tot.offsets[i], s.terms[i].dim()});
    blocks.push_back({na + tb.offsets[1], out.tot.offsets[m - 1], xm1.dim()});
    blocks.push_back({na + tb.offsets[2], out.tot.offsets[m], s.terms[m].dim()});
    Matrix v0(f, nt, nc);
    for (const Block& bl : blocks)
        if (bl.n > 0)
            v0 += block_piece(f, nt, nc, bl.o, bl.c, Matrix::identity(f, bl.n)).scaled(u->at(bl.c, bl.o));
    Matrix kap = block_piece(f, nt, nc, out.tot.offsets[m - 1], wa.tot.offsets[m - 1], kk.incl);
    std::optional<Matrix> v;
    for (int c : {1, -1}) {
        Matrix vc = v0 + kap.scaled(c);
        if (is_closed(cd.object, t, 0, vc) && (vc * *u).is_identity()) {
            v = vc;
            break;
        }
    }
    if (!v) throw DgError("no closed retraction onto the totalization");
    AcyclicityWitness cw;
    cw.kind = WitnessKind::Cone;
    cw.object = cd.object;
    cw.map = theta;
    cw.children = {leaf_witness(b, sb), wa.witness};
    AcyclicityWitness sw;
    sw.kind = WitnessKind::Summand;
    sw.object = t;
    sw.incl = *u;
    sw.proj = *v;
    sw.homotopy = Matrix(f, nt, nt);
    sw.children = {std::move(cw)};
    out.witness = std::move(sw);
    return out;
}

bool graded_projective(const GradedModule& m)
{
    FreeCover fc = free_cover(m);
    HomSpace h = hom_graded(m, fc.free, 0);
    return solve_in(h, [&](const Matrix& s) { return fc.epi * s; }, idm(m)).has_value();
}

CoInduced coinduced(const GradedModule& m)
{
    const auto& alg = *m.alg;
    const auto& dt = alg.datum();
    const Field& f = m.field();
    const std::size_t na = alg.dim(), nm = m.dim();
    CoInduced c;
    c.module.alg = m.alg;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < nm; ++k)
            c.module.degrees.push_back(dt.normalize(static_cast<long long>(m.degrees[k]) - alg.degree(i)));
    for (std::size_t a = 0; a < na; ++a) {
        Matrix r = alg.right_mult(alg.basis_vector(a));
        Matrix act(f, na * nm, na * nm);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                if (!r.is_zero_at(i, j))
                    for (std::size_t k = 0; k < nm; ++k) act.set(j * nm + k, i * nm + k, r.at(i, j));
        c.module.act.push_back(std::move(act));
    }
    c.unit = Matrix(f, na * nm, nm);
    for (std::size_t j = 0; j < na; ++j)
        for (std::size_t k = 0; k < nm; ++k)
            for (std::size_t l = 0; l < nm; ++l)
                if (!m.act[j].is_zero_at(k, l)) c.unit.set(j * nm + k, l, m.act[j].at(k, l));
    return c;
}

bool graded_injective(const GradedModule& m)
{
    CoInduced c = coinduced(m);
    HomSpace h = hom_graded(c.module, m, 0);
    return solve_in(h, [&](const Matrix& r) { return r * c.unit; }, idm(m)).has_value();
}

Matrix gminus_transport(const GradedModule& m, const CdgModule& b, const Matrix& g)
{
    if (g.rows() != m.dim() || g.cols() != b.dim()) throw ShapeError("gminus_transport: map shape");
    const auto& dt = m.datum();
    Matrix p(m.field(), m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) p.set(i, i, dt.parity_sign(m.degrees[i]));
    return Matrix::vstack(g, -(p * g * b.d));
}

Cover one_step_cover(const DgObject& b)
{
    FreeCover fc = free_cover(b.module.base);
    Cover c;
    c.graded = fc.free;
    c.object = make_object(b.instance, g_plus(b.ring(), fc.free).object);
    c.map = gplus_transport(fc.free, b.module, fc.epi);
    return c;
}

Cover one_step_embedding(const DgObject& a)
{
    CoInduced ci = coinduced(a.module.base);
    Cover c;
    c.graded = ci.module;
    c.object = make_object(a.instance, g_minus(a.ring(), ci.module).object);
    c.map = gminus_transport(ci.module, a.module, ci.unit);
    return c;
}

namespace {

// Closed iso from the cone of a resolution map to the totalization of the full complex,
// built from identity blocks with signs.
AcyclicityWitness cone_to_tot_witness(const ConeData& cd, const TotWitness& tw,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                                      const std::vector<std::size_t>& sizes)
{
    const DgObject& c = cd.object;
    const DgObject& t = tw.tot.object;
    const Field& f = c.field();
    std::vector<Matrix> pieces;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        pieces.push_back(
            block_piece(f, t.dim(), c.dim(), blocks[i].second, blocks[i].first, Matrix::identity(f, sizes[i])));
    auto iso = signed_combination(c, t, pieces, true);
    if (!iso) throw DgError("cone and totalization do not match");
    AcyclicityWitness w;
    w.kind = WitnessKind::HomotopyEquivalence;
    w.object = c;
    w.u = *iso;
    w.v = *inverse(*iso);
    w.h1 = Matrix(f, c.dim(), c.dim());
    w.h2 = Matrix(f, t.dim(), t.dim());
    w.children = {tw.witness};
    return w;
}

}  // namespace

Replacement graded_projective_replacement(const DgObject& b, std::size_t n)
{
    std::vector<DgObject> objs;  // P_0, P_1, ...
    std::vector<Matrix> down;    // P_i -> P_{i-1} (P_{-1} = B)
    DgObject cur = b;
    Matrix cur_incl = id(b);  // cur -> previous term
    std::size_t len = 0;
    while (!graded_projective(cur.module.base)) {
        if (len == n) throw DgError("stage-n kernel not projective");
        Cover c = one_step_cover(cur);
        Z0Kernel k = z0_kernel(c.object, cur, c.map);
        objs.push_back(c.object);
        down.push_back(cur_incl * c.map);
        cur = k.object;
        cur_incl = k.incl;
        ++len;
    }
    objs.push_back(cur);
    down.push_back(cur_incl);
    // complex P_len -> ... -> P_0 -> B
    Replacement r;
    r.length = len;
    for (std::size_t i = objs.size(); i-- > 0;) r.complex.terms.push_back(objs[i]);
    r.complex.terms.push_back(b);
    for (std::size_t i = objs.size(); i-- > 0;) r.complex.maps.push_back(down[i]);
    ExactComplex res{{r.complex.terms.begin(), r.complex.terms.end() - 1},
                     {r.complex.maps.begin(), r.complex.maps.end() - 1}};
    const int l = static_cast<int>(len);
    TotData tp = tot_of(res, -l);
    r.object = tp.object;
    const Field& f = b.field();
    r.map = block_piece(f, b.dim(), tp.object.dim(), 0, tp.offsets[len], r.complex.maps.back());
    if (!is_closed(r.object, b, 0, r.map)) throw DgError("replacement map not closed");
    r.cone = cone(r.object, b, r.map);
    TotWitness tw = tot_exact_witness(r.complex, -l - 1);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::vector<std::size_t> sizes;
    for (std::size_t j = 0; j <= len; ++j) {
        blocks.push_back({b.dim() + tp.offsets[j], tw.tot.offsets[j]});
        sizes.push_back(res.terms[j].dim());
    }
    blocks.push_back({0, tw.tot.offsets[len + 1]});
    sizes.push_back(b.dim());
    r.cone_witness = cone_to_tot_witness(r.cone, tw, blocks, sizes);
    return r;
}

Replacement graded_injective_replacement(const DgObject& b, std::size_t n)
{
    std::vector<DgObject> objs;  // J_0, J_1, ...
    std::vector<Matrix> up;      // previous term -> J_i (from B for i = 0)
    DgObject cur = b;
    Matrix cur_proj = id(b);  // previous term -> cur
    std::size_t len = 0;
    while (!graded_injective(cur.module.base)) {
        if (len == n) throw DgError("stage-n cokernel not injective");
        Cover c = one_step_embedding(cur);
        Z0Cokernel q = z0_cokernel(cur, c.object, c.map);
        objs.push_back(c.object);
        up.push_back(c.map * cur_proj);
        cur = q.object;
        cur_proj = q.proj;
        ++len;
    }
    objs.push_back(cur);
    up.push_back(cur_proj);
    Replacement r;
    r.length = len;
    r.complex.terms.push_back(b);
    for (auto& o : objs) r.complex.terms.push_back(o);
    r.complex.maps = up;
    ExactComplex res{{r.complex.terms.begin() + 1, r.complex.terms.end()},
                     {r.complex.maps.begin() + 1, r.complex.maps.end()}};
    TotData tj = tot_of(res, 0);
    r.object = tj.object;
    const Field& f = b.field();
    r.map = block_piece(f, tj.object.dim(), b.dim(), tj.offsets[0], 0, r.complex.maps.front());
    if (!is_closed(b, r.object, 0, r.map)) throw DgError("replacement map not closed");
    r.cone = cone(b, r.object, r.map);
    TotWitness tw = tot_exact_witness(r.complex, -1);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::vector<std::size_t> sizes;
    blocks.push_back({tj.object.dim(), tw.tot.offsets[0]});
    sizes.push_back(b.dim());
    for (std::size_t j = 0; j <= len; ++j) {
        blocks.push_back({tj.offsets[j], tw.tot.offsets[j + 1]});
        sizes.push_back(res.terms[j].dim());
    }
    r.cone_witness = cone_to_tot_witness(r.cone, tw, blocks, sizes);
    return r;
}

SemiorthogonalityCertificate semiorthogonality_check(const AcyclicityWitness& x, const DgObject& j)
{
    Report rep = validate_witness(x);
    if (!rep.empty()) throw DgError("witness check failed: " + rep.front());
    if (!graded_injective(j.module.base)) throw DgError("injectivity check failed");
    SemiorthogonalityCertificate c;
    for (auto& m : cocycles(x.object, j, 0)) {
        auto h = null_homotopy(x.object, j, 0, m);
        if (!h) throw DgError("closed morphism not null-homotopic");
        c.morphisms.push_back(m);
        c.homotopies.push_back(*h);
    }
    return c;
}

SemiorthogonalityCertificate semiorthogonality_check_projective(const DgObject& p, const AcyclicityWitness& x)
{
    Report rep = validate_witness(x);
    if (!rep.empty()) throw DgError("witness check failed: " + rep.front());
    if (!graded_projective(p.module.base)) throw DgError("projectivity check failed");
    SemiorthogonalityCertificate c;
    for (auto& m : cocycles(p, x.object, 0)) {
        auto h = null_homotopy(p, x.object, 0, m);
        if (!h) throw DgError("closed morphism not null-homotopic");
        c.morphisms.push_back(m);
        c.homotopies.push_back(*h);
    }
    return c;
}

Matrix tot_component(const TotData& t, std::size_t i, const Matrix& p)
{
    const std::size_t end = i + 1 < t.offsets.size() ? t.offsets[i + 1] : t.object.dim();
    return p.block(t.offsets[i], 0, end - t.offsets[i], p.cols());
}

Matrix tot_contracting_homotopy(const Ses& ses, int start, const DgObject& a, int n, const Matrix& p,
                                const Matrix& t)
{
    if (!check_ses(ses)) throw DgError("kernel condition fails");
    TotData tt = tot_of(ses.complex(), start);
    if (!is_closed(a, tt.object, n, p)) throw DgError("not closed");
    const auto& dt = a.datum();
    const int nn = n - start - 1;
    Matrix g = tot_component(tt, 1, p), h = tot_component(tt, 2, p);
    if (t.rows() != ses.v.dim() || t.cols() != a.dim() || !is_morphism(a, ses.v, nn - 1, t) || ses.k * t != h)
        throw DgError("lift invalid");
    Matrix rhs = d_hom(a, ses.v, nn - 1, t) - g;
    Matrix s = left_inverse(ses.j) * rhs;
    if (ses.j * s != rhs) throw DgError("kernel condition fails");
    Matrix hom = Matrix::vstack(Matrix::vstack(s, t), Matrix(a.field(), ses.w.dim(), a.dim()));
    hom = hom.scaled(sign(dt, start + 1));
    if (d_hom(a, tt.object, n - 1, hom) != p) throw DgError("homotopy check failed");
    return hom;
}

PsiPair psi_hom_forward(const BecObject& x, const DgObject& a, int n, const Matrix& f)
{
    return {f * x.sigma, d_hom(x.base, a, n, f) * x.sigma};
}

Matrix psi_hom_inverse(const BecObject& x, const DgObject& a, int n, const PsiPair& gh)
{
    const auto& dt = a.datum();
    return d_hom(x.base, a, n - 1, gh.g).scaled(sign(dt, n)) + gh.h.scaled(sign(dt, n + 1));
}

Matrix psi_to_bec(const BecObject& x, const DgObject& a, int m, const Matrix& g)
{
    PhiData pa = phi(a);
    return pa.iota * g + pa.iota_p * d_hom(x.base, a, m - 1, g);
}


PsiHomIso hom_from_psi_iso(const BecObject& x, const DgObject& a)
{
    const auto& dt = a.datum();
    const Field& f = a.field();
    const DgObject& y = x.base;
    auto s_span = [&](int m) {
        HomSpace h = hom_graded(y.module.base, a.module.base, m);
        return constrained_span(h, {[&](const Matrix& g) { return g * x.sigma; }});
    };
    std::set<int> degs;
    for (int r : hom_degree_range(y.degrees(), a.degrees(), dt)) {
        degs.insert(dt.reduce(r));
        degs.insert(dt.reduce(r + 1));
    }
    PsiHomIso out;
    for (int n : degs) {
        const std::string tag = "degree " + std::to_string(n) + ": ";
        HomSpace src = hom_graded(y.module.base, a.module.base, n);
        MatrixSpan s1 = s_span(n - 1), s0 = s_span(n);
        const std::size_t ns = src.dim(), nt = s1.dim() + s0.dim();
        Matrix fwd(f, nt, ns), inv(f, ns, nt);
        bool ok = true;
        for (std::size_t c = 0; c < ns; ++c) {
            PsiPair pr = psi_hom_forward(x, a, n, src.basis[c]);
            auto c1 = s1.coords(pr.g);
            auto c0 = s0.coords(pr.h);
            if (!c1 || !c0) {
                out.check.push_back(tag + "forward image outside S");
                ok = false;
                continue;
            }
            fwd.set_block(0, c, *c1);
            fwd.set_block(s1.dim(), c, *c0);
            Matrix df = d_hom(y, a, n, src.basis[c]);
            PsiPair pd = psi_hom_forward(x, a, n + 1, df);
            if (pd.g != pr.h || !pd.h.is_zero()) out.check.push_back(tag + "forward is not a chain map");
        }
        for (std::size_t c = 0; c < nt; ++c) {
            PsiPair gh = c < s1.dim() ? PsiPair{s1.basis[c], Matrix(f, a.dim(), y.dim())}
                                      : PsiPair{Matrix(f, a.dim(), y.dim()), s0.basis[c - s1.dim()]};
            Matrix g = psi_hom_inverse(x, a, n, gh);
            if (!src.contains(g)) {
                out.check.push_back(tag + "inverse image outside Hom");
                ok = false;
                continue;
            }
            inv.set_block(0, c, src.coords(g));
        }
        if (ok) {
            if (!(inv * fwd).is_identity()) out.check.push_back(tag + "inverse after forward is not the identity");
            if (!(fwd * inv).is_identity()) out.check.push_back(tag + "forward after inverse is not the identity");
        }
        if (ns != nt) out.check.push_back(tag + "dimensions differ");
        out.degrees.push_back(n);
        out.source_dims.push_back(ns);
        out.target_dims.push_back(nt);
        out.forward.push_back(std::move(fwd));
        out.inverse.push_back(std::move(inv));
    }
    return out;
}

Matrix lift_through_psi(const BecObject& x, const Ses& ses, int start, int n, const Matrix& ptilde, const Matrix& t)
{
    if (!check_ses(ses)) throw DgError("kernel condition fails");
    const DgObject& y = x.base;
    TotData tt = tot_of(ses.complex(), start);
    if (!is_closed(y, tt.object, n, ptilde)) throw DgError("not closed");
    const auto& dt = y.datum();
    const int nn = n - start - 1;
    Matrix g = tot_component(tt, 1, ptilde), h = tot_component(tt, 2, ptilde);
    Matrix t0 = phi(ses.v).pi_p * t;
    if (ses.k * t0 != h * x.sigma) throw DgError("lift invalid");
    Matrix lift = d_hom(y, ses.v, nn - 2, t0).scaled(sign(dt, nn - 1)) + (g * x.sigma).scaled(sign(dt, nn));
    if (ses.k * lift != h) throw DgError("lift check failed");
    return lift;
}

BecCover free_bec_cover(const BecObject& k)
{
    UpsilonRecovery u = upsilon_recover(k);
    FreeCover fc = free_cover(u.module);
    BecCover c;
    c.object = upsilon_for(k.base.instance, k.base.ring(), fc.free);
    c.map = u.iso * upsilon_map(fc.epi);
    return c;
}

namespace {

struct Core {
    BecObject l;
    Ses ses;  // R -> Y -> P
    ConeData c;
    Matrix q, homotopy;
};

// phi: P -> tot(ses, start) closed of degree 0.
Core descent_core(const DgObject& p, const Ses& ses, int start, const Matrix& phi_map, const CoverFn& cover)
{
    if (!check_ses(ses)) throw DgError("kernel condition fails");
    TotData tt = tot_of(ses.complex(), start);
    if (!is_closed(p, tt.object, 0, phi_map)) throw DgError("not closed");
    const auto& dt = p.datum();
    const Field& f = p.field();
    const int nn = -start - 1;
    Matrix g = tot_component(tt, 1, phi_map), h = tot_component(tt, 2, phi_map);
    DgObject w1 = shift(ses.w, nn - 1).object, v1 = shift(ses.v, nn - 1).object;
    PhiData pp = phi(p), pv = phi(v1), pw = phi(w1);
    Matrix ht = becbec_map(p, w1, 0, h);
    Matrix fk = Matrix::direct_sum(ses.k, ses.k);
    DgObject sum = direct_sum(pp.object.base, pv.object.base);
    Z0Kernel kk = z0_kernel(sum, pw.object.base, Matrix::hstack(ht, -fk));
    Matrix sig = Matrix::direct_sum(pp.object.sigma, pv.object.sigma);
    BecObject kb{kk.object, left_inverse(kk.incl) * sig * kk.incl};
    if (kk.incl * kb.sigma != sig * kk.incl || !check_bec(kb).empty()) throw DgError("pullback is not a bec object");
    BecCover lc = cover ? cover(kb) : free_bec_cover(kb);
    const std::size_t np = pp.object.base.dim(), nv = pv.object.base.dim();
    Matrix pr_p = Matrix::hstack(Matrix::identity(f, np), zeros(f, np, nv)) * kk.incl * lc.map;
    Matrix pr_v = Matrix::hstack(zeros(f, nv, np), Matrix::identity(f, nv)) * kk.incl * lc.map;
    const DgObject& y = lc.object.base;
    const Matrix& sy = lc.object.sigma;
    Matrix e = pp.pi * pr_p;
    if (!is_closed(y, p, 0, e) || rank(e) != p.dim()) throw DgError("cover does not reach P");
    Z0Kernel r = z0_kernel(y, p, e);
    Core out;
    out.l = lc.object;
    out.ses = {r.object, y, p, r.incl, e};
    out.c = cone(r.object, y, r.incl);
    out.q = e * out.c.pi_p;
    if (!is_closed(out.c.object, p, 0, out.q)) throw DgError("q not closed");
    Matrix t0 = pv.pi_p * pr_v;
    if (ses.k * t0 != h * e * sy) throw DgError("lift invalid");
    Matrix tl = d_hom(y, ses.v, nn - 2, t0).scaled(sign(dt, nn - 1)) + (g * e * sy).scaled(sign(dt, nn));
    if (ses.k * tl != h * e) throw DgError("lift check failed");
    out.homotopy = tot_contracting_homotopy(ses, start, out.c.object, 0, phi_map * out.q, tl * out.c.pi_p);
    return out;
}

// cone(q) for q: C -> P with C = cone(R -> Y) against the leaf of R -> Y -> P.
AcyclicityWitness approach_cone_witness(const ConeData& cq, const Ses& s)
{
    TotWitness tw{tot_of(s.complex(), -2), leaf_witness(s, -2)};
    const std::size_t np = s.w.dim(), ny = s.v.dim();
    return cone_to_tot_witness(cq, tw,
                               {{0, tw.tot.offsets[2]}, {np, tw.tot.offsets[1]}, {np + ny, tw.tot.offsets[0]}},
                               {np, ny, s.u.dim()});
}

}  // namespace

Approach approach(const DgObject& f, const Ses& ses, int start, const Matrix& phi_map, bool allow_fast_path,
                  const CoverFn& cover)
{
    if (!check_ses(ses)) throw DgError("kernel condition fails");
    TotData tt = tot_of(ses.complex(), start);
    if (!is_closed(f, tt.object, 0, phi_map)) throw DgError("not closed");
    const Field& fl = f.field();
    Approach out;
    if (allow_fast_path) {
        const int nn = -start - 1;
        Matrix h = tot_component(tt, 2, phi_map);
        HomSpace hs = hom_graded(f.module.base, ses.v.module.base, nn - 1);
        auto t = solve_in(hs, [&](const Matrix& m) { return ses.k * m; }, h);
        if (t) {
            out.fast_path = true;
            out.g = f;
            out.q = id(f);
            out.cone = cone(f, f, out.q);
            Ses s{zero_object(f.instance, f.ring()), f, f, Matrix(fl, f.dim(), 0), id(f)};
            out.cone_witness = approach_cone_witness(out.cone, s);
            out.homotopy = tot_contracting_homotopy(ses, start, f, 0, phi_map, *t);
            return out;
        }
    }
    Core c = descent_core(f, ses, start, phi_map, cover);
    out.g = c.c.object;
    out.q = c.q;
    out.cone = cone(out.g, f, out.q);
    out.cone_witness = approach_cone_witness(out.cone, c.ses);
    out.homotopy = c.homotopy;
    return out;
}

DgObject TriangleData::x() const { return tot_of(ses.complex(), start).object; }

ConeData TriangleData::cone() const { return dgbec::cone(x(), s, m); }

TriangleDescent triangle_descent(const TriangleData& tri, const DgObject& p, const Matrix& phi_map)
{
    ConeData cx = tri.cone();
    const DgObject& xo = cx.object;
    if (!is_closed(p, xo, 0, phi_map)) throw DgError("not closed");
    Core core = descent_core(p, tri.ses, tri.start - 1, cx.pi * phi_map, {});
    const DgObject& c = core.c.object;
    const Matrix& h1 = core.homotopy;
    Matrix g = cx.pi_p * phi_map * core.q - tri.m * h1;
    if (!is_closed(c, tri.s, 0, g)) throw DgError("composite not closed");
    const Matrix& sy = core.l.sigma;
    Matrix v = core.c.iota_p - core.c.iota * sy * core.ses.j;
    TriangleDescent out;
    out.ses = core.ses;
    out.k = core.l;
    out.c = core.c;
    out.q = core.q;
    out.r_shift = shift(core.ses.u, 1).object;
    out.r = g * v;
    if (!is_closed(out.r_shift, tri.s, 0, out.r)) throw DgError("r not closed");
    out.t_homotopy = h1;
    out.homotopy = cx.iota_p * h1 + cx.iota * g * core.c.iota * sy * core.c.pi_p;
    if (d_hom(c, xo, -1, out.homotopy) != phi_map * core.q - cx.iota * out.r * core.c.pi)
        throw DgError("pentagon check failed");
    return out;
}

namespace {

// Z_k -> ... -> Z_0 -> P exact, the last map listed last.
struct Tail {
    std::vector<DgObject> terms;
    std::vector<Matrix> maps;
};

Tail descend(const AcyclicityWitness& w, const DgObject& p, const Matrix& f)
{
    switch (w.kind) {
    case WitnessKind::Zero: return {{p}, {id(p)}};
    case WitnessKind::Leaf: {
        Core c = descent_core(p, w.ses, w.start, f, {});
        return {{c.ses.u, c.ses.v}, {c.ses.j, c.ses.k}};
    }
    case WitnessKind::Shift: {
        Tail t = descend(w.children.at(0), shift(p, -w.shift).object, f);
        for (auto& z : t.terms) z = shift(z, w.shift).object;
        return t;
    }
    case WitnessKind::Summand: return descend(w.children.at(0), p, w.incl * f);
    case WitnessKind::HomotopyEquivalence: return descend(w.children.at(0), p, w.u * f);
    case WitnessKind::Cone: {
        const AcyclicityWitness& xc = w.children.at(0);
        const AcyclicityWitness& yc = w.children.at(1);
        if (xc.kind == WitnessKind::Zero) {
            ConeData cd = cone(xc.object, yc.object, w.map);
            return descend(yc, p, cd.pi_p * f);
        }
        int k = 0;
        const AcyclicityWitness* leaf = &xc;
        if (xc.kind == WitnessKind::Shift && xc.children.at(0).kind == WitnessKind::Leaf) {
            k = xc.shift;
            leaf = &xc.children[0];
        } else if (xc.kind != WitnessKind::Leaf) {
            throw DgError("cone generator must be a leaf");
        }
        TriangleData tri{leaf->ses, leaf->start - k, yc.object, w.map};
        if (!(tri.x() == xc.object)) throw DgError("shifted leaf is not a totalization");
        TriangleDescent td = triangle_descent(tri, p, f);
        Tail t = descend(yc, td.r_shift, td.r);
        for (auto& z : t.terms) z = shift(z, -1).object;
        t.maps.back() = td.ses.j * t.maps.back();
        t.terms.push_back(td.ses.v);
        t.maps.push_back(td.ses.k);
        return t;
    }
    }
    throw DgError("unknown witness kind");
}

}  // namespace

Totalization witness_to_totalization(const AcyclicityWitness& w)
{
    Report rep = validate_witness(w);
    if (!rep.empty()) throw DgError("witness check failed: " + rep.front());
    const DgObject& x = w.object;
    const Field& fl = x.field();
    Tail t = descend(w, x, id(x));
    Totalization out;
    out.complex.terms = t.terms;
    out.complex.terms.push_back(x);
    out.complex.maps = t.maps;
    if (!is_z0_exact(out.complex)) throw DgError("descended complex not exact");
    const int k = static_cast<int>(t.terms.size());
    out.tot = tot_of(out.complex, -k);
    const DgObject& tob = out.tot.object;
    const std::size_t xo = out.tot.offsets[k];
    ExactComplex tail{t.terms, {t.maps.begin(), t.maps.end() - 1}};
    TotData ty = tot_of(tail, 1 - k);
    Matrix a = block_piece(fl, x.dim(), ty.object.dim(), 0, ty.offsets[k - 1], t.maps.back());
    if (!is_closed(ty.object, x, 0, a)) throw DgError("augmentation not closed");
    auto hn = null_homotopy(ty.object, x, 0, a);
    if (!hn) throw DgError("augmentation not null-homotopic");
    Matrix projx = block_piece(fl, x.dim(), tob.dim(), 0, xo, idm(x.module.base));
    Matrix projy = block_piece(fl, xo, tob.dim(), 0, 0, Matrix::identity(fl, xo));
    bool found = false;
    for (int c : {1, -1}) {
        Matrix pr = projx + (*hn * projy).scaled(c);
        if (is_closed(tob, x, 0, pr)) {
            out.proj = pr;
            found = true;
            break;
        }
    }
    if (!found) throw DgError("no closed retraction onto X");
    out.incl = block_piece(fl, tob.dim(), x.dim(), xo, 0, idm(x.module.base));
    out.idempotent = out.incl * out.proj;
    if (!(out.proj * out.incl).is_identity() || out.idempotent * out.idempotent != out.idempotent)
        throw DgError("idempotent check failed");
    return out;
}

AcyclicityWitness normalize_witness(const AcyclicityWitness& w)
{
    Totalization tz = witness_to_totalization(w);
    const int k = static_cast<int>(tz.complex.terms.size()) - 1;
    TotWitness tw = tot_exact_witness(tz.complex, -k);
    AcyclicityWitness out;
    out.kind = WitnessKind::Summand;
    out.object = w.object;
    out.incl = tz.incl;
    out.proj = tz.proj;
    out.homotopy = Matrix(w.object.field(), w.object.dim(), w.object.dim());
    out.children = {tw.witness};
    return out;
}

SpadeCover spade_cover(const DgObject& b, const GradedModule& k, const Matrix& e)
{
    const GradedModule& bs = b.module.base;
    if (e.rows() != bs.dim() || e.cols() != k.dim() || !check_map(GradedMap{k, bs, 0, e}).empty() ||
        rank(e) != bs.dim())
        throw DgError("e not epi");
    GModule gk = g_minus(b.ring(), k);
    DgObject gko = make_object(b.instance, gk.object);
    DgObject gbo = make_object(b.instance, g_minus(b.ring(), bs).object);
    Matrix ub = gminus_transport(bs, b.module, idm(bs));
    Z0Pullback pb = z0_pullback(b, gko, gbo, ub, Matrix::direct_sum(e, e));
    SpadeCover s;
    s.c = pb.object;
    s.epi = pb.to_a;
    s.to_k = gk.sequence.proj * pb.to_b;
    if (e * s.to_k != s.epi || rank(s.epi) != b.dim()) throw DgError("spade cover check failed");
    return s;
}

namespace {

std::vector<std::vector<int>> degrees_of(const std::vector<GradedModule>& terms)
{
    std::vector<std::vector<int>> d;
    for (auto& t : terms) d.push_back(t.degrees);
    return d;
}

// Some degree-0 graded m: src -> tgt with d m = rhs.
Matrix lift_along(const GradedModule& src, const Matrix& d, const GradedModule& tgt, const Matrix& rhs)
{
    HomSpace h = hom_graded(src, tgt, 0);
    auto s = solve_in(h, [&](const Matrix& m) { return d * m; }, rhs);
    if (!s) throw DgError("comparison lift failed");
    return *s;
}

std::optional<Matrix> extend_along(const GradedModule& src, const Matrix& w, const GradedModule& tgt,
                                   const Matrix& c)
{
    HomSpace h = hom_graded(src, tgt, 0);
    return solve_in(h, [&](const Matrix& b) { return b * w; }, c);
}

GradedModule direct_sum_all(const AlgebraPtr& alg, const std::vector<const GradedModule*>& ms)
{
    GradedModule s = zero_module(alg);
    for (auto* m : ms) s = direct_sum(s, *m);
    return s;
}

}  // namespace

bool is_exact(const NExtension& e)
{
    if (e.terms.size() < 3 || e.maps.size() + 1 != e.terms.size()) return false;
    for (std::size_t i = 0; i < e.maps.size(); ++i) {
        const Matrix& m = e.maps[i];
        if (m.rows() != e.terms[i + 1].dim() || m.cols() != e.terms[i].dim()) return false;
        if (!check_map(GradedMap{e.terms[i], e.terms[i + 1], 0, m}).empty()) return false;
    }
    return exact_sequence(degrees_of(e.terms), e.maps, e.terms[0].field());
}

Matrix cocycle_basis(const NExtension& e, std::size_t i)
{
    if (i == 0 || i > e.n()) throw ShapeError("cocycle_basis: index out of range");
    return kernel_of(e.d(i), e.a(i).degrees, e.a(i - 1).degrees).incl;
}

NExtension zero_extension(const GradedModule& y, const GradedModule& x, std::size_t n)
{
    if (n == 0) throw ShapeError("zero_extension: n must be positive");
    const Field& f = y.field();
    NExtension e;
    if (n == 1) {
        e.terms = {y, direct_sum(y, x), x};
        e.maps = {Matrix::vstack(idm(y), zeros(f, x.dim(), y.dim())),
                  Matrix::hstack(zeros(f, x.dim(), y.dim()), idm(x))};
        return e;
    }
    GradedModule z = zero_module(y.alg);
    e.terms.push_back(y);
    e.terms.push_back(y);
    for (std::size_t i = 2; i < n; ++i) e.terms.push_back(z);
    e.terms.push_back(x);
    e.terms.push_back(x);
    e.maps.push_back(idm(y));
    for (std::size_t p = 1; p < n; ++p) e.maps.push_back(zeros(f, e.terms[p + 1].dim(), e.terms[p].dim()));
    e.maps.push_back(idm(x));
    return e;
}

bool ext_class_oracle(const NExtension& e, std::uint64_t order_seed)
{
    const std::size_t n = e.n();
    ProjResolution r = proj_resolution(e.terms.back(), n, order_seed);
    Matrix alpha = lift_along(r.stages[0].free, e.d(1), e.a(1), r.stages[0].epi);
    for (std::size_t i = 1; i <= n; ++i)
        alpha = lift_along(r.stages[i].free, e.d(i + 1), e.a(i + 1), alpha * r.differentials[i - 1]);
    return extend_along(r.stages[n - 1].free, r.differentials[n - 1], e.terms.front(), alpha).has_value();
}

SplitResult ext_class_is_split(const NExtension& e)
{
    if (!is_exact(e)) throw DgError("not exact");
    SplitResult s;
    s.retraction = extend_along(e.a(e.n()), e.maps[0], e.terms[0], idm(e.terms[0]));
    s.split = ext_class_oracle(e, 0);
    if (s.retraction && !s.split) throw DgError("oracle disagrees with a retraction");
    if (e.n() == 1 && s.split && !s.retraction) throw DgError("oracle disagrees with a retraction");
    return s;
}

NExtension baer_sum(const NExtension& a, const NExtension& b)
{
    const std::size_t n = a.n();
    if (b.n() != n || !(a.terms.front() == b.terms.front()) || !(a.terms.back() == b.terms.back()))
        throw ShapeError("baer_sum: extensions differ in shape");
    const GradedModule &y = a.terms.front(), &x = a.terms.back();
    const Field& f = y.field();
    PullbackData pb = pullback(GradedMap{a.a(1), x, 0, a.d(1)}, GradedMap{b.a(1), x, 0, b.d(1)});
    Matrix pb_incl = Matrix::vstack(pb.to_a, pb.to_b);
    Matrix pb_ret = left_inverse(pb_incl);
    NExtension out;
    if (n == 1) {
        Matrix u = pb_ret * Matrix::vstack(a.d(2), -b.d(2));
        Quotient q = cokernel_of(u, y.degrees, pb.object.degrees);
        out.terms = {y, descend_module(pb.object, q), x};
        Matrix iy = q.proj * pb_ret * Matrix::vstack(a.d(2), zeros(f, b.a(1).dim(), y.dim()));
        out.maps = {iy, a.d(1) * pb.to_a * q.section};
    } else {
        PushoutData po = pushout(GradedMap{y, a.a(n), 0, a.d(n + 1)}, GradedMap{y, b.a(n), 0, b.d(n + 1)});
        Matrix po_sum = Matrix::hstack(po.from_a, po.from_b);
        out.terms.push_back(y);
        out.maps.push_back(po.from_a * a.d(n + 1));
        for (std::size_t i = n; i >= 1; --i) {
            if (i == n) out.terms.push_back(po.object);
            else if (i == 1) out.terms.push_back(pb.object);
            else out.terms.push_back(direct_sum(a.a(i), b.a(i)));
            if (i == 1) break;
            Matrix d = Matrix::direct_sum(a.d(i), b.d(i));
            if (i - 1 == 1) d = pb_ret * d;
            if (i == n) {
                auto g = solve_left(po_sum, d);
                if (!g) throw DgError("baer_sum: map does not descend to the pushout");
                d = *g;
            }
            out.maps.push_back(d);
        }
        out.terms.push_back(x);
        out.maps.push_back(a.d(1) * pb.to_a);
    }
    if (!is_exact(out)) throw DgError("baer_sum: result not exact");
    return out;
}

PushedExtension pushed_extension(const ProjResolution& r, std::size_t n, const GradedModule& y, const Matrix& c)
{
    if (n == 0 || r.stages.size() != n) throw ShapeError("pushed_extension: resolution length must be n - 1");
    const GradedModule& om = r.last_kernel.object;
    const Matrix& w = r.last_kernel.incl;
    const GradedModule& top = r.stages[n - 1].free;
    PushoutData po = pushout(GradedMap{om, top, 0, w}, GradedMap{om, y, 0, c});
    const Matrix& dd = n >= 2 ? r.differentials[n - 2] : r.stages[0].epi;
    auto g = solve_left(Matrix::hstack(po.from_a, po.from_b),
                        Matrix::hstack(dd, zeros(y.field(), dd.rows(), y.dim())));
    if (!g) throw DgError("pushed_extension: map does not descend");
    PushedExtension out;
    out.omega = om;
    out.from_a = po.from_a;
    out.from_b = po.from_b;
    NExtension& e = out.extension;
    e.terms = {y, po.object};
    e.maps = {po.from_b, *g};
    for (std::size_t i = n - 1; i-- > 0;) {
        e.terms.push_back(r.stages[i].free);
        e.maps.push_back(i >= 1 ? r.differentials[i - 1] : r.stages[0].epi);
    }
    e.terms.push_back(r.module);
    if (!is_exact(e)) throw DgError("pushed_extension: result not exact");
    out.class_zero = extend_along(top, w, y, c).has_value();
    return out;
}

bool is_elementary_equivalence(const NExtension& b, const NExtension& a, const ElementaryEquivalence& f)
{
    const std::size_t len = a.terms.size();
    if (b.terms.size() != len || f.size() != len) return false;
    if (!(a.terms.front() == b.terms.front()) || !(a.terms.back() == b.terms.back())) return false;
    if (!f.front().is_identity() || !f.back().is_identity()) return false;
    for (std::size_t p = 0; p < len; ++p) {
        if (f[p].rows() != a.terms[p].dim() || f[p].cols() != b.terms[p].dim()) return false;
        if (!check_map(GradedMap{b.terms[p], a.terms[p], 0, f[p]}).empty()) return false;
    }
    for (std::size_t p = 0; p + 1 < len; ++p)
        if (a.maps[p] * f[p] != f[p + 1] * b.maps[p]) return false;
    return true;
}

bool is_elementary_epimorphism(const NExtension& b, const NExtension& a, const ElementaryEquivalence& f)
{
    if (!is_elementary_equivalence(b, a, f)) return false;
    for (std::size_t p = 0; p < f.size(); ++p)
        if (rank(f[p]) != a.terms[p].dim()) return false;
    return true;
}

EpicEquivalence epic_elementary_equivalence(const NExtension& b, const NExtension& a, const ElementaryEquivalence& f)
{
    if (!is_exact(b) || !is_exact(a) || !is_elementary_equivalence(b, a, f))
        throw DgError("not an elementary equivalence");
    const std::size_t n = b.n();
    const Field& fl = a.terms[0].field();
    EpicEquivalence out;
    if (n == 1) {
        out.c = b;
        for (auto& t : b.terms) out.to_b.push_back(idm(t));
        out.to_a = f;
    } else {
        // C_i = B_i + A_i (i >= 2) + A_{i+1} (i <= n - 1)
        struct Slots {
            std::size_t nb, na_i, na_next;
        };
        std::vector<Slots> sl(n + 1);
        std::vector<GradedModule> cs(n + 1);
        for (std::size_t i = 1; i <= n; ++i) {
            std::vector<const GradedModule*> parts{&b.a(i)};
            sl[i] = {b.a(i).dim(), 0, 0};
            if (i >= 2) {
                parts.push_back(&a.a(i));
                sl[i].na_i = a.a(i).dim();
            }
            if (i + 1 <= n) {
                parts.push_back(&a.a(i + 1));
                sl[i].na_next = a.a(i + 1).dim();
            }
            cs[i] = direct_sum_all(a.terms[0].alg, parts);
        }
        NExtension& c = out.c;
        c.terms.push_back(b.terms.front());
        for (std::size_t i = n; i >= 1; --i) c.terms.push_back(cs[i]);
        c.terms.push_back(b.terms.back());
        c.maps.push_back(block_piece(fl, cs[n].dim(), b.terms[0].dim(), 0, 0, b.d(n + 1)));
        for (std::size_t i = n; i >= 2; --i) {
            Matrix d(fl, cs[i - 1].dim(), cs[i].dim());
            d.set_block(0, 0, b.d(i));
            d.set_block(sl[i - 1].nb + sl[i - 1].na_i, sl[i].nb, Matrix::identity(fl, sl[i].na_i));
            c.maps.push_back(d);
        }
        c.maps.push_back(block_piece(fl, b.terms.back().dim(), cs[1].dim(), 0, 0, b.d(1)));
        out.to_a.push_back(f.front());
        out.to_b.push_back(f.front());
        for (std::size_t i = n; i >= 1; --i) {
            const std::size_t p = n + 1 - i;
            Matrix ta = f[p];
            if (sl[i].na_i) ta = Matrix::hstack(ta, idm(a.a(i)));
            if (i + 1 <= n) ta = Matrix::hstack(ta, a.d(i + 1));
            out.to_a.push_back(ta);
            out.to_b.push_back(Matrix::hstack(idm(b.a(i)), zeros(fl, b.a(i).dim(), cs[i].dim() - sl[i].nb)));
        }
        out.to_a.push_back(f.back());
        out.to_b.push_back(f.back());
    }
    if (!is_exact(out.c) || !is_elementary_epimorphism(out.c, a, out.to_a) ||
        !is_elementary_epimorphism(out.c, b, out.to_b))
        throw DgError("epic equivalence check failed");
    return out;
}

bool is_exact(const Z0Extension& e)
{
    if (e.terms.size() < 3 || e.maps.size() + 1 != e.terms.size()) return false;
    for (std::size_t i = 0; i < e.maps.size(); ++i)
        if (!is_closed(e.terms[i], e.terms[i + 1], 0, e.maps[i])) return false;
    return is_exact(phi_extension(e));
}

NExtension phi_extension(const Z0Extension& e)
{
    NExtension out;
    for (auto& t : e.terms) out.terms.push_back(t.module.base);
    out.maps = e.maps;
    return out;
}

GradedSplitDescent graded_split_descent(const Z0Extension& a)
{
    if (!is_exact(a)) throw DgError("not exact");
    NExtension pa = phi_extension(a);
    SplitResult sr = ext_class_is_split(pa);
    if (!sr.split) throw DgError("Phi-class not split");
    const std::size_t n = a.n();
    const Field& fl = pa.terms[0].field();
    GradedSplitDescent out;
    if (n == 1) {
        out.c = a;
        for (auto& t : a.terms) out.to_a.push_back(id(t));
        out.k = pa;
        out.retraction = *sr.retraction;
        return out;
    }
    auto az = [&](std::size_t i) -> const DgObject& { return a.terms[n + 1 - i]; };
    auto adz = [&](std::size_t i) -> const Matrix& { return a.maps[n + 1 - i]; };
    const GradedModule &ys = pa.terms.front(), &xs = pa.terms.back();

    // A split extension K with an elementary map onto Phi(A).
    ProjResolution r = proj_resolution(xs, n - 1);
    std::vector<Matrix> alpha{lift_along(r.stages[0].free, pa.d(1), pa.a(1), r.stages[0].epi)};
    for (std::size_t i = 1; i < n; ++i)
        alpha.push_back(lift_along(r.stages[i].free, pa.d(i + 1), pa.a(i + 1), alpha[i - 1] * r.differentials[i - 1]));
    const Matrix& om = r.last_kernel.incl;
    auto a_om = solve(pa.d(n + 1), alpha[n - 1] * om);
    if (!a_om) throw DgError("comparison does not land in Y");
    PushedExtension pe = pushed_extension(r, n, ys, *a_om);
    if (!pe.class_zero) throw DgError("Phi-class not split");
    Matrix po_sum = Matrix::hstack(pe.from_a, pe.from_b);
    ElementaryEquivalence kappa{idm(ys), *solve_left(po_sum, Matrix::hstack(alpha[n - 1], pa.d(n + 1)))};
    for (std::size_t i = n - 1; i >= 1; --i) kappa.push_back(alpha[i - 1]);
    kappa.push_back(idm(xs));
    auto bext = extend_along(r.stages[n - 1].free, om, ys, *a_om);
    Matrix rk = *solve_left(po_sum, Matrix::hstack(*bext, idm(ys)));
    EpicEquivalence ee = epic_elementary_equivalence(pe.extension, pa, kappa);
    const NExtension& k = ee.c;
    Matrix rk2 = Matrix::hstack(rk, zeros(fl, ys.dim(), k.a(n).dim() - rk.cols()));
    if (!(rk2 * k.maps[0]).is_identity()) throw DgError("K is not split");

    // Build C_1, ..., C_{n-1} by covering pullbacks.
    std::vector<DgObject> cterms{az(0)};
    std::vector<Matrix> cdiff{Matrix()}, gamma{id(az(0))};
    DgObject zc = az(0), za = az(0);
    Matrix zc_incl = id(zc), za_incl = id(za), zeta = id(zc);
    GradedModule zk = xs;
    Matrix zk_incl = idm(xs), psi_z = idm(xs);
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        const DgObject& ai1 = az(i + 1);
        Z0Pullback p = z0_pullback(ai1, zc, za, left_inverse(za_incl) * adz(i + 1), zeta);
        const GradedModule& ki1 = k.a(i + 1);
        PullbackData q = pullback(GradedMap{ki1, zk, 0, left_inverse(zk_incl) * k.d(i + 1)},
                                  GradedMap{zc.module.base, zk, 0, psi_z});
        const Matrix& psi_i1 = ee.to_a[n - i];
        Matrix p_incl = Matrix::vstack(p.to_a, p.to_b);
        Matrix rhs = Matrix::vstack(psi_i1 * q.to_a, q.to_b);
        Matrix e = left_inverse(p_incl) * rhs;
        if (p_incl * e != rhs) throw DgError("cover map leaves the pullback");
        SpadeCover sc = spade_cover(p.object, q.object, e);
        const DgObject& ci1 = sc.c;
        Matrix to_zc = p.to_b * sc.epi;
        cterms.push_back(ci1);
        cdiff.push_back(zc_incl * to_zc);
        gamma.push_back(p.to_a * sc.epi);
        Matrix psi_c = q.to_a * sc.to_k;
        Z0Kernel zck = z0_kernel(ci1, zc, to_zc);
        Z0Kernel zak = z0_kernel(ai1, az(i), adz(i + 1));
        KernelData zkk = kernel(GradedMap{ki1, k.a(i), 0, k.d(i + 1)});
        zc = zck.object;
        zc_incl = zck.incl;
        za = zak.object;
        za_incl = zak.incl;
        zeta = left_inverse(za_incl) * gamma.back() * zc_incl;
        zk = zkk.object;
        zk_incl = zkk.incl;
        psi_z = left_inverse(zk_incl) * psi_c * zc_incl;
    }
    Z0Pullback last = z0_pullback(az(n), zc, za, left_inverse(za_incl) * adz(n), zeta);
    Matrix last_incl = Matrix::vstack(last.to_a, last.to_b);
    Matrix iota_c = left_inverse(last_incl) * Matrix::vstack(adz(n + 1), zeros(fl, zc.dim(), az(n + 1).dim()));
    cterms.push_back(last.object);
    cdiff.push_back(zc_incl * last.to_b);
    gamma.push_back(last.to_a);

    Z0Extension& c = out.c;
    c.terms.push_back(az(n + 1));
    c.maps.push_back(iota_c);
    out.to_a.push_back(id(az(n + 1)));
    for (std::size_t i = n; i >= 1; --i) {
        c.terms.push_back(cterms[i]);
        c.maps.push_back(cdiff[i]);
        out.to_a.push_back(gamma[i]);
    }
    c.terms.push_back(az(0));
    out.to_a.push_back(id(az(0)));
    if (!is_exact(c)) throw DgError("descended extension not exact");
    for (std::size_t p = 0; p < c.terms.size(); ++p)
        if (!is_closed(c.terms[p], a.terms[p], 0, out.to_a[p])) throw DgError("comparison map not closed");
    if (!is_elementary_equivalence(phi_extension(c), pa, out.to_a)) throw DgError("not an elementary equivalence");
    auto ret = extend_along(c.terms[1].module.base, iota_c, ys, idm(ys));
    if (!ret) throw DgError("no graded retraction");
    out.k = k;
    out.retraction = *ret;
    return out;
}

}  // namespace dgbec
