#include "dgbec/graded.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace dgbec {

namespace {

Matrix closure_under(const Matrix& start, const std::vector<const Matrix*>& ops)
{
    Matrix v = image_basis(start);
    while (true) {
        Matrix w = v;
        for (auto* op : ops) w = Matrix::hstack(w, *op * v);
        Matrix nv = image_basis(w);
        if (nv.cols() == v.cols()) return v;
        v = nv;
    }
}

bool in_span(const Matrix& span, const Matrix& v)
{
    if (span.cols() == 0) return v.is_zero();
    return solve(span, v).has_value();
}

}  // namespace

GradedAlgebra::GradedAlgebra(GradingDatum datum, Field field, std::vector<int> degrees, std::vector<Matrix> left,
                             Matrix unit)
    : datum_(std::move(datum)), field_(field), degrees_(std::move(degrees)), left_(std::move(left)),
      unit_(std::move(unit))
{
    const std::size_t n = degrees_.size();
    if (left_.size() != n) throw ShapeError("algebra needs one multiplication matrix per basis element");
    for (auto& l : left_)
        if (l.rows() != n || l.cols() != n || l.field() != field_) throw ShapeError("multiplication matrix shape");
    if (unit_.rows() != n || unit_.cols() != 1) throw ShapeError("unit must be a column of length dim");
    for (auto& d : degrees_) d = datum_.normalize(d);

    std::vector<const Matrix*> ops;
    Matrix span = unit_;
    span = closure_under(span, ops);
    for (std::size_t i = 0; i < n; ++i) {
        if (in_span(span, basis_vector(i))) continue;
        gens_.push_back(i);
        ops.push_back(&left_[i]);
        span = closure_under(Matrix::hstack(span, basis_vector(i)), ops);
    }
}

Matrix GradedAlgebra::basis_vector(std::size_t i) const
{
    Matrix v(field_, dim(), 1);
    v.set(i, 0, 1);
    return v;
}

Matrix GradedAlgebra::left_mult(const Matrix& x) const
{
    Matrix r(field_, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x.is_zero_at(i, 0)) r += left_[i].scaled(x.at(i, 0));
    return r;
}

Matrix GradedAlgebra::right_mult(const Matrix& x) const
{
    Matrix r(field_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) r.set_block(0, j, left_[j] * x);
    return r;
}

bool GradedAlgebra::operator==(const GradedAlgebra& o) const
{
    return datum_ == o.datum_ && field_ == o.field_ && degrees_ == o.degrees_ && left_ == o.left_ && unit_ == o.unit_;
}

Matrix GradedModule::action(const Matrix& r) const
{
    Matrix a(field(), dim(), dim());
    for (std::size_t i = 0; i < alg->dim(); ++i)
        if (!r.is_zero_at(i, 0)) a += act[i].scaled(r.at(i, 0));
    return a;
}

bool GradedModule::operator==(const GradedModule& o) const
{
    return (alg == o.alg || *alg == *o.alg) && degrees == o.degrees && act == o.act;
}

Report check_algebra(const GradedAlgebra& a)
{
    Report r;
    const std::size_t n = a.dim();
    const auto& dt = a.datum();
    for (std::size_t i = 0; i < n; ++i)
        if (!a.unit().is_zero_at(i, 0) && a.degree(i) != 0) {
            r.push_back("unit not in degree 0");
            break;
        }
    bool homog = true, assoc = true, unital = true;
    for (std::size_t i = 0; i < n && homog; ++i)
        for (std::size_t j = 0; j < n && homog; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!a.left(i).is_zero_at(k, j)) {
                    long long s = static_cast<long long>(a.degree(i)) + a.degree(j);
                    if (!dt.representable(s) || dt.reduce(s) != a.degree(k)) {
                        homog = false;
                        break;
                    }
                }
    if (!homog) r.push_back("product leaves its degree component");
    for (std::size_t i = 0; i < n && assoc; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.left_mult(a.left(i).column(j)) != a.left(i) * a.left(j)) {
                assoc = false;
                break;
            }
    if (!assoc) r.push_back("associativity violated");
    if (!a.left_mult(a.unit()).is_identity()) unital = false;
    for (std::size_t i = 0; i < n && unital; ++i)
        if (a.left(i) * a.unit() != a.basis_vector(i)) unital = false;
    if (!unital) r.push_back("unitality violated");
    return r;
}

Report check_module(const GradedModule& m)
{
    Report r;
    const auto& a = *m.alg;
    if (m.act.size() != a.dim()) return {"action needs one matrix per algebra basis element"};
    for (auto& x : m.act)
        if (x.rows() != m.dim() || x.cols() != m.dim()) return {"action matrix shape"};
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!is_homogeneous(m.act[i], m.degrees, m.degrees, a.degree(i), a.datum())) {
            r.push_back("action not homogeneous");
            break;
        }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.action(a.left(i).column(j)) != m.act[i] * m.act[j]) {
                ok = false;
                break;
            }
        if (!ok) {
            r.push_back("associativity violated");
            break;
        }
    }
    if (!m.action(a.unit()).is_identity()) r.push_back("unitality violated");
    return r;
}

Report check_map(const GradedMap& f)
{
    Report r;
    const auto& a = *f.source.alg;
    if (f.m.rows() != f.target.dim() || f.m.cols() != f.source.dim()) return {"map shape"};
    if (!is_homogeneous(f.m, f.source.degrees, f.target.degrees, f.degree, a.datum())) r.push_back("degree violated");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int s = a.datum().koszul_sign(f.degree, a.degree(i));
        if (f.m * f.source.act[i] != (f.target.act[i] * f.m).scaled(s)) {
            r.push_back("sign rule violated");
            break;
        }
    }
    return r;
}

GradedMap compose(const GradedMap& g, const GradedMap& f)
{
    if (!(f.target == g.source)) throw ShapeError("compose: target of f is not source of g");
    return {f.source, g.target, f.source.datum().add(f.degree, g.degree), g.m * f.m};
}

GradedMap identity_map(const GradedModule& m) { return {m, m, 0, Matrix::identity(m.field(), m.dim())}; }

GradedModule zero_module(AlgebraPtr alg)
{
    GradedModule m;
    m.act.assign(alg->dim(), Matrix(alg->field(), 0, 0));
    m.alg = std::move(alg);
    return m;
}

GradedModule free_module(AlgebraPtr alg, const std::vector<int>& gdeg)
{
    GradedModule m;
    const std::size_t n = alg->dim();
    for (int e : gdeg)
        for (std::size_t s = 0; s < n; ++s)
            m.degrees.push_back(alg->datum().normalize(static_cast<long long>(alg->degree(s)) + e));
    for (std::size_t i = 0; i < n; ++i) {
        Matrix a(alg->field(), n * gdeg.size(), n * gdeg.size());
        for (std::size_t g = 0; g < gdeg.size(); ++g) a.set_block(g * n, g * n, alg->left(i));
        m.act.push_back(std::move(a));
    }
    m.alg = std::move(alg);
    return m;
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b)
{
    GradedModule m;
    m.alg = a.alg;
    m.degrees = concat(a.degrees, b.degrees);
    for (std::size_t i = 0; i < a.act.size(); ++i) m.act.push_back(Matrix::direct_sum(a.act[i], b.act[i]));
    return m;
}

GradedModule shift(const GradedModule& m, int n)
{
    GradedModule r;
    r.alg = m.alg;
    const auto& dt = m.datum();
    for (int d : m.degrees) r.degrees.push_back(dt.normalize(static_cast<long long>(d) - n));
    for (std::size_t i = 0; i < m.act.size(); ++i)
        r.act.push_back(m.act[i].scaled(dt.koszul_sign(n, m.alg->degree(i))));
    return r;
}

GradedModule restrict_module(const GradedModule& m, const Subobject& s)
{
    GradedModule r;
    r.alg = m.alg;
    r.degrees = s.degrees;
    for (auto& a : m.act) r.act.push_back(s.restrict(a));
    return r;
}

GradedModule descend_module(const GradedModule& m, const Quotient& q)
{
    GradedModule r;
    r.alg = m.alg;
    r.degrees = q.degrees;
    for (auto& a : m.act) r.act.push_back(q.descend(a));
    return r;
}

Matrix HomSpace::coords(const Matrix& f) const
{
    Matrix c(field, basis.size(), 1);
    for (std::size_t k = 0; k < free.size(); ++k)
        if (!f.is_zero_at(free[k].first, free[k].second)) c.set(k, 0, f.at(free[k].first, free[k].second));
    return c;
}

Matrix HomSpace::element(const Matrix& c) const
{
    Matrix f(field, rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!c.is_zero_at(k, 0)) f += basis[k].scaled(c.at(k, 0));
    return f;
}

bool HomSpace::contains(const Matrix& f) const
{
    if (f.rows() != rows || f.cols() != cols) return false;
    return f == element(coords(f));
}

HomSpace hom_space(const GradingDatum& datum, const Field& field, const std::vector<int>& src,
                   const std::vector<int>& tgt, int n, const std::vector<Matrix>& src_ops,
                   const std::vector<Matrix>& tgt_ops, const std::vector<int>& op_degrees)
{
    HomSpace h;
    h.degree = datum.reduce(n);
    h.rows = tgt.size();
    h.cols = src.size();
    h.field = field;
    const std::size_t R = tgt.size(), C = src.size();
    std::vector<long> idx(R * C, -1);
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t a = 0; a < R; ++a)
        for (std::size_t b = 0; b < C; ++b)
            if (datum.reduce(static_cast<long long>(src[b]) + n) == tgt[a]) {
                idx[a * C + b] = static_cast<long>(pos.size());
                pos.push_back({a, b});
            }
    const std::size_t U = pos.size();
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> eqs;
    for (std::size_t g = 0; g < src_ops.size(); ++g) {
        const Matrix& A = src_ops[g];
        const Matrix& B = tgt_ops[g];
        Scalar s(field, datum.koszul_sign(n, op_degrees[g]));
        // nonzero structure
        std::vector<std::vector<std::pair<std::size_t, Scalar>>> acol(C), brow(R);
        for (std::size_t j = 0; j < C; ++j)
            for (std::size_t b = 0; b < C; ++b)
                if (!A.is_zero_at(j, b)) acol[b].push_back({j, A.at(j, b)});
        for (std::size_t a = 0; a < R; ++a)
            for (std::size_t i = 0; i < R; ++i)
                if (!B.is_zero_at(a, i)) brow[a].push_back({i, B.at(a, i)});
        for (std::size_t a = 0; a < R; ++a)
            for (std::size_t b = 0; b < C; ++b) {
                std::map<std::size_t, Scalar> eq;
                for (auto& [j, v] : acol[b]) {
                    long u = idx[a * C + j];
                    if (u < 0) continue;
                    auto it = eq.find(u);
                    if (it == eq.end())
                        eq.emplace(u, v);
                    else
                        it->second = it->second + v;
                }
                for (auto& [i, v] : brow[a]) {
                    long u = idx[i * C + b];
                    if (u < 0) continue;
                    Scalar t = -(s * v);
                    auto it = eq.find(u);
                    if (it == eq.end())
                        eq.emplace(u, t);
                    else
                        it->second = it->second + t;
                }
                std::vector<std::pair<std::size_t, Scalar>> e;
                for (auto& [u, v] : eq)
                    if (!v.is_zero()) e.push_back({u, v});
                if (!e.empty()) eqs.push_back(std::move(e));
            }
    }
    Matrix sys(field, eqs.size(), U);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (auto& [u, v] : eqs[r]) sys.set(r, u, v);
    Matrix k = kernel_basis(sys);
    Echelon e = rref(sys);
    std::vector<bool> piv(U, false);
    for (auto p : e.pivots) piv[p] = true;
    for (std::size_t u = 0; u < U; ++u)
        if (!piv[u]) h.free.push_back(pos[u]);
    for (std::size_t c = 0; c < k.cols(); ++c) {
        Matrix f(field, R, C);
        for (std::size_t u = 0; u < U; ++u)
            if (!k.is_zero_at(u, c)) f.set(pos[u].first, pos[u].second, k.at(u, c));
        h.basis.push_back(std::move(f));
    }
    return h;
}

HomSpace hom_graded(const GradedModule& l, const GradedModule& m, int n)
{
    if (!(l.alg == m.alg || *l.alg == *m.alg)) throw ShapeError("hom_graded: modules over different algebras");
    std::vector<Matrix> so, to;
    std::vector<int> od;
    for (auto g : l.alg->generators()) {
        so.push_back(l.act[g]);
        to.push_back(m.act[g]);
        od.push_back(l.alg->degree(g));
    }
    return hom_space(l.datum(), l.field(), l.degrees, m.degrees, n, so, to, od);
}

std::vector<HomSpace> hom_graded_all(const GradedModule& l, const GradedModule& m)
{
    std::vector<HomSpace> r;
    for (int n : l.datum().morphism_degrees()) r.push_back(hom_graded(l, m, n));
    return r;
}

namespace {

// A degree-n map viewed as degree 0 into the target with degrees moved by -n.
std::vector<int> moved(const std::vector<int>& d, int n, const GradingDatum& dt)
{
    std::vector<int> r;
    for (int x : d) r.push_back(dt.reduce(static_cast<long long>(x) - n));
    return r;
}

}  // namespace

KernelData kernel(const GradedMap& f)
{
    Subobject s = kernel_of(f.m, f.source.degrees, moved(f.target.degrees, f.degree, f.source.datum()));
    return {restrict_module(f.source, s), s.incl};
}

CokernelData cokernel(const GradedMap& f)
{
    Quotient q = cokernel_of(f.m, moved(f.source.degrees, -f.degree, f.source.datum()), f.target.degrees);
    return {descend_module(f.target, q), q.proj, q.section};
}

ImageData image(const GradedMap& f)
{
    Subobject s = image_of(f.m, moved(f.source.degrees, -f.degree, f.source.datum()), f.target.degrees);
    return {restrict_module(f.target, s), s.retract * f.m, s.incl};
}

PullbackData pullback(const GradedMap& f, const GradedMap& g)
{
    if (!(f.target == g.target)) throw ShapeError("pullback: maps have different targets");
    GradedModule ab = direct_sum(f.source, g.source);
    Matrix h = Matrix::hstack(f.m, -g.m);
    Subobject s = kernel_of(h, ab.degrees, f.target.degrees);
    const std::size_t na = f.source.dim(), nb = g.source.dim();
    Matrix pa = Matrix::hstack(Matrix::identity(f.m.field(), na), Matrix(f.m.field(), na, nb));
    Matrix pb = Matrix::hstack(Matrix(f.m.field(), nb, na), Matrix::identity(f.m.field(), nb));
    return {restrict_module(ab, s), pa * s.incl, pb * s.incl};
}

PushoutData pushout(const GradedMap& f, const GradedMap& g)
{
    if (!(f.source == g.source)) throw ShapeError("pushout: maps have different sources");
    GradedModule ab = direct_sum(f.target, g.target);
    Matrix h = Matrix::vstack(f.m, -g.m);
    Quotient q = cokernel_of(h, f.source.degrees, ab.degrees);
    const std::size_t na = f.target.dim(), nb = g.target.dim();
    Matrix ia = Matrix::vstack(Matrix::identity(f.m.field(), na), Matrix(f.m.field(), nb, na));
    Matrix ib = Matrix::vstack(Matrix(f.m.field(), na, nb), Matrix::identity(f.m.field(), nb));
    return {descend_module(ab, q), q.proj * ia, q.proj * ib};
}

Matrix free_map_from_values(const GradedModule& free, const std::vector<int>& gdeg, const GradedModule& target,
                            const std::vector<Matrix>& values)
{
    const std::size_t n = free.alg->dim();
    Matrix e(free.field(), target.dim(), free.dim());
    for (std::size_t g = 0; g < gdeg.size(); ++g)
        for (std::size_t s = 0; s < n; ++s) e.set_block(0, g * n + s, target.act[s] * values[g]);
    return e;
}

namespace {

Matrix generated_span(const GradedModule& m, const Matrix& vectors)
{
    std::vector<const Matrix*> ops;
    for (auto g : m.alg->generators()) ops.push_back(&m.act[g]);
    if (vectors.cols() == 0) return Matrix(m.field(), m.dim(), 0);
    return closure_under(vectors, ops);
}

Matrix columns(const Field& f, std::size_t rows, const std::vector<Matrix>& cols)
{
    Matrix r(f, rows, 0);
    for (auto& c : cols) r = Matrix::hstack(r, c);
    return r;
}

}  // namespace

FreeCover free_cover(const GradedModule& m, const std::vector<std::size_t>* order)
{
    std::vector<std::size_t> ord(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) ord[i] = i;
    if (order) ord = *order;
    std::vector<Matrix> gens;
    std::vector<int> gdeg;
    Matrix span(m.field(), m.dim(), 0);
    for (int d : distinct_degrees(m.degrees))
        for (auto i : ord) {
            if (m.degrees[i] != d) continue;
            Matrix v(m.field(), m.dim(), 1);
            v.set(i, 0, 1);
            if (in_span(span, v)) continue;
            gens.push_back(v);
            gdeg.push_back(d);
            span = generated_span(m, columns(m.field(), m.dim(), gens));
        }
    for (std::size_t k = 0; k < gens.size();) {
        std::vector<Matrix> rest;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != k) rest.push_back(gens[j]);
        if (generated_span(m, columns(m.field(), m.dim(), rest)).cols() == m.dim()) {
            gens.erase(gens.begin() + static_cast<long>(k));
            gdeg.erase(gdeg.begin() + static_cast<long>(k));
        } else {
            ++k;
        }
    }
    FreeCover c;
    c.free = free_module(m.alg, gdeg);
    c.generator_degrees = gdeg;
    c.generators = gens;
    c.epi = free_map_from_values(c.free, gdeg, m, gens);
    return c;
}

namespace {

std::vector<std::size_t> permuted_order(std::size_t n, std::uint64_t seed)
{
    std::vector<std::size_t> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = i;
    if (seed == 0) return o;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(o[i - 1], o[rng() % i]);
    return o;
}

}  // namespace

ProjResolution proj_resolution(const GradedModule& m, std::size_t length, std::uint64_t seed)
{
    ProjResolution r;
    r.module = m;
    std::uint64_t s = seed;
    auto ord = permuted_order(m.dim(), s);
    r.stages.push_back(free_cover(m, &ord));
    GradedMap eps{r.stages[0].free, m, 0, r.stages[0].epi};
    r.last_kernel = kernel(eps);
    bool exact = ses_exact(r.last_kernel.incl, eps.m, r.last_kernel.object.degrees, eps.source.degrees, m.degrees);
    for (std::size_t i = 1; i <= length; ++i) {
        const KernelData& k = r.last_kernel;
        auto o = permuted_order(k.object.dim(), s ? s + i : 0);
        FreeCover c = free_cover(k.object, &o);
        Matrix d = k.incl * c.epi;
        GradedMap dm{c.free, r.stages.back().free, 0, d};
        KernelData nk = kernel(dm);
        exact = exact && exact_at(nk.incl, d, nk.object.degrees, c.free.degrees, dm.target.degrees) &&
                exact_at(d, i == 1 ? eps.m : r.differentials.back(), c.free.degrees, dm.target.degrees,
                         i == 1 ? m.degrees : r.stages[i - 2].free.degrees);
        r.stages.push_back(std::move(c));
        r.differentials.push_back(d);
        r.last_kernel = std::move(nk);
    }
    r.exact = exact;
    return r;
}

std::string module_key(const GradedModule& m)
{
    std::ostringstream os;
    const auto& a = *m.alg;
    os << a.datum().describe() << '|' << a.field().describe() << '|';
    for (int d : a.degrees()) os << d << ',';
    for (auto& l : a.left()) os << l.str() << ';';
    os << a.unit().str() << '#';
    for (int d : m.degrees) os << d << ',';
    for (auto& x : m.act) os << x.str() << ';';
    return os.str();
}

namespace {

struct ResolutionCache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const ProjResolution>> entries;
};

ResolutionCache& cache()
{
    static ResolutionCache c;
    return c;
}

std::shared_ptr<const ProjResolution> cached_resolution(const GradedModule& m, std::size_t length, std::uint64_t seed)
{
    std::string key = module_key(m) + "|" + std::to_string(length) + "|" + std::to_string(seed);
    auto& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.entries.find(key);
        if (it != c.entries.end()) return it->second;
    }
    auto r = std::make_shared<const ProjResolution>(proj_resolution(m, length, seed));
    std::lock_guard<std::mutex> lock(c.mu);
    c.entries.emplace(key, r);
    return r;
}

// Coordinates of Hom_0(F, N) are generator values: (g, b) with b a basis
// vector of N in degree e_g.
std::vector<std::pair<std::size_t, std::size_t>> hom0_coords(const std::vector<int>& gdeg, const GradedModule& n)
{
    std::vector<std::pair<std::size_t, std::size_t>> c;
    for (std::size_t g = 0; g < gdeg.size(); ++g)
        for (std::size_t b = 0; b < n.dim(); ++b)
            if (n.degrees[b] == gdeg[g]) c.push_back({g, b});
    return c;
}

// Pullback along d: F_i -> F_{i-1} as a matrix Hom_0(F_{i-1}, N) -> Hom_0(F_i, N).
Matrix pullback_matrix(const FreeCover& prev, const FreeCover& cur, const Matrix& d, const GradedModule& n)
{
    const auto& alg = *n.alg;
    const std::size_t R = alg.dim();
    auto src = hom0_coords(prev.generator_degrees, n);
    auto tgt = hom0_coords(cur.generator_degrees, n);
    Matrix out(n.field(), tgt.size(), src.size());
    std::vector<Matrix> images;
    for (std::size_t h = 0; h < cur.generator_degrees.size(); ++h) {
        Matrix u(n.field(), cur.free.dim(), 1);
        u.set_block(h * R, 0, alg.unit());
        images.push_back(d * u);
    }
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto [g, b] = src[c];
        Matrix eb(n.field(), n.dim(), 1);
        eb.set(b, 0, 1);
        for (std::size_t r = 0; r < tgt.size(); ++r) {
            auto [h, b2] = tgt[r];
            Matrix coeff = images[h].block(g * R, 0, R, 1);
            Matrix val = n.action(coeff) * eb;
            if (!val.is_zero_at(b2, 0)) out.set(r, c, val.at(b2, 0));
        }
    }
    return out;
}

}  // namespace

std::size_t ext_dim(const GradedModule& m, const GradedModule& n, std::size_t degree, std::uint64_t seed)
{
    auto res = cached_resolution(m, degree + 1, seed);
    auto dim_hom = [&](std::size_t i) { return hom0_coords(res->stages[i].generator_degrees, n).size(); };
    auto rank_d = [&](std::size_t i) -> std::size_t {
        if (i == 0) return 0;
        return rank(pullback_matrix(res->stages[i - 1], res->stages[i], res->differentials[i - 1], n));
    };
    return dim_hom(degree) - rank_d(degree + 1) - rank_d(degree);
}

std::size_t ext_dim_total(const GradedModule& m, const GradedModule& n, std::size_t degree)
{
    const auto& dt = n.datum();
    std::size_t total = 0;
    for (int j : dt.morphism_degrees()) {
        bool fits = true;
        for (int d : n.degrees) fits = fits && dt.representable(static_cast<long long>(d) - j);
        if (!fits) continue;
        total += ext_dim(m, shift(n, j), degree);
    }
    return total;
}

std::size_t hom0_dim(const GradedModule& l, const GradedModule& m) { return hom_graded(l, m, 0).dim(); }

}  // namespace dgbec
