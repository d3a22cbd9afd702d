#include "dgbec/structured.hpp"

#include <algorithm>

namespace dgbec {

std::vector<int> distinct_degrees(const std::vector<int>& degs)
{
    std::vector<int> d = degs;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

std::vector<std::size_t> indices_of_degree(const std::vector<int>& degs, int d)
{
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < degs.size(); ++i)
        if (degs[i] == d) r.push_back(i);
    return r;
}

bool is_homogeneous(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt, int deg,
                    const GradingDatum& datum)
{
    if (f.rows() != tgt.size() || f.cols() != src.size()) return false;
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j)
            if (!f.is_zero_at(i, j) && datum.reduce(static_cast<long long>(src[j]) + deg) != tgt[i]) return false;
    return true;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

namespace {

void check_shape(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt)
{
    if (f.rows() != tgt.size() || f.cols() != src.size()) throw ShapeError("map shape does not match degree lists");
}

Matrix retract_for(const Matrix& incl, const std::vector<int>& sub, const std::vector<int>& amb)
{
    Matrix r(incl.field(), incl.cols(), incl.rows());
    for (int d : distinct_degrees(sub)) {
        auto si = indices_of_degree(sub, d);
        auto ai = indices_of_degree(amb, d);
        Matrix blk = incl.select(ai, si);
        Matrix li = left_inverse(blk);
        for (std::size_t a = 0; a < si.size(); ++a)
            for (std::size_t b = 0; b < ai.size(); ++b)
                if (!li.is_zero_at(a, b)) r.set(si[a], ai[b], li.at(a, b));
    }
    return r;
}

std::size_t leading(const Matrix& m, std::size_t c, bool by_col)
{
    std::size_t n = by_col ? m.rows() : m.cols();
    for (std::size_t i = 0; i < n; ++i)
        if (!(by_col ? m.is_zero_at(i, c) : m.is_zero_at(c, i))) return i;
    return n;
}

// Reorders basis columns by their first nonzero ambient coordinate.
void sort_sub(Subobject& s)
{
    std::vector<std::size_t> o(s.incl.cols());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
    std::stable_sort(o.begin(), o.end(),
                     [&](std::size_t a, std::size_t b) { return leading(s.incl, a, true) < leading(s.incl, b, true); });
    std::vector<int> d;
    for (auto i : o) d.push_back(s.degrees[i]);
    s.degrees = d;
    s.incl = s.incl.select_cols(o);
    s.retract = s.retract.select_rows(o);
}

void sort_quot(Quotient& q)
{
    std::vector<std::size_t> o(q.proj.rows());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
    std::stable_sort(o.begin(), o.end(),
                     [&](std::size_t a, std::size_t b) { return leading(q.section, a, true) < leading(q.section, b, true); });
    std::vector<int> d;
    for (auto i : o) d.push_back(q.degrees[i]);
    q.degrees = d;
    q.proj = q.proj.select_rows(o);
    q.section = q.section.select_cols(o);
}

}  // namespace

Subobject kernel_of(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt)
{
    check_shape(f, src, tgt);
    Subobject s;
    std::vector<Matrix> pieces;
    std::size_t total = 0;
    std::vector<std::vector<std::size_t>> srcidx;
    for (int d : distinct_degrees(src)) {
        auto si = indices_of_degree(src, d);
        auto ti = indices_of_degree(tgt, d);
        Matrix k = kernel_basis(f.select(ti, si));
        for (std::size_t c = 0; c < k.cols(); ++c) s.degrees.push_back(d);
        total += k.cols();
        pieces.push_back(k);
        srcidx.push_back(si);
    }
    s.incl = Matrix(f.field(), src.size(), total);
    std::size_t col = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        for (std::size_t c = 0; c < pieces[p].cols(); ++c, ++col)
            for (std::size_t r = 0; r < srcidx[p].size(); ++r)
                if (!pieces[p].is_zero_at(r, c)) s.incl.set(srcidx[p][r], col, pieces[p].at(r, c));
    }
    s.retract = retract_for(s.incl, s.degrees, src);
    sort_sub(s);
    return s;
}

Subobject span_of(const Matrix& v, const std::vector<int>& amb)
{
    if (v.rows() != amb.size()) throw ShapeError("span_of: row count does not match ambient");
    Subobject s;
    std::vector<int> vdeg(v.cols());
    for (std::size_t c = 0; c < v.cols(); ++c) {
        int d = 0;
        bool seen = false;
        for (std::size_t r = 0; r < v.rows(); ++r)
            if (!v.is_zero_at(r, c)) {
                if (seen && amb[r] != d) throw DegreeError("span_of: column is not homogeneous");
                d = amb[r];
                seen = true;
            }
        vdeg[c] = seen ? d : 0;
    }
    std::vector<Matrix> pieces;
    std::vector<std::vector<std::size_t>> ambidx;
    std::size_t total = 0;
    for (int d : distinct_degrees(amb)) {
        auto ai = indices_of_degree(amb, d);
        auto vi = indices_of_degree(vdeg, d);
        Matrix blk = v.select(ai, vi);
        Matrix b = image_basis(blk);
        for (std::size_t c = 0; c < b.cols(); ++c) s.degrees.push_back(d);
        total += b.cols();
        pieces.push_back(b);
        ambidx.push_back(ai);
    }
    s.incl = Matrix(v.field(), amb.size(), total);
    std::size_t col = 0;
    for (std::size_t p = 0; p < pieces.size(); ++p)
        for (std::size_t c = 0; c < pieces[p].cols(); ++c, ++col)
            for (std::size_t r = 0; r < ambidx[p].size(); ++r)
                if (!pieces[p].is_zero_at(r, c)) s.incl.set(ambidx[p][r], col, pieces[p].at(r, c));
    s.retract = retract_for(s.incl, s.degrees, amb);
    sort_sub(s);
    return s;
}

Subobject image_of(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt)
{
    check_shape(f, src, tgt);
    return span_of(f, tgt);
}

Quotient cokernel_of(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt)
{
    check_shape(f, src, tgt);
    Subobject im = image_of(f, src, tgt);
    Quotient q;
    std::vector<Matrix> qs, ss;
    std::vector<std::vector<std::size_t>> tidx;
    std::size_t total = 0;
    for (int d : distinct_degrees(tgt)) {
        auto ti = indices_of_degree(tgt, d);
        auto ii = indices_of_degree(im.degrees, d);
        auto [qq, s] = cokernel_data(im.incl.select(ti, ii));
        for (std::size_t r = 0; r < qq.rows(); ++r) q.degrees.push_back(d);
        total += qq.rows();
        qs.push_back(qq);
        ss.push_back(s);
        tidx.push_back(ti);
    }
    q.proj = Matrix(f.field(), total, tgt.size());
    q.section = Matrix(f.field(), tgt.size(), total);
    std::size_t row = 0;
    for (std::size_t p = 0; p < qs.size(); ++p)
        for (std::size_t r = 0; r < qs[p].rows(); ++r, ++row)
            for (std::size_t c = 0; c < tidx[p].size(); ++c) {
                if (!qs[p].is_zero_at(r, c)) q.proj.set(row, tidx[p][c], qs[p].at(r, c));
                if (!ss[p].is_zero_at(c, r)) q.section.set(tidx[p][c], row, ss[p].at(c, r));
            }
    sort_quot(q);
    return q;
}

bool exact_at(const Matrix& f, const Matrix& g, const std::vector<int>& a, const std::vector<int>& b,
              const std::vector<int>& c)
{
    if (f.rows() != b.size() || f.cols() != a.size() || g.rows() != c.size() || g.cols() != b.size()) return false;
    if (!(g * f).is_zero()) return false;
    for (int d : distinct_degrees(b)) {
        auto ai = indices_of_degree(a, d), bi = indices_of_degree(b, d), ci = indices_of_degree(c, d);
        std::size_t rf = rank(f.select(bi, ai)), rg = rank(g.select(ci, bi));
        if (rf + rg != bi.size()) return false;
    }
    return true;
}

bool ses_exact(const Matrix& f, const Matrix& g, const std::vector<int>& a, const std::vector<int>& b,
               const std::vector<int>& c)
{
    if (!exact_at(f, g, a, b, c)) return false;
    for (int d : distinct_degrees(concat(a, c))) {
        auto ai = indices_of_degree(a, d), bi = indices_of_degree(b, d), ci = indices_of_degree(c, d);
        if (rank(f.select(bi, ai)) != ai.size()) return false;
        if (rank(g.select(ci, bi)) != ci.size()) return false;
    }
    return true;
}

}  // namespace dgbec
