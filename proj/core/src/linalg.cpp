#include "dgbec/linalg.hpp"

#include <numeric>

namespace dgbec {

namespace {

Echelon rref_fp(const Matrix& a)
{
    const Field& f = a.field();
    const std::size_t R = a.rows(), C = a.cols();
    Matrix m = a;
    auto& v = m.residues();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && v[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = c; j < C; ++j) std::swap(v[p * C + j], v[r * C + j]);
        std::uint32_t inv = f.inv(v[r * C + c]);
        for (std::size_t j = c; j < C; ++j) v[r * C + j] = f.mul(v[r * C + j], inv);
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r) continue;
            std::uint32_t t = v[i * C + c];
            if (!t) continue;
            std::uint32_t nt = f.neg(t);
            for (std::size_t j = c; j < C; ++j)
                if (v[r * C + j]) v[i * C + j] = f.add(v[i * C + j], f.mul(nt, v[r * C + j]));
        }
        piv.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(piv)};
}

Echelon rref_q(const Matrix& a)
{
    const std::size_t R = a.rows(), C = a.cols();
    const auto& src = a.rationals();
    // integer rows: scale each row by the lcm of its denominators
    std::vector<mpz_class> z(R * C);
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), src[i * C + j].get_den_mpz_t());
        for (std::size_t j = 0; j < C; ++j) z[i * C + j] = src[i * C + j].get_num() * (l / src[i * C + j].get_den());
    }
    // Bareiss forward pass
    std::vector<std::size_t> piv;
    mpz_class prev = 1, t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && z[p * C + c] == 0) ++p;
        if (p == R) continue;
        if (p != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(z[p * C + j], z[r * C + j]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                t = z[r * C + c] * z[i * C + j] - z[i * C + c] * z[r * C + j];
                mpz_divexact(z[i * C + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i * C + c] = 0;
        }
        prev = z[r * C + c];
        piv.push_back(c);
        ++r;
    }
    // rational back substitution
    Matrix m(a.field(), R, C);
    auto& q = m.rationals();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) q[i * C + j] = mpq_class(z[i * C + j]);
    for (std::size_t k = r; k-- > 0;) {
        std::size_t c = piv[k];
        mpq_class inv = 1 / q[k * C + c];
        for (std::size_t j = c; j < C; ++j)
            if (q[k * C + j] != 0) {
                q[k * C + j] *= inv;
                q[k * C + j].canonicalize();
            }
        for (std::size_t i = 0; i < k; ++i) {
            mpq_class s = q[i * C + c];
            if (s == 0) continue;
            for (std::size_t j = c; j < C; ++j)
                if (q[k * C + j] != 0) q[i * C + j] -= s * q[k * C + j];
        }
    }
    return {std::move(m), std::move(piv)};
}

}  // namespace

Echelon rref(const Matrix& a) { return a.field().is_rational() ? rref_q(a) : rref_fp(a); }

std::size_t rank(const Matrix& a)
{
    if (a.empty()) return 0;
    return rref(a).pivots.size();
}

Matrix kernel_basis(const Matrix& a)
{
    const std::size_t C = a.cols();
    Echelon e = rref(a);
    std::vector<bool> is_piv(C, false);
    for (auto p : e.pivots) is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < C; ++j)
        if (!is_piv[j]) free.push_back(j);
    Matrix k(a.field(), C, free.size());
    for (std::size_t t = 0; t < free.size(); ++t) {
        k.set(free[t], t, 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.reduced.is_zero_at(r, free[t])) k.set(e.pivots[r], t, -e.reduced.at(r, free[t]));
    }
    return k;
}

Matrix image_basis(const Matrix& a)
{
    if (a.empty()) return Matrix(a.field(), a.rows(), 0);
    return a.select_cols(rref(a).pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.field() != b.field()) throw FieldError("solve: field mismatch");
    if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
    const std::size_t n = a.cols();
    Matrix x(a.field(), n, b.cols());
    if (b.cols() == 0) return x;
    Echelon e = rref(Matrix::hstack(a, b));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!e.reduced.is_zero_at(r, n + j)) x.set(e.pivots[r], j, e.reduced.at(r, n + j));
    }
    return x;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b)
{
    auto x = solve(a.transpose(), b.transpose());
    if (!x) return std::nullopt;
    return x->transpose();
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve(a, Matrix::identity(a.field(), a.rows()));
}

Matrix left_inverse(const Matrix& i)
{
    auto p = solve_left(i, Matrix::identity(i.field(), i.cols()));
    if (!p) throw ShapeError("left_inverse: columns are dependent");
    return *p;
}

std::pair<Matrix, Matrix> cokernel_data(const Matrix& i)
{
    const std::size_t n = i.rows(), k = i.cols();
    Matrix aug = Matrix::hstack(i, Matrix::identity(i.field(), n));
    Echelon e = rref(aug);
    std::vector<std::size_t> extra;
    std::size_t used = 0;
    for (auto p : e.pivots) {
        if (p < k)
            ++used;
        else
            extra.push_back(p - k);
    }
    if (used != k) throw ShapeError("cokernel_data: columns are dependent");
    Matrix s = Matrix::identity(i.field(), n).select_cols(extra);
    Matrix basis = Matrix::hstack(i, s);
    Matrix inv = *inverse(basis);
    return {inv.block(k, 0, n - k, n), s};
}

std::pair<Matrix, Matrix> split_idempotent(const Matrix& e)
{
    if (e.rows() != e.cols() || e * e != e) throw NotIdempotent();
    Matrix im = image_basis(e);
    auto p = solve(im, e);
    return {*p, im};
}

}  // namespace dgbec
