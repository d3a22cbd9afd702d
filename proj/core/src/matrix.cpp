#include "dgbec/matrix.hpp"

#include <sstream>

namespace dgbec {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols)
{
    if (f_.is_rational())
        q_.assign(rows * cols, mpq_class(0));
    else
        fp_.assign(rows * cols, 0);
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<long long>>& rows)
{
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& entries)
{
    if (entries.size() != rows * cols) throw ShapeError("entry count does not match shape");
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) m.set(k / cols, k % cols, entries[k]);
    return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const
{
    if (i >= r_ || j >= c_) throw ShapeError("index out of range");
    if (f_.is_rational()) return Scalar(f_, q_[i * c_ + j]);
    return Scalar::from_residue(f_, fp_[i * c_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s)
{
    if (i >= r_ || j >= c_) throw ShapeError("index out of range");
    if (s.field() != f_) throw FieldError("scalar field does not match matrix");
    if (f_.is_rational())
        q_[i * c_ + j] = s.rational();
    else
        fp_[i * c_ + j] = s.residue();
}

void Matrix::add_at(std::size_t i, std::size_t j, const Scalar& s) { set(i, j, at(i, j) + s); }

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const
{
    return f_.is_rational() ? q_[i * c_ + j] == 0 : fp_[i * c_ + j] == 0;
}

bool Matrix::is_zero() const
{
    if (f_.is_rational()) {
        for (auto& x : q_)
            if (x != 0) return false;
        return true;
    }
    for (auto x : fp_)
        if (x) return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            bool z = is_zero_at(i, j);
            if (i != j && !z) return false;
            if (i == j && !at(i, j).is_one()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& o) const
{
    return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && fp_ == o.fp_ && q_ == o.q_;
}

void Matrix::require_same(const Matrix& o, const char* what) const
{
    if (f_ != o.f_) throw FieldError(std::string(what) + ": field mismatch");
    if (r_ != o.r_ || c_ != o.c_) throw ShapeError(std::string(what) + ": shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix m = *this;
    m += o;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    require_same(o, "add");
    if (f_.is_rational())
        for (std::size_t k = 0; k < q_.size(); ++k) q_[k] += o.q_[k];
    else
        for (std::size_t k = 0; k < fp_.size(); ++k) fp_[k] = f_.add(fp_[k], o.fp_[k]);
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    require_same(o, "sub");
    Matrix m = *this;
    if (f_.is_rational())
        for (std::size_t k = 0; k < q_.size(); ++k) m.q_[k] -= o.q_[k];
    else
        for (std::size_t k = 0; k < fp_.size(); ++k) m.fp_[k] = f_.sub(fp_[k], o.fp_[k]);
    return m;
}

Matrix Matrix::operator-() const
{
    Matrix m = *this;
    if (f_.is_rational())
        for (auto& x : m.q_) x = -x;
    else
        for (auto& x : m.fp_) x = f_.neg(x);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (f_ != o.f_) throw FieldError("mul: field mismatch");
    if (c_ != o.r_) throw ShapeError("mul: inner dimensions differ");
    Matrix m(f_, r_, o.c_);
    if (f_.is_rational()) {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const mpq_class& a = q_[i * c_ + k];
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    if (o.q_[k * o.c_ + j] != 0) m.q_[i * o.c_ + j] += a * o.q_[k * o.c_ + j];
            }
        return m;
    }
    const std::uint64_t p = f_.characteristic();
    std::vector<std::uint64_t> acc(o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < c_; ++k) {
            std::uint64_t a = fp_[i * c_ + k];
            if (!a) continue;
            const std::uint32_t* row = o.fp_.data() + k * o.c_;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (row[j]) acc[j] = (acc[j] + a * row[j]) % p;
        }
        for (std::size_t j = 0; j < o.c_; ++j) m.fp_[i * o.c_ + j] = static_cast<std::uint32_t>(acc[j]);
    }
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const
{
    if (s.field() != f_) throw FieldError("scale: field mismatch");
    Matrix m = *this;
    if (f_.is_rational())
        for (auto& x : m.q_) x *= s.rational();
    else
        for (auto& x : m.fp_) x = f_.mul(x, s.residue());
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            if (f_.is_rational())
                m.q_[j * r_ + i] = q_[i * c_ + j];
            else
                m.fp_[j * r_ + i] = fp_[i * c_ + j];
        }
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > r_ || c0 + nc > c_) throw ShapeError("block out of range");
    Matrix m(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            if (f_.is_rational())
                m.q_[i * nc + j] = q_[(r0 + i) * c_ + c0 + j];
            else
                m.fp_[i * nc + j] = fp_[(r0 + i) * c_ + c0 + j];
        }
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (b.f_ != f_) throw FieldError("set_block: field mismatch");
    if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw ShapeError("set_block out of range");
    for (std::size_t i = 0; i < b.r_; ++i)
        for (std::size_t j = 0; j < b.c_; ++j) {
            if (f_.is_rational())
                q_[(r0 + i) * c_ + c0 + j] = b.q_[i * b.c_ + j];
            else
                fp_[(r0 + i) * c_ + c0 + j] = b.fp_[i * b.c_ + j];
        }
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    Matrix m(f_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= r_ || cols[j] >= c_) throw ShapeError("select out of range");
            if (f_.is_rational())
                m.q_[i * cols.size() + j] = q_[rows[i] * c_ + cols[j]];
            else
                m.fp_[i * cols.size() + j] = fp_[rows[i] * c_ + cols[j]];
        }
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const
{
    std::vector<std::size_t> cols(c_);
    for (std::size_t j = 0; j < c_; ++j) cols[j] = j;
    return select(rows, cols);
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const
{
    std::vector<std::size_t> rows(r_);
    for (std::size_t i = 0; i < r_; ++i) rows[i] = i;
    return select(rows, cols);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    if (a.f_ != b.f_) throw FieldError("hstack: field mismatch");
    if (a.r_ != b.r_) throw ShapeError("hstack: row counts differ");
    Matrix m(a.f_, a.r_, a.c_ + b.c_);
    m.set_block(0, 0, a);
    m.set_block(0, a.c_, b);
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.f_ != b.f_) throw FieldError("vstack: field mismatch");
    if (a.c_ != b.c_) throw ShapeError("vstack: column counts differ");
    Matrix m(a.f_, a.r_ + b.r_, a.c_);
    m.set_block(0, 0, a);
    m.set_block(a.r_, 0, b);
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b)
{
    if (a.f_ != b.f_) throw FieldError("direct_sum: field mismatch");
    Matrix m(a.f_, a.r_ + b.r_, a.c_ + b.c_);
    m.set_block(0, 0, a);
    m.set_block(a.r_, a.c_, b);
    return m;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << '\n';
    }
    return os.str();
}

}  // namespace dgbec
