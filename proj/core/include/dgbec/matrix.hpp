#pragma once

#include "dgbec/scalar.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dgbec {

class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense matrix over a Field. F_p entries live in a uint32 array, Q entries
// in an mpq_class array; only the one matching the field is populated.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<std::vector<long long>>& rows);
    static Matrix from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& entries);

    const Field& field() const { return f_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& s);
    void set(std::size_t i, std::size_t j, long long v) { set(i, j, Scalar(f_, v)); }
    void add_at(std::size_t i, std::size_t j, const Scalar& s);
    bool is_zero_at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix scaled(const Scalar& s) const;
    Matrix scaled(long long s) const { return scaled(Scalar(f_, s)); }

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
    Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    Matrix select_rows(const std::vector<std::size_t>& rows) const;
    Matrix select_cols(const std::vector<std::size_t>& cols) const;
    Matrix column(std::size_t j) const { return block(0, j, r_, 1); }
    Matrix row(std::size_t i) const { return block(i, 0, 1, c_); }

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    // Raw storage access for elimination kernels.
    std::vector<std::uint32_t>& residues() { return fp_; }
    const std::vector<std::uint32_t>& residues() const { return fp_; }
    std::vector<mpq_class>& rationals() { return q_; }
    const std::vector<mpq_class>& rationals() const { return q_; }

    // One line per row, entries separated by single spaces.
    std::string str() const;

private:
    void require_same(const Matrix& o, const char* what) const;
    Field f_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::uint32_t> fp_;
    std::vector<mpq_class> q_;
};

}  // namespace dgbec
