#pragma once

#include "dgbec/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dgbec {

class NotIdempotent : public std::runtime_error {
public:
    NotIdempotent() : std::runtime_error("not idempotent") {}
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

// Gauss-Jordan with first-nonzero pivoting. Over Q the forward pass is
// fraction-free (Bareiss) on an integer-scaled copy.
Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Columns span ker A; column k has a 1 at the k-th free variable and 0 at
// the other free variables.
Matrix kernel_basis(const Matrix& a);
// Pivot columns of A.
Matrix image_basis(const Matrix& a);

// Some X with A X = B (B may have several columns), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Some X with X A = B, or nullopt.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
// P with P I = id for I of full column rank.
Matrix left_inverse(const Matrix& i);
// Q with Q I = 0, [I | S] invertible, Q S = id, for I of full column rank;
// returns (Q, S) where S completes the columns of I to a basis.
std::pair<Matrix, Matrix> cokernel_data(const Matrix& i);

// For e e = e returns (P, I): I P = e, P I = id, columns of I span im e.
std::pair<Matrix, Matrix> split_idempotent(const Matrix& e);

}  // namespace dgbec
