#pragma once

#include "dgbec/grading.hpp"
#include "dgbec/linalg.hpp"

#include <vector>

namespace dgbec {

// Degreewise subobjects and quotients of a graded vector space. All maps
// here are degree 0 and homogeneous (entry (a, b) vanishes unless the
// degrees of a and b agree), so every basis produced is homogeneous.

struct Subobject {
    std::vector<int> degrees;
    Matrix incl;     // ambient x sub
    Matrix retract;  // sub x ambient, retract * incl = id, homogeneous
    Matrix restrict(const Matrix& op) const { return retract * op * incl; }
};

struct Quotient {
    std::vector<int> degrees;
    Matrix proj;     // quotient x ambient
    Matrix section;  // ambient x quotient, proj * section = id, homogeneous
    Matrix descend(const Matrix& op) const { return proj * op * section; }
};

std::vector<int> distinct_degrees(const std::vector<int>& degs);
std::vector<std::size_t> indices_of_degree(const std::vector<int>& degs, int d);
bool is_homogeneous(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt, int deg,
                    const GradingDatum& datum);

Subobject kernel_of(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt);
Subobject image_of(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt);
Quotient cokernel_of(const Matrix& f, const std::vector<int>& src, const std::vector<int>& tgt);
// The subspace spanned by homogeneous columns v (each column of one degree).
Subobject span_of(const Matrix& v, const std::vector<int>& ambient);

// 0 -> A -f-> B -g-> C -> 0 exact, checked degreewise by ranks.
bool ses_exact(const Matrix& f, const Matrix& g, const std::vector<int>& a, const std::vector<int>& b,
               const std::vector<int>& c);
// Exactness of A -f-> B -g-> C at B (g f = 0 and rank identities per degree).
bool exact_at(const Matrix& f, const Matrix& g, const std::vector<int>& a, const std::vector<int>& b,
              const std::vector<int>& c);

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace dgbec
