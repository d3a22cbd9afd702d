#pragma once

#include "dgbec/dg.hpp"

#include <cstdint>
#include <random>

namespace dgbec {

// Deterministic source for randomized fixtures; draws do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 eng_;
};

Scalar random_scalar(const Field& f, Rng& rng);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
// Random homogeneous invertible matrix preserving the given degrees.
Matrix random_graded_automorphism(const Field& f, const std::vector<int>& degrees, Rng& rng);
// Random element of a span (columns of the list).
Matrix random_combination(const std::vector<Matrix>& basis, const Matrix& zero, Rng& rng);

// Largest dimension of a homogeneous component.
std::size_t max_component(const std::vector<int>& degrees);

// Quotient of a free module on at most max_gens generators by random relations.
GradedModule random_graded_module(const AlgebraPtr& alg, Rng& rng, std::size_t max_gens = 2,
                                  std::size_t max_comp = 3);
Matrix random_graded_map(const GradedModule& l, const GradedModule& m, int n, Rng& rng);

// Random module with components of dimension at most max_comp, conjugated by a
// random homogeneous change of basis.
CdgModule random_cdg_module(const RingPtr& ring, Rng& rng, std::size_t max_comp = 3);
DgObject random_object(Instance inst, const RingPtr& ring, Rng& rng, std::size_t max_comp = 3);
Matrix random_hom(const DgObject& x, const DgObject& y, int n, Rng& rng);
Matrix random_closed(const DgObject& x, const DgObject& y, int n, Rng& rng);

}  // namespace dgbec
