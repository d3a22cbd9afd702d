#pragma once

#include "dgbec/structured.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dgbec {

using Report = std::vector<std::string>;

// Finite-dimensional graded algebra on a homogeneous basis e_0..e_{N-1}.
// left[i] is the matrix of x -> e_i x.
class GradedAlgebra {
public:
    GradedAlgebra(GradingDatum datum, Field field, std::vector<int> degrees, std::vector<Matrix> left, Matrix unit);

    const GradingDatum& datum() const { return datum_; }
    const Field& field() const { return field_; }
    std::size_t dim() const { return degrees_.size(); }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(std::size_t i) const { return degrees_[i]; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const std::vector<Matrix>& left() const { return left_; }
    const Matrix& unit() const { return unit_; }
    // Basis indices generating the algebra together with the unit.
    const std::vector<std::size_t>& generators() const { return gens_; }

    Matrix basis_vector(std::size_t i) const;
    Matrix left_mult(const Matrix& x) const;   // matrix of y -> x y
    Matrix right_mult(const Matrix& x) const;  // matrix of y -> y x
    Matrix product(const Matrix& x, const Matrix& y) const { return left_mult(x) * y; }

    bool operator==(const GradedAlgebra& o) const;

private:
    GradingDatum datum_;
    Field field_;
    std::vector<int> degrees_;
    std::vector<Matrix> left_;
    Matrix unit_;
    std::vector<std::size_t> gens_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Left graded module on a homogeneous basis; act[i] is the action of e_i.
struct GradedModule {
    AlgebraPtr alg;
    std::vector<int> degrees;
    std::vector<Matrix> act;

    std::size_t dim() const { return degrees.size(); }
    const GradingDatum& datum() const { return alg->datum(); }
    const Field& field() const { return alg->field(); }
    Matrix action(const Matrix& r) const;
    bool operator==(const GradedModule& o) const;
};

struct GradedMap {
    GradedModule source, target;
    int degree = 0;
    Matrix m;
};

Report check_algebra(const GradedAlgebra& a);
Report check_module(const GradedModule& m);
Report check_map(const GradedMap& f);
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap identity_map(const GradedModule& m);

GradedModule zero_module(AlgebraPtr alg);
GradedModule free_module(AlgebraPtr alg, const std::vector<int>& generator_degrees);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
// X[n]: degrees drop by n, action twisted by (-1)^{n|r|}.
GradedModule shift(const GradedModule& m, int n);
// Module on a sub/quotient space of m (ops restricted or descended).
GradedModule restrict_module(const GradedModule& m, const Subobject& s);
GradedModule descend_module(const GradedModule& m, const Quotient& q);

// Homogeneous maps L -> M of one degree. Coordinates of an element are its
// entries at the positions of the free variables of the constraint system.
struct HomSpace {
    int degree = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<Matrix> basis;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    Field field;

    std::size_t dim() const { return basis.size(); }
    Matrix coords(const Matrix& f) const;
    Matrix element(const Matrix& c) const;
    bool contains(const Matrix& f) const;
};

// Maps F of degree n with F A_g = (-1)^{n|g|} B_g F for the given operator
// pairs (A_g on the source, B_g on the target, g of degree op_degree[g]).
HomSpace hom_space(const GradingDatum& datum, const Field& field, const std::vector<int>& src,
                   const std::vector<int>& tgt, int n, const std::vector<Matrix>& src_ops,
                   const std::vector<Matrix>& tgt_ops, const std::vector<int>& op_degrees);
HomSpace hom_graded(const GradedModule& l, const GradedModule& m, int n);
std::vector<HomSpace> hom_graded_all(const GradedModule& l, const GradedModule& m);

struct KernelData {
    GradedModule object;
    Matrix incl;
};
struct CokernelData {
    GradedModule object;
    Matrix proj;
    Matrix section;
};
struct ImageData {
    GradedModule object;
    Matrix corestriction;  // source -> image
    Matrix incl;           // image -> target
};
// f homogeneous of any degree satisfying the sign rule.
KernelData kernel(const GradedMap& f);
CokernelData cokernel(const GradedMap& f);
ImageData image(const GradedMap& f);

struct PullbackData {
    GradedModule object;
    Matrix to_a, to_b;
};
struct PushoutData {
    GradedModule object;
    Matrix from_a, from_b;
};
PullbackData pullback(const GradedMap& f, const GradedMap& g);
PushoutData pushout(const GradedMap& f, const GradedMap& g);

struct FreeCover {
    GradedModule free;
    std::vector<int> generator_degrees;
    std::vector<Matrix> generators;  // generator images in the covered module
    Matrix epi;                      // free -> covered module
};
// Generators chosen degree by degree in increasing order; greedy over the
// basis (optionally in a permuted order) and then pruned to an irredundant set.
FreeCover free_cover(const GradedModule& m, const std::vector<std::size_t>* order = nullptr);
// Column index block of generator g inside a free module: basis (s, g) sits
// at g * dim R + s.
Matrix free_map_from_values(const GradedModule& free, const std::vector<int>& generator_degrees,
                            const GradedModule& target, const std::vector<Matrix>& values);

struct ProjResolution {
    GradedModule module;
    std::vector<FreeCover> stages;      // stage i covers the kernel of stage i-1
    std::vector<Matrix> differentials;  // d_i : F_i -> F_{i-1} for i >= 1
    KernelData last_kernel;             // kernel of F_l -> F_{l-1} (or of F_0 -> M)
    bool exact = false;
};
ProjResolution proj_resolution(const GradedModule& m, std::size_t length, std::uint64_t order_seed = 0);

std::size_t ext_dim(const GradedModule& m, const GradedModule& n, std::size_t degree, std::uint64_t order_seed = 0);
// Sum of ext_dim(m, n[j], degree) over all shifts j keeping n inside the window.
std::size_t ext_dim_total(const GradedModule& m, const GradedModule& n, std::size_t degree);
std::size_t hom0_dim(const GradedModule& l, const GradedModule& m);

std::string module_key(const GradedModule& m);

}  // namespace dgbec
