#pragma once

#include "dgbec/graded.hpp"

namespace dgbec {

class NotMaurerCartan : public std::runtime_error {
public:
    NotMaurerCartan() : std::runtime_error("not Maurer-Cartan") {}
};

// (R*, d, h): d is the matrix of the degree-1 derivation, h a column in R^2.
struct CdgRing {
    AlgebraPtr alg;
    Matrix d;
    Matrix h;

    const GradingDatum& datum() const { return alg->datum(); }
    const Field& field() const { return alg->field(); }
};
using RingPtr = std::shared_ptr<const CdgRing>;

RingPtr make_ring(AlgebraPtr alg, Matrix d, Matrix h);
// (R*, 0, 0)
RingPtr dg_ring(AlgebraPtr alg);

struct CdgModule {
    RingPtr ring;
    GradedModule base;
    Matrix d;

    std::size_t dim() const { return base.dim(); }
    const std::vector<int>& degrees() const { return base.degrees; }
    const GradingDatum& datum() const { return base.datum(); }
    const Field& field() const { return base.field(); }
    bool operator==(const CdgModule& o) const { return base == o.base && d == o.d; }
};

Report check_cdg_ring(const CdgRing& r);
Report check_cdg_module(const CdgModule& m);

// (f, a): R -> S with f the matrix of a graded ring map and a in S^1.
struct CdgRingMorphism {
    RingPtr source, target;
    Matrix f;
    Matrix a;
};
Report check_morphism(const CdgRingMorphism& m);
CdgRingMorphism compose_morphisms(const CdgRingMorphism& g, const CdgRingMorphism& f);
// The ring S with (id, a): R -> S a morphism: d_S = d_R - [a, -], h_S = h_R - d_S(a) - a^2.
RingPtr transport(const RingPtr& r, const Matrix& a);
// [a, -] for homogeneous a: x -> a x - (-1)^{|a||x|} x a.
Matrix graded_commutator(const GradedAlgebra& alg, const Matrix& a, int deg_a);

CdgModule zero_cdg_module(const RingPtr& r);
CdgModule cdg_direct_sum(const CdgModule& a, const CdgModule& b);
// X[n]: degrees drop by n, action by (-1)^{n|r|}, differential by (-1)^n.
CdgModule cdg_shift(const CdgModule& m, int n);

// Morphism complex between two modules over the same ring.
struct HomComplex {
    GradingDatum datum;
    Field field;
    std::vector<int> degrees;          // degrees with possibly nonzero terms
    std::vector<HomSpace> spaces;      // aligned with degrees
    std::vector<Matrix> differential;  // coords at degrees[k] -> coords at degrees[k] + 1

    const HomSpace* space(int n) const;
    std::size_t dim(int n) const;
    Matrix d(int n) const;  // dim(n+1) x dim(n)
    std::size_t cohomology_dim(int n) const;
    bool d_squared_zero() const;
};

// d(f) = d_M f - (-1)^n f d_L
Matrix hom_differential(const CdgModule& l, const CdgModule& m, int n, const Matrix& f);
HomComplex hom_complex_cdg(const CdgModule& l, const CdgModule& m);
std::vector<int> hom_degree_range(const std::vector<int>& src, const std::vector<int>& tgt, const GradingDatum& dt);

// R*[delta]: basis e_i (index i) and e_i delta (index N + i).
struct DeltaExtension {
    RingPtr source;
    AlgebraPtr ring;
    Matrix partial;  // degree -1 derivation, r + s delta -> (-1)^{|s|} s
    Matrix rho;      // R*[delta] -> R*[-1], N x 2N
};
DeltaExtension delta_extension(const RingPtr& r);
// (r + s delta)(u + v delta) by the closed formula, on coordinate pairs.
Matrix delta_product(const DeltaExtension& e, const Matrix& x, const Matrix& y);

struct PairingRanks {
    std::vector<int> degrees;
    std::vector<std::size_t> dims, left_ranks, right_ranks;
    bool perfect() const;
};
PairingRanks pairing_rank(const DeltaExtension& e);

struct GSequence {
    GradedModule sub, quotient;
    Matrix incl, proj;
};
struct GModule {
    CdgModule object;
    GSequence sequence;
};
// G+(M) on basis m (block 0) and delta m' (block 1).
GModule g_plus(const RingPtr& r, const GradedModule& m);
// G-(M) on basis a (block 0, degree |m|) and b (block 1, degree |m| - 1).
GModule g_minus(const RingPtr& r, const GradedModule& m);
// Closed degree-0 isomorphism G-(M) -> G+(M)[1].
Matrix g_minus_to_shifted_plus(const RingPtr& r, const GradedModule& m);

// f: M* -> N* degree 0 graded; returns the closed map G+(M) -> N.
Matrix gplus_transport(const GradedModule& m, const CdgModule& n, const Matrix& f);
Matrix gplus_restrict(const GradedModule& m, const Matrix& g);

// d' = d + a, a in Hom^1(M, M) with d(a) + a^2 = 0.
bool is_maurer_cartan(const CdgModule& m, const Matrix& a);
CdgModule twist_cdg(const CdgModule& m, const Matrix& a);

// A in degree 0 over Z/2p, d = 0, h = w.
RingPtr matrix_factorization_ring(AlgebraPtr a, const Matrix& w);

// Z^0(R-mod) <-> graded R*[delta]-modules, delta acting by d_M.
GradedModule to_delta_module(const DeltaExtension& e, const CdgModule& m);
CdgModule from_delta_module(const DeltaExtension& e, const GradedModule& n);

}  // namespace dgbec
