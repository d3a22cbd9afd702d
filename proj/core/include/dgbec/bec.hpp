#pragma once

#include "dgbec/dg.hpp"

#include <functional>

namespace dgbec {

// A subspace of rows x cols matrices given by an independent basis.
struct MatrixSpan {
    Field field;
    std::size_t rows = 0, cols = 0;
    std::vector<Matrix> basis;
    Matrix stacked;  // (rows * cols) x dim, column k is basis[k] read row by row

    std::size_t dim() const { return basis.size(); }
    std::optional<Matrix> coords(const Matrix& f) const;
    Matrix element(const Matrix& c) const;
    bool contains(const Matrix& f) const { return coords(f).has_value(); }
};
MatrixSpan span_of_matrices(const Field& field, std::size_t rows, std::size_t cols, const std::vector<Matrix>& gens);
// The part of a graded Hom space killed by every constraint.
MatrixSpan constrained_span(const HomSpace& h, const std::vector<std::function<Matrix(const Matrix&)>>& constraints);

// A complex of matrix spaces with differential matrices in span coordinates.
struct SpanComplex {
    GradingDatum datum;
    Field field;
    std::vector<int> degrees;
    std::vector<MatrixSpan> spaces;
    std::vector<Matrix> differential;  // degrees[k] -> degrees[k] + 1

    const MatrixSpan* space(int i) const;
    std::size_t dim(int i) const;
    Matrix d(int i) const;
    std::size_t cohomology_dim(int i) const;
    std::vector<Matrix> cocycles(int i) const;
    bool d_squared_zero() const;
};

// (X, sigma): sigma of degree -1 with d(sigma) = id and sigma^2 = 0.
struct BecObject {
    DgObject base;
    Matrix sigma;
    bool operator==(const BecObject& o) const { return base == o.base && sigma == o.sigma; }
};
Report check_bec(const BecObject& x);
// d^bec(f) = sigma_Y f - (-1)^i f sigma_X for f of bec degree i (A-degree -i).
Matrix d_bec(const BecObject& x, const BecObject& y, int i, const Matrix& f);
// Hom^i = closed morphisms X -> Y of degree -i.
SpanComplex bec_hom(const BecObject& x, const BecObject& y);
// f in Z^0 of the bec category: closed of degree 0 and commuting with sigma.
bool is_bec_morphism(const BecObject& x, const BecObject& y, const Matrix& f);

// Phi(A) = cone(id_{A[-1]}) on blocks A[-1] + A, with the maps
// iota(a) = (a, 0) of degree 1, pi(p, q) = q of degree 0,
// iota_p(a) = (0, a) of degree 0, pi_p(p, q) = p of degree -1.
struct PhiData {
    BecObject object;
    Matrix iota, pi, iota_p, pi_p;
};
PhiData phi(const DgObject& a);
DgObject psi_plus(const BecObject& x);
DgObject psi_minus(const BecObject& x);
// Extension of Phi to degree-0 morphisms that need not be closed.
Matrix phi_tilde(const DgObject& a, const DgObject& b, const Matrix& f);

// Z0(X -> A) <-> Z0(X^bec -> Phi(A)): g = iota_p f + iota f sigma_X, inverse pi g.
Matrix adj_left(const BecObject& x, const DgObject& a, const Matrix& f);
Matrix adj_left_inverse(const DgObject& a, const Matrix& g);
// closed degree-1 A -> X <-> Z0(Phi(A) -> X^bec): g = f pi_p + sigma_X f pi, inverse g iota.
Matrix adj_right(const DgObject& a, const BecObject& x, const Matrix& f);
Matrix adj_right_inverse(const DgObject& a, const Matrix& g);

// Xi(A) = cone(id_{A[-1]}) with 0 -> A[-1] -> Xi(A) -> A -> 0.
struct XiData {
    DgObject object;
    DgObject sub;  // A[-1]
    Matrix incl, proj;
};
XiData xi(const DgObject& a);
Matrix xi_map(const Matrix& f);
// Psi+ Phi(A) -> Xi(A)
Matrix xi_nat_iso(const DgObject& a);

// (W, sigma, tau): sigma^2 = 0 = tau^2, sigma tau + tau sigma = id, d(sigma) = id, d(tau) = 0.
struct BecBecObject {
    DgObject base;
    Matrix sigma, tau;
    bool operator==(const BecBecObject& o) const
    {
        return base == o.base && sigma == o.sigma && tau == o.tau;
    }
};
Report check_becbec(const BecBecObject& w);
BecBecObject becbec(const DgObject& a);
// g = (-1)^i iota_p f pi + iota f pi_p + iota_p d(f) pi_p for f in Hom^i(A, B).
Matrix becbec_map(const DgObject& a, const DgObject& b, int i, const Matrix& f);
// The component g_11 = pi_p g iota, inverse to becbec_map on its image.
Matrix becbec_preimage(const DgObject& a, const DgObject& b, const Matrix& g);
// Hom^i = {f in Hom^i(U, V) : d f = 0, d^bec f = 0}, differential tau_V f - (-1)^i f tau_U.
SpanComplex becbec_hom(const BecBecObject& u, const BecBecObject& v);
Matrix d_becbec(const BecBecObject& u, const BecBecObject& v, int i, const Matrix& f);

struct BecBecInverse {
    DgObject object;
    Matrix idempotent;  // sigma tau on the twist W(-tau)
    Matrix iso;         // becbec(A) -> W, closed and compatible with sigma and tau
};
BecBecInverse becbec_inverse(const BecBecObject& w);

// Upsilon(M) = (G+(M), sigma) with sigma(m + delta m') = m'.
BecObject upsilon_cdg(const RingPtr& ring, const GradedModule& m);
BecObject upsilon_complexes(const RingPtr& ring, const GradedModule& m);
Matrix upsilon_map(const Matrix& f);
struct UpsilonRecovery {
    GradedModule module;
    Matrix idempotent;  // sigma d_X
    Matrix iso;         // Upsilon(M) -> X, closed and compatible with sigma
};
UpsilonRecovery upsilon_recover(const BecObject& x);

// E = cone(id_X), S = X + X[1] and the mutually inverse closed isomorphisms
// s: E -> S, e: S -> E compatible with sigma and tau.
struct CompositionIso {
    BecBecObject e_obj, s_obj;
    Matrix s, e;
};
CompositionIso difficult_composition_iso(const BecObject& x);
// Checks the natural isomorphisms on each object and the naturality squares
// for a basis of closed degree-0 morphisms between consecutive objects.
Report nat_iso_suite(const std::vector<BecObject>& objects);

}  // namespace dgbec
