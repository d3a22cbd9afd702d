#pragma once

#include "dgbec/bec.hpp"

#include <functional>

namespace dgbec {

// Z0-complex X^0 -> ... -> X^m.
struct ExactComplex {
    std::vector<DgObject> terms;
    std::vector<Matrix> maps;
};
bool is_z0_exact(const ExactComplex& s);
TotData tot_of(const ExactComplex& s, int start);

// 0 -> U -j-> V -k-> W -> 0 in Z0.
struct Ses {
    DgObject u, v, w;
    Matrix j, k;
    ExactComplex complex() const { return {{u, v, w}, {j, k}}; }
};
bool check_ses(const Ses& s);

enum class WitnessKind { Zero, Leaf, Shift, Cone, Summand, HomotopyEquivalence };
const char* witness_kind_name(WitnessKind k);

// Certificate that object is absolutely acyclic.
//  Zero: object = 0.
//  Leaf: object = tot(ses, start).
//  Shift: object = children[0].object[shift].
//  Cone: object = cone(children[0].object, children[1].object, map).
//  Summand: incl: object -> child, proj: child -> object, d(homotopy) = id - proj incl.
//  HomotopyEquivalence: u: object -> child, v: child -> object,
//      d(h1) = id - v u on object, d(h2) = id - u v on child.
struct AcyclicityWitness {
    WitnessKind kind = WitnessKind::Zero;
    DgObject object;
    Ses ses;
    int start = 0;
    int shift = 0;
    Matrix map, incl, proj, homotopy, u, v, h1, h2;
    std::vector<AcyclicityWitness> children;

    int depth() const;
    std::size_t node_count() const;
};
Report validate_witness(const AcyclicityWitness& w);
AcyclicityWitness zero_witness(const DgObject& zero);
AcyclicityWitness leaf_witness(const Ses& s, int start);
// Contractible object as homotopy equivalent to zero.
AcyclicityWitness contractible_witness(const DgObject& x, const Matrix& contraction);

// Tot(S) with a witness of depth at most the number of middle terms.
struct TotWitness {
    TotData tot;
    AcyclicityWitness witness;
};
TotWitness tot_exact_witness(const ExactComplex& s, int start = 0);

// Closed v, h1, h2 making u: x -> y a homotopy equivalence, found by one linear solve.
struct HomotopyInverse {
    Matrix v, h1, h2;
};
std::optional<HomotopyInverse> find_homotopy_inverse(const DgObject& x, const DgObject& y, const Matrix& u);

// The first closed (iso, when required) combination sum eps_i pieces_i with signs eps_i = +-1.
std::optional<Matrix> signed_combination(const DgObject& x, const DgObject& y, const std::vector<Matrix>& pieces,
                                         bool require_iso);

// Graded oracles.
bool graded_projective(const GradedModule& m);
bool graded_injective(const GradedModule& m);
// Hom_k(R, M) with the unit M -> Hom_k(R, M); basis (i, k) at i * dim M + k.
struct CoInduced {
    GradedModule module;
    Matrix unit;
};
CoInduced coinduced(const GradedModule& m);
// The closed map B -> G-(M) adjoint to a graded map g: B -> M.
Matrix gminus_transport(const GradedModule& m, const CdgModule& b, const Matrix& g);

// P -> B (epi) with P = G+(F) for a free cover F of B, or B -> J (mono) with J = G-(I), I injective.
struct Cover {
    DgObject object;
    Matrix map;
    GradedModule graded;  // F or I
};
Cover one_step_cover(const DgObject& b);
Cover one_step_embedding(const DgObject& a);

struct Replacement {
    DgObject object;  // P (or J)
    Matrix map;       // P -> B (or B -> J)
    ExactComplex complex;  // P_l -> ... -> P_0 -> B (or B -> J_0 -> ... -> J_l)
    std::size_t length = 0;
    ConeData cone;
    AcyclicityWitness cone_witness;
};
Replacement graded_projective_replacement(const DgObject& b, std::size_t n);
Replacement graded_injective_replacement(const DgObject& b, std::size_t n);

struct SemiorthogonalityCertificate {
    std::vector<Matrix> morphisms, homotopies;
};
// Every closed X -> J is null-homotopic (J graded-injective).
SemiorthogonalityCertificate semiorthogonality_check(const AcyclicityWitness& x, const DgObject& j);
// Every closed P -> X is null-homotopic (P graded-projective).
SemiorthogonalityCertificate semiorthogonality_check_projective(const DgObject& p, const AcyclicityWitness& x);

// Component of a map a -> tot(ses, start) on term i (0 = U, 1 = V, 2 = W).
Matrix tot_component(const TotData& t, std::size_t i, const Matrix& p);
// p: A -> T = tot(ses, start) closed of degree n; t: A -> V with k t = h.
// Returns H of degree n - 1 with d(H) = p, H = (s, t, 0) up to the sign of the shift.
Matrix tot_contracting_homotopy(const Ses& ses, int start, const DgObject& a, int n, const Matrix& p,
                                const Matrix& t);

// Hom(Psi+ X, A) against G-(S) with S_m = {g in Hom^m(X, A) : g sigma = 0} and G-(S)^n = S_{n-1} + S_n.
struct PsiPair {
    Matrix g, h;
};
PsiPair psi_hom_forward(const BecObject& x, const DgObject& a, int n, const Matrix& f);
Matrix psi_hom_inverse(const BecObject& x, const DgObject& a, int n, const PsiPair& gh);
// g in S_{m-1} as the bec morphism iota g + iota_p d(g): X -> Phi(A) of degree m.
Matrix psi_to_bec(const BecObject& x, const DgObject& a, int m, const Matrix& g);
struct PsiHomIso {
    std::vector<int> degrees;
    std::vector<std::size_t> source_dims, target_dims;
    std::vector<Matrix> forward, inverse;  // coordinates, Hom^n basis vs S_{n-1} + S_n bases
    Report check;
};
PsiHomIso hom_from_psi_iso(const BecObject& x, const DgObject& a);

// p~: Psi+ X -> tot(ses, start) closed of degree n and, with N = n - start - 1, t: X -> Phi(V)
// of degree N - 1 with k pi_p t = h~ sigma. Returns t~ with k t~ = h~.
Matrix lift_through_psi(const BecObject& x, const Ses& ses, int start, int n, const Matrix& ptilde,
                        const Matrix& t);

// Bec cover of a bec object: (L, closed sigma-compatible epi L -> K).
struct BecCover {
    BecObject object;
    Matrix map;
};
using CoverFn = std::function<BecCover(const BecObject&)>;
BecCover free_bec_cover(const BecObject& k);

struct Approach {
    DgObject g;
    Matrix q;  // G -> F
    ConeData cone;  // cone(q)
    AcyclicityWitness cone_witness;
    Matrix homotopy;  // G -> T of degree -1 with d = phi q
    bool fast_path = false;
};
Approach approach(const DgObject& f, const Ses& ses, int start, const Matrix& phi, bool allow_fast_path = true,
                  const CoverFn& cover = {});

// X = cone(x, s, m) with x = tot(ses, start), so the triangle is S -> X -> x[1].
struct TriangleData {
    Ses ses;
    int start = 0;
    DgObject s;
    Matrix m;
    DgObject x() const;
    ConeData cone() const;
};
struct TriangleDescent {
    Ses ses;  // 0 -> R -> Y -> P -> 0
    BecObject k;
    ConeData c;  // cone(R, Y, incl)
    Matrix q;    // C -> P
    DgObject r_shift;  // R[1]
    Matrix r;          // R[1] -> S
    Matrix homotopy;   // C -> X of degree -1 with d = phi q - iota r pi_C
    Matrix t_homotopy;  // C -> x[1] of degree -1 with d = pi phi q
};
TriangleDescent triangle_descent(const TriangleData& tri, const DgObject& p, const Matrix& phi);

struct Totalization {
    ExactComplex complex;  // Y_k -> ... -> Y_0 -> X
    TotData tot;
    Matrix incl, proj, idempotent;  // X -> Tot, Tot -> X closed with proj incl = id
};
Totalization witness_to_totalization(const AcyclicityWitness& w);
// A summand witness over tot_exact_witness of the totalization.
AcyclicityWitness normalize_witness(const AcyclicityWitness& w);

struct SpadeCover {
    DgObject c;
    Matrix epi;     // C -> B
    Matrix to_k;    // C^# -> K graded
};
SpadeCover spade_cover(const DgObject& b, const GradedModule& k, const Matrix& e);

// 0 -> Y -> A_n -> ... -> A_1 -> X -> 0 of graded modules; terms Y, A_n, ..., A_1, X.
struct NExtension {
    std::vector<GradedModule> terms;
    std::vector<Matrix> maps;
    std::size_t n() const { return terms.size() - 2; }
    const GradedModule& a(std::size_t i) const { return terms[n() + 1 - i]; }
    // A_i -> A_{i-1} with A_0 = X, A_{n+1} = Y.
    const Matrix& d(std::size_t i) const { return maps[n() + 1 - i]; }
};
bool is_exact(const NExtension& e);
// Cocycles Z_i = ker(A_i -> A_{i-1}) as a subspace basis of A_i.
Matrix cocycle_basis(const NExtension& e, std::size_t i);
NExtension zero_extension(const GradedModule& y, const GradedModule& x, std::size_t n);

struct SplitResult {
    bool split = false;
    std::optional<Matrix> retraction;  // of Y -> A_n when found directly
};
// Comparison against a projective resolution of X.
bool ext_class_oracle(const NExtension& e, std::uint64_t order_seed = 0);
SplitResult ext_class_is_split(const NExtension& e);
NExtension baer_sum(const NExtension& a, const NExtension& b);
// The extension pushed out from 0 -> Omega_n -> F_{n-1} -> ... -> F_0 -> X along c: Omega_n -> Y,
// with r of length n - 1 so that Omega_n is its last kernel.
struct PushedExtension {
    NExtension extension;
    GradedModule omega;
    Matrix from_a, from_b;  // F_{n-1} -> pushout, Y -> pushout
    bool class_zero = false;
};
PushedExtension pushed_extension(const ProjResolution& r, std::size_t n, const GradedModule& y, const Matrix& c);

// Components per term position, identity on Y and X.
using ElementaryEquivalence = std::vector<Matrix>;
bool is_elementary_equivalence(const NExtension& b, const NExtension& a, const ElementaryEquivalence& f);
bool is_elementary_epimorphism(const NExtension& b, const NExtension& a, const ElementaryEquivalence& f);
struct EpicEquivalence {
    NExtension c;
    ElementaryEquivalence to_a, to_b;
};
EpicEquivalence epic_elementary_equivalence(const NExtension& b, const NExtension& a, const ElementaryEquivalence& f);

// Z0 version with DgObject terms.
struct Z0Extension {
    std::vector<DgObject> terms;
    std::vector<Matrix> maps;
    std::size_t n() const { return terms.size() - 2; }
};
bool is_exact(const Z0Extension& e);
// Phi(A_.) read on underlying graded modules.
NExtension phi_extension(const Z0Extension& e);
struct GradedSplitDescent {
    Z0Extension c;
    std::vector<Matrix> to_a;  // per term position
    NExtension k;              // split elementary extension over Phi(A_.)
    Matrix retraction;         // of Phi(Y -> C_n)
};
GradedSplitDescent graded_split_descent(const Z0Extension& a);

}  // namespace dgbec
