#pragma once

#include "dgbec/cdg.hpp"

#include <optional>

namespace dgbec {

class DgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Instance { Complex, CdgMod };

// A complex over an algebra in degree 0 (ring with d = 0, h = 0) or a CDG-module.
struct DgObject {
    Instance instance = Instance::CdgMod;
    CdgModule module;

    std::size_t dim() const { return module.dim(); }
    const std::vector<int>& degrees() const { return module.degrees(); }
    const GradingDatum& datum() const { return module.datum(); }
    const Field& field() const { return module.field(); }
    const RingPtr& ring() const { return module.ring; }
    bool operator==(const DgObject& o) const { return instance == o.instance && module == o.module; }
};

Report check_object(const DgObject& x);
DgObject cdg_object(CdgModule m);
// Requires an algebra concentrated in degree 0 with zero d and h.
DgObject complex_object(CdgModule m);
// Terms X^lo .. X^hi (modules in degree 0) with differentials X^i -> X^{i+1}.
DgObject complex_from_terms(const RingPtr& ring, int lo, const std::vector<GradedModule>& terms,
                            const std::vector<Matrix>& differentials);
DgObject zero_object(Instance inst, const RingPtr& ring);
DgObject direct_sum(const DgObject& a, const DgObject& b);

HomComplex hom(const DgObject& x, const DgObject& y);
Matrix d_hom(const DgObject& x, const DgObject& y, int n, const Matrix& f);
Matrix dg_compose(const Matrix& g, const Matrix& f);
bool is_morphism(const DgObject& x, const DgObject& y, int n, const Matrix& f);
bool is_closed(const DgObject& x, const DgObject& y, int n, const Matrix& f);
std::vector<Matrix> cocycles(const DgObject& x, const DgObject& y, int n);
std::size_t h0_dim(const DgObject& x, const DgObject& y);

// X[n] with the closed isomorphisms to: X -> X[n] (degree -n) and from: X[n] -> X (degree n).
struct ShiftData {
    DgObject object;
    Matrix to, from;
};
ShiftData shift(const DgObject& x, int n);

bool mc_check(const DgObject& x, const Matrix& a);
DgObject twist(const DgObject& x, const Matrix& a);

// C = Y + X[1] twisted by f; iota, pi closed, iota_p, pi_p not.
struct ConeData {
    DgObject object;
    Matrix iota;    // Y -> C, degree 0
    Matrix pi;      // C -> X, degree 1
    Matrix iota_p;  // X -> C, degree -1
    Matrix pi_p;    // C -> Y, degree 0
    Matrix cochain;  // the twisting cochain on Y + X[1]
};
ConeData cone(const DgObject& x, const DgObject& y, const Matrix& f);

// Tot of X^start -> ... : the twist of the sum of X^i[-i] by the blocks (-1)^i delta_i.
struct TotData {
    DgObject object;
    int start = 0;
    std::vector<std::size_t> offsets;  // block offset of each term
    Matrix cochain;
};
TotData tot(const std::vector<DgObject>& terms, const std::vector<Matrix>& maps, int start = 0);

// t of degree n - 1 with d(t) = f, or none.
std::optional<Matrix> null_homotopy(const DgObject& x, const DgObject& y, int n, const Matrix& f);
bool is_null_homotopic(const DgObject& x, const DgObject& y, int n, const Matrix& f);
std::optional<Matrix> contracting_homotopy(const DgObject& x);
bool is_contractible(const DgObject& x);

struct Z0Kernel {
    DgObject object;
    Matrix incl;
};
struct Z0Cokernel {
    DgObject object;
    Matrix proj, section;
};
Z0Kernel z0_kernel(const DgObject& x, const DgObject& y, const Matrix& f);
Z0Cokernel z0_cokernel(const DgObject& x, const DgObject& y, const Matrix& f);
bool z0_ses_check(const DgObject& a, const DgObject& b, const DgObject& c, const Matrix& f, const Matrix& g);

// Closed degree-0 isomorphism test.
bool is_closed_iso(const DgObject& x, const DgObject& y, const Matrix& f);

}  // namespace dgbec
