#pragma once

#include "dgbec/cdg.hpp"

#include <tuple>

namespace dgbec {

// e_i e_j = sum c e_k for the listed (i, j, k, c); unspecified products are 0.
using ProductTable = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long long>>;
AlgebraPtr make_algebra(const GradingDatum& datum, const Field& field, const std::vector<int>& degrees,
                        const ProductTable& products, std::size_t unit_index = 0);

AlgebraPtr trivial_algebra(const GradingDatum& datum, const Field& field);
// k[e]/(e^2), |e| = -1; basis 1, e.
AlgebraPtr ke_algebra(const GradingDatum& datum, const Field& field);
// k[e, x]/(x^2, e^2, ex - xe), |e| = -1, |x| = 0; basis 1, x, e, ex.
AlgebraPtr kex_algebra(const GradingDatum& datum, const Field& field);
// k[x]/(x^2) concentrated in degree 0; basis 1, x.
AlgebraPtr dual_numbers(const GradingDatum& datum, const Field& field);
// Upper triangular 2x2 matrices in degree 0; basis e11, e12, e22.
AlgebraPtr upper_triangular(const GradingDatum& datum, const Field& field);

// The algebra as a left module over itself.
GradedModule regular_module(const AlgebraPtr& alg);
// k in degree d with e_i acting by the i-th unit coordinate; a module for
// local algebras whose non-unit basis spans the radical; throws std::invalid_argument otherwise.
GradedModule simple_module(const AlgebraPtr& alg, int degree = 0);

// Z-window used by the shipped fixtures.
GradingDatum fixture_window();

RingPtr trivial_ring(const GradingDatum& datum, const Field& field);
// k[e]/(e^2), d(e) = 1, h = 0.
RingPtr ke_ring(const GradingDatum& datum, const Field& field);
// k in even degree over Z/2 with d = 0, h = 1.
RingPtr curved_point(const Field& field);
// k[e, x]/(x^2, e^2, ex - xe), d(e) = x, h = 0.
RingPtr kex_ring(const GradingDatum& datum, const Field& field);
// k[x]/(x^2) over Z/2 with w = x.
RingPtr mf_ring(const Field& field);

struct NamedRing {
    std::string name;
    RingPtr ring;
};
std::vector<NamedRing> fixture_rings(const Field& field);
// Plain rings in degree 0 for the complexes instance.
std::vector<NamedRing> complex_rings(const Field& field);

}  // namespace dgbec
