#pragma once

#include "dgbec/fixtures.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dgbec {

// Degree-1 maps d on a graded module with the Leibniz rule, then d^2 = h on that affine space.
struct DifferentialSearch {
    std::size_t unknowns = 0;
    bool leibniz_consistent = false;
    std::size_t affine_dim = 0;
    bool exhaustive = false;  // every Leibniz solution was tested against d^2 = h
    std::size_t points_tested = 0;
    std::optional<Matrix> differential;
};
DifferentialSearch find_differential(const RingPtr& ring, const GradedModule& m, std::size_t max_points = 1u << 16);

// Graded modules of total dimension <= 2 over k[e, x]/(x^2, e^2, ex - xe), one per isomorphism class,
// with degrees inside the window.
std::vector<std::pair<std::string, GradedModule>> kex_small_modules(const AlgebraPtr& alg);

struct DemoResult {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<std::string> summary;
};
DemoResult demo_no_cdg_structure(const Field& f);
DemoResult demo_gplus_free(const Field& f);
DemoResult demo_no_dg_on_summand(const Field& f);
std::vector<std::string> demo_names();
DemoResult run_demo(const std::string& name, const Field& f);

}  // namespace dgbec
