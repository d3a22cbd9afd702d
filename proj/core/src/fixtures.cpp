#include "dgbec/fixtures.hpp"

#include <stdexcept>

namespace dgbec {

AlgebraPtr make_algebra(const GradingDatum& datum, const Field& field, const std::vector<int>& degrees,
                        const ProductTable& products, std::size_t unit_index)
{
    const std::size_t n = degrees.size();
    std::vector<Matrix> left(n, Matrix(field, n, n));
    for (auto& [i, j, k, c] : products) left[i].add_at(k, j, Scalar(field, c));
    Matrix unit(field, n, 1);
    if (n) unit.set(unit_index, 0, 1);
    return std::make_shared<const GradedAlgebra>(datum, field, degrees, std::move(left), std::move(unit));
}

AlgebraPtr trivial_algebra(const GradingDatum& datum, const Field& field)
{
    return make_algebra(datum, field, {0}, {{0, 0, 0, 1}});
}

AlgebraPtr ke_algebra(const GradingDatum& datum, const Field& field)
{
    return make_algebra(datum, field, {0, -1}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
}

AlgebraPtr kex_algebra(const GradingDatum& datum, const Field& field)
{
    // 0 = 1, 1 = x, 2 = e, 3 = ex
    ProductTable t;
    for (std::size_t i = 0; i < 4; ++i) {
        t.push_back({0, i, i, 1});
        if (i) t.push_back({i, 0, i, 1});
    }
    t.push_back({1, 2, 3, 1});
    t.push_back({2, 1, 3, 1});
    return make_algebra(datum, field, {0, 0, -1, -1}, t);
}

AlgebraPtr dual_numbers(const GradingDatum& datum, const Field& field)
{
    return make_algebra(datum, field, {0, 0}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
}

AlgebraPtr upper_triangular(const GradingDatum& datum, const Field& field)
{
    // 0 = e11, 1 = e12, 2 = e22; unit e11 + e22
    auto a = make_algebra(datum, field, {0, 0, 0}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}});
    Matrix unit(field, 3, 1);
    unit.set(0, 0, 1);
    unit.set(2, 0, 1);
    return std::make_shared<const GradedAlgebra>(datum, field, a->degrees(), a->left(), unit);
}

GradedModule regular_module(const AlgebraPtr& alg)
{
    GradedModule m;
    m.alg = alg;
    m.degrees = alg->degrees();
    m.act = alg->left();
    return m;
}

GradedModule simple_module(const AlgebraPtr& alg, int degree)
{
    GradedModule m;
    m.alg = alg;
    m.degrees = {alg->datum().normalize(degree)};
    for (std::size_t i = 0; i < alg->dim(); ++i) m.act.push_back(Matrix(alg->field(), 1, 1));
    for (std::size_t i = 0; i < alg->dim(); ++i)
        if (!alg->unit().is_zero_at(i, 0)) m.act[i].set(0, 0, alg->unit().at(i, 0));
    if (!check_module(m).empty()) throw std::invalid_argument("simple_module: unit coordinates do not define a module");
    return m;
}

GradingDatum fixture_window() { return GradingDatum::integers(-6, 6); }

RingPtr trivial_ring(const GradingDatum& datum, const Field& field) { return dg_ring(trivial_algebra(datum, field)); }

RingPtr ke_ring(const GradingDatum& datum, const Field& field)
{
    auto a = ke_algebra(datum, field);
    Matrix d(field, 2, 2);
    d.set(0, 1, 1);
    return make_ring(a, d, Matrix(field, 2, 1));
}

RingPtr curved_point(const Field& field)
{
    auto a = trivial_algebra(GradingDatum::cyclic(1), field);
    Matrix h(field, 1, 1);
    h.set(0, 0, 1);
    return make_ring(a, Matrix(field, 1, 1), h);
}

RingPtr kex_ring(const GradingDatum& datum, const Field& field)
{
    auto a = kex_algebra(datum, field);
    Matrix d(field, 4, 4);
    d.set(1, 2, 1);
    return make_ring(a, d, Matrix(field, 4, 1));
}

RingPtr mf_ring(const Field& field)
{
    auto a = dual_numbers(GradingDatum::cyclic(1), field);
    Matrix w(field, 2, 1);
    w.set(1, 0, 1);
    return matrix_factorization_ring(a, w);
}

std::vector<NamedRing> fixture_rings(const Field& field)
{
    const GradingDatum z = fixture_window();
    return {{"trivial", trivial_ring(z, field)},
            {"KE", ke_ring(z, field)},
            {"curved-point", curved_point(field)},
            {"KEX", kex_ring(z, field)},
            {"MF", mf_ring(field)}};
}

std::vector<NamedRing> complex_rings(const Field& field)
{
    const GradingDatum z = fixture_window();
    return {{"k", dg_ring(trivial_algebra(z, field))},
            {"dual", dg_ring(dual_numbers(z, field))},
            {"upper", dg_ring(upper_triangular(z, field))}};
}

}  // namespace dgbec
