#include "doctest.h"

#include "dgbec/linalg.hpp"

#include <random>

using namespace dgbec;

namespace {

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937_64& rng, int range = 7)
{
    std::uniform_int_distribution<int> u(-range, range);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, u(rng));
    return m;
}

}  // namespace

TEST_CASE("scalars parse exactly")
{
    auto f7 = Field::prime(7);
    CHECK(Scalar::parse(f7, "3").residue() == 3);
    CHECK(Scalar::parse(f7, "-1").residue() == 6);
    CHECK(Scalar::parse(f7, "1/2").residue() == 4);
    auto q = Field::rationals();
    CHECK(Scalar::parse(q, "6/4").str() == "3/2");
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "x"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), FieldError);
    CHECK_THROWS_AS(Field::prime(8), FieldError);
}

TEST_CASE("solve examples")
{
    auto f7 = Field::prime(7);
    auto x = solve(Matrix::from_rows(f7, {{2}}), Matrix::from_rows(f7, {{3}}));
    REQUIRE(x);
    CHECK(x->at(0, 0).residue() == 5);

    auto v = Matrix::from_rows(f7, {{1}, {4}, {6}});
    auto y = solve(Matrix::identity(f7, 3), v);
    REQUIRE(y);
    CHECK(*y == v);

    CHECK_FALSE(solve(Matrix(f7, 2, 2), Matrix::from_rows(f7, {{1}, {0}})));
    CHECK_THROWS_AS(solve(Matrix(f7, 2, 2), Matrix(f7, 3, 1)), ShapeError);
}

TEST_CASE("kernel, rank and image examples")
{
    auto f2 = Field::prime(2);
    auto k = kernel_basis(Matrix::from_rows(f2, {{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k == Matrix::from_rows(f2, {{1}, {1}}));
    for (std::size_t n = 0; n < 5; ++n) CHECK(rank(Matrix::identity(f2, n)) == n);
    CHECK(image_basis(Matrix(f2, 3, 2)).cols() == 0);
    CHECK(Matrix(f2, 0, 3).rows() == 0);
    CHECK(kernel_basis(Matrix(f2, 0, 3)).cols() == 3);
}

TEST_CASE("split_idempotent examples")
{
    auto f = Field::prime(7);
    auto [p, i] = split_idempotent(Matrix::identity(f, 3));
    CHECK(p.is_identity());
    CHECK(i.is_identity());
    auto [p0, i0] = split_idempotent(Matrix(f, 2, 2));
    CHECK(p0.rows() == 0);
    CHECK(p0.cols() == 2);
    CHECK(i0.rows() == 2);
    CHECK(i0.cols() == 0);
    auto [p1, i1] = split_idempotent(Matrix::from_rows(f, {{1, 0}, {0, 0}}));
    CHECK(p1 == Matrix::from_rows(f, {{1, 0}}));
    CHECK(i1 == Matrix::from_rows(f, {{1}, {0}}));
    CHECK_THROWS_AS(split_idempotent(Matrix::from_rows(f, {{2}})), NotIdempotent);
}

TEST_CASE("random kernels and idempotents over F7 and Q")
{
    std::mt19937_64 rng(7);
    for (Field f : {Field::prime(7), Field::rationals()}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = rng() % 9, c = rng() % 9;
            Matrix a = random_matrix(f, r, c, rng);
            if (trial % 3 == 0 && r > 1) a.set_block(r - 1, 0, a.row(0).scaled(3));
            Matrix k = kernel_basis(a);
            CHECK((a * k).is_zero());
            CHECK(rank(a) + k.cols() == c);
            CHECK(rank(k) == k.cols());
            Matrix im = image_basis(a);
            CHECK(im.cols() == rank(a));
            if (c > 0) {
                Matrix b = a * random_matrix(f, c, 2, rng);
                auto x = solve(a, b);
                REQUIRE(x);
                CHECK(a * *x == b);
            }
            // random idempotent: I (P) with P I = id
            std::size_t n = 1 + rng() % 7, m = rng() % (n + 1);
            Matrix ii = random_matrix(f, n, m, rng);
            if (rank(ii) != m) continue;
            Matrix pp = left_inverse(ii);
            Matrix e = ii * pp;
            auto [P, I] = split_idempotent(e);
            CHECK(I * P == e);
            CHECK((P * I).is_identity());
            CHECK(P.rows() == m);
        }
    }
}

TEST_CASE("rational elimination matches F_p reduction on integer input")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Matrix a = random_matrix(Field::rationals(), 5, 6, rng, 30);
        Echelon e = rref(a);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) CHECK(e.reduced.at(r, e.pivots[r]).is_one());
        CHECK(rank(a) == e.pivots.size());
        CHECK((a * kernel_basis(a)).is_zero());
    }
}

TEST_CASE("cokernel data completes a basis")
{
    auto f = Field::prime(7);
    Matrix i = Matrix::from_rows(f, {{1, 0}, {2, 0}, {0, 1}, {3, 3}});
    auto [q, s] = cokernel_data(i);
    CHECK((q * i).is_zero());
    CHECK((q * s).is_identity());
    CHECK(q.rows() == 2);
}
