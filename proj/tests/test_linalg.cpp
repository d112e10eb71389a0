#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "elim/matrix.hpp"
#include "elim/random.hpp"

using namespace elim;

namespace {

bool same(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

RationalMatrix random_matrix(Rng& rng, Eigen::Index n) {
    RationalMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = rng.rational_or_zero(9, 4);
    return m;
}

} // namespace

TEST_CASE("determinant: hand values") {
    CHECK(determinant(matrix_from_rows({{0, 2}, {1, 0}})) == -2);

    RationalMatrix id(5, 5);
    id.setIdentity();
    CHECK(determinant(id) == 1);

    CHECK(determinant(matrix_from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 0);

    // 0x0 empty-product convention.
    CHECK(determinant(RationalMatrix(0, 0)) == 1);

    CHECK(determinant(matrix_from_rows({{Rational(1, 2), Rational(1, 3)},
                                        {Rational(1, 4), Rational(1, 5)}})) ==
          Rational(1, 60));
}

TEST_CASE("determinant: non-square is rejected") {
    RationalMatrix m(2, 3);
    m.setZero();
    CHECK_THROWS_AS(determinant(m), Error);
}

TEST_CASE("determinant: multiplicative on random matrices up to 6x6") {
    Rng rng(424242u);
    for (int it = 0; it < 60; ++it) {
        Eigen::Index n = rng.range(0, 6);
        RationalMatrix a = random_matrix(rng, n);
        RationalMatrix b = random_matrix(rng, n);
        RationalMatrix ab = a * b;
        CHECK(determinant(ab) == determinant(a) * determinant(b));
    }
}

TEST_CASE("determinant: alternating under row swap") {
    Rng rng(5u);
    for (int it = 0; it < 40; ++it) {
        Eigen::Index n = rng.range(2, 6);
        RationalMatrix a = random_matrix(rng, n);
        Eigen::Index i = rng.range(0, static_cast<int>(n) - 1);
        Eigen::Index j = rng.range(0, static_cast<int>(n) - 1);
        if (i == j) continue;
        RationalMatrix b = a;
        b.row(i).swap(b.row(j));
        CHECK(determinant(b) == -determinant(a));
    }
}

TEST_CASE("determinant: triangular equals diagonal product") {
    Rng rng(77u);
    for (int it = 0; it < 40; ++it) {
        Eigen::Index n = rng.range(1, 6);
        RationalMatrix a(n, n);
        a.setZero();
        Rational prod(1);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i; j < n; ++j) a(i, j) = rng.rational_or_zero(9, 3);
            prod *= a(i, i);
        }
        CHECK(determinant(a) == prod);
    }
}

TEST_CASE("determinant: exactness on a denominator-heavy Hilbert block") {
    // det of the 5x5 Hilbert matrix, a classical exact-arithmetic witness:
    // 1/266716800000.
    RationalMatrix h(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j)
            h(i, j) = Rational(1, static_cast<long>(i + j + 1));
    CHECK(determinant(h) == Rational(Integer(1), Integer("266716800000")));
}

TEST_CASE("submatrix") {
    RationalMatrix m = matrix_from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    RationalMatrix c = submatrix(m, {0, 2}, {0, 2});
    CHECK(c.rows() == 2);
    CHECK(c(0, 0) == 1);
    CHECK(c(0, 1) == 3);
    CHECK(c(1, 0) == 7);
    CHECK(c(1, 1) == 9);

    RationalMatrix all = submatrix(m, {0, 1, 2}, {0, 1, 2});
    CHECK(same(all, m));

    RationalMatrix none = submatrix(m, {}, {});
    CHECK(none.rows() == 0);
    CHECK(determinant(none) == 1);

    CHECK_THROWS_AS(submatrix(m, {0, 3}, {0}), Error);
    CHECK_THROWS_AS(submatrix(m, {1, 0}, {0}), Error);
}
