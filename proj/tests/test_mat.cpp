#include <doctest.h>

#include <random>

#include "graft/errors.hpp"
#include "graft/mat.hpp"

using namespace graft;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Mat a(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            a.at(i, j) = Rational(static_cast<long long>(rng() % 7) - 3,
                                  static_cast<long long>(rng() % 3) + 1);
    return a;
}

} // namespace

TEST_CASE("mat_mul agrees with a hand computation") {
    const Mat a{{1, 2}, {3, 4}};
    const Mat b{{5, 6}, {7, 8}};
    const Mat ab{{19, 22}, {43, 50}};
    CHECK(mat_mul(a, b) == ab);
}

TEST_CASE("mat_mul shape mismatch names both shapes") {
    const Mat a(2, 3), b(2, 2);
    CHECK_THROWS_AS(mat_mul(a, b), ShapeError);
}

TEST_CASE("matrix product is associative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat a = random_mat(rng, 3, 2), b = random_mat(rng, 2, 4), c = random_mat(rng, 4, 3);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("identity is neutral") {
    std::mt19937_64 rng(11);
    const Mat a = random_mat(rng, 3, 4);
    CHECK(mat_mul(Mat::identity(3), a) == a);
    CHECK(mat_mul(a, Mat::identity(4)) == a);
}

TEST_CASE("kron is functorial: (A otimes B)(C otimes D) = AC otimes BD") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat a = random_mat(rng, 2, 3), c = random_mat(rng, 3, 2);
        const Mat b = random_mat(rng, 3, 2), d = random_mat(rng, 2, 3);
        CHECK(mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d)));
    }
}

TEST_CASE("kron hand example") {
    const Mat a{{1, 2}};
    const Mat b{{0, 1}, {1, 0}};
    const Mat expect{{0, 1, 0, 2}, {1, 0, 2, 0}};
    CHECK(kron(a, b) == expect);
}

TEST_CASE("direct_sum is functorial") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat a = random_mat(rng, 2, 3), c = random_mat(rng, 3, 2);
        const Mat b = random_mat(rng, 1, 2), d = random_mat(rng, 2, 1);
        CHECK(mat_mul(direct_sum(a, b), direct_sum(c, d)) ==
              direct_sum(mat_mul(a, c), mat_mul(b, d)));
    }
}

TEST_CASE("dual is a contravariant involution") {
    std::mt19937_64 rng(19);
    const Mat a = random_mat(rng, 3, 2), b = random_mat(rng, 2, 4);
    CHECK(dual(dual(a)) == a);
    CHECK(dual(mat_mul(a, b)) == mat_mul(dual(b), dual(a)));
}

TEST_CASE("is_iso iff an exact inverse exists") {
    const Mat inv_ok{{2, 1}, {1, 1}};
    CHECK(is_iso(inv_ok));
    const auto inv = inverse(inv_ok);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(inv_ok, *inv) == Mat::identity(2));
    CHECK(mat_mul(*inv, inv_ok) == Mat::identity(2));

    const Mat singular{{1, 2}, {2, 4}};
    CHECK(!is_iso(singular));
    CHECK(!inverse(singular).has_value());

    const Mat rect(2, 3);
    CHECK(!is_iso(rect));
}

TEST_CASE("inverse of a rational matrix is exact") {
    Mat a{{1, 2}, {3, 5}};
    a.at(0, 0) = Rational(1, 2);
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(a, *inv) == Mat::identity(2));
}

TEST_CASE("zero-dimensional matrices compose") {
    const Mat a(0, 0);
    CHECK(mat_mul(a, a) == a);
    CHECK(is_iso(a));
    const Mat b(2, 0), c(0, 3);
    const Mat bc = mat_mul(b, c);
    CHECK(bc == Mat(2, 3));
}
