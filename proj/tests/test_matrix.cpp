#include <doctest.h>

#include "sdcheck/matrix.hpp"
#include "sdcheck/rng.hpp"

using namespace sdcheck;

namespace {

Mat random_mat(std::uint64_t p, std::size_t r, std::size_t c, Rng& rng) {
    Mat m(p, r, c);
    for (auto& x : m.a) x = rng.below(p);
    return m;
}

// Oracle: image size of v -> m v over all of F_p^cols, by enumeration.
std::size_t image_size(const Mat& m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m.cols; ++i) total *= m.p;
    std::vector<std::vector<std::uint64_t>> seen;
    for (std::uint64_t code = 0; code < total; ++code) {
        Mat v(m.p, m.cols, 1);
        std::uint64_t rem = code;
        for (std::size_t i = 0; i < m.cols; ++i) {
            v.at(i, 0) = rem % m.p;
            rem /= m.p;
        }
        const Mat img = mul(m, v);
        if (std::find(seen.begin(), seen.end(), img.a) == seen.end()) seen.push_back(img.a);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("rank on the stated examples") {
    CHECK(mat_rank(Mat::eye(2, 2)) == 2);
    CHECK(mat_rank(Mat(3, 2, 1)) == 0);
    const Mat ones(2, 2, 2, {1, 1, 1, 1});
    // oracle: enumerate all 4 inputs; the image has 2 elements = 2^rank
    CHECK(image_size(ones) == 2);
    CHECK(mat_rank(ones) == 1);
}

TEST_CASE("kernel basis") {
    CHECK(mat_kernel(Mat::eye(5, 3)).cols == 0);
    CHECK(mat_kernel(Mat(2, 1, 2)).cols == 2);
    const Mat ones(2, 2, 2, {1, 1, 1, 1});
    const Mat k = mat_kernel(ones);
    REQUIRE(k.cols == 1);
    // oracle: both nonzero vectors; only (1,1) dies
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == 1);
    CHECK(mul(ones, k).is_zero());
}

TEST_CASE("solve") {
    const Mat b(5, 3, 1, {2, 3, 4});
    auto x = mat_solve(Mat::eye(5, 3), b);
    REQUIRE(x);
    CHECK(*x == b);
    CHECK_FALSE(mat_solve(Mat(2, 2, 2), Mat(2, 2, 1, {1, 0})));
    const Mat a(2, 2, 2, {1, 1, 0, 1});
    auto y = mat_solve(a, Mat(2, 2, 1, {0, 1}));
    REQUIRE(y);
    CHECK(mul(a, *y) == Mat(2, 2, 1, {0, 1}));
    CHECK(y->a == std::vector<std::uint64_t>{1, 1});
    CHECK_THROWS_AS(mat_solve(Mat(2, 2, 2), Mat(2, 3, 1)), std::invalid_argument);
}

TEST_CASE("kron convention") {
    CHECK(kron(Mat::eye(5, 2), Mat::eye(5, 3)) == Mat::eye(5, 6));
    CHECK(kron(Mat(2, 2, 2), Mat(2, 2, 2, {1, 1, 1, 1})).is_zero());
    const Mat a(3, 2, 1, {1, 1});
    const Mat b(3, 1, 2, {1, 2});
    CHECK(kron(a, b) == Mat(3, 2, 2, {1, 2, 1, 2}));
}

TEST_CASE("rank-nullity and solve soundness properties") {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        const std::uint64_t p = t % 2 ? 3 : 2;
        const Mat m = random_mat(p, 1 + rng.below(5), 1 + rng.below(5), rng);
        CHECK(mat_rank(m) + mat_kernel(m).cols == m.cols);
        const Mat x0 = random_mat(p, m.cols, 1, rng);
        const Mat b = mul(m, x0);
        auto x = mat_solve(m, b);
        REQUIRE(x);
        CHECK(mul(m, *x) == b);
    }
}

TEST_CASE("kron multiplicativity") {
    Rng rng(77);
    for (int t = 0; t < 25; ++t) {
        const std::uint64_t p = 5;
        const std::size_t a1 = 1 + rng.below(3), a2 = 1 + rng.below(3), a3 = 1 + rng.below(3);
        const std::size_t b1 = 1 + rng.below(3), b2 = 1 + rng.below(3), b3 = 1 + rng.below(3);
        const Mat a = random_mat(p, a1, a2, rng), c = random_mat(p, a2, a3, rng);
        const Mat b = random_mat(p, b1, b2, rng), d = random_mat(p, b2, b3, rng);
        CHECK(mul(kron(a, b), kron(c, d)) == kron(mul(a, c), mul(b, d)));
    }
}

TEST_CASE("quotient by a span") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        const std::uint64_t p = 3;
        const std::size_t n = 2 + rng.below(4);
        const Mat rel = random_mat(p, n, rng.below(4), rng);
        const Quotient q = quotient_by_span(p, n, rel);
        CHECK(q.dim == n - mat_rank(rel));
        CHECK(mul(q.proj, q.sect) == Mat::eye(p, q.dim));
        CHECK(mul(q.proj, rel).is_zero());
    }
}

TEST_CASE("zero-dimensional shapes are legal") {
    const Mat z(2, 0, 3);
    CHECK(mat_rank(z) == 0);
    CHECK(mat_kernel(z).cols == 3);
    CHECK(mul(Mat(2, 2, 0), Mat(2, 0, 3)) == Mat(2, 2, 3));
    CHECK(kron(z, Mat::eye(2, 2)).rows == 0);
}

TEST_CASE("primality is enforced") {
    CHECK_THROWS_AS(Fp(4), std::invalid_argument);
    CHECK_THROWS_AS(Fp(1), std::invalid_argument);
    CHECK(Fp(2147483647).p == 2147483647);  // 2^31 - 1
    const Fp f(7);
    for (std::uint64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}
