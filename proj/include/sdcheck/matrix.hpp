#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sdcheck/fp.hpp"

namespace sdcheck {

// Dense row-major matrix over F_p. Zero-dimensional shapes are legal and
// behave as identities of the empty space.
struct Mat {
    std::uint64_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;  // rows*cols residues in [0, p)

    Mat() = default;
    Mat(std::uint64_t p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}
    Mat(std::uint64_t p_, std::size_t r, std::size_t c, std::vector<std::uint64_t> entries)
        : p(p_), rows(r), cols(c), a(std::move(entries)) {
        if (a.size() != rows * cols) throw std::invalid_argument("Mat: entry count mismatch");
        for (auto& x : a) x %= p;
    }

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_zero() const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    bool is_square() const { return rows == cols; }

    bool operator==(const Mat& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    static Mat eye(std::uint64_t p, std::size_t n) {
        Mat m(p, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
        return m;
    }
    static Mat zero(std::uint64_t p, std::size_t r, std::size_t c) { return Mat(p, r, c); }
};

Mat add(const Mat& x, const Mat& y);
Mat sub(const Mat& x, const Mat& y);
Mat neg(const Mat& x);
Mat scale(const Mat& x, std::uint64_t c);
Mat mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat hstack(const Mat& x, const Mat& y);
Mat vstack(const Mat& x, const Mat& y);

// Kronecker product with the convention
//   (x (x) y)[i*y.rows + k, j*y.cols + l] = x[i,j] * y[k,l].
Mat kron(const Mat& x, const Mat& y);

// Column i of m as a rows x 1 matrix, and assembly from columns.
Mat column(const Mat& m, std::size_t j);
Mat from_columns(std::uint64_t p, std::size_t rows, const std::vector<Mat>& cols);

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<std::size_t> rref(Mat& m);

std::size_t mat_rank(const Mat& m);

// Columns form a basis of the right null space {v : m v = 0};
// column count equals cols - rank.
Mat mat_kernel(const Mat& m);

// Any x with a x = b, or nullopt when the system is infeasible.
// Throws on row-count mismatch.
std::optional<Mat> mat_solve(const Mat& a, const Mat& b);

std::optional<Mat> mat_inverse(const Mat& m);
bool is_invertible(const Mat& m);

// Presentation of F^n / span(columns of rel) in coordinates on the standard
// basis vectors complementary to the row-reduced span: proj * sect = id, and
// ker(proj) = span(rel).
struct Quotient {
    std::size_t dim = 0;
    Mat proj;  // dim x n
    Mat sect;  // n x dim
};
Quotient quotient_by_span(std::uint64_t p, std::size_t n, const Mat& rel);

// Row-major vectorization helpers: vec(X) stacks the rows of X.
Mat vec_rows(const Mat& x);
Mat unvec_rows(const Mat& v, std::uint64_t p, std::size_t rows, std::size_t cols);

}  // namespace sdcheck
