#include "sdcheck/matrix.hpp"

#include <cassert>

namespace sdcheck {

static void require_same_field(const Mat& x, const Mat& y) {
    if (x.p != y.p) throw std::invalid_argument("matrix: field mismatch");
}

Mat add(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("add: shape mismatch");
    Mat r(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] + y.a[i]) % x.p;
    return r;
}

Mat sub(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("sub: shape mismatch");
    Mat r(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] + x.p - y.a[i]) % x.p;
    return r;
}

Mat neg(const Mat& x) {
    Mat r(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] ? x.p - x.a[i] : 0;
    return r;
}

Mat scale(const Mat& x, std::uint64_t c) {
    c %= x.p;
    Mat r(x.p, x.rows, x.cols);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] * c) % x.p;
    return r;
}

Mat mul(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
    Mat r(x.p, x.rows, y.cols);
    const std::uint64_t p = x.p;
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t k = 0; k < x.cols; ++k) {
            const std::uint64_t v = x.at(i, k);
            if (!v) continue;
            const std::uint64_t* yr = y.a.data() + k * y.cols;
            std::uint64_t* rr = r.a.data() + i * r.cols;
            for (std::size_t j = 0; j < y.cols; ++j) rr[j] = (rr[j] + v * yr[j]) % p;
        }
    }
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.p, x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

Mat hstack(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
    Mat r(x.p, x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

Mat vstack(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    if (x.cols != y.cols) throw std::invalid_argument("vstack: column mismatch");
    Mat r(x.p, x.rows + y.rows, x.cols);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
    return r;
}

Mat kron(const Mat& x, const Mat& y) {
    require_same_field(x, y);
    Mat r(x.p, x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) {
            const std::uint64_t v = x.at(i, j);
            if (!v) continue;
            for (std::size_t k = 0; k < y.rows; ++k)
                for (std::size_t l = 0; l < y.cols; ++l)
                    r.at(i * y.rows + k, j * y.cols + l) = (v * y.at(k, l)) % x.p;
        }
    return r;
}

Mat column(const Mat& m, std::size_t j) {
    Mat c(m.p, m.rows, 1);
    for (std::size_t i = 0; i < m.rows; ++i) c.at(i, 0) = m.at(i, j);
    return c;
}

Mat from_columns(std::uint64_t p, std::size_t rows, const std::vector<Mat>& cols) {
    Mat r(p, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].rows != rows || cols[j].cols != 1)
            throw std::invalid_argument("from_columns: shape mismatch");
        for (std::size_t i = 0; i < rows; ++i) r.at(i, j) = cols[j].at(i, 0);
    }
    return r;
}

std::vector<std::size_t> rref(Mat& m) {
    const Fp f(m.p);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pr = r;
        while (pr < m.rows && m.at(pr, c) == 0) ++pr;
        if (pr == m.rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        const std::uint64_t inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = (m.at(r, j) * inv) % m.p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const std::uint64_t v = m.at(i, c);
            if (!v) continue;
            const std::uint64_t mv = m.p - v;
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + mv * m.at(r, j)) % m.p;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t mat_rank(const Mat& m) {
    Mat w = m;
    return rref(w).size();
}

Mat mat_kernel(const Mat& m) {
    Mat w = m;
    const auto pivots = rref(w);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat k(m.p, m.cols, m.cols - pivots.size());
    std::size_t out = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        k.at(c, out) = 1 % m.p;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], out) = w.at(r, c) ? m.p - w.at(r, c) : 0;
        ++out;
    }
    return k;
}

std::optional<Mat> mat_solve(const Mat& a, const Mat& b) {
    require_same_field(a, b);
    if (a.rows != b.rows) throw std::invalid_argument("mat_solve: row mismatch");
    Mat w = hstack(a, b);
    const auto pivots = rref(w);
    // Any pivot landing in the augmented block signals infeasibility.
    for (auto c : pivots)
        if (c >= a.cols) return std::nullopt;
    Mat x(a.p, a.cols, b.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols; ++j) x.at(pivots[r], j) = w.at(r, a.cols + j);
    return x;
}

std::optional<Mat> mat_inverse(const Mat& m) {
    if (!m.is_square()) return std::nullopt;
    auto x = mat_solve(m, Mat::eye(m.p, m.rows));
    if (!x) return std::nullopt;
    if (mul(m, *x) != Mat::eye(m.p, m.rows)) return std::nullopt;
    return x;
}

bool is_invertible(const Mat& m) { return m.is_square() && mat_rank(m) == m.rows; }

Quotient quotient_by_span(std::uint64_t p, std::size_t n, const Mat& rel) {
    if (rel.rows != n) throw std::invalid_argument("quotient_by_span: ambient dim mismatch");
    Mat w = transpose(rel);
    const auto pivots = rref(w);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Quotient q;
    q.dim = n - pivots.size();
    q.proj = Mat(p, q.dim, n);
    q.sect = Mat(p, n, q.dim);
    std::size_t out = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        q.proj.at(out, c) = 1 % p;
        // Reducing e_{pivot r} leaves -row_r on the free coordinates.
        for (std::size_t r = 0; r < pivots.size(); ++r)
            q.proj.at(out, pivots[r]) = w.at(r, c) ? p - w.at(r, c) : 0;
        q.sect.at(c, out) = 1 % p;
        ++out;
    }
    return q;
}

Mat vec_rows(const Mat& x) {
    Mat v(x.p, x.rows * x.cols, 1);
    v.a = x.a;
    return v;
}

Mat unvec_rows(const Mat& v, std::uint64_t p, std::size_t rows, std::size_t cols) {
    if (v.rows != rows * cols || v.cols != 1) throw std::invalid_argument("unvec_rows: shape");
    Mat m(p, rows, cols);
    m.a = v.a;
    return m;
}

}  // namespace sdcheck
