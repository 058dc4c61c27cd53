#include "sdcheck/algebra.hpp"

#include <algorithm>

namespace sdcheck {

Mat Algebra::mult(const Mat& u, const Mat& v) const {
    if (u.rows != dim || v.rows != dim || u.cols != 1 || v.cols != 1)
        throw std::invalid_argument("Algebra::mult: coordinate shape");
    Mat r(field.p, dim, 1);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!u.at(i, 0)) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            const std::uint64_t uv = (u.at(i, 0) * v.at(j, 0)) % field.p;
            if (!uv) continue;
            for (std::size_t k = 0; k < dim; ++k)
                r.at(k, 0) = (r.at(k, 0) + uv * c(i, j, k)) % field.p;
        }
    }
    return r;
}

Mat Algebra::left_mult(const Mat& u) const {
    Mat m(field.p, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!u.at(i, 0)) continue;
        for (std::size_t x = 0; x < m.a.size(); ++x)
            m.a[x] = (m.a[x] + u.at(i, 0) * left_mats[i].a[x]) % field.p;
    }
    return m;
}

Mat Algebra::right_mult(const Mat& u) const {
    Mat m(field.p, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!u.at(i, 0)) continue;
        for (std::size_t x = 0; x < m.a.size(); ++x)
            m.a[x] = (m.a[x] + u.at(i, 0) * right_mats[i].a[x]) % field.p;
    }
    return m;
}

Mat Algebra::one_vec() const {
    Mat v(field.p, dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v.at(i, 0) = one[i];
    return v;
}

Mat Algebra::basis_vec(std::size_t i) const {
    Mat v(field.p, dim, 1);
    v.at(i, 0) = 1 % field.p;
    return v;
}

namespace {

// Dimension of the unital subalgebra generated by the given basis indices.
// Maintains a row-reduced span and closes it under products.
std::size_t generated_dim(const Algebra& a, const std::vector<std::size_t>& idx) {
    std::vector<Mat> basis;
    Mat span(a.field.p, 0, a.dim);  // kept in row echelon form
    auto insert = [&](const Mat& v) {
        Mat t = vstack(span, transpose(v));
        const auto piv = rref(t);
        if (piv.size() > span.rows) {
            t.rows = piv.size();
            t.a.resize(t.rows * t.cols);
            span = std::move(t);
            basis.push_back(v);
            return true;
        }
        return false;
    };
    insert(a.one_vec());
    for (auto i : idx) insert(a.basis_vec(i));
    bool grew = true;
    while (grew && span.rows < a.dim) {
        grew = false;
        const std::size_t n = basis.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (insert(a.mult(basis[i], basis[j]))) grew = true;
    }
    return span.rows;
}

std::vector<std::size_t> find_generators(const Algebra& a) {
    std::vector<std::size_t> gens;
    std::size_t cur = generated_dim(a, gens);
    while (cur < a.dim) {
        std::size_t best = a.dim, best_dim = cur;
        for (std::size_t i = 0; i < a.dim; ++i) {
            auto trial = gens;
            trial.push_back(i);
            const std::size_t d = generated_dim(a, trial);
            if (d > best_dim) {
                best_dim = d;
                best = i;
            }
        }
        if (best == a.dim) throw std::logic_error("find_generators: stuck");
        gens.push_back(best);
        cur = best_dim;
    }
    return gens;
}

}  // namespace

AlgebraPtr make_algebra(std::uint64_t p, std::size_t dim, std::vector<std::uint64_t> table,
                        std::vector<std::uint64_t> one, std::string name) {
    if (dim == 0) throw std::invalid_argument("make_algebra: dim must be >= 1");
    if (table.size() != dim * dim * dim) throw std::invalid_argument("make_algebra: table size");
    if (one.size() != dim) throw std::invalid_argument("make_algebra: unit size");
    auto alg = std::make_shared<Algebra>(Fp(p));
    auto& a = *alg;
    a.dim = dim;
    a.table = std::move(table);
    a.one = std::move(one);
    a.name = std::move(name);
    for (auto& x : a.table) x %= p;
    for (auto& x : a.one) x %= p;
    a.left_mats.reserve(dim);
    a.right_mats.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Mat L(p, dim, dim), R(p, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                L.at(k, j) = a.c(i, j, k);
                R.at(k, j) = a.c(j, i, k);
            }
        a.left_mats.push_back(std::move(L));
        a.right_mats.push_back(std::move(R));
    }
    a.gens = find_generators(a);
    return alg;
}

std::optional<std::string> validate_algebra(const Algebra& a) {
    const std::size_t n = a.dim;
    if (a.table.size() != n * n * n) return "malformed table dimensions";
    if (a.one.size() != n) return "malformed unit vector";
    for (std::size_t i = 0; i < n; ++i) {
        Mat ei = a.basis_vec(i);
        if (a.mult(a.one_vec(), ei) != ei) return "unit law fails: 1*e_" + std::to_string(i);
        if (a.mult(ei, a.one_vec()) != ei) return "unit law fails: e_" + std::to_string(i) + "*1";
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Mat eij = a.mult(a.basis_vec(i), a.basis_vec(j));
            for (std::size_t k = 0; k < n; ++k) {
                const Mat lhs = a.mult(eij, a.basis_vec(k));
                const Mat rhs = a.mult(a.basis_vec(i), a.mult(a.basis_vec(j), a.basis_vec(k)));
                if (lhs != rhs)
                    return "associativity fails at triple (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")";
            }
        }
    return std::nullopt;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    std::call_once(a->op_once, [&] {
        const std::size_t n = a->dim;
        std::vector<std::uint64_t> t(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = a->c(j, i, k);
        std::string nm = a->name;
        if (nm.size() > 3 && nm.substr(nm.size() - 3) == "^op")
            nm = nm.substr(0, nm.size() - 3);
        else
            nm += "^op";
        AlgebraPtr op = make_algebra(a->field.p, n, std::move(t), a->one, nm);
        std::call_once(op->op_once, [&] { op->op_cache = a; });
        a->op_cache = op;
    });
    return a->op_cache;
}

bool is_commutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = i + 1; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) return false;
    return true;
}

Mat ideal_closure(const Algebra& a, const Mat& seed) {
    Mat span(a.field.p, a.dim, 0);
    std::vector<Mat> basis;
    auto insert = [&](const Mat& v) {
        Mat t = hstack(span, v);
        if (mat_rank(t) > span.cols) {
            span = std::move(t);
            basis.push_back(v);
            return true;
        }
        return false;
    };
    for (std::size_t j = 0; j < seed.cols; ++j) insert(column(seed, j));
    for (std::size_t t = 0; t < basis.size(); ++t) {
        // basis grows during the loop; every new element gets processed once
        for (std::size_t i = 0; i < a.dim; ++i) {
            insert(mul(a.left_mats[i], basis[t]));
            insert(mul(a.right_mats[i], basis[t]));
        }
    }
    return span;
}

std::optional<std::size_t> ideal_nilpotency(const Algebra& a, const Mat& basis) {
    if (basis.cols == 0) return 1;
    Mat power = basis;
    for (std::size_t t = 1; t <= a.dim + 1; ++t) {
        if (power.cols == 0) return t;
        std::vector<Mat> prods;
        for (std::size_t i = 0; i < basis.cols; ++i)
            for (std::size_t j = 0; j < power.cols; ++j)
                prods.push_back(a.mult(column(basis, i), column(power, j)));
        Mat all = from_columns(a.field.p, a.dim, prods);
        Mat w = transpose(all);
        const auto piv = rref(w);
        Mat next(a.field.p, a.dim, piv.size());
        for (std::size_t r = 0; r < piv.size(); ++r)
            for (std::size_t k = 0; k < a.dim; ++k) next.at(k, r) = w.at(r, k);
        power = std::move(next);
    }
    return std::nullopt;
}

namespace {

// Trace of the integral lift of the regular matrix of z raised to the e-th
// power, computed modulo m.
std::uint64_t lifted_power_trace(const Algebra& a, const Mat& z, std::uint64_t e,
                                 std::uint64_t m) {
    const std::size_t n = a.dim;
    std::vector<std::uint64_t> base(n * n), acc(n * n, 0);
    {
        Mat L = a.left_mult(z);
        for (std::size_t i = 0; i < n * n; ++i) base[i] = L.a[i] % m;
    }
    for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1 % m;
    auto matmul = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
        std::vector<std::uint64_t> r(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const std::uint64_t v = x[i * n + k];
                if (!v) continue;
                for (std::size_t j = 0; j < n; ++j)
                    r[i * n + j] = (r[i * n + j] + v * y[k * n + j]) % m;
            }
        return r;
    };
    while (e) {
        if (e & 1) acc = matmul(acc, base);
        base = matmul(base, base);
        e >>= 1;
    }
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = (tr + acc[i * n + i]) % m;
    return tr;
}

// Correction function f_i: for i = 0 the ordinary representation trace mod p,
// for i >= 1 the trace of the p^i-th power of the integral lift divided by
// p^i, reduced mod p. Well-defined on the chain members it is applied to.
std::uint64_t trace_correction(const Algebra& a, const Mat& z, std::size_t level) {
    const std::uint64_t p = a.field.p;
    if (level == 0) {
        Mat L = a.left_mult(z);
        std::uint64_t tr = 0;
        for (std::size_t i = 0; i < a.dim; ++i) tr = (tr + L.at(i, i)) % p;
        return tr;
    }
    std::uint64_t pi = 1, mod = p;
    for (std::size_t t = 0; t < level; ++t) {
        pi *= p;
        mod *= p;
    }
    const std::uint64_t tr = lifted_power_trace(a, z, pi, mod);
    if (tr % pi != 0) throw std::logic_error("radical: trace divisibility violated");
    return (tr / pi) % p;
}

Mat radical_chain(const Algebra& a) {
    const std::uint64_t p = a.field.p;
    const std::size_t n = a.dim;
    std::size_t levels = 0;
    for (std::uint64_t q = 1; q <= n; q *= p) ++levels;  // least l with p^l > n
    Mat basis = Mat::eye(p, n);
    for (std::size_t i = 0; i < levels && basis.cols > 0; ++i) {
        const std::size_t m = basis.cols;
        Mat sys(p, m, m);
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v) {
                const Mat z = a.mult(column(basis, u), column(basis, v));
                sys.at(v, u) = trace_correction(a, z, i);
            }
        Mat ker = mat_kernel(sys);
        basis = mul(basis, ker);
    }
    return basis;
}

bool is_two_sided_ideal(const Algebra& a, const Mat& basis) {
    if (basis.cols == 0) return true;
    Mat all = basis;
    for (std::size_t i = 0; i < a.dim; ++i) {
        all = hstack(all, mul(a.left_mats[i], basis));
        all = hstack(all, mul(a.right_mats[i], basis));
    }
    return mat_rank(all) == basis.cols && mat_rank(basis) == basis.cols;
}

}  // namespace

Mat radical_bruteforce(const Algebra& a) {
    const std::uint64_t p = a.field.p;
    const std::size_t n = a.dim;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= p;
        if (count > 4096) throw std::invalid_argument("radical_bruteforce: algebra too large");
    }
    Mat rad(p, n, 0);
    Mat v(p, n, 1);
    for (std::uint64_t code = 1; code < count; ++code) {
        std::uint64_t rem = code;
        for (std::size_t i = 0; i < n; ++i) {
            v.at(i, 0) = rem % p;
            rem /= p;
        }
        const Mat ideal = ideal_closure(a, v);
        if (ideal_nilpotency(a, ideal)) {
            Mat t = hstack(rad, v);
            if (mat_rank(t) > rad.cols) rad = ideal_closure(a, t);
        }
    }
    return rad;
}

RadicalReport jacobson_radical(const Algebra& a) { return algebra_radical(a); }

const RadicalReport& algebra_radical(const Algebra& a) {
    std::call_once(a.rad_once, [&] {
        Mat basis = radical_chain(a);
        auto nil = basis.cols ? ideal_nilpotency(a, basis) : std::optional<std::size_t>(1);
        if (!nil || !is_two_sided_ideal(a, basis)) {
            // Should not happen; small algebras still get a correct answer.
            std::uint64_t count = 1;
            bool small = true;
            for (std::size_t i = 0; i < a.dim && small; ++i) {
                count *= a.field.p;
                if (count > 4096) small = false;
            }
            if (!small) throw std::logic_error("jacobson_radical: verification failed");
            basis = radical_bruteforce(a);
            nil = ideal_nilpotency(a, basis);
        }
        a.rad_cache = std::make_shared<RadicalReport>(RadicalReport{std::move(basis), *nil});
    });
    return *a.rad_cache;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Mat& ideal_basis,
                                 const std::string& name) {
    const Quotient q = quotient_by_span(a.field.p, a.dim, ideal_basis);
    const std::size_t m = q.dim;
    std::vector<std::uint64_t> table(m * m * m), one(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Mat prod = mul(q.proj, a.mult(column(q.sect, i), column(q.sect, j)));
            for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = prod.at(k, 0);
        }
    const Mat o = mul(q.proj, a.one_vec());
    for (std::size_t k = 0; k < m; ++k) one[k] = o.at(k, 0);
    return QuotientAlgebra{make_algebra(a.field.p, m, std::move(table), std::move(one), name),
                           q.proj, q.sect};
}

Mat module_annihilator(const Algebra& b, const std::vector<Mat>& action) {
    if (action.size() != b.dim) throw std::invalid_argument("module_annihilator: shape");
    const std::size_t md = action.empty() ? 0 : action[0].rows;
    Mat sys(b.field.p, md * md, b.dim);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t x = 0; x < md * md; ++x) sys.at(x, i) = action[i].a[x];
    return mat_kernel(sys);
}

// ---- example constructions ---------------------------------------------

AlgebraPtr field_algebra(std::uint64_t p) {
    return make_algebra(p, 1, {1}, {1}, "F" + std::to_string(p));
}

AlgebraPtr truncated_poly_algebra(std::uint64_t p, std::size_t k) {
    if (k < 1) throw std::invalid_argument("truncated_poly_algebra: k >= 1");
    std::vector<std::uint64_t> t(k * k * k, 0), one(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) t[(i * k + j) * k + (i + j)] = 1;
    one[0] = 1;
    return make_algebra(p, k, std::move(t), std::move(one),
                        "F" + std::to_string(p) + "[x]/(x^" + std::to_string(k) + ")");
}

AlgebraPtr square_zero_plane_algebra(std::uint64_t p) {
    // basis 1, x, y with x^2 = xy = yx = y^2 = 0
    const std::size_t n = 3;
    std::vector<std::uint64_t> t(n * n * n, 0), one(n, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { t[(i * n + j) * n + k] = 1; };
    for (std::size_t j = 0; j < n; ++j) {
        set(0, j, j);
        if (j) set(j, 0, j);
    }
    one[0] = 1;
    return make_algebra(p, n, std::move(t), std::move(one),
                        "F" + std::to_string(p) + "[x,y]/(x2,xy,y2)");
}

AlgebraPtr matrix_ring(std::uint64_t p, std::size_t n) {
    if (n < 1) throw std::invalid_argument("matrix_ring: n >= 1");
    const std::size_t d = n * n;
    std::vector<std::uint64_t> t(d * d * d, 0), one(d, 0);
    auto idx = [&](std::size_t i, std::size_t j) { return i * n + j; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) t[(idx(i, j) * d + idx(k, l)) * d + idx(i, l)] = 1;
    for (std::size_t i = 0; i < n; ++i) one[idx(i, i)] = 1;
    return make_algebra(p, d, std::move(t), std::move(one),
                        "M" + std::to_string(n) + "(F" + std::to_string(p) + ")");
}

AlgebraPtr triangular_ring(std::uint64_t p, std::size_t f_dim) {
    // basis: a = top unit, f_1..f_fdim, b = bottom unit
    const std::size_t n = f_dim + 2;
    std::vector<std::uint64_t> t(n * n * n, 0), one(n, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { t[(i * n + j) * n + k] = 1; };
    const std::size_t a = 0, b = n - 1;
    set(a, a, a);
    set(b, b, b);
    for (std::size_t u = 1; u + 1 < n; ++u) {
        set(a, u, u);  // a*f = f
        set(u, b, u);  // f*b = f
    }
    one[a] = 1;
    one[b] = 1;
    return make_algebra(p, n, std::move(t), std::move(one),
                        "T(F" + std::to_string(p) + ";" + std::to_string(f_dim) + ")");
}

std::optional<std::string> validate_group(const GroupTable& g) {
    const std::size_t n = g.order;
    if (n == 0 || g.mul.size() != n * n) return "malformed group table";
    for (auto x : g.mul)
        if (x >= n) return "group table entry out of range";
    if (g.identity >= n) return "identity out of range";
    auto m = [&](std::size_t i, std::size_t j) { return g.mul[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i)
        if (m(g.identity, i) != i || m(i, g.identity) != i) return "identity law fails";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (m(m(i, j), k) != m(i, m(j, k))) return "group associativity fails";
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inv = false;
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j) == g.identity && m(j, i) == g.identity) has_inv = true;
        if (!has_inv) return "element " + std::to_string(i) + " has no inverse";
    }
    return std::nullopt;
}

GroupTable cyclic_group(std::size_t n) {
    GroupTable g;
    g.order = n;
    g.mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.mul[i * n + j] = (i + j) % n;
    return g;
}

AlgebraPtr group_ring(std::uint64_t p, const GroupTable& g) {
    if (auto err = validate_group(g)) throw std::invalid_argument("group_ring: " + *err);
    const std::size_t n = g.order;
    std::vector<std::uint64_t> t(n * n * n, 0), one(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[(i * n + j) * n + g.mul[i * n + j]] = 1;
    one[g.identity] = 1;
    return make_algebra(p, n, std::move(t), std::move(one),
                        "F" + std::to_string(p) + "[C" + std::to_string(n) + "]");
}

AlgebraPtr tensor_product_algebra(const AlgebraPtr& q, const AlgebraPtr& b,
                                  const std::string& name) {
    if (q->field.p != b->field.p) throw std::invalid_argument("tensor_product_algebra: fields");
    if (!is_commutative(*q)) throw std::invalid_argument("tensor_product_algebra: Q not commutative");
    const std::uint64_t p = q->field.p;
    const std::size_t nq = q->dim, nb = b->dim, n = nq * nb;
    std::vector<std::uint64_t> t(n * n * n, 0), one(n, 0);
    auto idx = [&](std::size_t aq, std::size_t ab) { return aq * nb + ab; };
    for (std::size_t a1 = 0; a1 < nq; ++a1)
        for (std::size_t b1 = 0; b1 < nb; ++b1)
            for (std::size_t a2 = 0; a2 < nq; ++a2)
                for (std::size_t b2 = 0; b2 < nb; ++b2)
                    for (std::size_t ak = 0; ak < nq; ++ak) {
                        const std::uint64_t cq = q->c(a1, a2, ak);
                        if (!cq) continue;
                        for (std::size_t bk = 0; bk < nb; ++bk) {
                            const std::uint64_t cb = b->c(b1, b2, bk);
                            if (!cb) continue;
                            auto& slot = t[(idx(a1, b1) * n + idx(a2, b2)) * n + idx(ak, bk)];
                            slot = (slot + cq * cb) % p;
                        }
                    }
    for (std::size_t aq = 0; aq < nq; ++aq)
        for (std::size_t ab = 0; ab < nb; ++ab)
            one[idx(aq, ab)] = (q->one[aq] * b->one[ab]) % p;
    return make_algebra(p, n, std::move(t), std::move(one), name);
}

}  // namespace sdcheck
