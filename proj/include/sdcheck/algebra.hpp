#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sdcheck/matrix.hpp"

namespace sdcheck {

struct Algebra;
struct RadicalReport;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional associative F_p-algebra given by structure constants
//   e_i * e_j = sum_k table[(i*dim + j)*dim + k] * e_k
// together with the coordinates of the multiplicative identity.
struct Algebra {
    Fp field;
    std::size_t dim;
    std::vector<std::uint64_t> table;  // dim^3, i-major / j-middle / k-minor
    std::vector<std::uint64_t> one;    // dim coordinates
    std::string name;

    // Left and right regular representations: L_i = matrix of x -> e_i x,
    // R_i = matrix of x -> x e_i, both on column coordinates.
    std::vector<Mat> left_mats;
    std::vector<Mat> right_mats;

    // A small set of basis indices that together with 1 generates the algebra;
    // intertwiner systems only need constraints for these.
    std::vector<std::size_t> gens;

    // One-time caches; an algebra instance is otherwise immutable.
    mutable std::once_flag op_once, rad_once;
    mutable AlgebraPtr op_cache;
    mutable std::shared_ptr<const RadicalReport> rad_cache;

    explicit Algebra(Fp f) : field(f), dim(0) {}

    std::uint64_t c(std::size_t i, std::size_t j, std::size_t k) const {
        return table[(i * dim + j) * dim + k];
    }

    // Product of two coordinate vectors (dim x 1 matrices).
    Mat mult(const Mat& u, const Mat& v) const;
    // Left/right multiplication operator for an arbitrary element.
    Mat left_mult(const Mat& u) const;
    Mat right_mult(const Mat& u) const;
    Mat one_vec() const;
    Mat basis_vec(std::size_t i) const;

    bool same_as(const Algebra& o) const {
        return field.p == o.field.p && dim == o.dim && table == o.table && one == o.one;
    }
};

// Shape-checks and precomputes representations; associativity is checked
// separately by validate_algebra.
AlgebraPtr make_algebra(std::uint64_t p, std::size_t dim, std::vector<std::uint64_t> table,
                        std::vector<std::uint64_t> one, std::string name);

// ok (nullopt) or a human-readable witness naming the failing triple/index.
std::optional<std::string> validate_algebra(const Algebra& a);

// Opposite algebra: first two table indices swapped. Cached per instance,
// so opposite(opposite(a)) is a itself.
AlgebraPtr opposite(const AlgebraPtr& a);

struct RadicalReport {
    Mat basis;                       // columns span J(A)
    std::size_t nilpotency_index;    // least t with J^t = 0 (1 when J = 0)
};

// Largest nilpotent two-sided ideal, which for a finite-dimensional algebra
// is the Jacobson radical. Uses the iterated trace-form algorithm with
// p-th-power corrections; the answer is verified and, for |A| <= 4096,
// falls back to element-wise search if verification ever fails.
RadicalReport jacobson_radical(const Algebra& a);

// Cached accessor used by resolution machinery.
const RadicalReport& algebra_radical(const Algebra& a);

// Independent oracle: span of all elements generating a nilpotent two-sided
// ideal, found by enumerating all p^dim elements. Requires p^dim <= 4096.
Mat radical_bruteforce(const Algebra& a);

struct QuotientAlgebra {
    AlgebraPtr alg;
    Mat proj;  // alg->dim x a.dim
    Mat sect;  // a.dim x alg->dim
};

// A / I for a two-sided ideal I (columns of ideal_basis).
QuotientAlgebra quotient_algebra(const Algebra& a, const Mat& ideal_basis, const std::string& name);

// Basis of the two-sided annihilator {b in B : b*action = 0} of a module
// given by its action matrices over B.
Mat module_annihilator(const Algebra& b, const std::vector<Mat>& action);

// Subspace closure under left and right multiplication (two-sided ideal
// generated by the given columns); returns a column basis.
Mat ideal_closure(const Algebra& a, const Mat& seed);

// Is the span of the given ideal basis nilpotent? Returns the nilpotency
// index, or nullopt if powers fail to vanish within dim+1 steps.
std::optional<std::size_t> ideal_nilpotency(const Algebra& a, const Mat& basis);

// ---- example constructions ---------------------------------------------

AlgebraPtr field_algebra(std::uint64_t p);
// F_p[x]/(x^k) on basis 1, x, ..., x^{k-1}.
AlgebraPtr truncated_poly_algebra(std::uint64_t p, std::size_t k);
// F_p[x,y]/(x^2, xy, y^2) on basis 1, x, y.
AlgebraPtr square_zero_plane_algebra(std::uint64_t p);
// M_n(F_p) on the matrix-unit basis E_11, E_12, ..., E_nn (row-major).
AlgebraPtr matrix_ring(std::uint64_t p, std::size_t n);
// Formal triangular ring [[Q, F], [0, Q]] with Q = F_p and F = F_p^f_dim;
// basis: top unit, f_1..f_fdim, bottom unit.
AlgebraPtr triangular_ring(std::uint64_t p, std::size_t f_dim);

struct GroupTable {
    std::size_t order = 0;
    std::vector<std::size_t> mul;  // order^2, row-major
    std::size_t identity = 0;
};
std::optional<std::string> validate_group(const GroupTable& g);
GroupTable cyclic_group(std::size_t n);
// F_p[G] on the group-element basis.
AlgebraPtr group_ring(std::uint64_t p, const GroupTable& g);

// Q (x)_{F_p} B for commutative Q; basis (q_a, b_i) in a-major order.
// The center embedding q -> q (x) 1 and the Q-basis 1 (x) b_i make the result
// a free Q-algebra, the input shape for base change.
AlgebraPtr tensor_product_algebra(const AlgebraPtr& q, const AlgebraPtr& b, const std::string& name);

bool is_commutative(const Algebra& a);

}  // namespace sdcheck
