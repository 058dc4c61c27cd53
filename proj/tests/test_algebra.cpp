#include <doctest.h>

#include "sdcheck/algebra.hpp"

using namespace sdcheck;

namespace {

bool spans_equal(const Mat& a, const Mat& b) {
    return mat_rank(a) == mat_rank(b) && mat_rank(hstack(a, b)) == mat_rank(a);
}

}  // namespace

TEST_CASE("validate_algebra on the stated examples") {
    CHECK_FALSE(validate_algebra(*field_algebra(2)));
    const auto m2 = matrix_ring(2, 2);
    CHECK_FALSE(validate_algebra(*m2));
    // flip one structure constant: E12*E21 = E22 instead of E11 (the unit
    // laws are untouched, so the witness names an associativity triple)
    auto table = m2->table;
    table[(1 * 4 + 2) * 4 + 0] = 0;
    table[(1 * 4 + 2) * 4 + 3] = 1;
    const auto broken = make_algebra(2, 4, table, m2->one, "broken");
    const auto err = validate_algebra(*broken);
    REQUIRE(err);
    CHECK(err->find("triple") != std::string::npos);
}

TEST_CASE("opposite") {
    const auto a = truncated_poly_algebra(2, 2);
    CHECK(opposite(a)->table == a->table);  // commutative
    const auto m = matrix_ring(3, 2);
    const auto mop = opposite(m);
    CHECK_FALSE(validate_algebra(*mop));
    CHECK(opposite(mop).get() == m.get());
    // E12 * E21 = E11 becomes E21 *op E12 = E11
    CHECK(mop->c(2, 1, 0) == 1);
    CHECK(m->c(1, 2, 0) == 1);
}

TEST_CASE("radical on the stated examples") {
    CHECK(jacobson_radical(*matrix_ring(2, 2)).basis.cols == 0);
    const auto r = jacobson_radical(*truncated_poly_algebra(2, 2));
    CHECK(r.basis.cols == 1);
    CHECK(r.nilpotency_index == 2);
    const auto t = jacobson_radical(*triangular_ring(2, 1));
    CHECK(t.basis.cols == 1);
    CHECK(t.nilpotency_index == 2);
    // modular group algebra: J(F3[C3]) is spanned by g-1 and g^2-1
    const auto g = jacobson_radical(*group_ring(3, cyclic_group(3)));
    CHECK(g.basis.cols == 2);
    CHECK(g.nilpotency_index == 3);
}

TEST_CASE("radical agrees with the brute-force oracle for small algebras") {
    const std::vector<AlgebraPtr> algs = {
        field_algebra(2),         truncated_poly_algebra(2, 2), truncated_poly_algebra(2, 3),
        truncated_poly_algebra(3, 2), square_zero_plane_algebra(2), matrix_ring(2, 2),
        triangular_ring(2, 1),    triangular_ring(2, 0),        group_ring(2, cyclic_group(2)),
        group_ring(3, cyclic_group(3)), truncated_poly_algebra(5, 2)};
    for (const auto& a : algs) {
        const auto fast = jacobson_radical(*a);
        const Mat slow = radical_bruteforce(*a);
        CHECK(spans_equal(fast.basis, slow));
        // J(A^op) has the same dimension
        CHECK(jacobson_radical(*opposite(a)).basis.cols == fast.basis.cols);
        // J(A/J) = 0
        const auto q = quotient_algebra(*a, fast.basis, a->name + "/J");
        CHECK_FALSE(validate_algebra(*q.alg));
        CHECK(jacobson_radical(*q.alg).basis.cols == 0);
        // J^t = 0 exactly at the reported index
        if (fast.basis.cols) {
            auto nil = ideal_nilpotency(*a, fast.basis);
            REQUIRE(nil);
            CHECK(*nil == fast.nilpotency_index);
        }
    }
}

TEST_CASE("constructors") {
    CHECK(matrix_ring(2, 1)->dim == 1);
    const auto m = matrix_ring(3, 2);
    CHECK(m->dim == 4);
    CHECK_FALSE(is_commutative(*m));
    // E11 * E12 = E12
    CHECK(m->c(0, 1, 1) == 1);
    CHECK(triangular_ring(2, 0)->dim == 2);
    CHECK(is_commutative(*triangular_ring(2, 0)));
    const auto t32 = triangular_ring(3, 2);
    CHECK(t32->dim == 4);
    CHECK(jacobson_radical(*t32).basis.cols == 2);
    CHECK(jacobson_radical(*t32).nilpotency_index == 2);
    CHECK(group_ring(5, cyclic_group(1))->dim == 1);
    const auto g2 = group_ring(2, cyclic_group(2));
    CHECK(g2->dim == 2);
    CHECK(is_commutative(*g2));
    // F2[C2] = F2[x]/((x-1)^2) has a 1-dimensional radical
    CHECK(jacobson_radical(*g2).basis.cols == 1);
    GroupTable bad = cyclic_group(3);
    bad.mul[0] = 1;
    CHECK(validate_group(bad));
    CHECK_THROWS_AS(group_ring(2, bad), std::invalid_argument);
}

TEST_CASE("module annihilator over a product algebra") {
    // over F2 x F2, a module supported on the first factor is annihilated by
    // the second factor
    const auto a = triangular_ring(2, 0);
    std::vector<Mat> action;
    for (std::size_t i = 0; i < 2; ++i) {
        Mat m(2, 1, 1);
        m.at(0, 0) = i == 0 ? 1 : 0;
        action.push_back(m);
    }
    const Mat ann = module_annihilator(*a, action);
    REQUIRE(ann.cols == 1);
    CHECK(ann.at(0, 0) == 0);
    CHECK(ann.at(1, 0) == 1);
    // the annihilator is a two-sided ideal
    CHECK(spans_equal(ideal_closure(*a, ann), ann));
    // brute force: scan all 4 elements
    std::size_t count = 0;
    for (std::uint64_t code = 0; code < 4; ++code) {
        Mat act(2, 1, 1);
        act.at(0, 0) = ((code & 1) * action[0].at(0, 0) + ((code >> 1) & 1) * action[1].at(0, 0)) % 2;
        if (act.is_zero()) ++count;
    }
    CHECK(count == 2);  // the span of the annihilator basis has 2 elements

    // regular module over A/J = A is faithful
    const auto q = quotient_algebra(*a, jacobson_radical(*a).basis, "q");
    CHECK(module_annihilator(*q.alg, q.alg->left_mats).cols == 0);
    // zero module is annihilated by everything
    std::vector<Mat> zero_action(2, Mat(2, 0, 0));
    CHECK(module_annihilator(*a, zero_action).cols == 2);
}

TEST_CASE("tensor product algebra") {
    const auto q = truncated_poly_algebra(2, 2);
    const auto a = tensor_product_algebra(q, matrix_ring(2, 2), "M2(Q)");
    CHECK(a->dim == 8);
    CHECK_FALSE(validate_algebra(*a));
    CHECK(jacobson_radical(*a).basis.cols == 4);
    CHECK_THROWS_AS(tensor_product_algebra(matrix_ring(2, 2), q, "x"), std::invalid_argument);
}
