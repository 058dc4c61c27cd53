#include <doctest.h>

#include "sdcheck/module.hpp"
#include "sdcheck/rng.hpp"

using namespace sdcheck;

namespace {

LeftModule simple_top(const AlgebraPtr& a) {
    return quotient_module(regular_module(a), algebra_radical(*a).basis).module;
}

}  // namespace

TEST_CASE("validate_module") {
    const auto a = truncated_poly_algebra(2, 2);
    CHECK_FALSE(validate_module(regular_module(a)));
    // k + k: both x-actions zero
    LeftModule kk{a, 2, {Mat::eye(2, 2), Mat(2, 2, 2)}};
    CHECK_FALSE(validate_module(kk));
    // action of 1 not the identity
    LeftModule bad{a, 2, {Mat(2, 2, 2), Mat(2, 2, 2)}};
    const auto err = validate_module(bad);
    REQUIRE(err);
    CHECK(err->find("identity") != std::string::npos);
}

TEST_CASE("hom_space dimensions") {
    const auto a = truncated_poly_algebra(2, 2);
    const LeftModule reg = regular_module(a);
    const LeftModule k = simple_top(a);
    // Hom_A(A, M) has dimension dim M
    CHECK(hom_space(reg, reg).size() == 2);
    CHECK(hom_space(reg, k).size() == 1);
    CHECK(hom_space(k, reg).size() == 1);
    CHECK(hom_space(k, k).size() == 1);
    // oracle for Hom(k, k): brute-force both 1x1 matrices
    std::size_t count = 0;
    for (std::uint64_t v = 0; v < 2; ++v) {
        Mat f(2, 1, 1);
        f.at(0, 0) = v;
        bool ok = true;
        for (std::size_t i = 0; i < 2; ++i)
            if (mul(f, k.action[i]) != mul(k.action[i], f)) ok = false;
        if (ok) ++count;
    }
    CHECK(count == 2);  // zero and identity: a 1-dimensional space
    // every returned element intertwines
    for (const auto& f : hom_space(reg, k))
        CHECK(is_module_map(ModuleMap{reg, k, f}));
}

TEST_CASE("tensor_over") {
    const auto a = truncated_poly_algebra(2, 2);
    const Bimodule c = regular_bimodule(a);
    const LeftModule k = simple_top(a);
    CHECK(tensor_over(c, regular_module(a)).module.dim == 2);
    CHECK(tensor_over(c, k).module.dim == 1);
    CHECK(tensor_over(c, power_module(regular_module(a), 2)).module.dim == 4);
    CHECK(tensor_over(c, zero_module(a)).module.dim == 0);
    CHECK_FALSE(validate_module(tensor_over(c, k).module));
}

TEST_CASE("dual") {
    const auto a = truncated_poly_algebra(2, 2);
    const LeftModule reg = regular_module(a);
    const LeftModule d = dual_module(reg);
    CHECK(d.dim == reg.dim);
    CHECK_FALSE(validate_module(d));
    CHECK(same_module(dual_module(d), reg));
    CHECK(dual_module(zero_module(a)).dim == 0);
    // dual of a free right module is injective
    CHECK(is_injective(dual_module(regular_module(opposite(a)))));
}

TEST_CASE("projectivity and injectivity") {
    const auto a = truncated_poly_algebra(2, 2);
    const LeftModule k = simple_top(a);
    CHECK(is_projective(free_module(a, 2)));
    CHECK(is_projective(zero_module(a)));
    CHECK_FALSE(is_projective(k));
    CHECK(is_flat(free_module(a, 2)));
    CHECK_FALSE(is_flat(k));
    // Frobenius: the regular module is injective; the simple is not
    CHECK(is_injective(regular_module(a)));
    CHECK_FALSE(is_injective(k));
    // oracle for !is_projective(k): scan all linear maps k -> R for a section
    const LeftModule reg = regular_module(a);
    bool found = false;
    for (std::uint64_t v = 0; v < 4; ++v) {
        Mat s(2, 2, 1, {v & 1, (v >> 1) & 1});
        if (!is_module_map(ModuleMap{k, reg, s})) continue;
        // the cover R ->> k is the quotient by the radical
        const Mat pi(2, 1, 2, {1, 0});
        if (mul(pi, s) == Mat::eye(2, 1)) found = true;
    }
    CHECK_FALSE(found);
    // cross-check the Ext route against the direct section search
    const FreeCover fc = free_cover(k);
    const auto section = lift_through(ModuleMap{fc.free, k, fc.surj}, identity_map(k));
    CHECK(is_projective(k) == section.has_value());
    const auto section2 =
        lift_through(ModuleMap{free_module(a, 1), reg, free_cover(reg).surj}, identity_map(reg));
    CHECK(section2.has_value());
}

TEST_CASE("projectivity respects direct sums") {
    const auto a = truncated_poly_algebra(2, 2);
    const LeftModule k = simple_top(a);
    for (std::size_t kk = 1; kk <= 3; ++kk) CHECK(is_projective(free_module(a, kk)));
    CHECK(is_projective(direct_sum(a, {free_module(a, 1), free_module(a, 2)}).module));
    CHECK_FALSE(is_projective(direct_sum(a, {k, free_module(a, 1)}).module));
    CHECK_FALSE(is_projective(direct_sum(a, {k, k}).module));
}

TEST_CASE("direct sums satisfy the biproduct identities") {
    const auto a = matrix_ring(2, 2);
    CHECK(direct_sum(a, {}).module.dim == 0);
    const LeftModule reg = regular_module(a);
    const DirectSum d = direct_sum(a, {reg, reg});
    CHECK(d.module.dim == 2 * reg.dim);
    CHECK_FALSE(validate_module(d.module));
    Mat total(2, d.module.dim, d.module.dim);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(mul(d.proj[i], d.inj[i]) == Mat::eye(2, reg.dim));
        total = add(total, mul(d.inj[i], d.proj[i]));
    }
    CHECK(total == Mat::eye(2, d.module.dim));
    CHECK(is_projective(d.module));
}

TEST_CASE("submodule closure produces a short exact sequence") {
    const auto a = truncated_poly_algebra(2, 2);
    const LeftModule reg = regular_module(a);
    // the vector x generates span{x} = k
    Mat x(2, 2, 1, {0, 1});
    const ShortExactSeq ses = submodule_closure(reg, x);
    CHECK_FALSE(validate_ses(ses));
    CHECK(ses.incl.source.dim == 1);
    CHECK(ses.proj.target.dim == 1);
    // full basis gives the whole module
    CHECK(submodule_closure(reg, Mat::eye(2, 2)).incl.source.dim == 2);
    CHECK(submodule_closure(reg, Mat(2, 2, 0)).incl.source.dim == 0);
}

TEST_CASE("random modules are valid and reproducible") {
    const auto a = square_zero_plane_algebra(2);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const LeftModule m = random_module(a, 6, s);
        CHECK(m.dim <= 6);
        CHECK_FALSE(validate_module(m));
        const LeftModule m2 = random_module(a, 6, s);
        CHECK(same_module(m, m2));
    }
    CHECK(random_module(a, 0, 3).dim == 0);
    const LeftModule c = conjugate_module(random_module(a, 5, 1), 9);
    CHECK_FALSE(validate_module(c));
}

TEST_CASE("iso_test") {
    const auto a = truncated_poly_algebra(2, 2);
    const LeftModule reg = regular_module(a);
    const LeftModule k = simple_top(a);
    CHECK(iso_test(reg, reg).kind == IsoResult::Kind::Yes);
    CHECK(iso_test(k, reg).kind == IsoResult::Kind::No);
    // k + k vs R: both dimension 2, no invertible intertwiner
    const LeftModule kk = direct_sum(a, {k, k}).module;
    const auto r = iso_test(kk, reg);
    CHECK(r.kind == IsoResult::Kind::No);
    // disguised regular module
    const auto y = iso_test(conjugate_module(reg, 4), reg);
    REQUIRE(y.kind == IsoResult::Kind::Yes);
    CHECK(is_invertible(y.witness));
}

TEST_CASE("hom-tensor adjunction dimensions") {
    const auto a = matrix_ring(2, 2);
    const Bimodule c = regular_bimodule(a);
    Rng rng(5);
    for (int t = 0; t < 6; ++t) {
        const LeftModule m = random_module(a, 5, rng.next());
        const LeftModule n = random_module(a, 5, rng.next());
        const TensorModule cm = tensor_over(c, m);
        const HomModule hn = hom_from_bimodule(c, n);
        CHECK(hom_space(cm.module, n).size() == hom_space(m, hn.module).size());
    }
}

TEST_CASE("free covers and the induced-map models") {
    const auto a = square_zero_plane_algebra(2);
    const LeftModule k = simple_top(a);
    const FreeCover fc = free_cover(k);
    CHECK(fc.rank == 1);
    CHECK(mat_rank(fc.surj) == k.dim);
    CHECK(fc.kernel.module.dim == 2);
    // hom_induced against a hand-built generic computation
    const FreeCover fc1 = free_cover(fc.kernel.module);
    const Mat d1 = mul(fc.kernel.incl, fc1.surj);
    const Mat delta = hom_induced(k, *a, d1, fc.rank, fc1.rank);
    // Hom(A^1, k) = k and Hom(A^2, k) = k^2; the induced map must kill
    // everything since the differential lands in the radical
    CHECK(delta.rows == fc1.rank * k.dim);
    CHECK(delta.cols == fc.rank * k.dim);
    CHECK(delta.is_zero());
    // the regular module covers itself exactly
    const FreeCover freg = free_cover(regular_module(matrix_ring(2, 2)));
    CHECK(freg.rank == 1);
    CHECK(freg.kernel.module.dim == 0);
}

TEST_CASE("module maps factor through surjections and injections") {
    const auto a = truncated_poly_algebra(2, 3);
    const LeftModule reg = regular_module(a);
    // splitting the identity through itself
    CHECK(lift_through(identity_map(reg), identity_map(reg)).has_value());
    // k does not lift through the radical quotient
    const LeftModule k = simple_top(a);
    const auto rad = algebra_radical(*a);
    const QuotientModule q = quotient_module(reg, rad.basis);
    const ModuleMap pi{reg, q.module, q.proj};
    CHECK_FALSE(lift_through(pi, identity_map(q.module)).has_value());
}
