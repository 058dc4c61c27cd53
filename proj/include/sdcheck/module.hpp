#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdcheck/algebra.hpp"

namespace sdcheck {

// Finite-dimensional unital left module: one action matrix per algebra basis
// element, acting on column coordinates.
struct LeftModule {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Mat> action;

    // Action of an arbitrary algebra element given by coordinates.
    Mat act(const Mat& coords) const;
};

LeftModule zero_module(const AlgebraPtr& a);
LeftModule regular_module(const AlgebraPtr& a);
// A^k with copy-major coordinates: index = copy * a.dim + coord.
LeftModule free_module(const AlgebraPtr& a, std::size_t k);

std::optional<std::string> validate_module(const LeftModule& m);
bool same_module(const LeftModule& x, const LeftModule& y);

// A map of modules over a common algebra; matrix is target.dim x source.dim.
struct ModuleMap {
    LeftModule source;
    LeftModule target;
    Mat mat;
};
ModuleMap identity_map(const LeftModule& m);
bool is_module_map(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

// 0 -> M' -> M -> M'' -> 0.
struct ShortExactSeq {
    ModuleMap incl;
    ModuleMap proj;
};
std::optional<std::string> validate_ses(const ShortExactSeq& s);

// F_p-basis of Hom_A(m, n), canonical w.r.t. row-reduced kernel order.
std::vector<Mat> hom_space(const LeftModule& m, const LeftModule& n);

// Basis with a coordinate solver, for expressing maps in the basis.
struct HomBasis {
    std::size_t source_dim = 0, target_dim = 0;
    std::vector<Mat> basis;
    Mat basis_cols;  // (target_dim*source_dim) x h
    Mat coords(const Mat& f) const;
};
HomBasis hom_basis(const LeftModule& m, const LeftModule& n);

// An (S,R)-bimodule: commuting left S-representation and right R-action
// (a representation of R^op on the same space).
struct Bimodule {
    AlgebraPtr left_alg;   // S
    AlgebraPtr right_alg;  // R
    std::size_t dim = 0;
    std::vector<Mat> left_action;   // lambda(s_i)
    std::vector<Mat> right_action;  // rho(r_j)

    LeftModule as_left() const;      // over S
    LeftModule as_right_op() const;  // over R^op
    // The same space as an (R^op, S^op)-bimodule.
    Bimodule flipped() const;
};
Bimodule make_bimodule(const AlgebraPtr& s, const AlgebraPtr& r, std::vector<Mat> left_action,
                       std::vector<Mat> right_action);
std::optional<std::string> validate_bimodule(const Bimodule& c);
Bimodule regular_bimodule(const AlgebraPtr& a);
Bimodule bimodule_direct_sum(const Bimodule& x, const Bimodule& y);

// Hom_S(C, n) as a left R-module via (r.f)(c) = f(c r); basis elements are
// the intertwiner matrices themselves.
struct HomModule {
    LeftModule module;       // over R
    std::vector<Mat> basis;  // n.dim x C.dim each
    Mat basis_cols;
    Mat coords(const Mat& f) const;
};
HomModule hom_from_bimodule(const Bimodule& c, const LeftModule& n);

// C (x)_R m as a left S-module: quotient of the F_p tensor square in the
// fixed complementary-standard-basis convention. proj/sect identify the
// quotient inside C.dim * m.dim pure-tensor coordinates (pair index
// a * m.dim + b).
struct TensorModule {
    LeftModule module;  // over S
    Mat proj;
    Mat sect;
    std::size_t cdim = 0, mdim = 0;
};
TensorModule tensor_over(const Bimodule& c, const LeftModule& m);

// Plain F_p tensor product X (x)_A Y of a right module (given over A^op)
// with a left module; no module structure survives.
struct FpTensor {
    std::size_t dim = 0;
    Mat proj;
    Mat sect;
};
FpTensor tensor_fp(const LeftModule& x_over_op, const LeftModule& y);

// F_p-linear dual with transposed actions, a module over the opposite algebra.
LeftModule dual_module(const LeftModule& m);

bool is_projective(const LeftModule& m);
bool is_injective(const LeftModule& m);
// Finite modules over finite rings are flat iff projective.
bool is_flat(const LeftModule& m);

struct DirectSum {
    LeftModule module;
    std::vector<Mat> inj;   // module.dim x part.dim
    std::vector<Mat> proj;  // part.dim x module.dim
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<LeftModule>& parts);
LeftModule power_module(const LeftModule& m, std::size_t k);

struct Submodule {
    LeftModule module;
    Mat incl;  // ambient.dim x module.dim
};
struct QuotientModule {
    LeftModule module;
    Mat proj;
    Mat sect;
};

// Smallest action-stable subspace containing the given column vectors.
Mat span_closure(const LeftModule& m, const Mat& vectors);
Submodule submodule_from_basis(const LeftModule& m, const Mat& basis);
QuotientModule quotient_module(const LeftModule& m, const Mat& stable_subspace);
ShortExactSeq submodule_closure(const LeftModule& m, const Mat& vectors);
Submodule kernel_module(const ModuleMap& f);

// Basis of the two-sided annihilator of m in b; for semisimple b the module
// contains every simple module iff this is zero.
Mat semisimple_annihilator(const Algebra& b, const LeftModule& m);

// Deterministic pseudo-random module: a random quotient of a random
// submodule of A^k, of dimension at most max_dim.
LeftModule random_module(const AlgebraPtr& a, std::size_t max_dim, std::uint64_t seed);
// Same module in a random basis.
LeftModule conjugate_module(const LeftModule& m, std::uint64_t seed);

struct IsoResult {
    enum class Kind { Yes, No, Unknown } kind;
    Mat witness;         // invertible intertwiner when kind == Yes
    std::string reason;  // when kind != Yes
};
// Never asserts a false yes/no; exhaustive when p^{dim Hom} <= 4096,
// otherwise up to 200 deterministic random trials.
IsoResult iso_test(const LeftModule& m, const LeftModule& n);

// f with phi o f = psi, for phi: X -> M and psi: Y -> M.
std::optional<Mat> lift_through(const ModuleMap& phi, const ModuleMap& psi);
// f with f o phi = psi, for phi: M -> X and psi: M -> Y.
std::optional<Mat> extend_through(const ModuleMap& phi, const ModuleMap& psi);

// ---- free presentations ---------------------------------------------------

// One resolution step: a surjection A^rank ->> m from greedily chosen
// generators (lifting a basis of m/Jm), with its kernel.
struct FreeCover {
    std::size_t rank = 0;
    LeftModule free;
    Mat surj;               // m.dim x (rank * a.dim)
    std::vector<Mat> gens;  // generator coordinates in m
    Submodule kernel;       // inside the free cover
};
FreeCover free_cover(const LeftModule& m);

// The elements a_{t,s} in A of a map d: A^b -> A^a determined by
// d(1_s) = (a_{t,s})_t; returned in t-major order.
std::vector<Mat> free_map_elements(const Algebra& a, const Mat& d, std::size_t ra, std::size_t rb);

// Hom(A^a, n) = n^a model: induced map n^a -> n^b of d: A^b -> A^a,
// block (s, t) = action of a_{t,s} on n.
Mat hom_induced(const LeftModule& n, const Algebra& a, const Mat& d, std::size_t ra,
                std::size_t rb);

// X (x) A^b = X^b model for a right module X (given over A^op): induced map
// X^b -> X^a of d: A^b -> A^a, block (t, s) = action of a_{t,s} on X.
Mat tensor_induced(const LeftModule& x_over_op, const Algebra& a, const Mat& d, std::size_t ra,
                   std::size_t rb);

}  // namespace sdcheck
