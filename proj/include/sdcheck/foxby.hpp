#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sdcheck/complex.hpp"

namespace sdcheck {

// A validated bimodule together with lazily computed data reused across
// checks: endomorphism bases, the dual D(C), and the canonical tensor
// squares. Create via make_context.
struct FoxbyContext {
    Bimodule c;
    LeftModule c_left;  // C as a left S-module
    LeftModule c_rop;   // C as a left R^op-module

    explicit FoxbyContext(Bimodule bim);

    const HomBasis& homcc_s() const;    // Hom_S(C, C)
    const HomBasis& homcc_rop() const;  // Hom_{R^op}(C, C)
    const LeftModule& dc() const;       // D(C) = Hom_Fp(C, F_p) as a left R-module
    const HomBasis& end_dc() const;     // Hom_R(D(C), D(C))
    const TensorModule& c_tensor_dc() const;   // C (x)_R D(C)
    const TensorModule& c_tensor_reg() const;  // C (x)_R R

    // Projectivity of C on either side; lets the vanishing checks certify
    // flat-argument cases without touching a resolution.
    bool c_left_projective() const;
    bool c_rop_projective() const;

  private:
    mutable std::once_flag f_homcc_s, f_homcc_rop, f_dc, f_end_dc, f_tdc, f_treg, f_lp, f_rp;
    mutable std::shared_ptr<const HomBasis> m_homcc_s, m_homcc_rop, m_end_dc;
    mutable std::shared_ptr<const LeftModule> m_dc;
    mutable std::shared_ptr<const TensorModule> m_tdc, m_treg;
    mutable bool m_lp = false, m_rp = false;
};
using FoxbyCtx = std::shared_ptr<const FoxbyContext>;
// Throws on an invalid bimodule.
FoxbyCtx make_context(Bimodule c);

// ---- reports ---------------------------------------------------------------

enum class CondStatus { PassCertified, PassBounded, Fail };

struct Condition {
    std::string label;
    CondStatus status = CondStatus::Fail;
    std::string detail;
    std::optional<std::size_t> witness_degree;  // first failing Ext/Tor degree
};

enum class Overall { Yes, YesUpToBound, No };

struct SemidualizingReport {
    std::vector<Condition> conditions;  // a1, a2, b1, b2, c1, c2
    std::size_t bound = 0;
    Overall overall = Overall::No;
    std::string witness;                       // failing labels, comma-joined
    std::size_t end_s_dim = 0, end_rop_dim = 0;  // dim Hom_S(C,C), dim Hom_{R^op}(C,C)
    const Condition* find(const std::string& label) const;
};

struct FaithfulReport {
    bool faithful = false;
    std::string witness;  // which side fails and the annihilator dimension
};

struct MembershipReport {
    std::string class_name;  // "Auslander" or "Bass"
    std::vector<Condition> conditions;
    std::size_t bound = 0;
    bool member = false;     // all conditions hold (up to the bound)
    bool certified = false;  // vanishing conditions carry certificates
    std::string witness;     // first failing condition
    const Condition* find(const std::string& label) const;
};

// ---- canonical maps --------------------------------------------------------

struct HomothetyMaps {
    ModuleMap gamma_s;  // S -> Hom_{R^op}(C,C), s -> (c -> s c)
    ModuleMap gamma_r;  // R -> Hom_S(C,C), r -> (c -> c r)
    bool s_iso = false, r_iso = false;
};
HomothetyMaps homothety_maps(const FoxbyContext& ctx);

// mu_M : M -> Hom_S(C, C (x)_R M), x -> (c -> c (x) x)
struct MuMap {
    ModuleMap map;
    TensorModule tensored;  // C (x) M
    HomModule target;       // Hom_S(C, C (x) M)
};
MuMap mu_map(const FoxbyContext& ctx, const LeftModule& m);

// nu_N : C (x)_R Hom_S(C, N) -> N, c (x) f -> f(c)
struct NuMap {
    ModuleMap map;
    HomModule hom;          // Hom_S(C, N)
    TensorModule tensored;  // C (x) Hom_S(C, N)
};
NuMap nu_map(const FoxbyContext& ctx, const LeftModule& n);

// Both composite identities nu_{C(x)M} o (C (x) mu_M) = id and
// Hom(C, nu_N) o mu_{Hom(C,N)} = id, as exact matrix checks.
struct EvaluationIdentities {
    bool tensor_side = false;
    bool hom_side = false;
};
EvaluationIdentities evaluation_identities(const FoxbyContext& ctx, const LeftModule& m,
                                           const LeftModule& n);

// Abelian-group-level evaluation maps, as matrices between the canonical
// coordinate spaces.
struct EvalMap {
    std::size_t source_dim = 0, target_dim = 0;
    Mat mat;
    bool bijective() const {
        return source_dim == target_dim && mat_rank(mat) == source_dim;
    }
};
// omega: Hom_S(M,N) (x)_R F -> Hom_S(M, N (x)_R F)
EvalMap omega_map(const LeftModule& m_over_s, const Bimodule& n, const LeftModule& f_over_r);
// theta: M (x)_R Hom_S(N,I) -> Hom_S(Hom_{R^op}(M,N), I)
EvalMap theta_map(const LeftModule& m_over_rop, const Bimodule& n, const LeftModule& i_over_s);

// ---- the checks ------------------------------------------------------------

SemidualizingReport check_semidualizing(const FoxbyContext& ctx, std::size_t bound);
// Caller is responsible for semidualizing having been verified.
FaithfulReport check_faithful(const FoxbyContext& ctx);

MembershipReport auslander_membership(const FoxbyContext& ctx, const LeftModule& m,
                                      std::size_t bound);
MembershipReport bass_membership(const FoxbyContext& ctx, const LeftModule& n, std::size_t bound);

struct FoxbyImage {
    LeftModule image;
    ModuleMap structure_map;  // mu_m (forward) or nu_n (backward)
};
FoxbyImage foxby_forward(const FoxbyContext& ctx, const LeftModule& m);
FoxbyImage foxby_backward(const FoxbyContext& ctx, const LeftModule& n);

struct RoundTripReport {
    bool invertible = false;
    Mat witness;  // the invertible structure-map matrix
    std::string note;
};
// For an R-module: backward(forward(m)) = m witnessed by mu; for an
// S-module: forward(backward(n)) = n witnessed by nu.
RoundTripReport foxby_roundtrip_r(const FoxbyContext& ctx, const LeftModule& m);
RoundTripReport foxby_roundtrip_s(const FoxbyContext& ctx, const LeftModule& n);

enum class CClass { FC, PC, IC };
struct CClassReport {
    CClass cls;
    bool member = false;
    MembershipReport base;   // Bass for FC/PC, Auslander for IC
    bool companion_ok = false;
    LeftModule companion;    // Hom_S(C,V) resp. C (x) U
    std::string note;
};
CClassReport cclass_membership(const FoxbyContext& ctx, const LeftModule& v, CClass cls,
                               std::size_t bound);

// ---- precovers / preenvelopes ----------------------------------------------

struct PrecoverCertificate {
    ModuleMap map;  // beta: C (x) R^k -> n, or env: m -> Hom_S(C, I^0)
    std::vector<Mat> test_maps;
    std::vector<Mat> factorizations;  // f with beta o f = psi (resp. g o env = psi)
    bool all_factored = false;
    std::optional<Mat> splitting;  // filled when try_split and one exists
};
PrecoverCertificate pc_precover(const FoxbyContext& ctx, const LeftModule& n,
                                bool try_split = false);
PrecoverCertificate ic_preenvelope(const FoxbyContext& ctx, const LeftModule& m,
                                   bool try_split = false);

// ---- characterization complexes ---------------------------------------------

struct CharComplexReport {
    ChainComplex complex;
    bool a_exact = false;   // the complex is exact
    bool b_terms = false;   // projective resp. injective terms
    bool c_terms = false;   // C-injective resp. C-projective terms
    bool d_iso = false;     // module recovered as cokernel resp. kernel
    bool e_exact = false;   // C (x) X resp. Hom_S(C, Y) exact
    std::string failing;    // first failing condition label, if any
    std::vector<std::pair<int, std::size_t>> a_defects, e_defects;
    bool all() const { return a_exact && b_terms && c_terms && d_iso && e_exact; }
};
// Splice of a free resolution with a proper C-injective coresolution of an
// R-module (membership characterization for the Auslander class).
CharComplexReport auslander_char_complex(const FoxbyContext& ctx, const LeftModule& m,
                                         std::size_t length);
// Dual: injective coresolution spliced with a proper C-projective resolution
// of an S-module (Bass class characterization).
CharComplexReport bass_char_complex(const FoxbyContext& ctx, const LeftModule& n,
                                    std::size_t length);

// ---- dimension comparisons ---------------------------------------------------

struct DimTable {
    std::vector<std::pair<std::size_t, std::size_t>> rows;  // (lhs, rhs) per degree
    bool hypotheses_ok = false;
    std::string note;
    bool agree() const {
        for (auto& r : rows)
            if (r.first != r.second) return false;
        return true;
    }
};
// Ext_R^i(M', M) vs Ext_S^i(C (x) M', C (x) M) for M in the Auslander class
// and Tor_{>=1}(C, M') = 0.
DimTable hha_ext_compare(const FoxbyContext& ctx, const LeftModule& mprime, const LeftModule& m,
                         std::size_t i_max, std::size_t bound);
// Ext_S^i(N, N') vs Ext_R^i(Hom(C,N), Hom(C,N')).
DimTable hha_hom_compare(const FoxbyContext& ctx, const LeftModule& n, const LeftModule& nprime,
                         std::size_t i_max, std::size_t bound);
// Tor_i^S(Nt, N) vs Tor_i^R(Nt (x)_S C, Hom_S(C, N)) for a right S-module Nt.
DimTable hha_tor_compare(const FoxbyContext& ctx, const LeftModule& ntilde_over_sop,
                         const LeftModule& n, std::size_t i_max, std::size_t bound);

// ---- base change -------------------------------------------------------------

// An algebra R that is free over a central commutative subalgebra Q, with the
// embedding and a declared Q-basis.
struct CentralAlgebra {
    AlgebraPtr q;
    AlgebraPtr r;
    Mat embed;   // r.dim x q.dim, the algebra map Q -> Z(R)
    Mat qbasis;  // r.dim x t, free Q-basis of R
};
std::optional<std::string> validate_central(const CentralAlgebra& ca);
// Q (x)_Fp B with the canonical embedding q -> q (x) 1 and Q-basis 1 (x) b_i.
CentralAlgebra central_tensor_algebra(const AlgebraPtr& q, const AlgebraPtr& b,
                                      const std::string& name);

// E (x)_Q R as an (R,R)-bimodule with r'(e (x) r) = e (x) r'r and
// (e (x) r)r' = e (x) rr'.
Bimodule base_change_bimodule(const LeftModule& e_over_q, const CentralAlgebra& ca);

// A left module over a commutative algebra as a symmetric bimodule.
Bimodule symmetric_bimodule(const LeftModule& e);
// D(R) for commutative R, as a symmetric (R,R)-bimodule.
Bimodule dualizing_bimodule(const AlgebraPtr& r);
// Row space F_p^{1 x n} as an (F_p, M_n(F_p))-bimodule.
Bimodule morita_row_bimodule(std::uint64_t p, std::size_t n);

}  // namespace sdcheck
