#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdcheck/module.hpp"

namespace sdcheck {

// A bounded window of a complex; modules[i] sits in degree lo + i and
// diffs[i] : modules[i+1] -> modules[i] lowers degree by one.
struct ChainComplex {
    AlgebraPtr algebra;
    int lo = 0;
    std::vector<LeftModule> modules;
    std::vector<Mat> diffs;

    int hi() const { return lo + static_cast<int>(modules.size()) - 1; }
    const LeftModule& at(int deg) const { return modules.at(static_cast<std::size_t>(deg - lo)); }
    bool in_window(int deg) const { return deg >= lo && deg <= hi(); }
    // d : X_{deg} -> X_{deg-1}, the zero map outside the window.
    Mat diff_from(int deg) const;
};

// Shapes, module-map property, and d o d = 0.
std::optional<std::string> validate_complex(const ChainComplex& x);

struct ExactnessReport {
    bool exact = true;
    // (degree, defect dimension) for every inspected spot with nonzero defect
    std::vector<std::pair<int, std::size_t>> defects;
};
ExactnessReport is_exact(const ChainComplex& x, const std::vector<int>& at);
// Every degree of the window.
ExactnessReport is_exact_everywhere(const ChainComplex& x);

// ---- resolutions ----------------------------------------------------------

// ... -> F_1 -> F_0 -> m -> 0 built from greedy minimal free covers.
struct FreeResolution {
    LeftModule target;
    std::vector<std::size_t> ranks;    // ranks of F_0 .. F_len
    std::vector<Mat> diffs;            // diffs[0]: F_0 -> m, diffs[i]: F_i -> F_{i-1}
    std::vector<LeftModule> syzygies;  // S_0 = m, S_{i+1} = ker(F_i -> ...)
    // Augmented complex with m in degree -1 and F_i in degree i.
    ChainComplex augmented() const;
};
FreeResolution free_resolution(const LeftModule& m, std::size_t length);

// 0 -> n -> I^0 -> I^1 -> ..., built as the dual of a free resolution of
// dual(n) over the opposite algebra; every term is injective.
struct InjectiveCoresolution {
    LeftModule source;
    FreeResolution dual_res;         // of dual(n) over A^op
    std::vector<LeftModule> terms;   // I^0 .. I^len as left A-modules
    Mat aug;                         // n -> I^0
    std::vector<Mat> maps;           // maps[j]: I^j -> I^{j+1}
    // n in degree 0, I^j in degree -1-j.
    ChainComplex augmented() const;
};
InjectiveCoresolution injective_coresolution(const LeftModule& n, std::size_t length);

// Ext^i or Tor_i dimensions for 0 <= i <= bound, with an optional syzygy
// periodicity certificate: Omega^i = Omega^j extends any vanishing window by
// dimension shifting.
struct ExtTorTable {
    std::vector<std::size_t> dims;
    struct Periodic {
        std::size_t i, j;
    };
    std::optional<Periodic> certificate;

    bool vanishing_from_1() const {
        for (std::size_t t = 1; t < dims.size(); ++t)
            if (dims[t]) return false;
        return true;
    }
    // All degrees >= 1 vanish, not just the computed window.
    bool certified_vanishing() const {
        return vanishing_from_1() && certificate && certificate->j + 1 <= dims.size();
    }
    // First degree in [1, bound] with a nonzero dimension, if any.
    std::optional<std::size_t> first_nonzero() const {
        for (std::size_t t = 1; t < dims.size(); ++t)
            if (dims[t]) return t;
        return std::nullopt;
    }
};

ExtTorTable ext_dims(const LeftModule& m, const LeftModule& n, std::size_t bound,
                     bool want_certificate = true);
// Same, reusing a precomputed resolution of the first argument (length must
// be at least bound + 1) and an optional precomputed periodicity certificate.
ExtTorTable ext_dims_from_resolution(const FreeResolution& res, const LeftModule& n,
                                     std::size_t bound,
                                     const std::optional<ExtTorTable::Periodic>& cert);
// Syzygy periodicity search used for certificates.
std::optional<ExtTorTable::Periodic> syzygy_periodicity(const std::vector<LeftModule>& syz);

// Degree-stepped vanishing verdict for Tor_{1..bound}, stopping at the first
// nonzero dimension and certifying early through zero or periodic syzygies.
// Minimal resolutions can grow exponentially at this scale, so the stepping
// is capped; the cap is never reached once a dimension is nonzero.
struct VanishReport {
    enum class Status { ZeroCertified, ZeroBounded, Nonzero };
    Status status = Status::ZeroBounded;
    std::size_t degree = 0, dim = 0;  // first nonzero, when status == Nonzero
    std::optional<ExtTorTable::Periodic> certificate;
    bool flat_argument = false;  // certified because x is projective/flat
};
VanishReport tor_vanishing(const LeftModule& x_over_op, const LeftModule& y, std::size_t bound,
                           bool x_projective_hint = false);
// Ext_A(m, n) vanishing through the exact identity
// Ext^i_A(m, n) = D(Tor_i^{A^op}(m, D(n))), which resolves D(n) instead of m.
VanishReport ext_vanishing_dual(const LeftModule& m, const LeftModule& n, std::size_t bound,
                                bool m_projective_hint = false);
// Tor_i^A(X, Y) for a right module X (over A^op) and left module Y.
ExtTorTable tor_dims_modules(const LeftModule& x_over_op, const LeftModule& y, std::size_t bound,
                             bool want_certificate = true);
ExtTorTable tor_dims(const Bimodule& c, const LeftModule& m, std::size_t bound,
                     bool want_certificate = true);

// Independent route for the balance property: dimensions of
// H^i Hom_A(m, I^*) along an injective coresolution of n.
std::vector<std::size_t> ext_dims_via_injectives(const LeftModule& m, const LeftModule& n,
                                                 std::size_t bound);

// Ext modules with their inherited one-sided structure (degreewise finite
// first argument resolved by free covers), for every degree up to i_max:
//   ext_modules_right: Ext^i_S(m, N) as modules over R^op for an (S,R)-bimodule N.
//   ext_modules_left:  Ext^i_{R^op}(m, N) as modules over S.
std::vector<LeftModule> ext_modules_right(const LeftModule& m_over_s, const Bimodule& n,
                                          std::size_t i_max);
std::vector<LeftModule> ext_modules_left(const LeftModule& m_over_rop, const Bimodule& n,
                                         std::size_t i_max);

// ker(d_out) / im(d_in) with the structure restricted from v.
LeftModule homology_subquotient(const LeftModule& v, const Mat& d_out, const Mat& d_in);

// Splices an augmented free resolution of m (m in degree -1) with an
// augmented coresolution of m (m in degree 0); the middle differential is
// the composite through m.
ChainComplex splice(const ChainComplex& proj_part, const ChainComplex& cores_part,
                    const LeftModule& m);

// ---- generic functor application (term-by-term; intended for small inputs)

ChainComplex tensor_complex(const Bimodule& c, const ChainComplex& x);
ChainComplex hom_complex_from_bimodule(const Bimodule& c, const ChainComplex& y);

// Contravariant Hom(-, u) turns a chain complex into a cochain of plain
// F_p spaces; spaces[i] = dim Hom(X_{lo+i}, u), maps[i]: spaces i -> i+1.
struct CochainFp {
    std::vector<std::size_t> dims;
    std::vector<Mat> maps;
    bool exact_at(std::size_t i) const;
    bool exact_interior() const;
};
CochainFp apply_hom_into(const ChainComplex& x, const LeftModule& u);

}  // namespace sdcheck
