#pragma once

namespace rcdim::claims {

// Citation strings for the checked claims; every report names what it checked.

inline constexpr const char* dim_formula =
    "expected dimension: dim(X,tau) = (n+1-d)*beta(tau) + #Tail - #Edge + dim(X) - 3";
inline constexpr const char* flag_identity =
    "flag identity: #Flag = 2*#Edge + #Tail";
inline constexpr const char* agraph_invariants =
    "stable A-graph invariants: genus-0 tree; beta-0 vertices carry >= 3 flags; "
    "beta(tau) >= 1";
inline constexpr const char* pure_dimension =
    "irreducible degree-e curves on a degree-(n-1) hypersurface: pure dimension 2e+n-4";
inline constexpr const char* fiber_dim =
    "expected fiber dimension of evaluation: a = e(n-d+1) - 2";
inline constexpr const char* s1_codim =
    "non-1-level locus: codimension C(n+1,2) - 3(n-2), for 7 <= d = n-1";
inline constexpr const char* singular_line =
    "hypersurfaces singular along a line: codimension dn - 2n + 3";
inline constexpr const char* ss_codim =
    "excess lines through a singular point: codimension at least C(n+1,2)";
inline constexpr const char* step_bound =
    "bend-and-break step: codim(S_{e-1} in S_e) at most 2n - (n-d+1)e";
inline constexpr const char* residual =
    "residual codimension of S_e: (1/2)(n^2 - n - 4ne + 2e^2 + 2e + 8)";
inline constexpr const char* closed_form_bound =
    "level degree bound: e < n - (1 + sqrt(n^2 - n - 15))/2";
inline constexpr const char* pgl_floor =
    "PGL-invariance floor: image dimension at least 3n - 3";
inline constexpr const char* bend_break =
    "bend and break: families of dimension >= 2n - 1 contain reducibles";
inline constexpr const char* determinantal =
    "determinantal lemma: codim D(V) = min{a, b, l} for V on the l-secant stratum";
inline constexpr const char* determinantal_alt =
    "alternative rank law: codim D(V) = min{a+1, b+1, l}";
inline constexpr const char* multiplication =
    "multiplication lemma: the non-surjective locus has codimension at least 2";
inline constexpr const char* comb_connectivity =
    "comb connectivity: one component besides the multiple covers of a line";

}  // namespace rcdim::claims
