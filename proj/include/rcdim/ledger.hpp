#pragma once

#include "rcdim/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rcdim::ledger {

/// e(n-d+1) - 2, the expected dimension of a fiber of the evaluation map.
/// Requires d <= n-1 and e >= 1.
Int expected_fiber_dim(int n, int d, int e);

/// C(n+1,2) - 3(n-2), codimension of the non-1-level locus.
/// Requires n >= 8 (the hypothesis 7 <= d = n-1).
Int codim_s1(int n);

struct ComparisonConstants {
    Int singular_line_codim;  // dn - 2n + 3
    Int ss_codim;             // C(n+1,2)
};

ComparisonConstants comparison_constants(int n, int d);

/// 2n - (n-d+1)e, the per-step codimension bound for S_{e-1} in S_e.
/// Requires e >= 2.
Int step_bound(int n, int d, int e);

/// (1/2)(n^2 - n - 4ne + 2e^2 + 2e + 8), exact. Assumes d = n-1; e >= 2.
/// Always an integer, but returned as a rational so the test suite can
/// assert the denominator rather than trust it.
Rat residual(int n, int e);

enum class ClosedFormKind { value, none, ill_defined };

/// The two candidate degree bounds, each computed from its own definition.
struct BoundReport {
    int n = 0;
    // Largest e >= 2 with residual(n, e') > 0 for all 2 <= e' <= e.
    std::optional<int> max_e_quadratic;
    // Largest e >= 2 with e < n - (1 + sqrt(n^2 - n - 15))/2, decided by
    // integer comparison; ill_defined when the radicand is negative.
    ClosedFormKind closed_form_kind = ClosedFormKind::none;
    int max_e_closed_form = 0;  // meaningful only when kind == value
    bool agreement = false;     // both defined and equal
    std::string note;           // e.g. the d < 7 conic-argument special case

    std::string quadratic_str() const;
    std::string closed_form_str() const;
};

/// Requires n >= 4.
BoundReport max_level_degree(int n);

Int pgl_dim_floor(int n);         // 3n - 3, requires n >= 2
Int bendbreak_threshold(int n);   // 2n - 1, requires n >= 2

enum class Provenance { s1_base, bbf_step };

struct LedgerRow {
    int e = 0;
    Int codim_lower_bound;   // never clamped; sign carries the information
    Int step_bound_applied;  // 0 for the base row
    Provenance provenance = Provenance::s1_base;
    bool exhausted = false;  // codim_lower_bound < 0, never clamped
};

/// The chain S_1 subset S_2 subset ... as exact integer lower bounds.
/// The base row requires d = n-1 >= 7; rows 2..e_max subtract step bounds.
struct CodimLedger {
    int n = 0;
    int d = 0;
    std::vector<LedgerRow> rows;

    static CodimLedger compute(int n, int d, int e_max);
};

const char* provenance_name(Provenance p);

}  // namespace rcdim::ledger
