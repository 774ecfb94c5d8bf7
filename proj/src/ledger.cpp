#include "rcdim/ledger.hpp"

#include <stdexcept>

namespace rcdim::ledger {

Int expected_fiber_dim(int n, int d, int e) {
    if (d > n - 1) throw std::invalid_argument("expected_fiber_dim requires d <= n-1");
    if (e < 1) throw std::invalid_argument("expected_fiber_dim requires e >= 1");
    return Int(e) * (n - d + 1) - 2;
}

Int codim_s1(int n) {
    if (n < 8)
        throw std::invalid_argument(
            "codim_s1 requires n >= 8 (hypothesis 7 <= d = n-1 fails for n = " +
            std::to_string(n) + ")");
    return Int(n + 1) * n / 2 - 3 * Int(n - 2);
}

ComparisonConstants comparison_constants(int n, int d) {
    ComparisonConstants out;
    out.singular_line_codim = Int(d) * n - 2 * Int(n) + 3;
    out.ss_codim = Int(n + 1) * n / 2;
    return out;
}

Int step_bound(int n, int d, int e) {
    if (e < 2) throw std::invalid_argument("step_bound requires e >= 2");
    return 2 * Int(n) - Int(n - d + 1) * e;
}

Rat residual(int n, int e) {
    if (e < 2) throw std::invalid_argument("residual requires e >= 2");
    Int num = Int(n) * n - n - 4 * Int(n) * e + 2 * Int(e) * e + 2 * Int(e) + 8;
    return Rat(num, 2);
}

namespace {

// e < n - (1 + sqrt(n^2 - n - 15))/2, decided exactly:
// with r = n^2 - n - 15 >= 0, the inequality is 2n - 1 - 2e > 0 and
// (2n - 1 - 2e)^2 > r.
bool below_closed_form_bound(int n, int e) {
    const Int r = Int(n) * n - n - 15;
    const Int lhs = 2 * Int(n) - 1 - 2 * Int(e);
    if (lhs <= 0) return false;
    return lhs * lhs > r;
}

}  // namespace

std::string BoundReport::quadratic_str() const {
    return max_e_quadratic ? std::to_string(*max_e_quadratic) : "none";
}

std::string BoundReport::closed_form_str() const {
    switch (closed_form_kind) {
        case ClosedFormKind::value: return std::to_string(max_e_closed_form);
        case ClosedFormKind::none: return "none";
        case ClosedFormKind::ill_defined: return "ill-defined";
    }
    return "none";
}

BoundReport max_level_degree(int n) {
    if (n < 4) throw std::invalid_argument("max_level_degree requires n >= 4");
    BoundReport out;
    out.n = n;

    // Integer scan: largest contiguous e >= 2 with positive residual. The
    // quadratic opens upward so it turns positive again for large e; that
    // tail is excluded by construction.
    int last_positive = 0;
    for (int e = 2; e <= 2 * n + 2; ++e) {
        if (residual(n, e) > 0) {
            last_positive = e;
        } else {
            break;
        }
    }
    if (last_positive >= 2) out.max_e_quadratic = last_positive;

    if (Int(n) * n - n - 15 < 0) {
        out.closed_form_kind = ClosedFormKind::ill_defined;
    } else {
        int best = 0;
        for (int e = 2; e <= 2 * n + 2; ++e) {
            if (below_closed_form_bound(n, e)) best = e;
        }
        out.closed_form_kind = best >= 2 ? ClosedFormKind::value : ClosedFormKind::none;
        out.max_e_closed_form = best;
    }

    out.agreement = out.max_e_quadratic.has_value() &&
                    out.closed_form_kind == ClosedFormKind::value &&
                    *out.max_e_quadratic == out.max_e_closed_form;

    if (n <= 7) {
        out.note = "d = n-1 < 7: e <= 2 via the conic argument; ledger chain not applicable";
    }
    return out;
}

Int pgl_dim_floor(int n) {
    if (n < 2) throw std::invalid_argument("pgl_dim_floor requires n >= 2");
    return 3 * Int(n) - 3;
}

Int bendbreak_threshold(int n) {
    if (n < 2) throw std::invalid_argument("bendbreak_threshold requires n >= 2");
    return 2 * Int(n) - 1;
}

CodimLedger CodimLedger::compute(int n, int d, int e_max) {
    if (d != n - 1)
        throw std::invalid_argument("ledger chain requires d = n-1 (base row hypothesis)");
    if (e_max < 1) throw std::invalid_argument("ledger chain requires e_max >= 1");

    CodimLedger out;
    out.n = n;
    out.d = d;

    LedgerRow base;
    base.e = 1;
    base.codim_lower_bound = codim_s1(n);  // throws for n < 8, naming the hypothesis
    base.step_bound_applied = 0;
    base.provenance = Provenance::s1_base;
    base.exhausted = base.codim_lower_bound < 0;
    out.rows.push_back(base);

    for (int e = 2; e <= e_max; ++e) {
        LedgerRow row;
        row.e = e;
        row.step_bound_applied = step_bound(n, d, e);
        row.codim_lower_bound = out.rows.back().codim_lower_bound - row.step_bound_applied;
        row.provenance = Provenance::bbf_step;
        row.exhausted = row.codim_lower_bound < 0;
        out.rows.push_back(row);
    }
    return out;
}

const char* provenance_name(Provenance p) {
    return p == Provenance::s1_base ? "S1-base" : "BBF-step";
}

}  // namespace rcdim::ledger
