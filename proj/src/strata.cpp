#include "rcdim/strata.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcdim::strata {

long long dim_w(int a) {
    if (a < 0) throw std::invalid_argument("dim_w requires a >= 0");
    return a + 1LL;
}

StratumDims stratum_dims(int d) {
    if (d < 2) throw std::invalid_argument("stratum_dims requires d >= 2");
    StratumDims out;
    out.ambient = 2LL * d - 1;  // dim P(W_{2d-1})*
    return out;
}

long long fiber_codim(int n, int ell) {
    if (n < 4) throw std::invalid_argument("fiber_codim requires n >= 4");
    if (ell < 1) throw std::invalid_argument("fiber_codim requires ell >= 1");
    switch (ell) {
        case 1: return n - 1LL;
        case 2: return 2LL * (n - 1);
        case 3: return 2LL * (n - 1) + 1;
        default: return 2LL * (n - 1) + 2;
    }
}

long long per_factor_codim_sum(int n, int d, int ell) {
    if (d < 3) throw std::invalid_argument("per_factor_codim_sum requires d >= 3");
    // One W_3 x W_{2d-4} factor and n-2 factors W_1 x W_{2d-2}.
    const long long g = std::min({4LL, 2LL * d - 3, static_cast<long long>(ell)});
    const long long f = std::min({2LL, 2LL * d - 1, static_cast<long long>(ell)});
    return g + (n - 2LL) * f;
}

bool case_vacuous(int d, int ell) {
    // dim S_l(E) = min(2l-1, 2d-1) for the degree-(2d-1) rational normal
    // curve. Case l in {1,2,3} is empty when S_{l-1} already fills the dual
    // space; case 4 (the complement of S_3) is empty when S_3 fills it.
    if (d < 2) throw std::invalid_argument("case_vacuous requires d >= 2");
    if (ell < 1) throw std::invalid_argument("case_vacuous requires ell >= 1");
    if (ell <= 3) return 2 * (ell - 1) - 1 >= 2 * d - 1;
    return 2 * 3 - 1 >= 2 * d - 1;
}

std::array<long long, 4> case_margins(int n, int d) {
    if (n < 4) throw std::invalid_argument("case_margins requires the hypothesis n >= 4");
    if (d >= n) throw std::invalid_argument("case_margins requires the hypothesis d < n");
    return {n - 2LL, 2LL * n - 5, 2LL * n - 6, 2LL * n - 2 * d + 1};
}

StrataAudit audit(int n, int d) {
    const auto margins = case_margins(n, d);
    const auto dims = stratum_dims(d);

    StrataAudit out;
    out.n = n;
    out.d = d;
    out.cases[0] = {"S1(E)", dims.s1, fiber_codim(n, 1), margins[0], case_vacuous(d, 1)};
    out.cases[1] = {"S2(E) \\ S1(E)", dims.s2, fiber_codim(n, 2), margins[1],
                    case_vacuous(d, 2)};
    out.cases[2] = {"S3(E) \\ S2(E)", dims.s3_upper, fiber_codim(n, 3), margins[2],
                    case_vacuous(d, 3)};
    out.cases[3] = {"ambient \\ S3(E)", dims.ambient, fiber_codim(n, 4), margins[3],
                    case_vacuous(d, 4)};

    out.min_margin = *std::min_element(margins.begin(), margins.end());
    for (int i = 0; i < 4; ++i) {
        if (margins[i] == out.min_margin) out.tight_cases.push_back(i + 1);
    }
    out.pass = out.min_margin >= 2;
    if (d == 3) {
        out.note = "d = 3: the fourth case is vacuous (S3(E) already fills the dual "
                   "space), so its codimension 2(n-1)+2 applies to an empty stratum; "
                   "the multiplication-lemma case list leaves d = 3 as a dangling "
                   "sub-case";
    } else if (d == 2) {
        out.note = "d = 2: the chord variety of the twisted cubic fills the dual "
                   "space, so cases 3 and 4 are vacuous";
    }
    return out;
}

}  // namespace rcdim::strata
