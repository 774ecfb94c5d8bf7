#pragma once

#include <array>
#include <string>
#include <vector>

namespace rcdim::strata {

/// dim W_a = a + 1 (degree-a forms in two variables).
long long dim_w(int a);

struct StratumDims {
    long long s1 = 1;       // first secant stratum of the rational curve E
    long long s2 = 3;
    long long s3_upper = 5; // "at most 5", used as exactly 5 for margins
    long long ambient = 0;  // dim P(W_{2d-1})* = 2d - 1
};

StratumDims stratum_dims(int d);

/// Codimension of the fiber over V in W_3 x W_1^(n-2), by secant stratum:
/// n-1, 2(n-1), 2(n-1)+1, 2(n-1)+2 for ell = 1, 2, 3, >=4.
/// Requires n >= 4, ell >= 1.
long long fiber_codim(int n, int ell);

/// Per-factor sum min{4, 2d-3, ell} + (n-2)*min{2, 2d-1, ell}: the same
/// codimension assembled from the Hankel rank law factor by factor.
/// Meaningful for d >= 3.
long long per_factor_codim_sum(int n, int d, int ell);

/// Whether the ell-th case of the stratification is empty: the secant
/// varieties of the degree-(2d-1) rational normal curve fill the dual space
/// quickly for small d (at d = 3 the fourth case is empty, at d = 2 the
/// third and fourth are).
bool case_vacuous(int d, int ell);

/// (n-2, 2n-5, 2n-6, 2n-2d+1). Requires n >= 4 and d < n.
std::array<long long, 4> case_margins(int n, int d);

struct CaseRecord {
    std::string stratum_name;
    long long stratum_dim = 0;
    long long fiber_codim = 0;
    long long margin = 0;    // fiber_codim - stratum_dim
    bool vacuous = false;
};

struct StrataAudit {
    int n = 0;
    int d = 0;
    std::array<CaseRecord, 4> cases;
    bool pass = false;               // all margins >= 2
    std::vector<int> tight_cases;    // 1-based indices achieving the min margin
    long long min_margin = 0;
    std::string note;
};

/// Requires n >= 4 and d < n (reported by name otherwise).
StrataAudit audit(int n, int d);

}  // namespace rcdim::strata
