#pragma once

#include "rcdim/bigint.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rcdim::hankel {

using Matrix = std::vector<std::vector<Int>>;

/// A hyperplane V in W_{a+b} given by its coefficient vector c of length
/// a+b+1, together with the shape (a, b) of the multiplication pairing
/// W_a x W_b -> W_{a+b}. c must not be identically zero.
struct HankelInstance {
    int a;
    int b;
    std::vector<Int> c;

    HankelInstance(int a, int b, std::vector<Int> c);
};

/// A functional on W_{a+b} written as a weighted sum of ell evaluation points
/// on the rational normal curve: pairwise distinct projective points with
/// nonzero weights.
struct SecantPoint {
    struct P1 {
        Int s;
        Int t;
    };
    std::vector<P1> points;
    std::vector<Int> weights;

    SecantPoint(std::vector<P1> points, std::vector<Int> weights);
    int ell() const { return static_cast<int>(points.size()); }
};

/// The (a+1) x (b+1) matrix with entry (i, j) = c[i+j].
Matrix hankel_matrix(const HankelInstance& h);

/// Rank over the rationals via fraction-free (Bareiss) elimination with exact
/// integer pivots. Deterministic: first nonzero pivot, columns left to right.
int rank_exact(const Matrix& m);

/// c_k = s^(degree-k) * t^k for k = 0..degree. Requires (s, t) != (0, 0).
std::vector<Int> rnc_functional(int degree, const Int& s, const Int& t);

/// c = sum_i weight_i * rnc_functional(a+b, s_i, t_i); lies on the
/// ell-secant stratum by construction.
HankelInstance secant_sample(int a, int b, const SecantPoint& sp);

/// codim D(V) = rank of the Hankel matrix.
int codim_dv(const HankelInstance& h);

/// Integer basis of the exact nullspace (the elements f of W_b with
/// m(W_a x {f}) inside V); vectors are primitive with positive leading entry.
std::vector<std::vector<Int>> dv_basis(const HankelInstance& h);

/// Re-checks membership of f in D(V) by polynomial multiplication: every
/// monomial of W_a times f must pair to zero against c. Independent of the
/// elimination path.
bool multiplication_recheck(const HankelInstance& h, const std::vector<Int>& f);

/// One seeded sample: ell projectively distinct points with coordinates in
/// [-9, 9] and nonzero weights in [-9, 9].
SecantPoint sample_secant_point(int ell, std::uint64_t seed);

struct VerifyReport {
    int a = 0;
    int b = 0;
    int ell = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::map<int, int> observed_codims;  // codim -> count
    int formula_min_abl = 0;             // min{a, b, ell}
    int formula_min_a1b1l = 0;           // min{a+1, b+1, ell}
    bool matched_abl = false;            // every trial hit min{a, b, ell}
    bool matched_a1b1l = false;          // every trial hit min{a+1, b+1, ell}
    bool kernel_recheck_ok = false;      // every kernel vector re-verified
    // First sample whose rank misses min{a+1, b+1, ell}, if any.
    std::optional<std::string> degenerate_sample;
};

/// Seeded trials of codim D(V) on the ell-secant stratum, reported against
/// both candidate rank laws. Requires ell >= 1, trials >= 1.
VerifyReport verify_lemma(int a, int b, int ell, int trials, std::uint64_t seed);

}  // namespace rcdim::hankel
