#include "rcdim/hankel.hpp"

#include "rcdim/rng.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rcdim::hankel {

HankelInstance::HankelInstance(int a_, int b_, std::vector<Int> c_)
    : a(a_), b(b_), c(std::move(c_)) {
    if (a < 1 || b < 1) throw std::invalid_argument("HankelInstance requires a, b >= 1");
    if (static_cast<int>(c.size()) != a + b + 1)
        throw std::invalid_argument("HankelInstance requires a+b+1 coefficients");
    if (std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; }))
        throw std::invalid_argument("HankelInstance requires c not identically zero");
}

SecantPoint::SecantPoint(std::vector<P1> points_, std::vector<Int> weights_)
    : points(std::move(points_)), weights(std::move(weights_)) {
    if (points.empty() || points.size() != weights.size())
        throw std::invalid_argument("SecantPoint requires ell >= 1 matched points/weights");
    for (const auto& p : points) {
        if (p.s == 0 && p.t == 0)
            throw std::invalid_argument("SecantPoint requires points distinct from (0,0)");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            // projective equality: s_i t_j == s_j t_i
            if (points[i].s * points[j].t == points[j].s * points[i].t)
                throw std::invalid_argument("SecantPoint requires pairwise distinct points");
        }
    }
    for (const auto& w : weights) {
        if (w == 0) throw std::invalid_argument("SecantPoint requires nonzero weights");
    }
}

Matrix hankel_matrix(const HankelInstance& h) {
    Matrix m(h.a + 1, std::vector<Int>(h.b + 1));
    for (int i = 0; i <= h.a; ++i) {
        for (int j = 0; j <= h.b; ++j) {
            m[i][j] = h.c[i + j];
        }
    }
    return m;
}

int rank_exact(const Matrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    }
    if (cols == 0) return 0;

    // Bareiss fraction-free elimination: every division below is exact, so a
    // zero test is a genuine rank decision, never a rounding artifact.
    Matrix w = m;
    Int prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && w[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;  // column exhausted, rank row stays
        std::swap(w[pivot], w[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                w[i][j] = (w[i][j] * w[r][c] - w[i][c] * w[r][j]) / prev_pivot;
            }
            w[i][c] = 0;
        }
        prev_pivot = w[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<Int> rnc_functional(int degree, const Int& s, const Int& t) {
    if (degree < 1) throw std::invalid_argument("rnc_functional requires degree >= 1");
    if (s == 0 && t == 0) throw std::invalid_argument("rnc_functional requires (s,t) != (0,0)");
    std::vector<Int> c(degree + 1);
    for (int kk = 0; kk <= degree; ++kk) {
        Int v = 1;
        for (int i = 0; i < degree - kk; ++i) v *= s;
        for (int i = 0; i < kk; ++i) v *= t;
        c[kk] = v;
    }
    return c;
}

HankelInstance secant_sample(int a, int b, const SecantPoint& sp) {
    std::vector<Int> c(a + b + 1, 0);
    for (int i = 0; i < sp.ell(); ++i) {
        const auto point = rnc_functional(a + b, sp.points[i].s, sp.points[i].t);
        for (int kk = 0; kk <= a + b; ++kk) c[kk] += sp.weights[i] * point[kk];
    }
    return HankelInstance(a, b, std::move(c));
}

int codim_dv(const HankelInstance& h) { return rank_exact(hankel_matrix(h)); }

namespace {

// Exact nullspace over the rationals, returned as primitive integer vectors
// with positive leading entry (deterministic representative).
std::vector<std::vector<Int>> integer_nullspace(const Matrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();

    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = Rat(m[i][j]);

    std::vector<long long> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && w[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(w[pivot], w[r]);
        const Rat inv = w[r][c];
        for (std::size_t j = c; j < cols; ++j) w[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            const Rat factor = w[i][c];
            for (std::size_t j = c; j < cols; ++j) w[i][j] -= factor * w[r][j];
        }
        pivot_col.push_back(static_cast<long long>(c));
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (long long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            v[static_cast<std::size_t>(pivot_col[i])] = -w[i][free_col];
        }
        Int lcm = 1;
        for (const auto& x : v) {
            const Int den = boost::multiprecision::denominator(x);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> iv(cols);
        Int gcd = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            iv[j] = boost::multiprecision::numerator(v[j]) * (lcm / boost::multiprecision::denominator(v[j]));
            gcd = boost::multiprecision::gcd(gcd, iv[j]);
        }
        if (gcd > 1)
            for (auto& x : iv) x /= gcd;
        for (const auto& x : iv) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : iv) y = -y;
                break;
            }
        }
        basis.push_back(std::move(iv));
    }
    return basis;
}

}  // namespace

std::vector<std::vector<Int>> dv_basis(const HankelInstance& h) {
    const Matrix m = hankel_matrix(h);
    auto basis = integer_nullspace(m);
    if (static_cast<int>(basis.size()) != h.b + 1 - rank_exact(m))
        throw std::logic_error("nullspace dimension disagrees with rank");
    return basis;
}

bool multiplication_recheck(const HankelInstance& h, const std::vector<Int>& f) {
    if (static_cast<int>(f.size()) != h.b + 1)
        throw std::invalid_argument("recheck requires f in W_b");
    // For each monomial basis element s^(a-i) t^i of W_a, multiply against f
    // (coefficient convolution) and pair the product with c.
    for (int i = 0; i <= h.a; ++i) {
        std::vector<Int> monomial(h.a + 1, 0);
        monomial[i] = 1;
        std::vector<Int> product(h.a + h.b + 1, 0);
        for (int p = 0; p <= h.a; ++p) {
            if (monomial[p] == 0) continue;
            for (int q = 0; q <= h.b; ++q) product[p + q] += monomial[p] * f[q];
        }
        Int pairing = 0;
        for (int kk = 0; kk <= h.a + h.b; ++kk) pairing += h.c[kk] * product[kk];
        if (pairing != 0) return false;
    }
    return true;
}

SecantPoint sample_secant_point(int ell, std::uint64_t seed) {
    if (ell < 1) throw std::invalid_argument("sample_secant_point requires ell >= 1");
    // [-9,9]^2 holds ~130 distinct projective points; stay well below that
    if (ell > 50)
        throw std::invalid_argument("sample_secant_point: ell too large for the [-9,9] sampler");
    SplitMix64 rng(seed);
    std::vector<SecantPoint::P1> points;
    std::vector<Int> weights;
    for (int i = 0; i < ell; ++i) {
        while (true) {
            const Int s = rng.uniform_int(-9, 9);
            const Int t = rng.uniform_int(-9, 9);
            if (s == 0 && t == 0) continue;
            bool fresh = true;
            for (const auto& p : points) {
                if (p.s * t == s * p.t) {
                    fresh = false;
                    break;
                }
            }
            if (!fresh) continue;
            points.push_back({s, t});
            break;
        }
        while (true) {
            const int w = rng.uniform_int(-9, 9);
            if (w == 0) continue;
            weights.emplace_back(w);
            break;
        }
    }
    return SecantPoint(std::move(points), std::move(weights));
}

namespace {

std::string describe_sample(const SecantPoint& sp, const HankelInstance& h, int rank) {
    std::ostringstream os;
    os << "points";
    for (const auto& p : sp.points) os << " [" << p.s << ":" << p.t << "]";
    os << " weights";
    for (const auto& w : sp.weights) os << " " << w;
    os << " c";
    for (const auto& v : h.c) os << " " << v;
    os << " rank " << rank;
    return os.str();
}

}  // namespace

VerifyReport verify_lemma(int a, int b, int ell, int trials, std::uint64_t seed) {
    if (ell < 1) throw std::invalid_argument("verify_lemma requires ell >= 1");
    if (trials < 1) throw std::invalid_argument("verify_lemma requires trials >= 1");

    VerifyReport rep;
    rep.a = a;
    rep.b = b;
    rep.ell = ell;
    rep.trials = trials;
    rep.seed = seed;
    rep.formula_min_abl = std::min({a, b, ell});
    rep.formula_min_a1b1l = std::min({a + 1, b + 1, ell});
    rep.matched_abl = true;
    rep.matched_a1b1l = true;
    rep.kernel_recheck_ok = true;

    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed =
            mix_seed(seed, static_cast<std::uint64_t>(a) << 32 | static_cast<std::uint64_t>(b),
                     static_cast<std::uint64_t>(ell), static_cast<std::uint64_t>(trial));
        const SecantPoint sp = sample_secant_point(ell, trial_seed);
        const HankelInstance h = secant_sample(a, b, sp);
        const int observed = codim_dv(h);
        rep.observed_codims[observed] += 1;
        if (observed != rep.formula_min_abl) rep.matched_abl = false;
        if (observed != rep.formula_min_a1b1l) {
            rep.matched_a1b1l = false;
            if (!rep.degenerate_sample) rep.degenerate_sample = describe_sample(sp, h, observed);
        }
        for (const auto& f : dv_basis(h)) {
            if (!multiplication_recheck(h, f)) rep.kernel_recheck_ok = false;
        }
    }
    return rep;
}

}  // namespace rcdim::hankel
