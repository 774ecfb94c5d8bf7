#include "rcdim/comb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rcdim::comb {

namespace {

bool all_equal(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

void check_guards(int e, int k) {
    if (e < 2 || e > 7) throw std::invalid_argument("connectivity guard: 2 <= e <= 7");
    if (k < 2 || k > 5) throw std::invalid_argument("connectivity guard: 2 <= k <= 5");
    double states = 1;
    for (int i = 0; i < e; ++i) states *= k;
    if (states > 1e6) throw std::invalid_argument("connectivity guard: k^e <= 10^6");
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace

bool CombConfig::degenerate() const { return all_equal(labels); }

bool is_legal(const CombConfig& c, const Move& m, int k) {
    if (c.e < 2 || static_cast<int>(c.labels.size()) != c.e) return false;
    const auto& s = m.subset;
    if (s.size() < 2 || s.size() >= static_cast<std::size_t>(c.e)) return false;
    if (s.size() != m.replacement.size()) return false;
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end())
        return false;
    std::vector<int> current;
    for (int idx : s) {
        if (idx < 0 || idx >= c.e) return false;
        current.push_back(c.labels[idx]);
    }
    for (int v : m.replacement) {
        if (v < 0 || v >= k) return false;
    }
    return !all_equal(current) && !all_equal(m.replacement);
}

CombConfig apply(const CombConfig& c, const Move& m, int k) {
    if (!is_legal(c, m, k)) throw std::invalid_argument("illegal move");
    CombConfig out = c;
    for (std::size_t i = 0; i < m.subset.size(); ++i)
        out.labels[m.subset[i]] = m.replacement[i];
    return out;
}

void for_each_legal_move(const CombConfig& c, int k,
                         const std::function<void(const CombConfig&)>& fn) {
    if (c.degenerate()) throw std::invalid_argument("legal_moves requires a nondegenerate config");
    const int e = c.e;
    for (int mask = 0; mask < (1 << e); ++mask) {
        const int size = __builtin_popcount(static_cast<unsigned>(mask));
        if (size < 2 || size >= e) continue;  // strict subset of >= 2 teeth
        std::vector<int> subset;
        for (int i = 0; i < e; ++i) {
            if (mask & (1 << i)) subset.push_back(i);
        }
        std::vector<int> current;
        for (int idx : subset) current.push_back(c.labels[idx]);
        if (all_equal(current)) continue;

        std::vector<int> repl(subset.size(), 0);
        while (true) {
            if (!all_equal(repl) && repl != current) {
                CombConfig next = c;
                for (std::size_t i = 0; i < subset.size(); ++i)
                    next.labels[subset[i]] = repl[i];
                fn(next);
            }
            std::size_t pos = 0;
            while (pos < repl.size() && repl[pos] == k - 1) repl[pos++] = 0;
            if (pos == repl.size()) break;
            ++repl[pos];
        }
    }
}

std::vector<CombConfig> legal_moves(const CombConfig& c, int k) {
    std::vector<std::vector<int>> seen;
    for_each_legal_move(c, k, [&seen](const CombConfig& next) { seen.push_back(next.labels); });
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<CombConfig> out;
    out.reserve(seen.size());
    for (auto& labels : seen) out.push_back({c.e, std::move(labels)});
    return out;
}

namespace {

// States are packed base-k integers, digit i = label of tooth i.
std::vector<int> decode(long long state, int e, int k) {
    std::vector<int> labels(e);
    for (int i = 0; i < e; ++i) {
        labels[i] = static_cast<int>(state % k);
        state /= k;
    }
    return labels;
}

long long encode(const std::vector<int>& labels, int k) {
    long long state = 0;
    for (std::size_t i = labels.size(); i-- > 0;) state = state * k + labels[i];
    return state;
}

long long exact_diameter(const std::vector<long long>& states,
                         const std::vector<int>& dense, int e, int k) {
    // Bitset BFS per source over the dense state indices.
    const std::size_t n = states.size();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const CombConfig c{e, decode(states[i], e, k)};
        for_each_legal_move(c, k, [&](const CombConfig& next) {
            const int j = dense[static_cast<std::size_t>(encode(next.labels, k))];
            adj[i][static_cast<std::size_t>(j) / 64] |= 1ULL << (j % 64);
        });
    }

    long long diameter = 0;
    std::vector<std::uint64_t> reached(words), frontier(words), fresh(words);
    for (std::size_t src = 0; src < n; ++src) {
        std::fill(reached.begin(), reached.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        reached[src / 64] |= 1ULL << (src % 64);
        frontier[src / 64] |= 1ULL << (src % 64);
        long long depth = 0;
        while (true) {
            std::fill(fresh.begin(), fresh.end(), 0);
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = frontier[w];
                while (bits) {
                    const int bit = __builtin_ctzll(bits);
                    bits &= bits - 1;
                    const std::size_t v = w * 64 + static_cast<std::size_t>(bit);
                    for (std::size_t x = 0; x < words; ++x) fresh[x] |= adj[v][x];
                }
            }
            bool grew = false;
            for (std::size_t x = 0; x < words; ++x) {
                fresh[x] &= ~reached[x];
                if (fresh[x]) grew = true;
                reached[x] |= fresh[x];
            }
            if (!grew) break;
            frontier = fresh;
            ++depth;
        }
        diameter = std::max(diameter, depth);
    }
    return diameter;
}

}  // namespace

ConnectivityReport connectivity(int e, int k) {
    check_guards(e, k);
    long long total = 1;
    for (int i = 0; i < e; ++i) total *= k;

    std::vector<long long> states;  // nondegenerate only
    states.reserve(static_cast<std::size_t>(total));
    std::vector<int> dense(static_cast<std::size_t>(total), -1);
    for (long long s = 0; s < total; ++s) {
        if (!all_equal(decode(s, e, k))) {
            dense[static_cast<std::size_t>(s)] = static_cast<int>(states.size());
            states.push_back(s);
        }
    }

    UnionFind uf(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const CombConfig c{e, decode(states[i], e, k)};
        for_each_legal_move(c, k, [&](const CombConfig& next) {
            // the move rule cannot produce the all-equal configuration
            const int j = dense[static_cast<std::size_t>(encode(next.labels, k))];
            if (j < 0) throw std::logic_error("move reached a degenerate config");
            uf.unite(static_cast<int>(i), j);
        });
    }

    std::map<int, long long> sizes;
    for (std::size_t i = 0; i < states.size(); ++i) sizes[uf.find(static_cast<int>(i))] += 1;

    ConnectivityReport rep;
    rep.e = e;
    rep.k = k;
    rep.reduced = false;
    rep.state_count = static_cast<long long>(states.size());
    rep.component_count = static_cast<long long>(sizes.size());
    rep.connected = rep.component_count == 1;
    for (const auto& [root, size] : sizes) rep.component_sizes.push_back(size);
    std::sort(rep.component_sizes.rbegin(), rep.component_sizes.rend());
    rep.multiset_invariant = (k == 2);
    if (k == 2)
        rep.note = "k = 2: every |S| = 2 move preserves the label multiset "
                   "(a differing pair maps to a differing pair)";

    if (states.size() <= 8192) {
        rep.diameter = exact_diameter(states, dense, e, k);
        rep.diameter_computed = true;
    } else {
        rep.diameter = -1;
        rep.diameter_computed = false;
        rep.note += std::string(rep.note.empty() ? "" : "; ") +
                    "diameter not computed (state count above the exact-diameter budget)";
    }
    return rep;
}

ConnectivityReport symmetry_reduced_connectivity(int e, int k) {
    check_guards(e, k);

    // Orbits under tooth permutations are label multisets; the canonical
    // representative is the sorted label vector. Legal moves commute with
    // tooth permutations, and for e >= 3 transposing two differing teeth is
    // itself a move, so components of the full graph are unions of orbits.
    std::vector<std::vector<int>> reps;
    std::vector<int> labels(e, 0);
    while (true) {
        if (std::is_sorted(labels.begin(), labels.end()) && !all_equal(labels))
            reps.push_back(labels);
        std::size_t pos = 0;
        while (pos < labels.size() && labels[pos] == k - 1) labels[pos++] = 0;
        if (pos == labels.size()) break;
        ++labels[pos];
    }
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = static_cast<int>(i);

    UnionFind uf(reps.size());
    std::vector<std::vector<int>> orbit_adj(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const CombConfig c{e, reps[i]};
        for_each_legal_move(c, k, [&](const CombConfig& next) {
            std::vector<int> sorted_next = next.labels;
            std::sort(sorted_next.begin(), sorted_next.end());
            const int j = index.at(sorted_next);
            uf.unite(static_cast<int>(i), j);
            orbit_adj[i].push_back(j);
        });
    }

    // orbit size = e! / prod(multiplicity!)
    auto orbit_size = [e, k](const std::vector<int>& rep) {
        long long num = 1;
        for (int i = 2; i <= e; ++i) num *= i;
        std::vector<int> mult(k, 0);
        for (int v : rep) ++mult[v];
        long long den = 1;
        for (int m : mult)
            for (int i = 2; i <= m; ++i) den *= i;
        return num / den;
    };

    std::map<int, long long> orbit_counts;
    std::map<int, long long> raw_sizes;
    long long raw_states = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const int root = uf.find(static_cast<int>(i));
        orbit_counts[root] += 1;
        const long long sz = orbit_size(reps[i]);
        raw_sizes[root] += sz;
        raw_states += sz;
    }

    ConnectivityReport rep;
    rep.e = e;
    rep.k = k;
    rep.reduced = true;
    rep.state_count = static_cast<long long>(reps.size());
    rep.component_count = static_cast<long long>(orbit_counts.size());
    rep.connected = rep.component_count == 1;
    for (const auto& [root, sz] : raw_sizes) rep.component_sizes.push_back(sz);
    std::sort(rep.component_sizes.rbegin(), rep.component_sizes.rend());
    rep.multiset_invariant = (k == 2);
    rep.note = "orbit census over tooth permutations; component sizes count raw "
               "configurations (" + std::to_string(raw_states) + " states in " +
               std::to_string(reps.size()) + " orbits)";
    if (e == 2)
        rep.note += "; e = 2 has no moves, so orbits merge mirror-image singletons "
                    "and the component count differs from the unreduced census";

    // orbit-level diameter via plain BFS (orbit graphs are tiny)
    long long diameter = 0;
    for (std::size_t src = 0; src < reps.size(); ++src) {
        std::vector<long long> dist(reps.size(), -1);
        std::vector<std::size_t> queue = {src};
        dist[src] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const std::size_t v = queue[qi];
            for (int w : orbit_adj[v]) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[v] + 1;
                    queue.push_back(static_cast<std::size_t>(w));
                }
            }
        }
        for (long long d : dist) diameter = std::max(diameter, d);
    }
    rep.diameter = diameter;
    rep.diameter_computed = true;
    return rep;
}

}  // namespace rcdim::comb
