#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rcdim::comb {

/// Labels on the e teeth of a comb, drawn from an alphabet of k lines.
/// Degenerate = all teeth on the same line (a multiple cover).
struct CombConfig {
    int e = 0;
    std::vector<int> labels;  // size e, values in [0, k)

    bool degenerate() const;
};

/// Relabel a strict subset S of teeth, |S| >= 2, where neither the current
/// nor the replacement labels on S are all equal.
struct Move {
    std::vector<int> subset;       // tooth indices, strictly increasing
    std::vector<int> replacement;  // new labels for the subset, same length
};

bool is_legal(const CombConfig& c, const Move& m, int k);

/// Applies a legal move. Throws if illegal.
CombConfig apply(const CombConfig& c, const Move& m, int k);

/// Visits every configuration reachable in one legal move (each distinct
/// successor may be visited more than once, via different subsets).
/// Requires c nondegenerate.
void for_each_legal_move(const CombConfig& c, int k,
                         const std::function<void(const CombConfig&)>& fn);

/// Materialized deduplicated successor list; intended for small e and k.
std::vector<CombConfig> legal_moves(const CombConfig& c, int k);

struct ConnectivityReport {
    int e = 0;
    int k = 0;
    bool reduced = false;            // orbit census (tooth permutations)
    long long state_count = 0;       // nondegenerate states (or orbits)
    bool connected = false;          // component_count == 1
    long long component_count = 0;
    std::vector<long long> component_sizes;  // descending
    long long diameter = -1;         // max over components; -1 if not computed
    bool diameter_computed = false;
    bool multiset_invariant = false; // k == 2: |S|=2 moves preserve label counts
    std::string note;
};

/// Exact component census of all nondegenerate configurations in {0..k-1}^e
/// under legal moves. Guards: 2 <= e <= 7, 2 <= k <= 5, k^e <= 10^6.
ConnectivityReport connectivity(int e, int k);

/// Same census computed on tooth-permutation orbits (multisets of labels).
/// Transposing two differing teeth is itself a legal move for e >= 3, so the
/// orbit census has the same component count there; e = 2 has no moves and
/// the orbit census merges mirror-image singletons.
ConnectivityReport symmetry_reduced_connectivity(int e, int k);

}  // namespace rcdim::comb
