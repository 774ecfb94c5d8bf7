#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rcdim::agraph {

/// Genus-0 stable A-graph: a tree of vertices carrying degrees, plus tails
/// (marked points, stored as half-edges). Flags of a vertex are its incident
/// edge endpoints together with its tails.
struct StableAGraph {
    std::vector<std::pair<int, int>> vertices;  // (vertex id, beta >= 0)
    std::vector<std::pair<int, int>> edges;     // unordered id pairs
    std::vector<std::pair<int, int>> tails;     // (tail id, attached vertex id)

    long long beta_total() const;
    long long num_vertices() const { return static_cast<long long>(vertices.size()); }
    long long num_edges() const { return static_cast<long long>(edges.size()); }
    long long num_tails() const { return static_cast<long long>(tails.size()); }
    /// Edge endpoints at `vertex_id` plus tails attached there.
    long long flags_at(int vertex_id) const;
};

bool operator==(const StableAGraph& a, const StableAGraph& b);

struct Violation {
    std::string name;    // stable identifier, e.g. "not-a-tree", "stability"
    std::string detail;  // human-readable specifics
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Ambient projective space P^n and hypersurface degree d, with dim X = n - 1.
/// Requires 2 <= d <= n - 1.
struct AmbientContext {
    int n;
    int d;

    AmbientContext(int n, int d);
    int dim_x() const { return n - 1; }
};

/// Checks every structural invariant; violations are data, not errors.
ValidationReport validate(const StableAGraph& g);

/// (n+1-d)*beta(tau) + #Tail - #Edge + dim X - 3. Requires validate(g).ok().
long long expected_dim(const StableAGraph& g, const AmbientContext& ctx);

/// 2*#Edge + #Tail.
long long flag_count(const StableAGraph& g);

/// beta(v) in {0,1} for every vertex and exactly one tail.
bool is_basic(const StableAGraph& g);

/// Basic with beta(v) = 1 for every vertex.
bool is_nondegenerate(const StableAGraph& g);

/// All isomorphism classes of trees of e beta-1 vertices with a single tail
/// (the tail vertex acts as a root). Guard: 1 <= e <= 8.
std::vector<StableAGraph> enumerate_nondegenerate_basic(int e);

/// Specializes a nondegenerate basic chain (tail at one end) to the comb:
/// a beta-0 center carrying the tail with the e teeth as beta-1 leaves.
/// The comb's center needs >= 3 flags, so the chain must have e >= 2.
StableAGraph chain_to_comb(const StableAGraph& g);

// Builders for the graphs that come up constantly.
StableAGraph make_single_vertex(int beta, int tails);  // tau_r(e)
StableAGraph make_chain(int e);                        // e beta-1 vertices, tail at vertex 0
StableAGraph make_comb(int e);                         // center id 0, teeth 1..e

/// Canonical rooted-tree encoding, rooted at the unique tail's vertex;
/// isomorphic single-tail graphs (ignoring ids) get equal strings.
std::string canonical_form(const StableAGraph& g);

/// Structured-text record; parse(print(g)) == g.
std::string to_record(const StableAGraph& g);
StableAGraph from_record(const std::string& text);

}  // namespace rcdim::agraph
