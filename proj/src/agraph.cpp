#include "rcdim/agraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rcdim::agraph {

long long StableAGraph::beta_total() const {
    long long total = 0;
    for (const auto& [id, beta] : vertices) total += beta;
    return total;
}

long long StableAGraph::flags_at(int vertex_id) const {
    long long flags = 0;
    for (const auto& [u, v] : edges) {
        if (u == vertex_id) ++flags;
        if (v == vertex_id) ++flags;
    }
    for (const auto& [tid, v] : tails) {
        if (v == vertex_id) ++flags;
    }
    return flags;
}

namespace {

StableAGraph normalized(const StableAGraph& g) {
    StableAGraph out = g;
    std::sort(out.vertices.begin(), out.vertices.end());
    for (auto& [u, v] : out.edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(out.edges.begin(), out.edges.end());
    std::sort(out.tails.begin(), out.tails.end());
    return out;
}

}  // namespace

bool operator==(const StableAGraph& a, const StableAGraph& b) {
    const StableAGraph na = normalized(a);
    const StableAGraph nb = normalized(b);
    return na.vertices == nb.vertices && na.edges == nb.edges && na.tails == nb.tails;
}

AmbientContext::AmbientContext(int n_, int d_) : n(n_), d(d_) {
    if (d < 2 || d > n - 1)
        throw std::invalid_argument("AmbientContext requires 2 <= d <= n-1");
}

ValidationReport validate(const StableAGraph& g) {
    ValidationReport rep;
    auto flag = [&rep](std::string name, std::string detail) {
        rep.violations.push_back({std::move(name), std::move(detail)});
    };

    if (g.vertices.empty()) {
        flag("empty", "graph has no vertices");
        return rep;
    }

    std::map<int, int> beta;  // id -> beta
    for (const auto& [id, b] : g.vertices) {
        if (beta.count(id)) flag("duplicate-vertex-id", "vertex id " + std::to_string(id));
        beta[id] = b;
        if (b < 0) flag("negative-beta", "vertex " + std::to_string(id));
    }

    bool refs_ok = true;
    for (const auto& [u, v] : g.edges) {
        if (!beta.count(u) || !beta.count(v)) {
            flag("dangling-edge",
                 std::to_string(u) + "-" + std::to_string(v) + " references a missing vertex");
            refs_ok = false;
        }
    }
    std::set<int> tail_ids;
    for (const auto& [tid, v] : g.tails) {
        if (!tail_ids.insert(tid).second)
            flag("duplicate-tail-id", "tail id " + std::to_string(tid));
        if (!beta.count(v)) {
            flag("dangling-tail", "tail " + std::to_string(tid) + " references a missing vertex");
            refs_ok = false;
        }
    }

    if (refs_ok) {
        // genus 0: connected and acyclic, i.e. a tree
        std::map<int, int> root;
        for (const auto& [id, b] : g.vertices) root[id] = id;
        std::function<int(int)> find = [&](int x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        bool cycle = false;
        for (const auto& [u, v] : g.edges) {
            if (u == v) {
                cycle = true;
                continue;
            }
            const int ru = find(u);
            const int rv = find(v);
            if (ru == rv) {
                cycle = true;
            } else {
                root[ru] = rv;
            }
        }
        std::set<int> components;
        for (const auto& [id, b] : g.vertices) components.insert(find(id));
        if (cycle || components.size() > 1 ||
            g.edges.size() != g.vertices.size() - 1) {
            flag("not-a-tree",
                 cycle ? "contains a cycle" : "disconnected or wrong edge count");
        }

        // stability: beta-0 vertices carry at least 3 flags
        for (const auto& [id, b] : g.vertices) {
            if (b == 0 && g.flags_at(id) < 3) {
                flag("stability", "beta-0 vertex " + std::to_string(id) + " has " +
                                      std::to_string(g.flags_at(id)) + " flag(s)");
            }
        }
    }

    if (g.beta_total() < 1) flag("positive-degree", "beta(tau) must be at least 1");

    return rep;
}

long long expected_dim(const StableAGraph& g, const AmbientContext& ctx) {
    const ValidationReport rep = validate(g);
    if (!rep.ok())
        throw std::invalid_argument("expected_dim requires a valid graph; first violation: " +
                                    rep.violations.front().name);
    return static_cast<long long>(ctx.n + 1 - ctx.d) * g.beta_total() + g.num_tails() -
           g.num_edges() + ctx.dim_x() - 3;
}

long long flag_count(const StableAGraph& g) { return 2 * g.num_edges() + g.num_tails(); }

bool is_basic(const StableAGraph& g) {
    if (g.num_tails() != 1) return false;
    return std::all_of(g.vertices.begin(), g.vertices.end(),
                       [](const auto& v) { return v.second == 0 || v.second == 1; });
}

bool is_nondegenerate(const StableAGraph& g) {
    return is_basic(g) && std::all_of(g.vertices.begin(), g.vertices.end(),
                                      [](const auto& v) { return v.second == 1; });
}

namespace {

// Canonical code of a rooted tree: "(" + sorted child codes + ")". Distinct
// codes are exactly the isomorphism classes of rooted trees.
using Codes = std::vector<std::string>;

void collect_multisets(int remaining, const std::vector<std::pair<int, std::string>>& pool,
                       std::size_t start, std::vector<std::string>& acc,
                       std::set<std::string>& out) {
    if (remaining == 0) {
        Codes children = acc;
        std::sort(children.begin(), children.end());
        std::string code = "(";
        for (const auto& ch : children) code += ch;
        code += ")";
        out.insert(code);
        return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (pool[i].first > remaining) continue;
        acc.push_back(pool[i].second);
        collect_multisets(remaining - pool[i].first, pool, i, acc, out);
        acc.pop_back();
    }
}

// Recomputed per call; the guard keeps m small enough that memoization
// would only buy microseconds at the cost of shared mutable state.
Codes rooted_tree_codes(int m) {
    std::vector<Codes> by_size = {{}, {"()"}};
    for (int target = 2; target <= m; ++target) {
        std::vector<std::pair<int, std::string>> pool;
        for (int s = 1; s < target; ++s)
            for (const auto& code : by_size[s]) pool.emplace_back(s, code);
        std::set<std::string> out;
        std::vector<std::string> acc;
        collect_multisets(target - 1, pool, 0, acc, out);
        by_size.emplace_back(out.begin(), out.end());
    }
    return by_size[m];
}

StableAGraph graph_from_code(const std::string& code) {
    StableAGraph g;
    int next_id = 0;
    std::vector<int> stack;
    for (char ch : code) {
        if (ch == '(') {
            const int id = next_id++;
            g.vertices.emplace_back(id, 1);
            if (!stack.empty()) g.edges.emplace_back(stack.back(), id);
            stack.push_back(id);
        } else {
            stack.pop_back();
        }
    }
    g.tails.emplace_back(0, 0);  // root carries the unique tail
    return g;
}

}  // namespace

std::vector<StableAGraph> enumerate_nondegenerate_basic(int e) {
    if (e < 1 || e > 8)
        throw std::invalid_argument("enumerate_nondegenerate_basic guard: 1 <= e <= 8");
    std::vector<StableAGraph> out;
    for (const auto& code : rooted_tree_codes(e)) out.push_back(graph_from_code(code));
    return out;
}

StableAGraph chain_to_comb(const StableAGraph& g) {
    if (!is_nondegenerate(g))
        throw std::invalid_argument("chain_to_comb requires a nondegenerate basic graph");
    const int e = static_cast<int>(g.vertices.size());
    if (e < 2)
        throw std::invalid_argument(
            "chain_to_comb requires e >= 2 (the beta-0 center needs >= 3 flags)");

    std::map<int, int> degree;
    for (const auto& [id, b] : g.vertices) degree[id] = 0;
    for (const auto& [u, v] : g.edges) {
        ++degree[u];
        ++degree[v];
    }
    int endpoints = 0;
    for (const auto& [id, deg] : degree) {
        if (deg > 2) throw std::invalid_argument("chain_to_comb requires a chain (path)");
        if (deg == 1) ++endpoints;
    }
    if (endpoints != 2 || !validate(g).ok())
        throw std::invalid_argument("chain_to_comb requires a chain (path)");
    if (degree[g.tails.front().second] != 1)
        throw std::invalid_argument("chain_to_comb requires the tail at one end of the chain");

    return make_comb(e);
}

StableAGraph make_single_vertex(int beta, int tails) {
    StableAGraph g;
    g.vertices.emplace_back(0, beta);
    for (int t = 0; t < tails; ++t) g.tails.emplace_back(t, 0);
    return g;
}

StableAGraph make_chain(int e) {
    StableAGraph g;
    for (int i = 0; i < e; ++i) g.vertices.emplace_back(i, 1);
    for (int i = 0; i + 1 < e; ++i) g.edges.emplace_back(i, i + 1);
    g.tails.emplace_back(0, 0);
    return g;
}

StableAGraph make_comb(int e) {
    StableAGraph g;
    g.vertices.emplace_back(0, 0);  // collapsed center
    for (int i = 1; i <= e; ++i) {
        g.vertices.emplace_back(i, 1);
        g.edges.emplace_back(0, i);
    }
    g.tails.emplace_back(0, 0);
    return g;
}

namespace {

std::string ahu_encode(int v, int parent, const std::map<int, std::vector<int>>& adj,
                       const std::map<int, int>& beta) {
    std::vector<std::string> child_codes;
    auto it = adj.find(v);
    if (it != adj.end()) {
        for (int w : it->second) {
            if (w != parent) child_codes.push_back(ahu_encode(w, v, adj, beta));
        }
    }
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(" + std::to_string(beta.at(v)) + ":";
    for (const auto& ch : child_codes) code += ch;
    code += ")";
    return code;
}

}  // namespace

std::string canonical_form(const StableAGraph& g) {
    if (g.tails.size() != 1)
        throw std::invalid_argument("canonical_form requires exactly one tail");
    if (!validate(g).ok())
        throw std::invalid_argument("canonical_form requires a valid graph");
    std::map<int, std::vector<int>> adj;
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::map<int, int> beta(g.vertices.begin(), g.vertices.end());
    return ahu_encode(g.tails.front().second, -1, adj, beta);
}

std::string to_record(const StableAGraph& g) {
    const StableAGraph n = normalized(g);
    std::ostringstream os;
    os << "vertices";
    for (const auto& [id, b] : n.vertices) os << " " << id << ":" << b;
    os << "\nedges";
    for (const auto& [u, v] : n.edges) os << " " << u << "-" << v;
    os << "\ntails";
    for (const auto& [tid, v] : n.tails) os << " " << tid << ":" << v;
    os << "\n";
    return os.str();
}

StableAGraph from_record(const std::string& text) {
    StableAGraph g;
    std::string prepared = text;
    std::replace(prepared.begin(), prepared.end(), ';', '\n');
    std::istringstream is(prepared);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        std::string item;
        while (ls >> item) {
            const char sep = kind == "edges" ? '-' : ':';
            const auto pos = item.find(sep);
            if (pos == std::string::npos)
                throw std::invalid_argument("bad record item: " + item);
            const int x = std::stoi(item.substr(0, pos));
            const int y = std::stoi(item.substr(pos + 1));
            if (kind == "vertices") {
                g.vertices.emplace_back(x, y);
            } else if (kind == "edges") {
                g.edges.emplace_back(x, y);
            } else if (kind == "tails") {
                g.tails.emplace_back(x, y);
            } else {
                throw std::invalid_argument("unknown record section: " + kind);
            }
        }
    }
    if (g.vertices.empty()) throw std::invalid_argument("record has no vertices");
    return g;
}

}  // namespace rcdim::agraph
