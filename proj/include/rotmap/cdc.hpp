#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rotmap/errors.hpp"
#include "rotmap/group.hpp"
#include "rotmap/lexgraph.hpp"
#include "rotmap/permutation.hpp"

namespace rotmap {

// A cycle is a closed vertex sequence without the repeated endpoint.
using Cycle = std::vector<int>;

// Canonical form: rotate so the least vertex comes first, then pick the
// lexicographically smaller of the two traversal directions. Gives set
// semantics for faces regardless of the order an orbit generates them.
inline Cycle canonical_cycle(const Cycle& walk) {
    const std::size_t L = walk.size();
    const std::size_t k = static_cast<std::size_t>(
        std::min_element(walk.begin(), walk.end()) - walk.begin());
    Cycle fwd(L), rev(L);
    for (std::size_t a = 0; a < L; ++a) {
        fwd[a] = walk[(k + a) % L];
        rev[a] = walk[(k + L - a) % L];
    }
    return std::min(fwd, rev);
}

// Set of canonicalized cycles over a LexGraph. from_cycles keeps
// duplicates so that mutation tests can feed broken covers to verify_cdc.
class CycleDoubleCover {
public:
    CycleDoubleCover() = default;

    static CycleDoubleCover from_cycles(std::vector<Cycle> raw) {
        CycleDoubleCover cdc;
        cdc.cycles_.reserve(raw.size());
        for (auto& c : raw) cdc.cycles_.push_back(canonical_cycle(c));
        std::sort(cdc.cycles_.begin(), cdc.cycles_.end());
        return cdc;
    }

    const std::vector<Cycle>& cycles() const { return cycles_; }
    std::size_t size() const { return cycles_.size(); }

    friend bool operator==(const CycleDoubleCover& a, const CycleDoubleCover& b) {
        return a.cycles_ == b.cycles_;
    }

private:
    std::vector<Cycle> cycles_;
};

// True iff every cycle is a genuine cycle of the graph (length >= 3,
// consecutive vertices adjacent, no repeats) and every edge of the graph
// lies on exactly two of them.
inline bool verify_cdc(const CycleDoubleCover& cdc, const LexGraph& g) {
    std::map<long long, int> cover;
    for (const auto& cyc : cdc.cycles()) {
        if (cyc.size() < 3) return false;
        std::set<int> distinct(cyc.begin(), cyc.end());
        if (distinct.size() != cyc.size()) return false;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            const int u = cyc[k], v = cyc[(k + 1) % cyc.size()];
            if (!g.valid_vertex(u) || !g.valid_vertex(v) || !g.adjacent(u, v)) return false;
            ++cover[g.edge_index(u, v)];
        }
    }
    if (static_cast<long long>(cover.size()) != g.edge_count()) return false;
    for (const auto& [e, c] : cover)
        if (c != 2) return false;
    return true;
}

// Graph on the edges at v: two incident edges are adjacent iff they are
// consecutive on a common cycle of the cover. For a polytopal map this is
// a single cycle of length 2m.
struct VertexFigure {
    std::vector<long long> edges;              // the 2m incident edge ids
    std::vector<std::pair<int, int>> adjacency;  // index pairs into edges
    bool connected = false;
    int max_degree = 0;
    bool two_regular = false;

    bool is_single_cycle() const { return connected && two_regular; }
};

inline VertexFigure vertex_figure(const CycleDoubleCover& cdc, const LexGraph& g, int v) {
    if (!g.valid_vertex(v)) throw ParameterError("vertex_figure: invalid vertex");
    VertexFigure fig;
    std::map<long long, int> index_of;
    for (int w : g.neighbors(v)) {
        const long long e = g.edge_index(v, w);
        index_of[e] = static_cast<int>(fig.edges.size());
        fig.edges.push_back(e);
    }
    std::vector<int> degree(fig.edges.size(), 0);
    std::vector<std::vector<int>> adj(fig.edges.size());
    for (const auto& cyc : cdc.cycles()) {
        const auto it = std::find(cyc.begin(), cyc.end(), v);
        if (it == cyc.end()) continue;
        const std::size_t k = static_cast<std::size_t>(it - cyc.begin());
        const std::size_t L = cyc.size();
        const int prev = cyc[(k + L - 1) % L], next = cyc[(k + 1) % L];
        const int a = index_of.at(g.edge_index(v, prev));
        const int b = index_of.at(g.edge_index(v, next));
        fig.adjacency.emplace_back(a, b);
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    fig.max_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    fig.two_regular = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
    std::vector<bool> seen(fig.edges.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    fig.connected = reached == fig.edges.size();
    return fig;
}

// The G-orbit of the base facial cycle (v, v s1, v s1^2, ..., v s1^(p-1)),
// canonicalized and deduplicated. The walk must close only after p = |s1|
// steps, else the parameters do not describe a face.
inline CycleDoubleCover facial_orbit(const LexGraph& g, const GeneratedGroup& group,
                                     const Permutation& sigma1, int base_vertex) {
    if (!group.enumerated()) throw NotEnumerated("facial_orbit: group not enumerated");
    if (sigma1.degree() != g.vertex_count())
        throw DegreeMismatch("facial_orbit: sigma1 degree mismatch");
    if (!g.valid_vertex(base_vertex)) throw ParameterError("facial_orbit: invalid base vertex");

    const long long p = sigma1.order();
    Cycle walk;
    walk.reserve(static_cast<std::size_t>(p));
    int x = base_vertex;
    for (long long k = 0; k < p; ++k) {
        if (k > 0 && x == base_vertex)
            throw BaseWalkNotCycle("base walk returns to the base vertex after " +
                                   std::to_string(k) + " of " + std::to_string(p) + " steps");
        walk.push_back(x);
        x = sigma1(x);
    }
    if (x != base_vertex) throw BaseWalkNotCycle("base walk does not close");  // unreachable for p = |s1|
    if (p < 3 || !g.adjacent(walk[0], walk[1]))
        throw BaseWalkNotCycle("base walk is not a cycle of the graph");

    std::set<Cycle> orbit;
    Cycle image(walk.size());
    for (const auto& gamma : group.elements()) {
        for (std::size_t k = 0; k < walk.size(); ++k) image[k] = gamma(walk[k]);
        orbit.insert(canonical_cycle(image));
    }
    return CycleDoubleCover::from_cycles(std::vector<Cycle>(orbit.begin(), orbit.end()));
}

}  // namespace rotmap
