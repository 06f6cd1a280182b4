#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rotmap/errors.hpp"
#include "rotmap/indexing.hpp"
#include "rotmap/permutation.hpp"

namespace rotmap {

// The lexicographic product C_n[mK_1]: n columns of m pairwise
// non-adjacent vertices, with a complete bipartite join between
// consecutive columns (mod n). Adjacency is computed from the rule,
// never stored.
class LexGraph {
public:
    static LexGraph build(int m, int s) {
        if (m < 3 || m % 2 == 0) throw ParameterError("m must be an odd integer >= 3");
        if (s < 1) throw ParameterError("s must be a positive integer");
        return LexGraph(m, s);
    }

    int m() const { return m_; }
    int s() const { return s_; }
    int n() const { return n_; }

    int vertex_count() const { return m_ * n_; }
    long long edge_count() const { return static_cast<long long>(m_) * m_ * n_; }
    long long arc_count() const { return 2 * edge_count(); }
    int valence() const { return 2 * m_; }

    bool valid_vertex(int v) const { return v >= 1 && v <= vertex_count(); }

    bool adjacent(int u, int v) const {
        const int iu = vertex_column(u, m_), iv = vertex_column(v, m_);
        return iv == mod1(iu + 1, n_) || iu == mod1(iv + 1, n_);
    }

    // The 2m neighbours in deterministic order: column i-1 first (fiber
    // ascending), then column i+1. Facial-cycle canonicalisation relies
    // on this order being fixed.
    std::vector<int> neighbors(int v) const {
        if (!valid_vertex(v)) throw ParameterError("invalid vertex id");
        const int i = vertex_column(v, m_);
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(2 * m_));
        for (int j = 1; j <= m_; ++j) out.push_back(vertex_id(mod1(i - 1, n_), j, m_));
        for (int j = 1; j <= m_; ++j) out.push_back(vertex_id(mod1(i + 1, n_), j, m_));
        return out;
    }

    // Edges are indexed 0..m^2*n-1: edge k joins column i to column i+1
    // with fibers j and l, where k = ((i-1)*m + (j-1))*m + (l-1).
    long long edge_index(int u, int v) const {
        const int iu = vertex_column(u, m_), iv = vertex_column(v, m_);
        int i, j, l;
        if (iv == mod1(iu + 1, n_)) {
            i = iu;
            j = vertex_fiber(u, m_);
            l = vertex_fiber(v, m_);
        } else if (iu == mod1(iv + 1, n_)) {
            i = iv;
            j = vertex_fiber(v, m_);
            l = vertex_fiber(u, m_);
        } else {
            throw ParameterError("edge_index: vertices are not adjacent");
        }
        return (static_cast<long long>(i - 1) * m_ + (j - 1)) * m_ + (l - 1);
    }

    std::pair<int, int> edge_endpoints(long long e) const {
        const int l = static_cast<int>(e % m_) + 1;
        const int j = static_cast<int>((e / m_) % m_) + 1;
        const int i = static_cast<int>(e / (static_cast<long long>(m_) * m_)) + 1;
        return {vertex_id(i, j, m_), vertex_id(mod1(i + 1, n_), l, m_)};
    }

    // True iff p maps edges to edges bijectively.
    bool is_automorphism(const Permutation& p) const {
        if (p.degree() != vertex_count())
            throw DegreeMismatch("is_automorphism: permutation degree mismatch");
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= m_; ++j) {
                const int u = vertex_id(i, j, m_);
                for (int l = 1; l <= m_; ++l)
                    if (!adjacent(p(u), p(vertex_id(mod1(i + 1, n_), l, m_)))) return false;
            }
        return true;
    }

    // True iff every vertex is adjacent to every vertex outside its own
    // column (decided by scanning, not by the parameter identity n == 3).
    bool is_complete_multipartite() const {
        const int N = vertex_count();
        for (int u = 1; u <= N; ++u)
            for (int v = u + 1; v <= N; ++v) {
                const bool same_column = vertex_column(u, m_) == vertex_column(v, m_);
                if (!same_column && !adjacent(u, v)) return false;
            }
        return true;
    }

    bool connected() const {
        const int N = vertex_count();
        std::vector<bool> seen(static_cast<std::size_t>(N) + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == N;
    }

private:
    LexGraph(int m, int s) : m_(m), s_(s), n_(s * m) {}

    int m_;
    int s_;
    int n_;
};

}  // namespace rotmap
