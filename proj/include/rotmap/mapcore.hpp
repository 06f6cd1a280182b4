#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rotmap/cdc.hpp"
#include "rotmap/errors.hpp"
#include "rotmap/group.hpp"
#include "rotmap/lexgraph.hpp"
#include "rotmap/permutation.hpp"

namespace rotmap {

// Incident vertex-edge-face triple; face is an index into the cover.
struct Flag {
    int vertex;
    long long edge;
    int face;
};

// All 4|E| flags of a polytopal map together with the three matchings:
// s0 changes the vertex, s1 the edge, s2 the face, keeping the other two
// incidences. They are fixed-point-free involutions with (s0 s2)^2 = id.
class FlagSystem {
public:
    int size() const { return static_cast<int>(flags_.size()); }
    const Flag& flag(int idx) const { return flags_[static_cast<std::size_t>(idx)]; }
    int s0(int idx) const { return s0_[static_cast<std::size_t>(idx)]; }
    int s1(int idx) const { return s1_[static_cast<std::size_t>(idx)]; }
    int s2(int idx) const { return s2_[static_cast<std::size_t>(idx)]; }

    int s(int which, int idx) const {
        switch (which) {
            case 0: return s0(idx);
            case 1: return s1(idx);
            default: return s2(idx);
        }
    }

    int find_flag(int vertex, long long edge, int face) const {
        for (int i = 0; i < size(); ++i) {
            const Flag& f = flags_[static_cast<std::size_t>(i)];
            if (f.vertex == vertex && f.edge == edge && f.face == face) return i;
        }
        return -1;
    }

    // <s0,s1,s2> acts transitively on the flags iff the map is connected.
    bool connected() const {
        if (flags_.empty()) return false;
        std::vector<bool> seen(flags_.size(), false);
        std::vector<int> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int w = 0; w < 3; ++w) {
                const int y = s(w, x);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == flags_.size();
    }

    friend FlagSystem build_flag_system(const LexGraph& g, const CycleDoubleCover& cdc);

private:
    std::vector<Flag> flags_;
    std::vector<int> s0_, s1_, s2_;
};

inline FlagSystem build_flag_system(const LexGraph& g, const CycleDoubleCover& cdc) {
    if (!verify_cdc(cdc, g))
        throw PreconditionFailed("build_flag_system: not a cycle double cover of the graph");
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!vertex_figure(cdc, g, v).connected)
            throw PreconditionFailed("build_flag_system: vertex figure at vertex " +
                                     std::to_string(v) + " is disconnected");

    FlagSystem fs;
    const auto& faces = cdc.cycles();
    // (face, position) -> two flags per position: (v, prev edge) and (v, next edge)
    std::map<std::tuple<int, long long, int>, int> id_of;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const Cycle& f = faces[static_cast<std::size_t>(fi)];
        const std::size_t L = f.size();
        for (std::size_t k = 0; k < L; ++k) {
            const int v = f[k];
            const long long e_prev = g.edge_index(f[(k + L - 1) % L], v);
            const long long e_next = g.edge_index(v, f[(k + 1) % L]);
            for (const long long e : {e_prev, e_next}) {
                id_of[{v, e, fi}] = static_cast<int>(fs.flags_.size());
                fs.flags_.push_back(Flag{v, e, fi});
            }
        }
    }
    const std::size_t total = fs.flags_.size();
    fs.s0_.assign(total, -1);
    fs.s1_.assign(total, -1);
    fs.s2_.assign(total, -1);

    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
        const Cycle& f = faces[static_cast<std::size_t>(fi)];
        const std::size_t L = f.size();
        for (std::size_t k = 0; k < L; ++k) {
            const int v = f[k], w = f[(k + 1) % L];
            const long long e_prev = g.edge_index(f[(k + L - 1) % L], v);
            const long long e_next = g.edge_index(v, w);
            // s1: same (v, f), the two edges of f at v
            const int a = id_of.at({v, e_prev, fi});
            const int b = id_of.at({v, e_next, fi});
            fs.s1_[static_cast<std::size_t>(a)] = b;
            fs.s1_[static_cast<std::size_t>(b)] = a;
            // s0: same (e, f), the two endpoints of e_next
            const int c = id_of.at({w, e_next, fi});
            fs.s0_[static_cast<std::size_t>(b)] = c;
            fs.s0_[static_cast<std::size_t>(c)] = b;
        }
    }
    // s2: same (v, e), the two faces through e
    std::map<std::pair<int, long long>, std::vector<int>> by_ve;
    for (int i = 0; i < static_cast<int>(total); ++i) {
        const Flag& f = fs.flags_[static_cast<std::size_t>(i)];
        by_ve[{f.vertex, f.edge}].push_back(i);
    }
    for (const auto& [ve, pair] : by_ve) {
        if (pair.size() != 2)
            throw PreconditionFailed("build_flag_system: edge not on exactly two faces");
        fs.s2_[static_cast<std::size_t>(pair[0])] = pair[1];
        fs.s2_[static_cast<std::size_t>(pair[1])] = pair[0];
    }
    return fs;
}

// Orientable iff the flags admit a 2-colouring swapped by each of s0, s1,
// s2 -- bipartiteness of the flag graph. Exact and finite; equivalent to
// surface orientability for polytopal maps.
inline bool is_orientable(const FlagSystem& fs) {
    if (!fs.connected()) throw PreconditionFailed("is_orientable: flag system not connected");
    std::vector<int> colour(static_cast<std::size_t>(fs.size()), -1);
    std::vector<int> stack{0};
    colour[0] = 0;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int w = 0; w < 3; ++w) {
            const int y = fs.s(w, x);
            if (colour[static_cast<std::size_t>(y)] < 0) {
                colour[static_cast<std::size_t>(y)] = 1 - colour[static_cast<std::size_t>(x)];
                stack.push_back(y);
            } else if (colour[static_cast<std::size_t>(y)] == colour[static_cast<std::size_t>(x)]) {
                return false;
            }
        }
    }
    return true;
}

// The flag 2-colouring itself (empty when non-orientable).
inline std::vector<int> orientation_classes(const FlagSystem& fs) {
    std::vector<int> colour(static_cast<std::size_t>(fs.size()), -1);
    std::vector<int> stack{0};
    colour[0] = 0;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int w = 0; w < 3; ++w) {
            const int y = fs.s(w, x);
            if (colour[static_cast<std::size_t>(y)] < 0) {
                colour[static_cast<std::size_t>(y)] = 1 - colour[static_cast<std::size_t>(x)];
                stack.push_back(y);
            } else if (colour[static_cast<std::size_t>(y)] == colour[static_cast<std::size_t>(x)]) {
                return {};
            }
        }
    }
    return colour;
}

namespace detail {

// Try to extend base_a -> base_b to a bijection commuting with s0, s1, s2.
inline bool propagate_flag_map(const FlagSystem& a, const FlagSystem& b, int base_a, int base_b) {
    std::vector<int> phi(static_cast<std::size_t>(a.size()), -1);
    std::vector<int> psi(static_cast<std::size_t>(b.size()), -1);
    phi[static_cast<std::size_t>(base_a)] = base_b;
    psi[static_cast<std::size_t>(base_b)] = base_a;
    std::vector<int> stack{base_a};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int w = 0; w < 3; ++w) {
            const int xa = a.s(w, x);
            const int xb = b.s(w, phi[static_cast<std::size_t>(x)]);
            const int cur = phi[static_cast<std::size_t>(xa)];
            if (cur < 0) {
                if (psi[static_cast<std::size_t>(xb)] >= 0) return false;
                phi[static_cast<std::size_t>(xa)] = xb;
                psi[static_cast<std::size_t>(xb)] = xa;
                stack.push_back(xa);
            } else if (cur != xb) {
                return false;
            }
        }
    }
    // connectedness makes the propagation total
    return std::find(phi.begin(), phi.end(), -1) == phi.end();
}

}  // namespace detail

struct MapAutomorphisms {
    long long order = 0;        // |Aut(M)|
    long long flag_orbits = 0;  // semi-regularity: every orbit has size |Aut(M)|
    std::vector<int> base_orbit;  // accepted images of flag 0, ascending
};

// An automorphism is determined by the image of one flag; each candidate
// image is accepted iff propagation along s0/s1/s2 stays consistent.
inline MapAutomorphisms map_automorphisms(const FlagSystem& fs) {
    if (!fs.connected()) throw PreconditionFailed("map_automorphisms: flag system not connected");
    MapAutomorphisms out;
    for (int cand = 0; cand < fs.size(); ++cand)
        if (detail::propagate_flag_map(fs, fs, 0, cand)) out.base_orbit.push_back(cand);
    out.order = static_cast<long long>(out.base_orbit.size());
    if (fs.size() % out.order != 0)
        throw PreconditionFailed("map_automorphisms: action is not semi-regular");
    out.flag_orbits = fs.size() / out.order;
    return out;
}

inline bool map_isomorphic(const FlagSystem& a, const FlagSystem& b) {
    if (a.size() != b.size()) return false;
    if (a.size() == 0) return true;
    for (int cand = 0; cand < b.size(); ++cand)
        if (detail::propagate_flag_map(a, b, 0, cand)) return true;
    return false;
}

// A verified polytopal map: graph, facial cycles, flag system, and the
// base flag (v, e, f) with v = (1,1), e = {v, v sigma1^-1}, f the base
// facial cycle.
struct PolytopalMap {
    LexGraph graph;
    CycleDoubleCover cdc;
    FlagSystem flags;
    int base_vertex = 0;
    long long base_edge = 0;
    int base_face = 0;
    int base_flag = 0;
};

inline PolytopalMap build_map(const LexGraph& g, const GeneratedGroup& group,
                              const Permutation& sigma1, int base_vertex) {
    PolytopalMap map{g, facial_orbit(g, group, sigma1, base_vertex), FlagSystem{}, base_vertex, 0, 0, 0};
    map.flags = build_flag_system(g, map.cdc);
    const int u = sigma1.inverse()(base_vertex);
    map.base_edge = g.edge_index(base_vertex, u);
    const Cycle base = canonical_cycle([&] {
        Cycle walk;
        int x = base_vertex;
        const long long p = sigma1.order();
        for (long long k = 0; k < p; ++k) {
            walk.push_back(x);
            x = sigma1(x);
        }
        return walk;
    }());
    const auto& cycles = map.cdc.cycles();
    const auto it = std::lower_bound(cycles.begin(), cycles.end(), base);
    if (it == cycles.end() || *it != base)
        throw PreconditionFailed("build_map: base facial cycle missing from its own orbit");
    map.base_face = static_cast<int>(it - cycles.begin());
    map.base_flag = map.flags.find_flag(base_vertex, map.base_edge, map.base_face);
    if (map.base_flag < 0) throw PreconditionFailed("build_map: base flag not found");
    return map;
}

inline long long euler_characteristic(const PolytopalMap& m) {
    return static_cast<long long>(m.graph.vertex_count()) - m.graph.edge_count() +
           static_cast<long long>(m.cdc.size());
}

struct GenusOrCrosscap {
    bool orientable;
    long long value;  // genus g (chi = 2 - 2g) or crosscap k (chi = 2 - k)
};

inline GenusOrCrosscap genus_or_crosscap(const PolytopalMap& m) {
    const long long chi = euler_characteristic(m);
    if (is_orientable(m.flags)) {
        if ((2 - chi) % 2 != 0)
            throw PreconditionFailed("genus_or_crosscap: odd Euler characteristic on an orientable map");
        return {true, (2 - chi) / 2};
    }
    return {false, 2 - chi};
}

enum class MapClass { Chiral, ReflexibleOrientable, ReflexibleNonOrientable, NotRotary };

inline const char* to_string(MapClass c) {
    switch (c) {
        case MapClass::Chiral: return "Chiral";
        case MapClass::ReflexibleOrientable: return "ReflexibleOrientable";
        case MapClass::ReflexibleNonOrientable: return "ReflexibleNonOrientable";
        default: return "NotRotary";
    }
}

// Reflexible iff Aut(M) is transitive on flags; chiral iff orientable
// with exactly two orbits, each a full orientation class. Anything else
// is conservatively NotRotary.
inline MapClass classify(const PolytopalMap& m) {
    const MapAutomorphisms aut = map_automorphisms(m.flags);
    const std::vector<int> colour = orientation_classes(m.flags);
    const bool orientable = !colour.empty();
    if (aut.flag_orbits == 1)
        return orientable ? MapClass::ReflexibleOrientable : MapClass::ReflexibleNonOrientable;
    if (orientable && aut.flag_orbits == 2) {
        const int base_colour = colour[0];
        const bool orbit_is_class =
            std::all_of(aut.base_orbit.begin(), aut.base_orbit.end(),
                        [&](int f) { return colour[static_cast<std::size_t>(f)] == base_colour; });
        if (orbit_is_class) return MapClass::Chiral;
    }
    return MapClass::NotRotary;
}

// Pairwise face intersections must be empty, one vertex, or one edge.
inline bool faces_pairwise_polyhedral(const std::vector<Cycle>& faces, const LexGraph& g) {
    const auto edge_set = [&](const Cycle& f) {
        std::set<long long> es;
        for (std::size_t k = 0; k < f.size(); ++k)
            es.insert(g.edge_index(f[k], f[(k + 1) % f.size()]));
        return es;
    };
    std::vector<std::set<int>> vsets;
    std::vector<std::set<long long>> esets;
    for (const auto& f : faces) {
        vsets.emplace_back(f.begin(), f.end());
        esets.push_back(edge_set(f));
    }
    for (std::size_t a = 0; a < faces.size(); ++a)
        for (std::size_t b = a + 1; b < faces.size(); ++b) {
            std::vector<int> cv;
            std::set_intersection(vsets[a].begin(), vsets[a].end(), vsets[b].begin(), vsets[b].end(),
                                  std::back_inserter(cv));
            std::vector<long long> ce;
            std::set_intersection(esets[a].begin(), esets[a].end(), esets[b].begin(), esets[b].end(),
                                  std::back_inserter(ce));
            const bool ok = (cv.empty() && ce.empty()) || (cv.size() == 1 && ce.empty()) ||
                            (cv.size() == 2 && ce.size() == 1);
            if (!ok) return false;
        }
    return true;
}

inline bool is_polyhedral(const PolytopalMap& m) {
    return faces_pairwise_polyhedral(m.cdc.cycles(), m.graph);
}

struct PetrieResult {
    PolytopalMap map;
    Permutation eta1, eta2;
    bool rho_in_rotation_group;  // iff the Petrie dual is non-orientable
};

// The map with the same skeleton generated by eta1 = s1 s2 rho, eta2 = s2.
// rho must be an involution fixing the base vertex and inverting both
// distinguished generators.
inline PetrieResult petrie_dual(const Permutation& sigma1, const Permutation& sigma2,
                                const Permutation& rho, const LexGraph& g, int base_vertex = 1,
                                std::size_t cap = kDefaultEnumerationCap) {
    if (rho.order() != 2) throw PreconditionFailed("petrie_dual: rho is not an involution");
    if (rho(base_vertex) != base_vertex)
        throw PreconditionFailed("petrie_dual: rho does not fix the base vertex");
    if (!is_inverted_by(sigma1, rho) || !is_inverted_by(sigma2, rho))
        throw PreconditionFailed("petrie_dual: rho does not invert both generators");
    const Permutation eta1 = compose(compose(sigma1, sigma2), rho);
    const Permutation eta2 = sigma2;
    GeneratedGroup h(g.vertex_count(), {eta1, eta2});
    h.enumerate(cap);
    PetrieResult out{build_map(g, h, eta1, base_vertex), eta1, eta2, h.contains(rho)};
    return out;
}

}  // namespace rotmap
