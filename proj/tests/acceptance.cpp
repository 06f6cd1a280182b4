// Acceptance suite: runs every verification criterion across the grid
// (m, s) in {(3,1), (3,2), (3,3), (5,1)} and prints one pass/fail line
// per criterion. Exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rotmap/rotmap.hpp"

using namespace rotmap;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << label;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

const std::vector<std::pair<int, int>> kGrid{{3, 1}, {3, 2}, {3, 3}, {5, 1}};

std::vector<std::pair<Family, std::pair<int, int>>> grid_instances() {
    std::vector<std::pair<Family, std::pair<int, int>>> out;
    for (const auto& ms : kGrid)
        for (Family f : all_families())
            if (family_in_domain(f, ms.first, ms.second)) out.push_back({f, ms});
    return out;
}

struct Built {
    ConstructionRecipe recipe;
    LexGraph graph;
    GeneratedGroup group;
    PolytopalMap map;
};

Built build(Family f, int m, int s) {
    ConstructionRecipe recipe = make_recipe(f, m, s);
    LexGraph graph = LexGraph::build(m, s);
    GeneratedGroup group(graph.vertex_count(),
                         {recipe.sigma1.to_vertex_perm(), recipe.sigma2.to_vertex_perm()});
    group.enumerate();
    PolytopalMap map = build_map(graph, group, recipe.sigma1.to_vertex_perm(), recipe.base_vertex);
    return Built{std::move(recipe), graph, std::move(group), std::move(map)};
}

// 1. Every in-domain instance matches the asserted classification, type
// and genus, cross-checked against the flag-system Euler characteristic.
void criterion1() {
    bool pass = true;
    std::ostringstream detail;
    long long worst_ms = 0;
    for (const auto& [f, ms] : grid_instances()) {
        const MapReport r = verify_instance(f, ms.first, ms.second);
        worst_ms = std::max(worst_ms, r.runtime_ms);
        if (!r.matches_theorem || r.runtime_ms >= 60'000) {
            pass = false;
            detail << family_name(f) << "(" << ms.first << "," << ms.second << "): "
                   << (r.reason.empty() ? "too slow" : r.reason) << "; ";
        }
    }
    report(1, "theorem grid: classification, type and genus verified on all 12 instances", pass,
           pass ? "max instance runtime " + std::to_string(worst_ms) + " ms" : detail.str());
}

// 2. Generator and group orders match the stated lemmas exactly.
void criterion2() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& [f, ms] : grid_instances()) {
        const int m = ms.first, s = ms.second;
        const long long n = static_cast<long long>(s) * m;
        const ConstructionRecipe rec = make_recipe(f, m, s);
        const long long p1 = rec.sigma1.order();
        const long long p2 = rec.sigma2.order();
        const long long p12 = wr_mul(rec.sigma1, rec.sigma2).order();
        GeneratedGroup g(m * static_cast<int>(n),
                         {rec.sigma1.to_vertex_perm(), rec.sigma2.to_vertex_perm()});
        g.enumerate();
        long long want1 = 0, want_group = 0;
        switch (f) {
            case Family::Chiral: want1 = m * n; want_group = 2 * m * m * n; break;
            case Family::NonOrientableOdd:
            case Family::NonOrientableEven: want1 = 2 * n; want_group = 4 * m * m * n; break;
            default: want1 = n; want_group = 2 * m * m * n; break;
        }
        const bool ok = p1 == want1 && p2 == 2 * m && p12 == 2 &&
                        static_cast<long long>(g.order()) == want_group;
        if (!ok) {
            pass = false;
            detail << family_name(f) << "(" << m << "," << s << ") orders " << p1 << "," << p2
                   << "," << p12 << ",|G|=" << g.order() << "; ";
        }
    }
    report(2, "lemma order suite: |s1|, |s2|, |s1 s2| and |G| match on every instance", pass,
           detail.str());
}

// 3. Flag-system classification equals the group-theoretic prediction
// from the arc-stabiliser size and the recipe's reflection.
void criterion3() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& [f, ms] : grid_instances()) {
        const Built b = build(f, ms.first, ms.second);
        const MapClass flag_class = classify(b.map);
        const std::size_t stab =
            b.group.stabilizer_of_arc(b.recipe.base_vertex, b.recipe.base_w).size();
        MapClass predicted = MapClass::NotRotary;
        if (b.recipe.rho.has_value()) {
            const Permutation rho = b.recipe.rho->to_vertex_perm();
            if (b.group.contains(rho) && stab == 2) predicted = MapClass::ReflexibleNonOrientable;
            else if (!b.group.contains(rho) && stab == 1) predicted = MapClass::ReflexibleOrientable;
        } else if (stab == 1) {
            predicted = MapClass::Chiral;
        }
        if (flag_class != predicted) {
            pass = false;
            detail << family_name(f) << "(" << ms.first << "," << ms.second << "): flag "
                   << to_string(flag_class) << " vs group " << to_string(predicted) << "; ";
        }
    }
    report(3, "oracle agreement: flag classification equals the arc-stabiliser prediction", pass,
           detail.str());
}

// 4. Petrie suite.
void criterion4() {
    bool pass = true;
    std::ostringstream detail;

    // (a) the Petrie dual of the s-odd non-orientable map is the directly
    // built orientable map, for (3,1) and (3,3)
    for (int s : {1, 3}) {
        const Built nonor = build(Family::NonOrientableOdd, 3, s);
        const Permutation s1 = nonor.recipe.sigma1.to_vertex_perm();
        const Permutation s2 = nonor.recipe.sigma2.to_vertex_perm();
        const Permutation rho = nonor.recipe.rho->to_vertex_perm();
        const PetrieResult dual = petrie_dual(s1, s2, rho, nonor.graph, nonor.recipe.base_vertex);
        const Built oro = build(Family::OrientableOdd, 3, s);
        if (!map_isomorphic(dual.map.flags, oro.map.flags) || dual.rho_in_rotation_group) {
            pass = false;
            detail << "petrie(nonor-odd) != or-odd at (3," << s << "); ";
        }
        // (b) the double dual returns the original map, checked at (3,1)
        if (s == 1) {
            const PetrieResult twice =
                petrie_dual(dual.eta1, dual.eta2, rho, nonor.graph, nonor.recipe.base_vertex);
            if (!map_isomorphic(twice.map.flags, nonor.map.flags)) {
                pass = false;
                detail << "double petrie dual differs from the original at (3,1); ";
            }
        }
    }

    // (c) the s-even non-orientable map is self-Petrie at (3,2)
    const Built even = build(Family::NonOrientableEven, 3, 2);
    const PetrieResult dual = petrie_dual(even.recipe.sigma1.to_vertex_perm(),
                                          even.recipe.sigma2.to_vertex_perm(),
                                          even.recipe.rho->to_vertex_perm(), even.graph,
                                          even.recipe.base_vertex);
    if (!map_isomorphic(dual.map.flags, even.map.flags) || !dual.rho_in_rotation_group) {
        pass = false;
        detail << "nonor-even at (3,2) is not self-petrie; ";
    }

    report(4, "petrie suite: dual of nonor-odd, double dual, self-petrie of nonor-even", pass,
           detail.str());
}

// 5. Structural properties of every built map.
void criterion5() {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& [f, ms] : grid_instances()) {
        const int m = ms.first;
        const Built b = build(f, m, ms.second);
        bool ok = verify_cdc(b.map.cdc, b.graph);
        for (int v = 1; v <= b.graph.vertex_count() && ok; ++v) {
            const VertexFigure fig = vertex_figure(b.map.cdc, b.graph, v);
            ok = fig.is_single_cycle() && static_cast<int>(fig.edges.size()) == 2 * m;
        }
        const FlagSystem& fs = b.map.flags;
        for (int i = 0; i < fs.size() && ok; ++i)
            ok = fs.s0(fs.s0(i)) == i && fs.s1(fs.s1(i)) == i && fs.s2(fs.s2(i)) == i &&
                 fs.s0(i) != i && fs.s1(i) != i && fs.s2(i) != i &&
                 fs.s0(fs.s2(fs.s0(fs.s2(i)))) == i;
        if (f == Family::Chiral)
            for (const auto& face : b.map.cdc.cycles())
                ok = ok && static_cast<int>(face.size()) == b.graph.vertex_count();
        if (!ok) {
            pass = false;
            detail << family_name(f) << "(" << m << "," << ms.second << "); ";
        }
    }
    if (!LexGraph::build(3, 1).is_complete_multipartite()) {
        pass = false;
        detail << "(3,1) skeleton is not K_{3,3,3}; ";
    }
    report(5, "structural properties: double covers, vertex figures, flag involutions, "
              "hamiltonian chiral faces, K_{3,3,3} skeleton", pass, detail.str());
}

// 6. The constrained reflection search finds no witness for the chiral
// recipe at (3,1) and (3,2).
void criterion6() {
    const auto t0 = std::chrono::steady_clock::now();
    const bool none_31 = !search_chiral_reflection(3, 1).has_value();
    const bool none_32 = !search_chiral_reflection(3, 2).has_value();
    const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    const bool pass = none_31 && none_32 && ms < 10'000;
    report(6, "chirality negative search: no reflection witness (alpha)z at (3,1)/(3,2)", pass,
           std::to_string(ms) + " ms");
}

// 7. Out-of-domain parameters exit with code 2 and write no report.
void criterion7() {
#ifndef ROTMAP_CLI_PATH
    report(7, "domain guards via CLI", false, "CLI path not configured");
#else
    bool pass = true;
    std::ostringstream detail;
    const std::string cli = ROTMAP_CLI_PATH;
    const auto report_path =
        std::filesystem::temp_directory_path() / "rotmap_acceptance_guard.jsonl";
    std::filesystem::remove(report_path);

    const std::vector<std::pair<std::string, bool>> bad_args{
        {"verify --m 3 --s 4 --family nonor-odd", true},
        {"verify --m 3 --s 4 --family or-odd", true},
        {"verify --m 3 --s 4 --family nonor-even", true},
        {"verify --m 3 --s 4 --family or-even", true},
        {"verify --m 4 --s 1 --family chiral", true},
        {"petrie --m 3 --s 4 --family nonor-even", false},
    };
    for (const auto& [args, takes_report] : bad_args) {
        std::string cmd = cli + " " + args;
        if (takes_report) cmd += " --report " + report_path.string();
        cmd += " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        if (exit_code != 2) {
            pass = false;
            detail << "'" << args << "' exited " << exit_code << " (want 2); ";
        }
        if (std::filesystem::exists(report_path)) {
            pass = false;
            detail << "'" << args << "' wrote a report; ";
            std::filesystem::remove(report_path);
        }
    }
    report(7, "domain guards: s = 0 mod 4 or even m exit with code 2 and no report", pass,
           detail.str());
#endif
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
