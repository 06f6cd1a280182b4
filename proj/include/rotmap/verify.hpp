#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rotmap/constructions.hpp"
#include "rotmap/errors.hpp"
#include "rotmap/group.hpp"
#include "rotmap/lexgraph.hpp"
#include "rotmap/mapcore.hpp"
#include "rotmap/report.hpp"

namespace rotmap {

// Optional environment override for the group-enumeration cap.
inline constexpr const char* kCapEnvVar = "ROTMAP_GROUP_CAP";

inline std::size_t enumeration_cap_from_env() {
    const char* raw = std::getenv(kCapEnvVar);
    if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        throw ParameterError(std::string(kCapEnvVar) + " must be a positive integer");
    return static_cast<std::size_t>(v);
}

// The values each family is asserted to realise: classification, type
// {p, q}, surface, genus/crosscap, |Aut(M)| and the flag orbit count.
struct TheoremExpectation {
    MapClass classification;
    int type_p, type_q;
    bool orientable;
    long long genus_or_crosscap;
    long long aut_order;
    long long flag_orbits;
};

inline TheoremExpectation theorem_values(Family f, int m, int s) {
    validate_family_params(f, m, s);
    const long long n = static_cast<long long>(s) * m;
    const long long half = n * (m - 1) / 2;  // n(m-1) is even: m odd makes m-1 even
    switch (f) {
        case Family::Chiral:
            return {MapClass::Chiral, static_cast<int>(m * n), 2 * m, true,
                    1 + m * (half - 1), 2 * m * m * n, 2};
        case Family::OrientableOdd:
        case Family::OrientableEven:
            return {MapClass::ReflexibleOrientable, static_cast<int>(n), 2 * m, true,
                    1 + m * (half - m), 4 * m * m * n, 1};
        default:
            return {MapClass::ReflexibleNonOrientable, static_cast<int>(2 * n), 2 * m, false,
                    2 + m * (n * (m - 1) - m), 4 * m * m * n, 1};
    }
}

namespace detail {

inline void note(std::string& reason, const std::string& msg) {
    if (!reason.empty()) reason += "; ";
    reason += msg;
}

}  // namespace detail

// Full pipeline for one instance: recipe -> vertex permutations -> group
// enumeration -> facial orbit -> flag system -> orientability, genus,
// automorphisms, classification. Every disagreement between the flag
// oracle, the group-theoretic criteria and the asserted family values is
// recorded in `reason`; nothing is dropped silently.
inline MapReport verify_instance(Family family, int m, int s,
                                 std::size_t cap = kDefaultEnumerationCap) {
    validate_family_params(family, m, s);
    const auto t0 = std::chrono::steady_clock::now();

    MapReport rep;
    rep.family = family;
    rep.m = m;
    rep.s = s;
    rep.n = s * m;
    rep.type_q = 2 * m;

    const ConstructionRecipe recipe = make_recipe(family, m, s);
    const LexGraph g = LexGraph::build(m, s);
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();

    const Permutation s1 = recipe.sigma1.to_vertex_perm();
    const Permutation s2 = recipe.sigma2.to_vertex_perm();
    std::string& reason = rep.reason;
    if (!g.is_automorphism(s1)) detail::note(reason, "sigma1 is not a graph automorphism");
    if (!g.is_automorphism(s2)) detail::note(reason, "sigma2 is not a graph automorphism");

    GeneratedGroup group(g.vertex_count(), {s1, s2});
    group.enumerate(cap);
    if (static_cast<long long>(group.order()) != recipe.expected_group_order)
        detail::note(reason, "|G| = " + std::to_string(group.order()) + ", expected " +
                                 std::to_string(recipe.expected_group_order));

    try {
        const PolytopalMap map = build_map(g, group, s1, recipe.base_vertex);
        rep.faces = static_cast<long long>(map.cdc.size());
        rep.flags = map.flags.size();
        rep.cdc_valid = verify_cdc(map.cdc, g);

        rep.vertex_figures_connected = true;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const VertexFigure fig = vertex_figure(map.cdc, g, v);
            if (!fig.is_single_cycle() || static_cast<int>(fig.edges.size()) != 2 * m) {
                rep.vertex_figures_connected = false;
                detail::note(reason, "vertex figure at " + std::to_string(v) + " is not a 2m-cycle");
                break;
            }
        }

        std::size_t plen = map.cdc.cycles().front().size();
        for (const auto& f : map.cdc.cycles())
            if (f.size() != plen) {
                detail::note(reason, "faces have mixed co-valences");
                plen = 0;
                break;
            }
        rep.type_p = static_cast<int>(plen);
        if (rep.type_p * rep.faces != 2 * rep.edges)
            detail::note(reason, "type_p * faces != 2 * edges");
        if (rep.flags != 4 * rep.edges) detail::note(reason, "flag count is not 4|E|");

        rep.euler_characteristic = euler_characteristic(map);
        const GenusOrCrosscap gk = genus_or_crosscap(map);
        rep.orientable = gk.orientable;
        rep.genus_or_crosscap = gk.value;

        const MapAutomorphisms aut = map_automorphisms(map.flags);
        rep.aut_order = aut.order;
        rep.flag_orbits = aut.flag_orbits;
        if (rep.flags % rep.aut_order != 0) detail::note(reason, "|Aut| does not divide flag count");
        rep.classification = classify(map);

        rep.polyhedral = is_polyhedral(map);

        // Independent group-theoretic route: arc stabiliser order plus the
        // presence/membership of the recipe's reflection predicts the class.
        const std::size_t stab = group.stabilizer_of_arc(recipe.base_vertex, recipe.base_w).size();
        std::optional<MapClass> predicted;
        if (recipe.rho.has_value()) {
            const Permutation rho = recipe.rho->to_vertex_perm();
            const bool inverts = is_inverted_by(s1, rho) && is_inverted_by(s2, rho);
            const bool fixes = rho(recipe.base_vertex) == recipe.base_vertex;
            if (rho.order() != 2 || !inverts || !fixes) {
                detail::note(reason, "recipe rho is not an inverting involution fixing v");
            } else if (group.contains(rho) && stab == 2) {
                predicted = MapClass::ReflexibleNonOrientable;
            } else if (!group.contains(rho) && stab == 1) {
                predicted = MapClass::ReflexibleOrientable;
            }
        } else if (stab == 1) {
            predicted = MapClass::Chiral;
        }
        if (!predicted.has_value()) {
            detail::note(reason, "arc stabiliser size " + std::to_string(stab) +
                                     " matches no classification criterion");
        } else if (*predicted != rep.classification) {
            detail::note(reason, std::string("flag classification ") + to_string(rep.classification) +
                                     " disagrees with group-theoretic prediction " +
                                     to_string(*predicted));
        }
    } catch (const CapExceeded&) {
        throw;
    } catch (const std::exception& e) {
        detail::note(reason, std::string("pipeline failure: ") + e.what());
    }

    const TheoremExpectation want = theorem_values(family, m, s);
    if (rep.classification != want.classification)
        detail::note(reason, std::string("classification ") + to_string(rep.classification) +
                                 ", asserted " + to_string(want.classification));
    if (rep.type_p != want.type_p || rep.type_q != want.type_q)
        detail::note(reason, "type {" + std::to_string(rep.type_p) + "," + std::to_string(rep.type_q) +
                                 "}, asserted {" + std::to_string(want.type_p) + "," +
                                 std::to_string(want.type_q) + "}");
    if (rep.orientable != want.orientable) detail::note(reason, "orientability mismatch");
    if (rep.genus_or_crosscap != want.genus_or_crosscap)
        detail::note(reason, "genus/crosscap " + std::to_string(rep.genus_or_crosscap) +
                                 ", asserted " + std::to_string(want.genus_or_crosscap));
    const long long chi_expected = want.orientable ? 2 - 2 * want.genus_or_crosscap
                                                   : 2 - want.genus_or_crosscap;
    if (rep.euler_characteristic != chi_expected)
        detail::note(reason, "Euler characteristic disagrees with asserted genus");
    if (rep.aut_order != want.aut_order || rep.flag_orbits != want.flag_orbits)
        detail::note(reason, "|Aut(M)| = " + std::to_string(rep.aut_order) + " with " +
                                 std::to_string(rep.flag_orbits) + " flag orbits, asserted " +
                                 std::to_string(want.aut_order) + " with " +
                                 std::to_string(want.flag_orbits));

    rep.matches_theorem = reason.empty();
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

struct IdentityCheck {
    std::string name;
    bool pass;
};

namespace detail {

inline void check(std::vector<IdentityCheck>& out, const std::string& name, bool pass) {
    out.push_back(IdentityCheck{name, pass});
}

inline bool wreath_inverts(const WreathElement& x, const WreathElement& rho) {
    return wr_mul(wr_mul(rho.inverse(), x), rho) == x.inverse();
}

}  // namespace detail

// Exact verification of the closed-form element identities and order
// claims behind each family: generator orders, (s1 s2)^2 = 1, the squares
// and conjugates phi/psi (zeta/xi), the assembled reflections, and the
// arc-stabiliser sizes. Failures are data, not errors.
inline std::vector<IdentityCheck> verify_proof_identities(Family family, int m, int s,
                                                          std::size_t cap = kDefaultEnumerationCap) {
    validate_family_params(family, m, s);
    const int n = s * m;
    const auto gen = standard_generators(m, n);
    const Permutation one = Permutation::identity(m);
    const auto cpow = [&](long long e) { return gen.c.pow(e); };
    const auto tcpow = [&](long long e) { return compose(gen.t, gen.c.pow(e)); };
    const DihedralPart dih1 = DihedralPart::identity(n);
    const DihedralPart rz = compose(DihedralPart::rotation(n), DihedralPart::reflection(n));
    const DihedralPart zr = compose(DihedralPart::reflection(n), DihedralPart::rotation(n));
    const auto W = [&](const DihedralPart& d, auto comp) {
        return detail::wreath_from(m, n, d, comp);
    };

    const ConstructionRecipe rec = make_recipe(family, m, s);
    const WreathElement& s1 = rec.sigma1;
    const WreathElement& s2 = rec.sigma2;
    const Permutation s1p = s1.to_vertex_perm();
    const Permutation s2p = s2.to_vertex_perm();
    const LexGraph g = LexGraph::build(m, s);
    GeneratedGroup group(g.vertex_count(), {s1p, s2p});
    group.enumerate(cap);

    std::vector<IdentityCheck> out;
    const auto push = [&](const std::string& name, bool pass) { detail::check(out, name, pass); };

    push("|sigma1*sigma2| == 2", wr_mul(s1, s2).order() == 2);
    const std::size_t expected_stab = rec.rho.has_value() && family != Family::OrientableOdd &&
                                              family != Family::OrientableEven
                                          ? 2
                                          : 1;
    push("arc stabilizer size == " + std::to_string(expected_stab),
         group.stabilizer_of_arc(rec.base_vertex, rec.base_w).size() == expected_stab);

    if (rec.rho.has_value()) {
        const WreathElement& rho = *rec.rho;
        push("rho is an involution", wr_mul(rho, rho).is_identity() && !rho.is_identity());
        push("rho fixes v", rho.to_vertex_perm()(rec.base_vertex) == rec.base_vertex);
        push("rho inverts sigma1", detail::wreath_inverts(s1, rho));
        push("rho inverts sigma2", detail::wreath_inverts(s2, rho));
        const bool in_g = group.contains(rho.to_vertex_perm());
        const bool nonor = family == Family::NonOrientableOdd || family == Family::NonOrientableEven;
        push(nonor ? "rho in G" : "rho not in G", in_g == nonor);
    }

    switch (family) {
        case Family::Chiral: {
            push("|sigma1| == mn", s1.order() == static_cast<long long>(m) * n);
            push("|sigma2| == 2m", s2.order() == 2LL * m);
            push("|G| == 2m^2n", group.order() == 2ULL * m * m * n);
            push("sigma1^n == (c,...,c)", s1.pow(n) == W(dih1, [&](int) { return gen.c; }));
            push("sigma2^2 == (1,c,c^2,...,c^(n-1))",
                 wr_mul(s2, s2) == W(dih1, [&](int i) { return cpow(i - 1); }));
            bool ell_sym = true;
            for (int i = 3; i <= n; ++i)
                ell_sym = ell_sym && ell(n - i + 3, m) == ell(i, m);
            push("ell(n-i+3) == ell(i) mod m", ell_sym);
            push("sigma1*sigma2 == (t,tc^l3,...,tc^ln,t)rz",
                 wr_mul(s1, s2) == W(rz, [&](int i) {
                     if (i == 1 || i == n) return gen.t;
                     return tcpow(ell(i + 1, m));
                 }));
            push("sigma2^-2 * sigma1 * sigma2^2 == sigma1^(n+1)",
                 wr_mul(wr_mul(s2.pow(-2), s1), s2.pow(2)) == s1.pow(n + 1));
            break;
        }
        case Family::NonOrientableOdd: {
            push("|sigma1| == 2n", s1.order() == 2LL * n);
            push("|sigma2| == 2m", s2.order() == 2LL * m);
            push("|G| == 4m^2n", group.order() == 4ULL * m * m * n);
            const Permutation tcinv = tcpow(-1);
            push("sigma1^n == (tc^-1,...,tc^-1)",
                 s1.pow(n) == W(dih1, [&](int) { return tcinv; }));
            const WreathElement phi = wr_mul(s2, s2);
            const WreathElement psi = wr_mul(wr_mul(s1.inverse(), phi), s1);
            push("phi == (1,c^-4,c^8,...)", phi == W(dih1, [&](int i) {
                     if (i == 1) return one;
                     const long long e = 4LL * (i - 1) * (i % 2 == 0 ? -1 : 1);
                     return cpow(e);
                 }));
            push("psi == (c^4,1,c^-4,...)", psi == W(dih1, [&](int i) {
                     const long long e = 4LL * (i - 2) * (i % 2 == 0 ? 1 : -1);
                     return cpow(e);
                 }));
            push("sigma1^-1 * psi * sigma1 == phi^-1 * psi^-2",
                 wr_mul(wr_mul(s1.inverse(), psi), s1) == wr_mul(phi.inverse(), psi.pow(-2)));
            push("sigma1*sigma2 == (c^-1,c^3,...,c)rz",
                 wr_mul(s1, s2) == W(rz, [&](int i) {
                     if (i == n) return gen.c;
                     return cpow((2LL * i - 1) * (i % 2 == 0 ? 1 : -1));
                 }));
            const WreathElement prod =
                wr_mul(phi.pow(static_cast<long long>(m - 1) * (m + 1) / 4),
                       psi.pow(static_cast<long long>(m + 1) * (m + 1) / 4));
            push("phi^((m-1)(m+1)/4) * psi^((m+1)^2/4) == (c,c,c^-3,c^5,...)",
                 prod == W(dih1, [&](int i) {
                     return cpow((3LL - 2 * i) * (i % 2 == 0 ? -1 : 1));
                 }));
            push("rho == sigma1^n * phi^a * psi^b * sigma2",
                 *rec.rho == wr_mul(wr_mul(s1.pow(n), prod), s2));
            push("rho == (1,tc^-1,...,tc^-1)z",
                 *rec.rho == W(gen.z, [&](int i) { return i == 1 ? one : tcinv; }));
            push("rho*sigma1 == (1,1,tc^-1,...,tc^-1)zr and is an involution",
                 wr_mul(*rec.rho, s1) == W(zr, [&](int i) { return i <= 2 ? one : tcinv; }) &&
                     wr_mul(*rec.rho, s1).order() == 2);
            break;
        }
        case Family::OrientableOdd: {
            push("|eta1| == n", s1.order() == n);
            push("|eta2| == 2m", s2.order() == 2LL * m);
            push("|H| == 2m^2n", group.order() == 2ULL * m * m * n);
            push("eta1 == (t,tc^-4,tc^4,...,tc^2,c)r", s1 == W(gen.r, [&](int i) {
                     if (i == n) return gen.c;
                     const long long e = (2LL * i - 1) * (i % 2 == 0 ? -1 : 1) - 1;
                     return tcpow(e);
                 }));
            Permutation fold = Permutation::identity(m);
            for (int i = 1; i <= n; ++i) fold = compose(fold, s1.alpha(i));
            push("eta1 component product == identity", fold.is_identity());
            const ConstructionRecipe base = nonorientable_odd_recipe(m, s);
            const WreathElement zeta = wr_mul(s2, s2);
            const WreathElement xi = wr_mul(wr_mul(s1.inverse(), zeta), s1);
            push("xi == sigma1^-1 * sigma2^-2 * sigma1",
                 xi == wr_mul(wr_mul(base.sigma1.inverse(), base.sigma2.pow(-2)), base.sigma1));
            break;
        }
        case Family::NonOrientableEven: {
            push("|sigma1| == 2n", s1.order() == 2LL * n);
            push("|sigma2| == 2m", s2.order() == 2LL * m);
            push("|G| == 4m^2n", group.order() == 4ULL * m * m * n);
            const Permutation tcinv = tcpow(-1);
            push("sigma1^n == (tc^-1,...,tc^-1)",
                 s1.pow(n) == W(dih1, [&](int) { return tcinv; }));
            const WreathElement phi = wr_mul(s2, s2);
            const WreathElement psi = wr_mul(wr_mul(s1.inverse(), phi), s1);
            push("phi == (1,c^-2,1,c^2,...)", phi == W(dih1, [&](int i) {
                     if (i % 2 == 1) return one;
                     return cpow(i % 4 == 2 ? -2 : 2);
                 }));
            push("psi == (c^2,1,c^-2,1,...)", psi == W(dih1, [&](int i) {
                     if (i % 2 == 0) return one;
                     return cpow(i % 4 == 1 ? 2 : -2);
                 }));
            push("sigma1^-1 * psi * sigma1 == phi^-1",
                 wr_mul(wr_mul(s1.inverse(), psi), s1) == phi.inverse());
            push("sigma1*sigma2 == (c^-1,c,c,...)rz with c^-1 at i == 0,1 mod 4",
                 wr_mul(s1, s2) == W(rz, [&](int i) {
                     return (i % 4 == 0 || i % 4 == 1) ? cpow(-1) : gen.c;
                 }));
            const WreathElement prefix =
                wr_mul(s1.pow(n), wr_mul(phi.pow((m - 1) / 2), psi.pow((m + 1) / 2)));
            push("sigma1^n * phi^((m-1)/2) * psi^((m+1)/2) == (t,t,tc^-2,tc^-2,...)",
                 prefix == W(dih1, [&](int i) {
                     return (i % 4 == 1 || i % 4 == 2) ? gen.t : tcpow(-2);
                 }));
            push("rho == sigma1^n * phi^((m-1)/2) * psi^((m+1)/2) * sigma2",
                 *rec.rho == wr_mul(prefix, s2));
            push("rho == (1,tc^-1,...,tc^-1)z",
                 *rec.rho == W(gen.z, [&](int i) { return i == 1 ? one : tcinv; }));
            break;
        }
        case Family::OrientableEven: {
            push("|eta1| == n", s1.order() == n);
            push("|eta2| == 2m", s2.order() == 2LL * m);
            push("|H| == 2m^2n", group.order() == 2ULL * m * m * n);
            push("eta1 == (t,t,...,t)r", s1 == W(gen.r, [&](int) { return gen.t; }));
            push("last two eta2 components == tc^-1",
                 s2.alpha(n - 1) == tcpow(-1) && s2.alpha(n) == tcpow(-1));
            const WreathElement zeta = wr_mul(s2, s2);
            const WreathElement xi = wr_mul(wr_mul(s1.inverse(), zeta), s1);
            push("zeta == (1,c^-1,c^-2,...,c)",
                 zeta == W(dih1, [&](int i) { return cpow(1LL - i); }));
            push("xi == (c^-1,1,c,...,c^-2)",
                 xi == W(dih1, [&](int i) { return cpow(i - 2LL); }));
            push("eta1^-1 * xi * eta1 == zeta^-1 * xi^-2",
                 wr_mul(wr_mul(s1.inverse(), xi), s1) == wr_mul(zeta.inverse(), xi.pow(-2)));
            push("eta1*eta2 == (1,c,c,c^2,c^2,...,c^-1,c^-1,1)rz",
                 wr_mul(s1, s2) == W(rz, [&](int i) {
                     if (i == n) return one;
                     return cpow(i / 2);
                 }));
            push("rho == z", *rec.rho == W(gen.z, [&](int) { return one; }));
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Census: one JSON record per line, keyed on (m, s, family, schema);
// re-runs append only the missing records, and out-of-domain combinations
// are written as explicit skip records.

struct CensusSummary {
    int written = 0;
    int skipped = 0;
    int already_present = 0;
    int mismatches = 0;
};

namespace detail {

inline std::string census_key(int m, int s, const std::string& family, int schema) {
    return std::to_string(m) + "|" + std::to_string(s) + "|" + family + "|" + std::to_string(schema);
}

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

inline CensusSummary census(std::vector<int> ms, std::vector<int> ss, std::vector<Family> families,
                            const std::string& out_path,
                            std::size_t cap = kDefaultEnumerationCap) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    if (families.empty()) families = all_families();

    std::set<std::string> present;
    {
        std::ifstream in(out_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("m") || !j.contains("s") || !j.contains("family") ||
                !j.contains("schema"))
                throw std::runtime_error(out_path + ":" + std::to_string(lineno) +
                                         ": unreadable census record");
            present.insert(detail::census_key(j["m"].get<int>(), j["s"].get<int>(),
                                              j["family"].get<std::string>(),
                                              j["schema"].get<int>()));
        }
    }

    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open census output " + out_path);

    CensusSummary summary;
    for (int m : ms)
        for (int s : ss)
            for (Family f : families) {
                const std::string key = detail::census_key(m, s, family_name(f), kReportSchemaVersion);
                if (present.count(key)) {
                    ++summary.already_present;
                    continue;
                }
                std::string skip_reason;
                if (!family_in_domain(f, m, s)) {
                    try {
                        validate_family_params(f, m, s);
                    } catch (const ParameterError& e) {
                        skip_reason = e.what();
                    }
                    nlohmann::ordered_json j;
                    j["schema"] = kReportSchemaVersion;
                    j["timestamp"] = detail::utc_timestamp();
                    j["m"] = m;
                    j["s"] = s;
                    j["family"] = family_name(f);
                    j["skipped"] = true;
                    j["reason"] = skip_reason;
                    out << j.dump() << '\n';
                    out.flush();
                    ++summary.skipped;
                } else {
                    const MapReport rep = verify_instance(f, m, s, cap);
                    const nlohmann::ordered_json fields = report_to_json(rep);
                    nlohmann::ordered_json j;
                    j["schema"] = kReportSchemaVersion;
                    j["timestamp"] = detail::utc_timestamp();
                    for (const auto& [k, v] : fields.items())
                        if (k != "schema") j[k] = v;
                    out << j.dump() << '\n';
                    out.flush();
                    ++summary.written;
                    if (!rep.matches_theorem) ++summary.mismatches;
                }
                present.insert(key);
            }
    return summary;
}

}  // namespace rotmap
