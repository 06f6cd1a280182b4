// Command-line front end: verify a single (m, s, family) instance, run a
// census over parameter grids, or build and classify Petrie duals.
//
// Exit codes: 0 all verified, 1 verification mismatch, 2 invalid
// parameters, 3 enumeration cap exceeded.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotmap/rotmap.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitCapExceeded = 3;

rotmap::Family parse_family(const std::string& name) {
    const auto f = rotmap::family_from_name(name);
    if (!f.has_value())
        throw rotmap::ParameterError("unknown family '" + name +
                                     "' (chiral|nonor-odd|or-odd|nonor-even|or-even)");
    return *f;
}

void print_summary(const rotmap::MapReport& r) {
    std::cout << "family=" << rotmap::family_name(r.family) << " m=" << r.m << " s=" << r.s
              << " n=" << r.n << "\n"
              << "  type {" << r.type_p << "," << r.type_q << "}  V=" << r.vertices
              << " E=" << r.edges << " F=" << r.faces << " flags=" << r.flags << "\n"
              << "  chi=" << r.euler_characteristic << "  "
              << (r.orientable ? "genus=" : "crosscap=") << r.genus_or_crosscap
              << "  |Aut(M)|=" << r.aut_order << " flag_orbits=" << r.flag_orbits << "\n"
              << "  classification=" << rotmap::to_string(r.classification)
              << "  polyhedral=" << (r.polyhedral ? "yes" : "no")
              << "  matches_theorem=" << (r.matches_theorem ? "yes" : "no") << "\n";
    if (!r.reason.empty()) std::cout << "  reason: " << r.reason << "\n";
}

int run_verify(int m, int s, const std::string& family, const std::string& report_path,
               bool identities) {
    const rotmap::Family fam = parse_family(family);
    rotmap::validate_family_params(fam, m, s);
    const std::size_t cap = rotmap::enumeration_cap_from_env();

    const rotmap::MapReport rep = rotmap::verify_instance(fam, m, s, cap);
    print_summary(rep);

    bool identities_ok = true;
    if (identities) {
        const auto checks = rotmap::verify_proof_identities(fam, m, s, cap);
        for (const auto& c : checks) {
            std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "\n";
            identities_ok = identities_ok && c.pass;
        }
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return kExitMismatch;
        }
        out << rotmap::report_line(rep) << '\n';
    }
    return (rep.matches_theorem && identities_ok) ? kExitOk : kExitMismatch;
}

int run_census(const std::vector<int>& ms, const std::vector<int>& ss,
               const std::vector<std::string>& family_names, const std::string& out_path) {
    std::vector<rotmap::Family> fams;
    for (const auto& name : family_names) fams.push_back(parse_family(name));
    const std::size_t cap = rotmap::enumeration_cap_from_env();
    const rotmap::CensusSummary sum = rotmap::census(ms, ss, fams, out_path, cap);
    std::cout << "census: " << sum.written << " written, " << sum.skipped << " skipped, "
              << sum.already_present << " already present, " << sum.mismatches << " mismatches -> "
              << out_path << "\n";
    return sum.mismatches == 0 ? kExitOk : kExitMismatch;
}

int run_petrie(int m, int s, const std::string& family) {
    const rotmap::Family fam = parse_family(family);
    rotmap::validate_family_params(fam, m, s);
    const std::size_t cap = rotmap::enumeration_cap_from_env();

    const rotmap::ConstructionRecipe rec = rotmap::make_recipe(fam, m, s);
    if (!rec.rho.has_value())
        throw rotmap::ParameterError("the chiral family admits no reflection, so no Petrie dual");

    const rotmap::LexGraph g = rotmap::LexGraph::build(m, s);
    const rotmap::Permutation s1 = rec.sigma1.to_vertex_perm();
    const rotmap::Permutation s2 = rec.sigma2.to_vertex_perm();
    const rotmap::Permutation rho = rec.rho->to_vertex_perm();

    rotmap::GeneratedGroup base_group(g.vertex_count(), {s1, s2});
    base_group.enumerate(cap);
    const rotmap::PolytopalMap base_map = rotmap::build_map(g, base_group, s1, rec.base_vertex);

    const rotmap::PetrieResult dual = rotmap::petrie_dual(s1, s2, rho, g, rec.base_vertex, cap);
    const rotmap::GenusOrCrosscap gk = rotmap::genus_or_crosscap(dual.map);
    const std::size_t p = dual.map.cdc.cycles().front().size();

    std::cout << "petrie dual of family=" << rotmap::family_name(fam) << " m=" << m << " s=" << s
              << "\n"
              << "  faces=" << dual.map.cdc.size() << " of length " << p << "  chi="
              << rotmap::euler_characteristic(dual.map) << "  "
              << (gk.orientable ? "genus=" : "crosscap=") << gk.value << "\n"
              << "  classification=" << rotmap::to_string(rotmap::classify(dual.map))
              << "  rho in rotation group=" << (dual.rho_in_rotation_group ? "yes" : "no") << "\n"
              << "  self-petrie=" << (rotmap::map_isomorphic(base_map.flags, dual.map.flags) ? "yes" : "no")
              << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify rotary maps on C_n[mK_1]"};
    app.require_subcommand(1);

    int m = 3, s = 1;
    std::string family = "chiral";
    std::string report_path;
    bool identities = false;

    auto* verify = app.add_subcommand("verify", "verify one (m, s, family) instance");
    verify->add_option("--m", m, "fiber size (odd, >= 3)")->required();
    verify->add_option("--s", s, "cycle multiplier (n = s*m)")->required();
    verify->add_option("--family", family, "chiral|nonor-odd|or-odd|nonor-even|or-even")->required();
    verify->add_option("--report", report_path, "write the JSON report line to this file");
    verify->add_flag("--identities", identities, "also check the per-family element identities");

    std::vector<int> ms, ss;
    std::vector<std::string> families{"chiral", "nonor-odd", "or-odd", "nonor-even", "or-even"};
    std::string census_out;

    auto* census = app.add_subcommand("census", "verify a grid of instances, one JSON record per line");
    census->add_option("--m", ms, "fiber sizes")->required();
    census->add_option("--s", ss, "cycle multipliers")->required();
    census->add_option("--families", families, "families to include");
    census->add_option("--out", census_out, "output path (JSON lines, appended)")->required();

    auto* petrie = app.add_subcommand("petrie", "build and classify the Petrie dual of an instance");
    petrie->add_option("--m", m, "fiber size (odd, >= 3)")->required();
    petrie->add_option("--s", s, "cycle multiplier (n = s*m)")->required();
    petrie->add_option("--family", family, "family providing the base map and reflection")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(m, s, family, report_path, identities);
        if (census->parsed()) return run_census(ms, ss, families, census_out);
        return run_petrie(m, s, family);
    } catch (const rotmap::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const rotmap::CapExceeded& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
