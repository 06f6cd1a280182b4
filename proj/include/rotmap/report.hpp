#pragma once

#include <string>

#include <json.hpp>

#include "rotmap/constructions.hpp"
#include "rotmap/mapcore.hpp"

namespace rotmap {

inline constexpr int kReportSchemaVersion = 1;

// One verified (m, s, family) instance. Deterministic for fixed inputs
// apart from runtime_ms.
struct MapReport {
    int m = 0, s = 0, n = 0;
    Family family = Family::Chiral;
    int type_p = 0, type_q = 0;
    long long vertices = 0, edges = 0, faces = 0, flags = 0;
    long long euler_characteristic = 0;
    bool orientable = false;
    long long genus_or_crosscap = 0;
    long long aut_order = 0, flag_orbits = 0;
    MapClass classification = MapClass::NotRotary;
    bool polyhedral = false;
    bool cdc_valid = false;
    bool vertex_figures_connected = false;
    bool matches_theorem = false;
    std::string reason;  // first mismatch/oracle disagreement; empty when clean
    long long runtime_ms = 0;
};

// Field order is part of the report schema (documented in the README);
// ordered_json preserves insertion order.
inline nlohmann::ordered_json report_to_json(const MapReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchemaVersion;
    j["m"] = r.m;
    j["s"] = r.s;
    j["family"] = family_name(r.family);
    j["n"] = r.n;
    j["type_p"] = r.type_p;
    j["type_q"] = r.type_q;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["faces"] = r.faces;
    j["flags"] = r.flags;
    j["euler_characteristic"] = r.euler_characteristic;
    j["orientable"] = r.orientable;
    j["genus_or_crosscap"] = r.genus_or_crosscap;
    j["aut_order"] = r.aut_order;
    j["flag_orbits"] = r.flag_orbits;
    j["classification"] = to_string(r.classification);
    j["polyhedral"] = r.polyhedral;
    j["cdc_valid"] = r.cdc_valid;
    j["vertex_figures_connected"] = r.vertex_figures_connected;
    j["matches_theorem"] = r.matches_theorem;
    j["reason"] = r.reason;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

inline std::string report_line(const MapReport& r) { return report_to_json(r).dump(); }

}  // namespace rotmap
