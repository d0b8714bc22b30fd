#pragma once

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "indices.hpp"
#include "stability.hpp"

namespace czi {

using Json = nlohmann::ordered_json;

inline Json coloring_json(const Coloring& c) { return Json(c.assignment()); }

inline Json edges_json(const std::vector<Edge>& edges)
{
    Json arr = Json::array();
    for (const auto& [u, v] : edges)
        arr.push_back({u, v});
    return arr;
}

inline Json to_json(const IndexReport& r, bool with_witnesses)
{
    Json j;
    j["order"] = r.order;
    j["size"] = r.size;
    j["chi"] = r.chi;
    j["connected"] = r.connected;
    j["m1"] = r.m1;
    j["m2"] = r.m2;
    j["m3"] = r.m3;
    for (int k = 1; k <= 3; ++k) {
        j["cm" + std::to_string(k) + "_min"] = r.cm_min(k);
        j["cm" + std::to_string(k) + "_max"] = r.cm_max(k);
    }
    j["semantics_requested"] = to_string(r.semantics_requested);
    j["semantics_used"] = to_string(r.extrema.semantics_used);
    j["status"] = to_string(r.extrema.status);
    j["colorings_examined"] = r.extrema.colorings_examined;
    j["paper_compat_defaults_applied"] = r.paper_compat_defaults_applied;
    if (with_witnesses) {
        Json w;
        for (int k = 1; k <= 3; ++k) {
            w["cm" + std::to_string(k) + "_min"] = coloring_json(r.extrema[k].min_witness);
            w["cm" + std::to_string(k) + "_max"] = coloring_json(r.extrema[k].max_witness);
        }
        j["witnesses"] = std::move(w);
    }
    return j;
}

inline std::string index_report_csv_header()
{
    return "instance,order,size,chi,connected,m1,m2,m3,cm1_min,cm1_max,cm2_min,cm2_max,cm3_min,cm3_max,"
           "semantics_used,status,paper_compat_defaults_applied";
}

inline std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string index_report_csv_row(const std::string& instance, const IndexReport& r)
{
    std::ostringstream os;
    os << csv_escape(instance) << ',' << r.order << ',' << r.size << ',' << r.chi << ','
       << (r.connected ? "true" : "false") << ',' << r.m1 << ',' << r.m2 << ',' << r.m3;
    for (int k = 1; k <= 3; ++k)
        os << ',' << r.cm_min(k) << ',' << r.cm_max(k);
    os << ',' << to_string(r.extrema.semantics_used) << ',' << to_string(r.extrema.status) << ','
       << (r.paper_compat_defaults_applied ? "true" : "false");
    return os.str();
}

inline Json to_json(const StabilityReport& r)
{
    Json j;
    j["order"] = r.order;
    j["size"] = r.size;
    j["chi"] = r.chi;
    j["connected"] = r.connected;
    j["stable"] = r.stable;
    j["perfectly_stable"] = r.perfectly_stable;
    j["stabilizing_edge"] = r.stabilizing_edge ? Json{r.stabilizing_edge->first, r.stabilizing_edge->second}
                                               : Json(nullptr);
    j["rho"] = r.rho ? Json(*r.rho) : Json(nullptr);
    j["rho_bruteforce"] = r.rho_bruteforce ? Json(*r.rho_bruteforce) : Json(nullptr);
    j["method"] = to_string(r.perfectly_stable ? RhoMethod::not_applicable : r.method);
    j["rho_reading"] = to_string(r.reading);
    j["rho_budget_exhausted"] = r.rho_budget_exhausted;
    return j;
}

inline std::string verdict_line(const StabilityReport& r)
{
    std::ostringstream os;
    os << "chi=" << r.chi << ' ';
    if (r.perfectly_stable)
        os << "perfectly stable (complete graph, no edge can be added)";
    else if (!r.stable)
        os << "chromatically unstable";
    else {
        os << "chromatically stable";
        if (r.rho)
            os << ", rho=" << *r.rho << " (" << to_string(r.method) << ")";
        else
            os << ", rho unknown (budget exhausted)";
    }
    if (!r.connected)
        os << " [disconnected input]";
    return os.str();
}

} // namespace czi
