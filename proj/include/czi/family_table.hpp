#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "families.hpp"
#include "generators.hpp"
#include "indices.hpp"
#include "serialize.hpp"

// Closed-form tables for the `family` command. Specs accepted here:
//   complete:n  tree:n  multipartite:n1,..,nr (alias complete-multipartite)
//   equal-multipartite:n,r  thorn(base;m)
// The oracle column comes from enumeration on a concrete member of the
// family (the star for tree:n, since it attains both M1 bounds).

namespace czi {

enum class VariantSelection { as_printed, corrected, both };

inline VariantSelection parse_variant_selection(std::string_view s)
{
    if (s == "as_printed")
        return VariantSelection::as_printed;
    if (s == "corrected")
        return VariantSelection::corrected;
    if (s == "both")
        return VariantSelection::both;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "' (as_printed|corrected|both)");
}

inline const char* to_string(VariantSelection v)
{
    switch (v) {
    case VariantSelection::as_printed: return "as_printed";
    case VariantSelection::corrected: return "corrected";
    case VariantSelection::both: return "both";
    }
    return "?";
}

struct FamilyRow {
    std::string quantity;
    Value as_printed = 0;
    Value corrected = 0;
    std::optional<Value> oracle;
};

struct FamilyTable {
    std::string family;
    std::string oracle_graph; // family spec the oracle was run on
    std::size_t order = 0;
    std::size_t size = 0;
    VariantSelection variant = VariantSelection::both;
    std::vector<FamilyRow> rows;
    std::optional<IndexReport> oracle;
};

namespace detail {

inline std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (c != ' ' && c != '\t')
            out += c;
    return out;
}

} // namespace detail

inline FamilyTable evaluate_family(std::string_view text, VariantSelection variant, std::size_t oracle_max_order = 12,
                                   const ExtremaBudget& budget = {})
{
    const auto spec_text = detail::strip_spaces(text);
    FamilyTable t;
    t.family = spec_text;
    t.variant = variant;

    auto colon = spec_text.find(':');
    const std::string kind = spec_text.starts_with("thorn(") ? "thorn" : spec_text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec_text.substr(colon + 1);

    FamilySpec oracle_spec;
    auto same = [&](const std::string& q, Value v) { t.rows.push_back({q, v, v, {}}); };

    if (kind == "complete") {
        auto n = detail::parse_size_list(args, "complete");
        if (n.size() != 1 || n[0] < 1)
            throw std::invalid_argument("complete:n needs n >= 1");
        auto f = complete_graph_forms(static_cast<Value>(n[0]));
        const std::pair<const char*, Value> values[] = {{"cm1_min", f.cm1}, {"cm1_max", f.cm1}, {"cm2_min", f.cm2},
                                                        {"cm2_max", f.cm2}, {"cm3_min", f.cm3}, {"cm3_max", f.cm3},
                                                        {"m1", f.m1},       {"m2", f.m2},       {"m3", f.m3}};
        for (const auto& [q, v] : values)
            same(q, v);
        oracle_spec = FamilySpec::complete(n[0]);
    }
    else if (kind == "tree") {
        auto n = detail::parse_size_list(args, "tree");
        if (n.size() != 1)
            throw std::invalid_argument("tree:n needs one order");
        auto f = tree_forms(static_cast<Value>(n[0]));
        same("cm1_min", f.cm1_lo);
        same("cm1_max", f.cm1_hi);
        same("cm2_min", f.cm2);
        same("cm2_max", f.cm2);
        same("cm3_min", f.cm3);
        same("cm3_max", f.cm3);
        oracle_spec = FamilySpec::star(n[0]);
    }
    else if (kind == "multipartite" || kind == "complete-multipartite") {
        auto sizes = detail::parse_size_list(args, kind);
        if (!std::is_sorted(sizes.begin(), sizes.end()))
            throw std::invalid_argument("part sizes must be sorted ascending");
        auto p = multipartite_forms(sizes, FormulaVariant::as_printed);
        auto c = multipartite_forms(sizes, FormulaVariant::corrected);
        t.rows = {{"cm1_min", p.cm1_min, c.cm1_min, {}}, {"cm1_max", p.cm1_max, c.cm1_max, {}},
                  {"cm2_min", p.cm2_min, c.cm2_min, {}}, {"cm2_max", p.cm2_max, c.cm2_max, {}},
                  {"cm3_min", p.cm3, c.cm3, {}},         {"cm3_max", p.cm3, c.cm3, {}}};
        oracle_spec = FamilySpec::complete_multipartite(sizes);
    }
    else if (kind == "equal-multipartite") {
        auto nr = detail::parse_size_list(args, "equal-multipartite");
        if (nr.size() != 2 || nr[0] < 1 || nr[1] < 2)
            throw std::invalid_argument("equal-multipartite:n,r needs n >= 1 and r >= 2");
        auto f = equal_multipartite_forms(static_cast<Value>(nr[0]), static_cast<Value>(nr[1]));
        t.rows = {{"cm1_min", f.cm1, f.cm1, {}},         {"cm1_max", f.cm1, f.cm1, {}},
                  {"cm2_min", f.cm2, f.cm2, {}},         {"cm2_max", f.cm2, f.cm2, {}},
                  {"cm3_min", f.cm3_printed, f.cm3_pairsum, {}}, {"cm3_max", f.cm3_printed, f.cm3_pairsum, {}}};
        oracle_spec = FamilySpec::complete_multipartite(std::vector<std::size_t>(nr[1], nr[0]));
    }
    else if (kind == "thorn") {
        auto spec = parse_family_spec(spec_text);
        if (spec.pendants.empty() ||
            std::adjacent_find(spec.pendants.begin(), spec.pendants.end(), std::not_equal_to<>()) != spec.pendants.end())
            throw std::invalid_argument("closed forms cover uniform thorn graphs only");
        auto base_graph = generate(*spec.base);
        auto base = full_report(base_graph, Semantics::all, false, budget);
        if (base.extrema.status != ExtremaStatus::exact)
            throw std::invalid_argument("base graph too large to enumerate its optimal colorings");
        auto in = thorn_inputs(base, static_cast<Value>(spec.pendants.front()));
        auto p = thorn_forms(in, FormulaVariant::as_printed);
        auto c = thorn_forms(in, FormulaVariant::corrected);
        t.rows = {{"cm1_min", p.cm1_min, c.cm1_min, {}}, {"cm1_max", p.cm1_max, c.cm1_max, {}},
                  {"cm2_min", p.cm2_min, c.cm2_min, {}}, {"cm2_max", p.cm2_max, c.cm2_max, {}},
                  {"cm3_min", p.cm3_min, c.cm3_min, {}}, {"cm3_max", p.cm3_max, c.cm3_max, {}}};
        oracle_spec = spec;
    }
    else {
        throw std::invalid_argument("unknown family kind '" + kind +
                                    "' (complete, tree, multipartite, equal-multipartite, thorn)");
    }

    auto g = generate(oracle_spec);
    t.oracle_graph = to_string(oracle_spec);
    t.order = g.order();
    t.size = g.size();
    if (g.order() <= oracle_max_order) {
        auto r = full_report(g, Semantics::all, false, budget);
        if (r.extrema.status == ExtremaStatus::exact) {
            for (auto& row : t.rows) {
                if (row.quantity.starts_with("cm")) {
                    int k = row.quantity[2] - '0';
                    row.oracle = row.quantity.ends_with("_min") ? r.cm_min(k) : r.cm_max(k);
                }
                else {
                    int k = row.quantity[1] - '0';
                    row.oracle = k == 1 ? r.m1 : (k == 2 ? r.m2 : r.m3);
                }
            }
            t.oracle = std::move(r);
        }
    }
    return t;
}

inline Json to_json(const FamilyTable& t)
{
    Json j;
    j["family"] = t.family;
    j["oracle_graph"] = t.oracle_graph;
    j["order"] = t.order;
    j["size"] = t.size;
    j["formula_variant"] = to_string(t.variant);
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["quantity"] = r.quantity;
        if (t.variant != VariantSelection::corrected)
            row["as_printed"] = r.as_printed;
        if (t.variant != VariantSelection::as_printed)
            row["corrected"] = r.corrected;
        row["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    j["values"] = std::move(rows);
    j["oracle"] = t.oracle ? to_json(*t.oracle, false) : Json(nullptr);
    return j;
}

inline std::string to_csv(const FamilyTable& t)
{
    std::ostringstream os;
    os << "family,formula_variant,quantity,value,oracle\n";
    auto line = [&](const FamilyRow& r, const char* variant, Value v) {
        os << csv_escape(t.family) << ',' << variant << ',' << r.quantity << ',' << v << ',';
        if (r.oracle)
            os << *r.oracle;
        os << '\n';
    };
    for (const auto& r : t.rows) {
        if (t.variant != VariantSelection::corrected)
            line(r, "as_printed", r.as_printed);
        if (t.variant != VariantSelection::as_printed)
            line(r, "corrected", r.corrected);
    }
    return os.str();
}

inline std::string to_text(const FamilyTable& t)
{
    std::ostringstream os;
    os << t.family << "  (order " << t.order << ", size " << t.size << ")\n";
    os << "quantity";
    if (t.variant != VariantSelection::corrected)
        os << "  as_printed";
    if (t.variant != VariantSelection::as_printed)
        os << "  corrected";
    os << "  oracle[" << t.oracle_graph << "]\n";
    for (const auto& r : t.rows) {
        os << r.quantity;
        if (t.variant != VariantSelection::corrected)
            os << "  " << r.as_printed;
        if (t.variant != VariantSelection::as_printed)
            os << "  " << r.corrected;
        os << "  " << (r.oracle ? std::to_string(*r.oracle) : std::string("-")) << '\n';
    }
    return os.str();
}

} // namespace czi
