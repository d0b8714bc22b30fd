#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include "checked.hpp"
#include "coloring.hpp"
#include "graph.hpp"

namespace czi {

using Value = std::int64_t;

// ---------------------------------------------------------------------------
// Classical (degree based) Zagreb indices

inline Value classical_m1(const Graph& g)
{
    Value sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto d = static_cast<Value>(g.degree(v));
        sum = checked_add(sum, checked_mul(d, d));
    }
    return sum;
}

inline Value classical_m2(const Graph& g)
{
    Value sum = 0;
    for (const auto& [u, v] : g.edges())
        sum = checked_add(sum, checked_mul(static_cast<Value>(g.degree(u)), static_cast<Value>(g.degree(v))));
    return sum;
}

inline Value classical_m3(const Graph& g)
{
    Value sum = 0;
    for (const auto& [u, v] : g.edges())
        sum = checked_add(sum, std::abs(static_cast<Value>(g.degree(u)) - static_cast<Value>(g.degree(v))));
    return sum;
}

// ---------------------------------------------------------------------------
// Chromatic Zagreb indices of one coloring

class ImproperColoring : public std::invalid_argument {
public:
    ImproperColoring() : std::invalid_argument("coloring is not proper on this graph") {}
};

namespace detail {

inline Value unchecked_cm1(const Coloring& c)
{
    Value sum = 0;
    for (auto col : c.assignment())
        sum = checked_add(sum, checked_mul(col, col));
    return sum;
}

inline Value unchecked_cm2(const Graph& g, const Coloring& c)
{
    Value sum = 0;
    for (const auto& [u, v] : g.edges())
        sum = checked_add(sum, checked_mul(c[u], c[v]));
    return sum;
}

inline Value unchecked_cm3(const Graph& g, const Coloring& c)
{
    Value sum = 0;
    for (const auto& [u, v] : g.edges())
        sum = checked_add(sum, std::abs(static_cast<Value>(c[u]) - static_cast<Value>(c[v])));
    return sum;
}

inline void require_proper(const Graph& g, const Coloring& c)
{
    if (!is_proper(g, c))
        throw ImproperColoring();
}

} // namespace detail

/// Sum over vertices of the squared color index.
inline Value chromatic_m1(const Graph& g, const Coloring& c)
{
    detail::require_proper(g, c);
    return detail::unchecked_cm1(c);
}

/// Sum over edges of the product of endpoint color indices.
inline Value chromatic_m2(const Graph& g, const Coloring& c)
{
    detail::require_proper(g, c);
    return detail::unchecked_cm2(g, c);
}

/// Sum over edges of the absolute difference of endpoint color indices.
inline Value chromatic_m3(const Graph& g, const Coloring& c)
{
    detail::require_proper(g, c);
    return detail::unchecked_cm3(g, c);
}

inline Value chromatic_index(const Graph& g, const Coloring& c, int index)
{
    switch (index) {
    case 1: return chromatic_m1(g, c);
    case 2: return chromatic_m2(g, c);
    case 3: return chromatic_m3(g, c);
    }
    throw std::invalid_argument("chromatic index must be 1, 2 or 3");
}

// ---------------------------------------------------------------------------
// Extrema over minimum colorings

/// Exhaustive enumeration runs only while order <= max_order and at most
/// max_colorings colorings are visited; otherwise the search falls back to
/// the canonical partition's relabelings and reports bounds.
struct ExtremaBudget {
    std::size_t max_order = 16;
    std::uint64_t max_colorings = 10'000'000;
};

enum class ExtremaStatus { exact, bounds_only };

inline const char* to_string(ExtremaStatus s) { return s == ExtremaStatus::exact ? "exact" : "bounds_only"; }

struct Extrema {
    Value min = 0;
    Coloring min_witness;
    Value max = 0;
    Coloring max_witness;
};

/// Extrema of all three chromatic indices from one enumeration pass.
struct ExtremaSet {
    std::array<Extrema, 3> by_index; // [0] -> M1, [1] -> M2, [2] -> M3
    std::size_t chi = 0;
    Semantics semantics_used = Semantics::all;
    ExtremaStatus status = ExtremaStatus::exact;
    std::uint64_t colorings_examined = 0;

    const Extrema& operator[](int index) const { return by_index.at(static_cast<std::size_t>(index - 1)); }
};

namespace detail {

/// Returns true if the stream finished within the coloring cap.
inline bool scan_extrema(const Graph& g, Semantics sem, std::size_t chi, std::uint64_t cap, ExtremaSet& out)
{
    bool first = out.colorings_examined == 0;
    std::uint64_t seen = 0;
    bool finished = for_each_min_coloring(
        g, sem,
        [&](const Coloring& c) {
            if (seen == cap)
                return false;
            ++seen;
            const Value vals[3] = {unchecked_cm1(c), unchecked_cm2(g, c), unchecked_cm3(g, c)};
            for (std::size_t k = 0; k < 3; ++k) {
                auto& e = out.by_index[k];
                // strict comparisons keep the lexicographically least witness
                if (first || vals[k] < e.min) {
                    e.min = vals[k];
                    e.min_witness = c;
                }
                if (first || vals[k] > e.max) {
                    e.max = vals[k];
                    e.max_witness = c;
                }
            }
            first = false;
            return true;
        },
        chi);
    out.colorings_examined += seen;
    return finished;
}

} // namespace detail

inline ExtremaSet all_chromatic_extrema(const Graph& g, Semantics semantics, const ExtremaBudget& budget = {},
                                        std::optional<std::size_t> chi_hint = std::nullopt)
{
    if (g.order() == 0)
        throw std::invalid_argument("chromatic extrema of an empty graph");
    ExtremaSet out;
    out.chi = chi_hint ? *chi_hint : chromatic_number(g);

    if (semantics == Semantics::all && g.order() <= budget.max_order) {
        ExtremaSet trial = out;
        if (detail::scan_extrema(g, Semantics::all, out.chi, budget.max_colorings, trial)) {
            trial.semantics_used = Semantics::all;
            trial.status = ExtremaStatus::exact;
            return trial;
        }
    }
    out.semantics_used = Semantics::permutation;
    bool done = detail::scan_extrema(g, Semantics::permutation, out.chi, budget.max_colorings, out);
    out.status = (done && semantics == Semantics::permutation) ? ExtremaStatus::exact : ExtremaStatus::bounds_only;
    return out;
}

inline Extrema chromatic_extrema(const Graph& g, int index, Semantics semantics, const ExtremaBudget& budget = {})
{
    if (index < 1 || index > 3)
        throw std::invalid_argument("chromatic index must be 1, 2 or 3");
    return all_chromatic_extrema(g, semantics, budget)[index];
}

// ---------------------------------------------------------------------------
// Full report

struct IndexReport {
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t chi = 0;
    bool connected = false;
    Value m1 = 0, m2 = 0, m3 = 0;
    ExtremaSet extrema;
    Semantics semantics_requested = Semantics::all;
    bool paper_compat = false;
    bool paper_compat_defaults_applied = false;

    Value cm_min(int k) const { return extrema[k].min; }
    Value cm_max(int k) const { return extrema[k].max; }
};

/// With `paper_compat`, the single-vertex graph reports M2 = 0 and M3 = 1
/// for the chromatic extrema (the conventional defaults for K1) instead of
/// the empty edge sums.
inline IndexReport full_report(const Graph& g, Semantics semantics, bool paper_compat,
                               const ExtremaBudget& budget = {})
{
    IndexReport r;
    r.order = g.order();
    r.size = g.size();
    r.connected = g.is_connected();
    r.m1 = classical_m1(g);
    r.m2 = classical_m2(g);
    r.m3 = classical_m3(g);
    r.extrema = all_chromatic_extrema(g, semantics, budget);
    r.chi = r.extrema.chi;
    r.semantics_requested = semantics;
    r.paper_compat = paper_compat;

    for (int k = 1; k <= 3; ++k) {
        const auto& e = r.extrema[k];
        if (chromatic_index(g, e.min_witness, k) != e.min || chromatic_index(g, e.max_witness, k) != e.max)
            throw std::logic_error("extrema witness does not evaluate to its reported value");
    }

    if (paper_compat && g.order() == 1) {
        auto& e2 = r.extrema.by_index[1];
        auto& e3 = r.extrema.by_index[2];
        e2.min = e2.max = 0;
        e3.min = e3.max = 1;
        r.paper_compat_defaults_applied = true;
    }
    return r;
}

} // namespace czi
