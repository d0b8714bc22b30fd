#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"

// Chromatic stability. A graph is stable when SOME non-edge can be added
// without raising its chromatic number; complete graphs have no non-edge and
// are reported as perfectly stable instead.

namespace czi {

/// Sizes of the two sides of a bipartite graph's 2-coloring found by BFS
/// from each component's least vertex (side 0 holds vertex 0). Empty when
/// the graph has an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const Graph& g)
{
    std::vector<int> side(g.order(), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        queue.assign({s});
        for (std::size_t h = 0; h < queue.size(); ++h) {
            auto v = queue[h];
            for (auto w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                }
                else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

inline bool is_complete_bipartite(const Graph& g)
{
    if (g.order() < 2 || !g.is_connected())
        return false;
    auto side = two_coloring(g);
    if (!side)
        return false;
    std::size_t a = 0;
    for (int s : *side)
        a += (s == 0);
    std::size_t b = g.order() - a;
    return g.size() == a * b;
}

/// First non-edge (lexicographic) whose addition keeps the chromatic number.
inline std::optional<Edge> stabilizing_edge(const Graph& g, std::optional<std::size_t> chi = std::nullopt)
{
    auto k = chi ? *chi : chromatic_number(g);
    for (const auto& e : g.non_edges()) {
        const Edge extra[] = {e};
        if (is_k_colorable(g.with_edges(extra), k))
            return e;
    }
    return std::nullopt;
}

/// True iff some added edge keeps the chromatic number. Complete graphs
/// return false; callers distinguish them through `is_complete()`.
inline bool is_chromatically_stable(const Graph& g)
{
    if (g.order() < 2)
        throw std::invalid_argument("stability needs order >= 2");
    return stabilizing_edge(g).has_value();
}

/// Unstable: at least one non-edge exists and every one raises chi.
inline bool is_chromatically_unstable(const Graph& g)
{
    return !g.is_complete() && !stabilizing_edge(g).has_value();
}

/// Closed form for connected 2-chromatic graphs that are not complete
/// bipartite: edges missing from the complete bipartite graph on the same
/// bipartition.
inline std::int64_t stability_number_bipartite(const Graph& g)
{
    if (!g.is_connected())
        throw std::invalid_argument("stability number needs a connected graph");
    auto side = two_coloring(g);
    if (!side || g.size() == 0)
        throw std::invalid_argument("graph is not 2-chromatic");
    if (is_complete_bipartite(g))
        throw std::invalid_argument("complete bipartite graphs are already unstable");
    std::int64_t a = 0;
    for (int s : *side)
        a += (s == 0);
    std::int64_t b = static_cast<std::int64_t>(g.order()) - a;
    return a * b - static_cast<std::int64_t>(g.size());
}

struct StabilitySearchBudget {
    std::size_t max_order = 9;
    std::uint64_t max_subsets = 2'000'000;
};

/// Which edge sets count toward the stability number. The definition only
/// asks that the result be unstable; `chi_preserving` additionally requires
/// every added set to keep the chromatic number, the reading under which
/// the 2-chromatic closed form is exact.
enum class RhoReading { chi_preserving, unrestricted };

inline const char* to_string(RhoReading r) { return r == RhoReading::chi_preserving ? "chi_preserving" : "unrestricted"; }

inline RhoReading parse_rho_reading(std::string_view s)
{
    if (s == "chi_preserving")
        return RhoReading::chi_preserving;
    if (s == "unrestricted")
        return RhoReading::unrestricted;
    throw std::invalid_argument("unknown rho reading '" + std::string(s) + "'");
}

struct BruteForceRho {
    std::optional<std::size_t> rho; // empty when the budget ran out
    std::vector<Edge> added;        // a minimum edge set that makes the graph unstable
    std::uint64_t subsets_examined = 0;
};

/// Smallest number of added edges that turns a stable graph unstable,
/// searched level by level over subsets of the non-edges.
inline BruteForceRho stability_number_bruteforce(const Graph& g, const StabilitySearchBudget& budget = {},
                                                RhoReading reading = RhoReading::unrestricted)
{
    if (g.order() < 2 || g.is_complete() || !is_chromatically_stable(g))
        throw std::invalid_argument("stability number is defined for chromatically stable graphs");
    BruteForceRho out;
    if (g.order() > budget.max_order)
        return out;

    const auto chi = chromatic_number(g);
    const auto candidates = g.non_edges();
    const std::size_t total = candidates.size();
    std::vector<std::size_t> pick;
    std::vector<Edge> chosen;
    for (std::size_t k = 1; k <= total; ++k) {
        pick.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        while (true) {
            if (out.subsets_examined == budget.max_subsets)
                return out;
            ++out.subsets_examined;
            chosen.clear();
            for (auto i : pick)
                chosen.push_back(candidates[i]);
            auto h = g.with_edges(chosen);
            bool admissible = reading == RhoReading::unrestricted || is_k_colorable(h, chi);
            if (admissible && is_chromatically_unstable(h)) {
                out.rho = k;
                out.added = chosen;
                return out;
            }
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == total - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

enum class RhoMethod { closed_form, brute_force, not_applicable };

inline const char* to_string(RhoMethod m)
{
    switch (m) {
    case RhoMethod::closed_form: return "closed_form";
    case RhoMethod::brute_force: return "brute_force";
    case RhoMethod::not_applicable: return "not_applicable";
    }
    return "?";
}

struct StabilityReport {
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t chi = 0;
    bool connected = false;
    bool stable = false;
    bool perfectly_stable = false;
    std::optional<Edge> stabilizing_edge;
    std::optional<std::int64_t> rho;
    std::optional<std::int64_t> rho_bruteforce;
    RhoMethod method = RhoMethod::not_applicable;
    RhoReading reading = RhoReading::chi_preserving;
    bool rho_budget_exhausted = false;
};

/// Stability verdict plus the stability number where it can be computed.
/// Under the chi-preserving reading connected 2-chromatic graphs use the
/// closed form (cross-checked by the search when within budget); everything
/// else goes through the subset search.
inline StabilityReport analyze_stability(const Graph& g, const StabilitySearchBudget& budget = {},
                                         RhoReading reading = RhoReading::chi_preserving)
{
    if (g.order() < 2)
        throw std::invalid_argument("stability needs order >= 2");
    StabilityReport r;
    r.order = g.order();
    r.size = g.size();
    r.connected = g.is_connected();
    r.chi = chromatic_number(g);
    r.reading = reading;
    if (g.is_complete()) {
        r.perfectly_stable = true;
        return r;
    }
    r.stabilizing_edge = stabilizing_edge(g, r.chi);
    r.stable = r.stabilizing_edge.has_value();
    if (!r.stable)
        return r;

    auto search = [&]() {
        auto bf = stability_number_bruteforce(g, budget, reading);
        if (bf.rho)
            r.rho_bruteforce = static_cast<std::int64_t>(*bf.rho);
        else
            r.rho_budget_exhausted = true;
    };
    if (r.chi == 2 && r.connected && reading == RhoReading::chi_preserving) {
        r.rho = stability_number_bipartite(g);
        r.method = RhoMethod::closed_form;
        if (g.order() <= budget.max_order)
            search();
    }
    else {
        search();
        r.rho = r.rho_bruteforce;
        r.method = RhoMethod::brute_force;
    }
    return r;
}

} // namespace czi
