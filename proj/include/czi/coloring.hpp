#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace czi {

using Color = std::uint32_t; // 1-based

/// Vertex -> color assignment with colors 1..palette_size, each used at
/// least once. Properness is a relation to a graph and is checked separately.
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<Color> assignment)
        : assignment_(std::move(assignment))
    {
        if (assignment_.empty())
            throw std::invalid_argument("coloring of an empty vertex set");
        palette_ = *std::max_element(assignment_.begin(), assignment_.end());
        std::vector<char> used(palette_ + 1, 0);
        for (auto c : assignment_) {
            if (c == 0)
                throw std::invalid_argument("color indices are 1-based");
            used[c] = 1;
        }
        for (Color c = 1; c <= palette_; ++c)
            if (!used[c])
                throw std::invalid_argument("coloring is not surjective onto 1.." + std::to_string(palette_) +
                                            " (color " + std::to_string(c) + " unused)");
    }

    std::size_t order() const { return assignment_.size(); }
    std::size_t palette_size() const { return palette_; }
    Color operator[](Vertex v) const { return assignment_.at(v); }
    const std::vector<Color>& assignment() const { return assignment_; }

    /// The coloring with labels mapped c -> palette_size + 1 - c.
    Coloring reversed() const
    {
        auto a = assignment_;
        for (auto& c : a)
            c = static_cast<Color>(palette_ + 1 - c);
        return Coloring(std::move(a));
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;
    friend auto operator<=>(const Coloring& a, const Coloring& b) { return a.assignment_ <=> b.assignment_; }

private:
    std::vector<Color> assignment_;
    std::size_t palette_ = 0;
};

/// theta[j-1] = number of vertices colored j.
using StrengthVector = std::vector<std::size_t>;

inline StrengthVector strengths(const Coloring& c)
{
    StrengthVector theta(c.palette_size(), 0);
    for (auto col : c.assignment())
        ++theta[col - 1];
    return theta;
}

inline bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.order() != g.order())
        throw std::invalid_argument("coloring covers " + std::to_string(c.order()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    return true;
}

enum class Semantics { all, permutation };

inline const char* to_string(Semantics s) { return s == Semantics::all ? "all" : "permutation"; }

inline Semantics parse_semantics(std::string_view s)
{
    if (s == "all")
        return Semantics::all;
    if (s == "permutation")
        return Semantics::permutation;
    throw std::invalid_argument("unknown semantics '" + std::string(s) + "' (all|permutation)");
}

namespace detail {

/// Vertices by descending degree, ties by index.
inline std::vector<Vertex> degree_order(const Graph& g)
{
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

inline std::size_t greedy_clique_size(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    auto order = degree_order(g);
    std::vector<Vertex> clique;
    for (auto v : order) {
        bool ok = std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.adjacent(u, v); });
        if (ok)
            clique.push_back(v);
    }
    return clique.size();
}

inline std::size_t greedy_coloring_size(const Graph& g)
{
    std::vector<Color> color(g.order(), 0);
    std::size_t used = 0;
    std::vector<char> taken;
    for (auto v : degree_order(g)) {
        taken.assign(used + 2, 0);
        for (auto w : g.neighbors(v))
            if (color[w])
                taken[color[w]] = 1;
        Color c = 1;
        while (taken[c])
            ++c;
        color[v] = c;
        used = std::max<std::size_t>(used, c);
    }
    return used;
}

/// Backtracking k-colorability over the degree order. A fresh color may only
/// be the next unused one, so the first vertex is pinned to color 1.
class KColorSearch {
public:
    KColorSearch(const Graph& g, std::size_t k)
        : g_(g), k_(k), order_(degree_order(g)), color_(g.order(), 0)
    {
    }

    std::optional<std::vector<Color>> run()
    {
        if (g_.order() == 0)
            return std::vector<Color>{};
        if (k_ == 0)
            return std::nullopt;
        if (descend(0, 0))
            return color_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t depth, std::size_t used)
    {
        if (depth == order_.size())
            return true;
        auto v = order_[depth];
        auto limit = std::min(k_, used + 1);
        for (Color c = 1; c <= limit; ++c) {
            bool clash = false;
            for (auto w : g_.neighbors(v))
                if (color_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color_[v] = c;
            if (descend(depth + 1, std::max<std::size_t>(used, c)))
                return true;
            color_[v] = 0;
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    std::vector<Vertex> order_;
    std::vector<Color> color_;
};

} // namespace detail

/// Proper coloring with at most k colors, if one exists.
inline std::optional<Coloring> find_k_coloring(const Graph& g, std::size_t k)
{
    auto a = detail::KColorSearch(g, k).run();
    if (!a)
        return std::nullopt;
    return Coloring(std::move(*a));
}

inline bool is_k_colorable(const Graph& g, std::size_t k) { return detail::KColorSearch(g, k).run().has_value(); }

/// Exact chromatic number: the search starts at a greedy clique bound and
/// stops at the greedy coloring bound.
inline std::size_t chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        throw std::invalid_argument("chromatic_number: empty graph");
    auto lower = detail::greedy_clique_size(g);
    auto upper = detail::greedy_coloring_size(g);
    for (auto k = lower; k < upper; ++k)
        if (is_k_colorable(g, k))
            return k;
    return upper;
}

// ---------------------------------------------------------------------------
// Enumeration of minimum colorings.
//
// all:         every proper assignment V -> {1..chi} using every color.
// permutation: the canonical chi-partition under all chi! relabelings.
//
// Both stream colorings in lexicographic order of the assignment vector.

/// Visitor returns false to stop the stream early.
using ColoringVisitor = std::function<bool(const Coloring&)>;

namespace detail {

class AllColoringsSearch {
public:
    AllColoringsSearch(const Graph& g, std::size_t k, const ColoringVisitor& visit)
        : g_(g), k_(k), visit_(visit), color_(g.order(), 0), count_(k + 1, 0)
    {
    }

    /// Returns false when the visitor stopped the stream.
    bool run() { return descend(0, 0); }

private:
    bool descend(Vertex v, std::size_t distinct)
    {
        const auto n = g_.order();
        if (v == n) {
            if (distinct == k_)
                return visit_(Coloring(color_));
            return true;
        }
        // every still-missing color needs one of the remaining vertices
        if (k_ - distinct > n - v)
            return true;
        for (Color c = 1; c <= k_; ++c) {
            bool clash = false;
            for (auto w : g_.neighbors(v)) {
                if (w >= v)
                    break;
                if (color_[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash)
                continue;
            color_[v] = c;
            bool fresh = count_[c]++ == 0;
            bool go = descend(v + 1, distinct + (fresh ? 1 : 0));
            --count_[c];
            color_[v] = 0;
            if (!go)
                return false;
        }
        return true;
    }

    const Graph& g_;
    std::size_t k_;
    const ColoringVisitor& visit_;
    std::vector<Color> color_;
    std::vector<std::size_t> count_;
};

/// First proper k-coloring in restricted-growth form (vertex 0 gets class 1,
/// each new class takes the next label) in lexicographic order.
inline std::optional<std::vector<Color>> least_partition(const Graph& g, std::size_t k)
{
    const auto n = g.order();
    std::vector<Color> color(n, 0);
    std::function<bool(Vertex, std::size_t)> descend = [&](Vertex v, std::size_t used) -> bool {
        if (v == n)
            return used == k;
        if (k - used > n - v)
            return false;
        auto limit = std::min(k, used + 1);
        for (Color c = 1; c <= limit; ++c) {
            bool clash = false;
            for (auto w : g.neighbors(v)) {
                if (w >= v)
                    break;
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash)
                continue;
            color[v] = c;
            if (descend(v + 1, std::max<std::size_t>(used, c)))
                return true;
        }
        color[v] = 0;
        return false;
    };
    if (descend(0, 0))
        return color;
    return std::nullopt;
}

} // namespace detail

/// Canonical minimum-color partition used by permutation semantics: the
/// lexicographically least restricted-growth labeling among proper
/// chi-colorings. Class j is the set of vertices labeled j.
inline Coloring canonical_partition(const Graph& g, std::optional<std::size_t> chi = std::nullopt)
{
    auto k = chi ? *chi : chromatic_number(g);
    auto a = detail::least_partition(g, k);
    if (!a)
        throw std::logic_error("no proper coloring with chromatic number colors");
    return Coloring(std::move(*a));
}

/// Streams minimum colorings lazily. Returns false if the visitor stopped
/// early. `chi` may be supplied when already known.
inline bool for_each_min_coloring(const Graph& g, Semantics semantics, const ColoringVisitor& visit,
                                  std::optional<std::size_t> chi = std::nullopt)
{
    if (g.order() == 0)
        throw std::invalid_argument("enumerate_min_colorings: empty graph");
    auto k = chi ? *chi : chromatic_number(g);
    if (semantics == Semantics::all)
        return detail::AllColoringsSearch(g, k, visit).run();

    auto canonical = canonical_partition(g, k);
    std::vector<Color> perm(k);
    std::iota(perm.begin(), perm.end(), Color{1});
    std::vector<Color> a(g.order());
    // classes first appear in label order, so lexicographic order of the
    // permutation is lexicographic order of the resulting assignment
    do {
        for (Vertex v = 0; v < g.order(); ++v)
            a[v] = perm[canonical[v] - 1];
        if (!visit(Coloring(a)))
            return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

inline std::vector<Coloring> enumerate_min_colorings(const Graph& g, Semantics semantics)
{
    std::vector<Coloring> out;
    for_each_min_coloring(g, semantics, [&](const Coloring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

} // namespace czi
