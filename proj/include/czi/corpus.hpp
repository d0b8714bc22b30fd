#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"

// Graph corpora used by the claim harness.

namespace czi::corpus {

struct Entry {
    std::string label;
    Graph graph;
};

inline Entry from_family(const FamilySpec& spec) { return {to_string(spec), generate(spec)}; }

inline Entry from_graph(Graph g, const std::string& prefix)
{
    auto label = prefix + " g6:" + to_graph6(g);
    return {std::move(label), std::move(g)};
}

/// Independent random streams per corpus, derived from one user seed.
inline Rng stream(std::uint64_t seed, std::uint64_t stream_id)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id)};
    return Rng(seq);
}

/// Named families up to the given order (every graph connected).
inline std::vector<Entry> families_up_to(std::size_t max_order)
{
    std::vector<Entry> out;
    for (std::size_t n = 1; n <= max_order; ++n)
        out.push_back(from_family(FamilySpec::path(n)));
    for (std::size_t n = 3; n <= max_order; ++n)
        out.push_back(from_family(FamilySpec::cycle(n)));
    for (std::size_t n = 2; n <= max_order; ++n)
        out.push_back(from_family(FamilySpec::complete(n)));
    for (std::size_t n = 4; n <= max_order; ++n)
        out.push_back(from_family(FamilySpec::star(n)));
    // ascending part-size tuples with at least two parts
    std::function<void(std::vector<std::size_t>&, std::size_t, std::size_t)> parts =
        [&](std::vector<std::size_t>& cur, std::size_t min_part, std::size_t remaining) {
            if (cur.size() >= 2)
                out.push_back(from_family(FamilySpec::complete_multipartite(cur)));
            for (std::size_t p = min_part; p <= remaining; ++p) {
                cur.push_back(p);
                parts(cur, p, remaining - p);
                cur.pop_back();
            }
        };
    std::vector<std::size_t> cur;
    parts(cur, 1, max_order);
    const std::vector<std::vector<std::size_t>> caterpillars = {
        {1, 1}, {2, 0, 1}, {1, 1, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}, {2, 2}, {1, 2, 1}, {3, 0, 1}};
    for (const auto& legs : caterpillars) {
        auto spec = FamilySpec::caterpillar(legs);
        if (generate(spec).order() <= max_order)
            out.push_back(from_family(spec));
    }
    const std::vector<FamilySpec> thorns = {
        FamilySpec::thorn(FamilySpec::path(2), 1),     FamilySpec::thorn(FamilySpec::complete(3), 1),
        FamilySpec::thorn(FamilySpec::path(3), 1),     FamilySpec::thorn(FamilySpec::cycle(4), std::vector<std::size_t>{1, 0, 1, 0}),
        FamilySpec::thorn(FamilySpec::complete(3), 0), FamilySpec::thorn(FamilySpec::star(3), std::vector<std::size_t>{0, 2, 1}),
    };
    for (const auto& spec : thorns)
        if (generate(spec).order() <= max_order)
            out.push_back(from_family(spec));
    return out;
}

/// `count` random connected graphs with 2 <= order <= max_order.
inline std::vector<Entry> random_connected(std::uint64_t seed, std::uint64_t stream_id, std::size_t count,
                                           std::size_t min_order, std::size_t max_order)
{
    static constexpr unsigned densities[] = {15, 30, 45, 60, 75};
    auto rng = stream(seed, stream_id);
    std::vector<Entry> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto n = min_order + uniform_below(rng, max_order - min_order + 1);
        auto p = densities[uniform_below(rng, 5)];
        out.push_back(from_graph(random_connected_graph(n, p, rng), "random#" + std::to_string(i)));
    }
    return out;
}

inline std::vector<Entry> random_trees(std::uint64_t seed, std::uint64_t stream_id, std::size_t count,
                                       std::size_t min_order, std::size_t max_order)
{
    auto rng = stream(seed, stream_id);
    std::vector<Entry> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto n = min_order + uniform_below(rng, max_order - min_order + 1);
        out.push_back(from_graph(random_tree(n, rng), "random-tree#" + std::to_string(i)));
    }
    return out;
}

/// Calls fn for every connected bipartite graph of order n with both sides
/// non-empty, up to row permutations of the biadjacency matrix. Every
/// isomorphism class occurs at least once. Side A = 0..a-1.
inline void for_each_connected_bipartite(std::size_t n, const std::function<void(const Graph&)>& fn)
{
    for (std::size_t a = 1; a <= n / 2; ++a) {
        const std::size_t b = n - a;
        const std::uint32_t masks = 1u << b;
        std::vector<std::uint32_t> rows(a, 1);
        std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t lo) {
            if (i == a) {
                std::vector<Edge> edges;
                for (std::size_t r = 0; r < a; ++r)
                    for (std::size_t c = 0; c < b; ++c)
                        if (rows[r] & (1u << c))
                            edges.emplace_back(static_cast<Vertex>(r), static_cast<Vertex>(a + c));
                Graph g(n, std::move(edges));
                if (g.is_connected())
                    fn(g);
                return;
            }
            for (std::uint32_t m = lo; m < masks; ++m) {
                rows[i] = m;
                rec(i + 1, m);
            }
        };
        rec(0, 1);
    }
}

} // namespace czi::corpus
