#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace czi {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..order-1.
///
/// Adjacency is stored as sorted neighbor lists; the edge list is kept
/// normalized (u < v) and sorted so that iteration order is deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// (after u<v normalization) and endpoints outside 0..order-1.
    Graph(std::size_t order, std::vector<Edge> edges)
        : adj_(order)
    {
        for (auto& e : edges) {
            if (e.first >= order || e.second >= order)
                throw GraphError("edge endpoint out of range: " + std::to_string(e.first) + " " +
                                 std::to_string(e.second) + " (order " + std::to_string(order) + ")");
            if (e.first == e.second)
                throw GraphError("self-loop at vertex " + std::to_string(e.first));
            if (e.first > e.second)
                std::swap(e.first, e.second);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw GraphError("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
        for (const auto& [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& row : adj_)
            std::sort(row.begin(), row.end());
        edges_ = std::move(edges);
    }

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const { return edges_.size(); }

    std::size_t degree(Vertex v) const
    {
        check_vertex(v);
        return adj_[v].size();
    }

    std::span<const Vertex> neighbors(Vertex v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    bool adjacent(Vertex u, Vertex v) const
    {
        check_vertex(u);
        check_vertex(v);
        const auto& row = adj_[u];
        return std::binary_search(row.begin(), row.end(), v);
    }

    const std::vector<Edge>& edges() const { return edges_; }

    /// Unordered vertex pairs that are not edges, in lexicographic order.
    std::vector<Edge> non_edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = u + 1; v < order(); ++v)
                if (!adjacent(u, v))
                    out.emplace_back(u, v);
        return out;
    }

    bool is_complete() const
    {
        const auto n = order();
        return size() == n * (n - (n > 0 ? 1 : 0)) / 2;
    }

    bool is_connected() const
    {
        if (order() == 0)
            return false;
        std::vector<char> seen(order(), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == order();
    }

    bool is_tree() const { return is_connected() && size() + 1 == order(); }

    /// New graph with the given extra edges.
    Graph with_edges(std::span<const Edge> extra) const
    {
        auto all = edges_;
        all.insert(all.end(), extra.begin(), extra.end());
        return Graph(order(), std::move(all));
    }

    Graph without_edges(std::span<const Edge> removed) const
    {
        std::vector<Edge> norm(removed.begin(), removed.end());
        for (auto& e : norm)
            if (e.first > e.second)
                std::swap(e.first, e.second);
        std::sort(norm.begin(), norm.end());
        std::vector<Edge> kept;
        std::set_difference(edges_.begin(), edges_.end(), norm.begin(), norm.end(), std::back_inserter(kept));
        return Graph(order(), std::move(kept));
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.order() == b.order() && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const
    {
        if (v >= adj_.size())
            throw GraphError("vertex index " + std::to_string(v) + " out of range (order " +
                             std::to_string(adj_.size()) + ")");
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

} // namespace czi
