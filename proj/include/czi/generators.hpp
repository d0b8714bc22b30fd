#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace czi {

enum class FamilyKind { path, cycle, complete, star, complete_multipartite, caterpillar, thorn };

/// Parameterized description of a named graph family.
///
///  - path / cycle / complete / star: `sizes = {order}`; a star of order n is K_{1,n-1}.
///  - complete_multipartite: `sizes` are the part sizes, kept ascending.
///  - caterpillar: `sizes` are the leg counts hung on each spine vertex (0 allowed).
///  - thorn: `base` plus `pendants`, either one uniform count or one per base vertex.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    std::vector<std::size_t> sizes;
    std::shared_ptr<const FamilySpec> base;
    std::vector<std::size_t> pendants;

    static FamilySpec path(std::size_t n) { return simple(FamilyKind::path, n); }
    static FamilySpec cycle(std::size_t n) { return simple(FamilyKind::cycle, n); }
    static FamilySpec complete(std::size_t n) { return simple(FamilyKind::complete, n); }
    static FamilySpec star(std::size_t n) { return simple(FamilyKind::star, n); }

    static FamilySpec complete_multipartite(std::vector<std::size_t> parts)
    {
        FamilySpec s;
        s.kind = FamilyKind::complete_multipartite;
        std::sort(parts.begin(), parts.end());
        s.sizes = std::move(parts);
        s.validate();
        return s;
    }

    static FamilySpec caterpillar(std::vector<std::size_t> legs)
    {
        FamilySpec s;
        s.kind = FamilyKind::caterpillar;
        s.sizes = std::move(legs);
        s.validate();
        return s;
    }

    static FamilySpec thorn(FamilySpec base, std::vector<std::size_t> pendants)
    {
        FamilySpec s;
        s.kind = FamilyKind::thorn;
        s.base = std::make_shared<const FamilySpec>(std::move(base));
        s.pendants = std::move(pendants);
        s.validate();
        return s;
    }

    static FamilySpec thorn(FamilySpec base, std::size_t m) { return thorn(std::move(base), std::vector{m}); }

    void validate() const
    {
        switch (kind) {
        case FamilyKind::path:
        case FamilyKind::complete:
        case FamilyKind::star:
            if (sizes.size() != 1 || sizes[0] < 1)
                throw std::invalid_argument("family needs one order parameter >= 1");
            break;
        case FamilyKind::cycle:
            if (sizes.size() != 1 || sizes[0] < 3)
                throw std::invalid_argument("cycle needs order >= 3");
            break;
        case FamilyKind::complete_multipartite:
            if (sizes.size() < 2)
                throw std::invalid_argument("complete multipartite graph needs at least two parts");
            if (!std::is_sorted(sizes.begin(), sizes.end()))
                throw std::invalid_argument("complete multipartite part sizes must be ascending");
            if (sizes.front() < 1)
                throw std::invalid_argument("part sizes must be >= 1");
            break;
        case FamilyKind::caterpillar:
            if (sizes.empty())
                throw std::invalid_argument("caterpillar needs at least one spine vertex");
            break;
        case FamilyKind::thorn:
            if (!base)
                throw std::invalid_argument("thorn graph needs a base family");
            if (base->kind == FamilyKind::thorn)
                throw std::invalid_argument("thorn bases nest one level only");
            base->validate();
            if (pendants.empty())
                throw std::invalid_argument("thorn graph needs pendant counts");
            break;
        }
    }

private:
    static FamilySpec simple(FamilyKind k, std::size_t n)
    {
        FamilySpec s;
        s.kind = k;
        s.sizes = {n};
        s.validate();
        return s;
    }
};

/// Attaches pendants[i] leaves to vertex i (or pendants[0] to every vertex
/// when one count is given). Base vertices keep 0..n-1; the leaves of base
/// vertex i form a contiguous block after those of vertex i-1.
inline Graph attach_thorns(const Graph& base, const std::vector<std::size_t>& pendants)
{
    const auto n = base.order();
    if (pendants.size() != 1 && pendants.size() != n)
        throw std::invalid_argument("thorn pendant list must have 1 or " + std::to_string(n) + " entries");
    std::vector<Edge> edges = base.edges();
    Vertex next = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
        auto p = pendants.size() == 1 ? pendants[0] : pendants[v];
        for (std::size_t k = 0; k < p; ++k)
            edges.emplace_back(v, next++);
    }
    return Graph(next, std::move(edges));
}

inline Graph generate(const FamilySpec& spec)
{
    spec.validate();
    std::vector<Edge> edges;
    switch (spec.kind) {
    case FamilyKind::path: {
        auto n = spec.sizes[0];
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, std::move(edges));
    }
    case FamilyKind::cycle: {
        auto n = spec.sizes[0];
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        edges.emplace_back(0, static_cast<Vertex>(n - 1));
        return Graph(n, std::move(edges));
    }
    case FamilyKind::complete: {
        auto n = spec.sizes[0];
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }
    case FamilyKind::star: {
        auto n = spec.sizes[0];
        for (Vertex v = 1; v < n; ++v)
            edges.emplace_back(0, v);
        return Graph(n, std::move(edges));
    }
    case FamilyKind::complete_multipartite: {
        std::vector<Vertex> start;
        Vertex total = 0;
        for (auto s : spec.sizes) {
            start.push_back(total);
            total += static_cast<Vertex>(s);
        }
        start.push_back(total);
        for (std::size_t a = 0; a < spec.sizes.size(); ++a)
            for (std::size_t b = a + 1; b < spec.sizes.size(); ++b)
                for (Vertex u = start[a]; u < start[a + 1]; ++u)
                    for (Vertex v = start[b]; v < start[b + 1]; ++v)
                        edges.emplace_back(u, v);
        return Graph(total, std::move(edges));
    }
    case FamilyKind::caterpillar: {
        auto spine = spec.sizes.size();
        for (Vertex v = 0; v + 1 < spine; ++v)
            edges.emplace_back(v, v + 1);
        return attach_thorns(Graph(spine, std::move(edges)), spec.sizes);
    }
    case FamilyKind::thorn:
        return attach_thorns(generate(*spec.base), spec.pendants);
    }
    throw std::logic_error("unhandled family kind");
}

// ---------------------------------------------------------------------------
// Family spec mini-grammar: "kind:p1,p2,..." and "thorn(<base>;m)" or
// "thorn(<base>;p1,p2,...)". Accepted kinds: path, cycle, complete, star,
// complete-multipartite (alias multipartite), complete-bipartite, caterpillar.

namespace detail {

inline std::vector<std::size_t> parse_size_list(std::string_view s, std::string_view context)
{
    std::vector<std::size_t> out;
    std::size_t i = 0;
    if (s.empty())
        throw std::invalid_argument("missing parameters in '" + std::string(context) + "'");
    while (i <= s.size()) {
        auto comma = s.find(',', i);
        auto tok = s.substr(i, comma == std::string_view::npos ? s.size() - i : comma - i);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos || tok.size() > 9)
            throw std::invalid_argument("bad parameter '" + std::string(tok) + "' in '" + std::string(context) + "'");
        out.push_back(std::stoul(std::string(tok)));
        if (comma == std::string_view::npos)
            break;
        i = comma + 1;
    }
    return out;
}

} // namespace detail

inline FamilySpec parse_family_spec(std::string_view text)
{
    const std::string ctx(text);
    if (text.substr(0, 6) == "thorn(") {
        if (text.back() != ')')
            throw std::invalid_argument("thorn spec must end with ')': " + ctx);
        auto inner = text.substr(6, text.size() - 7);
        auto semi = inner.rfind(';');
        if (semi == std::string_view::npos)
            throw std::invalid_argument("thorn spec needs 'base;m': " + ctx);
        auto base = parse_family_spec(inner.substr(0, semi));
        return FamilySpec::thorn(std::move(base), detail::parse_size_list(inner.substr(semi + 1), text));
    }
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family spec must look like kind:params: " + ctx);
    auto kind = text.substr(0, colon);
    auto params = detail::parse_size_list(text.substr(colon + 1), text);
    auto single = [&]() {
        if (params.size() != 1)
            throw std::invalid_argument("expected one parameter in '" + ctx + "'");
        return params[0];
    };
    if (kind == "path")
        return FamilySpec::path(single());
    if (kind == "cycle")
        return FamilySpec::cycle(single());
    if (kind == "complete")
        return FamilySpec::complete(single());
    if (kind == "star")
        return FamilySpec::star(single());
    if (kind == "complete-multipartite" || kind == "multipartite")
        return FamilySpec::complete_multipartite(params);
    if (kind == "complete-bipartite") {
        if (params.size() != 2)
            throw std::invalid_argument("complete-bipartite takes two part sizes");
        return FamilySpec::complete_multipartite(params);
    }
    if (kind == "caterpillar")
        return FamilySpec::caterpillar(params);
    throw std::invalid_argument("unknown family kind '" + std::string(kind) + "'");
}

inline std::string to_string(const FamilySpec& spec)
{
    auto join = [](const std::vector<std::size_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    switch (spec.kind) {
    case FamilyKind::path: return "path:" + join(spec.sizes);
    case FamilyKind::cycle: return "cycle:" + join(spec.sizes);
    case FamilyKind::complete: return "complete:" + join(spec.sizes);
    case FamilyKind::star: return "star:" + join(spec.sizes);
    case FamilyKind::complete_multipartite: return "complete-multipartite:" + join(spec.sizes);
    case FamilyKind::caterpillar: return "caterpillar:" + join(spec.sizes);
    case FamilyKind::thorn: return "thorn(" + to_string(*spec.base) + ";" + join(spec.pendants) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Random graphs. All randomness comes from std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws use rejection sampling so
// results do not depend on the standard library's distribution classes.

using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Uniform labeled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, Rng& rng)
{
    if (n == 0)
        throw std::invalid_argument("random_tree: order must be >= 1");
    if (n == 1)
        return Graph(1, {});
    if (n == 2)
        return Graph(2, {{0, 1}});
    std::vector<Vertex> code(n - 2);
    for (auto& c : code)
        c = static_cast<Vertex>(uniform_below(rng, n));
    std::vector<std::size_t> deg(n, 1);
    for (auto c : code)
        ++deg[c];
    std::vector<Edge> edges;
    for (auto c : code) {
        Vertex leaf = 0;
        while (deg[leaf] != 1)
            ++leaf;
        edges.emplace_back(leaf, c);
        --deg[leaf];
        --deg[c];
    }
    Vertex a = 0;
    while (deg[a] != 1)
        ++a;
    Vertex b = a + 1;
    while (deg[b] != 1)
        ++b;
    edges.emplace_back(a, b);
    return Graph(n, std::move(edges));
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability percent/100.
inline Graph random_connected_graph(std::size_t n, unsigned percent, Rng& rng)
{
    auto tree = random_tree(n, rng);
    std::vector<Edge> extra;
    for (const auto& e : tree.non_edges())
        if (uniform_below(rng, 100) < percent)
            extra.push_back(e);
    return tree.with_edges(extra);
}

} // namespace czi
