#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <optional>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace czi {

/// Parse failure. `position` is a byte offset for graph6 input and a 1-based
/// line number for the line-oriented formats.
class ParseError : public std::runtime_error {
public:
    enum class Unit { byte_offset, line };

    ParseError(const std::string& what, std::size_t position, Unit unit)
        : std::runtime_error(what + (unit == Unit::byte_offset ? " at byte offset " : " at line ") +
                             std::to_string(position)),
          position_(position), unit_(unit)
    {
    }

    std::size_t position() const { return position_; }
    Unit unit() const { return unit_; }

private:
    std::size_t position_;
    Unit unit_;
};

namespace detail {

constexpr int g6_bias = 63;
constexpr int g6_max = 126;
constexpr std::size_t g6_max_order = 258047;

inline std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        auto b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > b)
            out.push_back(s.substr(b, i - b));
    }
    return out;
}

inline bool parse_uint(std::string_view tok, std::uint64_t& out)
{
    if (tok.empty())
        return false;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

} // namespace detail

// ---------------------------------------------------------------------------
// graph6

/// Decodes one graph6 line. An optional ">>graph6<<" header and surrounding
/// whitespace are tolerated.
inline Graph parse_graph6(std::string_view text)
{
    using detail::g6_bias;
    using detail::g6_max;

    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    // leading whitespace is not expected in graph6; only trailing newline is
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.substr(0, header.size()) == header)
        base = header.size();

    const auto byte_at = [&](std::size_t pos) -> int {
        if (pos >= text.size())
            throw ParseError("truncated graph6 input", pos, ParseError::Unit::byte_offset);
        int c = static_cast<unsigned char>(text[pos]);
        if (c < g6_bias || c > g6_max)
            throw ParseError("character out of graph6 range", pos, ParseError::Unit::byte_offset);
        return c - g6_bias;
    };

    std::size_t pos = base;
    if (pos >= text.size())
        throw ParseError("empty graph6 input", pos, ParseError::Unit::byte_offset);

    std::size_t n = 0;
    int first = byte_at(pos);
    if (first < 63) {
        n = static_cast<std::size_t>(first);
        pos += 1;
    }
    else {
        int second = byte_at(pos + 1);
        if (second == 63)
            throw ParseError("graph6 orders above 258047 are not supported", pos + 1,
                             ParseError::Unit::byte_offset);
        n = 0;
        for (std::size_t k = 1; k <= 3; ++k)
            n = (n << 6) | static_cast<std::size_t>(byte_at(pos + k));
        pos += 4;
    }
    if (n == 0)
        throw ParseError("graph6 graph must have at least one vertex", base, ParseError::Unit::byte_offset);

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t nbytes = (bits + 5) / 6;
    if (text.size() - pos < nbytes)
        throw ParseError("truncated graph6 bit vector", text.size(), ParseError::Unit::byte_offset);
    if (text.size() - pos > nbytes)
        throw ParseError("trailing bytes after graph6 bit vector", pos + nbytes, ParseError::Unit::byte_offset);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int chunk = byte_at(pos + k / 6);
            if (chunk & (1 << (5 - static_cast<int>(k % 6))))
                edges.emplace_back(i, j);
        }
    return Graph(n, std::move(edges));
}

inline std::string to_graph6(const Graph& g)
{
    using detail::g6_bias;
    const auto n = g.order();
    if (n > detail::g6_max_order)
        throw GraphError("graph too large for graph6 encoding");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + g6_bias));
    }
    else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + g6_bias));
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + g6_bias));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + g6_bias));
    return out;
}

// ---------------------------------------------------------------------------
// plain edge list: optional "n=<k>" first line, then one "u v" per line

inline Graph parse_edge_list(std::string_view text)
{
    using Unit = ParseError::Unit;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    std::optional<std::uint64_t> declared;
    std::uint64_t max_id = 0;
    bool saw_edge = false;
    bool saw_content = false;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        auto raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
        start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        if (line.substr(0, 2) == "n=") {
            if (saw_content)
                throw ParseError("order header must be the first line", line_no, Unit::line);
            std::uint64_t k = 0;
            if (!detail::parse_uint(detail::trim(line.substr(2)), k) || k == 0)
                throw ParseError("invalid order header", line_no, Unit::line);
            declared = k;
            saw_content = true;
            continue;
        }
        saw_content = true;

        auto toks = detail::split_ws(line);
        if (toks.size() != 2)
            throw ParseError("expected two vertex ids", line_no, Unit::line);
        std::uint64_t u = 0, v = 0;
        if (!detail::parse_uint(toks[0], u) || !detail::parse_uint(toks[1], v))
            throw ParseError("non-integer vertex id", line_no, Unit::line);
        if (u == v)
            throw ParseError("self-loop", line_no, Unit::line);
        if (declared && (u >= *declared || v >= *declared))
            throw ParseError("vertex id exceeds declared order", line_no, Unit::line);
        if (u > 0xffffffffu || v > 0xffffffffu)
            throw ParseError("vertex id too large", line_no, Unit::line);
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert((static_cast<std::uint64_t>(e.first) << 32) | e.second).second)
            throw ParseError("duplicate edge", line_no, Unit::line);
        edges.push_back(e);
        max_id = std::max({max_id, u, v});
        saw_edge = true;
    }

    std::size_t order = declared ? *declared : (saw_edge ? max_id + 1 : 0);
    if (order == 0)
        throw ParseError("empty edge list without order header", line_no, Unit::line);
    return Graph(order, std::move(edges));
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << "n=" << g.order() << '\n';
    for (const auto& [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// DIMACS .col: "p edge n m", "e u v" with 1-based ids, "c" comments

inline Graph parse_dimacs(std::string_view text)
{
    using Unit = ParseError::Unit;
    std::optional<std::uint64_t> order;
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        auto raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
        start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        auto line = detail::trim(raw);
        if (line.empty() || line.front() == 'c')
            continue;
        auto toks = detail::split_ws(line);
        if (toks[0] == "p") {
            if (order)
                throw ParseError("duplicate problem line", line_no, Unit::line);
            std::uint64_t n = 0, m = 0;
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col") || !detail::parse_uint(toks[2], n) ||
                !detail::parse_uint(toks[3], m) || n == 0)
                throw ParseError("malformed problem line", line_no, Unit::line);
            order = n;
        }
        else if (toks[0] == "e") {
            if (!order)
                throw ParseError("edge before problem line", line_no, Unit::line);
            std::uint64_t u = 0, v = 0;
            if (toks.size() != 3 || !detail::parse_uint(toks[1], u) || !detail::parse_uint(toks[2], v))
                throw ParseError("malformed edge line", line_no, Unit::line);
            if (u == 0 || v == 0 || u > *order || v > *order)
                throw ParseError("vertex id out of range", line_no, Unit::line);
            if (u == v)
                throw ParseError("self-loop", line_no, Unit::line);
            edges.emplace_back(static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1));
        }
        else {
            throw ParseError("unknown line type", line_no, Unit::line);
        }
    }
    if (!order)
        throw ParseError("missing problem line", line_no, Unit::line);
    // .col files frequently list an edge in both directions
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(*order, std::move(edges));
}

enum class GraphFormat { graph6, edge_list, dimacs };

inline GraphFormat format_from_extension(const std::filesystem::path& path)
{
    auto ext = path.extension().string();
    if (ext == ".g6")
        return GraphFormat::graph6;
    if (ext == ".col")
        return GraphFormat::dimacs;
    if (ext == ".txt" || ext == ".edges")
        return GraphFormat::edge_list;
    throw std::invalid_argument("cannot infer graph format from extension '" + ext + "' (use .g6, .col or .txt)");
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt)
{
    switch (fmt) {
    case GraphFormat::graph6: {
        auto line = text.substr(0, text.find('\n'));
        return parse_graph6(line);
    }
    case GraphFormat::dimacs:
        return parse_dimacs(text);
    case GraphFormat::edge_list:
        break;
    }
    return parse_edge_list(text);
}

inline Graph load_graph_file(const std::filesystem::path& path)
{
    auto fmt = format_from_extension(path);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), fmt);
}

} // namespace czi
