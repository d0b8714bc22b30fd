#include <gtest/gtest.h>

#include <czi/corpus.hpp>
#include <czi/generators.hpp>
#include <czi/graph.hpp>
#include <czi/io.hpp>

using namespace czi;

TEST(Graph, RejectsLoopsDuplicatesAndRange)
{
    EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
}

TEST(Graph, AdjacencyIsSymmetricAndSizeCounts)
{
    Graph g(4, {{2, 0}, {1, 2}, {3, 2}});
    EXPECT_EQ(g.size(), 3u);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    EXPECT_FALSE(g.adjacent(2, 2));
    std::size_t ordered_pairs = 0;
    for (Vertex v = 0; v < 4; ++v)
        ordered_pairs += g.degree(v);
    EXPECT_EQ(ordered_pairs, 2 * g.size());
    EXPECT_EQ(g.non_edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 3}}));
}

TEST(Graph, Degree)
{
    auto k4 = generate(FamilySpec::complete(4));
    for (Vertex v = 0; v < 4; ++v)
        EXPECT_EQ(degree(k4, v), 3u);
    auto star = generate(FamilySpec::star(5));
    EXPECT_EQ(degree(star, 0), 4u);
    EXPECT_EQ(degree(generate(FamilySpec::path(3)), 1), 2u);
    EXPECT_THROW(degree(k4, 4), GraphError);
}

TEST(Graph, ConnectivityAndTrees)
{
    EXPECT_TRUE(generate(FamilySpec::path(5)).is_tree());
    EXPECT_FALSE(generate(FamilySpec::cycle(5)).is_tree());
    EXPECT_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
    EXPECT_TRUE(Graph(1, {}).is_connected());
}

TEST(Graph6, DecodesKnownStrings)
{
    auto k5 = parse_graph6("D~{");
    EXPECT_EQ(k5.order(), 5u);
    EXPECT_EQ(k5.size(), 10u);
    auto k1 = parse_graph6("@");
    EXPECT_EQ(k1.order(), 1u);
    EXPECT_EQ(k1.size(), 0u);
    auto k3 = parse_graph6("Bw");
    EXPECT_EQ(k3.order(), 3u);
    EXPECT_EQ(k3.size(), 3u);
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), k3);
}

TEST(Graph6, ErrorsCarryByteOffsets)
{
    try {
        parse_graph6("D~");
        FAIL() << "truncated input accepted";
    }
    catch (const ParseError& e) {
        EXPECT_EQ(e.unit(), ParseError::Unit::byte_offset);
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_graph6("B\x7f"), ParseError);
    EXPECT_THROW(parse_graph6("Bw?"), ParseError);
    EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(EdgeList, ParsesSpecExamples)
{
    auto p3 = parse_edge_list("0 1\n1 2");
    EXPECT_EQ(p3.order(), 3u);
    EXPECT_EQ(p3.size(), 2u);
    auto padded = parse_edge_list("n=4\n0 1");
    EXPECT_EQ(padded.order(), 4u);
    EXPECT_EQ(padded.size(), 1u);
    EXPECT_THROW(parse_edge_list("0 1\n1 0"), ParseError);
}

TEST(EdgeList, ErrorsCarryLineNumbers)
{
    try {
        parse_edge_list("# comment\n0 1\n2 2\n");
        FAIL() << "self-loop accepted";
    }
    catch (const ParseError& e) {
        EXPECT_EQ(e.unit(), ParseError::Unit::line);
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_edge_list("0 x"), ParseError);
    EXPECT_THROW(parse_edge_list("n=3\n0 3"), ParseError);
}

TEST(Dimacs, ParsesOneBasedEdges)
{
    auto g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(g, parse_graph6("Bw"));
    EXPECT_THROW(parse_dimacs("e 1 2\n"), ParseError);
    EXPECT_THROW(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
}

TEST(Formats, ExtensionDetection)
{
    EXPECT_EQ(format_from_extension("a.g6"), GraphFormat::graph6);
    EXPECT_EQ(format_from_extension("a.col"), GraphFormat::dimacs);
    EXPECT_EQ(format_from_extension("a.txt"), GraphFormat::edge_list);
    EXPECT_THROW(format_from_extension("a.xyz"), std::invalid_argument);
}

TEST(Generators, FamilySizes)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(generate(FamilySpec::complete(n)).size(), n * (n - 1) / 2);
        EXPECT_EQ(generate(FamilySpec::path(n)).size(), n - 1);
    }
    for (auto parts : std::vector<std::vector<std::size_t>>{{1, 1, 1}, {2, 3}, {1, 2, 3, 3}}) {
        std::size_t expect = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                expect += parts[i] * parts[j];
        EXPECT_EQ(generate(FamilySpec::complete_multipartite(parts)).size(), expect);
    }
    EXPECT_EQ(generate(FamilySpec::complete_multipartite({1, 1, 1})), generate(FamilySpec::complete(3)));
}

TEST(Generators, ThornArithmetic)
{
    std::vector<FamilySpec> bases;
    for (std::size_t n = 1; n <= 8; ++n) {
        bases.push_back(FamilySpec::path(n));
        bases.push_back(FamilySpec::complete(n));
        if (n >= 3)
            bases.push_back(FamilySpec::cycle(n));
    }
    for (const auto& b : bases) {
        auto base = generate(b);
        for (std::size_t m = 0; m <= 3; ++m) {
            auto g = generate(FamilySpec::thorn(b, m));
            EXPECT_EQ(g.order(), base.order() * (1 + m));
            EXPECT_EQ(g.size(), base.size() + base.order() * m);
            for (Vertex v = 0; v < base.order(); ++v) // contiguous pendant block of vertex v
                for (std::size_t k = 0; k < m; ++k)
                    EXPECT_TRUE(g.adjacent(v, static_cast<Vertex>(base.order() + v * m + k)));
        }
    }
    EXPECT_EQ(generate(FamilySpec::thorn(FamilySpec::cycle(4), 0)), generate(FamilySpec::cycle(4)));
    auto p3 = generate(FamilySpec::thorn(FamilySpec::path(3), 2));
    EXPECT_EQ(p3.order(), 9u);
    EXPECT_EQ(p3.size(), 8u);
}

TEST(Generators, SpecGrammar)
{
    EXPECT_EQ(to_string(parse_family_spec("complete-multipartite:3,1,2")), "complete-multipartite:1,2,3");
    EXPECT_EQ(generate(parse_family_spec("thorn(cycle:4;1,0,1,0)")).order(), 6u);
    EXPECT_EQ(generate(parse_family_spec("complete-bipartite:2,3")).size(), 6u);
    EXPECT_THROW(parse_family_spec("thorn(thorn(path:2;1);1)"), std::invalid_argument);
    EXPECT_THROW(parse_family_spec("cycle:2"), std::invalid_argument);
    EXPECT_THROW(parse_family_spec("wheel:5"), std::invalid_argument);
    EXPECT_THROW(parse_family_spec("path:x"), std::invalid_argument);
}

TEST(Generators, RandomTreesAndGraphsAreSeeded)
{
    auto a = corpus::random_connected(7, 1, 20, 2, 9);
    auto b = corpus::random_connected(7, 1, 20, 2, 9);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].graph, b[i].graph);
        EXPECT_TRUE(a[i].graph.is_connected());
    }
    for (const auto& t : corpus::random_trees(3, 2, 30, 4, 10))
        EXPECT_TRUE(t.graph.is_tree());
}

TEST(RoundTrip, EdgeListAndGraph6UpToOrder12)
{
    for (const auto& e : corpus::families_up_to(12)) {
        EXPECT_EQ(parse_edge_list(to_edge_list(e.graph)), e.graph) << e.label;
        EXPECT_EQ(parse_graph6(to_graph6(e.graph)), e.graph) << e.label;
        EXPECT_EQ(to_graph6(parse_graph6(to_graph6(e.graph))), to_graph6(e.graph));
    }
}

TEST(Corpus, ConnectedBipartiteCountsCoverSmallOrders)
{
    // every connected bipartite graph on 4 vertices is P4, K_{1,3} or C4
    std::size_t count = 0;
    corpus::for_each_connected_bipartite(4, [&](const Graph& g) {
        EXPECT_TRUE(g.is_connected());
        ++count;
    });
    EXPECT_GE(count, 3u);
}
