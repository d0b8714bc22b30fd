#include <gtest/gtest.h>

#include <czi/corpus.hpp>
#include <czi/generators.hpp>
#include <czi/io.hpp>
#include <czi/stability.hpp>

using namespace czi;

namespace {

Graph family(const char* spec) { return generate(parse_family_spec(spec)); }

} // namespace

TEST(Stability, SectionExamples)
{
    EXPECT_FALSE(is_chromatically_stable(family("complete-bipartite:2,3")));
    EXPECT_TRUE(is_chromatically_unstable(family("complete-bipartite:2,3")));
    for (std::size_t n = 3; n <= 8; ++n) {
        EXPECT_TRUE(is_chromatically_unstable(generate(FamilySpec::star(n)))) << n;
        const Edge e[] = {{0, 1}};
        EXPECT_TRUE(is_chromatically_unstable(generate(FamilySpec::complete(n)).without_edges(e))) << n;
    }
    auto k5 = analyze_stability(family("complete:5"));
    EXPECT_TRUE(k5.perfectly_stable);
    EXPECT_FALSE(k5.rho);
    EXPECT_FALSE(is_chromatically_unstable(family("complete:5")));
}

TEST(Stability, CyclesUnderExistentialReading)
{
    EXPECT_TRUE(is_chromatically_unstable(family("cycle:4")));
    for (std::size_t n = 5; n <= 9; ++n)
        EXPECT_TRUE(is_chromatically_stable(generate(FamilySpec::cycle(n)))) << n;
}

TEST(Stability, RejectsOrderBelowTwo)
{
    EXPECT_THROW(is_chromatically_stable(family("complete:1")), std::invalid_argument);
    EXPECT_THROW(analyze_stability(family("complete:1")), std::invalid_argument);
}

TEST(Stability, BipartiteCharacterizationExhaustive)
{
    for (std::size_t n = 2; n <= 7; ++n)
        corpus::for_each_connected_bipartite(n, [&](const Graph& g) {
            EXPECT_EQ(is_chromatically_stable(g), !is_complete_bipartite(g)) << to_graph6(g);
        });
}

TEST(Rho, ClosedFormExamples)
{
    EXPECT_EQ(stability_number_bipartite(family("path:4")), 1);
    EXPECT_EQ(stability_number_bipartite(family("cycle:6")), 3);
    EXPECT_EQ(stability_number_bipartite(family("path:5")), 2);
    EXPECT_THROW(stability_number_bipartite(family("star:4")), std::invalid_argument);
    EXPECT_THROW(stability_number_bipartite(family("cycle:5")), std::invalid_argument);
}

TEST(Rho, BruteForceExamples)
{
    EXPECT_EQ(stability_number_bruteforce(family("path:4")).rho, 1u);
    EXPECT_EQ(stability_number_bruteforce(family("cycle:6")).rho, 3u);
    EXPECT_EQ(stability_number_bruteforce(family("path:5")).rho, 2u);
    EXPECT_THROW(stability_number_bruteforce(family("star:4")), std::invalid_argument);
}

TEST(Rho, AddedSetIsAWitness)
{
    auto bf = stability_number_bruteforce(family("cycle:6"));
    ASSERT_TRUE(bf.rho);
    EXPECT_EQ(bf.added.size(), *bf.rho);
    EXPECT_TRUE(is_chromatically_unstable(family("cycle:6").with_edges(bf.added)));
}

TEST(Rho, ReadingsDivergeOnDoubleStar)
{
    // Joining the two centers to every vertex gives K_{1,1,5}: five added
    // edges, chi rises to 3, and the result is unstable.
    auto g = parse_graph6("FFG`?");
    EXPECT_EQ(stability_number_bipartite(g), 6);
    auto any = stability_number_bruteforce(g, {}, RhoReading::unrestricted);
    EXPECT_EQ(any.rho, 5u);
    EXPECT_EQ(chromatic_number(g.with_edges(any.added)), 3u);
    EXPECT_EQ(stability_number_bruteforce(g, {}, RhoReading::chi_preserving).rho, 6u);
}

TEST(Rho, ChiPreservingMatchesClosedFormUpToSeven)
{
    for (std::size_t n = 3; n <= 7; ++n)
        corpus::for_each_connected_bipartite(n, [&](const Graph& g) {
            if (is_complete_bipartite(g))
                return;
            auto bf = stability_number_bruteforce(g, {}, RhoReading::chi_preserving);
            ASSERT_TRUE(bf.rho);
            EXPECT_EQ(static_cast<std::int64_t>(*bf.rho), stability_number_bipartite(g)) << to_graph6(g);
        });
}

TEST(Rho, BudgetExhaustionLeavesRhoEmpty)
{
    StabilitySearchBudget tiny;
    tiny.max_subsets = 2;
    auto bf = stability_number_bruteforce(family("cycle:6"), tiny);
    EXPECT_FALSE(bf.rho);
    auto r = analyze_stability(family("cycle:6"), tiny);
    EXPECT_EQ(r.rho, 3);
    EXPECT_TRUE(r.rho_budget_exhausted);
}

TEST(Analyze, Reports)
{
    auto p4 = analyze_stability(family("path:4"));
    EXPECT_TRUE(p4.stable);
    EXPECT_EQ(p4.rho, 1);
    EXPECT_EQ(p4.rho_bruteforce, 1);
    EXPECT_EQ(p4.method, RhoMethod::closed_form);
    auto c5 = analyze_stability(family("cycle:5"));
    EXPECT_TRUE(c5.stable);
    EXPECT_EQ(c5.method, RhoMethod::brute_force);
    ASSERT_TRUE(c5.rho);
    auto k23 = analyze_stability(family("complete-bipartite:2,3"));
    EXPECT_FALSE(k23.stable);
    EXPECT_FALSE(k23.rho);
    auto unrestricted = analyze_stability(family("path:4"), {}, RhoReading::unrestricted);
    EXPECT_EQ(unrestricted.method, RhoMethod::brute_force);
    EXPECT_EQ(unrestricted.rho, 1);
}
