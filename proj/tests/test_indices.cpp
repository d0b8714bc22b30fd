#include <gtest/gtest.h>

#include <czi/corpus.hpp>
#include <czi/generators.hpp>
#include <czi/indices.hpp>
#include <czi/oracle.hpp>

using namespace czi;

namespace {

Graph family(const char* spec) { return generate(parse_family_spec(spec)); }

} // namespace

TEST(Classical, Values)
{
    auto p3 = family("path:3");
    EXPECT_EQ(classical_m1(p3), 6);
    EXPECT_EQ(classical_m2(p3), 4);
    EXPECT_EQ(classical_m3(p3), 2);
    auto k4 = family("complete:4");
    EXPECT_EQ(classical_m1(k4), 36);
    EXPECT_EQ(classical_m2(k4), 54);
    EXPECT_EQ(classical_m3(k4), 0);
}

TEST(Chromatic, SingleColoringValues)
{
    auto k3 = family("complete:3");
    EXPECT_EQ(chromatic_m1(k3, Coloring({1, 2, 3})), 14);
    EXPECT_EQ(chromatic_m2(k3, Coloring({1, 2, 3})), 11);
    EXPECT_EQ(chromatic_m3(k3, Coloring({1, 2, 3})), 4);
    auto p3 = family("path:3");
    EXPECT_EQ(chromatic_m1(p3, Coloring({1, 2, 1})), 6);
    EXPECT_EQ(chromatic_m1(p3, Coloring({2, 1, 2})), 9);
    EXPECT_EQ(chromatic_m3(p3, Coloring({2, 1, 2})), 2);
    EXPECT_EQ(chromatic_m2(family("complete:2"), Coloring({1, 2})), 2);
    EXPECT_EQ(chromatic_m3(family("complete:2"), Coloring({2, 1})), 1);
    EXPECT_EQ(chromatic_m2(family("complete:4"), Coloring({1, 2, 3, 4})), 35);
}

TEST(Chromatic, RejectsImproperColorings)
{
    auto k3 = family("complete:3");
    EXPECT_THROW(chromatic_m1(k3, Coloring({1, 1, 2})), ImproperColoring);
    EXPECT_THROW(chromatic_m2(k3, Coloring({1, 1, 2})), ImproperColoring);
    EXPECT_THROW(chromatic_m3(k3, Coloring({1, 1, 2})), ImproperColoring);
}

TEST(Extrema, FrozenExamples)
{
    auto star = chromatic_extrema(family("star:5"), 1, Semantics::all);
    EXPECT_EQ(star.min, 8);
    EXPECT_EQ(star.max, 17);
    auto c5 = chromatic_extrema(family("cycle:5"), 1, Semantics::all);
    EXPECT_EQ(c5.min, 19);
    EXPECT_EQ(c5.max, 27);
    auto p4 = full_report(family("path:4"), Semantics::all, false);
    EXPECT_EQ(p4.cm_min(1), 10);
    EXPECT_EQ(p4.cm_max(1), 10);
    auto t8 = chromatic_extrema(generate(FamilySpec::caterpillar({2, 1, 2})), 2, Semantics::all); // 7 edges, each 1*2
    EXPECT_EQ(t8.min, 14);
    EXPECT_EQ(t8.max, 14);
}

TEST(Extrema, WitnessesEvaluateToTheReportedValue)
{
    for (const auto& e : corpus::families_up_to(7)) {
        auto set = all_chromatic_extrema(e.graph, Semantics::all);
        for (int k = 1; k <= 3; ++k) {
            EXPECT_EQ(chromatic_index(e.graph, set[k].min_witness, k), set[k].min) << e.label;
            EXPECT_EQ(chromatic_index(e.graph, set[k].max_witness, k), set[k].max) << e.label;
        }
    }
}

TEST(Extrema, MatchesNaiveOracle)
{
    auto entries = corpus::families_up_to(7);
    auto rnd = corpus::random_connected(5, 17, 120, 2, 7);
    entries.insert(entries.end(), rnd.begin(), rnd.end());
    for (const auto& e : entries) {
        auto set = all_chromatic_extrema(e.graph, Semantics::all);
        auto ref = oracle::naive_extrema(e.graph);
        ASSERT_EQ(set.status, ExtremaStatus::exact);
        EXPECT_EQ(set.chi, ref.chi);
        for (int k = 1; k <= 3; ++k) {
            const auto& r = ref.index[static_cast<std::size_t>(k - 1)];
            EXPECT_EQ(set[k].min, r.min) << e.label << " M" << k;
            EXPECT_EQ(set[k].max, r.max) << e.label << " M" << k;
            EXPECT_EQ(set[k].min_witness.assignment(), r.min_witness) << e.label;
            EXPECT_EQ(set[k].max_witness.assignment(), r.max_witness) << e.label;
        }
    }
}

TEST(Extrema, LabelReversalDuality)
{
    // Reversing the labels of the M1 minimizer attains the permutation maximum.
    for (const auto& e : corpus::families_up_to(7)) {
        auto set = all_chromatic_extrema(e.graph, Semantics::permutation);
        auto reversed = set[1].min_witness.reversed();
        EXPECT_EQ(chromatic_m1(e.graph, reversed), set[1].max) << e.label;
    }
}

TEST(Extrema, M3InvariantUnderReversal)
{
    for (const auto& e : corpus::random_connected(2, 3, 40, 2, 7))
        for (const auto& c : enumerate_min_colorings(e.graph, Semantics::all))
            EXPECT_EQ(chromatic_m3(e.graph, c), chromatic_m3(e.graph, c.reversed()));
}

TEST(Extrema, PermutationIsContainedInAll)
{
    for (const auto& e : corpus::random_connected(4, 4, 40, 2, 7)) {
        auto all = all_chromatic_extrema(e.graph, Semantics::all);
        auto perm = all_chromatic_extrema(e.graph, Semantics::permutation);
        for (int k = 1; k <= 3; ++k) {
            EXPECT_LE(all[k].min, perm[k].min);
            EXPECT_GE(all[k].max, perm[k].max);
        }
    }
}

TEST(Extrema, BudgetFallsBackToPermutation)
{
    ExtremaBudget tiny;
    tiny.max_colorings = 3;
    auto set = all_chromatic_extrema(family("complete:4"), Semantics::all, tiny);
    EXPECT_EQ(set.status, ExtremaStatus::bounds_only);
    EXPECT_EQ(set.semantics_used, Semantics::permutation);
    ExtremaBudget small_order;
    small_order.max_order = 3;
    EXPECT_EQ(all_chromatic_extrema(family("path:5"), Semantics::all, small_order).status, ExtremaStatus::bounds_only);
    EXPECT_EQ(all_chromatic_extrema(family("path:5"), Semantics::permutation, small_order).status, ExtremaStatus::exact);
}

TEST(Report, PaperCompatDefaultsOnlyForOrderOne)
{
    auto k1 = family("complete:1");
    auto on = full_report(k1, Semantics::all, true);
    EXPECT_TRUE(on.paper_compat_defaults_applied);
    EXPECT_EQ(on.m1, 0);
    EXPECT_EQ(on.cm_min(1), 1);
    EXPECT_EQ(on.cm_min(2), 0);
    EXPECT_EQ(on.cm_min(3), 1);
    EXPECT_EQ(on.cm_max(3), 1);
    auto off = full_report(k1, Semantics::all, false);
    EXPECT_FALSE(off.paper_compat_defaults_applied);
    EXPECT_EQ(off.cm_min(3), 0);
    auto empty = full_report(Graph(3, {}), Semantics::all, true);
    EXPECT_FALSE(empty.paper_compat_defaults_applied);
    EXPECT_EQ(empty.cm_min(3), 0);
}

TEST(Report, DisconnectedInputsAreFlagged)
{
    auto r = full_report(Graph(4, {{0, 1}, {2, 3}}), Semantics::all, false);
    EXPECT_FALSE(r.connected);
    EXPECT_EQ(r.chi, 2u);
    EXPECT_EQ(r.cm_min(2), 4);
}
