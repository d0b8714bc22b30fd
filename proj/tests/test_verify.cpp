#include <gtest/gtest.h>

#include <set>

#include <czi/verify.hpp>

using namespace czi;
using namespace czi::verify;

namespace {

CorpusConfig small_config()
{
    CorpusConfig c;
    c.max_order = 6;
    c.random_graphs = 40;
    c.random_trees = 20;
    c.monotonicity_graphs = 10;
    c.thorn_max_order = 9;
    return c;
}

const ClaimResult* find(const std::vector<ClaimResult>& rs, const std::string& id, const std::string& instance)
{
    for (const auto& r : rs)
        if (r.claim_id == id && r.instance == instance)
            return &r;
    return nullptr;
}

} // namespace

TEST(Registry, IdsAreUnique)
{
    std::set<std::string> ids;
    for (const auto& c : registry())
        EXPECT_TRUE(ids.insert(c.id).second) << c.id;
}

TEST(Registry, CoversEveryNumberedStatement)
{
    const char* statements[] = {"obs-i",   "obs-ii",  "obs-iii", "obs-iv", "obs-v",   "obs-vi",  "obs-vii",
                                "obs-viii", "obs-ix", "obs-x",   "obs-xi", "obs-xii", "prop-2.1", "thm-2.2",
                                "cor-2.3", "thm-3.1", "lem-3.2", "prop-3.3", "thm-3.4", "thm-4.2", "sec-4",
                                "thm-4.4", "prop-4.6"};
    for (auto s : statements) {
        bool found = false;
        for (const auto& c : registry())
            found = found || c.id == s || c.id.rfind(std::string(s) + "-", 0) == 0;
        EXPECT_TRUE(found) << s;
    }
}

TEST(Selection, GroupsRangesAndErrors)
{
    EXPECT_EQ(select_claims("obs-i..obs-xii").size(), 12u);
    auto lem = select_claims("lem-3.2");
    EXPECT_EQ(lem.size(), 8u);
    EXPECT_EQ(select_claims("all").size(), registry().size());
    EXPECT_EQ(select_claims("obs-i,obs-i,obs-ii").size(), 2u);
    EXPECT_THROW(select_claims("nonsense"), UnknownClaim);
    EXPECT_THROW(select_claims("obs-xii..obs-i"), UnknownClaim);
    EXPECT_THROW(select_claims(""), UnknownClaim);
    // "obs-i" must not pull in obs-ii.. as a group
    EXPECT_EQ(select_claims("obs-i").size(), 1u);
}

TEST(Run, ObservationsAllVerify)
{
    auto rs = run_claims(small_config(), select_claims("obs-i..obs-xii"));
    ASSERT_EQ(rs.size(), 12u);
    for (const auto& r : rs)
        EXPECT_EQ(r.verdict, Verdict::verified) << r.claim_id << ": " << r.actual;
}

TEST(Run, FrozenDiscrepancies)
{
    auto rs = run_claims(small_config(), select_claims("lem-3.2,prop-3.3,obs-relations"));
    auto k22 = find(rs, "lem-3.2-ii-printed", "complete-multipartite:2,2");
    ASSERT_NE(k22, nullptr);
    EXPECT_EQ(k22->verdict, Verdict::counterexample);
    EXPECT_EQ(k22->expected, "sum n_i n_j (r-i)(r-j) = 0");
    EXPECT_EQ(k22->actual, "cm2_min = 8");
    auto k3 = find(rs, "prop-3.3-iii-printed", "complete-multipartite:1,1,1");
    ASSERT_NE(k3, nullptr);
    EXPECT_EQ(k3->verdict, Verdict::counterexample);
    EXPECT_EQ(k3->actual, "cm3_min=4 cm3_max=4");
    auto eq = find(rs, "lem-3.2-iii-eq", "complete-multipartite:1,1,2");
    ASSERT_NE(eq, nullptr);
    EXPECT_EQ(eq->verdict, Verdict::counterexample);
    auto obs = find(rs, "obs-relations", "obs-vi complete:2");
    ASSERT_NE(obs, nullptr);
    EXPECT_EQ(obs->verdict, Verdict::counterexample);
    for (const auto& r : rs)
        if (r.claim_id == "lem-3.2-ii-corrected" || r.claim_id == "prop-3.3-iii-pairsum") {
            EXPECT_EQ(r.verdict, Verdict::verified) << r.instance;
        }
}

TEST(Run, EveryCounterexampleHasARecheckableWitness)
{
    auto rs = run_claims(small_config());
    std::size_t counterexamples = 0;
    for (const auto& r : rs) {
        if (r.verdict != Verdict::counterexample)
            continue;
        ++counterexamples;
        ASSERT_TRUE(r.witness) << r.claim_id << " " << r.instance;
        EXPECT_TRUE(recheck_witness(*r.witness)) << r.claim_id << " " << r.instance;
    }
    EXPECT_GT(counterexamples, 0u);
    EXPECT_EQ(summarize(rs).must_hold_failures, 0u);
}

TEST(Run, ParallelMergeMatchesSerial)
{
    auto cfg = small_config();
    auto serial = report_json(cfg, run_claims(cfg)).dump();
    cfg.jobs = 4;
    auto parallel_results = run_claims(cfg);
    cfg.jobs = 1; // jobs is not part of the report
    EXPECT_EQ(report_json(cfg, parallel_results).dump(), serial);
}

TEST(Run, SeedChangesRandomCorporaOnly)
{
    auto a = small_config();
    auto b = a;
    b.seed = 99;
    auto ra = run_claims(a, select_claims("oracle-eq"));
    auto rb = run_claims(b, select_claims("oracle-eq"));
    EXPECT_EQ(ra.size(), rb.size());
    bool differ = false;
    for (std::size_t i = 0; i < ra.size(); ++i)
        differ = differ || ra[i].instance != rb[i].instance;
    EXPECT_TRUE(differ);
    EXPECT_EQ(run_claims(a, select_claims("obs-i"))[0].instance, run_claims(b, select_claims("obs-i"))[0].instance);
}

TEST(Run, ThornBeyondBudgetIsSkippedNotOmitted)
{
    auto cfg = small_config();
    cfg.thorn_max_order = 8;
    auto rs = run_claims(cfg, select_claims("thm-3.4-i"));
    EXPECT_EQ(rs.size(), 12u);
    auto r = find(rs, "thm-3.4-i", "thorn(complete:3;2)");
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->verdict, Verdict::skipped_budget);
}

TEST(Report, CsvHasOneRowPerResult)
{
    auto rs = run_claims(small_config(), select_claims("obs-i..obs-iii"));
    auto csv = report_csv(rs);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(rs.size() + 1));
}
