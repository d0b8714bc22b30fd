#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "corpus.hpp"
#include "families.hpp"
#include "generators.hpp"
#include "indices.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "stability.hpp"

// Claim registry and runner. Each claim is data: an id, an instance
// generator and a predicate evaluated per instance. Claims flagged
// must_hold are the ones the tool asserts; the remaining claims record
// whatever enumeration finds, including counterexamples.

namespace czi::verify {

enum class Verdict { verified, counterexample, skipped_budget };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::counterexample: return "counterexample";
    case Verdict::skipped_budget: return "skipped_budget";
    }
    return "?";
}

/// Evidence attached to a result. A coloring witness evaluates chromatic
/// index `index` on `graph6` to `value`. An edge witness is either a
/// stabilizing non-edge (adding it keeps chi) or a destabilizing edge set of
/// size `value` (adding it leaves a chromatically unstable graph).
struct Witness {
    enum class Kind { coloring, stabilizing_edges, destabilizing_edges };
    Kind kind = Kind::coloring;
    std::string graph6;
    std::vector<Color> coloring;
    int index = 0;
    Value value = 0;
    std::vector<Edge> edges;
};

struct ClaimResult {
    std::string claim_id;
    std::string instance;
    std::string expected;
    std::string actual;
    Verdict verdict = Verdict::verified;
    bool must_hold = false;
    std::optional<Witness> witness;
};

struct CorpusConfig {
    std::size_t max_order = 8;
    std::uint64_t seed = 0;
    std::size_t random_graphs = 200;      // oracle corpus
    std::size_t random_trees = 100;       // tree suite
    std::size_t monotonicity_graphs = 40; // dominance and subgraph claims
    std::size_t oracle_max_order = 7;
    std::size_t bipartite_max_order = 8;
    std::size_t rho_max_order = 7;
    std::size_t tree_min_order = 4;
    std::size_t tree_max_order = 10;
    std::size_t thorn_max_order = 12;
    std::size_t multipartite_max_parts = 4;
    std::size_t multipartite_max_part = 3;
    ExtremaBudget extrema;
    StabilitySearchBudget stability;
    unsigned jobs = 1;
};

struct Instance {
    std::string label;
    Graph graph;
    std::vector<std::size_t> params;
    std::optional<Graph> other;
};

struct Outcome {
    std::string expected;
    std::string actual;
    Verdict verdict = Verdict::verified;
    std::optional<Witness> witness;
};

/// Shared state for one run: configuration plus a cache of enumerated
/// reports keyed by graph6.
class Context {
public:
    explicit Context(CorpusConfig cfg) : config(std::move(cfg)) {}

    const CorpusConfig config;

    std::shared_ptr<const IndexReport> report(const Graph& g)
    {
        auto key = to_graph6(g);
        {
            std::lock_guard lock(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end())
                return it->second;
        }
        auto r = std::make_shared<const IndexReport>(full_report(g, Semantics::all, false, config.extrema));
        std::lock_guard lock(mu_);
        return cache_.emplace(key, std::move(r)).first->second;
    }

private:
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const IndexReport>> cache_;
};

struct Claim {
    std::string id;
    std::string statement;
    bool must_hold = false;
    std::function<std::vector<Instance>(const CorpusConfig&)> instances;
    std::function<Outcome(const Instance&, Context&)> check;
};

namespace detail {

inline std::string name(int index, const char* which) { return "cm" + std::to_string(index) + "_" + which; }

inline Witness coloring_witness(const Graph& g, const Coloring& c, int index)
{
    Witness w;
    w.kind = Witness::Kind::coloring;
    w.graph6 = to_graph6(g);
    w.coloring = c.assignment();
    w.index = index;
    w.value = chromatic_index(g, c, index);
    return w;
}

inline Witness edge_witness(const Graph& g, Witness::Kind kind, std::vector<Edge> edges)
{
    Witness w;
    w.kind = kind;
    w.graph6 = to_graph6(g);
    w.value = static_cast<Value>(edges.size());
    w.edges = std::move(edges);
    return w;
}

inline Instance family_instance(const FamilySpec& spec) { return {to_string(spec), generate(spec), {}, {}}; }

inline std::vector<Instance> to_instances(std::vector<corpus::Entry> entries)
{
    std::vector<Instance> out;
    for (auto& e : entries)
        out.push_back({std::move(e.label), std::move(e.graph), {}, {}});
    return out;
}

/// Outcome for "closed form == enumerated extremum".
inline Outcome compare_extremum(const Graph& g, const IndexReport& r, int index, bool want_max, Value formula,
                                const std::string& formula_name)
{
    const auto& e = r.extrema[index];
    Value enumerated = want_max ? e.max : e.min;
    Outcome o;
    o.expected = formula_name + " = " + std::to_string(formula);
    o.actual = name(index, want_max ? "max" : "min") + " = " + std::to_string(enumerated);
    if (r.extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    if (enumerated != formula) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(g, want_max ? e.max_witness : e.min_witness, index);
    }
    return o;
}

inline std::string both(const IndexReport& r, int k)
{
    return name(k, "min") + "=" + std::to_string(r.cm_min(k)) + " " + name(k, "max") + "=" + std::to_string(r.cm_max(k));
}

inline Value classical(const IndexReport& r, int k) { return k == 1 ? r.m1 : (k == 2 ? r.m2 : r.m3); }

inline bool relation_holds(char rel, Value a, Value b)
{
    switch (rel) {
    case '<': return a < b;
    case '>': return a > b;
    case '=': return a == b;
    }
    return false;
}

// --- corpora ---------------------------------------------------------------

inline std::vector<Instance> oracle_corpus(const CorpusConfig& c)
{
    auto limit = std::min(c.oracle_max_order, c.max_order);
    auto out = to_instances(corpus::families_up_to(limit));
    auto rnd = to_instances(corpus::random_connected(c.seed, 1, c.random_graphs, std::min<std::size_t>(2, limit), limit));
    out.insert(out.end(), std::make_move_iterator(rnd.begin()), std::make_move_iterator(rnd.end()));
    return out;
}

inline std::vector<Instance> tree_corpus(const CorpusConfig& c)
{
    std::vector<Instance> out;
    for (auto n = c.tree_min_order; n <= c.tree_max_order; ++n)
        out.push_back(family_instance(FamilySpec::path(n)));
    for (auto n = c.tree_min_order; n <= c.tree_max_order; ++n)
        out.push_back(family_instance(FamilySpec::star(n)));
    const std::vector<std::vector<std::size_t>> legs = {
        {1, 1}, {2, 1}, {1, 1, 1}, {2, 0, 2}, {1, 2, 1}, {3, 1, 2}, {1, 1, 1, 1}, {0, 3, 0, 2}, {2, 2, 2}, {1, 0, 1, 0, 1}};
    for (const auto& l : legs) {
        auto spec = FamilySpec::caterpillar(l);
        auto n = generate(spec).order();
        if (n >= c.tree_min_order && n <= c.tree_max_order)
            out.push_back(family_instance(spec));
    }
    auto rnd = to_instances(corpus::random_trees(c.seed, 2, c.random_trees, c.tree_min_order, c.tree_max_order));
    out.insert(out.end(), std::make_move_iterator(rnd.begin()), std::make_move_iterator(rnd.end()));
    return out;
}

inline std::vector<Instance> complete_corpus(const CorpusConfig& c)
{
    std::vector<Instance> out;
    for (std::size_t n = 4; n <= c.max_order; ++n)
        out.push_back(family_instance(FamilySpec::complete(n)));
    return out;
}

inline std::vector<Instance> dominance_corpus(const CorpusConfig& c)
{
    std::vector<Instance> out;
    if (c.max_order < 4)
        return out;
    for (auto& e : corpus::random_connected(c.seed, 3, c.monotonicity_graphs, 4, c.max_order))
        if (!e.graph.is_complete())
            out.push_back({std::move(e.label), std::move(e.graph), {}, {}});
    return out;
}

/// Pairs (G, G') with G' a connected proper subgraph of G: edges are
/// dropped while connectivity allows it; a tree loses a leaf instead.
inline std::vector<Instance> subgraph_corpus(const CorpusConfig& c)
{
    std::vector<Instance> out;
    if (c.max_order < 4)
        return out;
    auto rng = corpus::stream(c.seed, 4);
    for (auto& e : corpus::random_connected(c.seed, 5, c.monotonicity_graphs, 4, c.max_order)) {
        const Graph& g = e.graph;
        Graph sub = g;
        if (!g.is_tree()) {
            auto target = 1 + uniform_below(rng, g.size() - (g.order() - 1));
            std::size_t removed = 0;
            auto candidates = g.edges();
            while (removed < target && !candidates.empty()) {
                auto pick = uniform_below(rng, candidates.size());
                Edge edge = candidates[pick];
                candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
                const Edge drop[] = {edge};
                auto trial = sub.without_edges(drop);
                if (trial.is_connected()) {
                    sub = std::move(trial);
                    ++removed;
                }
            }
        }
        else {
            Vertex leaf = 0;
            while (g.degree(leaf) != 1)
                ++leaf;
            std::vector<Edge> kept;
            auto relabel = [&](Vertex v) { return v > leaf ? v - 1 : v; };
            for (const auto& [u, v] : g.edges())
                if (u != leaf && v != leaf)
                    kept.emplace_back(relabel(u), relabel(v));
            sub = Graph(g.order() - 1, std::move(kept));
        }
        auto label = e.label + " sub g6:" + to_graph6(sub);
        out.push_back({std::move(label), g, {}, std::move(sub)});
    }
    return out;
}

inline std::vector<Instance> multipartite_corpus(const CorpusConfig& c)
{
    std::vector<Instance> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t min_part, std::size_t total) {
        if (cur.size() >= 2) {
            auto spec = FamilySpec::complete_multipartite(cur);
            out.push_back({to_string(spec), generate(spec), cur, {}});
        }
        if (cur.size() == c.multipartite_max_parts)
            return;
        for (auto p = min_part; p <= c.multipartite_max_part && total + p <= c.max_order; ++p) {
            cur.push_back(p);
            rec(p, total + p);
            cur.pop_back();
        }
    };
    rec(1, 0);
    return out;
}

inline std::vector<Instance> equal_multipartite_corpus(const CorpusConfig& c)
{
    std::vector<Instance> out;
    for (std::size_t r = 2; r <= c.multipartite_max_parts; ++r)
        for (std::size_t n = 1; n <= c.multipartite_max_part; ++n) {
            if (n * r > c.max_order)
                continue;
            auto spec = FamilySpec::complete_multipartite(std::vector<std::size_t>(r, n));
            out.push_back({to_string(spec), generate(spec), {n, r}, {}});
        }
    return out;
}

inline std::vector<Instance> thorn_corpus(const CorpusConfig&)
{
    std::vector<Instance> out;
    const FamilySpec bases[] = {FamilySpec::path(4), FamilySpec::cycle(4), FamilySpec::complete(3), FamilySpec::star(4)};
    for (const auto& base : bases)
        for (std::size_t m = 0; m <= 2; ++m) {
            auto spec = FamilySpec::thorn(base, m);
            out.push_back({to_string(spec), generate(spec), {m}, generate(base)});
        }
    return out;
}

inline std::vector<Instance> order_range(std::size_t lo, std::size_t hi)
{
    std::vector<Instance> out;
    for (auto n = lo; n <= hi; ++n)
        out.push_back({"connected bipartite graphs of order " + std::to_string(n), Graph(1, {}), {n}, {}});
    return out;
}

// --- predicates ------------------------------------------------------------

struct Observation {
    const char* id;
    const char* family;
    int index;
    Value min, max;
    char rel_min, rel_max;
    Value classical;
    bool compat;
};

inline constexpr Observation observations[] = {
    {"obs-i", "complete:1", 1, 1, 1, '>', '>', 0, false},
    {"obs-ii", "complete:2", 1, 5, 5, '>', '>', 2, false},
    {"obs-iii", "path:3", 1, 6, 9, '=', '>', 6, false},
    {"obs-iv", "complete:3", 1, 14, 14, '>', '>', 12, false},
    {"obs-v", "complete:1", 2, 0, 0, '=', '=', 0, true},
    {"obs-vi", "complete:2", 2, 2, 2, '=', '=', 2, false},
    {"obs-vii", "path:3", 2, 4, 4, '=', '=', 4, false},
    {"obs-viii", "complete:3", 2, 11, 11, '<', '<', 12, false},
    {"obs-ix", "complete:1", 3, 1, 1, '>', '>', 0, true},
    {"obs-x", "complete:2", 3, 1, 1, '>', '>', 0, false},
    {"obs-xi", "path:3", 3, 2, 2, '=', '=', 2, false},
    {"obs-xii", "complete:3", 3, 4, 4, '>', '>', 0, false},
};

inline Outcome check_observation(const Observation& ob, const Instance& inst, Context& ctx)
{
    auto r = full_report(inst.graph, Semantics::all, ob.compat, ctx.config.extrema);
    const int k = ob.index;
    Outcome o;
    o.expected = name(k, "min") + "=" + std::to_string(ob.min) + " " + name(k, "max") + "=" + std::to_string(ob.max);
    o.actual = both(r, k);
    if (r.cm_min(k) != ob.min || r.cm_max(k) != ob.max) {
        o.verdict = Verdict::counterexample;
        bool min_bad = r.cm_min(k) != ob.min;
        o.witness = coloring_witness(inst.graph, min_bad ? r.extrema[k].min_witness : r.extrema[k].max_witness, k);
    }
    return o;
}

/// The printed comparison with the classical index next to each observation.
inline Outcome check_observation_relation(const Observation& ob, const Instance& inst, Context& ctx)
{
    auto r = full_report(inst.graph, Semantics::all, ob.compat, ctx.config.extrema);
    const int k = ob.index;
    const Value cl = classical(r, k);
    Outcome o;
    std::ostringstream ex;
    ex << name(k, "min") << ' ' << ob.rel_min << ' ' << ob.classical << "=M" << k << "; " << name(k, "max") << ' '
       << ob.rel_max << ' ' << ob.classical << "=M" << k;
    o.expected = ex.str();
    o.actual = both(r, k) + " M" + std::to_string(k) + "=" + std::to_string(cl);
    if (cl != ob.classical || !relation_holds(ob.rel_min, r.cm_min(k), cl) || !relation_holds(ob.rel_max, r.cm_max(k), cl)) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, r.extrema[k].min_witness, k);
    }
    return o;
}

inline Outcome check_complete(int k, const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    auto f = complete_graph_forms(static_cast<Value>(inst.graph.order()));
    const Value form = k == 1 ? f.cm1 : (k == 2 ? f.cm2 : f.cm3);
    const Value cl = k == 1 ? f.m1 : (k == 2 ? f.m2 : f.m3);
    const char rel = k == 3 ? '>' : '<';
    Outcome o;
    o.expected = name(k, "min") + "=" + name(k, "max") + "=" + std::to_string(form) + " " + rel + " " +
                 std::to_string(cl) + "=M" + std::to_string(k);
    o.actual = both(*r, k) + " M" + std::to_string(k) + "=" + std::to_string(classical(*r, k));
    if (r->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    bool ok = r->cm_min(k) == form && r->cm_max(k) == form && classical(*r, k) == cl &&
              relation_holds(rel, r->cm_max(k), cl) && relation_holds(rel, r->cm_min(k), cl);
    if (!ok) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, r->cm_min(k) != form ? r->extrema[k].min_witness
                                                                       : r->extrema[k].max_witness, k);
    }
    return o;
}

inline Outcome check_dominance(int k, const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    auto f = complete_graph_forms(static_cast<Value>(inst.graph.order()));
    const Value kn = k == 1 ? f.cm1 : (k == 2 ? f.cm2 : f.cm3);
    Outcome o;
    o.expected = name(k, "max") + " < " + std::to_string(kn) + " (value on K" + std::to_string(inst.graph.order()) + ")";
    o.actual = both(*r, k);
    if (r->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    if (!(r->cm_max(k) < kn)) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, r->extrema[k].max_witness, k);
    }
    return o;
}

inline Outcome check_subgraph(int k, const Instance& inst, Context& ctx)
{
    auto big = ctx.report(inst.graph);
    auto sub = ctx.report(*inst.other);
    Outcome o;
    o.expected = "sub " + name(k, "min") + " < " + std::to_string(big->cm_min(k)) + " and sub " + name(k, "max") +
                 " < " + std::to_string(big->cm_max(k));
    o.actual = "sub " + both(*sub, k);
    if (big->extrema.status != ExtremaStatus::exact || sub->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    bool min_ok = sub->cm_min(k) < big->cm_min(k);
    bool max_ok = sub->cm_max(k) < big->cm_max(k);
    if (!min_ok || !max_ok) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(*inst.other, min_ok ? sub->extrema[k].max_witness : sub->extrema[k].min_witness, k);
    }
    return o;
}

inline Outcome check_tree(int k, const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    auto f = tree_forms(static_cast<Value>(inst.graph.order()));
    Outcome o;
    o.actual = both(*r, k);
    if (r->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    bool ok = true;
    const Coloring* bad = nullptr;
    if (k == 1) {
        o.expected = std::to_string(f.cm1_lo) + " <= cm1_min <= cm1_max <= " + std::to_string(f.cm1_hi);
        if (r->cm_min(1) < f.cm1_lo) {
            ok = false;
            bad = &r->extrema[1].min_witness;
        }
        else if (r->cm_max(1) > f.cm1_hi) {
            ok = false;
            bad = &r->extrema[1].max_witness;
        }
    }
    else {
        const Value want = k == 2 ? f.cm2 : f.cm3;
        o.expected = name(k, "min") + "=" + name(k, "max") + "=" + std::to_string(want);
        if (r->cm_min(k) != want) {
            ok = false;
            bad = &r->extrema[k].min_witness;
        }
        else if (r->cm_max(k) != want) {
            ok = false;
            bad = &r->extrema[k].max_witness;
        }
    }
    if (!ok) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, *bad, k);
    }
    return o;
}

enum class MultiPart { cm1_max, cm1_min, cm2_max, cm2_min_printed, cm2_min_corrected, cm3_max, cm3_min };

inline Outcome check_multipartite(MultiPart part, const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    const auto& sizes = inst.params;
    auto printed = multipartite_forms(sizes, FormulaVariant::as_printed);
    auto corrected = multipartite_forms(sizes, FormulaVariant::corrected);
    switch (part) {
    case MultiPart::cm1_max: return compare_extremum(inst.graph, *r, 1, true, printed.cm1_max, "sum n_i i^2");
    case MultiPart::cm1_min:
        return compare_extremum(inst.graph, *r, 1, false, printed.cm1_min, "sum n_(i+1) (r-i)^2");
    case MultiPart::cm2_max: return compare_extremum(inst.graph, *r, 2, true, printed.cm2_max, "sum n_i n_j i j");
    case MultiPart::cm2_min_printed:
        return compare_extremum(inst.graph, *r, 2, false, printed.cm2_min, "sum n_i n_j (r-i)(r-j)");
    case MultiPart::cm2_min_corrected:
        return compare_extremum(inst.graph, *r, 2, false, corrected.cm2_min, "sum n_i n_j (r+1-i)(r+1-j)");
    case MultiPart::cm3_max: return compare_extremum(inst.graph, *r, 3, true, printed.cm3, "sum n_i n_j (j-i)");
    case MultiPart::cm3_min: return compare_extremum(inst.graph, *r, 3, false, printed.cm3, "sum n_i n_j (j-i)");
    }
    throw std::logic_error("unhandled multipartite part");
}

inline Outcome check_m3_constant(const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    Outcome o;
    o.expected = "cm3_min = cm3_max";
    o.actual = both(*r, 3);
    if (r->extrema.status != ExtremaStatus::exact)
        o.verdict = Verdict::skipped_budget;
    else if (r->cm_min(3) != r->cm_max(3)) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, r->extrema[3].min_witness, 3);
    }
    return o;
}

enum class EqualPart { cm1, cm2, cm3_printed, cm3_pairsum };

/// The closed form must equal every labeling's value, i.e. both extrema.
inline Outcome check_equal_multipartite(EqualPart part, const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    auto f = equal_multipartite_forms(static_cast<Value>(inst.params[0]), static_cast<Value>(inst.params[1]));
    int k = part == EqualPart::cm1 ? 1 : (part == EqualPart::cm2 ? 2 : 3);
    Value form = part == EqualPart::cm1 ? f.cm1
                 : part == EqualPart::cm2 ? f.cm2
                 : part == EqualPart::cm3_printed ? f.cm3_printed
                                                  : f.cm3_pairsum;
    Outcome o;
    o.expected = name(k, "min") + "=" + name(k, "max") + "=" + std::to_string(form);
    o.actual = both(*r, k);
    if (r->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    if (r->cm_min(k) != form || r->cm_max(k) != form) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, r->cm_min(k) != form ? r->extrema[k].min_witness
                                                                       : r->extrema[k].max_witness, k);
    }
    return o;
}

/// part 1..6 in the order cm1_min, cm1_max, cm2_min, cm2_max, cm3_min, cm3_max.
inline Outcome check_thorn(int part, FormulaVariant variant, const Instance& inst, Context& ctx)
{
    const Graph& base = *inst.other;
    auto base_report = ctx.report(base);
    auto in = thorn_inputs(*base_report, static_cast<Value>(inst.params[0]));
    auto f = thorn_forms(in, variant);
    const Value values[6] = {f.cm1_min, f.cm1_max, f.cm2_min, f.cm2_max, f.cm3_min, f.cm3_max};
    const int k = (part + 1) / 2;
    const bool want_max = part % 2 == 0;
    const Value formula = values[part - 1];
    if (inst.graph.order() > ctx.config.thorn_max_order) {
        Outcome o;
        o.expected = std::string("formula ") + to_string(variant) + " = " + std::to_string(formula);
        o.actual = "not enumerated (order " + std::to_string(inst.graph.order()) + ")";
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    auto r = ctx.report(inst.graph);
    return compare_extremum(inst.graph, *r, k, want_max, formula, std::string("formula ") + to_string(variant));
}

/// m = 0: the thorn graph is the base graph, and the formulas add nothing.
inline Outcome check_thornless(const Instance& inst, Context& ctx)
{
    Outcome o;
    auto base_report = ctx.report(*inst.other);
    auto r = ctx.report(inst.graph);
    auto f = thorn_forms(thorn_inputs(*base_report, 0), FormulaVariant::corrected);
    const Value formula[6] = {f.cm1_min, f.cm1_max, f.cm2_min, f.cm2_max, f.cm3_min, f.cm3_max};
    std::ostringstream ex, ac;
    ex << "base values";
    for (int k = 1; k <= 3; ++k)
        ex << ' ' << base_report->cm_min(k) << '/' << base_report->cm_max(k);
    ac << "enumerated";
    for (int k = 1; k <= 3; ++k)
        ac << ' ' << r->cm_min(k) << '/' << r->cm_max(k);
    ac << "; corrected formulas";
    for (int i = 0; i < 6; i += 2)
        ac << ' ' << formula[i] << '/' << formula[i + 1];
    o.expected = ex.str();
    o.actual = ac.str();
    for (int k = 1; k <= 3; ++k) {
        bool ok = r->cm_min(k) == base_report->cm_min(k) && r->cm_max(k) == base_report->cm_max(k) &&
                  formula[2 * k - 2] == base_report->cm_min(k) && formula[2 * k - 1] == base_report->cm_max(k);
        if (!ok) {
            o.verdict = Verdict::counterexample;
            o.witness = coloring_witness(inst.graph, r->extrema[k].min_witness, k);
            break;
        }
    }
    return o;
}

inline Outcome check_tree_minimality(int k, const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    const auto n = static_cast<Value>(inst.graph.order());
    const Value bound = k == 2 ? 2 * (n - 1) : n - 1;
    const bool tree = inst.graph.is_tree();
    Outcome o;
    o.expected = name(k, "min") + (tree ? " == " : " > ") + std::to_string(bound) + (tree ? " (tree)" : " (not a tree)");
    o.actual = name(k, "min") + " = " + std::to_string(r->cm_min(k));
    if (r->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    bool ok = tree ? r->cm_min(k) == bound : r->cm_min(k) > bound;
    if (!ok) {
        o.verdict = Verdict::counterexample;
        o.witness = coloring_witness(inst.graph, r->extrema[k].min_witness, k);
    }
    return o;
}

inline Outcome check_oracle(const Instance& inst, Context& ctx)
{
    auto r = ctx.report(inst.graph);
    auto ref = oracle::naive_extrema(inst.graph);
    Outcome o;
    std::ostringstream ex, ac;
    for (int k = 1; k <= 3; ++k) {
        const auto& e = ref.index[static_cast<std::size_t>(k - 1)];
        ex << (k > 1 ? " " : "") << e.min << '/' << e.max;
        ac << (k > 1 ? " " : "") << r->cm_min(k) << '/' << r->cm_max(k);
    }
    o.expected = "oracle min/max " + ex.str() + " chi=" + std::to_string(ref.chi);
    o.actual = "engine min/max " + ac.str() + " chi=" + std::to_string(r->chi);
    if (r->extrema.status != ExtremaStatus::exact) {
        o.verdict = Verdict::skipped_budget;
        return o;
    }
    for (int k = 1; k <= 3; ++k) {
        const auto& e = ref.index[static_cast<std::size_t>(k - 1)];
        const auto& got = r->extrema[k];
        bool ok = ref.chi == r->chi && e.min == got.min && e.max == got.max &&
                  e.min_witness == got.min_witness.assignment() && e.max_witness == got.max_witness.assignment();
        if (!ok) {
            o.verdict = Verdict::counterexample;
            o.witness = coloring_witness(inst.graph, e.min != got.min ? got.min_witness : got.max_witness, k);
            break;
        }
    }
    return o;
}

inline Outcome check_bipartite_characterization(const Instance& inst, Context&)
{
    const auto n = inst.params[0];
    std::size_t count = 0;
    std::optional<Outcome> failure;
    corpus::for_each_connected_bipartite(n, [&](const Graph& g) {
        if (failure)
            return;
        ++count;
        bool complete_bip = is_complete_bipartite(g);
        bool stable = is_chromatically_stable(g);
        if (stable == complete_bip) {
            Outcome o;
            o.expected = "stable <=> not complete bipartite";
            o.actual = "g6:" + to_graph6(g) + " stable=" + (stable ? "true" : "false") +
                       " complete_bipartite=" + (complete_bip ? "true" : "false");
            o.verdict = Verdict::counterexample;
            auto e = stabilizing_edge(g);
            o.witness = edge_witness(g, Witness::Kind::stabilizing_edges, e ? std::vector<Edge>{*e} : std::vector<Edge>{});
            failure = o;
        }
    });
    if (failure)
        return *failure;
    Outcome o;
    o.expected = "stable <=> not complete bipartite";
    o.actual = std::to_string(count) + " graphs checked, 0 mismatches";
    return o;
}

inline Outcome check_rho(RhoReading reading, const Instance& inst, Context& ctx)
{
    const auto n = inst.params[0];
    std::size_t count = 0, skipped = 0;
    std::optional<Outcome> failure;
    corpus::for_each_connected_bipartite(n, [&](const Graph& g) {
        if (failure || is_complete_bipartite(g))
            return;
        ++count;
        auto closed = stability_number_bipartite(g);
        auto bf = stability_number_bruteforce(g, ctx.config.stability, reading);
        if (!bf.rho) {
            ++skipped;
            return;
        }
        if (static_cast<std::int64_t>(*bf.rho) != closed) {
            Outcome o;
            o.expected = "rho = theta1*theta2 - size = " + std::to_string(closed);
            o.actual = "g6:" + to_graph6(g) + " " + to_string(reading) + " search rho = " + std::to_string(*bf.rho);
            o.verdict = Verdict::counterexample;
            o.witness = edge_witness(g, Witness::Kind::destabilizing_edges, bf.added);
            failure = o;
        }
    });
    if (failure)
        return *failure;
    Outcome o;
    o.expected = "rho = theta1*theta2 - size";
    o.actual = std::string(to_string(reading)) + " search: " + std::to_string(count) + " graphs, " + std::to_string(count - skipped) + " matched the search, " +
               std::to_string(skipped) + " over budget";
    if (skipped > 0)
        o.verdict = Verdict::skipped_budget;
    return o;
}

enum class Expect { unstable, perfectly_stable };

inline Outcome check_stability_example(Expect expect, const Instance& inst, Context&)
{
    const Graph& g = inst.graph;
    Outcome o;
    if (expect == Expect::perfectly_stable) {
        o.expected = "perfectly stable (no non-edge)";
        o.actual = g.is_complete() ? "complete, no non-edge" : "has non-edges";
        if (!g.is_complete()) {
            o.verdict = Verdict::counterexample;
            o.witness = edge_witness(g, Witness::Kind::stabilizing_edges, {g.non_edges().front()});
        }
        return o;
    }
    auto chi = chromatic_number(g);
    auto e = stabilizing_edge(g, chi);
    o.expected = "unstable: every added edge raises chi=" + std::to_string(chi);
    if (e) {
        o.actual = "adding " + std::to_string(e->first) + "-" + std::to_string(e->second) + " keeps chi=" + std::to_string(chi);
        o.verdict = Verdict::counterexample;
        o.witness = edge_witness(g, Witness::Kind::stabilizing_edges, {*e});
    }
    else {
        o.actual = "unstable";
    }
    return o;
}

inline std::vector<Instance> spec_instances(std::initializer_list<const char*> specs)
{
    std::vector<Instance> out;
    for (auto s : specs)
        out.push_back(family_instance(parse_family_spec(s)));
    return out;
}

} // namespace detail

/// The full claim catalog in report order.
inline const std::vector<Claim>& registry()
{
    static const std::vector<Claim> claims = [] {
        using namespace detail;
        std::vector<Claim> c;
        const char* roman[] = {"i", "ii", "iii"};

        for (const auto& ob : observations) {
            c.push_back({ob.id, "small-graph observation", true,
                         [&ob](const CorpusConfig&) { return spec_instances({ob.family}); },
                         [&ob](const Instance& i, Context& ctx) { return check_observation(ob, i, ctx); }});
        }
        c.push_back({"obs-relations", "printed comparison of each observation with the classical index", false,
                     [](const CorpusConfig&) {
                         std::vector<Instance> out;
                         for (const auto& ob : observations) {
                             auto inst = spec_instances({ob.family}).front();
                             inst.label = std::string(ob.id) + " " + inst.label;
                             out.push_back(std::move(inst));
                         }
                         return out;
                     },
                     [](const Instance& i, Context& ctx) {
                         auto id = i.label.substr(0, i.label.find(' '));
                         for (const auto& ob : observations)
                             if (id == ob.id)
                                 return check_observation_relation(ob, i, ctx);
                         throw std::logic_error("unknown observation " + id);
                     }});
        for (int k = 1; k <= 3; ++k)
            c.push_back({std::string("prop-2.1-") + roman[k - 1],
                         "complete graphs: chromatic value vs classical Zagreb index", true, complete_corpus,
                         [k](const Instance& i, Context& ctx) { return check_complete(k, i, ctx); }});
        for (int k = 1; k <= 3; ++k)
            c.push_back({std::string("thm-2.2-") + roman[k - 1], "connected G of order n stays below K_n", false,
                         dominance_corpus, [k](const Instance& i, Context& ctx) { return check_dominance(k, i, ctx); }});
        for (int k = 1; k <= 3; ++k)
            c.push_back({std::string("cor-2.3-") + roman[k - 1], "proper subgraph has strictly smaller extrema", false,
                         subgraph_corpus, [k](const Instance& i, Context& ctx) { return check_subgraph(k, i, ctx); }});
        for (int k = 1; k <= 3; ++k)
            c.push_back({std::string("thm-3.1-") + roman[k - 1], "tree bounds", true, tree_corpus,
                         [k](const Instance& i, Context& ctx) { return check_tree(k, i, ctx); }});

        auto multi = [&](const char* id, const char* what, bool must, MultiPart part) {
            c.push_back({id, what, must, multipartite_corpus,
                         [part](const Instance& i, Context& ctx) { return check_multipartite(part, i, ctx); }});
        };
        multi("lem-3.2-i-max", "multipartite M1 maximum", false, MultiPart::cm1_max);
        multi("lem-3.2-i-min", "multipartite M1 minimum", false, MultiPart::cm1_min);
        multi("lem-3.2-ii-max", "multipartite M2 maximum", false, MultiPart::cm2_max);
        multi("lem-3.2-ii-printed", "multipartite M2 minimum, printed (r-i)(r-j) form", false, MultiPart::cm2_min_printed);
        multi("lem-3.2-ii-corrected", "multipartite M2 minimum, (r+1-i)(r+1-j) form", true, MultiPart::cm2_min_corrected);
        multi("lem-3.2-iii-max", "multipartite M3 pair sum equals the maximum", false, MultiPart::cm3_max);
        multi("lem-3.2-iii-min", "multipartite M3 pair sum equals the minimum", false, MultiPart::cm3_min);
        c.push_back({"lem-3.2-iii-eq", "multipartite M3 minimum equals maximum", false, multipartite_corpus,
                     check_m3_constant});

        auto equal = [&](const char* id, const char* what, bool must, EqualPart part) {
            c.push_back({id, what, must, equal_multipartite_corpus,
                         [part](const Instance& i, Context& ctx) { return check_equal_multipartite(part, i, ctx); }});
        };
        equal("prop-3.3-i", "equal-part multipartite M1", false, EqualPart::cm1);
        equal("prop-3.3-ii", "equal-part multipartite M2", false, EqualPart::cm2);
        equal("prop-3.3-iii-printed", "equal-part multipartite M3, printed i(r-1) form", false, EqualPart::cm3_printed);
        equal("prop-3.3-iii-pairsum", "equal-part multipartite M3, pair-sum form", true, EqualPart::cm3_pairsum);

        auto thorn = [&](const std::string& id, int part, FormulaVariant v) {
            c.push_back({id, "uniform thorn graph formula", false, thorn_corpus,
                         [part, v](const Instance& i, Context& ctx) { return check_thorn(part, v, i, ctx); }});
        };
        thorn("thm-3.4-i", 1, FormulaVariant::as_printed);
        thorn("thm-3.4-ii", 2, FormulaVariant::as_printed);
        thorn("thm-3.4-iii-printed", 3, FormulaVariant::as_printed);
        thorn("thm-3.4-iii-corrected", 3, FormulaVariant::corrected);
        thorn("thm-3.4-iv", 4, FormulaVariant::as_printed);
        thorn("thm-3.4-v", 5, FormulaVariant::as_printed);
        thorn("thm-3.4-vi-printed", 6, FormulaVariant::as_printed);
        thorn("thm-3.4-vi-corrected", 6, FormulaVariant::corrected);
        c.push_back({"thm-3.4-thornless", "m = 0 reproduces the base graph", true,
                     [](const CorpusConfig& cfg) {
                         auto all = thorn_corpus(cfg);
                         std::vector<Instance> out;
                         for (auto& i : all)
                             if (i.params[0] == 0)
                                 out.push_back(std::move(i));
                         return out;
                     },
                     check_thornless});

        for (int k = 2; k <= 3; ++k)
            c.push_back({std::string("thm-4.2-") + roman[k - 2], "trees minimize M" + std::to_string(k), true,
                         oracle_corpus, [k](const Instance& i, Context& ctx) { return check_tree_minimality(k, i, ctx); }});
        c.push_back({"oracle-eq", "engine extrema equal the brute-force oracle", true, oracle_corpus, check_oracle});

        c.push_back({"sec-4-star", "stars are chromatically unstable", false,
                     [](const CorpusConfig& cfg) {
                         std::vector<Instance> out;
                         for (std::size_t n = 3; n <= cfg.max_order; ++n)
                             out.push_back(family_instance(FamilySpec::star(n)));
                         return out;
                     },
                     [](const Instance& i, Context& ctx) { return check_stability_example(Expect::unstable, i, ctx); }});
        c.push_back({"sec-4-complete-minus-edge", "K_n - e is chromatically unstable", false,
                     [](const CorpusConfig& cfg) {
                         std::vector<Instance> out;
                         for (std::size_t n = 3; n <= cfg.max_order; ++n) {
                             const Edge e[] = {{0, 1}};
                             out.push_back({"complete:" + std::to_string(n) + " minus 0-1",
                                            generate(FamilySpec::complete(n)).without_edges(e), {}, {}});
                         }
                         return out;
                     },
                     [](const Instance& i, Context& ctx) { return check_stability_example(Expect::unstable, i, ctx); }});
        c.push_back({"sec-4-complete", "complete graphs are perfectly stable", false,
                     [](const CorpusConfig& cfg) {
                         std::vector<Instance> out;
                         for (std::size_t n = 2; n <= cfg.max_order; ++n)
                             out.push_back(family_instance(FamilySpec::complete(n)));
                         return out;
                     },
                     [](const Instance& i, Context& ctx) {
                         return check_stability_example(Expect::perfectly_stable, i, ctx);
                     }});
        c.push_back({"sec-4-cycles", "cycles of order >= 4 are chromatically unstable", false,
                     [](const CorpusConfig& cfg) {
                         std::vector<Instance> out;
                         for (std::size_t n = 4; n <= cfg.max_order; ++n)
                             out.push_back(family_instance(FamilySpec::cycle(n)));
                         return out;
                     },
                     [](const Instance& i, Context& ctx) { return check_stability_example(Expect::unstable, i, ctx); }});
        c.push_back({"thm-4.4", "2-chromatic: stable iff not complete bipartite", true,
                     [](const CorpusConfig& cfg) {
                         return order_range(2, std::min(cfg.bipartite_max_order, cfg.max_order));
                     },
                     check_bipartite_characterization});
        auto rho_orders = [](const CorpusConfig& cfg) { return order_range(3, std::min(cfg.rho_max_order, cfg.max_order)); };
        c.push_back({"prop-4.6", "2-chromatic stability number, chi-preserving additions", true, rho_orders,
                     [](const Instance& i, Context& ctx) { return check_rho(RhoReading::chi_preserving, i, ctx); }});
        c.push_back({"prop-4.6-unrestricted", "2-chromatic stability number, any additions", false, rho_orders,
                     [](const Instance& i, Context& ctx) { return check_rho(RhoReading::unrestricted, i, ctx); }});
        return c;
    }();
    return claims;
}

class UnknownClaim : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Resolves a selection: "all", exact ids, group prefixes ("lem-3.2"
/// selects every lem-3.2-* claim) and registry ranges "a..b", comma
/// separated. Result is in registry order without duplicates.
inline std::vector<std::size_t> select_claims(const std::string& selection)
{
    const auto& reg = registry();
    auto find = [&](const std::string& id) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < reg.size(); ++i)
            if (reg[i].id == id)
                return i;
        return std::nullopt;
    };
    std::vector<char> chosen(reg.size(), 0);
    std::stringstream ss(selection);
    std::string tok;
    bool any = false;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        any = true;
        if (tok == "all") {
            std::fill(chosen.begin(), chosen.end(), 1);
            continue;
        }
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            auto a = find(tok.substr(0, dots));
            auto b = find(tok.substr(dots + 2));
            if (!a || !b || *a > *b)
                throw UnknownClaim("unknown claim id range '" + tok + "'");
            for (auto i = *a; i <= *b; ++i)
                chosen[i] = 1;
            continue;
        }
        if (auto i = find(tok)) {
            chosen[*i] = 1;
            continue;
        }
        bool matched = false;
        for (std::size_t i = 0; i < reg.size(); ++i)
            if (reg[i].id.rfind(tok + "-", 0) == 0) {
                chosen[i] = 1;
                matched = true;
            }
        if (!matched)
            throw UnknownClaim("unknown claim id '" + tok + "'");
    }
    if (!any)
        throw UnknownClaim("empty claim selection");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (chosen[i])
            out.push_back(i);
    return out;
}

struct Summary {
    std::size_t verified = 0;
    std::size_t counterexample = 0;
    std::size_t skipped_budget = 0;
    std::size_t must_hold_failures = 0;
};

inline Summary summarize(const std::vector<ClaimResult>& results)
{
    Summary s;
    for (const auto& r : results) {
        switch (r.verdict) {
        case Verdict::verified: ++s.verified; break;
        case Verdict::counterexample:
            ++s.counterexample;
            if (r.must_hold)
                ++s.must_hold_failures;
            break;
        case Verdict::skipped_budget: ++s.skipped_budget; break;
        }
    }
    return s;
}

/// Runs the selected claims (all by default). Claims are spread over
/// `config.jobs` threads; results come back in registry order, then in
/// instance generation order.
inline std::vector<ClaimResult> run_claims(const CorpusConfig& config, std::optional<std::vector<std::size_t>> selection = {})
{
    const auto& reg = registry();
    std::vector<std::size_t> chosen;
    if (selection)
        chosen = *selection;
    else
        for (std::size_t i = 0; i < reg.size(); ++i)
            chosen.push_back(i);

    Context ctx(config);
    std::vector<std::vector<ClaimResult>> slots(chosen.size());
    auto run_one = [&](std::size_t slot) {
        const auto& claim = reg[chosen[slot]];
        for (const auto& inst : claim.instances(config)) {
            auto o = claim.check(inst, ctx);
            slots[slot].push_back(
                {claim.id, inst.label, std::move(o.expected), std::move(o.actual), o.verdict, claim.must_hold, std::move(o.witness)});
        }
    };

    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1 || chosen.size() < 2) {
        for (std::size_t s = 0; s < chosen.size(); ++s)
            run_one(s);
    }
    else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mu;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, chosen.size()); ++t)
            pool.emplace_back([&] {
                for (std::size_t s; (s = next++) < chosen.size();) {
                    try {
                        run_one(s);
                    }
                    catch (...) {
                        std::lock_guard lock(error_mu);
                        if (!error)
                            error = std::current_exception();
                    }
                }
            });
        for (auto& th : pool)
            th.join();
        if (error)
            std::rethrow_exception(error);
    }

    std::vector<ClaimResult> out;
    for (auto& s : slots)
        for (auto& r : s)
            out.push_back(std::move(r));
    return out;
}

/// Re-evaluates a witness through the public API; true when it reproduces
/// the recorded value.
inline bool recheck_witness(const Witness& w)
{
    auto g = parse_graph6(w.graph6);
    switch (w.kind) {
    case Witness::Kind::coloring: {
        Coloring c(w.coloring);
        return c.palette_size() == chromatic_number(g) && is_proper(g, c) && chromatic_index(g, c, w.index) == w.value;
    }
    case Witness::Kind::stabilizing_edges: {
        if (w.edges.size() != 1)
            return false;
        return chromatic_number(g.with_edges(w.edges)) == chromatic_number(g);
    }
    case Witness::Kind::destabilizing_edges:
        return static_cast<Value>(w.edges.size()) == w.value && is_chromatically_unstable(g.with_edges(w.edges));
    }
    return false;
}

// --- report serialization ----------------------------------------------------

inline const char* to_string(Witness::Kind k)
{
    switch (k) {
    case Witness::Kind::coloring: return "coloring";
    case Witness::Kind::stabilizing_edges: return "stabilizing_edges";
    case Witness::Kind::destabilizing_edges: return "destabilizing_edges";
    }
    return "?";
}

inline Json to_json(const Witness& w)
{
    Json j;
    j["kind"] = to_string(w.kind);
    j["graph6"] = w.graph6;
    if (w.kind == Witness::Kind::coloring) {
        j["coloring"] = w.coloring;
        j["index"] = w.index;
    }
    else {
        j["edges"] = edges_json(w.edges);
    }
    j["value"] = w.value;
    return j;
}

inline Json to_json(const ClaimResult& r)
{
    Json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = r.instance;
    j["expected"] = r.expected;
    j["actual"] = r.actual;
    j["verdict"] = to_string(r.verdict);
    j["must_hold"] = r.must_hold;
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    return j;
}

inline Json config_json(const CorpusConfig& c)
{
    Json j;
    j["prng"] = "mt19937_64 seeded via std::seed_seq{seed_lo, seed_hi, stream}";
    j["seed"] = c.seed;
    j["max_order"] = c.max_order;
    j["random_graphs"] = c.random_graphs;
    j["random_trees"] = c.random_trees;
    j["monotonicity_graphs"] = c.monotonicity_graphs;
    j["oracle_max_order"] = c.oracle_max_order;
    j["bipartite_max_order"] = c.bipartite_max_order;
    j["rho_max_order"] = c.rho_max_order;
    j["tree_orders"] = {c.tree_min_order, c.tree_max_order};
    j["thorn_max_order"] = c.thorn_max_order;
    j["multipartite_max_parts"] = c.multipartite_max_parts;
    j["multipartite_max_part"] = c.multipartite_max_part;
    j["extrema_budget"] = {{"max_order", c.extrema.max_order}, {"max_colorings", c.extrema.max_colorings}};
    j["stability_budget"] = {{"max_order", c.stability.max_order}, {"max_subsets", c.stability.max_subsets}};
    return j;
}

inline Json report_json(const CorpusConfig& config, const std::vector<ClaimResult>& results)
{
    auto s = summarize(results);
    Json j;
    j["config"] = config_json(config);
    j["summary"] = {{"verified", s.verified},
                    {"counterexample", s.counterexample},
                    {"skipped_budget", s.skipped_budget},
                    {"must_hold_failures", s.must_hold_failures}};
    Json arr = Json::array();
    for (const auto& r : results)
        arr.push_back(to_json(r));
    j["results"] = std::move(arr);
    return j;
}

inline std::string report_csv(const std::vector<ClaimResult>& results)
{
    std::ostringstream os;
    os << "claim_id,instance,expected,actual,verdict,must_hold,witness_kind,witness_graph6,witness_value\n";
    for (const auto& r : results) {
        os << csv_escape(r.claim_id) << ',' << csv_escape(r.instance) << ',' << csv_escape(r.expected) << ','
           << csv_escape(r.actual) << ',' << to_string(r.verdict) << ',' << (r.must_hold ? "true" : "false") << ',';
        if (r.witness)
            os << to_string(r.witness->kind) << ',' << csv_escape(r.witness->graph6) << ',' << r.witness->value;
        else
            os << ",,";
        os << '\n';
    }
    return os.str();
}

} // namespace czi::verify
