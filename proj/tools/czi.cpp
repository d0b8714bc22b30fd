#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <czi/czi.hpp>

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, claim_failure = 3, budget = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputSource {
    std::string file;
    std::string family;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--input,-i", file, "graph file (.g6, .col, .txt/.edges)");
        cmd->add_option("--family,-f", family, "family spec, e.g. path:5, complete-multipartite:1,2,3, thorn(cycle:4;1)");
    }

    std::pair<std::string, czi::Graph> load() const
    {
        if (file.empty() == family.empty())
            throw UsageError("give exactly one of --input or --family");
        if (!file.empty())
            return {file, czi::load_graph_file(file)};
        auto spec = czi::parse_family_spec(family);
        return {czi::to_string(spec), czi::generate(spec)};
    }
};

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + out + "'");
    f << text;
}

std::string claim_list()
{
    std::string s = "Registered claims:\n";
    for (const auto& c : czi::verify::registry())
        s += "  " + c.id + (c.must_hold ? "  [must-hold]" : "") + "  " + c.statement + "\n";
    return s;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chromatic Zagreb indices: compute, closed forms, stability and claim verification"};
    app.require_subcommand(1);
    app.footer(claim_list());

    // compute
    auto* compute = app.add_subcommand("compute", "chromatic and classical Zagreb indices of one graph");
    InputSource compute_src;
    compute_src.attach(compute);
    std::string compute_format = "json", semantics = "all", compat = "off", compute_out;
    bool witness = false;
    compute->add_option("--format", compute_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    compute->add_option("--semantics", semantics, "all or permutation")->check(CLI::IsMember({"all", "permutation"}));
    compute->add_option("--paper-compat", compat, "order-1 default values (on|off)")->check(CLI::IsMember({"on", "off"}));
    compute->add_flag("--witness", witness, "include extremal colorings");
    compute->add_option("--out,-o", compute_out, "output file (default stdout)");

    // family
    auto* family = app.add_subcommand("family", "closed-form values for a family, with an enumeration column");
    std::string family_spec, variant = "both", family_format = "table", family_out;
    std::size_t oracle_max_order = 12;
    family->add_option("spec", family_spec,
                       "complete:n | tree:n | multipartite:n1,..,nr | equal-multipartite:n,r | thorn(base;m)")
        ->required();
    family->add_option("--variant", variant, "as_printed, corrected or both")
        ->check(CLI::IsMember({"as_printed", "corrected", "both"}));
    family->add_option("--format", family_format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    family->add_option("--oracle-max-order", oracle_max_order, "largest order enumerated for the oracle column");
    family->add_option("--out,-o", family_out, "output file (default stdout)");

    // stability
    auto* stability = app.add_subcommand("stability", "chromatic stability verdict and stability number");
    InputSource stability_src;
    stability_src.attach(stability);
    std::string rho_reading = "chi_preserving", stability_format = "json", stability_out;
    czi::StabilitySearchBudget stability_budget;
    stability->add_option("--rho-reading", rho_reading, "which added edge sets count: chi_preserving or unrestricted")
        ->check(CLI::IsMember({"chi_preserving", "unrestricted"}));
    stability->add_option("--max-search-order", stability_budget.max_order, "largest order for the subset search");
    stability->add_option("--format", stability_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    stability->add_option("--out,-o", stability_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run registered claims against enumeration");
    czi::verify::CorpusConfig config;
    std::string claims = "all", report_out = "verify-report.json", csv_out;
    bool strict = false;
    verify->add_option("--max-order", config.max_order, "largest order in generic corpora")->capture_default_str();
    verify->add_option("--seed", config.seed, "seed for random corpora")->capture_default_str();
    verify->add_option("--claims", claims, "all, ids, groups (lem-3.2) or ranges (obs-i..obs-xii), comma separated")
        ->capture_default_str();
    verify->add_option("--random-graphs", config.random_graphs, "random connected graphs in the oracle corpus")
        ->capture_default_str();
    verify->add_option("--random-trees", config.random_trees, "random trees in the tree suite")->capture_default_str();
    verify->add_option("--thorn-max-order", config.thorn_max_order, "largest thorn graph enumerated")
        ->capture_default_str();
    verify->add_option("--out,-o", report_out, "JSON report path")->capture_default_str();
    verify->add_option("--csv", csv_out, "also write a CSV report");
    verify->add_option("--jobs,-j", config.jobs, "worker threads")->envname("CZI_JOBS")->capture_default_str();
    verify->add_flag("--strict", strict, "exit 4 when any claim ran out of budget");
    verify->footer(claim_list());

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*compute) {
            auto [name, g] = compute_src.load();
            auto r = czi::full_report(g, czi::parse_semantics(semantics), compat == "on");
            if (compute_format == "json")
                emit(czi::to_json(r, witness).dump(2) + "\n", compute_out);
            else
                emit(czi::index_report_csv_header() + "\n" + czi::index_report_csv_row(name, r) + "\n", compute_out);
        }
        else if (*family) {
            auto t = czi::evaluate_family(family_spec, czi::parse_variant_selection(variant), oracle_max_order);
            if (family_format == "json")
                emit(czi::to_json(t).dump(2) + "\n", family_out);
            else if (family_format == "csv")
                emit(czi::to_csv(t), family_out);
            else
                emit(czi::to_text(t), family_out);
        }
        else if (*stability) {
            auto [name, g] = stability_src.load();
            auto r = czi::analyze_stability(g, stability_budget, czi::parse_rho_reading(rho_reading));
            if (stability_format == "json")
                emit(czi::to_json(r).dump(2) + "\n", stability_out);
            else
                emit(name + ": " + czi::verdict_line(r) + "\n", stability_out);
        }
        else if (*verify) {
            std::vector<std::size_t> selected;
            try {
                selected = czi::verify::select_claims(claims);
            }
            catch (const czi::verify::UnknownClaim& e) {
                std::cerr << "error: " << e.what() << "\n";
                return usage;
            }
            auto results = czi::verify::run_claims(config, selected);
            emit(czi::verify::report_json(config, results).dump(2) + "\n", report_out);
            if (!csv_out.empty())
                emit(czi::verify::report_csv(results), csv_out);
            for (const auto& r : results)
                if (r.verdict != czi::verify::Verdict::verified)
                    std::cout << czi::verify::to_string(r.verdict) << (r.must_hold ? " [must-hold]" : "") << "  "
                              << r.claim_id << "  " << r.instance << "  expected: " << r.expected
                              << "  actual: " << r.actual << "\n";
            auto s = czi::verify::summarize(results);
            std::cout << "verified=" << s.verified << " counterexample=" << s.counterexample
                      << " skipped_budget=" << s.skipped_budget << " must_hold_failures=" << s.must_hold_failures
                      << "  report: " << report_out << "\n";
            if (s.must_hold_failures > 0)
                return claim_failure;
            if (strict && s.skipped_budget > 0)
                return budget;
        }
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const czi::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse;
    }
    return ok;
}
