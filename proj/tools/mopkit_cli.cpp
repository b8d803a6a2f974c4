// Command-line front end: corpus generation, solving, constructions and campaigns.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mopkit/constructive.hpp"
#include "mopkit/generate.hpp"
#include "mopkit/harness.hpp"
#include "mopkit/io.hpp"
#include "mopkit/solvers.hpp"

namespace {

using nlohmann::json;
using namespace mopkit;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Thrown for bad input files and unwritable outputs.
struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

void emit_instances(const std::vector<Mop>& mops, const std::string& out)
{
    if (out.empty()) {
        write_instances(std::cout, mops);
        return;
    }
    try {
        write_instances(std::filesystem::path(out), mops);
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

std::vector<Mop> load(const std::string& path)
{
    try {
        return read_instances(std::filesystem::path(path));
    } catch (const std::exception& e) {
        throw IoError(path + ": " + e.what());
    }
}

json set_json(const VertexSet& s) { return json(s); }

int run_solve(const std::string& in, int k, bool exact, std::optional<int> cap)
{
    int status = kOk;
    int index = 0;
    for (const Mop& m : load(in)) {
        json row{{"index", index++}, {"n", m.order()}, {"k", k}};
        std::optional<VertexSet> set;
        std::string method;
        if (exact) {
            method = "exact";
            if (auto s = iota_exact(m, k, cap)) set = s->members;
        } else if (k == 0) {
            method = "coloring";
            set = dominating_by_coloring(m);
        } else if (m.order() < 5) {
            method = "exact";
            if (auto s = iota_exact(m, 1, cap)) set = s->members;
        } else {
            const Construction a = isolate_theorem1(m);
            const Construction b = isolate_theorem2(m);
            const Construction& best = b.set.size() < a.set.size() ? b : a;
            method = std::string(provenance_name(best.set.provenance));
            set = best.set.members;
        }
        row["method"] = method;
        if (set) {
            row["size"] = set->size();
            row["set"] = set_json(*set);
            row["valid"] = is_isolating_set(m, *set, k);
        } else {
            row["size"] = nullptr;
            row["set"] = nullptr;
            row["valid"] = false;
            status = kCheckFailed;
        }
        std::cout << row.dump() << '\n';
    }
    return status;
}

int run_construct(const std::string& in, const std::string& method, bool trace)
{
    int status = kOk;
    int index = 0;
    for (const Mop& m : load(in)) {
        const int n = m.order();
        const int n2 = static_cast<int>(degree_two_vertices(m).size());
        json row{{"index", index++}, {"n", n}, {"n2", n2}, {"method", method}};
        try {
            const Construction c = method == "theorem1" ? isolate_theorem1(m) : isolate_theorem2(m);
            const int bound = method == "theorem1" ? n / 5 : theorem2_bound(n, n2);
            const bool valid = is_isolating_set(m, c.set.members, 1) && c.set.size() <= bound;
            row["provenance"] = provenance_name(c.set.provenance);
            row["size"] = c.set.size();
            row["bound"] = bound;
            row["set"] = set_json(c.set.members);
            row["valid"] = valid;
            if (trace) {
                json steps = json::array();
                for (const TraceStep& step : c.trace.steps) {
                    steps.push_back({{"case", proof_case_name(step.kind)},
                                     {"n", step.n},
                                     {"added", set_json(step.added)},
                                     {"reflected", step.reflected}});
                }
                row["trace"] = std::move(steps);
            }
            if (!valid) status = kCheckFailed;
        } catch (const std::invalid_argument& e) {
            row["error"] = e.what();
            row["valid"] = false;
            status = kCheckFailed;
        } catch (const std::exception& e) {
            row["error"] = std::string("construction failed: ") + e.what();
            row["valid"] = false;
            status = kCheckFailed;
        }
        std::cout << row.dump() << '\n';
    }
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Maximal outerplanar graph toolkit: K_{1,2}-isolation verification"};
    app.require_subcommand(1);

    int n = 0;
    int count = 0;
    std::uint64_t seed = 0;
    std::string out;

    auto* enumerate = app.add_subcommand("enumerate", "Write every mop of order n as JSONL");
    enumerate->add_option("--n", n, "Order")->required()->check(CLI::Range(3, kDefaultEnumerationCap));
    enumerate->add_option("--out", out, "Output file (default: stdout)");

    auto* random = app.add_subcommand("random", "Write uniformly random mops as JSONL");
    random->add_option("--n", n, "Order")->required()->check(CLI::Range(3, 1 << 24));
    random->add_option("--count", count, "Number of instances")->required()->check(CLI::NonNegativeNumber);
    random->add_option("--seed", seed, "Seed; instance i uses seed + i")->required();
    random->add_option("--out", out, "Output file (default: stdout)");

    std::string family;
    int param = 0;
    auto* fam = app.add_subcommand("family", "Write one extremal family instance as JSONL");
    fam->add_option("--name", family, "Fan, Gt, Ht, A15, Bt, MaxDeg2 or MinDeg2")->required();
    fam->add_option("--param", param, "n for Fan/MinDeg2, t for Gt/Ht/Bt, p for MaxDeg2; ignored for A15");
    fam->add_option("--out", out, "Output file (default: stdout)");

    std::string in;
    int k = 1;
    bool exact = false;
    std::optional<int> cap;
    auto* solve = app.add_subcommand("solve", "Isolating sets for every instance of a JSONL file");
    solve->add_option("--in", in, "Input JSONL")->required();
    solve->add_option("--k", k, "Star parameter: 0 isolates edges, 1 isolates paths P3")
        ->required()
        ->check(CLI::IsMember({0, 1}));
    solve->add_flag("--exact", exact, "Minimum set by exhaustive search");
    solve->add_option("--cap", cap, "Largest set size the exact search tries");

    std::string method;
    bool trace = false;
    auto* construct = app.add_subcommand("construct", "Run a constructive algorithm on every instance");
    construct->add_option("--in", in, "Input JSONL")->required();
    construct->add_option("--method", method, "theorem1 (n/5) or theorem2 (degree-2 sensitive)")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2"}));
    construct->add_flag("--trace", trace, "Include the reduction steps");

    std::string source, checks, report_path;
    std::optional<int> exact_max_n;
    int threads = 0;
    bool single = false;
    auto* verify = app.add_subcommand("verify", "Run a verification campaign and write a JSON report");
    verify->add_option("--source", source,
                       "enumerate:<lo>-<hi> | random:<count>:<n>:<seed> | family:<Name>=<p>[,...] | file:<path>")
        ->required();
    verify->add_option("--checks", checks, "Comma list of lemmas,theorem1,theorem2,known-bounds,extremal-values, or all")
        ->required();
    verify->add_flag("--exact", exact, "Also compute exact iota1, iota0 and gamma");
    verify->add_option("--report", report_path, "Report JSON path")->required();
    verify->add_option("--exact-max-n", exact_max_n, "Skip exact solving above this order");
    verify->add_option("--cap", cap, "Largest set size the exact searches try");
    verify->add_option("--threads", threads, "Worker threads (0: one per core)")->check(CLI::NonNegativeNumber);
    verify->add_flag("--single-thread", single, "Same as --threads 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerate) {
            emit_instances(enumerate_mops(n), out);
        } else if (*random) {
            emit_instances(random_corpus(n, count, seed), out);
        } else if (*fam) {
            auto name = parse_family(family);
            if (!name) throw std::invalid_argument("unknown family '" + family + "'");
            emit_instances({build_family({*name, param})}, out);
        } else if (*solve) {
            return run_solve(in, k, exact, cap);
        } else if (*construct) {
            return run_construct(in, method, trace);
        } else if (*verify) {
            CampaignConfig cfg;
            cfg.source = parse_source(source);
            cfg.checks = parse_checks(checks);
            cfg.exact = exact;
            cfg.exact_max_n = exact_max_n;
            cfg.size_cap = cap;
            cfg.threads = single ? 1 : threads;
            BoundReport report;
            try {
                report = verify_corpus(cfg);
            } catch (const std::runtime_error& e) {
                throw IoError(e.what());
            }
            std::ofstream file(report_path);
            if (!file) throw IoError("cannot write " + report_path);
            file << to_json(report).dump(2) << '\n';
            if (!file) throw IoError("write failed for " + report_path);
            std::cout << summary_text(report) << '\n';
            return report.all_passed() ? kOk : kCheckFailed;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}
