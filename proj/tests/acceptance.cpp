// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mopkit/constructive.hpp"
#include "mopkit/generate.hpp"
#include "mopkit/harness.hpp"
#include "mopkit/solvers.hpp"
#include "oracles.hpp"

using namespace mopkit;

namespace {

struct Verdict
{
    bool ok = true;
    std::string detail;
};

int n2_of(const Mop& m) { return static_cast<int>(degree_two_vertices(m).size()); }

// Runs `visit` over every mop with lo <= n <= hi; returns the instance count.
long for_each_small(int lo, int hi, const std::function<void(const Mop&)>& visit)
{
    long count = 0;
    for (int n = lo; n <= hi; ++n) {
        for_each_mop(n, [&](const Mop& m) {
            ++count;
            visit(m);
        });
    }
    return count;
}

constexpr long kTriangulations5to12 = 5 + 14 + 42 + 132 + 429 + 1430 + 4862 + 16796;

Verdict n_over_5_bound()
{
    long failures = 0;
    const long count = for_each_small(5, 12, [&](const Mop& m) {
        const int bound = m.order() / 5;
        const auto exact = iota_exact(m, 1);
        const Construction c = isolate_theorem1(m);
        if (!exact || exact->size() > bound) ++failures;
        if (!is_isolating_set(m, c.set.members, 1) || c.set.size() > bound) ++failures;
    });
    return {failures == 0 && count == kTriangulations5to12,
            std::to_string(count) + " instances, " + std::to_string(failures) + " failures"};
}

Verdict degree_two_bound()
{
    long failures = 0;
    const long count = for_each_small(5, 12, [&](const Mop& m) {
        const int bound = theorem2_bound(m.order(), n2_of(m));
        const auto exact = iota_exact(m, 1);
        const Construction c = isolate_theorem2(m);
        if (!exact || exact->size() > bound) ++failures;
        if (!is_isolating_set(m, c.set.members, 1) || c.set.size() > bound) ++failures;
    });
    return {failures == 0 && count == kTriangulations5to12,
            std::to_string(count) + " instances, " + std::to_string(failures) + " failures"};
}

Verdict domination_bounds()
{
    long failures = 0;
    const long count = for_each_small(3, 12, [&](const Mop& m) {
        const int n = m.order();
        const auto gamma = gamma_exact(m);
        if (!gamma || static_cast<int>(gamma->size()) > n / 3) ++failures;
        const VertexSet dom = dominating_by_coloring(m);
        if (!is_dominating_set(m, dom) || static_cast<int>(dom.size()) > n / 3) ++failures;
        if (n >= 4) {
            const auto iota0 = iota_exact(m, 0);
            if (!iota0 || iota0->size() > n / 4) ++failures;
        }
    });
    return {failures == 0, std::to_string(count) + " instances, " + std::to_string(failures) + " failures"};
}

Verdict extremal_values()
{
    struct Case
    {
        FamilySpec spec;
        int expected;
    };
    const std::vector<Case> cases{
        {{Family::Gt, 2}, 2}, {{Family::Gt, 3}, 3}, {{Family::Gt, 4}, 4}, {{Family::Ht, 2}, 2},
        {{Family::Ht, 3}, 3}, {{Family::Ht, 4}, 4}, {{Family::Bt, 2}, 6},
    };
    Verdict v;
    for (const Case& c : cases) {
        const auto found = iota_exact(build_family(c.spec), 1);
        const int got = found ? found->size() : -1;
        v.ok = v.ok && got == c.expected;
        v.detail += std::string(v.detail.empty() ? "" : ", ") + std::string(family_name(c.spec.name)) + "(" +
                    std::to_string(c.spec.param) + ")=" + std::to_string(got);
    }
    return v;
}

Verdict lemma_suite()
{
    CampaignConfig cfg;
    cfg.source = parse_source("enumerate:4-12");
    cfg.checks = {Check::Lemmas};
    cfg.exact = true;
    const BoundReport r = verify_corpus(cfg);
    return {r.all_passed(), std::to_string(r.summary.instances) + " instances, " +
                                std::to_string(r.summary.failed) + " failures"};
}

Verdict degree_two_extremes()
{
    Verdict v;
    int checked = 0;
    for (int p = 3; p <= 8; ++p, ++checked) {
        const Mop m = build_family({Family::MaxDeg2, p});
        if (2 * n2_of(m) != m.order()) {
            v.ok = false;
            v.detail += "MaxDeg2(" + std::to_string(p) + ") ";
        }
    }
    for (int n = 4; n <= 16; ++n, ++checked) {
        const Mop m = build_family({Family::MinDeg2, n});
        if (m.order() != n || n2_of(m) != 2) {
            v.ok = false;
            v.detail += "MinDeg2(" + std::to_string(n) + ") ";
        }
    }
    if (v.ok) v.detail = std::to_string(checked) + " instances at the ends of the range";
    return v;
}

Verdict random_scale()
{
    const auto corpus = random_corpus(200, 1000, 2026);
    long failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const Mop& m : corpus) {
        const Construction a = isolate_theorem1(m);
        const Construction b = isolate_theorem2(m);
        if (!is_isolating_set(m, a.set.members, 1) || a.set.size() > m.order() / 5) ++failures;
        if (!is_isolating_set(m, b.set.members, 1) || b.set.size() > theorem2_bound(m.order(), n2_of(m))) ++failures;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[128];
    std::snprintf(buf, sizeof buf, "%ld failures, %.2f s", failures, seconds);
    return {failures == 0 && seconds < 10.0, buf};
}

Verdict oracle_equivalences()
{
    std::mt19937_64 rng(8);
    long disagreements = 0;
    constexpr int kGraphs = 100000;
    for (int trial = 0; trial < kGraphs; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 8)(rng);
        const double density = std::uniform_real_distribution<double>(0, 1)(rng);
        const int k = std::uniform_int_distribution<int>(0, 3)(rng);
        VertexSet vs;
        std::vector<Edge> edges;
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (int v = 0; v < n; ++v) vs.push_back(v);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (std::bernoulli_distribution(density)(rng)) {
                    edges.push_back({a, b});
                    adj[a][b] = adj[b][a] = true;
                }
            }
        }
        const bool fast = contains_star(SimpleGraph(vs, edges), k);
        if (fast != oracle::has_star_naive(n, adj, std::vector<bool>(n, true), k)) ++disagreements;
    }
    long count_mismatches = 0;
    for (int n = 3; n <= 13; ++n) {
        std::uint64_t count = 0;
        for_each_mop(n, [&](const Mop&) { ++count; });
        if (count != oracle::catalan_polygons(n)) ++count_mismatches;
    }
    return {disagreements == 0 && count_mismatches == 0,
            std::to_string(kGraphs) + " graphs, " + std::to_string(disagreements) + " star disagreements, " +
                std::to_string(count_mismatches) + " count mismatches for n <= 13"};
}

}  // namespace

int main()
{
    struct Criterion
    {
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"iota1 and the n/5 construction stay within floor(n/5) for every mop with 5 <= n <= 12", n_over_5_bound},
        {"iota1 and the degree-2 sensitive construction respect their bound for every mop with 5 <= n <= 12",
         degree_two_bound},
        {"gamma <= n/3, iota0 <= n/4 and the coloring class dominates within n/3 for n <= 12", domination_bounds},
        {"exact iota1 on Gt, Ht and Bt equals the stated extremal values", extremal_values},
        {"structural lemma suite over every mop with 4 <= n <= 12", lemma_suite},
        {"MaxDeg2 reaches n2 = n/2 and MinDeg2 reaches n2 = 2", degree_two_extremes},
        {"both constructions on 1000 random mops of order 200 within 10 s", random_scale},
        {"star test and enumeration counts agree with naive oracles", oracle_equivalences},
    };

    int failed = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s [%d] %s (%s; %.1f s)\n", v.ok ? "PASS" : "FAIL", index, c.name, v.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += !v.ok;
    }
    return failed == 0 ? 0 : 1;
}
