#include <doctest.h>

#include <set>

#include "mopkit/constructive.hpp"
#include "mopkit/generate.hpp"

using namespace mopkit;

namespace {

int n2_of(const Mop& m) { return static_cast<int>(degree_two_vertices(m).size()); }

void check_choice(const Mop& m, const PartitionChoice& c, int lo, int hi)
{
    const int n = m.order();
    CHECK(lo <= c.ell);
    CHECK(c.ell <= hi);
    CHECK(c.oriented.is_diagonal({0, c.ell}));
    CHECK(1 <= c.apex);
    CHECK(c.apex <= c.ell - 1);
    CHECK(c.oriented.has_edge({0, c.apex}));
    CHECK(c.oriented.has_edge({c.apex, c.ell}));
    // The orientation is a rotation that carries every edge back to the source.
    for (Edge e : c.oriented.edges()) CHECK(m.has_edge({c.to_source[e.u], c.to_source[e.v]}));
    for (Vertex v = 0; v < n; ++v) CHECK((c.to_source[v] + c.rotation) % n == v);
    CHECK(make_edge(c.to_source[0], c.to_source[c.ell]) == c.diagonal);
}

}  // namespace

TEST_CASE("partition diagonal of the fan F10")
{
    const PartitionChoice c = find_partition_diagonal(fan(10), 5, 8);
    CHECK(c.diagonal == Edge{0, 5});
    CHECK(c.ell == 5);
    CHECK(c.apex == 4);
    check_choice(fan(10), c, 5, 8);
}

TEST_CASE("partition diagonals exist in both windows")
{
    for (int n = 8; n <= 12; ++n) {
        for (const Mop& m : enumerate_mops(n)) {
            check_choice(m, find_partition_diagonal(m, 4, 6), 4, 6);
            if (n >= 10) check_choice(m, find_partition_diagonal(m, 5, 8), 5, 8);
        }
    }
    for (std::uint64_t s = 0; s < 10000; ++s) {
        const int n = 10 + static_cast<int>(s % 191);
        const Mop m = random_mop(n, Seed{s});
        check_choice(m, find_partition_diagonal(m, 5, 8), 5, 8);
        check_choice(m, find_partition_diagonal(m, 4, 6), 4, 6);
    }
}

TEST_CASE("an empty window signals an impossible instance")
{
    CHECK_THROWS_AS(find_partition_diagonal(fan(6), 5, 8), ImpossibleInstance);
    CHECK_THROWS_AS(find_partition_diagonal(fan(3), 1, 2), ImpossibleInstance);
}

TEST_CASE("small instances by exhaustive search")
{
    CHECK(isolate_small(fan(5), 1).members == VertexSet{0});
    CHECK(isolate_small(fan(9), 1).size() == 1);
    CHECK(isolate_small(fan(4), 1).size() == 1);
    for (int n = 5; n <= 9; ++n) {
        for (const Mop& m : enumerate_mops(n)) CHECK(isolate_small(m, 1).size() == 1);
    }
    for (const Mop& m : enumerate_mops(10)) CHECK(isolate_small(m, 2).size() <= 2);
    CHECK_THROWS_AS(isolate_small(fan(11), 3), std::invalid_argument);
    CHECK_THROWS_AS(isolate_small(build_family({Family::Gt, 2}), 1), std::runtime_error);
}

TEST_CASE("n/5 construction on every small mop")
{
    for (int n = 5; n <= 12; ++n) {
        for (const Mop& m : enumerate_mops(n)) {
            const Construction c = isolate_theorem1(m);
            CHECK(is_isolating_set(m, c.set.members, 1));
            CHECK(c.set.size() <= n / 5);
            CHECK(c.set.size() >= iota_exact(m, 1)->size());
            CHECK(c.trace.replay() == c.set.members);
            CHECK(c.set.provenance == Provenance::Theorem1);
        }
    }
    CHECK(isolate_theorem1(fan(5)).set.size() == 1);
    CHECK_THROWS_AS(isolate_theorem1(fan(4)), std::invalid_argument);
}

TEST_CASE("degree-2 sensitive construction on every small mop")
{
    for (int n = 5; n <= 12; ++n) {
        for (const Mop& m : enumerate_mops(n)) {
            const Construction c = isolate_theorem2(m);
            CHECK(is_isolating_set(m, c.set.members, 1));
            CHECK(c.set.size() <= theorem2_bound(n, n2_of(m)));
            CHECK(c.set.size() >= iota_exact(m, 1)->size());
            CHECK(c.trace.replay() == c.set.members);
        }
    }
    CHECK_THROWS_AS(isolate_theorem2(fan(4)), std::invalid_argument);
}

TEST_CASE("constructions on the extremal families")
{
    const Mop g4 = build_family({Family::Gt, 4});
    const Construction c = isolate_theorem1(g4);
    CHECK(c.set.size() == 4);
    CHECK(is_isolating_set(g4, c.set.members, 1));

    const Mop h4 = build_family({Family::Ht, 4});
    const Construction h = isolate_theorem2(h4);
    CHECK(h.set.size() <= 4);
    CHECK(h.set.provenance == Provenance::Theorem2High);
    CHECK(is_isolating_set(h4, h.set.members, 1));

    const Mop max6 = build_family({Family::MaxDeg2, 6});
    const Construction x = isolate_theorem2(max6);
    CHECK(x.set.size() <= 2);
    CHECK(is_isolating_set(max6, x.set.members, 1));

    for (Family f : {Family::Fan, Family::Gt, Family::Ht, Family::A15, Family::Bt, Family::MaxDeg2, Family::MinDeg2}) {
        for (int p = 2; p <= 30; ++p) {
            Mop m = fan(3);
            try {
                m = build_family({f, p});
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (m.order() < 5 || m.order() > 30) continue;
            CAPTURE(family_name(f));
            CAPTURE(p);
            const Construction a = isolate_theorem1(m);
            CHECK(is_isolating_set(m, a.set.members, 1));
            CHECK(a.set.size() <= m.order() / 5);
            const Construction b = isolate_theorem2(m);
            CHECK(is_isolating_set(m, b.set.members, 1));
            CHECK(b.set.size() <= theorem2_bound(m.order(), n2_of(m)));
        }
    }
}

TEST_CASE("large random instances and trace shape")
{
    std::set<ProofCase> seen;
    for (std::uint64_t s = 0; s < 300; ++s) {
        const Mop m = random_mop(120 + static_cast<int>(s % 100), Seed{s * 31 + 7});
        const int n = m.order();
        const Construction a = isolate_theorem1(m);
        CHECK(is_isolating_set(m, a.set.members, 1));
        CHECK(a.set.size() <= n / 5);
        CHECK(a.trace.replay() == a.set.members);
        REQUIRE_FALSE(a.trace.steps.empty());
        CHECK(a.trace.steps.front().n == n);
        CHECK(a.trace.steps.back().kind == ProofCase::Base);

        const Construction b = isolate_theorem2(m);
        CHECK(is_isolating_set(m, b.set.members, 1));
        CHECK(b.set.size() <= theorem2_bound(n, n2_of(m)));
        CHECK(b.trace.replay() == b.set.members);
        for (const auto& step : b.trace.steps) seen.insert(step.kind);
    }
    // The random corpus reaches every branch of the degree-2 sensitive reduction.
    for (ProofCase c : {ProofCase::Ell5, ProofCase::Ell6, ProofCase::Ell7, ProofCase::Ell8, ProofCase::Subclaim41,
                        ProofCase::Contraction, ProofCase::RePartition, ProofCase::Base}) {
        CAPTURE(proof_case_name(c));
        CHECK(seen.count(c) == 1);
    }
}

TEST_CASE("deep reductions do not exhaust the call stack")
{
    const Mop m = random_mop(5000, Seed{5});
    const Construction a = isolate_theorem1(m);
    CHECK(a.set.size() <= m.order() / 5);
    const Mop f = fan(5000);
    CHECK(isolate_theorem2(f).set.size() <= theorem2_bound(5000, 2));
}

TEST_CASE("degree-2 sensitive bound in both regimes")
{
    CHECK(theorem2_bound(20, 4) == 4);
    CHECK(theorem2_bound(20, 8) == 4);
    CHECK(theorem2_bound(12, 6) == 2);
    CHECK(theorem2_bound(30, 10) == 6);
    CHECK(theorem2_bound(31, 10) == 6);
}

TEST_CASE("trace case names")
{
    CHECK(proof_case_name(ProofCase::Subclaim41) == "subclaim-4.1");
    CHECK(proof_case_name(ProofCase::HighDegree2) == "high-n2-branch");
}
