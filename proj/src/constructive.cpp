#include "mopkit/constructive.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>

namespace mopkit {

namespace {

enum class Method
{
    Theorem1,
    Theorem2,
};

// The instance under reduction, relabeled so the cut-off side is 0..ell.
struct View
{
    Mop g;
    LabelMap to_step;  // g label -> label of the instance being reduced
    int ell = 0;
    Vertex apex = 0;
    bool reflected = false;
};

Vertex inner_apex(const Mop& g, int ell) { return apex_of_edge(g, {0, ell}, Side::Inner).apex; }

View orient(const Mop& m, Edge d, bool ascending)
{
    const int n = m.order();
    const Vertex shift = ascending ? d.u : d.v;
    const int ell = ascending ? d.v - d.u : n - d.v + d.u;
    Derived r = rotate(m, -shift);
    View v{std::move(r.mop), invert(r.map, n), ell, 0, false};
    v.apex = inner_apex(v.g, ell);
    return v;
}

// Reflection that fixes the cutting diagonal: label i -> (ell - i) mod n.
View mirrored(const View& v)
{
    const int n = v.g.order();
    LabelMap perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = ((v.ell - i) % n + n) % n;
    View out{relabel_cyclic(v.g, perm), compose(perm, v.to_step), v.ell, v.ell - v.apex, !v.reflected};
    return out;
}

// Cut along {from, to} of the current view instead, keeping the side from..to.
View repartition(const View& v, Vertex from, Vertex to)
{
    if (!v.g.is_diagonal({from, to})) {
        throw std::logic_error("face side {" + std::to_string(from) + "," + std::to_string(to) +
                               "} is not a diagonal");
    }
    const int n = v.g.order();
    Derived r = rotate(v.g, -from);
    View out{std::move(r.mop), compose(invert(r.map, n), v.to_step), to - from, 0, v.reflected};
    out.apex = inner_apex(out.g, out.ell);
    return out;
}

struct Merge
{
    Vertex child = 0;  // contracted vertex in the child
    Vertex a = 0;      // its two preimages in the reduced instance
    Vertex b = 0;
};

// One reduction of an instance to a smaller mop plus the rule to lift the
// smaller solution back.
struct Reduction
{
    std::vector<ProofCase> route;
    int n = 0;
    bool reflected = false;

    std::optional<VertexSet> terminal;  // instance labels

    std::optional<Mop> child;
    LabelMap child_to_step;
    std::optional<Merge> merge;
    std::optional<Vertex> extra;
    bool extra_unless_merged = false;
};

void require(bool ok, const char* what)
{
    if (!ok) throw std::logic_error(std::string("construction invariant failed: ") + what);
}

ProofCase ell_case(int ell)
{
    switch (ell) {
    case 5: return ProofCase::Ell5;
    case 6: return ProofCase::Ell6;
    case 7: return ProofCase::Ell7;
    default: return ProofCase::Ell8;
    }
}

// Cut-off side has 5 Hamiltonian edges: drop its interior, contract {0, 5}.
void contract_cut(const View& v, const DiagonalPartition& p, Reduction& r)
{
    const Vertex end = 0, far = 5;
    require(is_isolating_set(p.g1, std::vector<Vertex>{end, far}, 1), "both ends isolate the cut-off side");
    require(residual(p.g1, std::vector<Vertex>{v.apex}).vertices().size() <= 2,
            "apex leaves at most two cut-off vertices");

    Derived c = contract_hamiltonian_edge(p.g2, {0, 1});
    r.child_to_step.assign(c.mop.order(), kRemoved);
    for (Vertex w = 0; w < p.g2.order(); ++w) {
        if (w != 1) r.child_to_step[c.map[w]] = v.to_step[p.map2[w]];
    }
    r.merge = Merge{c.map[0], v.to_step[end], v.to_step[far]};
    r.extra = v.to_step[v.apex];
    r.extra_unless_merged = true;
    r.child = std::move(c.mop);
    r.route.push_back(ProofCase::Contraction);
    r.reflected = v.reflected;
}

void attach_apex(const View& v, Method method, Reduction& r)
{
    DiagonalPartition p = diagonal_partition(v.g, {0, v.ell});
    require(is_isolating_set(p.g1, std::vector<Vertex>{v.apex}, 1), "apex isolates the cut-off side");
    r.reflected = v.reflected;
    if (method == Method::Theorem1 && p.g2.order() <= 4) {
        r.terminal = VertexSet{v.to_step[v.apex]};
        return;
    }
    r.child_to_step = compose(p.map2, v.to_step);
    r.child = std::move(p.g2);
    r.extra = v.to_step[v.apex];
}

// Cut-off side with 5 Hamiltonian edges under the degree-2-sensitive bound.
void five_edge_cut_low(View v, Reduction& r)
{
    DiagonalPartition p = diagonal_partition(v.g, {0, 5});
    if (p.g2.degree(0) == 2) {
        v = mirrored(v);
        p = diagonal_partition(v.g, {0, 5});
    }
    const int d_end = p.g2.degree(0);
    const int d_far = p.g2.degree(1);
    require(d_end >= 3, "the diagonal's ends are not both ears of the far side");

    if (d_end + d_far == 5) {
        // Far side: {0,5,6} and {0,6,n-1} are faces; peel 5 then 0.
        Derived first = remove_degree2_vertex(p.g2, 1);
        require(first.mop.degree(first.map[0]) == 2, "end becomes an ear after peeling");
        Derived second = remove_degree2_vertex(first.mop, first.map[0]);
        const LabelMap to_child = compose(first.map, second.map);
        r.child_to_step = compose(compose(invert(to_child, second.mop.order()), p.map2), v.to_step);
        r.child = std::move(second.mop);
        r.extra = v.to_step[v.apex];
        r.route.push_back(ProofCase::Subclaim41);
        r.reflected = v.reflected;
        return;
    }

    Derived c = contract_hamiltonian_edge(p.g2, {0, 1});
    const LabelMap child_to_g2 = [&] {
        LabelMap inv(c.mop.order(), kRemoved);
        for (Vertex w = 0; w < p.g2.order(); ++w) {
            if (w != 1) inv[c.map[w]] = w;
        }
        return inv;
    }();
    const Vertex merged = c.map[0];
    std::vector<Vertex> fresh_ears;  // view labels
    for (Vertex w = 0; w < c.mop.order(); ++w) {
        if (c.mop.degree(w) != 2) continue;
        require(w != merged, "contracted vertex is never an ear");
        const Vertex in_view = p.map2[child_to_g2[w]];
        if (v.g.degree(in_view) != 2) fresh_ears.push_back(in_view);
    }
    if (fresh_ears.empty()) {
        contract_cut(v, p, r);
        return;
    }

    const int n = v.g.order();
    const bool near = std::find(fresh_ears.begin(), fresh_ears.end(), 6) != fresh_ears.end();
    const bool wrap = std::find(fresh_ears.begin(), fresh_ears.end(), n - 1) != fresh_ears.end();
    require(near || wrap, "a fresh ear sits next to the diagonal");
    if (!near) v = mirrored(v);
    require(v.g.is_diagonal({0, 7}), "the diagonal {0,7} exists");

    DiagonalPartition q = diagonal_partition(v.g, {0, 7});
    r.child_to_step = compose(q.map2, v.to_step);
    r.child = std::move(q.g2);
    r.extra = v.to_step[v.apex == 1 ? 5 : 0];
    r.route.push_back(ProofCase::RePartition);
    r.reflected = v.reflected;
}

Reduction reduce(const Mop& instance, Method method)
{
    const PartitionChoice choice = find_partition_diagonal(instance, 5, 8);
    View v{choice.oriented, choice.to_source, choice.ell, choice.apex, false};

    Reduction r;
    r.n = instance.order();
    r.route.push_back(ell_case(v.ell));
    for (;;) {
        if (2 * v.apex > v.ell) v = mirrored(v);
        if (v.ell == 5) {
            if (method == Method::Theorem1) {
                contract_cut(v, diagonal_partition(v.g, {0, 5}), r);
            } else {
                five_edge_cut_low(v, r);
            }
            return r;
        }
        if (v.apex <= v.ell - 5) {
            v = repartition(v, v.apex, v.ell);
            r.route.push_back(ProofCase::RePartition);
            r.route.push_back(ell_case(v.ell));
            continue;
        }
        attach_apex(v, method, r);
        return r;
    }
}

VertexSet lift(const Reduction& r, const VertexSet& s)
{
    VertexSet out;
    out.reserve(s.size() + 1);
    for (Vertex w : s) {
        if (r.merge && w == r.merge->child) {
            out.push_back(r.merge->a);
            out.push_back(r.merge->b);
        } else {
            out.push_back(r.child_to_step.at(w));
        }
    }
    return normalized(std::move(out));
}

std::vector<TraceStep> route_steps(const Reduction& r, VertexSet added)
{
    std::vector<TraceStep> steps;
    for (std::size_t i = 0; i < r.route.size(); ++i) {
        const bool last = i + 1 == r.route.size();
        steps.push_back({r.route[i], r.n, last ? added : VertexSet{}, r.reflected});
    }
    return steps;
}

Construction drive(const Mop& m, Method method, Provenance provenance)
{
    std::vector<Mop> instances{m};
    std::vector<Reduction> chain;
    VertexSet s;
    std::vector<std::vector<TraceStep>> levels;  // deepest first

    for (;;) {
        const Mop& current = instances.back();
        const int n = current.order();
        const int base_limit = method == Method::Theorem1 ? 9 : 10;
        if (n <= base_limit) {
            s = isolate_small(current, n == 10 ? 2 : 1).members;
            levels.push_back({TraceStep{ProofCase::Base, n, s, false}});
            break;
        }
        Reduction r = reduce(current, method);
        if (r.terminal) {
            s = *r.terminal;
            require(is_isolating_set(current, s, 1), "terminal set isolates");
            levels.push_back(route_steps(r, s));
            break;
        }
        instances.push_back(*r.child);
        chain.push_back(std::move(r));
    }

    for (std::size_t i = chain.size(); i-- > 0;) {
        const Reduction& r = chain[i];
        const bool merged_in = r.merge && std::binary_search(s.begin(), s.end(), r.merge->child);
        for (auto& level : levels) {
            for (TraceStep& step : level) step.added = lift(r, step.added);
        }
        VertexSet own;
        if (r.extra && !(r.extra_unless_merged && merged_in)) own.push_back(*r.extra);
        s = lift(r, s);
        s.insert(s.end(), own.begin(), own.end());
        s = normalized(std::move(s));
        require(is_isolating_set(instances[i], s, 1), "lifted set isolates the larger instance");
        levels.push_back(route_steps(r, own));
    }

    Construction out{IsolatingSet{s, 1, provenance}, {}};
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        out.trace.steps.insert(out.trace.steps.end(), it->begin(), it->end());
    }
    return out;
}

}  // namespace

PartitionChoice find_partition_diagonal(const Mop& m, int lo, int hi)
{
    const int n = m.order();
    std::optional<std::tuple<int, Edge, int>> best;  // (ell, diagonal, side: 0 ascending)
    for (Edge d : m.diagonals()) {
        const int ascending = d.v - d.u;
        for (auto [ell, side] : {std::pair{ascending, 0}, std::pair{n - ascending, 1}}) {
            if (ell < lo || ell > hi) continue;
            const auto candidate = std::make_tuple(ell, d, side);
            if (!best || candidate < *best) best = candidate;
        }
    }
    if (!best) {
        throw ImpossibleInstance("no diagonal cuts off " + std::to_string(lo) + ".." + std::to_string(hi) +
                                 " Hamiltonian edges in a mop of order " + std::to_string(n));
    }
    const auto [ell, d, side] = *best;
    View v = orient(m, d, side == 0);
    const Vertex shift = side == 0 ? d.u : d.v;
    return PartitionChoice{d, ell, std::move(v.g), std::move(v.to_step), (n - shift) % n, false, v.apex};
}

std::string_view proof_case_name(ProofCase c)
{
    switch (c) {
    case ProofCase::Base: return "base";
    case ProofCase::Ell5: return "ell5";
    case ProofCase::Ell6: return "ell6";
    case ProofCase::Ell7: return "ell7";
    case ProofCase::Ell8: return "ell8";
    case ProofCase::Subclaim41: return "subclaim-4.1";
    case ProofCase::Contraction: return "contraction";
    case ProofCase::RePartition: return "re-partition";
    case ProofCase::HighDegree2: return "high-n2-branch";
    }
    return "?";
}

VertexSet ConstructionTrace::replay() const
{
    VertexSet out;
    for (const TraceStep& step : steps) out.insert(out.end(), step.added.begin(), step.added.end());
    return normalized(std::move(out));
}

IsolatingSet isolate_small(const Mop& m, int cap)
{
    if (m.order() > 10) throw std::invalid_argument("isolate_small handles orders up to 10");
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    auto found = iota_exact(m, 1, cap);
    if (!found) {
        throw std::runtime_error("no K_{1,2}-isolating set of size <= " + std::to_string(cap) +
                                 " in a mop of order " + std::to_string(m.order()));
    }
    return *found;
}

Construction isolate_theorem1(const Mop& m)
{
    if (m.order() < 5) throw std::invalid_argument("the n/5 construction needs n >= 5");
    return drive(m, Method::Theorem1, Provenance::Theorem1);
}

Construction isolate_theorem2(const Mop& m)
{
    const int n = m.order();
    if (n < 5) throw std::invalid_argument("the degree-2 construction needs n >= 5");
    const VertexSet ears = degree_two_vertices(m);
    if (3 * static_cast<int>(ears.size()) <= n) return drive(m, Method::Theorem2, Provenance::Theorem2Low);

    // Many ears: peel all of them (they are independent) and dominate the rest.
    Mop core = m;
    LabelMap to_core(n);
    for (Vertex v = 0; v < n; ++v) to_core[v] = v;
    for (Vertex ear : ears) {
        Derived d = remove_degree2_vertex(core, to_core[ear]);
        to_core = compose(to_core, d.map);
        core = std::move(d.mop);
    }
    const VertexSet s = map_set(invert(to_core, core.order()), dominating_by_coloring(core));
    require(is_isolating_set(m, s, 1), "dominating the ear-free core isolates");
    return Construction{IsolatingSet{s, 1, Provenance::Theorem2High},
                        ConstructionTrace{{TraceStep{ProofCase::HighDegree2, n, s, false}}}};
}

int theorem2_bound(int n, int n2) { return 3 * n2 <= n ? (n + n2) / 6 : (n - n2) / 3; }

}  // namespace mopkit
