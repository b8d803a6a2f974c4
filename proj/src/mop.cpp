#include "mopkit/mop.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace mopkit {

namespace {

std::string edge_str(Edge e)
{
    std::ostringstream os;
    os << '{' << e.u << ',' << e.v << '}';
    return os.str();
}

bool cycle_adjacent(int n, Edge e) { return e.v - e.u == 1 || (e.u == 0 && e.v == n - 1); }

void require_vertex(const Mop& m, Vertex v)
{
    if (!m.contains(v)) {
        throw std::out_of_range("vertex " + std::to_string(v) + " outside mop of order " +
                                std::to_string(m.order()));
    }
}

// Builds a mop from an arbitrary edge list already expressed in cycle labels.
Mop from_edges(int n, const std::vector<Edge>& edges)
{
    std::vector<Edge> diagonals;
    diagonals.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u != e.v && !cycle_adjacent(n, e)) diagonals.push_back(e);
    }
    std::sort(diagonals.begin(), diagonals.end());
    diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
    return Mop::make(n, std::move(diagonals));
}

}  // namespace

namespace detail {

// Skips validation for results of operations that preserve the mop invariants.
class MopAccess
{
public:
    static Mop derived(int n, std::vector<Edge> edges)
    {
        std::erase_if(edges, [n](Edge e) { return e.u == e.v || cycle_adjacent(n, e); });
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Mop(n, std::move(edges));
    }
};

}  // namespace detail


std::optional<std::string> validate(int n, std::span<const Edge> diagonals)
{
    if (n < 3) return "order " + std::to_string(n) + " is below 3";

    std::vector<Edge> sorted;
    sorted.reserve(diagonals.size());
    for (Edge raw : diagonals) {
        if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n) {
            return "diagonal " + edge_str(raw) + " has an endpoint outside 0.." + std::to_string(n - 1);
        }
        if (raw.u == raw.v) return "diagonal " + edge_str(raw) + " is a self-loop";
        sorted.push_back(make_edge(raw.u, raw.v));
    }
    if (static_cast<int>(sorted.size()) != n - 3) {
        return "expected " + std::to_string(n - 3) + " diagonals, found " + std::to_string(sorted.size());
    }
    for (Edge e : sorted) {
        if (cycle_adjacent(n, e)) return "diagonal " + edge_str(e) + " joins cycle-adjacent vertices";
    }

    // Sorting by (u asc, v desc) turns the non-crossing condition into a laminar
    // interval check on a stack.
    std::sort(sorted.begin(), sorted.end(), [](Edge a, Edge b) {
        return a.u != b.u ? a.u < b.u : a.v > b.v;
    });
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        return "diagonal " + edge_str(*dup) + " appears twice";
    }
    std::vector<Edge> open;
    for (Edge e : sorted) {
        while (!open.empty() && open.back().v <= e.u) open.pop_back();
        if (!open.empty() && e.v > open.back().v) {
            return "diagonals " + edge_str(open.back()) + " and " + edge_str(e) + " cross";
        }
        open.push_back(e);
    }
    return std::nullopt;
}

Mop::Mop(int n, std::vector<Edge> diagonals)
    : n_(n), diagonals_(std::move(diagonals)), offsets_(n + 1, 0), adjacency_(2 * n + 2 * diagonals_.size())
{
    for (Vertex i = 0; i < n_; ++i) offsets_[i + 1] = 2;
    for (Edge d : diagonals_) {
        ++offsets_[d.u + 1];
        ++offsets_[d.v + 1];
    }
    for (Vertex i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (Vertex i = 0; i < n_; ++i) {
        adjacency_[fill[i]++] = (i + n_ - 1) % n_;
        adjacency_[fill[i]++] = (i + 1) % n_;
    }
    for (Edge d : diagonals_) {
        adjacency_[fill[d.u]++] = d.v;
        adjacency_[fill[d.v]++] = d.u;
    }
    for (Vertex i = 0; i < n_; ++i) {
        std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
    }
}

Mop Mop::make(int n, std::vector<Edge> diagonals)
{
    if (auto violation = validate(n, diagonals)) throw InvalidMop(*violation);
    for (Edge& d : diagonals) d = make_edge(d.u, d.v);
    std::sort(diagonals.begin(), diagonals.end());
    return Mop(n, std::move(diagonals));
}

Mop Mop::from_cycle(std::span<const int> cycle, std::span<const std::pair<int, int>> edges)
{
    std::map<int, Vertex> position;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!position.emplace(cycle[i], static_cast<Vertex>(i)).second) {
            throw InvalidMop("vertex id " + std::to_string(cycle[i]) + " repeats on the cycle");
        }
    }
    const int n = static_cast<int>(cycle.size());
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    for (auto [a, b] : edges) {
        auto ia = position.find(a);
        auto ib = position.find(b);
        if (ia == position.end() || ib == position.end()) {
            throw InvalidMop("edge endpoint missing from the cycle");
        }
        mapped.push_back(make_edge(ia->second, ib->second));
    }
    return from_edges(n, mapped);
}

std::span<const Vertex> Mop::neighbors(Vertex v) const
{
    require_vertex(*this, v);
    return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

int Mop::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Mop::has_edge(Edge e) const
{
    if (!contains(e.u) || !contains(e.v) || e.u == e.v) return false;
    const auto row = neighbors(e.u);
    return std::binary_search(row.begin(), row.end(), e.v);
}

bool Mop::is_hamiltonian_edge(Edge e) const
{
    e = make_edge(e.u, e.v);
    return contains(e.u) && contains(e.v) && e.u != e.v && cycle_adjacent(n_, e);
}

bool Mop::is_diagonal(Edge e) const { return has_edge(e) && !is_hamiltonian_edge(e); }

std::vector<Edge> Mop::hamiltonian_edges() const
{
    std::vector<Edge> out;
    out.reserve(n_);
    for (Vertex i = 0; i + 1 < n_; ++i) out.push_back({i, i + 1});
    out.push_back({0, n_ - 1});
    return out;
}

std::vector<Edge> Mop::edges() const
{
    std::vector<Edge> out = hamiltonian_edges();
    out.insert(out.end(), diagonals_.begin(), diagonals_.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph::SimpleGraph(VertexSet vertices, std::vector<Edge> edges)
    : vertices_(normalized(std::move(vertices))), edges_(std::move(edges))
{
    for (Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
        if (!std::binary_search(vertices_.begin(), vertices_.end(), e.u) ||
            !std::binary_search(vertices_.begin(), vertices_.end(), e.v)) {
            throw std::invalid_argument("edge " + edge_str(e) + " leaves the vertex set");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }
}

SimpleGraph SimpleGraph::from_mop(const Mop& m)
{
    VertexSet all(m.order());
    for (Vertex v = 0; v < m.order(); ++v) all[v] = v;
    return SimpleGraph(std::move(all), m.edges());
}

int SimpleGraph::degree(Vertex v) const
{
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [v](Edge e) { return e.u == v || e.v == v; }));
}

int SimpleGraph::max_degree() const
{
    std::map<Vertex, int> deg;
    int best = 0;
    for (Edge e : edges_) {
        best = std::max({best, ++deg[e.u], ++deg[e.v]});
    }
    return best;
}

int degree(const Mop& m, Vertex v) { return m.degree(v); }

VertexSet closed_neighborhood(const Mop& m, std::span<const Vertex> s)
{
    std::vector<char> hit(m.order(), 0);
    for (Vertex v : s) {
        require_vertex(m, v);
        hit[v] = 1;
        for (Vertex w : m.neighbors(v)) hit[w] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < m.order(); ++v) {
        if (hit[v]) out.push_back(v);
    }
    return out;
}

SimpleGraph residual(const Mop& m, std::span<const Vertex> s)
{
    const VertexSet covered = closed_neighborhood(m, s);
    std::vector<char> keep(m.order(), 1);
    for (Vertex v : covered) keep[v] = 0;
    VertexSet vertices;
    for (Vertex v = 0; v < m.order(); ++v) {
        if (keep[v]) vertices.push_back(v);
    }
    std::vector<Edge> edges;
    for (Edge e : m.edges()) {
        if (keep[e.u] && keep[e.v]) edges.push_back(e);
    }
    return SimpleGraph(std::move(vertices), std::move(edges));
}

DiagonalPartition diagonal_partition(const Mop& m, Edge d)
{
    d = make_edge(d.u, d.v);
    if (!m.is_diagonal(d)) throw std::invalid_argument(edge_str(d) + " is not a diagonal");
    const int n = m.order();
    const Vertex a = d.u;
    const Vertex b = d.v;
    const int n1 = b - a + 1;
    const int n2 = n - n1 + 2;

    LabelMap map1(n1), map2(n2);
    for (int i = 0; i < n1; ++i) map1[i] = a + i;
    for (int i = 0; i < n2; ++i) map2[i] = i <= a ? i : b + (i - a - 1);
    auto to_g2 = [a, b](Vertex p) { return p <= a ? p : a + 1 + (p - b); };

    std::vector<Edge> diag1, diag2;
    for (Edge e : m.diagonals()) {
        if (e == d) continue;
        if (a <= e.u && e.v <= b) {
            diag1.push_back({e.u - a, e.v - a});
        } else {
            diag2.push_back({to_g2(e.u), to_g2(e.v)});
        }
    }
    return DiagonalPartition{d,
                             detail::MopAccess::derived(n1, std::move(diag1)),
                             detail::MopAccess::derived(n2, std::move(diag2)),
                             std::move(map1),
                             std::move(map2),
                             b - a};
}

Derived contract_hamiltonian_edge(const Mop& m, Edge e)
{
    e = make_edge(e.u, e.v);
    if (m.order() < 4) throw std::invalid_argument("cannot contract an edge of a triangle");
    if (!m.is_hamiltonian_edge(e)) throw std::invalid_argument(edge_str(e) + " is not a Hamiltonian edge");
    LabelMap map(m.order());
    for (Vertex w = 0; w < m.order(); ++w) {
        map[w] = w == e.v ? e.u : (w > e.v ? w - 1 : w);
    }
    std::vector<Edge> edges;
    for (Edge f : m.diagonals()) edges.push_back(make_edge(map[f.u], map[f.v]));
    return {detail::MopAccess::derived(m.order() - 1, std::move(edges)), std::move(map)};
}

Derived remove_degree2_vertex(const Mop& m, Vertex v)
{
    require_vertex(m, v);
    if (m.order() < 4) throw std::invalid_argument("cannot remove a vertex of a triangle");
    if (m.degree(v) != 2) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(m.degree(v)));
    }
    LabelMap map(m.order());
    for (Vertex w = 0; w < m.order(); ++w) map[w] = w == v ? kRemoved : (w > v ? w - 1 : w);
    std::vector<Edge> edges;
    for (Edge f : m.diagonals()) edges.push_back(make_edge(map[f.u], map[f.v]));
    return {detail::MopAccess::derived(m.order() - 1, std::move(edges)), std::move(map)};
}

Derived add_ear(const Mop& m, Edge e)
{
    e = make_edge(e.u, e.v);
    if (!m.is_hamiltonian_edge(e)) throw std::invalid_argument(edge_str(e) + " is not a Hamiltonian edge");
    const int n = m.order();
    LabelMap map(n);
    const bool wraps = !(e.v - e.u == 1);
    for (Vertex w = 0; w < n; ++w) map[w] = (wraps || w <= e.u) ? w : w + 1;
    std::vector<Edge> edges;
    for (Edge f : m.diagonals()) edges.push_back(make_edge(map[f.u], map[f.v]));
    edges.push_back(make_edge(map[e.u], map[e.v]));
    return {detail::MopAccess::derived(n + 1, std::move(edges)), std::move(map)};
}

Mop fan(int n)
{
    if (n < 3) throw std::invalid_argument("a fan needs at least 3 vertices");
    std::vector<Edge> diagonals;
    for (Vertex i = 2; i <= n - 2; ++i) diagonals.push_back({0, i});
    return Mop::make(n, std::move(diagonals));
}

FaceApex apex_of_edge(const Mop& m, Edge e, std::optional<Side> side)
{
    e = make_edge(e.u, e.v);
    if (!m.has_edge(e)) throw std::invalid_argument(edge_str(e) + " is not an edge");
    const bool has_inner = e.v - e.u >= 2;
    const bool has_outer = !(e.u == 0 && e.v == m.order() - 1);
    if (!side) {
        if (has_inner && has_outer) throw std::invalid_argument("a diagonal needs a side");
        side = has_inner ? Side::Inner : Side::Outer;
    }
    if ((*side == Side::Inner && !has_inner) || (*side == Side::Outer && !has_outer)) {
        throw std::invalid_argument("edge " + edge_str(e) + " has no face on that side");
    }
    auto on_side = [&](Vertex w) {
        const bool inner = e.u < w && w < e.v;
        return *side == Side::Inner ? inner : !inner && w != e.u && w != e.v;
    };
    const auto nu = m.neighbors(e.u);
    const auto nv = m.neighbors(e.v);
    std::optional<Vertex> apex;
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nv.size()) {
        if (nu[i] < nv[j]) {
            ++i;
        } else if (nv[j] < nu[i]) {
            ++j;
        } else {
            if (on_side(nu[i])) {
                if (apex) throw std::logic_error("two apexes on one side of " + edge_str(e));
                apex = nu[i];
            }
            ++i;
            ++j;
        }
    }
    if (!apex) throw std::logic_error("no face on the requested side of " + edge_str(e));
    return {e, *apex};
}

std::vector<Triangle> interior_faces(const Mop& m)
{
    std::vector<Triangle> faces;
    auto add = [&](Edge e, Vertex w) {
        std::array<Vertex, 3> t{e.u, e.v, w};
        std::sort(t.begin(), t.end());
        faces.push_back({t[0], t[1], t[2]});
    };
    for (Edge e : m.edges()) {
        if (e.v - e.u >= 2) add(e, apex_of_edge(m, e, Side::Inner).apex);
        if (!(e.u == 0 && e.v == m.order() - 1)) add(e, apex_of_edge(m, e, Side::Outer).apex);
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

VertexSet degree_two_vertices(const Mop& m)
{
    VertexSet out;
    for (Vertex v = 0; v < m.order(); ++v) {
        if (m.degree(v) == 2) out.push_back(v);
    }
    return out;
}

Mop relabel_cyclic(const Mop& m, const LabelMap& perm)
{
    const int n = m.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabeling has the wrong length");
    std::vector<char> seen(n, 0);
    for (Vertex i = 0; i < n; ++i) {
        const Vertex p = perm[i];
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("relabeling is not a permutation");
        seen[p] = 1;
        if (!cycle_adjacent(n, make_edge(p, perm[(i + 1) % n]))) {
            throw std::invalid_argument("relabeling does not preserve the Hamiltonian cycle");
        }
    }
    std::vector<Edge> diagonals;
    diagonals.reserve(m.diagonals().size());
    for (Edge d : m.diagonals()) diagonals.push_back(make_edge(perm[d.u], perm[d.v]));
    return detail::MopAccess::derived(n, std::move(diagonals));
}

Derived reverse_orientation(const Mop& m)
{
    const int n = m.order();
    LabelMap perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = (n - i) % n;
    return {relabel_cyclic(m, perm), std::move(perm)};
}

Derived rotate(const Mop& m, int r)
{
    const int n = m.order();
    LabelMap perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = ((i + r) % n + n) % n;
    return {relabel_cyclic(m, perm), std::move(perm)};
}

VertexSet map_set(const LabelMap& map, std::span<const Vertex> s)
{
    VertexSet out;
    out.reserve(s.size());
    for (Vertex v : s) {
        if (map.at(v) != kRemoved) out.push_back(map[v]);
    }
    return normalized(std::move(out));
}

LabelMap invert(const LabelMap& map, int target_size)
{
    LabelMap inv(target_size, kRemoved);
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] != kRemoved) inv.at(map[i]) = static_cast<Vertex>(i);
    }
    return inv;
}

LabelMap compose(const LabelMap& first, const LabelMap& second)
{
    LabelMap out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        out[i] = first[i] == kRemoved ? kRemoved : second.at(first[i]);
    }
    return out;
}

VertexSet normalized(VertexSet s)
{
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace mopkit
