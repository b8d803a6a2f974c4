#pragma once

// Maximal outerplanar graphs stored as a triangulated convex polygon:
// vertices 0..n-1 in Hamiltonian-cycle order plus a non-crossing diagonal set.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mopkit {

using Vertex = int;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

/// Old label -> new label, kRemoved for vertices that do not survive.
using LabelMap = std::vector<Vertex>;

inline constexpr Vertex kRemoved = -1;

struct Edge
{
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with endpoints ordered so that u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class InvalidMop : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Returns the first violated mop invariant, or nullopt when (n, diagonals) is a mop.
std::optional<std::string> validate(int n, std::span<const Edge> diagonals);

namespace detail {
class MopAccess;
}

class Mop
{
public:
    /// Throws InvalidMop naming the violated invariant.
    static Mop make(int n, std::vector<Edge> diagonals);

    /// Relabels an arbitrary graph whose Hamiltonian cycle is `cycle` (a list of ids)
    /// into cycle order. Every edge not on the cycle becomes a diagonal.
    static Mop from_cycle(std::span<const int> cycle, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    const std::vector<Edge>& diagonals() const { return diagonals_; }

    /// Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;

    bool contains(Vertex v) const { return v >= 0 && v < n_; }
    bool has_edge(Edge e) const;
    bool is_hamiltonian_edge(Edge e) const;
    bool is_diagonal(Edge e) const;

    /// Hamiltonian edges {i, i+1} for i < n-1, then {0, n-1}.
    std::vector<Edge> hamiltonian_edges() const;
    /// All 2n-3 edges, sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Mop& a, const Mop& b)
    {
        return a.n_ == b.n_ && a.diagonals_ == b.diagonals_;
    }

private:
    friend class detail::MopAccess;
    Mop(int n, std::vector<Edge> diagonals);

    int n_ = 3;
    std::vector<Edge> diagonals_;
    std::vector<int> offsets_;  // neighbors of v: adjacency_[offsets_[v] .. offsets_[v+1])
    std::vector<Vertex> adjacency_;
};

/// Plain graph for residuals G - N[S]; labels are those of the parent instance.
class SimpleGraph
{
public:
    SimpleGraph() = default;
    /// Throws std::invalid_argument on self-loops, duplicates or foreign endpoints.
    SimpleGraph(VertexSet vertices, std::vector<Edge> edges);

    static SimpleGraph from_mop(const Mop& m);

    const VertexSet& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool empty() const { return vertices_.empty(); }

    int degree(Vertex v) const;
    int max_degree() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    VertexSet vertices_;
    std::vector<Edge> edges_;
};

struct DiagonalPartition
{
    Edge diagonal;
    Mop g1;
    Mop g2;
    LabelMap map1;  // g1 label -> parent label
    LabelMap map2;  // g2 label -> parent label
    int ell = 0;    // parent Hamiltonian edges lying in g1
};

/// A mop produced from another one together with the parent -> child label map.
struct Derived
{
    Mop mop;
    LabelMap map;
};

enum class Side
{
    Inner,  // vertices with labels strictly between the edge's endpoints
    Outer,  // the remaining vertices
};

struct FaceApex
{
    Edge edge;
    Vertex apex = 0;
};

struct Triangle
{
    Vertex a = 0, b = 0, c = 0;  // a < b < c
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

int degree(const Mop& m, Vertex v);

/// N[S]. Throws std::out_of_range for labels outside the mop.
VertexSet closed_neighborhood(const Mop& m, std::span<const Vertex> s);

/// Subgraph induced on V(m) \ N[S], original labels preserved.
SimpleGraph residual(const Mop& m, std::span<const Vertex> s);

/// Splits along a diagonal. g1 is the side spanned by the ascending arc d.u..d.v.
DiagonalPartition diagonal_partition(const Mop& m, Edge d);

/// Merges the endpoints of a Hamiltonian edge into its smaller label.
Derived contract_hamiltonian_edge(const Mop& m, Edge e);

Derived remove_degree2_vertex(const Mop& m, Vertex v);

/// Inserts a new degree-2 vertex between the endpoints of a Hamiltonian edge.
Derived add_ear(const Mop& m, Edge e);

Mop fan(int n);

/// Third vertex of the interior face on the chosen side of e. For a Hamiltonian
/// edge only one side exists and `side` may be omitted.
FaceApex apex_of_edge(const Mop& m, Edge e, std::optional<Side> side = std::nullopt);

/// The n-2 interior faces, sorted.
std::vector<Triangle> interior_faces(const Mop& m);

VertexSet degree_two_vertices(const Mop& m);

/// Vertex i -> (n - i) mod n.
Derived reverse_orientation(const Mop& m);

/// Vertex i -> (i + r) mod n.
Derived rotate(const Mop& m, int r);

/// Applies a label permutation that preserves the Hamiltonian cycle; throws
/// std::invalid_argument for any other permutation.
Mop relabel_cyclic(const Mop& m, const LabelMap& perm);

/// Image of a set under a label map; removed labels are dropped.
VertexSet map_set(const LabelMap& map, std::span<const Vertex> s);

/// Inverse of an injective map, sized to `target_size`.
LabelMap invert(const LabelMap& map, int target_size);

/// first then second.
LabelMap compose(const LabelMap& first, const LabelMap& second);

VertexSet normalized(VertexSet s);

}  // namespace mopkit
