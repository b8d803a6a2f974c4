#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mopkit/mop.hpp"

namespace mopkit {

enum class Provenance
{
    Exact,
    Theorem1,
    Theorem2Low,
    Theorem2High,
    Manual,
};

std::string_view provenance_name(Provenance p);

/// A vertex set that isolates against the star K_{1,k+1}.
struct IsolatingSet
{
    VertexSet members;
    int k = 1;
    Provenance provenance = Provenance::Manual;

    int size() const { return static_cast<int>(members.size()); }
};

/// Proper 3-coloring, entries in {0, 1, 2}.
struct Coloring
{
    std::vector<int> colors;
};

/// True iff some vertex has at least k+1 neighbors, i.e. g contains K_{1,k+1}.
bool contains_star(const SimpleGraph& g, int k);

bool is_isolating_set(const Mop& m, std::span<const Vertex> s, int k);
bool is_dominating_set(const Mop& m, std::span<const Vertex> s);

/// size_cap used when none is given: floor(n/3) + 1.
int default_size_cap(const Mop& m);

/// Smallest K_{1,k+1}-isolating set, lexicographically first among minimum ones,
/// or nullopt when none of size <= size_cap exists.
std::optional<IsolatingSet> iota_exact(const Mop& m, int k, std::optional<int> size_cap = std::nullopt);

/// Smallest dominating set, lexicographically first among minimum ones.
std::optional<VertexSet> gamma_exact(const Mop& m, std::optional<int> size_cap = std::nullopt);

/// Ear-peeling 3-coloring; removes the lowest-label degree-2 vertex first.
Coloring three_color(const Mop& m);

/// Smallest color class of three_color(m) (lowest color index on ties).
VertexSet dominating_by_coloring(const Mop& m);

}  // namespace mopkit
