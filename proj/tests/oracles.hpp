#pragma once

// Deliberately naive reference implementations used to cross-check the library.
// They work from plain edge lists and never call the code under test beyond
// reading a mop's order and diagonals.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mopkit/mop.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList edge_list(const mopkit::Mop& m)
{
    EdgeList out;
    const int n = m.order();
    for (int i = 0; i < n; ++i) out.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    for (const auto& d : m.diagonals()) out.emplace_back(d.u, d.v);
    return out;
}

inline std::vector<std::vector<bool>> adjacency(int n, const EdgeList& edges)
{
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
    return adj;
}

// Triangulations of a convex polygon with v vertices: pick the apex of the
// face on one fixed side and multiply the two remaining polygons.
inline std::uint64_t catalan_polygons(int v)
{
    static std::map<int, std::uint64_t> memo;
    if (v <= 3) return 1;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int k = 2; k <= v - 1; ++k) total += catalan_polygons(k) * catalan_polygons(v - k + 1);
    return memo[v] = total;
}

// Is there a vertex c and k+1 distinct other vertices all adjacent to c?
inline bool has_star_naive(int n, const std::vector<std::vector<bool>>& adj, const std::vector<bool>& present, int k)
{
    const int leaves = k + 1;
    for (int c = 0; c < n; ++c) {
        if (!present[c]) continue;
        // Try every leaf subset of size `leaves` by bitmask.
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != leaves || (mask >> c) & 1u) continue;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                if ((mask >> v) & 1u) ok = present[v] && adj[c][v];
            }
            if (ok) return true;
        }
    }
    return false;
}

inline bool isolates_naive(int n, const EdgeList& edges, const std::vector<int>& s, int k)
{
    const auto adj = adjacency(n, edges);
    std::vector<bool> present(n, true);
    for (int v : s) {
        present[v] = false;
        for (int w = 0; w < n; ++w) {
            if (adj[v][w]) present[w] = false;
        }
    }
    // Star search on the induced residual by counting residual neighbors.
    for (int c = 0; c < n; ++c) {
        if (!present[c]) continue;
        int deg = 0;
        for (int w = 0; w < n; ++w) deg += present[w] && adj[c][w];
        if (deg >= k + 1) return false;
    }
    return true;
}

inline bool dominates_naive(int n, const EdgeList& edges, const std::vector<int>& s)
{
    const auto adj = adjacency(n, edges);
    for (int v = 0; v < n; ++v) {
        bool hit = false;
        for (int w : s) hit = hit || w == v || adj[v][w];
        if (!hit) return false;
    }
    return true;
}

// Minimum over all 2^n subsets; k < 0 means domination.
inline int minimum_naive(const mopkit::Mop& m, int k)
{
    const int n = m.order();
    const EdgeList edges = edge_list(m);
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v) & 1u) s.push_back(v);
        }
        if (k < 0 ? dominates_naive(n, edges, s) : isolates_naive(n, edges, s, k)) best = size;
    }
    return best;
}

// Crossing test straight from the definition of interleaving endpoints.
inline bool crosses(std::pair<int, int> a, std::pair<int, int> b)
{
    auto [p, q] = a;
    auto [r, s] = b;
    return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

}  // namespace oracle
