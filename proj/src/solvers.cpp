#include "mopkit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace mopkit {

namespace {

// Bit rows: a single word for n <= 64, a word vector above.
struct NarrowRow
{
    std::uint64_t bits = 0;

    explicit NarrowRow(int /*n*/) {}
    void set(int i) { bits |= std::uint64_t{1} << i; }
    bool test(int i) const { return (bits >> i) & 1u; }
    NarrowRow& operator|=(const NarrowRow& o)
    {
        bits |= o.bits;
        return *this;
    }
    bool none() const { return bits == 0; }
    int count_and(const NarrowRow& o) const { return std::popcount(bits & o.bits); }
    NarrowRow minus(const NarrowRow& o) const
    {
        NarrowRow r(0);
        r.bits = bits & ~o.bits;
        return r;
    }
};

struct WideRow
{
    std::vector<std::uint64_t> words;

    explicit WideRow(int n) : words((n + 63) / 64, 0) {}
    void set(int i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(int i) const { return (words[i / 64] >> (i % 64)) & 1u; }
    WideRow& operator|=(const WideRow& o)
    {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
        return *this;
    }
    bool none() const
    {
        return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
    }
    int count_and(const WideRow& o) const
    {
        int c = 0;
        for (std::size_t w = 0; w < words.size(); ++w) c += std::popcount(words[w] & o.words[w]);
        return c;
    }
    WideRow minus(const WideRow& o) const
    {
        WideRow r = *this;
        for (std::size_t w = 0; w < words.size(); ++w) r.words[w] &= ~o.words[w];
        return r;
    }
};

// Increasing-cardinality, lexicographic subset search. A negative star parameter
// asks for domination (empty residual).
template <class Row>
class SubsetSearch
{
public:
    SubsetSearch(const Mop& m, int k) : n_(m.order()), k_(k), full_(n_)
    {
        open_.reserve(n_);
        closed_.reserve(n_);
        for (Vertex v = 0; v < n_; ++v) {
            Row row(n_);
            for (Vertex w : m.neighbors(v)) row.set(w);
            open_.push_back(row);
            row.set(v);
            closed_.push_back(row);
            full_.set(v);
        }
    }

    std::optional<VertexSet> minimum(int cap)
    {
        for (int size = 0; size <= std::min(cap, n_); ++size) {
            chosen_.assign(size, 0);
            if (choose(0, 0, Row(n_))) return chosen_;
        }
        return std::nullopt;
    }

private:
    bool accept(const Row& covered) const
    {
        const Row rest = full_.minus(covered);
        if (k_ < 0) return rest.none();
        for (Vertex v = 0; v < n_; ++v) {
            if (rest.test(v) && open_[v].count_and(rest) >= k_ + 1) return false;
        }
        return true;
    }

    bool choose(int start, int depth, const Row& covered)
    {
        const int size = static_cast<int>(chosen_.size());
        if (depth == size) return accept(covered);
        for (Vertex v = start; v <= n_ - (size - depth); ++v) {
            chosen_[depth] = v;
            Row next = covered;
            next |= closed_[v];
            if (choose(v + 1, depth + 1, next)) return true;
        }
        return false;
    }

    int n_;
    int k_;
    Row full_;
    std::vector<Row> open_;
    std::vector<Row> closed_;
    VertexSet chosen_;
};

std::optional<VertexSet> subset_minimum(const Mop& m, int k, int cap)
{
    if (m.order() <= 64) return SubsetSearch<NarrowRow>(m, k).minimum(cap);
    return SubsetSearch<WideRow>(m, k).minimum(cap);
}

}  // namespace

std::string_view provenance_name(Provenance p)
{
    switch (p) {
    case Provenance::Exact: return "exact";
    case Provenance::Theorem1: return "theorem1";
    case Provenance::Theorem2Low: return "theorem2-low";
    case Provenance::Theorem2High: return "theorem2-high";
    case Provenance::Manual: return "manual";
    }
    return "?";
}

bool contains_star(const SimpleGraph& g, int k)
{
    if (k < 0) throw std::invalid_argument("star parameter must be non-negative");
    return g.max_degree() >= k + 1;
}

bool is_isolating_set(const Mop& m, std::span<const Vertex> s, int k)
{
    if (k < 0) throw std::invalid_argument("star parameter must be non-negative");
    const VertexSet covered = closed_neighborhood(m, s);
    std::vector<char> alive(m.order(), 1);
    for (Vertex v : covered) alive[v] = 0;
    for (Vertex v = 0; v < m.order(); ++v) {
        if (!alive[v]) continue;
        int deg = 0;
        for (Vertex w : m.neighbors(v)) deg += alive[w];
        if (deg >= k + 1) return false;
    }
    return true;
}

bool is_dominating_set(const Mop& m, std::span<const Vertex> s)
{
    return static_cast<int>(closed_neighborhood(m, s).size()) == m.order();
}

int default_size_cap(const Mop& m) { return m.order() / 3 + 1; }

std::optional<IsolatingSet> iota_exact(const Mop& m, int k, std::optional<int> size_cap)
{
    if (k < 0) throw std::invalid_argument("star parameter must be non-negative");
    auto found = subset_minimum(m, k, size_cap.value_or(default_size_cap(m)));
    if (!found) return std::nullopt;
    return IsolatingSet{std::move(*found), k, Provenance::Exact};
}

std::optional<VertexSet> gamma_exact(const Mop& m, std::optional<int> size_cap)
{
    return subset_minimum(m, -1, size_cap.value_or(default_size_cap(m)));
}

Coloring three_color(const Mop& m)
{
    const int n = m.order();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    std::set<Vertex> ears;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = m.degree(v);
        if (deg[v] == 2) ears.insert(v);
    }

    struct Peeled
    {
        Vertex v, a, b;
    };
    std::vector<Peeled> peeled;
    for (int remaining = n; remaining > 3; --remaining) {
        const Vertex v = *ears.begin();
        ears.erase(ears.begin());
        Vertex live[2] = {kRemoved, kRemoved};
        int found = 0;
        for (Vertex w : m.neighbors(v)) {
            if (removed[w]) continue;
            if (found < 2) live[found] = w;
            ++found;
        }
        if (found != 2) throw std::logic_error("peeled vertex does not have degree 2");
        removed[v] = 1;
        peeled.push_back({v, live[0], live[1]});
        for (Vertex w : live) {
            if (--deg[w] == 2) ears.insert(w);
        }
    }

    Coloring c{std::vector<int>(n, -1)};
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (!removed[v]) c.colors[v] = next++;
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        c.colors[it->v] = 3 - c.colors[it->a] - c.colors[it->b];
    }
    return c;
}

VertexSet dominating_by_coloring(const Mop& m)
{
    const Coloring c = three_color(m);
    std::vector<VertexSet> classes(3);
    for (Vertex v = 0; v < m.order(); ++v) classes[c.colors[v]].push_back(v);
    return *std::min_element(classes.begin(), classes.end(),
                             [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
}

}  // namespace mopkit
