#include "mopkit/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

namespace mopkit {

namespace {

void triangulate(int lo, int hi, std::vector<Edge>& diagonals, const std::function<void()>& done)
{
    if (hi - lo < 2) {
        done();
        return;
    }
    for (Vertex apex = lo + 1; apex < hi; ++apex) {
        const std::size_t mark = diagonals.size();
        if (apex - lo >= 2) diagonals.push_back({lo, apex});
        if (hi - apex >= 2) diagonals.push_back({apex, hi});
        triangulate(lo, apex, diagonals, [&] { triangulate(apex, hi, diagonals, done); });
        diagonals.resize(mark);
    }
}

// A mop to be glued along one of its Hamiltonian edges, in arbitrary ids.
struct Piece
{
    std::vector<int> cycle;
    std::vector<std::pair<int, int>> edges;
    int from = 0;
    int to = 0;
};

Piece piece_of(const Mop& m, int offset, Vertex from, Vertex to)
{
    Piece p;
    for (Vertex v = 0; v < m.order(); ++v) p.cycle.push_back(offset + v);
    for (Edge e : m.edges()) p.edges.emplace_back(offset + e.u, offset + e.v);
    p.from = offset + from;
    p.to = offset + to;
    return p;
}

// Walk around the piece's cycle from `from` to `to` avoiding the edge between them.
std::vector<int> long_route(const Piece& p)
{
    const int len = static_cast<int>(p.cycle.size());
    const auto i = static_cast<int>(std::find(p.cycle.begin(), p.cycle.end(), p.from) - p.cycle.begin());
    const auto j = static_cast<int>(std::find(p.cycle.begin(), p.cycle.end(), p.to) - p.cycle.begin());
    const int step = j == (i + 1) % len ? len - 1 : 1;
    std::vector<int> route;
    for (int k = i; k != j; k = (k + step) % len) route.push_back(p.cycle[k]);
    route.push_back(p.to);
    return route;
}

// Glues the pieces onto a joining polygon whose cycle is from_0 to_0 from_1 to_1 ...,
// with edge from_i to_i shared with piece i. The joining polygon is fanned from from_0.
Mop join(const std::vector<Piece>& pieces)
{
    std::vector<int> joint;
    for (const Piece& p : pieces) {
        joint.push_back(p.from);
        joint.push_back(p.to);
    }
    std::vector<int> cycle;
    std::vector<std::pair<int, int>> edges;
    for (const Piece& p : pieces) {
        auto route = long_route(p);
        cycle.insert(cycle.end(), route.begin(), route.end() - 1);
        cycle.push_back(p.to);
        edges.insert(edges.end(), p.edges.begin(), p.edges.end());
    }
    const int k = static_cast<int>(joint.size());
    for (int i = 0; i < k; ++i) edges.emplace_back(joint[i], joint[(i + 1) % k]);
    for (int i = 2; i <= k - 2; ++i) edges.emplace_back(joint[0], joint[i]);
    std::sort(edges.begin(), edges.end(), [](auto a, auto b) {
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](auto a, auto b) {
                                return std::minmax(a.first, a.second) == std::minmax(b.first, b.second);
                            }),
                edges.end());
    return Mop::from_cycle(cycle, edges);
}

// F5 as fan(5): center 0, path 1-2-3-4.
Piece fan5_piece(int offset, Vertex from, Vertex to) { return piece_of(fan(5), offset, from, to); }

Mop joined_fans(int t, Vertex first, Vertex second)
{
    std::vector<Piece> pieces;
    for (int i = 0; i < t; ++i) pieces.push_back(fan5_piece(5 * i, first, second));
    return join(pieces);
}

// Three F5 joined through a hexagon x2 x3 y3 y2 z2 z1.
Mop a15()
{
    std::vector<Piece> pieces{fan5_piece(0, 2, 3), fan5_piece(5, 3, 2), fan5_piece(10, 2, 1)};
    return join(pieces);
}

Mop max_deg2(int p)
{
    const Mop base = fan(p);
    std::vector<int> cycle(2 * p);
    for (int i = 0; i < 2 * p; ++i) cycle[i] = i;
    std::vector<std::pair<int, int>> edges;
    for (Edge e : base.edges()) edges.emplace_back(2 * e.u, 2 * e.v);
    for (int i = 0; i < p; ++i) {
        edges.emplace_back(2 * i + 1, 2 * i);
        edges.emplace_back(2 * i + 1, (2 * i + 2) % (2 * p));
    }
    return Mop::from_cycle(cycle, edges);
}

// Zigzag x2x_n, x_nx_3, x_3x_{n-1}, ... in 1-based cycle positions.
Mop min_deg2(int n)
{
    std::vector<Edge> diagonals;
    int left = 2, right = n;
    bool advance_left = true;
    while (static_cast<int>(diagonals.size()) < n - 3) {
        diagonals.push_back(make_edge(left - 1, right - 1));
        if (advance_left) {
            ++left;
        } else {
            --right;
        }
        advance_left = !advance_left;
    }
    return Mop::make(n, std::move(diagonals));
}

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::Fan, "Fan"},
    {Family::Gt, "Gt"},
    {Family::Ht, "Ht"},
    {Family::A15, "A15"},
    {Family::Bt, "Bt"},
    {Family::MaxDeg2, "MaxDeg2"},
    {Family::MinDeg2, "MinDeg2"},
}};

int minimum_param(Family f)
{
    switch (f) {
    case Family::Fan: return 3;
    case Family::Gt:
    case Family::Ht:
    case Family::Bt: return 2;
    case Family::A15: return 0;
    case Family::MaxDeg2: return 3;
    case Family::MinDeg2: return 4;
    }
    return 0;
}

}  // namespace

void for_each_mop(int n, const std::function<void(const Mop&)>& visit, int cap)
{
    if (n < 3 || n > cap) {
        throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside 3.." +
                                    std::to_string(cap));
    }
    std::vector<Edge> diagonals;
    triangulate(0, n - 1, diagonals, [&] { visit(Mop::make(n, diagonals)); });
}

std::vector<Mop> enumerate_mops(int n, int cap)
{
    std::vector<Mop> out;
    for_each_mop(n, [&](const Mop& m) { out.push_back(m); }, cap);
    return out;
}

Mop random_mop(int n, Seed seed)
{
    if (n < 3) throw std::invalid_argument("random mop order must be at least 3");
    const int internal = n - 2;
    const int length = 2 * internal + 1;

    // Preorder word of a binary tree: 1 = internal node, 0 = leaf.
    std::vector<char> word(length, 0);
    std::fill(word.begin(), word.begin() + internal, 1);
    std::mt19937_64 rng(seed.value);
    for (int i = length - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(word[i], word[pick(rng)]);
    }
    // Cycle lemma: the rotation starting after the first prefix minimum is a valid tree.
    int sum = 0, best = 0, start = 0;
    for (int i = 0; i < length; ++i) {
        sum += word[i] ? 1 : -1;
        if (sum < best) {
            best = sum;
            start = i + 1;
        }
    }
    std::rotate(word.begin(), word.begin() + (start % length), word.end());

    std::vector<int> size(length, 1);
    for (int i = length - 1; i >= 0; --i) {
        if (word[i]) size[i] = 1 + size[i + 1] + size[i + 1 + size[i + 1]];
    }

    // Each internal node covers polygon edge {lo, hi}; its apex splits the chain
    // lo..hi according to the number of leaves in the left subtree.
    struct Task
    {
        int pos, lo, hi;
    };
    std::vector<Edge> diagonals;
    std::vector<Task> stack{{0, 0, n - 1}};
    while (!stack.empty()) {
        const Task task = stack.back();
        stack.pop_back();
        if (!word[task.pos]) continue;
        const int left = task.pos + 1;
        const int right = left + size[left];
        const Vertex apex = task.lo + (size[left] + 1) / 2;
        if (apex - task.lo >= 2) diagonals.push_back({task.lo, apex});
        if (task.hi - apex >= 2) diagonals.push_back({apex, task.hi});
        stack.push_back({right, apex, task.hi});
        stack.push_back({left, task.lo, apex});
    }
    return Mop::make(n, std::move(diagonals));
}

std::string_view family_name(Family f)
{
    for (auto [family, name] : kFamilyNames) {
        if (family == f) return name;
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (auto [family, text] : kFamilyNames) {
        if (text == name) return family;
    }
    return std::nullopt;
}

Mop build_family(const FamilySpec& spec)
{
    if (spec.name != Family::A15 && spec.param < minimum_param(spec.name)) {
        throw std::invalid_argument(std::string(family_name(spec.name)) + " requires param >= " +
                                    std::to_string(minimum_param(spec.name)));
    }
    const int t = spec.param;
    switch (spec.name) {
    case Family::Fan: return fan(t);
    case Family::Gt: return joined_fans(t, 1, 2);  // degree-2 end and its degree-3 neighbor
    case Family::Ht: return joined_fans(t, 2, 3);  // the two degree-3 path vertices
    case Family::A15: return a15();
    case Family::Bt: {
        // In standalone A15 labels, x3 = 4 and y3 = 5 are cycle-adjacent.
        const Mop block = a15();
        std::vector<Piece> pieces;
        for (int i = 0; i < t; ++i) pieces.push_back(piece_of(block, 15 * i, 4, 5));
        return join(pieces);
    }
    case Family::MaxDeg2: return max_deg2(t);
    case Family::MinDeg2: return min_deg2(t);
    }
    throw std::invalid_argument("unknown family");
}

std::optional<FamilyShape> expected_shape(const FamilySpec& spec)
{
    const int t = spec.param;
    switch (spec.name) {
    case Family::Fan: return FamilyShape{t, t == 3 ? 3 : 2};
    case Family::Gt: return FamilyShape{5 * t, t};
    case Family::Ht: return FamilyShape{5 * t, 2 * t};
    case Family::A15: return FamilyShape{15, 5};
    case Family::Bt: return FamilyShape{15 * t, 5 * t};
    case Family::MaxDeg2: return FamilyShape{2 * t, t};
    case Family::MinDeg2: return FamilyShape{t, 2};
    }
    return std::nullopt;
}

std::optional<int> expected_iota1(const FamilySpec& spec)
{
    switch (spec.name) {
    case Family::Fan: return 1;
    case Family::Gt:
    case Family::Ht: return spec.param;
    case Family::A15: return 3;
    case Family::Bt: return 3 * spec.param;
    case Family::MaxDeg2:
    case Family::MinDeg2: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace mopkit
