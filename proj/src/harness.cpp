#include "mopkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "mopkit/constructive.hpp"
#include "mopkit/io.hpp"
#include "mopkit/solvers.hpp"

namespace mopkit {

using nlohmann::json;

namespace {

constexpr Check kAllChecks[] = {Check::Lemmas, Check::Theorem1, Check::Theorem2, Check::KnownBounds,
                                Check::ExtremalValues};

constexpr int kRandomExactLimit = 20;

int parse_int(std::string_view text, std::string_view what)
{
    int value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what)
{
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = text.find(sep, start);
        parts.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
        if (at == std::string_view::npos) return parts;
        start = at + 1;
    }
}

struct Task
{
    std::optional<Mop> mop;
    std::string id;
    std::optional<FamilySpec> family;
};

class Outcome
{
public:
    explicit Outcome(InstanceReport& r) : r_(r) {}

    void record(Check c, bool ok, const std::string& why)
    {
        auto& slot = flag(c);
        slot = slot.value_or(true) && ok;
        if (!ok) r_.failures.push_back(std::string(check_name(c)) + ": " + why);
    }

    void applies(Check c)
    {
        auto& slot = flag(c);
        if (!slot) slot = true;
    }

private:
    std::optional<bool>& flag(Check c)
    {
        for (auto& [check, value] : r_.flags) {
            if (check == c) return value;
        }
        throw std::logic_error("check not selected");
    }

    InstanceReport& r_;
};

std::string set_str(const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

void check_lemmas(const Mop& m, const InstanceReport& r, Outcome& out)
{
    const int n = m.order();
    out.applies(Check::Lemmas);

    const VertexSet ears = degree_two_vertices(m);
    for (std::size_t i = 0; i < ears.size(); ++i) {
        for (std::size_t j = i + 1; j < ears.size(); ++j) {
            if (m.has_edge({ears[i], ears[j]})) {
                out.record(Check::Lemmas, false,
                           "degree-2 vertices " + std::to_string(ears[i]) + " and " + std::to_string(ears[j]) +
                               " are adjacent");
            }
        }
    }
    out.record(Check::Lemmas, 2 <= r.n2 && 2 * r.n2 <= n,
               "n2 = " + std::to_string(r.n2) + " outside [2, n/2]");

    const auto parent_edges = m.edges();
    for (Edge d : m.diagonals()) {
        const DiagonalPartition p = diagonal_partition(m, d);
        std::vector<Edge> glued;
        for (Edge e : p.g1.edges()) glued.push_back(make_edge(p.map1[e.u], p.map1[e.v]));
        for (Edge e : p.g2.edges()) glued.push_back(make_edge(p.map2[e.u], p.map2[e.v]));
        std::sort(glued.begin(), glued.end());
        auto twice = std::adjacent_find(glued.begin(), glued.end());
        const bool shares_only_d = twice != glued.end() && *twice == d &&
                                   std::adjacent_find(twice + 1, glued.end()) == glued.end();
        glued.erase(std::unique(glued.begin(), glued.end()), glued.end());
        const bool ok = p.g1.order() == p.ell + 1 && p.g2.order() == n - p.ell + 1 &&
                        p.g1.order() + p.g2.order() == n + 2 && shares_only_d && glued == parent_edges &&
                        !validate(p.g1.order(), p.g1.diagonals()) && !validate(p.g2.order(), p.g2.diagonals());
        if (!ok) out.record(Check::Lemmas, false, "partition along {" + std::to_string(d.u) + "," +
                                                      std::to_string(d.v) + "} breaks its identities");
    }

    for (Edge e : m.hamiltonian_edges()) {
        const Derived c = contract_hamiltonian_edge(m, e);
        if (c.mop.order() != n - 1 || validate(c.mop.order(), c.mop.diagonals())) {
            out.record(Check::Lemmas, false,
                       "contracting {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not a mop");
        }
    }

    auto window = [&](int lo, int hi) {
        try {
            find_partition_diagonal(m, lo, hi);
            return true;
        } catch (const ImpossibleInstance&) {
            return false;
        }
    };
    if (n >= 8) out.record(Check::Lemmas, window(4, 6), "no diagonal cuts off 4..6 Hamiltonian edges");
    if (n >= 10) out.record(Check::Lemmas, window(5, 8), "no diagonal cuts off 5..8 Hamiltonian edges");
    if (5 <= n && n <= 9 && r.exact_attempted) {
        out.record(Check::Lemmas, r.iota1_exact == 1, "iota1 is not 1 for 5 <= n <= 9");
    }
}

void check_construction(const Mop& m, Check which, InstanceReport& r, Outcome& out)
{
    const int bound = which == Check::Theorem1 ? r.bound_n_over_5 : r.bound_theorem2;
    out.applies(which);
    try {
        const Construction c = which == Check::Theorem1 ? isolate_theorem1(m) : isolate_theorem2(m);
        (which == Check::Theorem1 ? r.theorem1_size : r.theorem2_size) = c.set.size();
        out.record(which, is_isolating_set(m, c.set.members, 1),
                   "constructed set " + set_str(c.set.members) + " does not isolate");
        out.record(which, c.set.size() <= bound,
                   "constructed size " + std::to_string(c.set.size()) + " exceeds " + std::to_string(bound));
        out.record(which, c.trace.replay() == c.set.members, "trace replay differs from the returned set");
    } catch (const std::exception& e) {
        out.record(which, false, std::string("construction failed: ") + e.what());
    }
    if (r.exact_attempted) {
        out.record(which, r.iota1_exact.has_value() && *r.iota1_exact <= bound,
                   "exact iota1 exceeds " + std::to_string(bound));
    }
}

void check_known_bounds(const Mop& m, InstanceReport& r, Outcome& out)
{
    const int n = m.order();
    out.applies(Check::KnownBounds);
    const VertexSet dom = dominating_by_coloring(m);
    r.coloring_size = static_cast<int>(dom.size());
    out.record(Check::KnownBounds, is_dominating_set(m, dom), "coloring class does not dominate");
    out.record(Check::KnownBounds, *r.coloring_size <= r.bound_n_over_3, "coloring class exceeds n/3");
    if (r.exact_attempted) {
        out.record(Check::KnownBounds, r.gamma_exact.has_value() && *r.gamma_exact <= r.bound_n_over_3,
                   "exact gamma exceeds n/3");
        if (n >= 4) {
            out.record(Check::KnownBounds, r.iota0_exact.has_value() && *r.iota0_exact <= r.bound_n_over_4,
                       "exact iota0 exceeds n/4");
        }
    }
}

void check_extremal(const Mop& m, InstanceReport& r, Outcome& out)
{
    if (!r.family) return;
    out.applies(Check::ExtremalValues);
    if (auto shape = expected_shape(*r.family)) {
        out.record(Check::ExtremalValues, shape->n == m.order() && shape->n2 == r.n2,
                   "shape (" + std::to_string(m.order()) + "," + std::to_string(r.n2) + ") differs from (" +
                       std::to_string(shape->n) + "," + std::to_string(shape->n2) + ")");
    }
    if (auto expected = expected_iota1(*r.family); expected && r.exact_attempted) {
        out.record(Check::ExtremalValues, r.iota1_exact == *expected,
                   "exact iota1 differs from " + std::to_string(*expected));
    }
}

bool selected(const CampaignConfig& cfg, Check c)
{
    return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end();
}

std::vector<Task> materialize(const Source& s, std::vector<SourceError>& errors)
{
    std::vector<Task> tasks;
    switch (s.kind) {
    case Source::Kind::Enumerate:
        for (int n = s.lo; n <= s.hi; ++n) {
            int index = 0;
            for_each_mop(n, [&](const Mop& m) {
                tasks.push_back({m, "enum-n" + std::to_string(n) + "-" + std::to_string(index++), std::nullopt});
            });
        }
        break;
    case Source::Kind::Random: {
        const auto mops = random_corpus(s.n, s.count, s.seed);
        for (std::size_t i = 0; i < mops.size(); ++i) {
            tasks.push_back({mops[i], "random-n" + std::to_string(s.n) + "-" + std::to_string(i), std::nullopt});
        }
        break;
    }
    case Source::Kind::Families:
        for (const FamilySpec& f : s.families) {
            tasks.push_back({build_family(f), std::string(family_name(f.name)) + "-" + std::to_string(f.param), f});
        }
        break;
    case Source::Kind::File: {
        std::ifstream in(s.path);
        if (!in) throw std::runtime_error("cannot open " + s.path.string());
        for (InstanceLine& line : scan_instances(in)) {
            if (line.mop) {
                tasks.push_back({std::move(line.mop), "line-" + std::to_string(line.line), std::nullopt});
            } else {
                errors.push_back({line.line, line.error});
            }
        }
        break;
    }
    }
    return tasks;
}

json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

double ratio(int size, int bound) { return bound > 0 ? static_cast<double>(size) / bound : 0.0; }

}  // namespace

std::string_view check_name(Check c)
{
    switch (c) {
    case Check::Lemmas: return "lemmas";
    case Check::Theorem1: return "theorem1";
    case Check::Theorem2: return "theorem2";
    case Check::KnownBounds: return "known-bounds";
    case Check::ExtremalValues: return "extremal-values";
    }
    return "?";
}

std::optional<Check> parse_check(std::string_view name)
{
    for (Check c : kAllChecks) {
        if (check_name(c) == name) return c;
    }
    return std::nullopt;
}

std::vector<Check> parse_checks(std::string_view list)
{
    if (list == "all") return {std::begin(kAllChecks), std::end(kAllChecks)};
    std::vector<Check> out;
    for (std::string_view name : split(list, ',')) {
        auto c = parse_check(name);
        if (!c) throw std::invalid_argument("unknown check '" + std::string(name) + "'");
        if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Source parse_source(std::string_view text)
{
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("source needs a '<kind>:' prefix");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    Source s;
    if (kind == "enumerate") {
        const auto parts = split(rest, '-');
        if (parts.size() > 2) throw std::invalid_argument("enumerate range is <lo>-<hi>");
        s.kind = Source::Kind::Enumerate;
        s.lo = parse_int(parts[0], "order");
        s.hi = parts.size() == 2 ? parse_int(parts[1], "order") : s.lo;
        if (s.lo < 3 || s.hi > kDefaultEnumerationCap || s.lo > s.hi) {
            throw std::invalid_argument("enumerate range must lie within 3.." + std::to_string(kDefaultEnumerationCap));
        }
    } else if (kind == "random") {
        const auto parts = split(rest, ':');
        if (parts.size() != 3) throw std::invalid_argument("random source is random:<count>:<n>:<seed>");
        s.kind = Source::Kind::Random;
        s.count = parse_int(parts[0], "count");
        s.n = parse_int(parts[1], "order");
        s.seed = parse_u64(parts[2], "seed");
        if (s.count < 0 || s.n < 3) throw std::invalid_argument("random source needs count >= 0 and n >= 3");
    } else if (kind == "family") {
        s.kind = Source::Kind::Families;
        for (std::string_view item : split(rest, ',')) {
            const std::size_t eq = item.find('=');
            const std::string_view name = item.substr(0, eq);
            auto family = parse_family(name);
            if (!family) throw std::invalid_argument("unknown family '" + std::string(name) + "'");
            if (eq == std::string_view::npos) {
                if (*family != Family::A15) throw std::invalid_argument("family " + std::string(name) + " needs =<param>");
                s.families.push_back({*family, 0});
                continue;
            }
            const std::string_view param = item.substr(eq + 1);
            const std::size_t dots = param.find("..");
            const int a = parse_int(param.substr(0, dots), "parameter");
            const int b = dots == std::string_view::npos ? a : parse_int(param.substr(dots + 2), "parameter");
            if (a > b) throw std::invalid_argument("empty parameter range");
            for (int p = a; p <= b; ++p) {
                FamilySpec spec{*family, p};
                build_family(spec);  // rejects parameters outside the family's range
                s.families.push_back(spec);
            }
        }
    } else if (kind == "file") {
        if (rest.empty()) throw std::invalid_argument("file source needs a path");
        s.kind = Source::Kind::File;
        s.path = std::string(rest);
    } else {
        throw std::invalid_argument("unknown source kind '" + std::string(kind) + "'");
    }
    return s;
}

std::string describe(const Source& s)
{
    switch (s.kind) {
    case Source::Kind::Enumerate: return "enumerate:" + std::to_string(s.lo) + "-" + std::to_string(s.hi);
    case Source::Kind::Random:
        return "random:" + std::to_string(s.count) + ":" + std::to_string(s.n) + ":" + std::to_string(s.seed);
    case Source::Kind::Families: {
        std::string out = "family:";
        for (std::size_t i = 0; i < s.families.size(); ++i) {
            out += (i ? "," : "") + std::string(family_name(s.families[i].name)) + "=" +
                   std::to_string(s.families[i].param);
        }
        return out;
    }
    case Source::Kind::File: return "file:" + s.path.string();
    }
    return "?";
}

std::vector<Mop> random_corpus(int n, int count, std::uint64_t seed)
{
    std::vector<Mop> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_mop(n, Seed{seed + static_cast<std::uint64_t>(i)}));
    return out;
}

bool InstanceReport::passed() const
{
    return std::none_of(flags.begin(), flags.end(), [](const auto& f) { return f.second == false; });
}

InstanceReport check_instance(const Mop& m, std::string id, std::optional<FamilySpec> family,
                              const CampaignConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    const int n = m.order();
    InstanceReport r;
    r.id = std::move(id);
    r.family = family;
    r.n = n;
    r.n2 = static_cast<int>(degree_two_vertices(m).size());
    r.bound_n_over_5 = n / 5;
    r.bound_theorem2 = theorem2_bound(n, r.n2);
    r.theorem2_high = 3 * r.n2 > n;
    r.bound_n_over_3 = n / 3;
    r.bound_n_over_4 = n / 4;
    for (Check c : cfg.checks) r.flags.emplace_back(c, std::nullopt);

    const int exact_limit =
        cfg.exact_max_n.value_or(cfg.source.kind == Source::Kind::Random ? kRandomExactLimit : n);
    r.exact_attempted = cfg.exact && n <= exact_limit;
    if (r.exact_attempted) {
        const bool want_iota1 = selected(cfg, Check::Lemmas) || selected(cfg, Check::Theorem1) ||
                                selected(cfg, Check::Theorem2) || selected(cfg, Check::ExtremalValues);
        if (want_iota1) {
            if (auto s = iota_exact(m, 1, cfg.size_cap)) r.iota1_exact = s->size();
        }
        if (selected(cfg, Check::KnownBounds)) {
            if (auto s = iota_exact(m, 0, cfg.size_cap)) r.iota0_exact = s->size();
            if (auto s = gamma_exact(m, cfg.size_cap)) r.gamma_exact = static_cast<int>(s->size());
        }
    }

    Outcome out(r);
    for (Check c : cfg.checks) {
        switch (c) {
        case Check::Lemmas:
            if (n >= 4) check_lemmas(m, r, out);
            break;
        case Check::Theorem1:
        case Check::Theorem2:
            if (n >= 5) check_construction(m, c, r, out);
            break;
        case Check::KnownBounds: check_known_bounds(m, r, out); break;
        case Check::ExtremalValues: check_extremal(m, r, out); break;
        }
    }
    r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

BoundReport verify_corpus(const CampaignConfig& cfg)
{
    const auto start = std::chrono::steady_clock::now();
    BoundReport report;
    report.source = describe(cfg.source);
    report.checks = cfg.checks;
    report.exact = cfg.exact;

    std::vector<Task> tasks = materialize(cfg.source, report.errors);
    report.instances.resize(tasks.size());

    // Each worker claims indices from a shared counter and writes only its own slots.
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            report.instances[i] = check_instance(*tasks[i].mop, tasks[i].id, tasks[i].family, cfg);
        }
    };
    int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, std::max(1, static_cast<int>(tasks.size())));
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    }

    CampaignSummary& s = report.summary;
    s.instances = static_cast<int>(report.instances.size());
    s.source_errors = static_cast<int>(report.errors.size());
    for (const InstanceReport& r : report.instances) {
        if (r.passed()) {
            ++s.passed;
        } else {
            ++s.failed;
            s.failing_ids.push_back(r.id);
        }
        if (r.theorem1_size) s.worst_theorem1 = std::max(s.worst_theorem1, ratio(*r.theorem1_size, r.bound_n_over_5));
        if (r.theorem2_size) s.worst_theorem2 = std::max(s.worst_theorem2, ratio(*r.theorem2_size, r.bound_theorem2));
        if (r.iota1_exact) s.worst_iota1_exact = std::max(s.worst_iota1_exact, ratio(*r.iota1_exact, r.bound_n_over_5));
    }
    s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

json to_json(const InstanceReport& r)
{
    json out;
    out["id"] = r.id;
    if (r.family) out["family"] = {{"name", family_name(r.family->name)}, {"param", r.family->param}};
    out["n"] = r.n;
    out["n2"] = r.n2;
    out["exact"] = {{"attempted", r.exact_attempted},
                    {"iota1", opt(r.iota1_exact)},
                    {"iota0", opt(r.iota0_exact)},
                    {"gamma", opt(r.gamma_exact)}};
    out["constructed"] = {{"theorem1", opt(r.theorem1_size)},
                          {"theorem2", opt(r.theorem2_size)},
                          {"coloring_dominating", opt(r.coloring_size)}};
    out["bounds"] = {{"n_over_5", r.bound_n_over_5},
                     {"theorem2", r.bound_theorem2},
                     {"theorem2_regime", r.theorem2_high ? "high" : "low"},
                     {"n_over_3", r.bound_n_over_3},
                     {"n_over_4", r.bound_n_over_4},
                     {"n2_min", 2},
                     {"n2_max", r.n / 2}};
    json flags = json::object();
    for (const auto& [check, value] : r.flags) {
        flags[std::string(check_name(check))] = value ? json(*value) : json(nullptr);
    }
    out["checks"] = std::move(flags);
    out["passed"] = r.passed();
    out["failures"] = r.failures;
    out["time_ms"] = r.time_ms;
    return out;
}

json to_json(const BoundReport& report)
{
    json checks = json::array();
    for (Check c : report.checks) checks.push_back(check_name(c));
    json instances = json::array();
    for (const InstanceReport& r : report.instances) instances.push_back(to_json(r));
    json errors = json::array();
    for (const SourceError& e : report.errors) errors.push_back({{"line", e.line}, {"message", e.message}});
    const CampaignSummary& s = report.summary;
    return json{{"source", report.source},
                {"checks", std::move(checks)},
                {"exact", report.exact},
                {"instances", std::move(instances)},
                {"source_errors", std::move(errors)},
                {"summary",
                 {{"instances", s.instances},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"source_errors", s.source_errors},
                  {"all_passed", report.all_passed()},
                  {"failing_ids", s.failing_ids},
                  {"worst_ratios",
                   {{"theorem1", s.worst_theorem1}, {"theorem2", s.worst_theorem2}, {"iota1_exact", s.worst_iota1_exact}}},
                  {"elapsed_ms", s.elapsed_ms}}}};
}

json strip_timing(json report)
{
    if (report.contains("instances")) {
        for (json& r : report["instances"]) r.erase("time_ms");
    }
    if (report.contains("summary")) report["summary"].erase("elapsed_ms");
    return report;
}

std::string summary_text(const BoundReport& report)
{
    const CampaignSummary& s = report.summary;
    std::ostringstream out;
    out << report.source << ": " << s.instances << " instances, " << s.passed << " passed, " << s.failed
        << " failed";
    if (s.source_errors) out << ", " << s.source_errors << " unreadable lines";
    out << "; worst size/bound: theorem1 " << s.worst_theorem1 << ", theorem2 " << s.worst_theorem2
        << ", exact iota1 " << s.worst_iota1_exact << "; " << static_cast<long long>(s.elapsed_ms) << " ms";
    constexpr std::size_t kShown = 10;
    if (!s.failing_ids.empty()) {
        out << "\nfailing:";
        for (std::size_t i = 0; i < std::min(kShown, s.failing_ids.size()); ++i) out << ' ' << s.failing_ids[i];
        if (s.failing_ids.size() > kShown) out << " (+" << s.failing_ids.size() - kShown << " more)";
    }
    for (const SourceError& e : report.errors) out << "\nline " << e.line << ": " << e.message;
    return out.str();
}

}  // namespace mopkit
