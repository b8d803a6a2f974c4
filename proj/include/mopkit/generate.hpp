#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mopkit/mop.hpp"

namespace mopkit {

inline constexpr int kDefaultEnumerationCap = 13;

/// Calls `visit` once for every triangulation of the labeled convex n-gon.
///
/// Order: the face on edge {0, n-1} is chosen first with its apex ascending,
/// then the left sub-polygon is enumerated in the outer loop and the right one
/// in the inner loop, recursively.
void for_each_mop(int n, const std::function<void(const Mop&)>& visit, int cap = kDefaultEnumerationCap);

std::vector<Mop> enumerate_mops(int n, int cap = kDefaultEnumerationCap);

struct Seed
{
    std::uint64_t value = 0;
};

/// Uniform over all triangulations of the labeled n-gon; deterministic in (n, seed).
Mop random_mop(int n, Seed seed);

enum class Family
{
    Fan,
    Gt,
    Ht,
    A15,
    Bt,
    MaxDeg2,
    MinDeg2,
};

struct FamilySpec
{
    Family name = Family::Fan;
    int param = 3;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Throws std::invalid_argument when the parameter is outside the family's range.
Mop build_family(const FamilySpec& spec);

/// Stated (n, n2) of a family instance.
struct FamilyShape
{
    int n = 0;
    int n2 = 0;
};
std::optional<FamilyShape> expected_shape(const FamilySpec& spec);

/// The K_{1,2}-isolation number claimed for the extremal families, if any.
std::optional<int> expected_iota1(const FamilySpec& spec);

}  // namespace mopkit
