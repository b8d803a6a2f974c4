#pragma once

// Constructive K_{1,2}-isolating sets for mops.
//
// Both constructions reduce the instance along a diagonal that cuts off 5 to 8
// Hamiltonian edges, solve the smaller mop, and lift its solution back with one
// extra vertex. The instance is first relabeled so that the cut-off side is
// 0..ell with the cutting diagonal {0, ell}; "apex" is the third vertex of the
// face on that diagonal inside the cut-off side.

#include <stdexcept>
#include <string_view>
#include <vector>

#include "mopkit/mop.hpp"
#include "mopkit/solvers.hpp"

namespace mopkit {

/// A diagonal that lies inside one of the lemma regimes fails to exist only if
/// the input is not a mop. Seeing this exception means a disproof candidate.
class ImpossibleInstance : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct PartitionChoice
{
    Edge diagonal;       // source labels
    int ell = 0;         // Hamiltonian edges on the cut-off side
    Mop oriented;        // cut-off side is 0..ell, diagonal is {0, ell}
    LabelMap to_source;  // oriented label -> source label
    int rotation = 0;    // oriented label = (source label + rotation) mod n
    bool reflected = false;
    Vertex apex = 0;     // oriented label in 1..ell-1
};

/// Scans every diagonal and both of its sides; picks the smallest ell in
/// [lo, hi], then the lexicographically smallest diagonal, then the ascending side.
PartitionChoice find_partition_diagonal(const Mop& m, int lo, int hi);

enum class ProofCase
{
    Base,
    Ell5,
    Ell6,
    Ell7,
    Ell8,
    Subclaim41,
    Contraction,
    RePartition,
    HighDegree2,
};

std::string_view proof_case_name(ProofCase c);

struct TraceStep
{
    ProofCase kind = ProofCase::Base;
    int n = 0;            // order of the instance the step acted on
    VertexSet added;      // root labels
    bool reflected = false;
};

struct ConstructionTrace
{
    std::vector<TraceStep> steps;

    /// Union of every step's additions.
    VertexSet replay() const;
};

struct Construction
{
    IsolatingSet set;
    ConstructionTrace trace;
};

/// Minimum K_{1,2}-isolating set of a mop with n <= 10 by exhaustive search.
/// Throws std::runtime_error if nothing of size <= cap isolates.
IsolatingSet isolate_small(const Mop& m, int cap);

/// Isolating set of size <= floor(n/5), n >= 5.
Construction isolate_theorem1(const Mop& m);

/// Isolating set of size <= theorem2_bound(n, n2), n >= 5.
Construction isolate_theorem2(const Mop& m);

/// floor((n+n2)/6) when 3*n2 <= n, floor((n-n2)/3) otherwise.
int theorem2_bound(int n, int n2);

}  // namespace mopkit
