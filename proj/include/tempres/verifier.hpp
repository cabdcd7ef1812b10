#ifndef TEMPRES_VERIFIER_HPP
#define TEMPRES_VERIFIER_HPP

#include <span>
#include <utility>
#include <vector>

#include "tempres/earliest_arrival.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

// One entry per landmark, in the canonical (sorted) landmark order.
using TemporalDistanceVector = std::vector<TimeStep>;

struct ResolutionCertificate {
    enum class Verdict { Resolving, NotReaching, NotSeparating };

    Verdict verdict = Verdict::Resolving;
    Vertex unreached = -1;                      // NotReaching witness
    std::pair<Vertex, Vertex> collision{-1, -1}; // NotSeparating witness, lexicographically first
    std::vector<Vertex> landmarks;               // sorted R
    std::vector<TemporalDistanceVector> vectors; // indexed by vertex

    bool resolving() const { return verdict == Verdict::Resolving; }
};

// One earliest_arrival sweep per landmark; vectors assembled per vertex.
std::vector<TemporalDistanceVector> distance_vectors(const TemporalGraph& g,
                                                     std::span<const Vertex> R);

// Both conditions of a temporal resolving set: every vertex reached from some
// landmark, and all distance vectors distinct (kInfinity compares equal to
// itself). Witness choice is deterministic: smallest unreached vertex, or the
// lexicographically smallest colliding pair.
ResolutionCertificate check_resolving(const TemporalGraph& g, std::span<const Vertex> R);

// Condition (ii) alone, for diagnostics against the weak variant.
bool is_separating_only(const TemporalGraph& g, std::span<const Vertex> R);

} // namespace tempres

#endif
