#ifndef TEMPRES_EARLIEST_ARRIVAL_HPP
#define TEMPRES_EARLIEST_ARRIVAL_HPP

#include <span>
#include <vector>

#include "tempres/temporal_graph.hpp"

namespace tempres {

// Strict-journey earliest arrival: result[v] is the smallest final-edge label
// over journeys source -> v, 0 at the source, kInfinity when unreachable.
std::vector<TimeStep> earliest_arrival(const TemporalGraph& g, Vertex source);

// Vertices reachable from v, sorted; always contains v.
std::vector<Vertex> reach_set(const TemporalGraph& g, Vertex v);

// rea(v) minus the union of rea(w) over w in S, w != v. Requires v in S.
std::vector<Vertex> exclusive_reach(const TemporalGraph& g, std::span<const Vertex> S, Vertex v);

} // namespace tempres

#endif
