#ifndef TEMPRES_TESTS_BUILDERS_HPP
#define TEMPRES_TESTS_BUILDERS_HPP

#include <vector>

#include "tempres/temporal_graph.hpp"

namespace tempres::testing {

inline TemporalEdge fedge(Vertex u, Vertex v, std::vector<TimeStep> labels) {
    return {u, v, TimeLabelSet::finite(std::move(labels))};
}

inline TemporalEdge pedge(Vertex u, Vertex v, std::vector<TimeStep> residues, TimeStep p) {
    return {u, v, TimeLabelSet::periodic(std::move(residues), p)};
}

// Path 0-1-2-... with one finite label per edge.
inline TemporalGraph finite_path(const std::vector<TimeStep>& labels) {
    std::vector<TemporalEdge> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        edges.push_back(fedge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1), {labels[i]}));
    return TemporalGraph::finite(static_cast<int>(labels.size()) + 1, std::move(edges));
}

// Path with one residue per edge.
inline TemporalGraph periodic_path(const std::vector<TimeStep>& residues, TimeStep p) {
    std::vector<TemporalEdge> edges;
    for (std::size_t i = 0; i < residues.size(); ++i)
        edges.push_back(pedge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1), {residues[i]}, p));
    return TemporalGraph::periodic(static_cast<int>(residues.size()) + 1, std::move(edges), p);
}

// Star with center 0 and leaves 1..k, one finite label per center edge.
inline TemporalGraph finite_star(const std::vector<TimeStep>& labels) {
    std::vector<TemporalEdge> edges;
    for (std::size_t i = 0; i < labels.size(); ++i)
        edges.push_back(fedge(0, static_cast<Vertex>(i + 1), {labels[i]}));
    return TemporalGraph::finite(static_cast<int>(labels.size()) + 1, std::move(edges));
}

// Cycle 0-1-...-(n-1)-0 with one residue per edge; residues[i] labels edge (i, i+1 mod n).
inline TemporalGraph periodic_cycle(const std::vector<TimeStep>& residues, TimeStep p) {
    const int n = static_cast<int>(residues.size());
    std::vector<TemporalEdge> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back(pedge(i, (i + 1) % n, {residues[i]}, p));
    return TemporalGraph::periodic(n, std::move(edges), p);
}

} // namespace tempres::testing

#endif
