#ifndef TEMPRES_TEMPORAL_GRAPH_HPP
#define TEMPRES_TEMPORAL_GRAPH_HPP

#include <utility>
#include <vector>

#include "tempres/time_label_set.hpp"

namespace tempres {

struct TemporalEdge {
    Vertex u = 0;
    Vertex v = 0;
    TimeLabelSet labels;

    bool operator==(const TemporalEdge&) const = default;
};

// Simple undirected graph with a time-label set per edge. Vertices are dense
// indices 0..n-1. Immutable after construction; all operations on it are pure.
class TemporalGraph {
public:
    // Single vertex, finite mode, no edges.
    TemporalGraph() { adjacency_.resize(1); }

    // Finite mode; t_max is derived from the labels present.
    static TemporalGraph finite(int n, std::vector<TemporalEdge> edges);
    // Periodic mode; every edge label set must carry the same period.
    static TemporalGraph periodic(int n, std::vector<TemporalEdge> edges, TimeStep period);

    int vertex_count() const { return n_; }
    LabelMode mode() const { return mode_; }
    bool is_periodic() const { return mode_ == LabelMode::Periodic; }
    TimeStep t_max() const { return t_max_; }   // finite mode; 0 when edgeless
    TimeStep period() const { return period_; } // periodic mode

    // Sorted by (u, v), u < v, no duplicates.
    const std::vector<TemporalEdge>& edges() const { return edges_; }
    // Per vertex: (neighbor, edge index) pairs, neighbor ascending.
    const std::vector<std::pair<Vertex, int>>& incident(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool is_k_labeling(int k) const;
    bool is_one_labeling() const { return is_k_labeling(1); }

private:
    void finish(std::vector<TemporalEdge> edges);

    int n_ = 1;
    LabelMode mode_ = LabelMode::Finite;
    TimeStep t_max_ = 0;
    TimeStep period_ = 0;
    std::vector<TemporalEdge> edges_;
    std::vector<std::vector<std::pair<Vertex, int>>> adjacency_;
};

// Uniform shift so that the smallest label becomes 1; finite mode only.
// Gaps and order of labels on each edge are preserved.
TemporalGraph normalize(const TemporalGraph& g);

} // namespace tempres

#endif
