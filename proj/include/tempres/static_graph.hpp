#ifndef TEMPRES_STATIC_GRAPH_HPP
#define TEMPRES_STATIC_GRAPH_HPP

#include <utility>
#include <vector>

#include "tempres/temporal_graph.hpp"

namespace tempres {

// Plain undirected graph: reduction inputs and underlying-graph queries.
struct StaticGraph {
    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges; // u < v, sorted, unique
    std::vector<std::vector<Vertex>> adj;

    static StaticGraph from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    bool adjacent(Vertex u, Vertex v) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

StaticGraph underlying(const TemporalGraph& g);

// Hop distances from src; kInfinity for unreachable vertices.
std::vector<TimeStep> bfs_distances(const StaticGraph& g, Vertex src);

bool is_connected(const StaticGraph& g);

} // namespace tempres

#endif
