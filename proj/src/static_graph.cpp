#include "tempres/static_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tempres {

StaticGraph StaticGraph::from_edges(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
    if (n < 1)
        throw std::invalid_argument("vertex count must be >= 1");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop edge");
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    StaticGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj)
        std::sort(list.begin(), list.end());
    return g;
}

bool StaticGraph::adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

StaticGraph underlying(const TemporalGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        edges.emplace_back(e.u, e.v);
    return StaticGraph::from_edges(g.vertex_count(), std::move(edges));
}

std::vector<TimeStep> bfs_distances(const StaticGraph& g, Vertex src) {
    std::vector<TimeStep> dist(g.n, kInfinity);
    dist[src] = 0;
    std::queue<Vertex> queue;
    queue.push(src);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.adj[v])
            if (dist[w] == kInfinity) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    return dist;
}

bool is_connected(const StaticGraph& g) {
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kInfinity) == dist.end();
}

} // namespace tempres
