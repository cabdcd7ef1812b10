#include "tempres/shape.hpp"

#include <algorithm>

namespace tempres {

std::string to_string(ShapeTag tag) {
    switch (tag) {
    case ShapeTag::Path: return "path";
    case ShapeTag::Cycle: return "cycle";
    case ShapeTag::Star: return "star";
    case ShapeTag::SubdividedStar: return "subdivided-star";
    case ShapeTag::Complete: return "complete";
    case ShapeTag::Tree: return "tree";
    case ShapeTag::General: return "general";
    }
    return "general";
}

namespace {

// Walk a degree-<=2 graph from `start`, never stepping back over `previous`.
std::vector<Vertex> walk_from(const StaticGraph& g, Vertex start, Vertex previous) {
    std::vector<Vertex> order{start};
    Vertex current = start;
    while (true) {
        Vertex next = -1;
        for (Vertex w : g.adj[current])
            if (w != previous) {
                next = w;
                break;
            }
        if (next == -1 || next == start)
            break;
        previous = current;
        current = next;
        order.push_back(current);
    }
    return order;
}

// Branches hanging off `center`, each walked outward.
std::vector<std::vector<Vertex>> branches_of(const StaticGraph& g, Vertex center) {
    std::vector<std::vector<Vertex>> branches;
    for (Vertex first : g.adj[center])
        branches.push_back(walk_from(g, first, center));
    return branches;
}

} // namespace

ShapeInfo classify_shape(const StaticGraph& g) {
    const int n = g.n;
    const int m = g.edge_count();
    ShapeInfo info;

    if (!is_connected(g)) {
        info.tag = ShapeTag::General;
        return info;
    }

    int leaves = 0, degree_two = 0, max_degree = 0;
    Vertex leaf = -1, hub = -1;
    for (Vertex v = 0; v < n; ++v) {
        int d = static_cast<int>(g.adj[v].size());
        max_degree = std::max(max_degree, d);
        if (d == 1 && leaf == -1)
            leaf = v;
        leaves += d == 1;
        degree_two += d == 2;
        if (d >= 3)
            hub = v;
    }

    if (n == 1 || (m == n - 1 && max_degree <= 2)) {
        info.tag = ShapeTag::Path;
        info.order = n == 1 ? std::vector<Vertex>{0} : walk_from(g, leaf, -1);
        return info;
    }
    if (m == n && max_degree == 2) {
        info.tag = ShapeTag::Cycle;
        info.order = walk_from(g, 0, -1);
        return info;
    }
    if (m == n - 1) {
        int hubs = n - leaves - degree_two;
        if (hubs == 1) {
            info.center = hub;
            info.branches = branches_of(g, hub);
            bool all_single = std::all_of(info.branches.begin(), info.branches.end(),
                                          [](const auto& b) { return b.size() == 1; });
            info.tag = all_single ? ShapeTag::Star : ShapeTag::SubdividedStar;
            return info;
        }
        info.tag = ShapeTag::Tree;
        return info;
    }
    if (2 * m == n * (n - 1)) {
        info.tag = ShapeTag::Complete;
        return info;
    }
    info.tag = ShapeTag::General;
    return info;
}

ShapeInfo classify_shape(const TemporalGraph& g) { return classify_shape(underlying(g)); }

} // namespace tempres
