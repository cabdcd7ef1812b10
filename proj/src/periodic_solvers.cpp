#include "tempres/periodic_solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempres/errors.hpp"
#include "tempres/exact_solver.hpp"
#include "tempres/shape.hpp"
#include "tempres/star_solvers.hpp"

namespace tempres {

namespace {

void require_periodic(const TemporalGraph& g, const char* who) {
    if (!g.is_periodic())
        throw std::invalid_argument(std::string(who) + ": periodic labeling required");
}

} // namespace

std::vector<Vertex> solve_path_periodic(const TemporalGraph& g) {
    require_periodic(g, "solve_path_periodic");
    auto info = classify_shape(g);
    if (info.tag != ShapeTag::Path)
        throw std::invalid_argument("solve_path_periodic: path shape required");
    return {info.order.front()};
}

std::vector<Vertex> solve_cycle_periodic(const TemporalGraph& g) {
    require_periodic(g, "solve_cycle_periodic");
    if (!g.is_one_labeling())
        throw std::invalid_argument("solve_cycle_periodic: 1-labeling required");
    auto info = classify_shape(g);
    if (info.tag != ShapeTag::Cycle)
        throw std::invalid_argument("solve_cycle_periodic: cycle shape required");

    DistanceMatrix dm(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex single[1] = {v};
        if (dm.subset_resolves(single))
            return {v};
    }
    // No singleton: the endpoints of a locally maximally labeled edge resolve.
    const int n = g.vertex_count();
    std::vector<TimeStep> label(n);
    for (int i = 0; i < n; ++i) {
        Vertex u = info.order[i], v = info.order[(i + 1) % n];
        for (auto [w, edge_index] : g.incident(u))
            if (w == v)
                label[i] = g.edges()[edge_index].labels.values().front();
    }
    for (int i = 0; i < n; ++i) {
        TimeStep before = label[(i + n - 1) % n], after = label[(i + 1) % n];
        if (label[i] >= before && label[i] >= after) {
            Vertex u = info.order[i], v = info.order[(i + 1) % n];
            if (u > v)
                std::swap(u, v);
            return {u, v};
        }
    }
    throw std::logic_error("a locally maximally labeled edge always exists");
}

std::pair<TemporalGraph, std::vector<Vertex>> build_complete_tight(int b, TimeStep p) {
    if (b < 1 || p < 1)
        throw std::invalid_argument("build_complete_tight: b >= 1 and p >= 1 required");
    long long outside = 1;
    for (int i = 0; i < b; ++i) {
        outside *= p;
        if (b + outside > 40)
            throw GuardError("build_complete_tight guard: n <= 40");
    }
    const int n = static_cast<int>(b + outside);

    std::vector<TemporalEdge> edges;
    auto tuple_digit = [&](Vertex v, int i) {
        // i-th coordinate of the p-ary tuple of outside vertex v, in 1..p.
        long long code = v - b;
        for (int skip = b - 1; skip > i; --skip)
            code /= p;
        return static_cast<TimeStep>(code % p + 1);
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            TimeStep residue = p;
            if (u < b && v >= b)
                residue = tuple_digit(v, u);
            edges.push_back({u, v, TimeLabelSet::periodic({residue}, p)});
        }
    std::vector<Vertex> designated(b);
    for (int i = 0; i < b; ++i)
        designated[i] = i;
    return {TemporalGraph::periodic(n, std::move(edges), p), std::move(designated)};
}

TemporalGraph build_complete_worst(int n, TimeStep p) {
    if (n < 2 || p < 1)
        throw std::invalid_argument("build_complete_worst: n >= 2 and p >= 1 required");
    std::vector<TemporalEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v, TimeLabelSet::periodic({1}, p)});
    return TemporalGraph::periodic(n, std::move(edges), p);
}

std::vector<Vertex> solve_substar_periodic(const TemporalGraph& g) {
    require_periodic(g, "solve_substar_periodic");
    auto info = classify_shape(g);
    if (info.tag == ShapeTag::Path) // two-leaf case; any periodic labeling works
        return solve_path_periodic(g);
    if (!g.is_one_labeling())
        throw std::invalid_argument("solve_substar_periodic: 1-labeling required");
    if (!info.star_like())
        throw std::invalid_argument("solve_substar_periodic: subdivided star shape required");

    DistanceMatrix dm(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex single[1] = {v};
        if (dm.subset_resolves(single))
            return {v};
    }
    // Answer >= 2: some leaf-only optimum exists, and separating the center's
    // neighborhood pins at least leaf_count - p leaves.
    std::vector<Vertex> leaf_pool;
    for (const auto& branch : info.branches)
        leaf_pool.push_back(branch.back());
    std::sort(leaf_pool.begin(), leaf_pool.end());
    const int leaf_count = static_cast<int>(leaf_pool.size());
    int start = std::max(2, leaf_count - static_cast<int>(g.period()));
    for (int k = start; k <= leaf_count; ++k) {
        auto sets = all_resolving_ksubsets(dm, leaf_pool, k);
        if (!sets.empty())
            return sets.front();
    }
    throw std::logic_error("the full leaf set of a periodic subdivided star resolves");
}

namespace {

// Heap-indexed complete binary tree: children of k are 2k+1 and 2k+2.
std::vector<TemporalEdge> binary_tree_edges(int levels, bool alternate) {
    const int n = (1 << levels) - 1;
    std::vector<TemporalEdge> edges;
    for (Vertex k = 0; 2 * k + 2 < n; ++k) {
        edges.push_back({k, 2 * k + 1, TimeLabelSet::periodic({1}, 2)});
        edges.push_back({k, 2 * k + 2, TimeLabelSet::periodic({alternate ? 2 : 1}, 2)});
    }
    return edges;
}

} // namespace

std::pair<TemporalGraph, std::vector<Vertex>> build_binary_tree_alternating(int levels) {
    if (levels < 3)
        throw std::invalid_argument(
            "build_binary_tree_alternating: levels >= 3 required (no essential subtrees)");
    const int n = (1 << levels) - 1;
    auto g = TemporalGraph::periodic(n, binary_tree_edges(levels, true), 2);
    // One leaf per essential subtree: follow the all-1 (left) path down.
    std::vector<Vertex> designated;
    for (Vertex r = (1 << (levels - 3)) - 1; r < (1 << (levels - 2)) - 1; ++r)
        designated.push_back(4 * r + 3);
    return {std::move(g), std::move(designated)};
}

TemporalGraph build_binary_tree_uniform(int levels) {
    if (levels < 1)
        throw std::invalid_argument("build_binary_tree_uniform: levels >= 1 required");
    const int n = (1 << levels) - 1;
    return TemporalGraph::periodic(n, binary_tree_edges(levels, false), 2);
}

int binary_tree_levels(const StaticGraph& g) {
    if (g.n == 1)
        return 1;
    int levels = 0;
    while ((1 << levels) - 1 < g.n)
        ++levels;
    if ((1 << levels) - 1 != g.n || g.edge_count() != g.n - 1 || !is_connected(g))
        return 0;
    // The center must see two full subtrees: degree 2, all leaves at the same
    // depth, inner vertices with exactly two children.
    Vertex center = -1;
    auto far = bfs_distances(g, 0);
    Vertex u = static_cast<Vertex>(std::max_element(far.begin(), far.end()) - far.begin());
    auto du = bfs_distances(g, u);
    Vertex w = static_cast<Vertex>(std::max_element(du.begin(), du.end()) - du.begin());
    auto dw = bfs_distances(g, w);
    int diameter = du[w];
    if (diameter % 2 != 0 || diameter / 2 != levels - 1)
        return 0;
    for (Vertex v = 0; v < g.n && center == -1; ++v)
        if (du[v] == diameter / 2 && dw[v] == diameter / 2)
            center = v;
    if (center == -1 || g.adj[center].size() != 2)
        return 0;
    auto depth = bfs_distances(g, center);
    for (Vertex v = 0; v < g.n; ++v) {
        int d = static_cast<int>(g.adj[v].size());
        if (depth[v] == levels - 1 ? d != 1 : (v == center ? d != 2 : d != 3))
            return 0;
    }
    return levels;
}

std::optional<PeriodicInstanceReport> periodic_report(const TemporalGraph& g, int computed_size) {
    if (!g.is_periodic())
        return std::nullopt;
    PeriodicInstanceReport report;
    report.computed_size = computed_size;
    auto info = classify_shape(g);
    const int n = g.vertex_count();
    const TimeStep p = g.period();

    switch (info.tag) {
    case ShapeTag::Path:
        report.lower_bound = report.upper_bound = 1;
        report.bound_source = "periodic path (exact)";
        return report;
    case ShapeTag::Cycle:
        report.lower_bound = 1;
        report.upper_bound = 2;
        report.bound_source = "periodic cycle (1..2)";
        return report;
    case ShapeTag::Star:
    case ShapeTag::SubdividedStar: {
        int leaf_count = static_cast<int>(info.branches.size());
        report.lower_bound = std::max(1, leaf_count - static_cast<int>(p));
        report.upper_bound = leaf_count - 1;
        report.bound_source = "periodic subdivided star (max(1, l-p)..l-1)";
        return report;
    }
    case ShapeTag::Complete: {
        long long power = 1;
        for (int b = 1; b < n; ++b) {
            power *= p;
            if (b + power == n) {
                report.lower_bound = b;
                report.upper_bound = n - 1;
                report.bound_source = "periodic complete (b..n-1)";
                return report;
            }
            if (b + power > n)
                break;
        }
        return std::nullopt;
    }
    case ShapeTag::Tree: {
        int levels = binary_tree_levels(underlying(g));
        if (levels >= 3 && p == 2) {
            report.lower_bound = 1 << (levels - 3);
            report.upper_bound = 1 << (levels - 2);
            report.bound_source = "periodic complete binary tree (2^(n-3)..2^(n-2))";
            return report;
        }
        return std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

} // namespace tempres
