#include "tempres/temporal_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempres {

void TemporalGraph::finish(std::vector<TemporalEdge> edges) {
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("self-loop edge");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.labels.mode() != mode_)
            throw std::invalid_argument("edge label mode differs from graph mode");
        if (mode_ == LabelMode::Periodic && e.labels.period() != period_)
            throw std::invalid_argument("edge period differs from graph period");
    }
    std::sort(edges.begin(), edges.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::invalid_argument("duplicate edge");

    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    t_max_ = 0;
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        const auto& e = edges_[i];
        adjacency_[e.u].emplace_back(e.v, i);
        adjacency_[e.v].emplace_back(e.u, i);
        if (mode_ == LabelMode::Finite)
            t_max_ = std::max(t_max_, e.labels.max_value());
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end());
}

TemporalGraph TemporalGraph::finite(int n, std::vector<TemporalEdge> edges) {
    if (n < 1)
        throw std::invalid_argument("vertex count must be >= 1");
    TemporalGraph g;
    g.n_ = n;
    g.mode_ = LabelMode::Finite;
    g.finish(std::move(edges));
    return g;
}

TemporalGraph TemporalGraph::periodic(int n, std::vector<TemporalEdge> edges, TimeStep period) {
    if (n < 1)
        throw std::invalid_argument("vertex count must be >= 1");
    if (period < 1)
        throw std::invalid_argument("period must be >= 1");
    TemporalGraph g;
    g.n_ = n;
    g.mode_ = LabelMode::Periodic;
    g.period_ = period;
    g.finish(std::move(edges));
    return g;
}

bool TemporalGraph::is_k_labeling(int k) const {
    for (const auto& e : edges_)
        if (!e.labels.within(k))
            return false;
    return true;
}

TemporalGraph normalize(const TemporalGraph& g) {
    if (g.mode() != LabelMode::Finite)
        throw std::invalid_argument("normalize: periodic residues are already canonical");
    if (g.edges().empty())
        return g;
    TimeStep min_label = kInfinity;
    for (const auto& e : g.edges())
        min_label = std::min(min_label, e.labels.values().front());
    if (min_label == 1)
        return g;
    std::vector<TemporalEdge> shifted;
    shifted.reserve(g.edges().size());
    for (const auto& e : g.edges())
        shifted.push_back({e.u, e.v, e.labels.shifted(-(min_label - 1))});
    return TemporalGraph::finite(g.vertex_count(), std::move(shifted));
}

} // namespace tempres
