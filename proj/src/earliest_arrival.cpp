#include "tempres/earliest_arrival.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace tempres {

std::vector<TimeStep> earliest_arrival(const TemporalGraph& g, Vertex source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n)
        throw std::invalid_argument("earliest_arrival: source out of range");

    // Dijkstra over arrival times: next_usable is monotone in the departure
    // time, so settling vertices in arrival order is exact.
    std::vector<TimeStep> dist(n, kInfinity);
    dist[source] = 0;
    using Entry = std::pair<TimeStep, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    frontier.emplace(0, source);
    // An optimal journey waits less than one period per hop, so arrivals
    // stay below n*p in periodic mode.
    const long long cap = g.is_periodic() ? static_cast<long long>(n) * g.period() : 0;

    while (!frontier.empty()) {
        auto [t, v] = frontier.top();
        frontier.pop();
        if (t > dist[v])
            continue;
        for (auto [w, edge_index] : g.incident(v)) {
            auto depart = g.edges()[edge_index].labels.next_usable(t);
            if (!depart)
                continue;
            if (*depart < dist[w]) {
                assert(cap == 0 || *depart <= cap);
                dist[w] = *depart;
                frontier.emplace(*depart, w);
            }
        }
    }
    return dist;
}

std::vector<Vertex> reach_set(const TemporalGraph& g, Vertex v) {
    auto dist = earliest_arrival(g, v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (dist[u] != kInfinity)
            out.push_back(u);
    return out;
}

std::vector<Vertex> exclusive_reach(const TemporalGraph& g, std::span<const Vertex> S, Vertex v) {
    if (std::find(S.begin(), S.end(), v) == S.end())
        throw std::invalid_argument("exclusive_reach: v must belong to S");
    auto own = earliest_arrival(g, v);
    std::vector<bool> taken(g.vertex_count(), false);
    for (Vertex w : S) {
        if (w == v)
            continue;
        auto other = earliest_arrival(g, w);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            if (other[u] != kInfinity)
                taken[u] = true;
    }
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (own[u] != kInfinity && !taken[u])
            out.push_back(u);
    return out;
}

} // namespace tempres
