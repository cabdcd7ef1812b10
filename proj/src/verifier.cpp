#include "tempres/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempres {

namespace {

std::vector<Vertex> sorted_landmarks(const TemporalGraph& g, std::span<const Vertex> R) {
    if (R.empty())
        throw std::invalid_argument("landmark set must be non-empty");
    std::vector<Vertex> sorted(R.begin(), R.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count())
        throw std::invalid_argument("landmark out of range");
    return sorted;
}

} // namespace

std::vector<TemporalDistanceVector> distance_vectors(const TemporalGraph& g,
                                                     std::span<const Vertex> R) {
    auto landmarks = sorted_landmarks(g, R);
    const int n = g.vertex_count();
    std::vector<TemporalDistanceVector> vectors(n, TemporalDistanceVector(landmarks.size()));
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
        auto dist = earliest_arrival(g, landmarks[i]);
        for (Vertex v = 0; v < n; ++v)
            vectors[v][i] = dist[v];
    }
    return vectors;
}

ResolutionCertificate check_resolving(const TemporalGraph& g, std::span<const Vertex> R) {
    ResolutionCertificate cert;
    cert.landmarks = sorted_landmarks(g, R);
    cert.vectors = distance_vectors(g, cert.landmarks);
    const int n = g.vertex_count();

    for (Vertex v = 0; v < n; ++v) {
        bool reached = std::any_of(cert.vectors[v].begin(), cert.vectors[v].end(),
                                   [](TimeStep t) { return t != kInfinity; });
        if (!reached) {
            cert.verdict = ResolutionCertificate::Verdict::NotReaching;
            cert.unreached = v;
            return cert;
        }
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (cert.vectors[u] == cert.vectors[v]) {
                cert.verdict = ResolutionCertificate::Verdict::NotSeparating;
                cert.collision = {u, v};
                return cert;
            }
    cert.verdict = ResolutionCertificate::Verdict::Resolving;
    return cert;
}

bool is_separating_only(const TemporalGraph& g, std::span<const Vertex> R) {
    auto vectors = distance_vectors(g, R);
    std::sort(vectors.begin(), vectors.end());
    return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

} // namespace tempres
