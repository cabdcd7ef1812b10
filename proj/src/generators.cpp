#include "tempres/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tempres {

PathInstance random_temporal_path(int n, TimeStep label_max, std::uint64_t seed) {
    if (n < 1 || label_max < 1)
        throw std::invalid_argument("random_temporal_path: n >= 1 and label_max >= 1 required");
    SplitMix64 rng(seed);
    PathInstance out;
    out.view.order.resize(n);
    std::iota(out.view.order.begin(), out.view.order.end(), 0);
    std::vector<TemporalEdge> edges;
    for (int i = 0; i + 1 < n; ++i) {
        TimeStep t = rng.range(1, label_max);
        out.view.labels.push_back(t);
        edges.push_back({i, i + 1, TimeLabelSet::finite({t})});
    }
    out.graph = TemporalGraph::finite(n, std::move(edges));
    return out;
}

SubstarInstance random_subdivided_star(int delta, int max_branch_len,
                                       const SubstarLabelDomain& domain, std::uint64_t seed) {
    if (delta < 3)
        throw std::invalid_argument("random_subdivided_star: delta >= 3 required");
    if (max_branch_len < 1 || domain.bound < 1)
        throw std::invalid_argument("random_subdivided_star: bad branch length or label bound");
    SplitMix64 rng(seed);
    std::vector<int> lengths(delta);
    for (auto& len : lengths)
        len = rng.range(1, max_branch_len);
    std::vector<TemporalEdge> edges;
    Vertex next = 1;
    for (int b = 0; b < delta; ++b) {
        Vertex prev = 0;
        for (int i = 0; i < lengths[b]; ++i) {
            TimeStep t = rng.range(1, domain.bound);
            TimeLabelSet labels = domain.mode == LabelMode::Finite
                                      ? TimeLabelSet::finite({t})
                                      : TimeLabelSet::periodic({t}, domain.bound);
            edges.push_back({prev, next, std::move(labels)});
            prev = next++;
        }
    }
    SubstarInstance out;
    out.graph = domain.mode == LabelMode::Finite
                    ? TemporalGraph::finite(next, std::move(edges))
                    : TemporalGraph::periodic(next, std::move(edges), domain.bound);
    out.view = make_subdivided_star_view(out.graph);
    return out;
}

TemporalGraph random_periodic_tree(int n, TimeStep p, std::uint64_t seed) {
    if (n < 2 || p < 1)
        throw std::invalid_argument("random_periodic_tree: n >= 2 and p >= 1 required");
    SplitMix64 rng(seed);
    std::vector<TemporalEdge> edges;
    for (Vertex v = 1; v < n; ++v) {
        Vertex parent = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
        TimeStep residue = rng.range(1, p);
        edges.push_back({parent, v, TimeLabelSet::periodic({residue}, p)});
    }
    return TemporalGraph::periodic(n, std::move(edges), p);
}

ThreeDMInstance random_3dm(int p_size, int s, int n, std::uint64_t seed) {
    if (p_size < 1 || 3 * p_size > n)
        throw std::invalid_argument("random_3dm: need 3 * p_size <= n");
    long long combos = static_cast<long long>(p_size) * p_size * p_size;
    if (s < 2 || s > combos)
        throw std::invalid_argument("random_3dm: need 2 <= s <= p_size^3");

    SplitMix64 rng(seed);
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    for (int i = 0; i < 3 * p_size; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(values[i], values[j]);
    }
    std::array<std::vector<int>, 3> ground;
    for (int c = 0; c < 3; ++c) {
        ground[c].assign(values.begin() + c * p_size, values.begin() + (c + 1) * p_size);
        std::sort(ground[c].begin(), ground[c].end());
    }

    std::vector<std::array<int, 3>> universe;
    for (int x : ground[0])
        for (int y : ground[1])
            for (int z : ground[2])
                universe.push_back({x, y, z});
    for (int i = 0; i < s; ++i) {
        int j = i + static_cast<int>(
                        rng.below(static_cast<std::uint64_t>(universe.size() - i)));
        std::swap(universe[i], universe[j]);
    }

    ThreeDMInstance inst;
    inst.ground_bound = n;
    inst.set_size = p_size;
    inst.triples.assign(universe.begin(), universe.begin() + s);
    std::sort(inst.triples.begin(), inst.triples.end());
    inst.target = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(s - 1)));
    inst.validate();
    return inst;
}

} // namespace tempres
