#include "tempres/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tempres/errors.hpp"

namespace tempres {

void ThreeDMInstance::validate() const {
    if (triples.empty())
        throw std::invalid_argument("3dm: at least one triple required");
    if (target < 0 || target >= triple_count())
        throw std::invalid_argument("3dm: target must satisfy 0 <= target < |triples|");
    std::array<std::set<int>, 3> ground;
    for (const auto& t : triples)
        for (int c = 0; c < 3; ++c) {
            if (t[c] < 1 || t[c] > ground_bound)
                throw std::invalid_argument("3dm: coordinate outside 1..n");
            ground[c].insert(t[c]);
        }
    for (int c = 0; c < 3; ++c) {
        if (static_cast<int>(ground[c].size()) > set_size)
            throw std::invalid_argument("3dm: more coordinate values than the declared set size");
        for (int d = c + 1; d < 3; ++d)
            for (int value : ground[c])
                if (ground[d].contains(value))
                    throw std::invalid_argument("3dm: ground sets must be pairwise disjoint");
    }
    auto copy = triples;
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
        throw std::invalid_argument("3dm: duplicate triple");
}

namespace {

bool disjoint_triples(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return a[0] != b[0] && a[1] != b[1] && a[2] != b[2];
}

std::vector<int> checked_matching(const ThreeDMInstance& inst, std::span<const int> matched) {
    std::vector<int> m(matched.begin(), matched.end());
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end())
        throw std::invalid_argument("matching: repeated triple index");
    for (int i : m)
        if (i < 0 || i >= inst.triple_count())
            throw std::invalid_argument("matching: triple index out of range");
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            if (!disjoint_triples(inst.triples[m[a]], inst.triples[m[b]]))
                throw std::invalid_argument("matching: triples share a coordinate");
    return m;
}

} // namespace

int brute_force_3dm(const ThreeDMInstance& inst) {
    inst.validate();
    const int s = inst.triple_count();
    if (s > 12)
        throw GuardError("brute_force_3dm guard: |triples| <= 12");
    int best = 0;
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<int> picked;
        for (int i = 0; i < s; ++i)
            if (mask & (1u << i))
                picked.push_back(i);
        bool ok = true;
        for (std::size_t a = 0; a < picked.size() && ok; ++a)
            for (std::size_t b = a + 1; b < picked.size() && ok; ++b)
                ok = disjoint_triples(inst.triples[picked[a]], inst.triples[picked[b]]);
        if (ok)
            best = std::max(best, static_cast<int>(picked.size()));
    }
    return best;
}

TemporalGraph reduce_adjacency_to_complete(const StaticGraph& g) {
    std::vector<TemporalEdge> edges;
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = u + 1; v < g.n; ++v)
            edges.push_back({u, v, TimeLabelSet::finite({g.adjacent(u, v) ? 1 : 2})});
    return TemporalGraph::finite(g.n, std::move(edges));
}

SubstarReduction reduce_3dm_to_substar(const ThreeDMInstance& inst, BudgetRule rule) {
    inst.validate();
    const int s = inst.triple_count();

    SubstarReduction red;
    red.instance = inst;
    red.center = 0;
    red.control = {1, 2, 3};
    std::vector<TemporalEdge> edges = {
        {0, 1, TimeLabelSet::finite({2})},
        {1, 2, TimeLabelSet::finite({1})},
        {2, 3, TimeLabelSet::finite({3})},
    };
    for (int i = 0; i < s; ++i) {
        auto sorted = inst.triples[i];
        std::sort(sorted.begin(), sorted.end());
        Vertex a = 4 + 3 * i, b = 5 + 3 * i, c = 6 + 3 * i;
        red.element.push_back({a, b, c});
        edges.push_back({0, a, TimeLabelSet::finite({2, sorted[0] + 4})});
        edges.push_back({a, b, TimeLabelSet::finite({3, sorted[1] + 4})});
        edges.push_back({b, c, TimeLabelSet::finite({4, sorted[2] + 4})});
    }
    red.graph = TemporalGraph::finite(3 * s + 4, std::move(edges));
    red.budget = (rule == BudgetRule::Proof ? s + 1 : s + 2) - inst.target;
    return red;
}

namespace {

TreeReduction build_tree_gadget(const ThreeDMInstance& inst, bool intervals) {
    inst.validate();
    const int n = inst.ground_bound;
    const int s = inst.triple_count();
    if (n < 3)
        throw std::invalid_argument("3dm tree gadget: ground bound must be >= 3");

    TreeReduction red;
    red.instance = inst;
    red.center = 0;
    Vertex next = 1;
    std::vector<TemporalEdge> edges;
    auto fresh = [&next] { return next++; };
    auto host_pendant = [&](Vertex host, std::vector<Vertex>& ts) {
        Vertex t = fresh(), sv = fresh();
        if (intervals) {
            edges.push_back({t, host, TimeLabelSet::finite({n * n + 2, n * n + 3})});
            edges.push_back({sv, t, TimeLabelSet::finite({n * n + 1, n * n + 2})});
        } else {
            edges.push_back({t, host, TimeLabelSet::finite({n * n + 1})});
            edges.push_back({sv, t, TimeLabelSet::finite({n * n + 1})});
        }
        ts.push_back(t);
    };

    for (int i = 0; i < s; ++i) {
        std::vector<Vertex> spine(n);
        std::vector<Vertex> ts;
        for (int j = 0; j < n; ++j)
            spine[j] = fresh();
        edges.push_back({0, spine[0], TimeLabelSet::finite({n - 1, n})});
        for (int j = 1; j <= n - 1; ++j) { // chain v_i^j .. v_i^{j+1}
            Vertex prev = spine[j - 1];
            for (int k = 1; k <= n - 1; ++k) {
                Vertex w = fresh();
                edges.push_back({prev, w, TimeLabelSet::finite({j * n + k - 1, j * n + k})});
                host_pendant(w, ts);
                prev = w;
            }
            edges.push_back({prev, spine[j], TimeLabelSet::finite({(j + 1) * n - 1, (j + 1) * n})});
        }
        std::array<Vertex, 3> elems{};
        for (int c = 0; c < 3; ++c) {
            int value = inst.triples[i][c];
            elems[c] = fresh();
            edges.push_back(
                {spine[value - 1], elems[c], TimeLabelSet::finite({value * n, value * n + 1})});
        }
        for (int j = 0; j < n; ++j)
            host_pendant(spine[j], ts);
        red.spine.push_back(std::move(spine));
        red.element.push_back(elems);
        red.pendant_t.push_back(std::move(ts));
    }
    red.graph = TemporalGraph::finite(next, std::move(edges));
    red.budget = static_cast<long long>(s) * (static_cast<long long>(n) * (n - 1) + 1) +
                 (s - inst.target);
    return red;
}

} // namespace

TreeReduction reduce_3dm_to_tree(const ThreeDMInstance& inst) {
    return build_tree_gadget(inst, false);
}

TreeReduction reduce_3dm_to_tree_intervals(const ThreeDMInstance& inst) {
    return build_tree_gadget(inst, true);
}

std::vector<Vertex> matching_to_resolving_set(const SubstarReduction& red,
                                              std::span<const int> matched) {
    auto m = checked_matching(red.instance, matched);
    std::vector<Vertex> set{red.control[0]};
    for (int i = 0; i < red.instance.triple_count(); ++i)
        if (!std::binary_search(m.begin(), m.end(), i))
            set.push_back(red.element[i][0]);
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<Vertex> matching_to_resolving_set(const TreeReduction& red,
                                              std::span<const int> matched) {
    auto m = checked_matching(red.instance, matched);
    std::vector<Vertex> set;
    for (int i = 0; i < red.instance.triple_count(); ++i) {
        set.insert(set.end(), red.pendant_t[i].begin(), red.pendant_t[i].end());
        if (!std::binary_search(m.begin(), m.end(), i))
            set.push_back(red.spine[i][0]);
    }
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace tempres
