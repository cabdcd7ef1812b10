#include "tempres/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tempres/earliest_arrival.hpp"
#include "tempres/errors.hpp"

namespace tempres {

DistanceMatrix::DistanceMatrix(const TemporalGraph& g) : n_(g.vertex_count()) {
    rows_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v)
        rows_.push_back(earliest_arrival(g, v));
}

bool DistanceMatrix::subset_resolves(std::span<const Vertex> R) const {
    for (Vertex v = 0; v < n_; ++v) {
        bool reached = false;
        for (Vertex s : R)
            if (rows_[s][v] != kInfinity) {
                reached = true;
                break;
            }
        if (!reached)
            return false;
    }
    // Sort vertices by their landmark vectors; a duplicate ends up adjacent.
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](Vertex a, Vertex b) {
        for (Vertex s : R) {
            if (rows_[s][a] != rows_[s][b])
                return rows_[s][a] < rows_[s][b];
        }
        return false;
    };
    std::sort(order.begin(), order.end(), less);
    for (int i = 1; i < n_; ++i) {
        if (!less(order[i - 1], order[i]) && !less(order[i], order[i - 1]))
            return false;
    }
    return true;
}

namespace {

// Lexicographically first resolving k-subset of pool with leading pool index
// `first`, or empty.
std::vector<Vertex> first_success_with_leading(const DistanceMatrix& dm,
                                               std::span<const Vertex> pool, int k, int first) {
    const int m = static_cast<int>(pool.size());
    std::vector<int> idx(k);
    idx[0] = first;
    for (int i = 1; i < k; ++i)
        idx[i] = first + i;
    if (idx.back() >= m)
        return {};
    std::vector<Vertex> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i)
            subset[i] = pool[idx[i]];
        if (dm.subset_resolves(subset))
            return subset;
        // next combination keeping idx[0] == first
        int i = k - 1;
        while (i >= 1 && idx[i] == m - k + i)
            --i;
        if (i < 1)
            return {};
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Vertex> first_resolving_ksubset(const DistanceMatrix& dm,
                                            std::span<const Vertex> pool, int k, int jobs) {
    const int m = static_cast<int>(pool.size());
    if (k > m)
        return {};
    if (jobs <= 1) {
        for (int first = 0; first + k <= m; ++first) {
            auto hit = first_success_with_leading(dm, pool, k, first);
            if (!hit.empty())
                return hit;
        }
        return {};
    }
    // Leading-element blocks are contiguous in lexicographic order, so the
    // smallest successful block holds the sequential answer.
    std::atomic<int> next_block{0};
    std::atomic<int> best_block{m};
    std::vector<std::vector<Vertex>> hits(m);
    auto worker = [&] {
        while (true) {
            int first = next_block.fetch_add(1);
            if (first + k > m || first > best_block.load())
                return;
            auto hit = first_success_with_leading(dm, pool, k, first);
            if (!hit.empty()) {
                hits[first] = std::move(hit);
                int seen = best_block.load();
                while (first < seen && !best_block.compare_exchange_weak(seen, first)) {
                }
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    int found = best_block.load();
    return found < m ? hits[found] : std::vector<Vertex>{};
}

std::vector<Vertex> checked_pool(const TemporalGraph& g, std::span<const Vertex> pool) {
    std::vector<Vertex> sorted;
    if (pool.empty()) {
        sorted.resize(g.vertex_count());
        std::iota(sorted.begin(), sorted.end(), 0);
        return sorted;
    }
    sorted.assign(pool.begin(), pool.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count())
        throw std::invalid_argument("pool vertex out of range");
    return sorted;
}

} // namespace

std::optional<MinResolvingResult> min_resolving_bruteforce(const TemporalGraph& g,
                                                           std::span<const Vertex> pool,
                                                           int jobs) {
    auto candidates = checked_pool(g, pool);
    DistanceMatrix dm(g);
    for (int k = 1; k <= static_cast<int>(candidates.size()); ++k) {
        auto hit = first_resolving_ksubset(dm, candidates, k, jobs);
        if (!hit.empty())
            return MinResolvingResult{std::move(hit)};
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> all_resolving_ksubsets(const DistanceMatrix& dm,
                                                        std::span<const Vertex> pool, int k) {
    std::vector<std::vector<Vertex>> out;
    const int m = static_cast<int>(pool.size());
    if (k > m)
        return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Vertex> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i)
            subset[i] = pool[idx[i]];
        if (dm.subset_resolves(subset))
            out.push_back(subset);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return out;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Vertex> leaves_of(const StaticGraph& g) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < g.n; ++v)
        if (g.adj[v].size() == 1)
            leaves.push_back(v);
    return leaves;
}

MinResolvingResult min_resolving_periodic_tree(const TemporalGraph& g) {
    if (!g.is_periodic())
        throw std::invalid_argument("min_resolving_periodic_tree: periodic labeling required");
    if (!g.is_one_labeling())
        throw std::invalid_argument("min_resolving_periodic_tree: 1-labeling required");
    auto skeleton = underlying(g);
    if (skeleton.edge_count() != skeleton.n - 1 || !is_connected(skeleton))
        throw std::invalid_argument("min_resolving_periodic_tree: underlying graph is not a tree");

    DistanceMatrix dm(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Vertex single[1] = {v};
        if (dm.subset_resolves(single))
            return MinResolvingResult{{v}};
    }
    // Answer is >= 2, so some leaf-only optimum exists.
    auto leaf_pool = leaves_of(skeleton);
    auto result = min_resolving_bruteforce(g, leaf_pool);
    if (!result)
        throw std::logic_error("leaf pool of a periodic tree must contain a resolving set");
    return *result;
}

int min_adjacency_resolving_bruteforce(const StaticGraph& g) {
    if (g.n > 10)
        throw GuardError("adjacency oracle guard: n <= 10");
    if (!is_connected(g))
        throw std::invalid_argument("adjacency oracle requires a connected graph");

    std::vector<std::vector<TimeStep>> trunc(g.n);
    for (Vertex v = 0; v < g.n; ++v) {
        trunc[v] = bfs_distances(g, v);
        for (auto& d : trunc[v])
            d = std::min<TimeStep>(d, 2);
    }
    auto separated = [&](std::span<const int> subset) {
        for (Vertex a = 0; a < g.n; ++a)
            for (Vertex b = a + 1; b < g.n; ++b) {
                bool split = false;
                for (int s : subset)
                    if (trunc[s][a] != trunc[s][b]) {
                        split = true;
                        break;
                    }
                if (!split)
                    return false;
            }
        return true;
    };
    std::vector<int> subset;
    for (int k = 1; k <= g.n; ++k) {
        subset.assign(k, 0);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            if (separated(subset))
                return k;
            int i = k - 1;
            while (i >= 0 && subset[i] == g.n - k + i)
                --i;
            if (i < 0)
                break;
            ++subset[i];
            for (int j = i + 1; j < k; ++j)
                subset[j] = subset[j - 1] + 1;
        }
    }
    return g.n; // unreachable: the full vertex set always separates
}

} // namespace tempres
