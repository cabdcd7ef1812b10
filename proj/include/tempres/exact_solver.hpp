#ifndef TEMPRES_EXACT_SOLVER_HPP
#define TEMPRES_EXACT_SOLVER_HPP

#include <optional>
#include <span>
#include <vector>

#include "tempres/static_graph.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

// All-source earliest arrivals, precomputed once so subset checks are cheap.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const TemporalGraph& g);

    int size() const { return n_; }
    TimeStep at(Vertex from, Vertex to) const { return rows_[from][to]; }
    const std::vector<TimeStep>& row(Vertex from) const { return rows_[from]; }

    // Reaching and separating in one pass; equivalent to check_resolving.
    bool subset_resolves(std::span<const Vertex> R) const;

private:
    int n_;
    std::vector<std::vector<TimeStep>> rows_;
};

struct MinResolvingResult {
    std::vector<Vertex> witness; // sorted
    int size() const { return static_cast<int>(witness.size()); }
};

// Exhaustive oracle: k = 1, 2, ... over k-subsets of the pool in lexicographic
// order; first resolving subset wins. Empty pool means all vertices. With
// jobs > 1 the enumeration is partitioned by leading element and reconciled
// to the sequential answer. nullopt iff the pool holds no resolving set
// (possible only for a restricted pool).
std::optional<MinResolvingResult> min_resolving_bruteforce(const TemporalGraph& g,
                                                           std::span<const Vertex> pool = {},
                                                           int jobs = 1);

// Every resolving k-subset of the pool, lexicographic order.
std::vector<std::vector<Vertex>> all_resolving_ksubsets(const DistanceMatrix& dm,
                                                        std::span<const Vertex> pool, int k);

// Periodic temporal trees: all singletons first, then the leaf pool.
// The result equals the unrestricted minimum.
MinResolvingResult min_resolving_periodic_tree(const TemporalGraph& g);

// Minimum set separating all vertices under dist_a(u,v) = min(dist(u,v), 2);
// the reaching side is inherited from the temporal pullback, where it always
// holds on connected inputs. Guarded to n <= 10.
int min_adjacency_resolving_bruteforce(const StaticGraph& g);

std::vector<Vertex> leaves_of(const StaticGraph& g);

} // namespace tempres

#endif
