#ifndef TEMPRES_PERIODIC_SOLVERS_HPP
#define TEMPRES_PERIODIC_SOLVERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempres/static_graph.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

// Periodic path: either leaf alone is a minimum temporal resolving set.
std::vector<Vertex> solve_path_periodic(const TemporalGraph& g);

// Periodic cycle with a 1-labeling: some singleton, or else both endpoints of
// a locally maximally labeled edge (adjacent labels no larger). Size <= 2.
std::vector<Vertex> solve_cycle_periodic(const TemporalGraph& g);

// Complete graph on n = b + p^b vertices where the b designated vertices
// resolve: every outside vertex is wired to the i-th designated vertex with
// the i-th coordinate of its own p-ary tuple; all other edges carry p.
// Returns the graph and the designated set. Guarded to n <= 40.
std::pair<TemporalGraph, std::vector<Vertex>> build_complete_tight(int b, TimeStep p);

// Complete graph, every edge the same residue: minimum is n - 1.
TemporalGraph build_complete_worst(int n, TimeStep p);

// Periodic subdivided star with a 1-labeling: all singletons, then leaf sets
// of sizes leaf_count - p upward. Paths dispatch to solve_path_periodic.
std::vector<Vertex> solve_substar_periodic(const TemporalGraph& g);

// Complete binary tree on 2^levels - 1 vertices, 2-periodic, sibling edges
// labeled 1 and 2; the returned set takes, per subtree rooted on level
// levels-3, the leaf hanging on its all-1 path. Requires levels >= 3.
std::pair<TemporalGraph, std::vector<Vertex>> build_binary_tree_alternating(int levels);

// Complete binary tree, 2-periodic, every edge residue 1.
TemporalGraph build_binary_tree_uniform(int levels);

// Levels of a complete binary tree rooted at its center, or 0.
int binary_tree_levels(const StaticGraph& g);

struct PeriodicInstanceReport {
    int computed_size = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    std::string bound_source;

    bool within_bounds() const {
        return lower_bound <= computed_size && computed_size <= upper_bound;
    }
};

// Bounds for shapes whose resolving number is combinatorially pinned, or nullopt.
std::optional<PeriodicInstanceReport> periodic_report(const TemporalGraph& g, int computed_size);

} // namespace tempres

#endif
