#ifndef TEMPRES_REDUCTIONS_HPP
#define TEMPRES_REDUCTIONS_HPP

#include <array>
#include <span>
#include <vector>

#include "tempres/static_graph.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

// Triple system over three disjoint ground sets inside {1..ground_bound}.
struct ThreeDMInstance {
    int ground_bound = 0; // n
    int set_size = 0;     // declared |X| = |Y| = |Z|
    int target = 0;       // matching size asked for, < |triples|
    std::vector<std::array<int, 3>> triples;

    int triple_count() const { return static_cast<int>(triples.size()); }
    // Coordinate values in range, X/Y/Z pairwise disjoint, triples distinct,
    // 0 <= target < |triples|. Throws std::invalid_argument.
    void validate() const;
};

// Maximum coordinate-disjoint sub-collection, by subset enumeration.
// Guarded to |triples| <= 12.
int brute_force_3dm(const ThreeDMInstance& inst);

// Complete temporal graph over V(G): label 1 on edges of G, label 2 on
// non-edges. Under dist_a = min(dist, 2), resolving sets transfer both ways.
TemporalGraph reduce_adjacency_to_complete(const StaticGraph& g);

enum class BudgetRule {
    Proof,     // s + 1 - target: the bound the witness construction meets
    Statement, // s + 2 - target: the looser published figure
};

// Star with every edge subdivided exactly twice: center u, one branch
// u-a_i-b_i-c_i per triple (values sorted ascending drive the second labels),
// plus the control branch u-t1-t2-t3 labeled {2},{1},{3}.
struct SubstarReduction {
    TemporalGraph graph;
    int budget = 0;
    Vertex center = 0;
    std::array<Vertex, 3> control{};             // t1, t2, t3
    std::vector<std::array<Vertex, 3>> element;  // a_i, b_i, c_i per triple
    ThreeDMInstance instance;
};

SubstarReduction reduce_3dm_to_substar(const ThreeDMInstance& inst,
                                       BudgetRule rule = BudgetRule::Proof);

// Tree gadget: per triple a spine v_i^1..v_i^n hanging off u, consecutive
// spine vertices joined by chains of n-1 connector vertices, elements a/b/c
// hanging at the spine positions given by the coordinate values, and an s-t
// pendant pair on every spine and connector vertex. Labels stay in the raw
// range [n-1, n^2+1] (or n^2+3 for the interval variant); normalize() shifts
// them down when needed.
struct TreeReduction {
    TemporalGraph graph;
    long long budget = 0;
    Vertex center = 0;
    std::vector<std::vector<Vertex>> spine;      // [i][j-1] = v_i^j
    std::vector<std::array<Vertex, 3>> element;  // a_i, b_i, c_i
    std::vector<std::vector<Vertex>> pendant_t;  // per branch, every t vertex
    ThreeDMInstance instance;
};

TreeReduction reduce_3dm_to_tree(const ThreeDMInstance& inst);

// Same tree with every label set an interval of exactly two consecutive
// steps: pendant edges become {n^2+2, n^2+3} (t to host) and {n^2+1, n^2+2}
// (s to t).
TreeReduction reduce_3dm_to_tree_intervals(const ThreeDMInstance& inst);

// The forward-direction witness sets from the equivalence arguments.
// `matched` holds triple indices forming a matching.
std::vector<Vertex> matching_to_resolving_set(const SubstarReduction& red,
                                              std::span<const int> matched);
std::vector<Vertex> matching_to_resolving_set(const TreeReduction& red,
                                              std::span<const int> matched);

} // namespace tempres

#endif
