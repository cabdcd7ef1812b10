#ifndef TEMPRES_STAR_SOLVERS_HPP
#define TEMPRES_STAR_SOLVERS_HPP

#include <vector>

#include "tempres/temporal_graph.hpp"

namespace tempres {

// A star or subdivided star with one label per edge. Branches are ordered by
// non-decreasing first-edge label (ties by first vertex id) and listed
// center-outward.
struct SubdividedStarView {
    Vertex center = -1;
    std::vector<std::vector<Vertex>> branches;
    std::vector<TimeStep> first_labels; // label of (center, branches[i][0])

    int branch_count() const { return static_cast<int>(branches.size()); }
    Vertex leaf(int i) const { return branches[i].back(); }
};

SubdividedStarView make_subdivided_star_view(const TemporalGraph& g);

// Star, 1-labeling: drop one leaf per distinct center-edge label (smallest
// vertex id represents its class) and keep everything else. Minimum-size.
std::vector<Vertex> solve_star(const TemporalGraph& g);

// Subdivided star with degree >= 3 and every label in {1, 2}: per-branch path
// solutions, then a bounded search for the patch set around the center.
// Minimum-size.
std::vector<Vertex> solve_subdivided_star_12(const TemporalGraph& g);

} // namespace tempres

#endif
