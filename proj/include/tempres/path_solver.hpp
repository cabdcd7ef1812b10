#ifndef TEMPRES_PATH_SOLVER_HPP
#define TEMPRES_PATH_SOLVER_HPP

#include <span>
#include <vector>

#include "tempres/temporal_graph.hpp"

namespace tempres {

// A temporal path with a 1-labeling, left to right.
struct PathView {
    std::vector<Vertex> order;    // v_1..v_n
    std::vector<TimeStep> labels; // labels[i] on edge (order[i], order[i+1])

    int size() const { return static_cast<int>(order.size()); }
};

// Requires a path-shaped underlying graph with exactly one label per edge.
PathView make_path_view(const TemporalGraph& g);

PathView reversed(PathView p);

// Landmark positions (0-based, strictly increasing) of a minimum temporal
// resolving set. Greedy left-to-right: target the leftmost unhandled vertex,
// add the rightmost vertex reaching it, then either jump past its reach or
// re-target the first equidistant conflict on its right side. Linear time.
std::vector<int> solve_path_positions(std::span<const TimeStep> labels, int n);

// Same set as vertex ids of the view, in path order.
std::vector<Vertex> solve_path(const PathView& p);

// Earliest arrivals along a 1-labeled path from position src.
std::vector<TimeStep> path_arrivals(std::span<const TimeStep> labels, int n, int src);

} // namespace tempres

#endif
