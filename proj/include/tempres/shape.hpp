#ifndef TEMPRES_SHAPE_HPP
#define TEMPRES_SHAPE_HPP

#include <string>
#include <vector>

#include "tempres/static_graph.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

enum class ShapeTag { Path, Cycle, Star, SubdividedStar, Complete, Tree, General };

std::string to_string(ShapeTag tag);

// Computed from the underlying graph, never trusted from input.
struct ShapeInfo {
    ShapeTag tag = ShapeTag::General;
    // Path: v_1..v_n left to right. Cycle: one cyclic order.
    std::vector<Vertex> order;
    // Star / SubdividedStar only.
    Vertex center = -1;
    std::vector<std::vector<Vertex>> branches; // each listed center-outward

    bool star_like() const { return tag == ShapeTag::Star || tag == ShapeTag::SubdividedStar; }
};

// Most specific applicable tag, checked in the order
// path, cycle, star, subdivided-star, complete, tree.
ShapeInfo classify_shape(const TemporalGraph& g);
ShapeInfo classify_shape(const StaticGraph& g);

} // namespace tempres

#endif
