#include <doctest.h>

#include <set>
#include <stdexcept>

#include "tempres/generators.hpp"
#include "tempres/io.hpp"
#include "tempres/shape.hpp"

using namespace tempres;

TEST_CASE("splitmix64 reference stream") {
    // First outputs for seed 1234567, as published for SplitMix64.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
}

TEST_CASE("random paths: shape, bounds, determinism") {
    auto single = random_temporal_path(1, 3, 9);
    CHECK(single.graph.vertex_count() == 1);
    CHECK(single.graph.edges().empty());

    auto a = random_temporal_path(9, 5, 42);
    auto b = random_temporal_path(9, 5, 42);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(serialize_instance(a.graph) == serialize_instance(b.graph));
    CHECK(classify_shape(a.graph).tag == ShapeTag::Path);
    for (TimeStep t : a.view.labels) {
        CHECK(t >= 1);
        CHECK(t <= 5);
    }
    auto c = random_temporal_path(9, 5, 43);
    CHECK(a.graph.edges() != c.graph.edges());
}

TEST_CASE("random subdivided stars") {
    auto star = random_subdivided_star(4, 3, SubstarLabelDomain::finite_upto(2), 7);
    CHECK(classify_shape(star.graph).star_like());
    CHECK(star.view.branch_count() == 4);
    CHECK(star.graph.t_max() <= 2);

    auto periodic = random_subdivided_star(3, 2, SubstarLabelDomain::periodic(3), 7);
    CHECK(periodic.graph.is_periodic());
    CHECK(periodic.graph.period() == 3);

    auto again = random_subdivided_star(4, 3, SubstarLabelDomain::finite_upto(2), 7);
    CHECK(star.graph.edges() == again.graph.edges());

    CHECK_THROWS_AS(random_subdivided_star(2, 3, SubstarLabelDomain::finite_upto(2), 7),
                    std::invalid_argument);
}

TEST_CASE("random periodic trees") {
    auto tree = random_periodic_tree(12, 4, 11);
    auto skeleton = underlying(tree);
    CHECK(skeleton.edge_count() == 11);
    CHECK(is_connected(skeleton));
    CHECK(tree.is_one_labeling());
    CHECK(tree.period() == 4);
    CHECK(random_periodic_tree(12, 4, 11).edges() == tree.edges());
}

TEST_CASE("random 3dm instances") {
    auto inst = random_3dm(2, 4, 8, 3);
    inst.validate();
    CHECK(inst.triple_count() == 4);
    CHECK(inst.target >= 1);
    CHECK(inst.target < 4);
    std::set<std::array<int, 3>> distinct(inst.triples.begin(), inst.triples.end());
    CHECK(distinct.size() == 4);
    CHECK(serialize_instance(random_3dm(2, 4, 8, 3)) == serialize_instance(inst));

    CHECK_THROWS_AS(random_3dm(3, 2, 8, 1), std::invalid_argument); // 3p > n
    CHECK_THROWS_AS(random_3dm(1, 2, 9, 1), std::invalid_argument); // s > p^3
}

TEST_CASE("golden serializations stay frozen") {
    // Recorded from the first run; any drift breaks stored instances.
    auto path = random_temporal_path(5, 3, 7);
    CHECK(serialize_instance(path.graph) ==
          "temporal-graph v1\n"
          "vertices 5\n"
          "mode finite\n"
          "edge 0 1 1\n"
          "edge 1 2 1\n"
          "edge 2 3 1\n"
          "edge 3 4 1\n");

    auto inst = random_3dm(2, 2, 6, 1);
    CHECK(serialize_instance(inst) ==
          "3dm v1\n"
          "ground 6 2\n"
          "target 1\n"
          "triple 6 2 3\n"
          "triple 6 2 4\n");
}
