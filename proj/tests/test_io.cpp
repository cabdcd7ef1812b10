#include <doctest.h>

#include <variant>

#include "support/builders.hpp"
#include "tempres/generators.hpp"
#include "tempres/io.hpp"
#include "tempres/reductions.hpp"

using namespace tempres;
using namespace tempres::testing;

TEST_CASE("parse minimal instances") {
    auto parsed = parse_instance("temporal-graph v1\nvertices 2\nmode finite\nedge 0 1 1\n");
    auto& g = std::get<TemporalGraph>(parsed);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.edges()[0].labels.values() == std::vector<TimeStep>{1});

    auto dm = parse_instance(
        "3dm v1\nground 6 2\ntarget 1\ntriple 1 3 5\ntriple 2 4 6\n");
    auto& inst = std::get<ThreeDMInstance>(dm);
    CHECK(inst.triple_count() == 2);
    CHECK(inst.target == 1);

    // Comments and blank lines are ignored.
    auto commented = parse_instance(
        "# generated\ntemporal-graph v1\n\nvertices 2\nmode periodic 3\n# edge list\nedge 0 1 2\n");
    CHECK(std::get<TemporalGraph>(commented).period() == 3);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("bogus v9\n") == 1);
    CHECK(line_of("temporal-graph v1\nvertices 2\nmode finite\nedge 1 0 1\n") == 4);
    CHECK(line_of("temporal-graph v1\nvertices 2\nmode periodic 2\nedge 0 1 3\n") == 4);
    CHECK(line_of("temporal-graph v1\nvertices 2\nmode finite\nedge 0 1 1\nedge 0 1 2\n") == 5);
    CHECK(line_of("temporal-graph v1\nvertices 2\nedge 0 1 1\n") == 3);
    CHECK(line_of("temporal-graph v1\nvertices 2\nmode finite\nedge 0 1 one\n") == 4);
    CHECK(line_of("3dm v1\nground 6 2\ntarget 1\ntriple 1 3 3\n") == 4);
    CHECK(line_of("3dm v1\nground 6 2\ntarget 5\ntriple 1 3 5\ntriple 2 4 6\n") == 5);
}

TEST_CASE("serialization is a parse fixpoint") {
    auto graphs = {
        serialize_instance(finite_path({3, 1, 2})),
        serialize_instance(periodic_cycle({1, 2, 1, 2}, 2)),
        serialize_instance(random_subdivided_star(4, 3, SubstarLabelDomain::periodic(3), 5).graph),
        serialize_instance(random_periodic_tree(9, 2, 21)),
        serialize_instance(reduce_3dm_to_substar(random_3dm(2, 3, 7, 2)).graph),
        serialize_instance(random_3dm(2, 4, 9, 8)),
    };
    for (const auto& text : graphs)
        CHECK(serialize_instance(parse_instance(text)) == text);
}

TEST_CASE("reduced substar golden file") {
    ThreeDMInstance inst;
    inst.ground_bound = 5;
    inst.set_size = 1;
    inst.target = 0;
    inst.triples = {{1, 3, 5}};
    auto red = reduce_3dm_to_substar(inst);
    CHECK(serialize_instance(red.graph) ==
          "temporal-graph v1\n"
          "vertices 7\n"
          "mode finite\n"
          "edge 0 1 2\n"
          "edge 0 4 2 5\n"
          "edge 1 2 1\n"
          "edge 2 3 3\n"
          "edge 4 5 3 7\n"
          "edge 5 6 4 9\n");
}
