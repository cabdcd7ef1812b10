#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support/builders.hpp"
#include "tempres/exact_solver.hpp"
#include "tempres/star_solvers.hpp"
#include "tempres/verifier.hpp"

using namespace tempres;
using namespace tempres::testing;

TEST_CASE("solve_star on spec instances") {
    auto distinct = solve_star(finite_star({1, 2, 3}));
    CHECK(distinct == std::vector<Vertex>{0});

    auto twins = solve_star(finite_star({1, 1, 1}));
    CHECK(twins.size() == 3);
    CHECK(check_resolving(finite_star({1, 1, 1}), twins).resolving());

    auto mixed = solve_star(finite_star({1, 1, 2, 3, 3, 3}));
    CHECK(mixed.size() == 4);

    CHECK_THROWS_AS(solve_star(finite_path({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(solve_star(TemporalGraph::finite(
                        4, {fedge(0, 1, {1, 2}), fedge(0, 2, {1}), fedge(0, 3, {1})})),
                    std::invalid_argument);
}

TEST_CASE("solve_star equals the oracle on random stars") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> leaves(3, 9), lab(1, 6);
    for (int trial = 0; trial < 250; ++trial) {
        std::vector<TimeStep> labels(leaves(rng));
        for (auto& t : labels)
            t = lab(rng);
        auto g = finite_star(labels);
        auto set = solve_star(g);
        CHECK(check_resolving(g, set).resolving());
        auto oracle = min_resolving_bruteforce(g);
        REQUIRE(oracle.has_value());
        CHECK(static_cast<int>(set.size()) == oracle->size());
    }
}

namespace {

// Branch lengths then per-branch labels, center is vertex 0.
TemporalGraph substar(const std::vector<std::vector<TimeStep>>& branch_labels) {
    std::vector<TemporalEdge> edges;
    Vertex next = 1;
    for (const auto& labels : branch_labels) {
        Vertex prev = 0;
        for (TimeStep t : labels) {
            edges.push_back(fedge(prev, next, {t}));
            prev = next++;
        }
    }
    return TemporalGraph::finite(next, std::move(edges));
}

} // namespace

TEST_CASE("solve_subdivided_star_12 on spec instances") {
    // Alternating branches: no branch solution reaches the center.
    auto alternating = substar({{1, 2, 1}, {1, 2, 1}, {1, 2, 1}});
    auto set = solve_subdivided_star_12(alternating);
    CHECK(check_resolving(alternating, set).resolving());
    auto oracle = min_resolving_bruteforce(alternating);
    REQUIRE(oracle.has_value());
    CHECK(static_cast<int>(set.size()) == oracle->size());

    // K_{1,3} with labels 1,1,2.
    auto small = substar({{1}, {1}, {2}});
    auto small_set = solve_subdivided_star_12(small);
    CHECK(small_set.size() == 2);
    CHECK(check_resolving(small, small_set).resolving());

    // Three branches of length 2.
    auto three = substar({{1, 2}, {1, 2}, {2, 1}});
    auto three_set = solve_subdivided_star_12(three);
    auto three_oracle = min_resolving_bruteforce(three);
    REQUIRE(three_oracle.has_value());
    CHECK(static_cast<int>(three_set.size()) == three_oracle->size());
    CHECK(check_resolving(three, three_set).resolving());

    CHECK_THROWS_AS(solve_subdivided_star_12(substar({{1}, {2}})), std::invalid_argument);
    CHECK_THROWS_AS(solve_subdivided_star_12(substar({{1}, {2}, {3}})), std::invalid_argument);
}

TEST_CASE("solve_subdivided_star_12 equals the oracle on random instances") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> deg(3, 5), blen(1, 4), lab(1, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::vector<TimeStep>> branches(deg(rng));
        for (auto& b : branches) {
            b.resize(blen(rng));
            for (auto& t : b)
                t = lab(rng);
        }
        auto g = substar(branches);
        if (g.vertex_count() > 16)
            continue;
        auto set = solve_subdivided_star_12(g);
        CHECK(check_resolving(g, set).resolving());
        auto oracle = min_resolving_bruteforce(g);
        REQUIRE(oracle.has_value());
        CHECK(static_cast<int>(set.size()) == oracle->size());
    }
}
