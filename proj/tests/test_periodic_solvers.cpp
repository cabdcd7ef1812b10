#include <doctest.h>

#include <random>
#include <stdexcept>

#include "support/builders.hpp"
#include "tempres/errors.hpp"
#include "tempres/exact_solver.hpp"
#include "tempres/periodic_solvers.hpp"
#include "tempres/verifier.hpp"

using namespace tempres;
using namespace tempres::testing;

TEST_CASE("periodic path solver") {
    auto one = TemporalGraph::periodic(1, {}, 2);
    CHECK(solve_path_periodic(one) == std::vector<Vertex>{0});

    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int m = std::uniform_int_distribution<int>(1, 9)(rng);
        int p = std::uniform_int_distribution<int>(1, 4)(rng);
        std::vector<TimeStep> residues(m);
        for (auto& r : residues)
            r = std::uniform_int_distribution<int>(1, p)(rng);
        auto g = periodic_path(residues, p);
        auto set = solve_path_periodic(g);
        CHECK(set.size() == 1);
        CHECK(check_resolving(g, set).resolving());
        auto oracle = min_resolving_bruteforce(g);
        REQUIRE(oracle.has_value());
        CHECK(oracle->size() == 1);
    }
    CHECK_THROWS_AS(solve_path_periodic(periodic_cycle({1, 1, 1}, 2)), std::invalid_argument);
    CHECK_THROWS_AS(solve_path_periodic(finite_path({1})), std::invalid_argument);
}

TEST_CASE("periodic cycle solver") {
    auto flat = periodic_cycle({1, 1, 1}, 1);
    auto set = solve_cycle_periodic(flat);
    CHECK(set.size() == 2);
    CHECK(check_resolving(flat, set).resolving());
    auto oracle = min_resolving_bruteforce(flat);
    REQUIRE(oracle.has_value());
    CHECK(oracle->size() == 2);

    auto c4 = periodic_cycle({1, 2, 3, 4}, 4);
    auto set4 = solve_cycle_periodic(c4);
    CHECK(check_resolving(c4, set4).resolving());
    auto oracle4 = min_resolving_bruteforce(c4);
    CHECK(static_cast<int>(set4.size()) == oracle4->size());

    std::mt19937 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        int m = std::uniform_int_distribution<int>(3, 10)(rng);
        int p = std::uniform_int_distribution<int>(1, 5)(rng);
        std::vector<TimeStep> residues(m);
        for (auto& r : residues)
            r = std::uniform_int_distribution<int>(1, p)(rng);
        auto g = periodic_cycle(residues, p);
        auto s = solve_cycle_periodic(g);
        CHECK(s.size() <= 2);
        CHECK(check_resolving(g, s).resolving());
        auto best = min_resolving_bruteforce(g);
        REQUIRE(best.has_value());
        CHECK(static_cast<int>(s.size()) == best->size());
    }
}

TEST_CASE("tight complete construction") {
    auto [tiny, b_tiny] = build_complete_tight(1, 1);
    CHECK(tiny.vertex_count() == 2);
    CHECK(check_resolving(tiny, b_tiny).resolving());

    auto [three, b3] = build_complete_tight(1, 2);
    CHECK(three.vertex_count() == 3);
    auto vectors = distance_vectors(three, b3);
    CHECK(vectors[1] == TemporalDistanceVector{1});
    CHECK(vectors[2] == TemporalDistanceVector{2});
    CHECK(check_resolving(three, b3).resolving());

    auto [six, b6] = build_complete_tight(2, 2);
    CHECK(six.vertex_count() == 6);
    CHECK(b6.size() == 2);
    CHECK(check_resolving(six, b6).resolving());
    auto oracle = min_resolving_bruteforce(six);
    REQUIRE(oracle.has_value());
    CHECK(oracle->size() == 2); // no singleton can tell 4 outside vertices apart

    CHECK_THROWS_AS(build_complete_tight(3, 4), GuardError);
}

TEST_CASE("worst complete construction") {
    CHECK(min_resolving_bruteforce(build_complete_worst(2, 2))->size() == 1);
    CHECK(min_resolving_bruteforce(build_complete_worst(3, 2))->size() == 2);
    CHECK(min_resolving_bruteforce(build_complete_worst(4, 3))->size() == 3);
}

namespace {

TemporalGraph periodic_substar(const std::vector<std::vector<TimeStep>>& branch_residues,
                               TimeStep p) {
    std::vector<TemporalEdge> edges;
    Vertex next = 1;
    for (const auto& residues : branch_residues) {
        Vertex prev = 0;
        for (TimeStep r : residues) {
            edges.push_back(pedge(prev, next, {r}, p));
            prev = next++;
        }
    }
    return TemporalGraph::periodic(next, std::move(edges), p);
}

} // namespace

TEST_CASE("periodic subdivided star solver") {
    // l = 3, p = 1, everything twin-like: matches the upper bound l - 1.
    auto flat = periodic_substar({{1, 1}, {1, 1}, {1, 1}}, 1);
    auto set = solve_substar_periodic(flat);
    CHECK(set.size() == 2);
    CHECK(check_resolving(flat, set).resolving());

    // First p center residues distinct, the rest share one: lower bound l - p.
    auto spread = periodic_substar({{1}, {2}, {1}, {1}, {1}}, 2);
    auto s2 = solve_substar_periodic(spread);
    CHECK(check_resolving(spread, s2).resolving());
    auto oracle2 = min_resolving_bruteforce(spread);
    CHECK(static_cast<int>(s2.size()) == oracle2->size());
    CHECK(static_cast<int>(s2.size()) == 3); // l - p

    // Two branches only: a path in disguise.
    auto pathlike = periodic_substar({{1, 2}, {2}}, 2);
    CHECK(solve_substar_periodic(pathlike).size() == 1);

    std::mt19937 rng(55);
    for (int trial = 0; trial < 120; ++trial) {
        int branches = std::uniform_int_distribution<int>(3, 5)(rng);
        int p = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<std::vector<TimeStep>> spec(branches);
        for (auto& b : spec) {
            b.resize(std::uniform_int_distribution<int>(1, 3)(rng));
            for (auto& r : b)
                r = std::uniform_int_distribution<int>(1, p)(rng);
        }
        auto g = periodic_substar(spec, p);
        auto got = solve_substar_periodic(g);
        CHECK(check_resolving(g, got).resolving());
        auto best = min_resolving_bruteforce(g);
        REQUIRE(best.has_value());
        CHECK(static_cast<int>(got.size()) == best->size());
    }
}

TEST_CASE("binary tree constructions") {
    auto [seven, set7] = build_binary_tree_alternating(3);
    CHECK(seven.vertex_count() == 7);
    CHECK(set7.size() == 1);
    CHECK(check_resolving(seven, set7).resolving());

    auto [fifteen, set15] = build_binary_tree_alternating(4);
    CHECK(set15.size() == 2);
    CHECK(check_resolving(fifteen, set15).resolving());
    // No single leaf resolves the alternating 15-vertex tree.
    auto leaf_pool = leaves_of(underlying(fifteen));
    DistanceMatrix dm(fifteen);
    CHECK(all_resolving_ksubsets(dm, leaf_pool, 1).empty());

    CHECK_THROWS_AS(build_binary_tree_alternating(2), std::invalid_argument);

    auto uniform3 = build_binary_tree_uniform(3);
    auto best3 = min_resolving_periodic_tree(uniform3);
    CHECK(best3.size() == 2);
    auto uniform4 = build_binary_tree_uniform(4);
    auto best4 = min_resolving_periodic_tree(uniform4);
    CHECK(best4.size() == 4);
    CHECK(min_resolving_periodic_tree(build_binary_tree_uniform(2)).size() == 1);
}

TEST_CASE("binary tree recognizer") {
    CHECK(binary_tree_levels(underlying(build_binary_tree_uniform(4))) == 4);
    CHECK(binary_tree_levels(underlying(build_binary_tree_uniform(2))) == 2);
    CHECK(binary_tree_levels(underlying(periodic_path({1, 1, 1}, 2))) == 0);
    CHECK(binary_tree_levels(underlying(periodic_cycle({1, 1, 1}, 2))) == 0);
    CHECK(binary_tree_levels(underlying(periodic_substar({{1}, {1}, {1}}, 2))) == 0);
}

TEST_CASE("periodic bound reports") {
    auto path_report = periodic_report(periodic_path({1, 2}, 2), 1);
    REQUIRE(path_report.has_value());
    CHECK(path_report->lower_bound == 1);
    CHECK(path_report->upper_bound == 1);
    CHECK(path_report->within_bounds());

    auto cycle_report = periodic_report(periodic_cycle({1, 1, 1}, 1), 2);
    REQUIRE(cycle_report.has_value());
    CHECK(cycle_report->within_bounds());

    auto [six, b6] = build_complete_tight(2, 2);
    auto complete_report = periodic_report(six, 2);
    REQUIRE(complete_report.has_value());
    CHECK(complete_report->lower_bound == 2);
    CHECK(complete_report->upper_bound == 5);

    // K4 with p=2 has no b with b + 2^b = 4.
    CHECK_FALSE(periodic_report(build_complete_worst(4, 2), 3).has_value());

    auto star_report = periodic_report(periodic_substar({{1}, {2}, {1, 1}}, 2), 1);
    REQUIRE(star_report.has_value());
    CHECK(star_report->lower_bound == 1);
    CHECK(star_report->upper_bound == 2);

    auto tree_report = periodic_report(build_binary_tree_uniform(4), 4);
    REQUIRE(tree_report.has_value());
    CHECK(tree_report->lower_bound == 2);
    CHECK(tree_report->upper_bound == 4);
    CHECK(tree_report->within_bounds());

    CHECK_FALSE(periodic_report(finite_path({1}), 1).has_value());
}
