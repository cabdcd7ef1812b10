#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/builders.hpp"
#include "tempres/exact_solver.hpp"
#include "tempres/path_solver.hpp"
#include "tempres/verifier.hpp"

using namespace tempres;
using namespace tempres::testing;

TEST_CASE("path view construction") {
    auto view = make_path_view(finite_path({2, 1}));
    CHECK(view.order == std::vector<Vertex>{0, 1, 2});
    CHECK(view.labels == std::vector<TimeStep>{2, 1});

    auto back = reversed(view);
    CHECK(back.order == std::vector<Vertex>{2, 1, 0});
    CHECK(back.labels == std::vector<TimeStep>{1, 2});

    CHECK_THROWS_AS(make_path_view(finite_star({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(make_path_view(TemporalGraph::finite(2, {fedge(0, 1, {1, 2})})),
                    std::invalid_argument);
}

TEST_CASE("solve_path base cases and spec instances") {
    CHECK(solve_path_positions({}, 1) == std::vector<int>{0});
    CHECK(solve_path(make_path_view(finite_path({4}))) == std::vector<Vertex>{1});

    // Strictly increasing labels: one landmark suffices, and the greedy picks
    // the rightmost vertex still reaching v_1 (that is v_2).
    auto rising = solve_path_positions(std::vector<TimeStep>{1, 2, 3}, 4);
    CHECK(rising.size() == 1);
    CHECK(rising[0] == 1);

    CHECK(solve_path(make_path_view(finite_path({2, 1}))) == std::vector<Vertex>{2});
    CHECK(solve_path(make_path_view(finite_path({1, 1}))) == std::vector<Vertex>{1, 2});
}

namespace {

std::vector<TimeStep> random_labels(std::mt19937& rng, int count, int label_max) {
    std::uniform_int_distribution<int> lab(1, label_max);
    std::vector<TimeStep> labels(count);
    for (auto& t : labels)
        t = lab(rng);
    return labels;
}

} // namespace

TEST_CASE("solve_path is valid and optimal on random paths") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<int> len(1, 11);
    for (int trial = 0; trial < 500; ++trial) {
        auto labels = random_labels(rng, len(rng), 8);
        auto g = finite_path(labels);
        auto view = make_path_view(g);
        auto set = solve_path(view);
        REQUIRE(!set.empty());
        CHECK(check_resolving(g, set).resolving());
        auto oracle = min_resolving_bruteforce(g);
        REQUIRE(oracle.has_value());
        CHECK(static_cast<int>(set.size()) == oracle->size());
    }
}

TEST_CASE("every optimum sits at or left of the greedy landmarks") {
    std::mt19937 rng(414);
    std::uniform_int_distribution<int> len(2, 10);
    for (int trial = 0; trial < 120; ++trial) {
        auto labels = random_labels(rng, len(rng), 6);
        auto g = finite_path(labels);
        auto greedy = solve_path_positions(labels, static_cast<int>(labels.size()) + 1);

        DistanceMatrix dm(g);
        std::vector<Vertex> pool(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            pool[v] = v;
        auto optima = all_resolving_ksubsets(dm, pool, static_cast<int>(greedy.size()));
        REQUIRE(!optima.empty());
        for (const auto& other : optima)
            for (std::size_t i = 0; i < greedy.size(); ++i)
                CHECK(other[i] <= greedy[i]); // positions equal vertex ids on this path
    }
}

TEST_CASE("orientation changes the set but never the size") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> len(1, 12);
    for (int trial = 0; trial < 250; ++trial) {
        auto labels = random_labels(rng, len(rng), 5);
        int n = static_cast<int>(labels.size()) + 1;
        auto forward = solve_path_positions(labels, n);
        std::reverse(labels.begin(), labels.end());
        auto backward = solve_path_positions(labels, n);
        CHECK(forward.size() == backward.size());
    }
}
