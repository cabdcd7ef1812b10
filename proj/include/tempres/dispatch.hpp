#ifndef TEMPRES_DISPATCH_HPP
#define TEMPRES_DISPATCH_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempres/temporal_graph.hpp"

namespace tempres {

enum class Algorithm {
    Bruteforce,
    Path,            // finite paths, 1-labeling
    Star,            // finite stars, 1-labeling
    Substar12,       // finite subdivided stars, labels in {1,2}
    SubstarPeriodic, // periodic subdivided stars (and paths), 1-labeling
    CyclePeriodic,   // periodic cycles, 1-labeling
    PeriodicTree,    // periodic trees, 1-labeling: singletons then leaf pool
};

std::string to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// Most specific solver whose preconditions the instance satisfies;
// falls back to Bruteforce.
Algorithm pick_auto_algorithm(const TemporalGraph& g);

struct SolveOptions {
    std::optional<Algorithm> algorithm; // nullopt: pick automatically
    bool pool_leaves = false;           // restrict the bruteforce pool to leaves
    bool reverse_path = false;          // solve the path right-to-left
    int jobs = 1;
    bool skip_guard = false;
    int guard_vertices = 18;
    int guard_pool = 20;
};

struct SolveReport {
    Algorithm used = Algorithm::Bruteforce;
    std::vector<Vertex> witness;  // sorted
    bool pool_exhausted = false;  // restricted pool held no resolving set
};

// Runs the selected (or auto-picked) solver. Throws GuardError when the
// bruteforce guard trips and std::invalid_argument when a forced algorithm's
// preconditions fail.
SolveReport run_solver(const TemporalGraph& g, const SolveOptions& options);

} // namespace tempres

#endif
