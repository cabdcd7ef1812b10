#include "tempres/dispatch.hpp"

#include <algorithm>

#include "tempres/errors.hpp"
#include "tempres/exact_solver.hpp"
#include "tempres/path_solver.hpp"
#include "tempres/periodic_solvers.hpp"
#include "tempres/shape.hpp"
#include "tempres/star_solvers.hpp"

namespace tempres {

std::string to_string(Algorithm a) {
    switch (a) {
    case Algorithm::Bruteforce: return "bruteforce";
    case Algorithm::Path: return "path";
    case Algorithm::Star: return "star";
    case Algorithm::Substar12: return "substar12";
    case Algorithm::SubstarPeriodic: return "substar-periodic";
    case Algorithm::CyclePeriodic: return "cycle-periodic";
    case Algorithm::PeriodicTree: return "periodic-tree";
    }
    return "bruteforce";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    for (Algorithm a : {Algorithm::Bruteforce, Algorithm::Path, Algorithm::Star,
                        Algorithm::Substar12, Algorithm::SubstarPeriodic,
                        Algorithm::CyclePeriodic, Algorithm::PeriodicTree})
        if (to_string(a) == name)
            return a;
    return std::nullopt;
}

Algorithm pick_auto_algorithm(const TemporalGraph& g) {
    auto info = classify_shape(g);
    if (g.is_periodic() && info.tag == ShapeTag::Path)
        return Algorithm::SubstarPeriodic; // any periodic labeling; leaf answer
    if (!g.is_one_labeling())
        return Algorithm::Bruteforce;
    if (g.is_periodic()) {
        switch (info.tag) {
        case ShapeTag::Path:
        case ShapeTag::Star:
        case ShapeTag::SubdividedStar:
            return Algorithm::SubstarPeriodic;
        case ShapeTag::Cycle:
            return Algorithm::CyclePeriodic;
        case ShapeTag::Tree:
            return Algorithm::PeriodicTree;
        default:
            return Algorithm::Bruteforce;
        }
    }
    if (info.tag == ShapeTag::Path)
        return Algorithm::Path;
    if (info.tag == ShapeTag::Star)
        return Algorithm::Star;
    if (info.tag == ShapeTag::SubdividedStar && g.t_max() <= 2)
        return Algorithm::Substar12;
    return Algorithm::Bruteforce;
}

SolveReport run_solver(const TemporalGraph& g, const SolveOptions& options) {
    SolveReport report;
    report.used = options.algorithm.value_or(pick_auto_algorithm(g));

    switch (report.used) {
    case Algorithm::Path: {
        auto view = make_path_view(g);
        if (options.reverse_path)
            view = reversed(view);
        report.witness = solve_path(view);
        break;
    }
    case Algorithm::Star:
        report.witness = solve_star(g);
        break;
    case Algorithm::Substar12:
        report.witness = solve_subdivided_star_12(g);
        break;
    case Algorithm::SubstarPeriodic:
        report.witness = solve_substar_periodic(g);
        break;
    case Algorithm::CyclePeriodic:
        report.witness = solve_cycle_periodic(g);
        break;
    case Algorithm::PeriodicTree: {
        auto result = min_resolving_periodic_tree(g);
        report.witness = std::move(result.witness);
        break;
    }
    case Algorithm::Bruteforce: {
        std::vector<Vertex> pool;
        if (options.pool_leaves) {
            pool = leaves_of(underlying(g));
            if (pool.empty()) { // no leaves at all; an empty pool would mean "everything"
                report.pool_exhausted = true;
                return report;
            }
        }
        int pool_size = options.pool_leaves ? static_cast<int>(pool.size()) : g.vertex_count();
        if (!options.skip_guard &&
            (g.vertex_count() > options.guard_vertices || pool_size > options.guard_pool))
            throw GuardError("bruteforce guard: n <= " + std::to_string(options.guard_vertices) +
                             " and pool <= " + std::to_string(options.guard_pool) +
                             " (override with --unsafe-no-guard)");
        auto result = min_resolving_bruteforce(g, pool, options.jobs);
        if (!result) {
            report.pool_exhausted = true;
            return report;
        }
        report.witness = std::move(result->witness);
        break;
    }
    }
    std::sort(report.witness.begin(), report.witness.end());
    return report;
}

} // namespace tempres
