#ifndef TEMPRES_GENERATORS_HPP
#define TEMPRES_GENERATORS_HPP

#include <cstdint>

#include "tempres/path_solver.hpp"
#include "tempres/reductions.hpp"
#include "tempres/star_solvers.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

// SplitMix64 (Steele, Lea, Flood 2014), fixed here so identical parameters
// and seed serialize bit-identically on every platform. Bounded draws use
// plain modulo reduction.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct PathInstance {
    TemporalGraph graph;
    PathView view;
};

// Path 0-1-...-n-1 with i.i.d. uniform single labels in [1, label_max].
PathInstance random_temporal_path(int n, TimeStep label_max, std::uint64_t seed);

struct SubstarLabelDomain {
    LabelMode mode = LabelMode::Finite;
    TimeStep bound = 2; // finite: labels in [1, bound]; periodic: period, residues in [1, bound]

    static SubstarLabelDomain finite_upto(TimeStep label_max) {
        return {LabelMode::Finite, label_max};
    }
    static SubstarLabelDomain periodic(TimeStep p) { return {LabelMode::Periodic, p}; }
};

struct SubstarInstance {
    TemporalGraph graph;
    SubdividedStarView view;
};

// Center 0, `delta` branches with lengths uniform in [1, max_branch_len],
// labels i.i.d. over the domain.
SubstarInstance random_subdivided_star(int delta, int max_branch_len,
                                       const SubstarLabelDomain& domain, std::uint64_t seed);

// Uniform random attachment tree with residues i.i.d. in [1, p].
TemporalGraph random_periodic_tree(int n, TimeStep p, std::uint64_t seed);

// Disjoint ground sets of size p_size inside {1..n}, s distinct triples
// sampled without replacement, target uniform in [1, s-1].
ThreeDMInstance random_3dm(int p_size, int s, int n, std::uint64_t seed);

} // namespace tempres

#endif
