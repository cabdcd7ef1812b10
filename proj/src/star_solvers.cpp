#include "tempres/star_solvers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tempres/earliest_arrival.hpp"
#include "tempres/exact_solver.hpp"
#include "tempres/path_solver.hpp"
#include "tempres/shape.hpp"

namespace tempres {

namespace {

TimeStep label_between(const TemporalGraph& g, Vertex u, Vertex v) {
    for (auto [w, edge_index] : g.incident(u))
        if (w == v)
            return g.edges()[edge_index].labels.values().front();
    throw std::logic_error("label_between: vertices not adjacent");
}

} // namespace

SubdividedStarView make_subdivided_star_view(const TemporalGraph& g) {
    auto info = classify_shape(g);
    if (!info.star_like())
        throw std::invalid_argument("make_subdivided_star_view: not a star or subdivided star");
    if (!g.is_one_labeling())
        throw std::invalid_argument("make_subdivided_star_view: 1-labeling required");

    SubdividedStarView view;
    view.center = info.center;
    view.branches = info.branches;
    std::vector<int> by(view.branches.size());
    std::iota(by.begin(), by.end(), 0);
    std::vector<TimeStep> labels(view.branches.size());
    for (std::size_t i = 0; i < view.branches.size(); ++i)
        labels[i] = label_between(g, view.center, view.branches[i][0]);
    std::sort(by.begin(), by.end(), [&](int a, int b) {
        return std::pair(labels[a], view.branches[a][0]) <
               std::pair(labels[b], view.branches[b][0]);
    });
    SubdividedStarView sorted;
    sorted.center = view.center;
    for (int i : by) {
        sorted.branches.push_back(std::move(view.branches[i]));
        sorted.first_labels.push_back(labels[i]);
    }
    return sorted;
}

std::vector<Vertex> solve_star(const TemporalGraph& g) {
    auto info = classify_shape(g);
    if (info.tag != ShapeTag::Star)
        throw std::invalid_argument("solve_star: star shape required");
    if (!g.is_one_labeling())
        throw std::invalid_argument("solve_star: 1-labeling required");

    // X: per distinct center-edge label, the smallest-id leaf of that class.
    std::map<TimeStep, Vertex> representative;
    for (const auto& branch : info.branches) {
        Vertex leaf = branch[0];
        TimeStep label = label_between(g, info.center, leaf);
        auto [it, fresh] = representative.try_emplace(label, leaf);
        if (!fresh)
            it->second = std::min(it->second, leaf);
    }
    std::set<Vertex> dropped;
    for (auto [label, leaf] : representative)
        dropped.insert(leaf);
    std::vector<Vertex> set;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!dropped.contains(v))
            set.push_back(v);

    // Pigeonhole floor: at most one leaf per label class may be dropped.
    int leaf_count = static_cast<int>(info.branches.size());
    int distinct = static_cast<int>(representative.size());
    if (static_cast<int>(set.size()) < leaf_count - distinct)
        throw std::logic_error("solve_star: output below the pigeonhole floor");
    return set;
}

std::vector<Vertex> solve_subdivided_star_12(const TemporalGraph& g) {
    auto view = make_subdivided_star_view(g);
    if (view.branch_count() < 3)
        throw std::invalid_argument("solve_subdivided_star_12: degree >= 3 required");
    for (const auto& e : g.edges())
        if (e.labels.values().front() > 2)
            throw std::invalid_argument("solve_subdivided_star_12: labels must be 1 or 2");

    const Vertex c = view.center;
    const int delta = view.branch_count();

    // Step 1: solve each branch as a path from its leaf to the center.
    std::vector<std::vector<Vertex>> leaf_to_center(delta);
    std::vector<std::vector<TimeStep>> branch_labels(delta);
    std::vector<std::vector<Vertex>> solution(delta);
    for (int i = 0; i < delta; ++i) {
        auto path = view.branches[i];
        std::reverse(path.begin(), path.end());
        path.push_back(c);
        std::vector<TimeStep> labels;
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            labels.push_back(label_between(g, path[k], path[k + 1]));
        for (int pos : solve_path_positions(labels, static_cast<int>(path.size())))
            solution[i].push_back(path[pos]);
        leaf_to_center[i] = std::move(path);
        branch_labels[i] = std::move(labels);
    }

    std::set<Vertex> base_set;
    std::vector<int> with_center; // B_c
    for (int i = 0; i < delta; ++i)
        for (Vertex v : solution[i]) {
            if (v == c)
                with_center.push_back(i);
            else
                base_set.insert(v);
        }
    std::vector<Vertex> base(base_set.begin(), base_set.end());
    if (with_center.empty())
        return base;

    // Q_1 / Q_2: first branch vertices reached by the branch solution minus c
    // yet not separated inside their own branch by it.
    std::vector<bool> in_q1(delta, false), in_q2(delta, false);
    for (int i : with_center) {
        const auto& order = leaf_to_center[i]; // leaf .. v_i, c
        const int len = static_cast<int>(order.size()) - 1;
        std::span<const TimeStep> labels(branch_labels[i].data(), len - 1);
        std::vector<std::vector<TimeStep>> rows;
        for (Vertex v : solution[i])
            if (v != c) {
                int pos = static_cast<int>(std::find(order.begin(), order.end(), v) -
                                           order.begin());
                rows.push_back(path_arrivals(labels, len, pos));
            }
        if (rows.empty())
            continue;
        const int vi_pos = len - 1;
        bool reached = std::any_of(rows.begin(), rows.end(),
                                   [&](const auto& row) { return row[vi_pos] != kInfinity; });
        if (!reached)
            continue;
        bool clash = false;
        for (int w = 0; w < len && !clash; ++w) {
            if (w == vi_pos)
                continue;
            clash = std::all_of(rows.begin(), rows.end(),
                                [&](const auto& row) { return row[w] == row[vi_pos]; });
        }
        if (clash)
            (view.first_labels[i] == 1 ? in_q1 : in_q2)[i] = true;
    }

    std::vector<int> kept; // B_c after discarding branches meeting Q_2
    for (int i : with_center)
        if (!in_q2[i])
            kept.push_back(i);
    const int q1_branches =
        static_cast<int>(std::count(in_q1.begin(), in_q1.end(), true));

    // Patch candidates: the center plus, per kept branch, its first vertex
    // and (when the labels rise 1 then 2) its second, all reachable from c
    // and outside the base set.
    struct Candidate {
        Vertex v;
        int branch;  // -1 for the center
        bool u_type; // at underlying distance 2 from c
        bool q1;
    };
    auto from_center = earliest_arrival(g, c);
    std::vector<Candidate> candidates{{c, -1, false, false}};
    for (std::size_t slot = 0; slot < kept.size(); ++slot) {
        int i = kept[slot];
        Vertex vi = view.branches[i][0];
        if (!base_set.contains(vi) && from_center[vi] != kInfinity)
            candidates.push_back({vi, static_cast<int>(slot), false, in_q1[i]});
        if (view.branches[i].size() >= 2) {
            Vertex ui = view.branches[i][1];
            if (!base_set.contains(ui) && from_center[ui] != kInfinity)
                candidates.push_back({ui, static_cast<int>(slot), true, false});
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.v < b.v; });

    DistanceMatrix dm(g);
    std::vector<bool> branch_used(kept.size(), false);
    std::vector<Vertex> chosen;
    std::vector<Vertex> merged;
    auto resolves = [&] {
        merged = base;
        merged.insert(merged.end(), chosen.begin(), chosen.end());
        std::sort(merged.begin(), merged.end());
        return dm.subset_resolves(merged);
    };
    // Lexicographic first success over patch sets of the exact target size.
    auto search = [&](auto&& self, int from, int need, int q1_used, int u_used) -> bool {
        if (need == 0)
            return resolves();
        if (static_cast<int>(candidates.size()) - from < need)
            return false;
        for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
            const auto& cd = candidates[i];
            if (cd.branch >= 0 && branch_used[cd.branch])
                continue;
            if (cd.q1 && q1_used)
                continue;
            if (cd.u_type && u_used)
                continue;
            if (cd.branch >= 0)
                branch_used[cd.branch] = true;
            chosen.push_back(cd.v);
            if (self(self, i + 1, need - 1, q1_used + cd.q1, u_used + cd.u_type))
                return true;
            chosen.pop_back();
            if (cd.branch >= 0)
                branch_used[cd.branch] = false;
        }
        return false;
    };
    // Some minimum-size resolving set has this patch form, and the set made
    // of c plus the first vertex of every kept branch missing Q_1 always
    // works, so scanning sizes upward returns the minimum. Sizes below
    // |kept| - 1 - q1_branches do occur, when branch solutions already reach
    // and separate their first vertices.
    int top = static_cast<int>(kept.size()) + 1 - q1_branches;
    for (int want = 0; want <= top; ++want)
        if (search(search, 0, want, 0, 0))
            return merged;
    throw std::logic_error("solve_subdivided_star_12: patch search exhausted");
}

} // namespace tempres
