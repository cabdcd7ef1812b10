#include "tempres/path_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "tempres/shape.hpp"

namespace tempres {

PathView make_path_view(const TemporalGraph& g) {
    auto info = classify_shape(g);
    if (info.tag != ShapeTag::Path)
        throw std::invalid_argument("make_path_view: underlying graph is not a path");
    PathView view;
    view.order = info.order;
    view.labels.reserve(view.order.size() - 1);
    for (std::size_t i = 0; i + 1 < view.order.size(); ++i) {
        Vertex u = view.order[i], v = view.order[i + 1];
        const TimeLabelSet* labels = nullptr;
        for (auto [w, edge_index] : g.incident(u))
            if (w == v)
                labels = &g.edges()[edge_index].labels;
        if (!labels)
            throw std::logic_error("make_path_view: path order is not a walk");
        if (!labels->single())
            throw std::invalid_argument("make_path_view: edge carries more than one label");
        view.labels.push_back(labels->values().front());
    }
    return view;
}

PathView reversed(PathView p) {
    std::reverse(p.order.begin(), p.order.end());
    std::reverse(p.labels.begin(), p.labels.end());
    return p;
}

std::vector<int> solve_path_positions(std::span<const TimeStep> t, int n) {
    if (n < 1 || static_cast<int>(t.size()) != n - 1)
        throw std::invalid_argument("solve_path_positions: label count must be n - 1");
    if (n == 1)
        return {0};

    std::vector<int> landmarks;
    int target = 0;
    int covered = -1; // rightmost position reached by landmarks so far

    while (true) {
        // Rightmost vertex reaching the target: extend right while the label
        // run t[target..] keeps strictly decreasing.
        int a = target;
        if (a + 1 <= n - 1) {
            ++a;
            while (a + 1 <= n - 1 && t[a] < t[a - 1])
                ++a;
        }
        landmarks.push_back(a);

        // Reach interval of a: labels increase strictly moving away from it.
        int left = a;
        if (left - 1 >= 0) {
            --left;
            while (left - 1 >= 0 && t[left - 1] > t[left])
                --left;
        }
        int right = a;
        if (right + 1 <= n - 1) {
            ++right;
            while (right + 1 <= n - 1 && t[right] > t[right - 1])
                ++right;
        }

        // Landmarks are placed left to right and their reach intervals chain
        // into one prefix [0, covered], so the exclusive reach of a is the
        // tail [lo, right]. Distances there: t[k] on the left of a, t[k-1] on
        // the right, each side strictly increasing outward, so any duplicate
        // is a left/right pair found by one merge scan.
        int lo = std::max(left, covered + 1);
        int rstart = std::max(a + 1, covered + 1);
        int conflict = -1;
        int lk = a - 1;
        for (int k = rstart; k <= right; ++k) {
            TimeStep d = t[k - 1];
            while (lk >= lo && t[lk] < d)
                --lk;
            if (lk >= lo && t[lk] == d) {
                conflict = k;
                break;
            }
        }

        covered = std::max(covered, right);
        if (conflict == -1) {
            if (right >= n - 1 || a == n - 1)
                return landmarks;
            target = right + 1;
        } else {
            target = conflict;
        }
    }
}

std::vector<TimeStep> path_arrivals(std::span<const TimeStep> t, int n, int src) {
    std::vector<TimeStep> out(n, kInfinity);
    out[src] = 0;
    TimeStep last = 0;
    for (int k = src + 1; k <= n - 1 && t[k - 1] > last; ++k) {
        out[k] = t[k - 1];
        last = t[k - 1];
    }
    last = 0;
    for (int k = src - 1; k >= 0 && t[k] > last; --k) {
        out[k] = t[k];
        last = t[k];
    }
    return out;
}

std::vector<Vertex> solve_path(const PathView& p) {
    auto positions = solve_path_positions(p.labels, p.size());
    std::vector<Vertex> set;
    set.reserve(positions.size());
    for (int pos : positions)
        set.push_back(p.order[pos]);
    return set;
}

} // namespace tempres
