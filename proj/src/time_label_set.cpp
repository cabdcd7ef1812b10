#include "tempres/time_label_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace tempres {

namespace {

std::vector<TimeStep> sorted_checked(std::vector<TimeStep> values, TimeStep upper,
                                     const char* what) {
    if (values.empty())
        throw std::invalid_argument(std::string(what) + ": empty label set");
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw std::invalid_argument(std::string(what) + ": duplicate label");
    if (values.front() < 1)
        throw std::invalid_argument(std::string(what) + ": labels must be >= 1");
    if (values.back() > upper)
        throw std::invalid_argument(std::string(what) + ": label exceeds bound");
    return values;
}

} // namespace

TimeLabelSet TimeLabelSet::finite(std::vector<TimeStep> labels) {
    TimeLabelSet s;
    s.mode_ = LabelMode::Finite;
    s.values_ = sorted_checked(std::move(labels), kInfinity - 1, "finite labels");
    return s;
}

TimeLabelSet TimeLabelSet::periodic(std::vector<TimeStep> residues, TimeStep period) {
    if (period < 1)
        throw std::invalid_argument("period must be >= 1");
    TimeLabelSet s;
    s.mode_ = LabelMode::Periodic;
    s.period_ = period;
    s.values_ = sorted_checked(std::move(residues), period, "periodic residues");
    return s;
}

std::optional<TimeStep> TimeLabelSet::next_usable(TimeStep after) const {
    if (mode_ == LabelMode::Finite) {
        auto it = std::upper_bound(values_.begin(), values_.end(), after);
        if (it == values_.end())
            return std::nullopt;
        return *it;
    }
    // Periodic: per residue r the first r + j*p > after, minimized over residues.
    TimeStep best = kInfinity;
    for (TimeStep r : values_) {
        TimeStep candidate;
        if (after < r)
            candidate = r;
        else
            candidate = r + ((after - r) / period_ + 1) * period_;
        best = std::min(best, candidate);
    }
    return best;
}

TimeLabelSet TimeLabelSet::shifted(TimeStep delta) const {
    if (mode_ != LabelMode::Finite)
        throw std::invalid_argument("shifted: periodic residues are already canonical");
    std::vector<TimeStep> moved;
    moved.reserve(values_.size());
    for (TimeStep t : values_)
        moved.push_back(t + delta);
    return finite(std::move(moved));
}

} // namespace tempres
