#ifndef TEMPRES_TIME_LABEL_SET_HPP
#define TEMPRES_TIME_LABEL_SET_HPP

#include <limits>
#include <optional>
#include <vector>

namespace tempres {

using Vertex = int;
using TimeStep = int;

// Sentinel for "no journey": compares above every finite time, equal to itself.
inline constexpr TimeStep kInfinity = std::numeric_limits<TimeStep>::max();

enum class LabelMode { Finite, Periodic };

// The set of time-steps at which one edge exists. Finite mode stores the
// labels themselves; periodic mode stores residues in [1, p], denoting the
// infinite set {r + j*p : r residue, j >= 0}.
class TimeLabelSet {
public:
    static TimeLabelSet finite(std::vector<TimeStep> labels);
    static TimeLabelSet periodic(std::vector<TimeStep> residues, TimeStep period);

    LabelMode mode() const { return mode_; }
    TimeStep period() const { return period_; }

    // Sorted ascending, no duplicates. Residues in periodic mode.
    const std::vector<TimeStep>& values() const { return values_; }
    int count() const { return static_cast<int>(values_.size()); }
    TimeStep max_value() const { return values_.back(); }

    bool single() const { return values_.size() == 1; }
    bool within(int k) const { return static_cast<int>(values_.size()) <= k; }

    // Smallest denoted label strictly greater than `after`; nullopt only in
    // finite mode. Periodic mode is O(count()), no label scan.
    std::optional<TimeStep> next_usable(TimeStep after) const;

    // Uniform shift of all labels by `delta` (finite mode only).
    TimeLabelSet shifted(TimeStep delta) const;

    bool operator==(const TimeLabelSet&) const = default;

private:
    TimeLabelSet() = default;

    LabelMode mode_ = LabelMode::Finite;
    std::vector<TimeStep> values_;
    TimeStep period_ = 0; // 0 in finite mode
};

} // namespace tempres

#endif
