#ifndef TEMPRES_IO_HPP
#define TEMPRES_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "tempres/errors.hpp"
#include "tempres/reductions.hpp"
#include "tempres/temporal_graph.hpp"

namespace tempres {

using Instance = std::variant<TemporalGraph, ThreeDMInstance>;

// Strict line-oriented parse of the "temporal-graph v1" / "3dm v1" formats.
// Lines starting with '#' and blank lines are ignored. Every violation is a
// ParseError carrying the 1-based line number.
Instance parse_instance(std::string_view text);

// Canonical text: edges sorted by (u, v) with ascending labels, so parsing a
// serialization and serializing again is byte-identical.
std::string serialize_instance(const TemporalGraph& g);
std::string serialize_instance(const ThreeDMInstance& inst);
std::string serialize_instance(const Instance& instance);

Instance load_instance_file(const std::string& path);

} // namespace tempres

#endif
