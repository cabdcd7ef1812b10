#include "tempres/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tempres {

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++number;
        start = end + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#')
            continue;
        Line out{number, {}};
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
            std::size_t token_start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t')
                ++pos;
            if (pos > token_start)
                out.tokens.push_back(line.substr(token_start, pos - token_start));
        }
        if (!out.tokens.empty())
            lines.push_back(std::move(out));
        if (end == text.size())
            break;
    }
    return lines;
}

long long parse_int(const Line& line, std::string_view token, long long lo, long long hi) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line.number, "expected an integer, got '" + std::string(token) + "'");
    if (value < lo || value > hi)
        throw ParseError(line.number, "value " + std::to_string(value) + " out of range");
    return value;
}

Instance parse_temporal_graph(const std::vector<Line>& lines, std::size_t at) {
    int n = -1;
    bool have_mode = false;
    LabelMode mode = LabelMode::Finite;
    TimeStep period = 0;
    std::vector<TemporalEdge> edges;

    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        std::string_view head = line.tokens[0];
        if (head == "vertices") {
            if (n != -1 || line.tokens.size() != 2)
                throw ParseError(line.number, "expected one 'vertices <n>' line");
            n = static_cast<int>(parse_int(line, line.tokens[1], 1, 1'000'000'000));
        } else if (head == "mode") {
            if (n == -1)
                throw ParseError(line.number, "'vertices' must come before 'mode'");
            if (have_mode)
                throw ParseError(line.number, "duplicate 'mode' line");
            have_mode = true;
            if (line.tokens.size() == 2 && line.tokens[1] == "finite") {
                mode = LabelMode::Finite;
            } else if (line.tokens.size() == 3 && line.tokens[1] == "periodic") {
                mode = LabelMode::Periodic;
                period = static_cast<TimeStep>(parse_int(line, line.tokens[2], 1, kInfinity - 1));
            } else {
                throw ParseError(line.number, "expected 'mode finite' or 'mode periodic <p>'");
            }
        } else if (head == "edge") {
            if (!have_mode)
                throw ParseError(line.number, "'mode' must come before edges");
            if (line.tokens.size() < 4)
                throw ParseError(line.number, "expected 'edge <u> <v> <t1> [...]'");
            Vertex u = static_cast<Vertex>(parse_int(line, line.tokens[1], 0, n - 1));
            Vertex v = static_cast<Vertex>(parse_int(line, line.tokens[2], 0, n - 1));
            if (u >= v)
                throw ParseError(line.number, "edge endpoints must satisfy u < v");
            std::vector<TimeStep> labels;
            for (std::size_t i = 3; i < line.tokens.size(); ++i)
                labels.push_back(
                    static_cast<TimeStep>(parse_int(line, line.tokens[i], 1, kInfinity - 1)));
            try {
                TimeLabelSet set = mode == LabelMode::Finite
                                       ? TimeLabelSet::finite(std::move(labels))
                                       : TimeLabelSet::periodic(std::move(labels), period);
                edges.push_back({u, v, std::move(set)});
            } catch (const std::invalid_argument& e) {
                throw ParseError(line.number, e.what());
            }
        } else {
            throw ParseError(line.number, "unknown directive '" + std::string(head) + "'");
        }
    }
    if (n == -1)
        throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'vertices' line");
    if (!have_mode)
        throw ParseError(lines.back().number, "missing 'mode' line");
    try {
        return mode == LabelMode::Finite ? TemporalGraph::finite(n, std::move(edges))
                                         : TemporalGraph::periodic(n, std::move(edges), period);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().number, e.what());
    }
}

Instance parse_3dm(const std::vector<Line>& lines, std::size_t at) {
    ThreeDMInstance inst;
    bool have_ground = false, have_target = false;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        std::string_view head = line.tokens[0];
        if (head == "ground") {
            if (have_ground || line.tokens.size() != 3)
                throw ParseError(line.number, "expected one 'ground <n> <p_size>' line");
            have_ground = true;
            inst.ground_bound = static_cast<int>(parse_int(line, line.tokens[1], 1, 1'000'000));
            inst.set_size = static_cast<int>(parse_int(line, line.tokens[2], 1, 1'000'000));
        } else if (head == "target") {
            if (!have_ground)
                throw ParseError(line.number, "'ground' must come before 'target'");
            if (have_target || line.tokens.size() != 2)
                throw ParseError(line.number, "expected one 'target <l>' line");
            have_target = true;
            inst.target = static_cast<int>(parse_int(line, line.tokens[1], 0, 1'000'000));
        } else if (head == "triple") {
            if (!have_target)
                throw ParseError(line.number, "'target' must come before triples");
            if (line.tokens.size() != 4)
                throw ParseError(line.number, "expected 'triple <x> <y> <z>'");
            std::array<int, 3> t{};
            for (int c = 0; c < 3; ++c)
                t[c] = static_cast<int>(
                    parse_int(line, line.tokens[c + 1], 1, inst.ground_bound));
            inst.triples.push_back(t);
        } else {
            throw ParseError(line.number, "unknown directive '" + std::string(head) + "'");
        }
    }
    try {
        inst.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.back().number, e.what());
    }
    return inst;
}

} // namespace

Instance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, "empty instance");
    const Line& header = lines[0];
    if (header.tokens.size() == 2 && header.tokens[0] == "temporal-graph" &&
        header.tokens[1] == "v1")
        return parse_temporal_graph(lines, 1);
    if (header.tokens.size() == 2 && header.tokens[0] == "3dm" && header.tokens[1] == "v1")
        return parse_3dm(lines, 1);
    throw ParseError(header.number, "unknown header (want 'temporal-graph v1' or '3dm v1')");
}

std::string serialize_instance(const TemporalGraph& g) {
    std::ostringstream out;
    out << "temporal-graph v1\n";
    out << "vertices " << g.vertex_count() << "\n";
    if (g.is_periodic())
        out << "mode periodic " << g.period() << "\n";
    else
        out << "mode finite\n";
    for (const auto& e : g.edges()) {
        out << "edge " << e.u << " " << e.v;
        for (TimeStep t : e.labels.values())
            out << " " << t;
        out << "\n";
    }
    return out.str();
}

std::string serialize_instance(const ThreeDMInstance& inst) {
    std::ostringstream out;
    out << "3dm v1\n";
    out << "ground " << inst.ground_bound << " " << inst.set_size << "\n";
    out << "target " << inst.target << "\n";
    for (const auto& t : inst.triples)
        out << "triple " << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
}

std::string serialize_instance(const Instance& instance) {
    return std::visit([](const auto& value) { return serialize_instance(value); }, instance);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

} // namespace tempres
