#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// A parsed graph together with the original vertex labels from the file.
// labels[i] is the label of dense vertex id i; the list is strictly ascending.
// An empty label vector stands for the identity labeling.
struct ParsedGraph {
    Graph graph;
    std::vector<std::int64_t> labels;

    std::optional<VertexId> id_of_label(std::int64_t label) const;
    std::int64_t label_of(VertexId v) const { return labels.empty() ? v : labels[v]; }
};

// Edge-list format: first line "n m", then m lines "u v" or "u v w" with w a
// nonnegative decimal (default 1). Lines starting with '#' and blank lines are
// ignored. Labels are nonnegative integers; when they are not simply 0..n-1,
// the distinct labels are mapped onto dense ids in ascending order.
// Throws ParseError with the offending line number.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

// Canonical form: "n m" header, edges ascending by endpoint labels with the
// smaller label first, weight omitted when it is exactly 1.
std::string serialize(const ParsedGraph& pg);

// Shortest decimal that parses back to exactly w.
std::string format_weight(double w);

}  // namespace steiner
