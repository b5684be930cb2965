#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stress/graph.hpp"

namespace stress {

enum class InputFormat { EdgeList, AdjMatrix, Graph6 };

std::string_view to_string(InputFormat f);
/// "edgelist", "adjmatrix", "graph6"; "auto" yields nullopt.
std::optional<InputFormat> input_format_from_string(std::string_view name);

/// First non-comment line is n, then one "u v" pair per line. '#' starts a comment.
Graph parse_edge_list(std::string_view text);

/// n rows of n '0'/'1' characters; symmetric with a zero diagonal.
Graph parse_adjacency_matrix(std::string_view text);

/// One short-form graph6 line (n <= 62).
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);
std::string to_adjacency_matrix(const Graph& g);

/// Lone canonical integer -> edge list; only '0'/'1' -> matrix; otherwise graph6.
InputFormat detect_format(std::string_view text);

/// graph6 input may hold one graph per line; the other formats hold one graph.
std::vector<Graph> parse_graphs(std::string_view text, std::optional<InputFormat> format);

}  // namespace stress
