#include "stress/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace stress {

namespace {

[[noreturn]] void parse_error(const std::string& what, std::size_t line = 0) {
  throw Error(ErrorCode::ParseError, line ? "line " + std::to_string(line) + ": " + what : what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank lines with '#' comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) parse_error("'" + std::string(tok) + "' is not an integer", line);
  return value;
}

bool is_canonical_integer(std::string_view s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return false;
  return s == "0" || s.front() != '0';
}

constexpr int kMaxGraph6Order = 62;

}  // namespace

std::string_view to_string(InputFormat f) {
  switch (f) {
    case InputFormat::EdgeList: return "edgelist";
    case InputFormat::AdjMatrix: return "adjmatrix";
    case InputFormat::Graph6: return "graph6";
  }
  return "edgelist";
}

std::optional<InputFormat> input_format_from_string(std::string_view name) {
  if (name == "edgelist") return InputFormat::EdgeList;
  if (name == "adjmatrix") return InputFormat::AdjMatrix;
  if (name == "graph6") return InputFormat::Graph6;
  if (name == "auto") return std::nullopt;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error("missing vertex count");
  const auto header = tokens(lines.front().text);
  if (header.size() != 1) parse_error("first line must be the vertex count", lines.front().number);
  const auto n = to_int(header.front(), lines.front().number);
  if (n < 0 || n > 1'000'000) parse_error("vertex count out of range", lines.front().number);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = tokens(lines[i].text);
    if (t.size() != 2) parse_error("expected 'u v'", lines[i].number);
    const auto u = to_int(t[0], lines[i].number);
    const auto v = to_int(t[1], lines[i].number);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(lines[i].number) + ": endpoint outside [0," +
                                                  std::to_string(n) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_adjacency_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  const auto n = lines.size();
  for (const auto& row : lines) {
    if (row.text.size() != n) {
      parse_error("row has " + std::to_string(row.text.size()) + " entries, expected " + std::to_string(n), row.number);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = lines[i].text;
    for (std::size_t j = 0; j < n; ++j) {
      const char c = row[j];
      if (c != '0' && c != '1') parse_error("entries must be 0 or 1", lines[i].number);
      if (c != lines[j].text[i]) parse_error("matrix is not symmetric", lines[i].number);
      if (i == j && c == '1') parse_error("nonzero diagonal", lines[i].number);
      if (c == '1' && i < j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.empty()) parse_error("empty graph6 line");
  for (char c : line) {
    if (c < 63 || c > 126) parse_error("byte " + std::to_string(static_cast<unsigned char>(c)) + " outside 63..126");
  }
  if (line.front() == 126) parse_error("long-form graph6 (n > 62) is not supported");
  const int n = line.front() - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pairs + 5) / 6;
  if (line.size() != expected) {
    parse_error("graph6 for n = " + std::to_string(n) + " needs " + std::to_string(expected) + " bytes, got " +
                std::to_string(line.size()));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int byte = line[1 + bit / 6] - 63;
      if (byte >> (5 - bit % 6) & 1) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) throw Error(ErrorCode::TooLarge, "graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = acc << 1 | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::string to_adjacency_matrix(const Graph& g) {
  std::string out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) out.push_back(g.adjacent(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

InputFormat detect_format(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) return InputFormat::EdgeList;
  const auto first = lines.front().text;
  if (is_canonical_integer(first)) return InputFormat::EdgeList;
  if (std::all_of(first.begin(), first.end(), [](char c) { return c == '0' || c == '1'; })) return InputFormat::AdjMatrix;
  return InputFormat::Graph6;
}

std::vector<Graph> parse_graphs(std::string_view text, std::optional<InputFormat> format) {
  const auto f = format.value_or(detect_format(text));
  switch (f) {
    case InputFormat::EdgeList: return {parse_edge_list(text)};
    case InputFormat::AdjMatrix: return {parse_adjacency_matrix(text)};
    case InputFormat::Graph6: {
      std::vector<Graph> out;
      for (const auto& line : content_lines(text)) out.push_back(parse_graph6(line.text));
      if (out.empty()) parse_error("no graph6 lines");
      return out;
    }
  }
  return {};
}

}  // namespace stress
