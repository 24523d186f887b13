#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

/// Thrown on malformed textual graph input.  `offset` is the byte position
/// within the parsed string where the problem was detected.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        bare_(what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

  /// The message without the appended byte-offset suffix.
  const std::string& bare_message() const { return bare_; }

 private:
  std::string bare_;
  std::size_t offset_;
};

/// Parses one graph in graph6 format.  The whole string must be consumed.
/// Orders above kMaxVertices (including multi-byte order encodings) raise
/// capacity_error; every other malformation raises parse_error with the
/// offending byte offset.
inline Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126) {
    // '~' starts a multi-byte order encoding (n > 62), far beyond the cap.
    throw capacity_error("graph6 order beyond 62 exceeds cap " + std::to_string(kMaxVertices));
  }
  if (head < 63 || head > 126) throw parse_error("invalid graph6 header byte", 0);
  int n = head - 63;
  if (n > kMaxVertices) {
    throw capacity_error("graph6 order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxVertices));
  }
  int bits = n * (n - 1) / 2;
  std::size_t data_bytes = (bits + 5) / 6;
  if (text.size() < 1 + data_bytes) {
    throw parse_error("graph6 string truncated", text.size());
  }
  if (text.size() > 1 + data_bytes) {
    throw parse_error("trailing characters after graph6 data", 1 + data_bytes);
  }

  Graph g(n);
  int bit_index = 0;  // runs over column-major upper-triangle pairs
  std::vector<std::pair<Vertex, Vertex>> pair_of_bit(bits);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pair_of_bit[bit_index++] = {i, j};

  for (std::size_t k = 0; k < data_bytes; ++k) {
    unsigned char b = static_cast<unsigned char>(text[1 + k]);
    if (b < 63 || b > 126) throw parse_error("invalid graph6 data byte", 1 + k);
    int value = b - 63;
    for (int p = 5; p >= 0; --p) {
      int idx = static_cast<int>(k) * 6 + (5 - p);
      int bit = (value >> p) & 1;
      if (idx < bits) {
        if (bit) g = g.with_edge(pair_of_bit[idx].first, pair_of_bit[idx].second);
      } else if (bit) {
        throw parse_error("nonzero padding bits in graph6 data", 1 + k);
      }
    }
  }
  return g;
}

/// Serializes to graph6.  Exact inverse of parse_graph6 on every graph this
/// library can hold.
inline std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int value = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

/// Parses the plain edge-list format:
///   n m
///   u v        (m lines)
/// Whitespace-separated; extra trailing whitespace is fine.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  auto pos = [&]() -> std::size_t {
    std::streamoff p = in.tellg();
    return p < 0 ? text.size() : static_cast<std::size_t>(p);
  };
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw parse_error("edge list needs leading \"n m\" counts", 0);
  if (n < 0) throw parse_error("negative vertex count", 0);
  if (n > kMaxVertices) {
    throw capacity_error("edge list order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxVertices));
  }
  if (m < 0) throw parse_error("negative edge count", 0);
  Graph g(static_cast<int>(n));
  for (long long k = 0; k < m; ++k) {
    long long u, v;
    if (!(in >> u >> v)) {
      throw parse_error("edge list truncated: expected " + std::to_string(m) + " edges", pos());
    }
    g = g.with_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) throw parse_error("trailing tokens after edge list", pos());
  return g;
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

/// Reads a stream of graph6 graphs, one per line.  Blank lines and an
/// optional leading ">>graph6<<" banner are ignored.  Errors are reported
/// with the 1-based line number prepended.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(line_no) + ": " + e.bare_message(), e.offset());
    }
  }
  return out;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return read_graph6_stream(in);
}

/// Resolves a command-line graph argument.  Accepts, in order of priority:
///   "-"            read one graph from stdin,
///   existing path  read the file,
///   anything else  treat the argument itself as a graph6 literal.
/// File and stdin contents may be either a single graph6 line or the plain
/// edge-list format (disambiguated by the first byte: edge lists start with
/// a digit, graph6 bytes are all >= 63).
inline Graph load_graph_argument(const std::string& arg) {
  std::string content;
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    content = buf.str();
  } else if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
  } else {
    return parse_graph6(arg);
  }

  std::size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw parse_error("no graph in input", 0);
  if (content[first] >= '0' && content[first] <= '9') return parse_edge_list(content);

  std::istringstream in(content);
  std::vector<Graph> graphs = read_graph6_stream(in);
  if (graphs.size() != 1) {
    throw std::invalid_argument("expected exactly one graph, found " +
                                std::to_string(graphs.size()));
  }
  return graphs.front();
}

}  // namespace gcx
