#include "snortlab/graph6.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace snortlab::g6 {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' ||
                        s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int value_of(char c, std::size_t pos) {
  const unsigned char b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126)
    throw ParseError("invalid graph6 byte at position " + std::to_string(pos + 1));
  return b - 63;
}

}  // namespace

Graph parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.substr(0, 2) == ">>") {
    if (s.size() < kHeader.size() || s.substr(0, kHeader.size()) != kHeader)
      throw ParseError("malformed graph6 header");
    s.remove_prefix(kHeader.size());
  }
  if (s.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  long n;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw ParseError("graph6 order exceeds the 64-vertex limit");
    if (s.size() < 4) throw ParseError("truncated graph6 order field");
    n = (static_cast<long>(value_of(s[1], 1)) << 12) |
        (static_cast<long>(value_of(s[2], 2)) << 6) |
        static_cast<long>(value_of(s[3], 3));
    pos = 4;
  } else {
    n = value_of(s[0], 0);
    pos = 1;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6 order exceeds the 64-vertex limit");

  const long bits_needed = n * (n - 1) / 2;
  const std::size_t chars_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
  if (s.size() - pos < chars_needed)
    throw ParseError("truncated graph6 bit field: order " + std::to_string(n) +
                     " needs " + std::to_string(chars_needed) +
                     " data characters");
  if (s.size() - pos > chars_needed)
    throw ParseError("trailing data after graph6 bit field");

  Graph g(static_cast<int>(n));
  long bit_index = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      const std::size_t ci = pos + static_cast<std::size_t>(bit_index / 6);
      const int shift = 5 - static_cast<int>(bit_index % 6);
      if ((value_of(s[ci], ci) >> shift) & 1) g.add_edge(row, col);
      ++bit_index;
    }
  }
  // Padding bits must be zero; a set padding bit signals a mangled string.
  while (bit_index % 6 != 0) {
    const std::size_t ci = pos + static_cast<std::size_t>(bit_index / 6);
    const int shift = 5 - static_cast<int>(bit_index % 6);
    if ((value_of(s[ci], ci) >> shift) & 1)
      throw ParseError("nonzero padding bits in graph6 string");
    ++bit_index;
  }
  return g;
}

std::string emit(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int acc_bits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++acc_bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        acc_bits = 0;
      }
    }
  }
  if (acc_bits > 0)
    out.push_back(static_cast<char>((acc << (6 - acc_bits)) + 63));
  return out;
}

Graph parse_adjacency_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1;
  Graph g;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    std::istringstream fields{std::string(sv)};
    if (n < 0) {
      if (!(fields >> n) || n < 0)
        throw ParseError("adjacency list: bad order on line " +
                         std::to_string(line_no));
      if (n > kMaxVertices)
        throw ParseError("adjacency list: order exceeds the 64-vertex limit");
      std::string extra;
      if (fields >> extra)
        throw ParseError("adjacency list: unexpected token after order");
      g = Graph(static_cast<int>(n));
      continue;
    }
    long u, v;
    if (!(fields >> u >> v))
      throw ParseError("adjacency list: bad edge on line " +
                       std::to_string(line_no));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("adjacency list: vertex out of range on line " +
                       std::to_string(line_no));
    if (u == v)
      throw ParseError("adjacency list: loop on line " + std::to_string(line_no));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("adjacency list: missing order line");
  return g;
}

std::string emit_adjacency_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (int u = 0; u < g.order(); ++u) {
    for_each_vertex(g.neighbors(u), [&](int v) {
      if (u < v) out << u << ' ' << v << '\n';
    });
  }
  return out.str();
}

}  // namespace snortlab::g6
