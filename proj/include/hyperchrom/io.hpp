#ifndef HYPERCHROM_IO_HPP
#define HYPERCHROM_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperchrom/hypergraph.hpp"

namespace hyperchrom {

/// Malformed input; line() is 1-based, 0 when no single line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::uint64_t> values;
};

// Splits text into numbered lines of unsigned integers, dropping comments
// and blank lines.
inline std::vector<Line> numeric_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') { ++i; continue; }
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc() || ptr == line.data() + i)
        throw ParseError(number, "expected a non-negative integer, found '" + std::string(1, c) + "'");
      i = static_cast<std::size_t>(ptr - line.data());
      if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
        throw ParseError(number, "unexpected character '" + std::string(1, line[i]) + "'");
      parsed.values.push_back(value);
    }
    if (!parsed.values.empty()) out.push_back(std::move(parsed));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace detail

/// Parses the .hg format: a header `n m`, then m lines each listing one
/// edge's vertex ids. `#` starts a comment; blank lines are skipped.
inline Hypergraph parse_hg(std::string_view text) {
  auto lines = detail::numeric_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const auto& header = lines[0];
  if (header.values.size() != 2) throw ParseError(header.number, "header must be 'n m'");
  std::uint64_t n = header.values[0];
  std::uint64_t m = header.values[1];
  if (n > UINT32_MAX || m > UINT32_MAX) throw ParseError(header.number, "n or m exceeds 32 bits");
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (edges.size() == m) throw ParseError(l.number, "more edge lines than the header's m = " + std::to_string(m));
    std::vector<Vertex> vs;
    for (auto v : l.values) {
      if (v >= n) throw ParseError(l.number, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
      vs.push_back(static_cast<Vertex>(v));
    }
    std::vector<Vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(l.number, "edge repeats a vertex");
    edges.push_back(std::move(sorted));
  }
  if (edges.size() < m) {
    std::size_t next = lines.back().number + 1;
    throw ParseError(next, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  }
  return Hypergraph(n, std::move(edges));
}

inline std::string serialize_hg(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    bool first = true;
    for (Vertex v : h.edge(e)) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

/// Parses a list file: one line per edge, in edge order, with that edge's
/// colours.
inline ListAssignment parse_lists(std::string_view text, std::size_t edge_count) {
  auto lines = detail::numeric_lines(text);
  if (lines.size() != edge_count)
    throw ParseError(lines.size() > edge_count ? lines[edge_count].number : 0,
                     "expected " + std::to_string(edge_count) + " list lines, found " + std::to_string(lines.size()));
  std::vector<std::vector<Colour>> lists;
  for (const auto& l : lines) {
    std::vector<Colour> cs;
    for (auto c : l.values) {
      if (c > UINT32_MAX) throw ParseError(l.number, "colour exceeds 32 bits");
      cs.push_back(static_cast<Colour>(c));
    }
    std::vector<Colour> sorted = cs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(l.number, "list repeats a colour");
    lists.push_back(std::move(cs));
  }
  return ListAssignment(std::move(lists));
}

inline std::string serialize_lists(const ListAssignment& lists) {
  std::ostringstream out;
  for (const auto& l : lists.lists()) {
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
    out << '\n';
  }
  return out.str();
}

/// Accepts `uniform:K` or the contents of a list file.
inline ListAssignment lists_from_spec(std::string_view spec, std::size_t edge_count) {
  constexpr std::string_view prefix = "uniform:";
  if (spec.substr(0, prefix.size()) == prefix) {
    std::string_view k = spec.substr(prefix.size());
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), value);
    if (ec != std::errc() || ptr != k.data() + k.size() || k.empty())
      throw ParseError(0, "bad uniform list size '" + std::string(k) + "'");
    return ListAssignment::uniform(edge_count, value);
  }
  return parse_lists(spec, edge_count);
}

}  // namespace hyperchrom

#endif  // HYPERCHROM_IO_HPP
