#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linedi/digraph.hpp"
#include "linedi/error.hpp"

namespace linedi {

// Text format:
//   digraph <n> <m>
//   <tail> <head>            (m lines)
//   label <index> <string>   (optional, n lines)
// '#' starts a comment that runs to the end of the line.

inline std::string write_text(const Digraph& g) {
  std::string out = "digraph " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Arc& a : g.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::string& l = g.label(v);
      if (l.empty() || l.find_first_of(" \t\r\n#") != std::string::npos) {
        fail(ErrorKind::ParseError, "label of vertex " + std::to_string(v) + " cannot be written");
      }
      out += "label " + std::to_string(v) + " " + l + "\n";
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                                    std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

inline Digraph read_text(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = detail::split_ws(line);
    if (!toks.empty()) {
      rows.push_back(std::move(toks));
      line_numbers.push_back(line_no);
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  if (rows.empty() || rows[0].size() != 3 || rows[0][0] != "digraph") {
    fail(ErrorKind::ParseError, "missing 'digraph <n> <m>' header");
  }
  const auto n = detail::parse_count(rows[0][1], line_numbers[0]);
  const auto m = detail::parse_count(rows[0][2], line_numbers[0]);
  if (rows.size() < 1 + m) fail(ErrorKind::ParseError, "expected " + std::to_string(m) + " arc lines");
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    if (rows[i].size() != 2) fail(ErrorKind::ParseError, "line " + std::to_string(line_numbers[i]) + ": bad arc");
    const auto t = detail::parse_count(rows[i][0], line_numbers[i]);
    const auto h = detail::parse_count(rows[i][1], line_numbers[i]);
    if (t >= n || h >= n) {
      fail(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_numbers[i]) + ": arc endpoint out of range");
    }
    arcs.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h)});
  }
  std::vector<std::string> labels;
  const std::size_t label_rows = rows.size() - 1 - m;
  if (label_rows != 0) {
    if (label_rows != n) {
      fail(ErrorKind::LabelCountMismatch, std::to_string(label_rows) + " label lines for " + std::to_string(n) +
                                              " vertices");
    }
    labels.resize(n);
    std::vector<bool> assigned(n, false);
    for (std::size_t i = 1 + m; i < rows.size(); ++i) {
      if (rows[i].size() != 3 || rows[i][0] != "label") {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_numbers[i]) + ": expected 'label <index> <string>'");
      }
      const auto v = detail::parse_count(rows[i][1], line_numbers[i]);
      if (v >= n) fail(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_numbers[i]) + ": label index");
      if (assigned[v]) fail(ErrorKind::ParseError, "vertex " + std::to_string(v) + " labelled twice");
      assigned[v] = true;
      labels[v] = std::string(rows[i][2]);
    }
  }
  return Digraph::build(n, std::move(arcs), std::move(labels));
}

inline Digraph read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_text(buf.str());
}

}  // namespace linedi
