#include "hline/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "hline/error.hpp"
#include "hline/families.hpp"

namespace hline {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t number(const char* what) {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected ") + what);
    }
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 100'000'000) fail("number too large");
      advance();
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }
  std::pair<std::size_t, std::size_t> position() {
    skip_space();
    return {line_, column_};
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct RawEdge {
  std::size_t u, v, line, column;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Cursor in(text);
  const std::size_t count = in.number("vertex count");
  in.expect(';', "';' after the vertex count");
  std::vector<RawEdge> raw;
  if (!in.done()) {
    do {
      auto [line, column] = in.position();
      const std::size_t u = in.number("vertex id");
      in.expect('-', "'-' between vertex ids");
      const std::size_t v = in.number("vertex id");
      raw.push_back({u, v, line, column});
    } while (in.accept(','));
    if (!in.done()) in.fail("expected ',' or end of input");
  }

  std::set<std::size_t> ids;
  for (const auto& e : raw) {
    ids.insert(e.u);
    ids.insert(e.v);
  }
  const bool dense = ids.empty() || *ids.rbegin() < count;
  if (!dense && ids.size() > count) {
    throw ParseError(std::to_string(ids.size()) + " distinct vertex ids exceed the vertex count " +
                         std::to_string(count),
                     1, 1);
  }
  std::map<std::size_t, Vertex> relabel;
  for (std::size_t id : ids) relabel.emplace(id, static_cast<Vertex>(dense ? id : relabel.size()));

  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (const auto& e : raw) {
    if (e.u == e.v) throw ParseError("self-loop at vertex " + std::to_string(e.u), e.line, e.column);
    Edge edge(relabel.at(e.u), relabel.at(e.v));
    if (!seen.insert(edge).second) {
      throw ParseError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v), e.line, e.column);
    }
    edges.push_back(edge);
  }
  return Graph(count, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out += first ? " " : ", ";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out;
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  std::size_t offset = 0;
  if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
    line.remove_prefix(kGraph6Header.size());
    offset = kGraph6Header.size();
  }
  auto fail = [&](const std::string& what, std::size_t at) -> void {
    throw ParseError("graph6: " + what, 1, offset + at + 1);
  };
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] < 63 || line[i] > 126) fail("character outside 63..126", i);
  }
  if (line.empty()) fail("empty input", 0);

  auto sixes = [&](std::size_t from, std::size_t count) {
    if (line.size() < from + count) fail("truncated vertex count", line.size());
    std::size_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = v << 6 | static_cast<std::size_t>(line[from + i] - 63);
    return v;
  };
  std::size_t n = 0, pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(line[0] - 63);
    pos = 1;
  } else if (line.size() > 1 && line[1] != '~') {
    n = sixes(1, 3);
    pos = 4;
  } else {
    n = sixes(2, 6);
    pos = 8;
  }

  const std::size_t bits = n * (n - (n > 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (line.size() != pos + chars) {
    fail("expected " + std::to_string(chars) + " adjacency characters, found " + std::to_string(line.size() - pos),
         std::min(line.size(), pos + chars));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = line[pos + k / 6] - 63;
      if (word >> (5 - k % 6) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < chars * 6; ++k) {
    const int word = line[pos + k / 6] - 63;
    if (word >> (5 - k % 6) & 1) fail("nonzero padding bits", pos + k / 6);
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + (n >> s & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + (n >> s & 63)));
  }
  int word = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = word << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

Graph parse_graph(std::string_view text) {
  if (text.find(';') != std::string_view::npos) return parse_edge_list(text);
  const std::string_view t = trim(text);
  if (FamilySpec::looks_like(t)) {
    try {
      return FamilySpec::parse(t).build();
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }
  return parse_graph6(text);
}

}  // namespace hline
