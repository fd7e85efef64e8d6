#include "hline/families.hpp"

#include <cctype>
#include <charconv>

#include "hline/error.hpp"

namespace hline {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void append_path(std::vector<Edge>& es, Vertex attach, Vertex first, std::size_t len) {
  if (len == 0) return;
  es.emplace_back(attach, first);
  for (std::size_t i = 1; i < len; ++i) {
    es.emplace_back(first + static_cast<Vertex>(i) - 1, first + static_cast<Vertex>(i));
  }
}

// Minimal cursor for the family grammar; column numbers are 1-based.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::size_t number() {
    skip_ws();
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family spec: " + what, 1, pos_ + 1);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph make_cycle(std::size_t m) {
  require(m >= 3, "cycle needs m >= 3");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
  return Graph(m, es);
}

Graph make_path(std::size_t m) {
  require(m >= 1, "path needs m >= 1");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < m; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(m, es);
}

Graph make_grm(std::size_t r, std::size_t m) {
  require(m >= 3 && r >= 1, "G(r,m) needs m >= 3 and r >= 1");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
  append_path(es, 0, static_cast<Vertex>(m), r);
  return Graph(m + r, es);
}

Graph make_fm(std::size_t m) {
  require(m >= 4, "F_m needs m >= 4");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % m));
  es.emplace_back(0, 2);
  return Graph(m, es);
}

Graph make_spider(std::size_t x, std::size_t y, std::size_t z) {
  require(x >= 1 && y >= 1 && z >= 1, "CL(x,y,z) needs x, y, z >= 1");
  std::vector<Edge> es;
  Vertex next = 1;
  for (std::size_t len : {x, y, z}) {
    append_path(es, 0, next, len);
    next += static_cast<Vertex>(len);
  }
  return Graph(x + y + z + 1, es);
}

Graph make_triangle_with_tails(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}};
  Vertex next = 3;
  Vertex root = 0;
  for (std::size_t len : {a, b, c}) {
    append_path(es, root, next, len);
    next += static_cast<Vertex>(len);
    ++root;
  }
  return Graph(3 + a + b + c, es);
}

std::vector<Graph> delta_members(std::size_t n) {
  require(n >= 4, "delta_n needs n >= 4");
  std::vector<Graph> out;
  for (std::size_t r = 1; r + 3 <= n; ++r) out.push_back(make_grm(r, n - r));
  return out;
}

Graph FamilySpec::build() const {
  switch (kind) {
    case Kind::Cycle: return make_cycle(m);
    case Kind::Path: return make_path(m);
    case Kind::Grm: return make_grm(r, m);
    case Kind::Fm: return make_fm(m);
    case Kind::Spider: return make_spider(x, y, z);
  }
  throw InvalidArgument("unknown family");
}

std::string FamilySpec::to_string() const {
  switch (kind) {
    case Kind::Cycle: return "C" + std::to_string(m);
    case Kind::Path: return "P" + std::to_string(m);
    case Kind::Grm: return "G(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ")";
    case Kind::Fm: return "F" + std::to_string(m);
    case Kind::Spider:
      return "CL(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
  }
  return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
  Cursor c(text);
  FamilySpec s;
  if (c.eat("CL")) {
    s.kind = Kind::Spider;
    c.expect("(");
    s.x = c.number();
    c.expect(",");
    s.y = c.number();
    c.expect(",");
    s.z = c.number();
    c.expect(")");
  } else if (c.eat("G")) {
    s.kind = Kind::Grm;
    c.expect("(");
    c.expect("r");
    c.expect("=");
    s.r = c.number();
    c.expect(",");
    c.expect("m");
    c.expect("=");
    s.m = c.number();
    c.expect(")");
  } else if (c.eat("C")) {
    s.kind = Kind::Cycle;
    s.m = c.number();
  } else if (c.eat("P")) {
    s.kind = Kind::Path;
    s.m = c.number();
  } else if (c.eat("F")) {
    s.kind = Kind::Fm;
    s.m = c.number();
  } else {
    c.fail("unknown family (expected C, P, G, F or CL)");
  }
  c.finish();
  (void)s.build();  // range check
  return s;
}

bool FamilySpec::looks_like(std::string_view text) {
  try {
    Cursor c(text);
    if (c.eat("CL")) {
      c.expect("(");
    } else if (c.eat("G")) {
      c.expect("(");
    } else if (c.eat("C") || c.eat("P") || c.eat("F")) {
      (void)c.number();
      c.finish();
    } else {
      return false;
    }
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

}  // namespace hline
