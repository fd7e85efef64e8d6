#include "hline/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "hline/budget.hpp"
#include "hline/error.hpp"

namespace hline {

namespace {

using EdgeKeys = std::vector<std::uint64_t>;

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

std::string encode(std::size_t order, const EdgeKeys& edges) {
  std::string out;
  put_varint(out, order);
  put_varint(out, edges.size());
  for (std::uint64_t key : edges) {
    put_varint(out, key >> 32);
    put_varint(out, key & 0xffffffffu);
  }
  return out;
}

// Sorted (min, max) edge keys of `g` under `perm`.
EdgeKeys relabeled_edges(const Graph& g, const std::vector<Vertex>& perm) {
  EdgeKeys keys;
  keys.reserve(g.size());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u >= v) continue;
      std::uint64_t a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      keys.push_back((a << 32) | b);
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Individualization-refinement search on one connected graph.
class LabelSearch {
 public:
  LabelSearch(const Graph& g, WorkBudget& budget) : g_(g), budget_(budget) {}

  std::vector<Vertex> run() {
    std::vector<std::uint32_t> colors(g_.order(), 0);
    std::vector<Vertex> prefix;
    search(colors, prefix);
    return best_perm_;
  }

  const EdgeKeys& best_edges() const { return best_edges_; }

 private:
  // Equitable refinement: each vertex's new colour is the rank of
  // (old colour, sorted multiset of neighbour colours).
  void refine(std::vector<std::uint32_t>& colors) const {
    const std::size_t n = g_.order();
    std::size_t classes = count_classes(colors);
    std::vector<std::vector<std::uint32_t>> sig(n);
    std::vector<Vertex> idx(n);
    while (true) {
      for (Vertex v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        for (Vertex w : g_.neighbors(v)) s.push_back(colors[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      std::uint32_t rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
        colors[idx[i]] = rank;
      }
      std::size_t now = n == 0 ? 0 : rank + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& colors) {
    std::vector<std::uint32_t> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  static void individualize(std::vector<std::uint32_t>& colors, Vertex v) {
    for (auto& c : colors) c = 2 * c + 1;
    colors[v] -= 1;
  }

  void search(std::vector<std::uint32_t> colors, std::vector<Vertex>& prefix) {
    if (!budget_.spend()) throw ResourceError("canonical labeling exceeded its work budget");
    refine(colors);

    // Smallest non-singleton cell, ties broken by colour.
    std::vector<std::size_t> cell_size(g_.order(), 0);
    for (auto c : colors) ++cell_size[c];
    std::optional<std::uint32_t> target;
    for (std::uint32_t c = 0; c < cell_size.size(); ++c) {
      if (cell_size[c] > 1 && (!target || cell_size[c] < cell_size[*target])) target = c;
    }

    if (!target) {
      leaf(std::vector<Vertex>(colors.begin(), colors.end()));
      return;
    }

    std::vector<Vertex> cell;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colors[v] == *target) cell.push_back(v);
    }
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty() && equivalent_to_explored(v, explored, prefix)) continue;
      explored.push_back(v);
      auto child = colors;
      individualize(child, v);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // True if some discovered automorphism fixing `prefix` pointwise maps v
  // into the orbit of an already-explored sibling.
  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& prefix) const {
    UnionFind uf(g_.order());
    bool any = false;
    for (const auto& gen : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gen[p] == p; });
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < g_.order(); ++x) uf.unite(x, gen[x]);
    }
    if (!any) return false;
    const auto root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return uf.find(u) == root; });
  }

  void leaf(std::vector<Vertex> perm) {
    EdgeKeys edges = relabeled_edges(g_, perm);
    if (!have_leaf_) {
      have_leaf_ = true;
      first_perm_ = perm;
      first_edges_ = edges;
      best_perm_ = std::move(perm);
      best_edges_ = std::move(edges);
      return;
    }
    if (edges == first_edges_) {
      record_automorphism(first_perm_, perm);
      return;
    }
    if (edges == best_edges_) {
      record_automorphism(best_perm_, perm);
      return;
    }
    if (edges > best_edges_) {
      best_perm_ = std::move(perm);
      best_edges_ = std::move(edges);
    }
  }

  // Both labelings give the same graph, so v -> a^{-1}(b(v)) is an automorphism.
  void record_automorphism(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> a_inv(a.size());
    for (Vertex v = 0; v < a.size(); ++v) a_inv[a[v]] = v;
    std::vector<Vertex> gamma(a.size());
    for (Vertex v = 0; v < b.size(); ++v) gamma[v] = a_inv[b[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  const Graph& g_;
  WorkBudget& budget_;
  bool have_leaf_ = false;
  std::vector<Vertex> first_perm_, best_perm_;
  EdgeKeys first_edges_, best_edges_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

struct Labeled {
  std::vector<Vertex> perm;
  std::string code;
};

Labeled label(const Graph& g, const CanonOptions& opts) {
  if (g.order() > opts.max_order) {
    throw ResourceError("graph of order " + std::to_string(g.order()) +
                        " exceeds the canonicalization cap of " + std::to_string(opts.max_order));
  }
  WorkBudget budget(opts.work_budget);

  struct Part {
    std::vector<Vertex> vertices;  // original ids
    std::vector<Vertex> local;     // local canonical label per entry of `vertices`
    std::string code;
  };
  std::vector<Part> parts;
  for (auto& comp : components(g)) {
    Part p;
    p.vertices = std::move(comp);
    Graph sub = g.induced(p.vertices);
    LabelSearch search(sub, budget);
    p.local = search.run();
    p.code = encode(sub.order(), search.best_edges());
    parts.push_back(std::move(p));
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.code < b.code; });

  Labeled out;
  out.perm.assign(g.order(), 0);
  Vertex offset = 0;
  for (const Part& p : parts) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) out.perm[p.vertices[i]] = offset + p.local[i];
    offset += static_cast<Vertex>(p.vertices.size());
  }
  out.code = encode(g.order(), relabeled_edges(g, out.perm));
  return out;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) throw InvalidArgument("odd-length canonical code");
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw InvalidArgument("bad hex digit in canonical code");
    bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  return CanonicalCode(std::move(bytes));
}

std::vector<Vertex> canonical_labeling(const Graph& g, const CanonOptions& opts) {
  return label(g, opts).perm;
}

CanonicalCode canonical_code(const Graph& g, const CanonOptions& opts) {
  return CanonicalCode(label(g, opts).code);
}

Graph canonical_form(const Graph& g, const CanonOptions& opts) {
  return g.relabeled(label(g, opts).perm);
}

bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& opts) {
  if (a.order() > opts.max_order || b.order() > opts.max_order) {
    throw ResourceError("graph exceeds the canonicalization cap of " + std::to_string(opts.max_order));
  }
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return label(a, opts).code == label(b, opts).code;
}

}  // namespace hline
