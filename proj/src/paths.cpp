#include "hline/paths.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "hline/error.hpp"

namespace hline {

namespace {

void require_edge(const Graph& g, const Edge& e) {
  if (e.u == e.v || !g.has_edge(e)) {
    throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                          " is not in the graph");
  }
}

void require_n(std::size_t n) {
  if (n < 4) throw InvalidArgument("path order n must be at least 4, got " + std::to_string(n));
}

// Depth-limited DFS: is there a simple path of `need` vertices starting at
// `v` (already counted, already blocked) that avoids every blocked vertex?
bool extend_to(const Graph& g, Vertex v, std::size_t need, std::vector<char>& blocked) {
  if (need <= 1) return true;
  for (Vertex w : g.neighbors(v)) {
    if (blocked[w]) continue;
    blocked[w] = 1;
    bool ok = extend_to(g, w, need - 1, blocked);
    blocked[w] = 0;
    if (ok) return true;
  }
  return false;
}

// Two-sided search. The left arm starts at `left` and may take up to
// `total - 1` vertices; for each prefix of length a the right arm must
// supply `total - a` vertices from `right`. `blocked` already contains
// left, right and any fixed middle vertices.
class TwoArmSearch {
 public:
  TwoArmSearch(const Graph& g, Vertex left, Vertex right, std::size_t total,
               std::vector<char> blocked)
      : g_(g), right_(right), total_(total), blocked_(std::move(blocked)) {
    arm_.push_back(left);
  }

  bool run() { return grow(); }

 private:
  bool right_fits(std::size_t need) {
    std::string key = memo_key(need);
    if (failed_.count(key)) return false;
    bool ok = extend_to(g_, right_, need, blocked_);
    if (!ok) failed_.insert(std::move(key));
    return ok;
  }

  std::string memo_key(std::size_t need) const {
    std::vector<Vertex> s(arm_);
    std::sort(s.begin(), s.end());
    std::string key(reinterpret_cast<const char*>(s.data()), s.size() * sizeof(Vertex));
    key.push_back(static_cast<char>(need));
    return key;
  }

  bool grow() {
    const std::size_t a = arm_.size();
    if (right_fits(total_ - a)) return true;
    if (a + 1 >= total_) return false;
    for (Vertex w : g_.neighbors(arm_.back())) {
      if (blocked_[w]) continue;
      blocked_[w] = 1;
      arm_.push_back(w);
      bool ok = grow();
      arm_.pop_back();
      blocked_[w] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  Vertex right_;
  std::size_t total_;
  std::vector<char> blocked_;
  std::vector<Vertex> arm_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool pn_adjacent(const Graph& g, const Edge& e, const Edge& f, std::size_t n) {
  require_n(n);
  require_edge(g, e);
  require_edge(g, f);
  if (e == f) throw InvalidArgument("pn_adjacent needs two distinct edges");

  Vertex shared;
  if (f.touches(e.u)) {
    shared = e.u;
  } else if (f.touches(e.v)) {
    shared = e.v;
  } else {
    return false;
  }
  const Vertex u = e.other(shared);
  const Vertex w = f.other(shared);
  if (g.order() < n) return false;

  std::vector<char> blocked(g.order(), 0);
  blocked[shared] = blocked[u] = blocked[w] = 1;
  // |A| + 1 + |B| = n, i.e. the two arms together hold n - 1 vertices.
  return TwoArmSearch(g, u, w, n - 1, std::move(blocked)).run();
}

bool edge_in_pn(const Graph& g, const Edge& e, std::size_t n) {
  require_n(n);
  require_edge(g, e);
  if (g.order() < n) return false;
  std::vector<char> blocked(g.order(), 0);
  blocked[e.u] = blocked[e.v] = 1;
  return TwoArmSearch(g, e.u, e.v, n, std::move(blocked)).run();
}

bool has_path_from(const Graph& g, Vertex start, std::size_t order) {
  if (start >= g.order()) return false;
  std::vector<char> blocked(g.order(), 0);
  blocked[start] = 1;
  return extend_to(g, start, order, blocked);
}

}  // namespace hline
