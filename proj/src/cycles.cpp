#include "hline/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "hline/error.hpp"

namespace hline {

namespace {

class LongestCycle {
 public:
  LongestCycle(const Graph& g, WorkBudget& budget)
      : g_(g), budget_(budget), on_path_(g.order(), 0), mark_(g.order(), 0) {}

  CycleSearch run() {
    const std::size_t n = g_.order();
    for (Vertex s = 0; s < n && !stop_; ++s) {
      // Cycles through s use only vertices >= s.
      if (n - s <= best_.length) break;
      if (g_.degree(s) < 2) continue;
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      extend();
      on_path_[s] = 0;
    }
    best_.exhausted = budget_.exhausted();
    return best_;
  }

 private:
  // Vertices >= start_ reachable from `from` without touching the path.
  std::size_t reachable(Vertex from) {
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      epoch_ = 1;
    }
    std::size_t count = 0;
    queue_.clear();
    queue_.push_back(from);
    while (!queue_.empty()) {
      Vertex v = queue_.back();
      queue_.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (w <= start_ || on_path_[w] || mark_[w] == epoch_) continue;
        mark_[w] = epoch_;
        ++count;
        queue_.push_back(w);
      }
    }
    return count;
  }

  void extend() {
    if (stop_) return;
    if (!budget_.spend()) {
      stop_ = true;
      return;
    }
    const Vertex tail = path_.back();
    if (path_.size() >= 3 && g_.has_edge(tail, start_) && path_.size() > best_.length) {
      best_.length = path_.size();
      best_.cycle = path_;
      if (best_.length == g_.order() - start_) {
        stop_ = true;  // cannot do better from any later start either
        return;
      }
    }
    if (path_.size() + reachable(tail) <= best_.length) return;
    for (Vertex w : g_.neighbors(tail)) {
      if (w <= start_ || on_path_[w]) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      extend();
      path_.pop_back();
      on_path_[w] = 0;
      if (stop_) return;
    }
  }

  const Graph& g_;
  WorkBudget& budget_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> queue_;
  CycleSearch best_;
  bool stop_ = false;
};

}  // namespace

CycleSearch longest_cycle(const Graph& g, WorkBudget& budget) {
  return LongestCycle(g, budget).run();
}

std::size_t circumference(const Graph& g, std::uint64_t work_budget) {
  WorkBudget budget(work_budget);
  CycleSearch r = longest_cycle(g, budget);
  if (r.exhausted) {
    throw ResourceError("circumference search exceeded " + std::to_string(work_budget) + " nodes");
  }
  return r.length;
}

std::size_t girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::deque<Vertex> queue;
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    parent[s] = s;
    queue.assign(1, s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

namespace {

struct BridgeFinder {
  const Graph& g;
  std::vector<std::size_t> disc, low;
  std::size_t timer = 0;
  std::vector<Edge> out;

  explicit BridgeFinder(const Graph& graph)
      : g(graph), disc(graph.order(), 0), low(graph.order(), 0) {}

  void dfs(Vertex v, Vertex parent, bool root) {
    disc[v] = low[v] = ++timer;
    for (Vertex w : g.neighbors(v)) {
      if (!root && w == parent) continue;
      if (disc[w] != 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        dfs(w, v, false);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.emplace_back(v, w);
      }
    }
  }
};

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  BridgeFinder f(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.disc[v] == 0) f.dfs(v, v, true);
  }
  std::sort(f.out.begin(), f.out.end());
  return f.out;
}

bool on_cycle(const Graph& g, Vertex v) {
  const auto br = bridges(g);
  for (Vertex w : g.neighbors(v)) {
    if (!std::binary_search(br.begin(), br.end(), Edge(v, w))) return true;
  }
  return false;
}

}  // namespace hline
