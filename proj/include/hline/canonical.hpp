#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hline/graph.hpp"

namespace hline {

/// Isomorphism-complete graph fingerprint. Two graphs have equal codes
/// exactly when they are isomorphic; codes compare as byte strings.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;
  static CanonicalCode from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};

struct CanonOptions {
  std::size_t max_order = 24;
  std::uint64_t work_budget = 20'000'000;  // search-tree nodes
};

/// Canonical relabeling: `perm[v]` is the new id of vertex v.
///
/// Components are labeled independently by individualization-refinement
/// (equitable colour refinement, then branching on the smallest
/// non-singleton cell, pruned by automorphisms discovered at the leaves),
/// then laid out in increasing order of their own codes.
///
/// Throws ResourceError when `g.order() > opts.max_order` or the search
/// exceeds `opts.work_budget`.
std::vector<Vertex> canonical_labeling(const Graph& g, const CanonOptions& opts = {});

CanonicalCode canonical_code(const Graph& g, const CanonOptions& opts = {});
Graph canonical_form(const Graph& g, const CanonOptions& opts = {});

/// Cheap invariants are compared first; canonical codes only when they tie.
bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& opts = {});

}  // namespace hline
