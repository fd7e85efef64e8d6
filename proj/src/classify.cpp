#include "hline/classify.hpp"

#include "hline/canonical.hpp"
#include "hline/error.hpp"

namespace hline {

std::string Budget::fingerprint() const {
  return "iter=" + std::to_string(max_iter) + ";order=" + std::to_string(max_order) +
         ";nodes=" + std::to_string(search_nodes);
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Converged: return "Converged";
    case Outcome::Terminated: return "Terminated";
    case Outcome::DivergedByOrder: return "DivergedByOrder";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(UnknownReason r) {
  switch (r) {
    case UnknownReason::OrderCap: return "OrderCap";
    case UnknownReason::IterCap: return "IterCap";
    case UnknownReason::SearchBudget: return "SearchBudget";
  }
  return "?";
}

CheckResult find_certificate(const Graph& g, std::size_t n, std::uint64_t search_nodes) {
  using Check = CheckResult (*)(const Graph&, std::size_t, WorkBudget&);
  static constexpr Check kChecks[] = {check_key1, check_long_tail, check_spider, check_twin_delta};
  CheckResult combined;
  for (Check check : kChecks) {
    WorkBudget budget(search_nodes);
    CheckResult r = check(g, n, budget);
    combined.incomplete = combined.incomplete || r.incomplete;
    if (r.certificate) {
      combined.certificate = std::move(r.certificate);
      return combined;
    }
  }
  return combined;
}

Classification classify(const Graph& g, std::size_t n, const Budget& budget) {
  if (n < 4) throw InvalidArgument("path order n must be at least 4");
  CanonOptions canon;
  canon.max_order = std::max(budget.max_order, g.order());

  Classification c;
  c.trace.n = n;
  c.trace.steps.push_back(make_step(0, g));

  for (std::size_t k = 0;; ++k) {
    const Graph cur = c.trace.steps.back().graph;
    c.trace.stop_index = k;

    if (cur.order() == 0) {
      c.outcome = Outcome::Terminated;
      c.N = k;
      c.trace.stop = StopReason::Empty;
      return c;
    }

    CheckResult found = find_certificate(cur, n, budget.search_nodes);
    c.search_incomplete = c.search_incomplete || found.incomplete;
    if (found.certificate) {
      found.certificate->found_at_iteration = k;
      c.outcome = Outcome::DivergedByOrder;
      c.N = k;
      c.certificate = std::move(found.certificate);
      c.trace.stop = StopReason::Certified;
      return c;
    }

    if (k == budget.max_iter) {
      c.outcome = Outcome::Unknown;
      c.unknown_reason = UnknownReason::IterCap;
      c.trace.stop = StopReason::IterCap;
      return c;
    }

    Graph next = hl_step(cur, n).graph;
    if (next.order() > budget.max_order) {
      c.trace.steps.push_back(make_step(k + 1, std::move(next)));
      c.trace.stop_index = k + 1;
      c.outcome = Outcome::Unknown;
      c.unknown_reason = UnknownReason::OrderCap;
      c.trace.stop = StopReason::OrderCap;
      return c;
    }

    bool fixed = false;
    try {
      fixed = is_isomorphic(cur, next, canon);
    } catch (const ResourceError&) {
      c.trace.steps.push_back(make_step(k + 1, std::move(next)));
      c.outcome = Outcome::Unknown;
      c.unknown_reason = UnknownReason::SearchBudget;
      c.trace.stop = StopReason::SearchBudget;
      return c;
    }
    c.trace.steps.push_back(make_step(k + 1, std::move(next)));
    if (fixed) {
      c.outcome = Outcome::Converged;
      c.N = k;
      c.limit = cur;
      c.trace.stop = StopReason::FixedPoint;
      return c;
    }
  }
}

}  // namespace hline
