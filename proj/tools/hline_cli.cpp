// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hline/hline.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kBudget = 3 };

using Json = nlohmann::ordered_json;

struct Owned {
  char* p = nullptr;
  ~Owned() { hline_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  hline_graph* g = nullptr;
  ~GraphHandle() { hline_graph_free(g); }
};

int report_failure(hline_status s) {
  if (s == HLINE_PARSE) {
    std::cerr << "parse error: " << hline_last_error() << '\n';
    return kParse;
  }
  std::cerr << "error: " << hline_last_error() << '\n';
  return s == HLINE_RESOURCE ? kBudget : kUsage;
}

struct Options {
  bool no_cache = false;
  bool strict = false;
  hline_budget budget{};
};

int run_hl(const std::string& text, size_t n, size_t steps, bool json) {
  GraphHandle g;
  if (auto s = hline_graph_parse(text.c_str(), &g.g)) return report_failure(s);
  Owned out;
  if (auto s = hline_hl_json(g.g, n, steps, &out.p)) return report_failure(s);
  if (json) {
    std::cout << out.str() << '\n';
    return kOk;
  }
  const Json j = Json::parse(out.str());
  const Json& in = j["input"];
  std::cout << "G: order " << in["order"] << ", size " << in["size"] << "  [" << in["edge_list"].get<std::string>()
            << "]\n";
  for (const Json& step : j["steps"]) {
    std::cout << "HL^" << step["k"] << ": order " << step["order"] << ", size " << step["size"] << ", components "
              << step["components"] << "  [" << step["graph"]["edge_list"].get<std::string>() << "]\n";
    std::cout << "  vertex  edge of HL^" << step["k"].get<size_t>() - 1 << '\n';
    size_t v = 0;
    for (const Json& e : step["provenance"]) {
      std::cout << "  " << std::setw(6) << v++ << "  " << e[0] << "-" << e[1] << '\n';
    }
  }
  return kOk;
}

int run_classify(const std::string& text, size_t n, const Options& o) {
  GraphHandle g;
  if (auto s = hline_graph_parse(text.c_str(), &g.g)) return report_failure(s);
  Owned out;
  hline_outcome outcome = HLINE_UNKNOWN;
  const char* cache_dir = o.no_cache ? nullptr : "";
  if (auto s = hline_classify_json(g.g, n, &o.budget, cache_dir, &outcome, nullptr, &out.p)) {
    return report_failure(s);
  }
  std::cout << out.str() << '\n';
  return o.strict && outcome == HLINE_UNKNOWN ? kBudget : kOk;
}

int run_properties(const std::string& text, size_t n, const Options& o) {
  GraphHandle g;
  if (auto s = hline_graph_parse(text.c_str(), &g.g)) return report_failure(s);
  Owned out;
  if (auto s = hline_property_suite_json(g.g, n, &o.budget, &out.p)) return report_failure(s);
  std::cout << out.str() << '\n';
  return kOk;
}

int run_family(const std::string& spec) {
  GraphHandle g;
  if (auto s = hline_graph_family(spec.c_str(), &g.g)) return report_failure(s);
  Owned edges, g6;
  if (auto s = hline_graph_edge_list(g.g, &edges.p)) return report_failure(s);
  if (auto s = hline_graph_graph6(g.g, &g6.p)) return report_failure(s);
  std::cout << "edge-list: " << edges.str() << "\ngraph6:    " << g6.str() << '\n';
  return kOk;
}

int run_search_min(size_t n, size_t vmax, bool unions, bool all, const Options& o) {
  Owned out;
  size_t unknown = 0;
  if (auto s = hline_search_min_json(n, vmax, unions, all, &o.budget, &unknown, &out.p)) return report_failure(s);
  std::cout << out.str() << '\n';
  return o.strict && unknown > 0 ? kBudget : kOk;
}

int run_conjecture(const std::string& id, size_t n, size_t vmax, const std::string& input, const Options& o) {
  GraphHandle g;
  if (!input.empty()) {
    if (auto s = hline_graph_parse(input.c_str(), &g.g)) return report_failure(s);
  }
  Owned out;
  size_t unknown = 0;
  if (auto s = hline_conjecture_json(id.c_str(), n, vmax, g.g, &o.budget, &unknown, &out.p)) {
    return report_failure(s);
  }
  std::cout << out.str() << '\n';
  return o.strict && unknown > 0 ? kBudget : kOk;
}

int run_verify_certificate(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot read " << path << '\n';
      return kUsage;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "parse error: input is not JSON\n";
    return kParse;
  }
  if (j.is_object() && j.contains("certificate")) j = j["certificate"];
  if (j.is_null()) {
    std::cerr << "error: report carries no certificate\n";
    return kUsage;
  }
  int ok = 0;
  Owned reason;
  if (auto s = hline_verify_certificate_json(j.dump().c_str(), &ok, &reason.p)) return report_failure(s);
  std::cout << (ok ? "certificate verified" : "certificate rejected: " + reason.str()) << '\n';
  return ok ? kOk : kUsage;
}

void print_criterion(const Json& c) {
  std::printf("%3d  %-4s  %8.2fs  %s\n       %s\n", c["id"].get<int>(), c["passed"].get<bool>() ? "PASS" : "FAIL",
              c["seconds"].get<double>(), c["name"].get<std::string>().c_str(), c["detail"].get<std::string>().c_str());
  std::fflush(stdout);
}

int run_verify_paper(const std::string& range, bool json, const Options& o) {
  size_t lo = 0, hi = 0;
  const auto dots = range.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument("missing '..'");
    size_t used = 0;
    lo = std::stoul(range.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("bad lower bound");
    hi = std::stoul(range.substr(dots + 2), &used);
    if (used != range.size() - dots - 2) throw std::invalid_argument("bad upper bound");
  } catch (const std::exception&) {
    std::cerr << "error: --n-range expects LO..HI, got '" << range << "'\n";
    return kUsage;
  }
  if (!json) std::printf("  #  result     time  criterion\n");
  auto progress = [](const char* line, void* user) {
    if (!*static_cast<bool*>(user)) print_criterion(Json::parse(line));
  };
  Owned out;
  int all = 0;
  bool quiet = json;
  if (auto s = hline_verify_paper_json(lo, hi, &o.budget, progress, &quiet, &all, &out.p)) return report_failure(s);
  if (json) std::cout << out.str() << '\n';
  else std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
  return all ? kOk : kUsage;
}

int run_cache(const std::string& action) {
  if (action == "stats") {
    Owned out;
    if (auto s = hline_cache_stats_json(nullptr, &out.p)) return report_failure(s);
    std::cout << out.str() << '\n';
    return kOk;
  }
  size_t removed = 0;
  if (auto s = hline_cache_clear(nullptr, &removed)) return report_failure(s);
  Owned dir;
  hline_cache_dir(nullptr, &dir.p);
  std::cout << "removed " << removed << " segment file(s) from " << dir.str() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated P_n-line graphs: HL operator, classification, certificates and sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hline_version()));

  Options o;
  hline_budget_default(&o.budget);
  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--max-iter", o.budget.max_iter, "iteration cap")->capture_default_str();
    sub->add_option("--max-order", o.budget.max_order, "iterate order cap")->capture_default_str();
    sub->add_option("--search-nodes", o.budget.search_nodes, "search budget per certificate check")
        ->capture_default_str();
    sub->add_flag("--strict", o.strict, "exit 3 when Unknown outcomes are present");
  };

  std::string graph, spec, id, input, range = "4..8", action;
  size_t n = 0, steps = 1, vmax = 0;
  bool json = false, unions = false, all = false;

  auto* hl = app.add_subcommand("hl", "print HL^1..HL^k with provenance");
  hl->add_option("graph", graph, "edge list, family spec or graph6")->required();
  hl->add_option("--n", n, "path order n >= 4")->required();
  hl->add_option("--steps", steps, "number of steps")->capture_default_str();
  hl->add_flag("--json", json, "emit JSON");

  auto* cls = app.add_subcommand("classify", "classify the HL sequence and print the report as JSON");
  cls->add_option("graph", graph, "edge list, family spec or graph6")->required();
  cls->add_option("--n", n, "path order n >= 4")->required();
  cls->add_flag("--no-cache", o.no_cache, "do not read or write the result cache");
  budget_flags(cls);

  auto* props = app.add_subcommand("properties", "run the structural property checks (a)-(h)");
  props->add_option("graph", graph, "edge list, family spec or graph6")->required();
  props->add_option("--n", n, "path order n >= 4")->required();
  budget_flags(props);

  auto* fam = app.add_subcommand("family", "print a family graph in both formats");
  fam->add_option("spec", spec, "C<m>, P<m>, F<m>, G(r=..,m=..) or CL(x,y,z)")->required();

  auto* search = app.add_subcommand("search-min", "find minimally n-convergent graphs");
  search->add_option("--n", n, "path order n >= 4")->required();
  search->add_option("--vmax", vmax, "largest order enumerated")->required();
  search->add_flag("--unions", unions, "also try disjoint unions of two graphs");
  search->add_flag("--all", all, "list every record, not only yes/unknown");
  budget_flags(search);

  auto* conj = app.add_subcommand("conjecture", "run a conjecture sweep");
  conj->add_option("id", id, "Div-iff-Key1, NonIsoPair, UnicyclicMin or Bridge")->required();
  conj->add_option("--n", n, "path order n >= 4")->required();
  conj->add_option("--vmax", vmax, "largest order enumerated")->required();
  conj->add_option("--input", input, "check this graph instead of sweeping");
  budget_flags(conj);

  auto* accept = app.add_subcommand("verify-paper", "run the acceptance suite");
  accept->add_option("--n-range", range, "path orders LO..HI")->capture_default_str();
  accept->add_flag("--json", json, "emit JSON");

  std::string cert_path;
  auto* vcert = app.add_subcommand("verify-certificate", "re-check the certificate in a report");
  vcert->add_option("file", cert_path, "report or certificate JSON, '-' for stdin")->required();

  auto* cache = app.add_subcommand("cache", "inspect or clear the result cache");
  cache->add_option("action", action, "stats or clear")->required()->check(CLI::IsMember({"stats", "clear"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*hl) return run_hl(graph, n, steps, json);
  if (*cls) return run_classify(graph, n, o);
  if (*props) return run_properties(graph, n, o);
  if (*fam) return run_family(spec);
  if (*search) return run_search_min(n, vmax, unions, all, o);
  if (*conj) return run_conjecture(id, n, vmax, input, o);
  if (*accept) return run_verify_paper(range, json, o);
  if (*vcert) return run_verify_certificate(cert_path);
  if (*cache) return run_cache(action);
  return kUsage;
}
