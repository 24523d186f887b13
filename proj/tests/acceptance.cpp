// Acceptance gate: runs the full verification battery and prints one
// pass/FAIL line per criterion.  Exits nonzero when any criterion fails.
//
// The heavyweight corpus (all connected isomorphism classes up to seven
// vertices) is materialised once and shared by the criteria that quantify
// over it; the eight-vertex corpus for the leaf-interval criterion goes
// through the graph6 file-ingestion path on purpose, so the external input
// format is exercised end to end.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gcx/canonical.hpp"
#include "gcx/consistency.hpp"
#include "gcx/convexity.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/graph.hpp"
#include "gcx/graph6.hpp"
#include "gcx/harness.hpp"
#include "gcx/intervals.hpp"
#include "gcx/patterns.hpp"
#include "helpers.hpp"

namespace {

using gcx::CheckReport;
using gcx::CheckStatus;
using gcx::ConvexityKind;
using gcx::Graph;
using gcx::IntervalOracle;
using gcx::Vertex;
using gcx::VertexSet;

int worker_count() {
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) hc = 1;
  return static_cast<int>(std::min(hc, 8u));
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict ok(std::string detail = "") { return {true, std::move(detail)}; }
Verdict bad(std::string detail) { return {false, std::move(detail)}; }

// ---------------------------------------------------------------------------
// Shared seven-vertex corpus report.

const std::vector<std::string>& shared_check_names() {
  static const std::vector<std::string> names = {
      "geometry-a-free", "m3-closure",      "m3-sets-closure",
      "ss-cover",        "nbhd-m3-convex",  "classical-geometries"};
  return names;
}

const CheckReport& shared_report() {
  static const CheckReport report = gcx::run_corpus(
      gcx::CorpusSpec::range(1, 7), shared_check_names(), worker_count());
  return report;
}

std::size_t column_of(const CheckReport& report, const std::string& check) {
  for (std::size_t i = 0; i < report.check_names.size(); ++i) {
    if (report.check_names[i] == check) return i;
  }
  throw std::logic_error("missing check column: " + check);
}

int capacity_skips(const CheckReport& report, const std::string& check) {
  const std::size_t column = column_of(report, check);
  int total = 0;
  for (const gcx::CheckRow& row : report.rows) {
    const gcx::CheckOutcome& outcome = row.outcomes[column];
    if (outcome.status == CheckStatus::Skipped && outcome.reason == "capacity") {
      ++total;
    }
  }
  return total;
}

std::string first_failure(const CheckReport& report, const std::string& check) {
  const std::size_t column = column_of(report, check);
  for (const gcx::CheckRow& row : report.rows) {
    const gcx::CheckOutcome& outcome = row.outcomes[column];
    if (outcome.status == CheckStatus::Fail) {
      return row.graph6 + " witness=" + outcome.witness.dump();
    }
  }
  return "";
}

Verdict zero_failure_column(const std::string& check, bool requires_full_pass,
                            const std::string& extra = "") {
  const CheckReport& report = shared_report();
  const int fails = report.count(check, CheckStatus::Fail);
  if (fails != 0) {
    return bad(std::to_string(fails) + " failing graphs; first: " +
               first_failure(report, check));
  }
  const int passes = report.count(check, CheckStatus::Pass);
  if (requires_full_pass && passes != static_cast<int>(report.rows.size())) {
    return bad("expected the check to run on every graph, but only " +
               std::to_string(passes) + "/" + std::to_string(report.rows.size()) +
               " passed");
  }
  if (!requires_full_pass && passes == 0) {
    return bad("the check never applied to any graph, so the claim is vacuous");
  }
  std::string detail = std::to_string(report.rows.size()) + " graphs; 0 failures";
  if (!extra.empty()) detail += "; " + extra;
  return ok(detail);
}

// ---------------------------------------------------------------------------
// C1-C3: corpus-wide convexity invariants on connected classes up to n = 7.

Verdict criterion_geometry_a_free() {
  const CheckReport& report = shared_report();
  if (report.rows.size() != 996) {
    return bad("expected 996 connected classes with 1 <= n <= 7, enumerated " +
               std::to_string(report.rows.size()));
  }
  const char order7 = static_cast<char>(63 + 7);
  const long n7 = std::count_if(
      report.rows.begin(), report.rows.end(),
      [&](const gcx::CheckRow& row) { return row.graph6[0] == order7; });
  if (n7 != 853) {
    return bad("expected 853 connected classes at n = 7, enumerated " +
               std::to_string(n7));
  }
  const int capacity = capacity_skips(report, "geometry-a-free");
  if (capacity != 0) {
    return bad(std::to_string(capacity) + " capacity skips at n <= 7");
  }
  Verdict base = zero_failure_column("geometry-a-free", false);
  if (!base.pass) return base;
  return ok("996 graphs (853 at n=7); 0 failures; 0 capacity skips");
}

Verdict criterion_m3_closure() { return zero_failure_column("m3-closure", false); }

Verdict criterion_m3_sets_closure() {
  return zero_failure_column("m3-sets-closure", false);
}

// ---------------------------------------------------------------------------
// C4: the leaf-interval exclusion property, fed through the graph6 file path
// on every connected class up to n = 8, plus the frozen six-vertex instance.

Verdict criterion_a_graph_leaf_interval() {
  const Graph a = testutil::a_graph();
  if (gcx::monophonic_interval(a, 0, 1) != VertexSet::of({0, 1, 2, 5})) {
    return bad("the pendant pair of the square-with-two-legs graph has the wrong "
               "monophonic interval");
  }

  std::vector<Graph> corpus;
  for (int n = 1; n <= 8; ++n) {
    gcx::for_each_graph(n, /*connected_only=*/true, /*dedup=*/true,
                        [&](const Graph& g) { corpus.push_back(g); });
  }
  if (corpus.size() != 12113) {
    return bad("expected 12113 connected classes with 1 <= n <= 8, enumerated " +
               std::to_string(corpus.size()));
  }

  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "gcx_acceptance_corpus_n8.g6";
  {
    std::ofstream out(path);
    if (!out) return bad("cannot write corpus file " + path.string());
    for (const Graph& g : corpus) out << gcx::write_graph6(g) << "\n";
  }
  gcx::CorpusSpec spec = gcx::CorpusSpec::file(path.string());
  std::vector<Graph> loaded = spec.materialize();
  if (loaded.size() != corpus.size()) {
    return bad("graph6 file round trip lost graphs: wrote " +
               std::to_string(corpus.size()) + ", read " +
               std::to_string(loaded.size()));
  }
  CheckReport report =
      gcx::run_checks(std::move(loaded), gcx::resolve_checks({"a-interval"}),
                      worker_count(), spec.describe());
  const int fails = report.count("a-interval", CheckStatus::Fail);
  if (fails != 0) {
    return bad(std::to_string(fails) + " failing graphs; first: " +
               first_failure(report, "a-interval"));
  }
  const int passes = report.count("a-interval", CheckStatus::Pass);
  if (passes == 0) return bad("no graph exercised the property");
  return ok("12113 graphs via graph6 file; 0 failures; " + std::to_string(passes) +
            " applicable");
}

// ---------------------------------------------------------------------------
// C5-C7: one criterion per classical geometry characterization; a failing
// graph is attributed by the convexity kind named in its witness.

std::vector<std::pair<std::string, std::string>> classical_failures() {
  const CheckReport& report = shared_report();
  const std::size_t column = column_of(report, "classical-geometries");
  std::vector<std::pair<std::string, std::string>> out;
  for (const gcx::CheckRow& row : report.rows) {
    const gcx::CheckOutcome& outcome = row.outcomes[column];
    if (outcome.status != CheckStatus::Fail) continue;
    std::string kind;
    if (outcome.witness.contains("kind")) {
      kind = outcome.witness["kind"].get<std::string>();
    }
    out.emplace_back(row.graph6, kind);
  }
  return out;
}

Verdict classical_criterion(const std::string& kind) {
  for (const auto& [graph6, failed_kind] : classical_failures()) {
    if (failed_kind == kind) {
      return bad("biconditional fails on " + graph6);
    }
  }
  return ok(std::to_string(shared_report().rows.size()) +
            " graphs; biconditional holds");
}

Verdict criterion_geodesic_characterization() {
  return classical_criterion("geodesic");
}
Verdict criterion_monophonic_characterization() {
  return classical_criterion("monophonic");
}
Verdict criterion_m3_characterization() { return classical_criterion("m3-path"); }

// ---------------------------------------------------------------------------
// C8-C9.

Verdict criterion_semisimplicial_cover() {
  return zero_failure_column("ss-cover", false);
}

Verdict criterion_neighborhood_m3_convexity() {
  return zero_failure_column("nbhd-m3-convex", true);
}

// ---------------------------------------------------------------------------
// C10: the transcribed configuration tables must be fully matched by the
// pattern catalog, and every counted member may have at most one
// three-steiner-simplicial vertex.

Verdict criterion_pattern_catalog_consistency() {
  gcx::ConsistencyReport report = gcx::consistency_check();
  if (report.all_pass) {
    return ok(std::to_string(report.configurations.size()) + " configurations and " +
              std::to_string(report.member_counts.size()) +
              " member counts all consistent");
  }
  std::string detail = std::to_string(report.failed_configurations) + "/" +
                       std::to_string(report.configurations.size()) +
                       " configurations unmatched:";
  for (const gcx::ConfigurationResult& result : report.configurations) {
    if (!result.pass) detail += " " + result.name;
  }
  detail += "; " + std::to_string(report.failed_member_counts) + "/" +
            std::to_string(report.member_counts.size()) +
            " member counts over the limit:";
  for (const gcx::MemberCountResult& row : report.member_counts) {
    if (!row.pass) {
      detail += " " + row.family + "#" + std::to_string(row.member) + "=" +
                std::to_string(row.three_steiner_simplicial);
    }
  }
  return bad(detail);
}

// ---------------------------------------------------------------------------
// C11: the optimised searches agree with naive reference implementations.

Verdict criterion_oracle_equivalences() {
  // Minimal-tree pair reduction == induced-path pair interval.
  for (int n = 2; n <= 6; ++n) {
    bool broken = false;
    std::string where;
    gcx::for_each_graph(n, /*connected_only=*/true, /*dedup=*/true,
                        [&](const Graph& g) {
                          if (broken) return;
                          for (Vertex u = 0; u < n && !broken; ++u) {
                            for (Vertex v = u + 1; v < n && !broken; ++v) {
                              VertexSet tree = gcx::detail::monophonic_tuple_union(
                                  g, VertexSet::of({u, v}));
                              VertexSet path = gcx::monophonic_interval(g, u, v);
                              if (tree != path) {
                                broken = true;
                                where = gcx::write_graph6(g) + " pair (" +
                                        std::to_string(u) + ", " + std::to_string(v) +
                                        ")";
                              }
                            }
                          }
                        });
    if (broken) return bad("minimal-tree pair reduction diverges on " + where);
  }

  // Steiner interval of a 3-set sits inside its monophonic set interval.
  for (int n = 3; n <= 6; ++n) {
    bool broken = false;
    std::string where;
    gcx::for_each_graph(
        n, /*connected_only=*/true, /*dedup=*/true, [&](const Graph& g) {
          if (broken) return;
          for (Vertex u = 0; u < n && !broken; ++u) {
            for (Vertex v = u + 1; v < n && !broken; ++v) {
              for (Vertex w = v + 1; w < n && !broken; ++w) {
                VertexSet s = VertexSet::of({u, v, w});
                if (!gcx::steiner_interval(g, s).subset_of(
                        gcx::monophonic_interval_set(g, s))) {
                  broken = true;
                  where = gcx::write_graph6(g) + " set {" + std::to_string(u) +
                          ", " + std::to_string(v) + ", " + std::to_string(w) + "}";
                }
              }
            }
          }
        });
    if (broken) return bad("a Steiner interval escapes the monophonic set "
                           "interval on " + where);
  }

  // Pruned embedding search == exhaustive injection filter.
  std::vector<Graph> patterns;
  for (const gcx::PatternFamily& family : gcx::catalog()) {
    if (family.order() > 6) continue;
    for (int i = 0; i < family.member_count(); ++i) patterns.push_back(family.member(i));
  }
  for (int n = 0; n <= 6; ++n) {
    bool broken = false;
    std::string where;
    gcx::for_each_graph(n, /*connected_only=*/false, /*dedup=*/true,
                        [&](const Graph& g) {
                          if (broken) return;
                          for (const Graph& pattern : patterns) {
                            const bool fast = gcx::contains_induced(g, pattern);
                            const bool brute =
                                !testutil::brute_embeddings(g, pattern).empty();
                            if (fast != brute) {
                              broken = true;
                              where = gcx::write_graph6(g) + " pattern " +
                                      gcx::write_graph6(pattern);
                              return;
                            }
                          }
                        });
    if (broken) return bad("containment search diverges on " + where);
  }
  return ok("pair reduction, Steiner bound, and containment all agree up to n=6");
}

// ---------------------------------------------------------------------------
// C12: hull and alignment axioms for every kind on every class up to n = 5,
// disconnected graphs included.

Verdict criterion_closure_alignment_axioms() {
  const std::vector<ConvexityKind> kinds = {
      ConvexityKind::geodesic(),       ConvexityKind::monophonic(),
      ConvexityKind::m3_path(),        ConvexityKind::m33(),
      ConvexityKind::monophonic_k(3),  ConvexityKind::steiner_k(3)};
  for (int n = 0; n <= 5; ++n) {
    std::string where;
    bool broken = false;
    gcx::for_each_graph(n, /*connected_only=*/false, /*dedup=*/true, [&](const Graph& g) {
      if (broken) return;
      for (const ConvexityKind kind : kinds) {
        IntervalOracle oracle(g);
        const std::vector<VertexSet> family = gcx::convex_sets(oracle, kind);
        const std::set<VertexSet> members(family.begin(), family.end());
        auto blame = [&](const std::string& what) {
          broken = true;
          where = what + " [" + gcx::write_graph6(g) + ", " + kind.name() + "]";
        };
        if (members.count(VertexSet::empty_set()) == 0 ||
            members.count(g.vertices()) == 0) {
          blame("the family misses the empty or full set");
          return;
        }
        for (VertexSet a : family) {
          for (VertexSet b : family) {
            if (members.count(a & b) == 0) {
              blame("the family is not intersection-closed");
              return;
            }
          }
        }
        const std::uint32_t limit = std::uint32_t{1} << g.order();
        std::vector<VertexSet> hulls(limit);
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
          hulls[mask] = gcx::hull(oracle, kind, VertexSet(mask));
        }
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
          const VertexSet s(mask);
          const VertexSet h = hulls[mask];
          if (!s.subset_of(h)) {
            blame("the hull is not extensive");
            return;
          }
          if (hulls[h.mask()] != h || members.count(h) == 0) {
            blame("the hull is not an idempotent map onto convex sets");
            return;
          }
          if (gcx::is_convex(oracle, kind, s) != (members.count(s) != 0)) {
            blame("convexity disagrees with family membership");
            return;
          }
          for (VertexSet c : family) {
            if (s.subset_of(c) && !h.subset_of(c)) {
              blame("the hull is not the minimal convex superset");
              return;
            }
          }
          for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            if (!hulls[sub].subset_of(h)) {
              blame("the hull is not monotone");
              return;
            }
            if (sub == 0) break;
          }
        }
      }
    });
    if (broken) return bad(where);
  }
  return ok("all six kinds satisfy the alignment and closure axioms up to n=5");
}

// ---------------------------------------------------------------------------
// C13: serialization, canonical labeling, and report determinism.

Verdict criterion_infrastructure_determinism() {
  // graph6 round trip over every labeled graph up to n = 5.
  for (int n = 0; n <= 5; ++n) {
    bool broken = false;
    std::string where;
    gcx::for_each_graph(n, /*connected_only=*/false, /*dedup=*/false,
                        [&](const Graph& g) {
                          if (broken) return;
                          const std::string text = gcx::write_graph6(g);
                          if (!(gcx::parse_graph6(text) == g)) {
                            broken = true;
                            where = text;
                          }
                        });
    if (broken) return bad("graph6 round trip broke on " + where);
  }

  // Canonical form is invariant under 200 random relabelings per class.
  std::vector<Graph> classes;
  for (int n = 0; n <= 7; ++n) {
    gcx::for_each_graph(n, /*connected_only=*/false, /*dedup=*/true,
                        [&](const Graph& g) { classes.push_back(g); });
  }
  std::atomic<bool> invariant_broken{false};
  std::mutex detail_mutex;
  std::string invariant_detail;
  const int jobs = worker_count();
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < classes.size();
         i += static_cast<std::size_t>(jobs)) {
      const Graph& g = classes[i];
      const std::string base = gcx::canonical_form(g);
      std::mt19937 rng(static_cast<std::uint32_t>(9001 + 7919 * i));
      std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
      std::iota(perm.begin(), perm.end(), 0);
      for (int round = 0; round < 200; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        if (gcx::canonical_form(g.relabeled(perm)) != base) {
          invariant_broken = true;
          std::lock_guard<std::mutex> lock(detail_mutex);
          invariant_detail = "canonical form varies under relabeling of " +
                             gcx::write_graph6(g);
          return;
        }
      }
      if (invariant_broken) return;
    }
  };
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t) workers.emplace_back(work, static_cast<std::size_t>(t));
  for (std::thread& worker : workers) worker.join();
  if (invariant_broken) return bad(invariant_detail);

  // The scan report is byte-identical whether it runs on one thread or four.
  std::vector<Graph> corpus;
  for (int n = 1; n <= 6; ++n) {
    gcx::for_each_graph(n, /*connected_only=*/true, /*dedup=*/true,
                        [&](const Graph& g) { corpus.push_back(g); });
  }
  const std::vector<gcx::CheckDef> checks = gcx::resolve_checks({});
  const CheckReport serial = gcx::run_checks(corpus, checks, 1, "determinism corpus");
  const CheckReport threaded = gcx::run_checks(corpus, checks, 4, "determinism corpus");
  if (serial.to_json().dump(2) != threaded.to_json().dump(2)) {
    return bad("JSON report differs between jobs=1 and jobs=4");
  }
  if (serial.to_csv() != threaded.to_csv()) {
    return bad("CSV report differs between jobs=1 and jobs=4");
  }
  return ok("round trip, canonical invariance (200 relabelings/class, n<=7), and "
            "scan byte-identity all hold");
}

}  // namespace

int main() {
  struct Criterion {
    std::string id;
    std::string slug;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {"C1", "m33-geometry-implies-a-free", &criterion_geometry_a_free},
      {"C2", "m-interval-m3-closure", &criterion_m3_closure},
      {"C3", "m-interval-m3sets-closure", &criterion_m3_sets_closure},
      {"C4", "a-graph-leaf-interval", &criterion_a_graph_leaf_interval},
      {"C5", "geodesic-geometry-characterization",
       &criterion_geodesic_characterization},
      {"C6", "monophonic-geometry-characterization",
       &criterion_monophonic_characterization},
      {"C7", "m3-geometry-characterization", &criterion_m3_characterization},
      {"C8", "semisimplicial-cover", &criterion_semisimplicial_cover},
      {"C9", "neighborhood-m3-convexity", &criterion_neighborhood_m3_convexity},
      {"C10", "pattern-catalog-consistency", &criterion_pattern_catalog_consistency},
      {"C11", "oracle-equivalences", &criterion_oracle_equivalences},
      {"C12", "closure-alignment-axioms", &criterion_closure_alignment_axioms},
      {"C13", "infrastructure-determinism", &criterion_infrastructure_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = criterion.run();
    } catch (const std::exception& e) {
      verdict = bad(std::string("unexpected exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - started;
    std::cout << std::left << std::setw(5) << criterion.id << std::setw(40)
              << criterion.slug << (verdict.pass ? "pass" : "FAIL");
    if (!verdict.detail.empty()) std::cout << "  (" << verdict.detail << ")";
    std::cout << "\n" << std::flush;
    std::cerr << "[" << criterion.id << "] " << std::fixed << std::setprecision(2)
              << elapsed.count() << " s\n";
    if (!verdict.pass) ++failures;
  }
  std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failures))
            << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
