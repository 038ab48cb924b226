#pragma once

// The acceptance criteria as runnable checks, shared by the acceptance test
// binary and `ugg selftest`.

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ugg/audit.hpp"
#include "ugg/convex.hpp"
#include "ugg/embedder.hpp"
#include "ugg/enumerate.hpp"
#include "ugg/geometry.hpp"
#include "ugg/ugraph.hpp"
#include "ugg/validate.hpp"

namespace ugg::acceptance {

struct Options {
  Vertex max_forest_n = 10;      // criterion 2
  Vertex max_audit_n = 9;        // criterion 5
  Vertex max_caterpillar_n = 12; // criterion 6
  std::size_t random_trees = 100;
  std::vector<Vertex> large_ns{255, 1023};
  std::uint64_t seed = 20240611;

  /// Shrinks every sweep to n <= cap (selftest --max-n).
  static Options capped(Vertex cap) {
    Options o;
    o.max_forest_n = std::min(o.max_forest_n, cap);
    o.max_audit_n = std::min(o.max_audit_n, cap);
    o.max_caterpillar_n = std::min(o.max_caterpillar_n, cap);
    return o;
  }
};

// Pinned limits.
inline constexpr double kBuildSecondsPerN = 5.0;
inline constexpr double kForestSweepSeconds = 60.0;
inline constexpr double kLargeEmbedSeconds = 10.0;
inline constexpr double kCaterpillarSweepSeconds = 60.0;

// Exact edge counts for n = 2^h - 1, h = 2..10 (regression values).
inline constexpr std::array<Index, 9> kEdgeCounts{3, 21, 87, 285, 819, 2169, 5439, 13125, 30795};
// Unlabeled forests on n = 1..12 vertices.
inline constexpr std::array<std::size_t, 12> kForestCounts{1, 2, 3, 6, 10, 20, 37, 76, 153, 329, 710, 1601};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class Fn>
Result timed(int id, std::string name, Fn&& fn) {
  Result r{id, std::move(name), false, {}, 0};
  const auto t0 = Clock::now();
  try {
    std::ostringstream detail;
    r.pass = fn(detail);
    r.detail = detail.str();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = since(t0);
  return r;
}

}  // namespace detail

inline Result edge_count_bound(const Options&) {
  return detail::timed(1, "edge-count bound", [](std::ostream& out) {
    bool ok = true;
    for (int h = 2; h <= 10; ++h) {
      const Index n = (Index{1} << h) - 1;
      const auto t0 = detail::Clock::now();
      const Index edges = static_cast<Index>(build_universal(n).edge_count());
      const double secs = detail::since(t0);
      const Index bound = 5 * (n + 1) * h;
      const bool good = edges < bound && edges == kEdgeCounts[static_cast<std::size_t>(h - 2)] &&
                        secs < kBuildSecondsPerN;
      if (!good || h == 10) out << "n=" << n << " edges=" << edges << " bound=" << bound << ' ';
      ok = ok && good;
    }
    return ok;
  });
}

inline Result forest_universality(const Options& o) {
  return detail::timed(2, "forest universality", [&](std::ostream& out) {
    const auto t0 = detail::Clock::now();
    std::size_t instances = 0;
    std::size_t failures = 0;
    bool counts_ok = true;
    for (Vertex n = 1; n <= o.max_forest_n; ++n) {
      const auto forests = enumerate_forests(n);
      counts_ok = counts_ok && forests.size() == kForestCounts[static_cast<std::size_t>(n - 1)];
      if (n <= 8) counts_ok = counts_ok && forests.size() == count_forests_bruteforce(n);
      const UniversalGraph host = build_universal(n);
      for (const Forest& f : forests) {
        ++instances;
        try {
          if (!validate_embedding(host, f.graph(), embed_forest(host, f)).ok()) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
    }
    const double secs = detail::since(t0);
    out << instances << " forests (n<=" << o.max_forest_n << "), " << failures << " failures, counts "
        << (counts_ok ? "agree" : "DISAGREE") << ", " << secs << "s";
    return failures == 0 && counts_ok && secs < kForestSweepSeconds;
  });
}

inline Result predicate_agreement(const Options&) {
  return detail::timed(3, "predicate-oracle agreement", [](std::ostream& out) {
    std::size_t pairs = 0;
    std::size_t disagreements = 0;
    for (Index n : {7, 15, 31}) {
      const UniversalGraph g = build_universal(n);
      const CoordinateRealization c = realize_coordinates(g.shape(), n);
      const auto& edges = g.edges();
      for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          ++pairs;
          if (edges_cross(g, edges[i], edges[j]) != segments_cross_exact(c, edges[i], edges[j])) ++disagreements;
        }
    }
    out << pairs << " edge pairs, " << disagreements << " disagreements";
    return disagreements == 0;
  });
}

inline Result large_smoke(const Options& o) {
  return detail::timed(4, "large-n random trees", [&](std::ostream& out) {
    std::mt19937_64 rng(o.seed);
    std::size_t failures = 0;
    double worst = 0;
    for (Vertex n : o.large_ns) {
      const UniversalGraph host = build_universal(n);
      for (std::size_t r = 0; r < o.random_trees; ++r) {
        const Forest tree(random_labeled_tree(n, rng));
        const auto t0 = detail::Clock::now();
        try {
          if (!validate_embedding(host, tree.graph(), embed_forest(host, tree)).ok()) ++failures;
        } catch (const Error&) {
          ++failures;
        }
        worst = std::max(worst, detail::since(t0));
      }
    }
    out << o.random_trees << " trees per n, " << failures << " failures, slowest " << worst << "s";
    return failures == 0 && worst < kLargeEmbedSeconds;
  });
}

inline Result lemma_properties(const Options& o) {
  return detail::timed(5, "lemma-level properties", [&](std::ostream& out) {
    std::size_t calls = 0;
    std::size_t regions = 0;
    std::size_t violations = 0;
    std::string first;
    for (Vertex n = 1; n <= o.max_audit_n; ++n) {
      const UniversalGraph host = build_universal(n);
      const CoordinateRealization coords = realize_coordinates(host.shape(), n);
      for (const Forest& f : enumerate_forests(n)) {
        const Embedding phi = embed_forest(host, f, {.trace = true});
        const AuditReport report = audit_trace(host, f.graph(), phi, &coords);
        calls += report.calls;
        regions += report.region_checks;
        violations += report.violations.size();
        if (first.empty() && !report.ok()) first = report.violations.front();
      }
    }
    out << calls << " recursive calls, " << regions << " quarter-planes, " << violations << " violations";
    if (!first.empty()) out << " (" << first << ")";
    return violations == 0 && calls > 0;
  });
}

/// Every prefix length n <= limit: each window ending at n-1 reaches its length.
inline bool pi_property_all_prefixes(Index limit) {
  const PiSequence pi = pi_sequence(limit);
  for (Index end = 0; end < limit; ++end) {
    Index best = 0;
    for (Index lo = end; lo >= 0; --lo) {
      best = std::max(best, pi[lo]);
      if (best < end - lo + 1) return false;
    }
  }
  return true;
}

/// Edge count of the caterpillar host without building it. Each pair is
/// charged to its endpoint with the larger term (smaller index on ties).
inline Index caterpillar_host_edge_count(Index n) {
  const PiSequence pi = pi_sequence(n);
  Index count = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index d = 1; d <= std::min(pi[i], n / 2); ++d) {
      const Index fwd = (i + d) % n;
      const Index back = (i - d + n) % n;
      const auto charged = [&](Index j) { return pi[i] > pi[j] || (pi[i] == pi[j] && i < j); };
      count += charged(fwd);
      if (back != fwd) count += charged(back);
    }
  }
  return count;
}

inline Result pi_and_caterpillars(const Options& o) {
  return detail::timed(6, "pi-sequence and caterpillars", [&](std::ostream& out) {
    const auto t0 = detail::Clock::now();
    const bool window = pi_property_all_prefixes(4095);
    bool sums = true;
    for (int h = 1; h <= 11; ++h)
      sums = sums && pi_sequence((Index{1} << h) - 1).sum() == Index{h - 1} * (Index{1} << h) + 1;
    bool budget = true;
    for (Index n = 1; n <= 4095; ++n) {
      const Index edges = caterpillar_host_edge_count(n);
      budget = budget && edges <= 2 * pi_sequence(n).sum();
      if (n <= 256 || n == 1023 || n == 2047 || n == 4095)
        budget = budget && edges == build_caterpillar_host(n).edge_count();
    }
    std::size_t embedded = 0;
    std::size_t failures = 0;
    for (Vertex n = 1; n <= o.max_caterpillar_n; ++n) {
      const ConvexHost host = build_caterpillar_host(n);
      for (const Graph& c : enumerate_caterpillars(n)) {
        ++embedded;
        try {
          if (!validate_embedding(host, c, embed_caterpillar(host, c)).ok()) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
    }
    const double secs = detail::since(t0);
    out << "window property " << (window ? "holds" : "FAILS") << ", sums " << (sums ? "match" : "DIFFER")
        << ", edge budget " << (budget ? "respected" : "EXCEEDED") << ", " << embedded << " caterpillars, "
        << failures << " failures, " << secs << "s";
    return window && sums && budget && failures == 0 && secs < kCaterpillarSweepSeconds;
  });
}

inline Result twochord(const Options&) {
  return detail::timed(7, "two-chord construction", [](std::ostream& out) {
    std::size_t members = 0;
    std::size_t failures = 0;
    bool sizes = true;
    for (Index n = 6; n <= 30; ++n) {
      const ConvexHost host = build_twochord_host(n);
      const auto q = static_cast<Index>(std::sqrt(static_cast<double>(n)) + 1e-9);
      sizes = sizes && host.edge_count() <= n + 2 * (2 * q) * n;
      for (const ChordedCycle& g : enumerate_chorded_cycles(n, 2)) {
        ++members;
        try {
          if (!validate_embedding(host, g.graph(), embed_twochord(host, g)).ok()) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
    }
    bool covering = true;
    for (Index n = 3; n <= 2000; ++n) covering = covering && twochord_covering(n);
    out << members << " chorded cycles, " << failures << " failures, size bound "
        << (sizes ? "respected" : "EXCEEDED") << ", covering " << (covering ? "holds" : "FAILS");
    return failures == 0 && sizes && covering;
  });
}

inline Result convex_lower_bound_side(const Options&) {
  return detail::timed(8, "convex universality certifier", [](std::ostream& out) {
    bool complete_ok = true;
    bool cycle_rejected = true;
    bool counts_ok = true;
    std::size_t families = 0;
    for (Index h = 1; h <= 3; ++h) {
      for (Index n = 2 * h + 2; n <= 12; ++n) {
        const auto family = enumerate_chorded_cycles(n, h);
        ++families;
        complete_ok = complete_ok && check_universal_convex(build_complete_convex(n), family).universal;
        cycle_rejected = cycle_rejected && !check_universal_convex(build_cycle_host(n), family).universal;
        counts_ok = counts_ok && family.size() == count_chorded_classes_burnside(n, h);
      }
    }
    out << families << " families; complete host " << (complete_ok ? "universal" : "NOT universal")
        << ", bare cycle " << (cycle_rejected ? "rejected" : "ACCEPTED") << ", class counts "
        << (counts_ok ? "agree" : "DISAGREE");
    return complete_ok && cycle_rejected && counts_ok;
  });
}

inline std::vector<Result> run_all(const Options& o = {}) {
  return {edge_count_bound(o),    forest_universality(o), predicate_agreement(o),   large_smoke(o),
          lemma_properties(o),    pi_and_caterpillars(o), twochord(o), convex_lower_bound_side(o)};
}

inline std::string format(const Result& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " (" << r.seconds
      << "s)";
  return out.str();
}

}  // namespace ugg::acceptance
