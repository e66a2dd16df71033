#ifndef REGMATCH_ORACLE_HPP
#define REGMATCH_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "regmatch/matching.hpp"
#include "regmatch/multigraph.hpp"

namespace regmatch {

/// Brute-force ground truth. Everything here enumerates over the simple
/// support directly and shares no state with the matching engine, so the
/// two sides cross-validate each other.

inline constexpr int kOracleEdgeBudget = 24;

/// All maximum matchings, in the deterministic order of the edge-inclusion
/// recursion over the sorted support edge list. Throws InputError when the
/// support has more than kOracleEdgeBudget edges.
std::vector<Matching> enumerate_maximum_matchings(const Multigraph& g);

struct OracleVerdict {
  int nu = 0;
  long long maximum_matching_count = 0;
  bool good_exists = false;
  std::optional<Matching> witness;  // first good maximum matching found
};

/// Decides whether some maximum matching leaves no two exposed vertices
/// with a common neighbor.
OracleVerdict exists_good_maximum_matching(const Multigraph& g);

struct ScanRecord {
  Multigraph graph;
  std::string mel;
  OracleVerdict verdict;
  bool construct_ok = false;      // pipeline produced a verified matching
  std::string regime;             // or the error category on failure
  bool agree = false;             // verdict and pipeline consistent
};

struct ScanReport {
  int n = 0;
  int k = 0;
  bool simple = true;
  int graphs_scanned = 0;
  int discrepancies = 0;
  std::vector<ScanRecord> records;
};

/// Enumerates every k-regular (multi)graph on exactly n vertices up to
/// isomorphism (canonical-form deduplication), runs the oracle on each, and
/// cross-checks the constructor where its regime is supported. n is capped
/// at 10 for exhaustive mode.
ScanReport exhaustive_regular_scan(int n, int k, bool simple);

/// Union of per-n scans for n = 1..n_max.
std::vector<ScanReport> scan_up_to(int n_max, int k, bool simple);

/// The canonically deduplicated graph list behind the scan, sorted by the
/// canonical encoding.
std::vector<Multigraph> enumerate_regular_graphs(int n, int k, bool simple);

}  // namespace regmatch

#endif
