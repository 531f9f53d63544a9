#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "ldal/graph.hpp"
#include "ldal/labeling.hpp"

namespace ldal {

struct SearchBudget {
  int max_order = 10;
  std::uint64_t max_nodes = 0;               // 0: unlimited
  std::chrono::milliseconds time_limit{0};   // 0: unlimited
  unsigned threads = 0;                      // 0: hardware concurrency
  bool symdiff_bound = true;                 // use the forced-pair lower bound
  bool symmetry = true;                      // path/cycle symmetry breaking
};

enum class OracleStatus {
  Exact,       // lower == upper, witness attains it
  Bracket,     // budget ran out; lower <= chi_ld <= upper (upper 0 if unknown)
  NoLabeling,  // search completed without finding a valid labeling
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double millis = 0;
  unsigned threads = 1;
};

struct OracleResult {
  OracleStatus status = OracleStatus::NoLabeling;
  int lower = 0;
  int upper = 0;
  std::optional<Labeling> witness;
  SearchStats stats;

  bool exact() const noexcept { return status == OracleStatus::Exact; }
  int value() const noexcept { return upper; }
};

std::string status_name(OracleStatus s);

/// Minimum number of distinct weights over all local distance antimagic
/// labelings of G. The witness is the same for every thread count.
/// Throws CapExceededError when the order exceeds budget.max_order (or 64).
OracleResult chi_ld_exact(const Graph& g, const SearchBudget& budget = {});

/// Exact chromatic number. Throws CapExceededError above `cap` vertices.
int chi_exact(const Graph& g, int cap = 64);

/// True iff the witness is a valid labeling with exactly `upper` colours.
/// Throws SelfCheckError on mismatch.
bool min_colors_witness_check(const OracleResult& result, const Graph& g);

}  // namespace ldal
