#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldal/certificate.hpp"
#include "ldal/oracle.hpp"

namespace ldal {

enum class RowVerdict { Pass, Fail, Inconclusive };
const char* verdict_name(RowVerdict v);

struct TableRow {
  std::string item;      // e.g. "C_7" or "path m=5 n=3"
  std::string expected;  // "5", "[4,5]", "<= 3"
  std::string computed;  // "5", "[4,5]", or an error message
  RowVerdict verdict = RowVerdict::Fail;
};

struct TableReport {
  std::string id;
  std::vector<TableRow> rows;

  bool ok() const;  // no FAIL rows
  std::size_t count(RowVerdict v) const;
};

struct ReproOptions {
  SearchBudget budget;
  bool extended = false;        // also run the rows the reference only brackets
  long long extended_ms = 60000;  // time limit per extended row
  int sweep_m = 8;              // constructions grid bounds
  int sweep_n = 4;
};

std::vector<std::string> table_ids();

/// Throws ParameterError for an unknown id.
TableReport reproduce(const std::string& id, const ReproOptions& options = {});

/// One row per (labeler, parameters) point of every construction's hypothesis
/// grid with m <= max_m and n <= max_n.
struct SweepCase {
  std::string labeler;
  std::string params;
  std::optional<Certificate> certificate;  // empty when construction threw
  std::string error;
};
std::vector<SweepCase> construction_sweep(int max_m, int max_n, const SearchBudget& budget = {});

std::string report_text(const TableReport& r);
std::string report_json(const TableReport& r);

}  // namespace ldal
