#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hwrbench/baseline_registry.hpp"
#include "hwrbench/dataset.hpp"
#include "hwrbench/report.hpp"
#include "json.hpp"

namespace hwrbench {

// A cell of a published score table, kept as printed.
struct PrintedCell {
  std::string algorithm;
  GameId game;
  std::string score_text;
  std::string printed_text;  // metric percent
  std::size_t line = 0;
};

struct PrintedTable {
  std::string name;  // "<metric>_<group>", e.g. "hns_sota-200m-model-free"
  MetricKind metric = MetricKind::hns;
  std::string group;
  std::vector<PrintedCell> cells;
};

// Aggregate footer entry. row is one of mean, median, efficiency_mean,
// efficiency_median, hwrb.
struct PrintedAggregate {
  std::string table;
  std::string algorithm;
  std::string row;
  std::string printed_text;
};

struct AppendixTables {
  std::vector<PrintedTable> tables;  // sorted by name
  std::vector<PrintedAggregate> aggregates;
};

// Reads every <metric>_<group>.csv plus aggregates.csv from dir.
AppendixTables load_appendix(const std::filesystem::path& dir);

struct CellCheck {
  std::string table;
  MetricKind metric = MetricKind::hns;
  std::string algorithm;
  GameId game;
  std::string score_text;
  std::string printed_text;
  std::optional<double> recomputed_percent;
  bool matched = false;
  std::string reason;  // empty when matched
};

struct AggregateCheck {
  std::string table;
  MetricKind metric = MetricKind::hns;
  std::string algorithm;
  std::string row;
  std::string printed_text;
  std::string recomputed_text;  // formatted like the printed value
  double recomputed = 0.0;      // percent for mean/median, raw value otherwise
  bool matched = false;
  bool column_clean = true;  // no cell mismatch for this algorithm in this table
};

// One quantity printed with different values in different tables.
struct PrintedConflict {
  std::string algorithm;
  std::string quantity;  // e.g. "hwrb", "hns efficiency_mean"
  std::vector<std::pair<std::string, std::string>> printed;  // (table, value)
};

struct ReproductionTolerances {
  double cell_percent = 0.02;
  double aggregate_percent = 0.5;
};

struct ReproductionResult {
  EvaluationReport report;  // table_compat, from the datasets
  std::vector<CellCheck> cells;
  std::vector<AggregateCheck> aggregates;
  std::vector<PrintedConflict> conflicts;

  std::size_t cells_matched() const;
  double cell_match_rate() const;
  bool has_conflict(std::string_view algorithm, std::string_view quantity) const;
  // Mismatching cells, failing aggregate checks and cross-table conflicts.
  nlohmann::ordered_json inconsistency_log() const;
};

// Per-cell checks recompute each printed percent from the raw score printed
// next to it. Aggregate checks compare the printed footers against the
// dataset-driven evaluation. Both N/A cells are skipped; every other
// disagreement, including unparseable text, is recorded as a mismatch.
ReproductionResult reproduce(const AppendixTables& tables, const BaselineRegistry& baselines,
                             std::span<const Dataset> datasets,
                             const ReproductionTolerances& tol = {});

}  // namespace hwrbench
