#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hwrbench/game_id.hpp"
#include "hwrbench/metrics.hpp"

namespace hwrbench {

// One algorithm's values for one metric. An entry mapped to nullopt (or a
// game with no entry at all) is a missing cell ("N/A" in source data).
struct MetricColumn {
  std::string algorithm;
  MetricKind kind = MetricKind::hns;
  std::map<GameId, std::optional<MetricValue>> entries;

  std::vector<double> present_values() const;
  std::size_t coverage() const;

  // Throws std::invalid_argument if a present value's kind (or cap mode)
  // disagrees with the column.
  void check_consistent() const;
};

struct MeanResult {
  double mean;
  std::size_t coverage;
};

struct AggregateRow {
  double mean = 0.0;
  double median = 0.0;
  std::size_t coverage = 0;
  std::optional<std::size_t> hwrb_count;  // hwrns columns only
  EfficiencyValue efficiency_mean{0.0, 0};
  EfficiencyValue efficiency_median{0.0, 0};
};

// The following throw DataError on a column with no present entries.
MeanResult mean_metric(const MetricColumn& col);
// Even count: midpoint of the two central values.
double median_metric(const MetricColumn& col);

// Count of present entries with value >= 1. Throws std::invalid_argument
// for non-hwrns columns.
std::size_t hwrb_count(const MetricColumn& col);

// Algorithms attaining the per-game maximum, ties included, sorted by name.
// Throws DataError when no column has the game present.
std::vector<std::string> per_game_leader(std::span<const MetricColumn> columns, GameId game);

AggregateRow aggregate(const MetricColumn& col, std::uint64_t frames);

}  // namespace hwrbench
