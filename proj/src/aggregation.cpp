#include "hwrbench/aggregation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "hwrbench/error.hpp"

namespace hwrbench {

std::vector<double> MetricColumn::present_values() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const auto& [game, v] : entries) {
    if (v) out.push_back(v->value);
  }
  return out;
}

std::size_t MetricColumn::coverage() const {
  return static_cast<std::size_t>(
      std::ranges::count_if(entries, [](const auto& e) { return e.second.has_value(); }));
}

void MetricColumn::check_consistent() const {
  std::optional<std::optional<CapMode>> mode;
  for (const auto& [game, v] : entries) {
    if (!v) continue;
    if (v->kind != kind) {
      throw std::invalid_argument(fmt::format("column '{}' ({}) holds a {} value for '{}'",
                                              algorithm, to_string(kind), to_string(v->kind),
                                              game.name()));
    }
    if (mode && *mode != v->cap_mode) {
      throw std::invalid_argument(fmt::format("column '{}' mixes cap modes", algorithm));
    }
    mode = v->cap_mode;
  }
}

namespace {

std::vector<double> nonempty_values(const MetricColumn& col) {
  auto values = col.present_values();
  if (values.empty()) {
    throw DataError(fmt::format("column '{}' ({}) has no present entries", col.algorithm,
                                to_string(col.kind)));
  }
  return values;
}

}  // namespace

MeanResult mean_metric(const MetricColumn& col) {
  const auto values = nonempty_values(col);
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  return MeanResult{sum / static_cast<double>(values.size()), values.size()};
}

double median_metric(const MetricColumn& col) {
  auto values = nonempty_values(col);
  std::ranges::sort(values);
  const auto n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::size_t hwrb_count(const MetricColumn& col) {
  if (col.kind != MetricKind::hwrns) {
    throw std::invalid_argument(
        fmt::format("HWRB needs an hwrns column, '{}' is {}", col.algorithm, to_string(col.kind)));
  }
  std::size_t count = 0;
  for (const auto& [game, v] : col.entries) {
    if (v && hwrb_indicator(*v)) ++count;
  }
  return count;
}

std::vector<std::string> per_game_leader(std::span<const MetricColumn> columns, GameId game) {
  std::optional<double> best;
  std::vector<std::string> leaders;
  for (const auto& col : columns) {
    const auto it = col.entries.find(game);
    if (it == col.entries.end() || !it->second) continue;
    const double v = it->second->value;
    if (!best || v > *best) {
      best = v;
      leaders.assign({col.algorithm});
    } else if (v == *best) {
      leaders.push_back(col.algorithm);
    }
  }
  if (!best) throw DataError(fmt::format("no column has a value for '{}'", game.name()));
  std::ranges::sort(leaders);
  leaders.erase(std::unique(leaders.begin(), leaders.end()), leaders.end());
  return leaders;
}

AggregateRow aggregate(const MetricColumn& col, std::uint64_t frames) {
  AggregateRow row;
  const auto m = mean_metric(col);
  row.mean = m.mean;
  row.coverage = m.coverage;
  row.median = median_metric(col);
  if (col.kind == MetricKind::hwrns) row.hwrb_count = hwrb_count(col);
  row.efficiency_mean = learning_efficiency(row.mean, frames);
  row.efficiency_median = learning_efficiency(row.median, frames);
  return row;
}

}  // namespace hwrbench
