#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwrbench/aggregation.hpp"
#include "hwrbench/baseline_registry.hpp"
#include "hwrbench/dataset.hpp"
#include "hwrbench/metrics.hpp"
#include "json.hpp"

namespace hwrbench {

struct CellMetrics {
  double raw = 0.0;
  MetricValue hns;
  MetricValue chns;
  MetricValue hwrns;
  MetricValue saber;
  bool hwrb = false;

  const MetricValue& get(MetricKind kind) const;  // hns, chns, hwrns or saber
};

struct AlgorithmSummary {
  std::string algorithm;
  std::string dataset;
  std::uint64_t frames = 0;
  std::string scale_label;
  AggregateRow hns;
  AggregateRow chns;
  AggregateRow hwrns;
  AggregateRow saber;

  const AggregateRow& get(MetricKind kind) const;
};

using CellKey = std::pair<std::string, GameId>;

struct EvaluationReport {
  CapMode cap_mode = CapMode::spec_floor;
  std::string baseline_source;
  std::vector<BaselineRecord> baselines;  // canonical game order
  std::vector<std::string> algorithms;  // dataset order, then first appearance
  std::map<CellKey, CellMetrics> per_game;
  std::map<std::string, AlgorithmSummary> aggregates;
  std::map<GameId, std::vector<std::string>> leaders;  // over every algorithm in the report
  std::vector<CoverageNote> coverage;

  const AlgorithmSummary& summary(std::string_view algorithm) const;  // throws DataError
  MetricColumn column(std::string_view algorithm, MetricKind kind) const;
};

// Throws DataError for an empty dataset list, datasets without any records,
// an algorithm present in more than one dataset, or an algorithm whose rows
// disagree on frames or scale label.
EvaluationReport evaluate(std::span<const Dataset> datasets, const BaselineRegistry& baselines,
                          CapMode cap_mode);

enum class TableFormat { text, csv };

struct TableLayout {
  MetricKind metric = MetricKind::hns;  // hns, chns, hwrns or saber
  std::vector<std::string> algorithms;
};

// Human-readable score table: one row per game with the random and human
// reference columns, then a raw score and a metric percent per algorithm.
// Leaders among the selected algorithms carry a trailing '*'. Throws
// DataError for an empty selection, an unknown algorithm or a metric that has
// no table layout.
std::string render_table(const EvaluationReport& report, const TableLayout& layout,
                         TableFormat format);

// Round half-up to 2 decimals on the percent scale, e.g. 1.342649 -> "134.26".
std::string format_percent(double ratio);
// Three significant figures in scientific notation, e.g. "4.37E-08".
std::string format_efficiency(double value);

// Full precision machine report.
nlohmann::ordered_json report_to_json(const EvaluationReport& report);
// Long-format per-game rows: algorithm,game,raw,hns,chns,hwrns,saber,hwrb.
std::string report_per_game_csv(const EvaluationReport& report);

// Reads back the per_game section from either machine format.
std::map<CellKey, CellMetrics> parse_per_game_json(const nlohmann::ordered_json& doc);
std::map<CellKey, CellMetrics> parse_per_game_csv(std::istream& in);

enum class Figure { metric_vs_scale, hwrb_vs_gametime, efficiency };
std::string_view to_string(Figure figure);
std::optional<Figure> parse_figure(std::string_view text);

struct PlotPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
  bool omit_on_log_scale = false;  // y <= 0
};

struct PlotSeries {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<PlotPoint> points;  // sorted by x, then label
};

// One point per algorithm in every series. An empty report yields no series.
std::vector<PlotSeries> emit_plot_series(const EvaluationReport& report, Figure figure);
std::string plot_series_csv(std::span<const PlotSeries> series);
nlohmann::ordered_json plot_series_json(std::span<const PlotSeries> series);

}  // namespace hwrbench
