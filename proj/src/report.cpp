#include "hwrbench/report.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "hwrbench/csv.hpp"
#include "hwrbench/error.hpp"

namespace hwrbench {

namespace {

using nlohmann::ordered_json;

constexpr std::array<MetricKind, 4> kReportMetrics = {MetricKind::hns, MetricKind::chns,
                                                      MetricKind::hwrns, MetricKind::saber};

bool has_table_layout(MetricKind kind) {
  return std::ranges::find(kReportMetrics, kind) != kReportMetrics.end();
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const MetricValue& CellMetrics::get(MetricKind kind) const {
  switch (kind) {
    case MetricKind::hns: return hns;
    case MetricKind::chns: return chns;
    case MetricKind::hwrns: return hwrns;
    case MetricKind::saber: return saber;
    default: break;
  }
  throw std::invalid_argument(fmt::format("no per-game {} value", to_string(kind)));
}

const AggregateRow& AlgorithmSummary::get(MetricKind kind) const {
  switch (kind) {
    case MetricKind::hns: return hns;
    case MetricKind::chns: return chns;
    case MetricKind::hwrns: return hwrns;
    case MetricKind::saber: return saber;
    default: break;
  }
  throw std::invalid_argument(fmt::format("no aggregate for {}", to_string(kind)));
}

const AlgorithmSummary& EvaluationReport::summary(std::string_view algorithm) const {
  const auto it = aggregates.find(std::string(algorithm));
  if (it == aggregates.end()) {
    throw DataError(fmt::format("algorithm '{}' is not in the report", algorithm));
  }
  return it->second;
}

MetricColumn EvaluationReport::column(std::string_view algorithm, MetricKind kind) const {
  summary(algorithm);
  MetricColumn col{std::string(algorithm), kind, {}};
  for (std::size_t i = 0; i < kNumGames; ++i) {
    const auto game = GameId::at(i);
    const auto it = per_game.find({col.algorithm, game});
    col.entries[game] = it == per_game.end() ? std::nullopt
                                             : std::optional<MetricValue>(it->second.get(kind));
  }
  return col;
}

EvaluationReport evaluate(std::span<const Dataset> datasets, const BaselineRegistry& baselines,
                          CapMode cap_mode) {
  if (datasets.empty()) throw DataError("evaluate: no datasets given");
  EvaluationReport report;
  report.cap_mode = cap_mode;
  report.baseline_source = baselines.source();
  report.baselines.assign(baselines.records().begin(), baselines.records().end());

  std::map<std::string, std::string> owner;  // algorithm -> dataset label
  for (const auto& ds : datasets) {
    if (ds.records.empty()) throw DataError(fmt::format("dataset '{}' has no records", ds.label));
    for (const auto& alg : ds.algorithms()) {
      const auto [it, fresh] = owner.emplace(alg, ds.label);
      if (!fresh) {
        throw DataError(fmt::format("algorithm '{}' appears in datasets '{}' and '{}'", alg,
                                    it->second, ds.label));
      }
      report.algorithms.push_back(alg);
    }
    report.coverage.insert(report.coverage.end(), ds.omitted.begin(), ds.omitted.end());

    for (const auto& rec : ds.records) {
      const auto& base = baselines.lookup(rec.game);
      CellMetrics cell;
      cell.raw = rec.score;
      cell.hns = hns(rec.score, base);
      cell.chns = chns(cell.hns);
      cell.hwrns = hwrns(rec.score, base);
      cell.saber = saber(cell.hwrns, cap_mode);
      cell.hwrb = hwrb_indicator(cell.hwrns);
      report.per_game.emplace(CellKey{rec.algorithm, rec.game}, cell);

      auto [sit, first] = report.aggregates.try_emplace(rec.algorithm);
      auto& s = sit->second;
      if (first) {
        s.algorithm = rec.algorithm;
        s.dataset = ds.label;
        s.frames = rec.frames;
        s.scale_label = rec.scale_label;
      } else if (s.frames != rec.frames || s.scale_label != rec.scale_label) {
        throw DataError(fmt::format("algorithm '{}' has inconsistent training scale ({} {} vs {} {})",
                                    rec.algorithm, s.frames, s.scale_label, rec.frames,
                                    rec.scale_label));
      }
    }
  }

  for (const auto& alg : report.algorithms) {
    if (!report.aggregates.contains(alg)) {
      throw DataError(fmt::format("algorithm '{}' has no numeric scores", alg));
    }
    auto& s = report.aggregates[alg];
    s.hns = aggregate(report.column(alg, MetricKind::hns), s.frames);
    s.chns = aggregate(report.column(alg, MetricKind::chns), s.frames);
    s.hwrns = aggregate(report.column(alg, MetricKind::hwrns), s.frames);
    s.saber = aggregate(report.column(alg, MetricKind::saber), s.frames);
    s.saber.hwrb_count = s.hwrns.hwrb_count;
  }

  std::vector<MetricColumn> columns;
  for (const auto& alg : report.algorithms) columns.push_back(report.column(alg, MetricKind::hns));
  for (std::size_t i = 0; i < kNumGames; ++i) {
    const auto game = GameId::at(i);
    const bool any = std::ranges::any_of(columns, [&](const MetricColumn& c) {
      const auto it = c.entries.find(game);
      return it != c.entries.end() && it->second.has_value();
    });
    if (any) report.leaders[game] = per_game_leader(columns, game);
  }
  return report;
}

std::string format_percent(double ratio) {
  double p = std::floor(ratio * 100.0 * 100.0 + 0.5) / 100.0;
  if (p == 0.0) p = 0.0;
  return fmt::format("{:.2f}", p);
}

std::string format_efficiency(double value) { return fmt::format("{:.2E}", value); }

namespace {

std::string join_text_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::string line;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c) line += " | ";
    if (c == 0) {
      line += fmt::format("{:<{}}", cells[c], widths[c]);
    } else {
      line += fmt::format("{:>{}}", cells[c], widths[c]);
    }
  }
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line;
}

}  // namespace

std::string render_table(const EvaluationReport& report, const TableLayout& layout,
                         TableFormat format) {
  if (layout.algorithms.empty()) throw DataError("render_table: empty algorithm selection");
  if (!has_table_layout(layout.metric)) {
    throw DataError(fmt::format("render_table: no table layout for metric '{}'",
                                to_string(layout.metric)));
  }
  std::vector<MetricColumn> columns;
  for (const auto& alg : layout.algorithms) columns.push_back(report.column(alg, MetricKind::hns));

  const bool world_record = layout.metric == MetricKind::hwrns || layout.metric == MetricKind::saber;
  const auto metric_name = upper(to_string(layout.metric));
  const auto metric_label = fmt::format("{}(%)", metric_name);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"game", "RND", world_record ? "HWR" : "HUMAN"};
  for (const auto& alg : layout.algorithms) {
    header.push_back(alg);
    header.push_back(format == TableFormat::csv ? fmt::format("{} {}", alg, metric_label)
                                                : metric_label);
  }
  rows.push_back(std::move(header));

  for (std::size_t i = 0; i < kNumGames; ++i) {
    const auto game = GameId::at(i);
    const bool any = std::ranges::any_of(
        columns, [&](const MetricColumn& c) { return c.entries.at(game).has_value(); });
    std::vector<std::string> leaders;
    if (any) leaders = per_game_leader(columns, game);

    std::vector<std::string> r = {std::string(game.name())};
    if (report.baselines.size() == kNumGames) {
      const auto& b = report.baselines[i];
      r.push_back(format_number(b.random));
      r.push_back(format_number(world_record ? b.human_world_record : b.human_average));
    } else {
      r.insert(r.end(), 2, "");
    }
    for (const auto& alg : layout.algorithms) {
      const auto it = report.per_game.find({alg, game});
      if (it == report.per_game.end()) {
        r.insert(r.end(), 2, "N/A");
        continue;
      }
      const char* mark = std::ranges::find(leaders, alg) != leaders.end() ? "*" : "";
      r.push_back(fmt::format("{}{}", format_number(it->second.raw), mark));
      r.push_back(fmt::format("{}{}", format_percent(it->second.get(layout.metric).value), mark));
    }
    rows.push_back(std::move(r));
  }

  auto footer = [&](std::string label, auto value_of) {
    std::vector<std::string> r = {std::move(label), "", ""};
    for (const auto& alg : layout.algorithms) {
      r.push_back("");
      r.push_back(value_of(report.summary(alg).get(layout.metric)));
    }
    rows.push_back(std::move(r));
  };
  footer(fmt::format("MEAN {}", metric_label),
         [](const AggregateRow& a) { return format_percent(a.mean); });
  footer("Learning Efficiency",
         [](const AggregateRow& a) { return format_efficiency(a.efficiency_mean.value); });
  footer(fmt::format("MEDIAN {}", metric_label),
         [](const AggregateRow& a) { return format_percent(a.median); });
  footer("Learning Efficiency",
         [](const AggregateRow& a) { return format_efficiency(a.efficiency_median.value); });
  if (world_record) {
    footer("HWRB", [&](const AggregateRow& a) {
      return a.hwrb_count ? fmt::format("{}", *a.hwrb_count) : std::string("N/A");
    });
  }
  footer("Coverage", [](const AggregateRow& a) { return fmt::format("{}/{}", a.coverage, kNumGames); });

  std::string out;
  if (format == TableFormat::csv) {
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) out += ',';
        out += csv::escape(r[c]);
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
  }
  for (const auto& r : rows) {
    out += join_text_row(r, widths);
    out += '\n';
  }
  return out;
}

namespace {

ordered_json aggregate_json(const AggregateRow& a) {
  ordered_json j;
  j["mean"] = a.mean;
  j["median"] = a.median;
  j["coverage"] = a.coverage;
  if (a.hwrb_count) j["hwrb"] = *a.hwrb_count;
  j["efficiency_mean"] = a.efficiency_mean.value;
  j["efficiency_median"] = a.efficiency_median.value;
  return j;
}

MetricValue metric_from(double v, MetricKind kind, std::optional<CapMode> mode = std::nullopt) {
  return MetricValue{v, kind, mode};
}

}  // namespace

ordered_json report_to_json(const EvaluationReport& report) {
  ordered_json doc;
  doc["cap_mode"] = std::string(to_string(report.cap_mode));
  ordered_json prov;
  prov["source"] = report.baseline_source;
  prov["annotated"] = ordered_json::array();
  for (const auto& b : report.baselines) {
    if (b.source_tag != "appendix") {
      prov["annotated"].push_back({{"game", b.game.name()}, {"source_tag", b.source_tag}});
    }
  }
  doc["baselines"] = std::move(prov);

  auto& per_game = doc["per_game"] = ordered_json::array();
  for (const auto& alg : report.algorithms) {
    for (std::size_t i = 0; i < kNumGames; ++i) {
      const auto it = report.per_game.find({alg, GameId::at(i)});
      if (it == report.per_game.end()) continue;
      const auto& c = it->second;
      per_game.push_back({{"algorithm", alg},
                          {"game", it->first.second.name()},
                          {"raw", c.raw},
                          {"hns", c.hns.value},
                          {"chns", c.chns.value},
                          {"hwrns", c.hwrns.value},
                          {"saber", c.saber.value},
                          {"hwrb", c.hwrb}});
    }
  }

  auto& aggs = doc["aggregates"] = ordered_json::object();
  for (const auto& alg : report.algorithms) {
    const auto& s = report.summary(alg);
    ordered_json j;
    j["dataset"] = s.dataset;
    j["frames"] = s.frames;
    j["scale_label"] = s.scale_label;
    j["game_time_days"] = game_time_days(s.frames);
    for (const auto kind : kReportMetrics) j[std::string(to_string(kind))] = aggregate_json(s.get(kind));
    aggs[alg] = std::move(j);
  }

  auto& leaders = doc["leaders"] = ordered_json::object();
  for (const auto& [game, names] : report.leaders) leaders[std::string(game.name())] = names;

  auto& coverage = doc["coverage"] = ordered_json::array();
  for (const auto& n : report.coverage) {
    coverage.push_back({{"algorithm", n.algorithm}, {"game", n.game.name()}, {"reason", n.reason}});
  }
  return doc;
}

std::string report_per_game_csv(const EvaluationReport& report) {
  std::string out = "algorithm,game,raw,hns,chns,hwrns,saber,hwrb\n";
  for (const auto& alg : report.algorithms) {
    for (std::size_t i = 0; i < kNumGames; ++i) {
      const auto it = report.per_game.find({alg, GameId::at(i)});
      if (it == report.per_game.end()) continue;
      const auto& c = it->second;
      out += fmt::format("{},{},{},{},{},{},{},{}\n", csv::escape(alg), it->first.second.name(),
                         format_number(c.raw), format_number(c.hns.value),
                         format_number(c.chns.value), format_number(c.hwrns.value),
                         format_number(c.saber.value), c.hwrb ? "true" : "false");
    }
  }
  return out;
}

namespace {

CellMetrics make_cell(double raw, double h, double ch, double hw, double sb, bool hwrb,
                      std::optional<CapMode> mode) {
  return CellMetrics{raw,
                     metric_from(h, MetricKind::hns),
                     metric_from(ch, MetricKind::chns),
                     metric_from(hw, MetricKind::hwrns),
                     metric_from(sb, MetricKind::saber, mode),
                     hwrb};
}

}  // namespace

std::map<CellKey, CellMetrics> parse_per_game_json(const ordered_json& doc) {
  std::map<CellKey, CellMetrics> out;
  try {
    const auto mode = parse_cap_mode(doc.at("cap_mode").get<std::string>());
    for (const auto& e : doc.at("per_game")) {
      const auto game = GameId::parse(e.at("game").get<std::string>());
      out.emplace(CellKey{e.at("algorithm").get<std::string>(), game},
                  make_cell(e.at("raw").get<double>(), e.at("hns").get<double>(),
                            e.at("chns").get<double>(), e.at("hwrns").get<double>(),
                            e.at("saber").get<double>(), e.at("hwrb").get<bool>(), mode));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DataError(fmt::format("malformed report: {}", ex.what()));
  }
  return out;
}

std::map<CellKey, CellMetrics> parse_per_game_csv(std::istream& in) {
  const auto table = csv::read(in, "per-game report");
  const std::array<std::string_view, 8> names = {"algorithm", "game",  "raw",   "hns",
                                                 "chns",      "hwrns", "saber", "hwrb"};
  std::array<std::size_t, 8> col{};
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto c = table.column(names[i]);
    if (!c) throw DataError(fmt::format("per-game report: missing column '{}'", names[i]));
    col[i] = *c;
  }
  std::map<CellKey, CellMetrics> out;
  for (const auto& row : table.rows) {
    std::array<double, 5> v{};
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto d = csv::parse_double(row.fields[col[i + 2]]);
      if (!d) throw DataError(fmt::format("per-game report:{}: bad number", row.line));
      v[i] = *d;
    }
    out.emplace(CellKey{row.fields[col[0]], GameId::parse(row.fields[col[1]])},
                make_cell(v[0], v[1], v[2], v[3], v[4], row.fields[col[7]] == "true",
                          std::nullopt));
  }
  return out;
}

std::string_view to_string(Figure figure) {
  switch (figure) {
    case Figure::metric_vs_scale: return "metric-vs-scale";
    case Figure::hwrb_vs_gametime: return "hwrb-vs-gametime";
    case Figure::efficiency: return "efficiency";
  }
  return "?";
}

std::optional<Figure> parse_figure(std::string_view text) {
  std::string t(text);
  std::ranges::replace(t, '_', '-');
  for (const auto f : {Figure::metric_vs_scale, Figure::hwrb_vs_gametime, Figure::efficiency}) {
    if (t == to_string(f)) return f;
  }
  return std::nullopt;
}

std::vector<PlotSeries> emit_plot_series(const EvaluationReport& report, Figure figure) {
  std::vector<PlotSeries> out;
  if (report.algorithms.empty()) return out;

  auto build = [&](std::string name, std::string x_label, std::string y_label, auto point_of) {
    PlotSeries s{std::move(name), std::move(x_label), std::move(y_label), {}};
    for (const auto& alg : report.algorithms) {
      const auto& sum = report.summary(alg);
      auto [x, y] = point_of(sum);
      s.points.push_back(PlotPoint{alg, x, y, !(y > 0.0)});
    }
    std::ranges::sort(s.points, [](const PlotPoint& a, const PlotPoint& b) {
      return a.x != b.x ? a.x < b.x : a.label < b.label;
    });
    out.push_back(std::move(s));
  };

  constexpr std::array<MetricKind, 3> kinds = {MetricKind::hns, MetricKind::hwrns,
                                               MetricKind::saber};
  switch (figure) {
    case Figure::metric_vs_scale:
      for (const auto k : kinds) {
        const auto n = std::string(to_string(k));
        build("mean_" + n, "frames", n + " ratio", [k](const AlgorithmSummary& s) {
          return std::pair{static_cast<double>(s.frames), s.get(k).mean};
        });
        build("median_" + n, "frames", n + " ratio", [k](const AlgorithmSummary& s) {
          return std::pair{static_cast<double>(s.frames), s.get(k).median};
        });
      }
      break;
    case Figure::hwrb_vs_gametime:
      build("hwrb", "game_time_days", "hwrb_count", [](const AlgorithmSummary& s) {
        return std::pair{game_time_days(s.frames), static_cast<double>(s.hwrns.hwrb_count.value_or(0))};
      });
      break;
    case Figure::efficiency:
      for (const auto k : kinds) {
        const auto n = std::string(to_string(k));
        build("efficiency_mean_" + n, "frames", "ratio per frame", [k](const AlgorithmSummary& s) {
          return std::pair{static_cast<double>(s.frames), s.get(k).efficiency_mean.value};
        });
        build("efficiency_median_" + n, "frames", "ratio per frame", [k](const AlgorithmSummary& s) {
          return std::pair{static_cast<double>(s.frames), s.get(k).efficiency_median.value};
        });
      }
      break;
  }
  return out;
}

std::string plot_series_csv(std::span<const PlotSeries> series) {
  std::string out = "series,label,x,y,omit_on_log_scale\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out += fmt::format("{},{},{},{},{}\n", csv::escape(s.name), csv::escape(p.label),
                         format_number(p.x), format_number(p.y), p.omit_on_log_scale);
    }
  }
  return out;
}

ordered_json plot_series_json(std::span<const PlotSeries> series) {
  auto arr = ordered_json::array();
  for (const auto& s : series) {
    ordered_json j;
    j["name"] = s.name;
    j["x_label"] = s.x_label;
    j["y_label"] = s.y_label;
    j["points"] = ordered_json::array();
    for (const auto& p : s.points) {
      j["points"].push_back(
          {{"label", p.label}, {"x", p.x}, {"y", p.y}, {"omit_on_log_scale", p.omit_on_log_scale}});
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace hwrbench
