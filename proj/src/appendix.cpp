#include "hwrbench/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "hwrbench/csv.hpp"
#include "hwrbench/error.hpp"

namespace hwrbench {

namespace {

using nlohmann::ordered_json;

std::size_t require_column(const csv::Table& t, std::string_view name, const std::string& src) {
  const auto c = t.column(name);
  if (!c) throw DataError(fmt::format("{}: missing column '{}'", src, name));
  return *c;
}

PrintedTable load_printed_table(const std::filesystem::path& path) {
  const auto stem = path.stem().string();
  const auto sep = stem.find('_');
  const auto metric = sep == std::string::npos ? std::nullopt : parse_metric_kind(stem.substr(0, sep));
  if (!metric) throw DataError(fmt::format("{}: cannot infer metric from file name", path.string()));

  const auto src = path.string();
  const auto t = csv::read_file(path);
  const auto a = require_column(t, "algorithm", src);
  const auto g = require_column(t, "game", src);
  const auto s = require_column(t, "score", src);
  const auto p = require_column(t, "printed_percent", src);

  PrintedTable out{stem, *metric, stem.substr(sep + 1), {}};
  for (const auto& row : t.rows) {
    const auto game = GameId::try_parse(row.fields[g]);
    if (!game) {
      throw DataError(fmt::format("{}:{}: unknown game identifier '{}'", src, row.line, row.fields[g]));
    }
    out.cells.push_back(PrintedCell{row.fields[a], *game, row.fields[s], row.fields[p], row.line});
  }
  return out;
}

double metric_ratio(double raw, const BaselineRecord& b, MetricKind kind) {
  switch (kind) {
    case MetricKind::hns: return hns(raw, b).value;
    case MetricKind::chns: return chns(hns(raw, b)).value;
    case MetricKind::hwrns: return hwrns(raw, b).value;
    case MetricKind::saber: return saber(hwrns(raw, b), CapMode::table_compat).value;
    default: break;
  }
  throw DataError(fmt::format("no printed table layout for metric '{}'", to_string(kind)));
}

CellCheck check_cell(const PrintedTable& table, const PrintedCell& cell,
                     const BaselineRegistry& baselines, double tol) {
  CellCheck c{table.name, table.metric, cell.algorithm, cell.game,
              cell.score_text, cell.printed_text, std::nullopt, false, ""};
  const auto raw = csv::parse_double(cell.score_text);
  const auto printed = csv::parse_double(cell.printed_text);
  if (raw) c.recomputed_percent = metric_ratio(*raw, baselines.lookup(cell.game), table.metric) * 100.0;

  if (!raw) {
    c.reason = cell.score_text == "N/A" ? "raw score is N/A but a percent is printed"
                                         : "malformed raw score";
  } else if (!printed) {
    c.reason = cell.printed_text == "N/A" ? "percent printed as N/A" : "malformed printed value";
  } else if (std::abs(*c.recomputed_percent - *printed) > tol + 1e-9) {
    c.reason = "value mismatch";
  } else {
    c.matched = true;
  }
  return c;
}

std::string printed_form(const std::string& row, double value) {
  if (row == "hwrb") return fmt::format("{}", static_cast<long long>(value));
  if (row.starts_with("efficiency")) return format_efficiency(value);
  return format_percent(value / 100.0);
}

}  // namespace

AppendixTables load_appendix(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw DataError(fmt::format("appendix directory '{}' not found", dir.string()));
  }
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".csv" &&
        e.path().stem() != "aggregates") {
      files.push_back(e.path());
    }
  }
  std::ranges::sort(files);
  AppendixTables out;
  for (const auto& f : files) out.tables.push_back(load_printed_table(f));

  const auto agg_path = dir / "aggregates.csv";
  if (std::filesystem::exists(agg_path)) {
    const auto src = agg_path.string();
    const auto t = csv::read_file(agg_path);
    const auto tc = require_column(t, "table", src);
    const auto ac = require_column(t, "algorithm", src);
    const auto rc = require_column(t, "row", src);
    const auto pc = require_column(t, "printed", src);
    for (const auto& row : t.rows) {
      out.aggregates.push_back(
          PrintedAggregate{row.fields[tc], row.fields[ac], row.fields[rc], row.fields[pc]});
    }
  }
  return out;
}

std::size_t ReproductionResult::cells_matched() const {
  return static_cast<std::size_t>(std::ranges::count_if(cells, &CellCheck::matched));
}

double ReproductionResult::cell_match_rate() const {
  return cells.empty() ? 0.0 : static_cast<double>(cells_matched()) / static_cast<double>(cells.size());
}

bool ReproductionResult::has_conflict(std::string_view algorithm, std::string_view quantity) const {
  return std::ranges::any_of(conflicts, [&](const PrintedConflict& c) {
    return c.algorithm == algorithm && c.quantity == quantity;
  });
}

ordered_json ReproductionResult::inconsistency_log() const {
  ordered_json doc;
  doc["summary"] = {{"cells_checked", cells.size()},
                    {"cells_matched", cells_matched()},
                    {"cell_match_rate", cell_match_rate()},
                    {"aggregates_checked", aggregates.size()},
                    {"aggregates_matched",
                     std::ranges::count_if(aggregates, &AggregateCheck::matched)},
                    {"conflicts", conflicts.size()}};
  auto& cell_log = doc["cells"] = ordered_json::array();
  for (const auto& c : cells) {
    if (c.matched) continue;
    ordered_json j = {{"table", c.table},       {"algorithm", c.algorithm},
                      {"game", c.game.name()},  {"score", c.score_text},
                      {"printed", c.printed_text}};
    j["recomputed_percent"] = c.recomputed_percent ? ordered_json(*c.recomputed_percent) : ordered_json();
    j["reason"] = c.reason;
    cell_log.push_back(std::move(j));
  }
  auto& agg_log = doc["aggregates"] = ordered_json::array();
  for (const auto& a : aggregates) {
    if (a.matched) continue;
    agg_log.push_back({{"table", a.table},
                       {"algorithm", a.algorithm},
                       {"row", a.row},
                       {"printed", a.printed_text},
                       {"recomputed", a.recomputed_text},
                       {"column_clean", a.column_clean}});
  }
  auto& conflict_log = doc["conflicts"] = ordered_json::array();
  for (const auto& c : conflicts) {
    ordered_json printed = ordered_json::array();
    for (const auto& [table, value] : c.printed) printed.push_back({{"table", table}, {"value", value}});
    conflict_log.push_back(
        {{"algorithm", c.algorithm}, {"quantity", c.quantity}, {"printed", std::move(printed)}});
  }
  return doc;
}

ReproductionResult reproduce(const AppendixTables& tables, const BaselineRegistry& baselines,
                             std::span<const Dataset> datasets, const ReproductionTolerances& tol) {
  ReproductionResult out;
  out.report = evaluate(datasets, baselines, CapMode::table_compat);

  std::map<std::string, MetricKind> metric_of;
  std::map<std::pair<std::string, std::string>, bool> dirty;  // (table, algorithm)
  for (const auto& table : tables.tables) {
    metric_of[table.name] = table.metric;
    for (const auto& cell : table.cells) {
      if (cell.score_text == "N/A" && cell.printed_text == "N/A") continue;
      auto c = check_cell(table, cell, baselines, tol.cell_percent);
      if (!c.matched) dirty[{table.name, c.algorithm}] = true;
      out.cells.push_back(std::move(c));
    }
  }

  // (algorithm, quantity) -> distinct printed values, first-seen order
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, std::string>>> seen;
  for (const auto& p : tables.aggregates) {
    const auto mit = metric_of.find(p.table);
    if (mit == metric_of.end()) {
      throw DataError(fmt::format("aggregates.csv: unknown table '{}'", p.table));
    }
    const auto metric = mit->second;
    const auto& s = out.report.summary(p.algorithm);
    const auto& row = s.get(metric);

    AggregateCheck a{p.table, metric, p.algorithm, p.row, p.printed_text, "", 0.0, false,
                     !dirty.contains({p.table, p.algorithm})};
    const auto printed = csv::parse_double(p.printed_text);
    if (p.row == "mean" || p.row == "median") {
      a.recomputed = (p.row == "mean" ? row.mean : row.median) * 100.0;
      a.matched = printed && std::abs(a.recomputed - *printed) <= tol.aggregate_percent + 1e-9;
    } else if (p.row == "efficiency_mean" || p.row == "efficiency_median") {
      a.recomputed = p.row == "efficiency_mean" ? row.efficiency_mean.value : row.efficiency_median.value;
      a.matched = printed && format_efficiency(a.recomputed) == format_efficiency(*printed);
    } else if (p.row == "hwrb") {
      a.recomputed = static_cast<double>(s.hwrns.hwrb_count.value_or(0));
      a.matched = printed && *printed == a.recomputed;
    } else {
      throw DataError(fmt::format("aggregates.csv: unknown row '{}'", p.row));
    }
    a.recomputed_text = printed_form(p.row, a.recomputed);
    out.aggregates.push_back(std::move(a));

    // HWRB is one quantity whichever table prints it.
    const auto quantity = p.row == "hwrb" ? std::string("hwrb")
                                          : fmt::format("{} {}", to_string(metric), p.row);
    auto& values = seen[{p.algorithm, quantity}];
    const auto normalized = printed ? printed_form(p.row, *printed) : p.printed_text;
    if (std::ranges::none_of(values, [&](const auto& v) {
          const auto pv = csv::parse_double(v.second);
          return (pv ? printed_form(p.row, *pv) : v.second) == normalized;
        })) {
      values.emplace_back(p.table, p.printed_text);
    }
  }
  for (auto& [key, values] : seen) {
    if (values.size() > 1) out.conflicts.push_back(PrintedConflict{key.first, key.second, values});
  }
  return out;
}

}  // namespace hwrbench
