#include "hwrbench/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "hwrbench/appendix.hpp"
#include "hwrbench/baseline_registry.hpp"
#include "hwrbench/csv.hpp"
#include "hwrbench/dataset.hpp"
#include "hwrbench/error.hpp"
#include "hwrbench/protocol.hpp"
#include "hwrbench/report.hpp"

#ifndef HWRBENCH_DATA_DIR
#define HWRBENCH_DATA_DIR "data"
#endif

namespace hwrbench::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

enum class OutputFormat { table, csv, json };

struct Options {
  std::string baselines;
  std::vector<std::string> datasets;
  std::string cap_mode = "spec-floor";
  bool cap_mode_given = false;
  std::string format = "table";
  std::string out_path;
  std::string appendix;
  std::string mismatch_log;

  std::string game;
  std::string score;
  std::string frames;
  std::vector<std::string> algorithms;
  std::string metric = "hns";
  std::string figure;

  std::string log;
  std::string ledger;
  std::string budget;
  std::size_t k = 1;
  bool k_given = false;
  std::optional<int> action_set;
};

// Thrown for argument values that parse syntactically but are unusable.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path data_dir() { return fs::path(HWRBENCH_DATA_DIR); }

OutputFormat output_format(const Options& o) {
  if (o.format == "csv") return OutputFormat::csv;
  if (o.format == "json") return OutputFormat::json;
  return OutputFormat::table;
}

CapMode cap_mode(const Options& o) {
  const auto m = parse_cap_mode(o.cap_mode);
  if (!m) throw UsageError(fmt::format("unknown cap mode '{}'", o.cap_mode));
  return *m;
}

std::uint64_t count_arg(const std::string& text, std::string_view flag) {
  const auto v = csv::parse_count(text);
  if (!v) throw UsageError(fmt::format("{} expects a non-negative integer, got '{}'", flag, text));
  return *v;
}

BaselineRegistry load_baselines(const Options& o) {
  return BaselineRegistry::load(o.baselines.empty() ? data_dir() / "baselines.csv"
                                                    : fs::path(o.baselines));
}

std::vector<Dataset> load_datasets(const Options& o) {
  std::vector<fs::path> paths(o.datasets.begin(), o.datasets.end());
  if (paths.empty()) {
    const auto dir = data_dir() / "datasets";
    if (!fs::is_directory(dir)) throw DataError(fmt::format("bundled dataset directory '{}' not found", dir.string()));
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.is_regular_file() && e.path().extension() == ".csv") paths.push_back(e.path());
    }
    std::ranges::sort(paths);
  }
  std::vector<Dataset> out;
  for (const auto& p : paths) out.push_back(load_dataset(p));
  return out;
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += " | ";
      line += c == 0 ? fmt::format("{:<{}}", r[c], widths[c]) : fmt::format("{:>{}}", r[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out += ',';
      out += csv::escape(r[c]);
    }
    out += '\n';
  }
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + '\n'; }

std::string cmd_validate(const Options& o) {
  const auto baselines = load_baselines(o);
  const auto datasets = load_datasets(o);
  // Cross-dataset consistency (duplicate algorithms, mixed scales).
  evaluate(datasets, baselines, CapMode::spec_floor);

  if (output_format(o) == OutputFormat::json) {
    ordered_json j;
    j["valid"] = true;
    j["baselines"] = {{"source", baselines.source()},
                      {"games", kNumGames},
                      {"warnings", baselines.warnings()}};
    j["datasets"] = ordered_json::array();
    for (const auto& d : datasets) {
      ordered_json notes = ordered_json::array();
      for (const auto& n : d.omitted) notes.push_back(n.reason);
      j["datasets"].push_back({{"label", d.label},
                               {"records", d.records.size()},
                               {"omitted", notes},
                               {"algorithms", d.algorithms()}});
    }
    return dump(j);
  }
  std::vector<std::vector<std::string>> rows = {{"input", "records", "omitted", "algorithms"}};
  rows.push_back({baselines.source(), fmt::format("{}", kNumGames),
                  fmt::format("{}", baselines.warnings().size()), "baselines"});
  for (const auto& d : datasets) {
    rows.push_back({d.label, fmt::format("{}", d.records.size()),
                    fmt::format("{}", d.omitted.size()), fmt::format("{}", fmt::join(d.algorithms(), " "))});
  }
  if (output_format(o) == OutputFormat::csv) return csv_table(rows);
  auto text = text_table(rows);
  for (const auto& w : baselines.warnings()) text += "warning: " + w + '\n';
  for (const auto& d : datasets) {
    for (const auto& n : d.omitted) text += "omitted: " + n.reason + '\n';
  }
  text += "ok\n";
  return text;
}

std::string cmd_score(const Options& o) {
  if (o.game.empty() || o.score.empty()) throw UsageError("score requires --game and --score");
  const auto baselines = load_baselines(o);
  const auto game = GameId::parse(o.game);
  const auto raw = csv::parse_double(o.score);
  if (!raw) throw UsageError(fmt::format("--score expects a number, got '{}'", o.score));
  std::optional<std::uint64_t> frames;
  if (!o.frames.empty()) {
    frames = count_arg(o.frames, "--frames");
    if (*frames == 0) throw UsageError("--frames must be positive");
  }
  const auto mode = cap_mode(o);
  const auto& base = baselines.lookup(game);
  const auto h = hns(*raw, base);
  const auto w = hwrns(*raw, base);
  const std::vector<std::pair<std::string, MetricValue>> metrics = {
      {"hns", h}, {"chns", chns(h)}, {"hwrns", w}, {"saber", saber(w, mode)}};
  const bool hwrb = hwrb_indicator(w);

  if (output_format(o) == OutputFormat::json) {
    ordered_json j;
    j["game"] = game.name();
    j["raw"] = *raw;
    j["cap_mode"] = std::string(to_string(mode));
    for (const auto& [name, m] : metrics) j[name] = m.value;
    j["hwrb"] = hwrb;
    if (frames) {
      j["frames"] = *frames;
      j["game_time_days"] = game_time_days(*frames);
      for (const auto& [name, m] : metrics) {
        j["efficiency_" + name] = learning_efficiency(m.value, *frames).value;
      }
    }
    return dump(j);
  }
  std::vector<std::vector<std::string>> rows = {{"quantity", "value"}};
  rows.push_back({"game", std::string(game.name())});
  rows.push_back({"raw", format_number(*raw)});
  for (const auto& [name, m] : metrics) {
    std::string label = name;
    std::ranges::transform(label, label.begin(), [](unsigned char c) { return std::toupper(c); });
    rows.push_back({label, format_percent(m.value) + "%"});
  }
  rows.push_back({"HWRB", hwrb ? "true" : "false"});
  rows.push_back({"cap mode", std::string(to_string(mode))});
  if (frames) {
    rows.push_back({"frames", fmt::format("{}", *frames)});
    rows.push_back({"game time (days)", fmt::format("{:.2f}", game_time_days(*frames))});
    for (const auto& [name, m] : metrics) {
      rows.push_back({"efficiency " + name, format_efficiency(learning_efficiency(m.value, *frames).value)});
    }
  }
  if (output_format(o) == OutputFormat::csv) return csv_table(rows);
  rows.erase(rows.begin());
  return text_table(rows);
}

std::vector<std::string> selected_algorithms(const Options& o, const EvaluationReport& r) {
  if (o.algorithms.empty()) return r.algorithms;
  for (const auto& a : o.algorithms) r.summary(a);
  return o.algorithms;
}

std::string cmd_aggregate(const Options& o) {
  const auto baselines = load_baselines(o);
  const auto datasets = load_datasets(o);
  const auto report = evaluate(datasets, baselines, cap_mode(o));
  const auto algorithms = selected_algorithms(o, report);
  constexpr std::array<MetricKind, 4> kinds = {MetricKind::hns, MetricKind::chns, MetricKind::hwrns,
                                               MetricKind::saber};

  if (output_format(o) == OutputFormat::json) {
    auto full = report_to_json(report);
    ordered_json j;
    j["cap_mode"] = full["cap_mode"];
    for (const auto& a : algorithms) j["aggregates"][a] = full["aggregates"][a];
    return dump(j);
  }
  const bool csv = output_format(o) == OutputFormat::csv;
  std::vector<std::string> header = {"algorithm", "dataset", "frames", "coverage"};
  for (const auto k : kinds) {
    const auto n = std::string(to_string(k));
    for (const auto* stat : {"mean", "median"}) header.push_back(fmt::format("{} {}", n, stat));
    for (const auto* stat : {"efficiency_mean", "efficiency_median"}) {
      header.push_back(fmt::format("{} {}", n, stat));
    }
  }
  header.push_back("hwrb");
  std::vector<std::vector<std::string>> rows = {header};
  for (const auto& a : algorithms) {
    const auto& s = report.summary(a);
    std::vector<std::string> r = {a, s.dataset, fmt::format("{}", s.frames),
                                  fmt::format("{}", s.hns.coverage)};
    for (const auto k : kinds) {
      const auto& g = s.get(k);
      if (csv) {
        for (const double v : {g.mean, g.median, g.efficiency_mean.value, g.efficiency_median.value}) {
          r.push_back(format_number(v));
        }
      } else {
        r.push_back(format_percent(g.mean));
        r.push_back(format_percent(g.median));
        r.push_back(format_efficiency(g.efficiency_mean.value));
        r.push_back(format_efficiency(g.efficiency_median.value));
      }
    }
    r.push_back(fmt::format("{}", s.hwrns.hwrb_count.value_or(0)));
    rows.push_back(std::move(r));
  }
  return csv ? csv_table(rows) : text_table(rows);
}

std::string cmd_report(const Options& o) {
  const auto baselines = load_baselines(o);
  const auto datasets = load_datasets(o);
  const auto report = evaluate(datasets, baselines, cap_mode(o));
  const auto fmt_kind = output_format(o);

  if (!o.figure.empty()) {
    const auto figure = parse_figure(o.figure);
    if (!figure) throw UsageError(fmt::format("unknown figure '{}'", o.figure));
    const auto series = emit_plot_series(report, *figure);
    return fmt_kind == OutputFormat::json ? dump(plot_series_json(series)) : plot_series_csv(series);
  }
  if (fmt_kind == OutputFormat::json) return dump(report_to_json(report));

  const auto metric = parse_metric_kind(o.metric);
  if (!metric) throw UsageError(fmt::format("unknown metric '{}'", o.metric));
  TableLayout layout{*metric, selected_algorithms(o, report)};
  return render_table(report, layout, fmt_kind == OutputFormat::csv ? TableFormat::csv : TableFormat::text);
}

struct CheckOutcome {
  std::string text;
  bool conforming;
};

CheckOutcome cmd_protocol_check(const Options& o) {
  if (o.log.empty() == o.ledger.empty()) {
    throw UsageError("protocol-check requires exactly one of --log or --ledger");
  }
  protocol::RunLedger ledger;
  if (!o.log.empty()) {
    protocol::LogOptions lo;
    if (!o.budget.empty()) lo.budget = count_arg(o.budget, "--budget");
    lo.averaging_k = o.k;
    lo.action_set = o.action_set;
    std::ifstream in(o.log);
    if (!in) throw DataError(fmt::format("cannot open episode log '{}'", o.log));
    ledger = protocol::read_episode_log(in, o.log, lo);
  } else {
    std::ifstream in(o.ledger);
    if (!in) throw DataError(fmt::format("cannot open ledger '{}'", o.ledger));
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw DataError(fmt::format("{}: {}", o.ledger, e.what()));
    }
    ledger = protocol::ledger_from_json(j);
    if (!o.budget.empty()) ledger.budget = count_arg(o.budget, "--budget");
    if (o.k_given) ledger.averaging_k = o.k;
    if (o.action_set) ledger.action_set = *o.action_set;
  }
  if (o.k == 0) throw UsageError("--k must be at least 1");

  const auto verdict = protocol::check_budget(ledger);
  std::optional<double> final_score;
  if (ledger.episodes.size() >= ledger.averaging_k) {
    final_score = protocol::training_score(ledger.returns(), ledger.averaging_k).final_score;
  }

  if (output_format(o) == OutputFormat::json) {
    ordered_json j;
    j["conforming"] = verdict.conforming;
    j["violations"] = ordered_json::array();
    for (const auto& v : verdict.violations) j["violations"].push_back({{"code", v.code}, {"detail", v.detail}});
    j["annotations"] = verdict.annotations;
    j["episodes"] = ledger.episodes.size();
    j["total_env_frames"] = ledger.total_env_frames;
    j["budget"] = ledger.budget;
    j["action_set"] = ledger.action_set;
    j["averaging_k"] = ledger.averaging_k;
    j["final_score"] = final_score ? ordered_json(*final_score) : ordered_json();
    return {dump(j), verdict.conforming};
  }
  std::vector<std::vector<std::string>> rows = {{"field", "value"}};
  rows.push_back({"verdict", verdict.conforming ? "conforming" : "non-conforming"});
  for (const auto& v : verdict.violations) rows.push_back({"violation", v.code + ": " + v.detail});
  for (const auto& a : verdict.annotations) rows.push_back({"annotation", a});
  rows.push_back({"episodes", fmt::format("{}", ledger.episodes.size())});
  rows.push_back({"total_env_frames", fmt::format("{}", ledger.total_env_frames)});
  rows.push_back({"budget", fmt::format("{}", ledger.budget)});
  rows.push_back({"action_set", fmt::format("{}", ledger.action_set)});
  rows.push_back({"averaging_k", fmt::format("{}", ledger.averaging_k)});
  rows.push_back({"final_score", final_score ? format_number(*final_score) : "N/A"});
  if (output_format(o) == OutputFormat::csv) return {csv_table(rows), verdict.conforming};
  rows.erase(rows.begin());
  return {text_table(rows), verdict.conforming};
}

std::string cmd_compare(const Options& o) {
  if (o.algorithms.size() != 2) throw UsageError("compare requires exactly two --algorithm values");
  const auto& a = o.algorithms[0];
  const auto& b = o.algorithms[1];
  const auto baselines = load_baselines(o);
  const auto datasets = load_datasets(o);
  const auto report = evaluate(datasets, baselines, cap_mode(o));
  const std::array<MetricColumn, 2> cols = {report.column(a, MetricKind::hns),
                                            report.column(b, MetricKind::hns)};

  std::size_t wins_a = 0, wins_b = 0, ties = 0, only = 0;
  std::vector<std::vector<std::string>> rows = {
      {"game", a, fmt::format("{} HNS(%)", a), b, fmt::format("{} HNS(%)", b), "leader"}};
  ordered_json games = ordered_json::array();
  for (std::size_t i = 0; i < kNumGames; ++i) {
    const auto game = GameId::at(i);
    const auto ca = report.per_game.find({a, game});
    const auto cb = report.per_game.find({b, game});
    const bool ha = ca != report.per_game.end();
    const bool hb = cb != report.per_game.end();
    if (!ha && !hb) continue;
    const auto leaders = per_game_leader(cols, game);
    std::string leader = leaders.size() == 2 ? "tie" : leaders.front();
    if (!ha || !hb) {
      ++only;
    } else if (leaders.size() == 2) {
      ++ties;
    } else if (leader == a) {
      ++wins_a;
    } else {
      ++wins_b;
    }
    rows.push_back({std::string(game.name()), ha ? format_number(ca->second.raw) : "N/A",
                    ha ? format_percent(ca->second.hns.value) : "N/A",
                    hb ? format_number(cb->second.raw) : "N/A",
                    hb ? format_percent(cb->second.hns.value) : "N/A", leader});
    ordered_json g = {{"game", game.name()}, {"leaders", leaders}};
    g[a] = ha ? ordered_json(ca->second.raw) : ordered_json();
    g[b] = hb ? ordered_json(cb->second.raw) : ordered_json();
    games.push_back(std::move(g));
  }

  switch (output_format(o)) {
    case OutputFormat::json: {
      ordered_json j;
      j["algorithms"] = {a, b};
      j["games"] = std::move(games);
      j["summary"] = {{"wins", {{a, wins_a}, {b, wins_b}}}, {"ties", ties}, {"single_coverage", only}};
      return dump(j);
    }
    case OutputFormat::csv: return csv_table(rows);
    case OutputFormat::table: break;
  }
  return text_table(rows) + fmt::format("{} leads on {}, {} leads on {}, {} ties, {} games covered by one side\n",
                                        a, wins_a, b, wins_b, ties, only);
}

std::string cmd_reproduce(const Options& o, std::ostream& err) {
  if (o.cap_mode_given && cap_mode(o) != CapMode::table_compat) {
    err << "note: reproduce always uses table-compat cap mode\n";
  }
  const auto baselines = load_baselines(o);
  const auto datasets = load_datasets(o);
  const auto tables = load_appendix(o.appendix.empty() ? data_dir() / "appendix" : fs::path(o.appendix));
  const auto result = reproduce(tables, baselines, datasets);
  const auto log = result.inconsistency_log();

  if (!o.mismatch_log.empty()) {
    std::ofstream f(o.mismatch_log);
    if (!f) throw DataError(fmt::format("cannot write '{}'", o.mismatch_log));
    f << dump(log);
  }
  if (output_format(o) == OutputFormat::json) return dump(log);

  std::vector<std::vector<std::string>> rows = {{"kind", "table", "algorithm", "item", "printed", "recomputed", "note"}};
  for (const auto& c : result.cells) {
    if (c.matched) continue;
    rows.push_back({"cell", c.table, c.algorithm, std::string(c.game.name()), c.printed_text,
                    c.recomputed_percent ? fmt::format("{:.2f}", *c.recomputed_percent) : "N/A", c.reason});
  }
  for (const auto& a : result.aggregates) {
    if (a.matched) continue;
    rows.push_back({"aggregate", a.table, a.algorithm, a.row, a.printed_text, a.recomputed_text,
                    a.column_clean ? "" : "column has cell mismatches"});
  }
  for (const auto& c : result.conflicts) {
    std::vector<std::string> parts;
    for (const auto& [t, v] : c.printed) parts.push_back(fmt::format("{}={}", t, v));
    rows.push_back({"conflict", "", c.algorithm, c.quantity, fmt::format("{}", fmt::join(parts, " ")), "", ""});
  }
  if (output_format(o) == OutputFormat::csv) return csv_table(rows);
  const auto matched_aggs = std::ranges::count_if(result.aggregates, &AggregateCheck::matched);
  return fmt::format("cells: {}/{} matched ({:.2f}%)\naggregates: {}/{} matched\nconflicts: {}\n\n",
                     result.cells_matched(), result.cells.size(), result.cell_match_rate() * 100.0,
                     matched_aggs, result.aggregates.size(), result.conflicts.size()) +
         text_table(rows);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw DataError(fmt::format("cannot write '{}'", o.out_path));
  f << text;
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << ordered_json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Normalized-score benchmark toolkit for Atari 57 results", "hwrbench"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--baselines", o.baselines, "Baseline CSV (default: bundled)")->envname("HWRBENCH_BASELINES");
  app.add_option("--dataset", o.datasets, "Run dataset CSV, repeatable (default: all bundled)")
      ->envname("HWRBENCH_DATASET")
      ->delimiter(',');
  auto* cap = app.add_option("--cap-mode", o.cap_mode, "SABER lower bound: spec-floor or table-compat")
                  ->envname("HWRBENCH_CAP_MODE")
                  ->check(CLI::IsMember({"spec-floor", "table-compat", "spec_floor", "table_compat"}));
  app.add_option("--format", o.format, "Output format")
      ->envname("HWRBENCH_FORMAT")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--out", o.out_path, "Write results to this file instead of stdout")->envname("HWRBENCH_OUT");
  auto* k_opt = app.add_option("--k", o.k, "Training-score averaging window")->envname("HWRBENCH_K");
  app.add_option("--budget", o.budget, "Frame budget (default 200M)")->envname("HWRBENCH_BUDGET");

  auto* validate = app.add_subcommand("validate", "Check baseline and dataset integrity");
  auto* score = app.add_subcommand("score", "All metrics for a single raw score");
  score->add_option("--game", o.game, "Game identifier")->required();
  score->add_option("--score", o.score, "Raw game score")->required();
  score->add_option("--frames", o.frames, "Training frames, integral (scientific notation accepted)");

  auto* aggregate = app.add_subcommand("aggregate", "Aggregate rows per algorithm");
  aggregate->add_option("--algorithm", o.algorithms, "Restrict to these algorithms");

  auto* report = app.add_subcommand("report", "Render a score table, machine report or figure series");
  report->add_option("--metric", o.metric, "hns, chns, hwrns or saber")->check(
      CLI::IsMember({"hns", "chns", "hwrns", "saber"}));
  report->add_option("--algorithm", o.algorithms, "Columns to show (default: all)");
  report->add_option("--figure", o.figure, "metric-vs-scale, hwrb-vs-gametime or efficiency");

  auto* check = app.add_subcommand("protocol-check", "Check an episode log or ledger against the protocol");
  check->add_option("--log", o.log, "Episode log");
  check->add_option("--ledger", o.ledger, "Run ledger JSON");
  check->add_option("--action-set", o.action_set, "Override the declared action-set size");

  auto* compare = app.add_subcommand("compare", "Per-game leader diff of two algorithms");
  compare->add_option("--algorithm", o.algorithms, "Exactly two algorithms")->required();

  auto* repro = app.add_subcommand("reproduce", "Recompute the bundled score tables and log mismatches");
  repro->add_option("--appendix", o.appendix, "Printed table directory (default: bundled)");
  repro->add_option("--mismatch-log", o.mismatch_log, "Also write the inconsistency log JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  o.cap_mode_given = cap->count() > 0 || std::getenv("HWRBENCH_CAP_MODE") != nullptr;
  o.k_given = k_opt->count() > 0 || std::getenv("HWRBENCH_K") != nullptr;

  try {
    if (validate->parsed()) {
      emit(o, cmd_validate(o), out);
    } else if (score->parsed()) {
      emit(o, cmd_score(o), out);
    } else if (aggregate->parsed()) {
      emit(o, cmd_aggregate(o), out);
    } else if (report->parsed()) {
      emit(o, cmd_report(o), out);
    } else if (check->parsed()) {
      const auto r = cmd_protocol_check(o);
      emit(o, r.text, out);
      if (!r.conforming) {
        report_error(err, "non_conforming", "run violates the evaluation protocol");
        return kExitDataError;
      }
    } else if (compare->parsed()) {
      emit(o, cmd_compare(o), out);
    } else if (repro->parsed()) {
      emit(o, cmd_reproduce(o, err), out);
    }
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    err << app.help();
    return kExitUsage;
  } catch (const DataError& e) {
    report_error(err, "data", e.what());
    return kExitDataError;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace hwrbench::cli
