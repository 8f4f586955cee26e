#include "hwrbench/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "hwrbench/baseline_registry.hpp"
#include "hwrbench/csv.hpp"
#include "hwrbench/error.hpp"

namespace hwrbench {

std::vector<std::string> Dataset::algorithms() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& a) {
    if (std::ranges::find(out, a) == out.end()) out.push_back(a);
  };
  for (const auto& r : records) add(r.algorithm);
  for (const auto& n : omitted) add(n.algorithm);
  return out;
}

Dataset parse_dataset(std::istream& in, std::string_view source_name, std::string label) {
  const auto table = csv::read(in, source_name);
  const std::array<std::string_view, 5> required = {"algorithm", "game", "score", "frames",
                                                    "scale_label"};
  std::array<std::size_t, 5> col{};
  for (std::size_t i = 0; i < required.size(); ++i) {
    const auto c = table.column(required[i]);
    if (!c) throw DataError(fmt::format("{}: missing column '{}'", source_name, required[i]));
    col[i] = *c;
  }

  Dataset ds;
  ds.label = std::move(label);
  std::set<std::pair<std::string, GameId>> seen;
  for (const auto& row : table.rows) {
    const auto where = fmt::format("{}:{}", source_name, row.line);
    const auto& algorithm = row.fields[col[0]];
    if (algorithm.empty()) throw DataError(fmt::format("{}: empty algorithm name", where));
    const auto game = GameId::try_parse(row.fields[col[1]]);
    if (!game) {
      throw DataError(fmt::format("{}: unknown game identifier '{}'", where, row.fields[col[1]]));
    }
    if (!seen.emplace(algorithm, *game).second) {
      throw DataError(fmt::format("{}: duplicate row for ({}, {})", where, algorithm, game->name()));
    }
    const auto frames = csv::parse_count(row.fields[col[3]]);
    if (!frames || *frames == 0) {
      throw DataError(fmt::format("{}: frames must be a positive integer, got '{}'", where,
                                  row.fields[col[3]]));
    }
    const auto& score_text = row.fields[col[2]];
    if (score_text == "N/A") {
      ds.omitted.push_back({algorithm, *game, fmt::format("{}: score is N/A", where)});
      continue;
    }
    const auto score = csv::parse_double(score_text);
    if (!score) throw DataError(fmt::format("{}: non-numeric score '{}'", where, score_text));
    ds.records.push_back(RunRecord{algorithm, *game, *score, *frames, row.fields[col[4]]});
  }
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open dataset '{}'", path.string()));
  return parse_dataset(in, path.string(), path.stem().string());
}

void write_dataset_csv(const Dataset& dataset, std::ostream& out) {
  out << "algorithm,game,score,frames,scale_label\n";
  for (const auto& r : dataset.records) {
    out << csv::escape(r.algorithm) << ',' << r.game.name() << ',' << format_number(r.score) << ','
        << r.frames << ',' << csv::escape(r.scale_label) << '\n';
  }
}

}  // namespace hwrbench
