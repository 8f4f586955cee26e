#include "hwrbench/baseline_registry.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "hwrbench/csv.hpp"
#include "hwrbench/error.hpp"

namespace hwrbench {

ScoreScale ScoreScale::make(GameId game, double r_min, double r_max) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_max > r_min)) {
    throw DataError(fmt::format("degenerate score scale [{}, {}] for '{}'", r_min, r_max,
                                game.name()));
  }
  return ScoreScale{game, r_min, r_max};
}

ScoreScale pong_scale() { return ScoreScale::make(GameId::parse("pong"), -21.0, 21.0); }

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  return fmt::format("{}", value);
}

BaselineRegistry BaselineRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open baseline file '{}'", path.string()));
  return parse(in, path.string());
}

BaselineRegistry BaselineRegistry::parse(std::istream& in, std::string_view source_name) {
  const auto table = csv::read(in, source_name);
  const std::array<std::string_view, 5> required = {"game", "random", "human_average",
                                                    "human_world_record", "source_tag"};
  std::array<std::size_t, 5> col{};
  for (std::size_t i = 0; i < required.size(); ++i) {
    const auto c = table.column(required[i]);
    if (!c) throw DataError(fmt::format("{}: missing column '{}'", source_name, required[i]));
    col[i] = *c;
  }

  std::array<std::optional<BaselineRecord>, kNumGames> slots;
  std::vector<std::string> warnings;
  for (const auto& row : table.rows) {
    const auto where = fmt::format("{}:{}", source_name, row.line);
    const auto& name = row.fields[col[0]];
    const auto game = GameId::try_parse(name);
    if (!game) throw DataError(fmt::format("{}: unknown game identifier '{}'", where, name));
    if (slots[game->index()]) {
      throw DataError(fmt::format("{}: duplicate row for '{}'", where, game->name()));
    }
    auto number = [&](std::size_t field, std::string_view label) {
      const auto v = csv::parse_double(row.fields[col[field]]);
      if (!v) {
        throw DataError(fmt::format("{}: non-numeric {} '{}'", where, label, row.fields[col[field]]));
      }
      return *v;
    };
    BaselineRecord rec{*game, number(1, "random"), number(2, "human_average"),
                       number(3, "human_world_record"), row.fields[col[4]]};
    if (!(rec.human_average > rec.random)) {
      throw DataError(fmt::format("{}: human_average ({}) must exceed random ({}) for '{}'", where,
                                  rec.human_average, rec.random, game->name()));
    }
    if (!(rec.human_world_record > rec.random)) {
      throw DataError(fmt::format("{}: human_world_record ({}) must exceed random ({}) for '{}'",
                                  where, rec.human_world_record, rec.random, game->name()));
    }
    if (rec.human_world_record < rec.human_average) {
      warnings.push_back(fmt::format("{}: human_world_record ({}) below human_average ({}) for '{}'",
                                     where, rec.human_world_record, rec.human_average,
                                     game->name()));
    }
    slots[game->index()] = std::move(rec);
  }

  std::vector<std::string> missing;
  for (std::size_t i = 0; i < kNumGames; ++i) {
    if (!slots[i]) missing.emplace_back(kCanonicalGames[i]);
  }
  if (!missing.empty()) {
    throw DataError(fmt::format("{}: missing game rows: {}", source_name, fmt::join(missing, ", ")));
  }

  auto records = [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<BaselineRecord, kNumGames>{std::move(*slots[I])...};
  }(std::make_index_sequence<kNumGames>{});
  return BaselineRegistry(std::move(records), std::move(warnings), std::string(source_name));
}

const BaselineRecord& BaselineRegistry::lookup(std::string_view game) const {
  return lookup(GameId::parse(game));
}

void BaselineRegistry::write_csv(std::ostream& out) const {
  out << "game,random,human_average,human_world_record,source_tag\n";
  for (const auto& r : records_) {
    out << csv::escape(r.game.name()) << ',' << format_number(r.random) << ','
        << format_number(r.human_average) << ',' << format_number(r.human_world_record) << ','
        << csv::escape(r.source_tag) << '\n';
  }
}

}  // namespace hwrbench
