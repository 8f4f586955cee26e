#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwrbench/game_id.hpp"

namespace hwrbench {

// Raw-score anchors for one game: a random policy, the average human tester,
// and the human world record.
struct BaselineRecord {
  GameId game;
  double random;
  double human_average;
  double human_world_record;
  std::string source_tag;
};

// Declared raw score range [r_min, r_max] of a game, for min-max scaling.
struct ScoreScale {
  GameId game;
  double r_min;
  double r_max;

  // Throws DataError unless r_max > r_min and both are finite.
  static ScoreScale make(GameId game, double r_min, double r_max);
};

// Pong is the only game whose full score range is a fixed rule of the game.
ScoreScale pong_scale();

// Immutable after load; safe to share between threads for reading.
//
// File format: comma-separated text, header
//   game,random,human_average,human_world_record,source_tag
// with exactly one row per canonical game. Load fails on unknown, duplicate
// or missing games, non-numeric cells, human_average <= random and
// human_world_record <= random. human_world_record < human_average is only a
// warning.
class BaselineRegistry {
 public:
  static BaselineRegistry load(const std::filesystem::path& path);
  static BaselineRegistry parse(std::istream& in, std::string_view source_name);

  // Case-insensitive, whitespace-trimmed lookup; throws DataError for
  // unknown games.
  const BaselineRecord& lookup(std::string_view game) const;
  const BaselineRecord& lookup(GameId game) const { return records_[game.index()]; }

  // Records in canonical game order.
  const std::array<BaselineRecord, kNumGames>& records() const { return records_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::string& source() const { return source_; }

  void write_csv(std::ostream& out) const;

 private:
  BaselineRegistry(std::array<BaselineRecord, kNumGames> records,
                   std::vector<std::string> warnings, std::string source)
      : records_(std::move(records)), warnings_(std::move(warnings)), source_(std::move(source)) {}

  std::array<BaselineRecord, kNumGames> records_;
  std::vector<std::string> warnings_;
  std::string source_;
};

// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

}  // namespace hwrbench
