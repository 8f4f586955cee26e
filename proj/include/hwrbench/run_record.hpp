#pragma once

#include <cstdint>
#include <string>

#include "hwrbench/game_id.hpp"

namespace hwrbench {

// One algorithm's raw score on one game, with the training scale it was
// obtained at.
struct RunRecord {
  std::string algorithm;
  GameId game;
  double score;
  std::uint64_t frames;     // > 0
  std::string scale_label;  // e.g. "200M", "10B"
};

}  // namespace hwrbench
