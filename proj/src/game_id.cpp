#include "hwrbench/game_id.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include <fmt/format.h>

#include "hwrbench/csv.hpp"
#include "hwrbench/error.hpp"

namespace hwrbench {

std::optional<GameId> GameId::try_parse(std::string_view text) {
  std::string key(csv::trim(text));
  std::ranges::transform(key, key.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto it = std::ranges::find(kCanonicalGames, std::string_view(key));
  if (it == kCanonicalGames.end()) return std::nullopt;
  return GameId(static_cast<std::size_t>(it - kCanonicalGames.begin()));
}

GameId GameId::parse(std::string_view text) {
  if (auto id = try_parse(text)) return *id;
  throw DataError(fmt::format("unknown game identifier '{}'", text));
}

GameId GameId::at(std::size_t index) {
  if (index >= kNumGames) throw std::out_of_range("game index out of range");
  return GameId(index);
}

}  // namespace hwrbench
