#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string_view>

namespace hwrbench {

inline constexpr std::size_t kNumGames = 57;

// The Atari 57 benchmark games, in the canonical (alphabetical) row order of
// the score tables.
inline constexpr std::array<std::string_view, kNumGames> kCanonicalGames = {
    "alien",          "amidar",        "assault",         "asterix",
    "asteroids",      "atlantis",      "bank heist",      "battle zone",
    "beam rider",     "berzerk",       "bowling",         "boxing",
    "breakout",       "centipede",     "chopper command", "crazy climber",
    "defender",       "demon attack",  "double dunk",     "enduro",
    "fishing derby",  "freeway",       "frostbite",       "gopher",
    "gravitar",       "hero",          "ice hockey",      "jamesbond",
    "kangaroo",       "krull",         "kung fu master",  "montezuma revenge",
    "ms pacman",      "name this game", "phoenix",        "pitfall",
    "pong",           "private eye",   "qbert",           "riverraid",
    "road runner",    "robotank",      "seaquest",        "skiing",
    "solaris",        "space invaders", "star gunner",    "surround",
    "tennis",         "time pilot",    "tutankham",       "up n down",
    "venture",        "video pinball", "wizard of wor",   "yars revenge",
    "zaxxon",
};

// A member of the canonical game list. Parsing trims surrounding whitespace
// and ignores case; the stored name is always the canonical lowercase form.
class GameId {
 public:
  static std::optional<GameId> try_parse(std::string_view text);
  // Throws DataError for identifiers outside the canonical list.
  static GameId parse(std::string_view text);
  static GameId at(std::size_t index);

  std::string_view name() const { return kCanonicalGames[index_]; }
  std::size_t index() const { return index_; }

  friend auto operator<=>(const GameId&, const GameId&) = default;

 private:
  explicit GameId(std::size_t index) : index_(index) {}
  std::size_t index_;
};

}  // namespace hwrbench
