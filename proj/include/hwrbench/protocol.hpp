#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hwrbench/run_record.hpp"

namespace hwrbench::protocol {

// 30 minutes of play at 60 frames per second.
inline constexpr std::uint64_t kMaxEpisodeFrames = 108000;
inline constexpr std::uint64_t kDefaultFrameBudget = 200'000'000;
inline constexpr int kFullActionSet = 18;

struct StepEvent {
  double reward = 0.0;  // undiscounted game points
  int lives = 0;
  bool game_over = false;
  std::uint64_t env_frames = 1;  // agent step x action repeat, >= 1
};

enum class Termination {
  game_over,
  frame_cap,
  stream_end,  // log segment ended with neither game over nor the cap
};

std::string_view to_string(Termination t);
std::optional<Termination> parse_termination(std::string_view text);

struct EpisodeSummary {
  double episode_return = 0.0;
  std::uint64_t env_frames_used = 0;
  Termination terminated_by = Termination::stream_end;
  std::uint64_t steps_consumed = 0;
  // Set when the segment ended without game over right after a life was
  // lost, which is what life-loss termination looks like in a log.
  bool ended_on_life_loss = false;
};

// Consumes one episode's steps in order. A step that would take the episode
// past kMaxEpisodeFrames is rejected and closes the episode with frame_cap;
// its reward is not counted. Losing a life never ends the episode.
class EpisodeAccumulator {
 public:
  // Returns false once the episode has terminated (the step is ignored).
  // Throws DataError on a NaN reward, env_frames == 0, negative lives or a
  // lives count that goes up.
  bool push(const StepEvent& step);

  bool terminated() const { return terminated_.has_value(); }
  bool empty() const { return summary_.steps_consumed == 0 && !terminated_; }
  EpisodeSummary finish() const;

 private:
  EpisodeSummary summary_;
  std::optional<Termination> terminated_;
  std::optional<int> lives_;
  bool last_step_lost_life_ = false;
};

// Throws DataError for an empty stream.
EpisodeSummary accumulate_episode(std::span<const StepEvent> stream);

struct RunLedger {
  std::uint64_t total_env_frames = 0;
  std::uint64_t budget = kDefaultFrameBudget;
  std::vector<EpisodeSummary> episodes;
  int action_set = kFullActionSet;
  std::size_t averaging_k = 1;
  std::vector<std::string> annotations;

  void add_episode(const EpisodeSummary& e);
  std::vector<double> returns() const;
};

struct Violation {
  std::string code;  // "budget exceeded", "reduced action set", ...
  std::string detail;
};

struct ConformanceVerdict {
  bool conforming = true;
  std::vector<Violation> violations;
  std::vector<std::string> annotations;
};

// Conforming iff total_env_frames <= budget and action_set == 18.
// Violations are data, never exceptions.
ConformanceVerdict check_budget(const RunLedger& ledger);

struct TrainingScore {
  std::vector<double> series;  // sliding means, window k, stride 1
  double final_score = 0.0;
};

// Throws DataError when k == 0 or fewer than k returns.
TrainingScore training_score(std::span<const double> returns, std::size_t k);

RunRecord to_run_record(const RunLedger& ledger, GameId game, std::string algorithm,
                        std::string scale_label = {});

struct LogOptions {
  std::uint64_t budget = kDefaultFrameBudget;
  std::size_t averaging_k = 1;
  std::optional<int> action_set;  // overrides the log's declaration
};

// Episode log, one record per line:
//   <reward> <lives> <game_over:0|1> <env_frames>
//   repeat <count> <reward> <lives> <game_over:0|1> <env_frames>
//   reset                    (episode boundary)
//   action_set <n>           (declaration, before the first step)
// Blank lines and '#' comments are ignored. Steps are streamed, so repeat
// lines never materialize their expansion.
RunLedger read_episode_log(std::istream& in, std::string_view source_name,
                           const LogOptions& options);

nlohmann::json ledger_to_json(const RunLedger& ledger);
// Validates episode frame counts and that total_env_frames equals their sum.
RunLedger ledger_from_json(const nlohmann::json& j);

}  // namespace hwrbench::protocol
