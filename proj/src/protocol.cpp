#include "hwrbench/protocol.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <span>

#include <fmt/format.h>

#include "hwrbench/csv.hpp"
#include "hwrbench/error.hpp"

namespace hwrbench::protocol {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::game_over: return "game_over";
    case Termination::frame_cap: return "frame_cap";
    case Termination::stream_end: return "stream_end";
  }
  return "?";
}

std::optional<Termination> parse_termination(std::string_view text) {
  for (auto t : {Termination::game_over, Termination::frame_cap, Termination::stream_end}) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

bool EpisodeAccumulator::push(const StepEvent& step) {
  if (terminated_) return false;
  if (std::isnan(step.reward)) throw DataError("step reward is NaN");
  if (!std::isfinite(step.reward)) throw DataError("step reward is infinite");
  if (step.env_frames == 0) throw DataError("step consumes zero environment frames");
  if (step.lives < 0) throw DataError("negative lives count");
  if (lives_ && step.lives > *lives_) {
    throw DataError(
        fmt::format("lives increased from {} to {} without an episode reset", *lives_, step.lives));
  }

  if (summary_.env_frames_used + step.env_frames > kMaxEpisodeFrames) {
    terminated_ = Termination::frame_cap;
    return false;
  }

  last_step_lost_life_ = lives_ && step.lives < *lives_;
  lives_ = step.lives;
  summary_.episode_return += step.reward;
  summary_.env_frames_used += step.env_frames;
  ++summary_.steps_consumed;

  if (step.game_over) {
    terminated_ = Termination::game_over;
  } else if (summary_.env_frames_used == kMaxEpisodeFrames) {
    terminated_ = Termination::frame_cap;
  }
  return !terminated_;
}

EpisodeSummary EpisodeAccumulator::finish() const {
  EpisodeSummary out = summary_;
  out.terminated_by = terminated_.value_or(Termination::stream_end);
  out.ended_on_life_loss = !terminated_ && last_step_lost_life_;
  return out;
}

EpisodeSummary accumulate_episode(std::span<const StepEvent> stream) {
  if (stream.empty()) throw DataError("empty episode stream");
  EpisodeAccumulator acc;
  for (const auto& step : stream) {
    if (!acc.push(step)) break;
  }
  return acc.finish();
}

void RunLedger::add_episode(const EpisodeSummary& e) {
  total_env_frames += e.env_frames_used;
  episodes.push_back(e);
}

std::vector<double> RunLedger::returns() const {
  std::vector<double> out;
  out.reserve(episodes.size());
  for (const auto& e : episodes) out.push_back(e.episode_return);
  return out;
}

ConformanceVerdict check_budget(const RunLedger& ledger) {
  ConformanceVerdict v;
  if (ledger.total_env_frames > ledger.budget) {
    v.violations.push_back({"budget exceeded",
                            fmt::format("{} environment frames used, budget is {}",
                                        ledger.total_env_frames, ledger.budget)});
  }
  if (ledger.action_set < kFullActionSet) {
    v.violations.push_back(
        {"reduced action set",
         fmt::format("{} actions declared, the full set has {}", ledger.action_set, kFullActionSet)});
  } else if (ledger.action_set > kFullActionSet) {
    v.violations.push_back({"invalid action set",
                            fmt::format("{} actions declared, the full set has only {}",
                                        ledger.action_set, kFullActionSet)});
  }
  v.conforming = v.violations.empty();
  v.annotations = ledger.annotations;
  return v;
}

TrainingScore training_score(std::span<const double> returns, std::size_t k) {
  if (k == 0) throw DataError("averaging window k must be at least 1");
  if (returns.size() < k) {
    throw DataError(
        fmt::format("training score needs at least k = {} episodes, got {}", k, returns.size()));
  }
  TrainingScore out;
  out.series.reserve(returns.size() - k + 1);
  for (std::size_t start = 0; start + k <= returns.size(); ++start) {
    double sum = 0.0;
    for (std::size_t i = start; i < start + k; ++i) sum += returns[i];
    out.series.push_back(sum / static_cast<double>(k));
  }
  out.final_score = out.series.back();
  return out;
}

RunRecord to_run_record(const RunLedger& ledger, GameId game, std::string algorithm,
                        std::string scale_label) {
  if (ledger.episodes.empty()) throw DataError("ledger has no episodes");
  const auto returns = ledger.returns();
  const auto score = training_score(returns, ledger.averaging_k);
  if (ledger.total_env_frames == 0) throw DataError("ledger consumed no frames");
  return RunRecord{std::move(algorithm), game, score.final_score, ledger.total_env_frames,
                   std::move(scale_label)};
}

namespace {

struct LogReader {
  std::string_view source;
  RunLedger ledger;
  EpisodeAccumulator acc;
  bool steps_after_end = false;
  bool seen_step = false;
  std::size_t line_no = 0;

  std::string where() const { return fmt::format("{}:{}", source, line_no); }

  void close_episode() {
    if (!acc.empty()) {
      auto e = acc.finish();
      const auto index = ledger.episodes.size();
      if (e.ended_on_life_loss) {
        ledger.annotations.push_back(fmt::format(
            "episode {} ended at a reset right after a life loss without game over "
            "(looks like life-loss termination)",
            index));
      } else if (e.terminated_by == Termination::stream_end) {
        ledger.annotations.push_back(
            fmt::format("episode {} ended without game over or frame cap", index));
      }
      if (steps_after_end && e.terminated_by == Termination::game_over) {
        ledger.annotations.push_back(
            fmt::format("episode {} has steps after game over; they were ignored", index));
      }
      ledger.add_episode(e);
    }
    acc = EpisodeAccumulator{};
    steps_after_end = false;
  }

  void step(const StepEvent& s, std::uint64_t count) {
    seen_step = true;
    for (std::uint64_t i = 0; i < count; ++i) {
      if (acc.terminated()) {
        steps_after_end = true;
        return;
      }
      try {
        acc.push(s);
      } catch (const DataError& e) {
        throw DataError(fmt::format("{}: {}", where(), e.what()));
      }
    }
  }
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const auto start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
std::optional<T> parse_integer(std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

// fields: reward lives game_over env_frames
StepEvent parse_step(std::span<const std::string_view> f, const LogReader& r) {
  if (f.size() < 4) {
    throw DataError(fmt::format("{}: expected '<reward> <lives> <game_over> <env_frames>'", r.where()));
  }
  if (f.size() > 4) {
    throw DataError(fmt::format("{}: unexpected trailing field '{}'", r.where(), f[4]));
  }
  if (f[0] == "nan" || f[0] == "NaN" || f[0] == "NAN") {
    throw DataError(fmt::format("{}: step reward is NaN", r.where()));
  }
  const auto reward = csv::parse_double(f[0]);
  if (!reward) throw DataError(fmt::format("{}: non-numeric reward '{}'", r.where(), f[0]));
  const auto lives = parse_integer<long long>(f[1]);
  const auto game_over = parse_integer<int>(f[2]);
  const auto frames = parse_integer<long long>(f[3]);
  if (!lives || !game_over || !frames) {
    throw DataError(fmt::format("{}: lives, game_over and env_frames must be integers", r.where()));
  }
  if (*game_over != 0 && *game_over != 1) {
    throw DataError(fmt::format("{}: game_over must be 0 or 1", r.where()));
  }
  if (*lives < 0) throw DataError(fmt::format("{}: negative lives", r.where()));
  if (*frames < 1) throw DataError(fmt::format("{}: env_frames must be at least 1", r.where()));
  StepEvent s;
  s.reward = *reward;
  s.lives = static_cast<int>(*lives);
  s.game_over = *game_over == 1;
  s.env_frames = static_cast<std::uint64_t>(*frames);
  return s;
}

}  // namespace

RunLedger read_episode_log(std::istream& in, std::string_view source_name,
                           const LogOptions& options) {
  LogReader r;
  r.source = source_name;
  r.ledger.budget = options.budget;
  r.ledger.averaging_k = options.averaging_k;
  std::optional<int> declared;

  std::string line;
  while (std::getline(in, line)) {
    ++r.line_no;
    const auto t = csv::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto fields = split_fields(t);
    const auto head = fields.front();
    if (head == "reset") {
      if (fields.size() != 1) throw DataError(fmt::format("{}: reset takes no arguments", r.where()));
      r.close_episode();
    } else if (head == "action_set") {
      const auto n = fields.size() == 2 ? parse_integer<int>(fields[1]) : std::nullopt;
      if (!n || *n <= 0) {
        throw DataError(fmt::format("{}: action_set needs a positive integer", r.where()));
      }
      if (r.seen_step) {
        throw DataError(fmt::format("{}: action_set must precede the first step", r.where()));
      }
      declared = *n;
    } else if (head == "repeat") {
      const auto count = fields.size() > 1 ? parse_integer<std::uint64_t>(fields[1]) : std::nullopt;
      if (!count || *count < 1) {
        throw DataError(fmt::format("{}: repeat needs a positive count", r.where()));
      }
      r.step(parse_step(std::span(fields).subspan(2), r), *count);
    } else {
      r.step(parse_step(fields, r), 1);
    }
  }
  r.close_episode();

  if (options.action_set) {
    r.ledger.action_set = *options.action_set;
  } else if (declared) {
    r.ledger.action_set = *declared;
  } else {
    r.ledger.annotations.push_back("no action_set declared; assuming the full set of 18");
  }
  return r.ledger;
}

nlohmann::json ledger_to_json(const RunLedger& ledger) {
  nlohmann::json episodes = nlohmann::json::array();
  for (const auto& e : ledger.episodes) {
    episodes.push_back({{"return", e.episode_return},
                        {"env_frames", e.env_frames_used},
                        {"terminated_by", to_string(e.terminated_by)}});
  }
  return {{"total_env_frames", ledger.total_env_frames},
          {"budget", ledger.budget},
          {"action_set", ledger.action_set},
          {"averaging_k", ledger.averaging_k},
          {"annotations", ledger.annotations},
          {"episodes", std::move(episodes)}};
}

RunLedger ledger_from_json(const nlohmann::json& j) {
  try {
    RunLedger ledger;
    ledger.budget = j.value("budget", kDefaultFrameBudget);
    ledger.action_set = j.at("action_set").get<int>();
    ledger.averaging_k = j.value("averaging_k", std::size_t{1});
    if (j.contains("annotations")) ledger.annotations = j.at("annotations").get<std::vector<std::string>>();
    std::size_t index = 0;
    for (const auto& ej : j.at("episodes")) {
      EpisodeSummary e;
      e.episode_return = ej.at("return").get<double>();
      e.env_frames_used = ej.at("env_frames").get<std::uint64_t>();
      const auto term = parse_termination(ej.at("terminated_by").get<std::string>());
      if (!term) throw DataError(fmt::format("episode {}: unknown termination", index));
      e.terminated_by = *term;
      if (e.env_frames_used > kMaxEpisodeFrames) {
        throw DataError(fmt::format("episode {} uses {} frames, above the {}-frame cap", index,
                                    e.env_frames_used, kMaxEpisodeFrames));
      }
      ledger.add_episode(e);
      ++index;
    }
    if (j.contains("total_env_frames") &&
        j.at("total_env_frames").get<std::uint64_t>() != ledger.total_env_frames) {
      throw DataError(fmt::format("total_env_frames {} does not match the episode sum {}",
                                  j.at("total_env_frames").get<std::uint64_t>(),
                                  ledger.total_env_frames));
    }
    return ledger;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(fmt::format("malformed ledger: {}", e.what()));
  }
}

}  // namespace hwrbench::protocol
