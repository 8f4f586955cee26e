#pragma once

// Seeded property checks with brute-force oracles. Shared by the unit tests
// and the acceptance runner.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hwrbench/aggregation.hpp"
#include "hwrbench/baseline_registry.hpp"
#include "hwrbench/metrics.hpp"
#include "hwrbench/protocol.hpp"

namespace hwrbench::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'a7a2'57ULL;

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return cases > 0 && failures.empty(); }
  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
  }
};

// ---- oracles ----------------------------------------------------------------

inline double oracle_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

struct OracleEpisode {
  double ret = 0.0;
  std::uint64_t frames = 0;
  std::size_t steps = 0;
};

// Episodes as a plain loop: a step that would pass the cap is dropped and
// closes the episode; reaching the cap exactly or game over closes it after
// the step.
inline std::vector<OracleEpisode> oracle_episodes(const std::vector<protocol::StepEvent>& steps) {
  std::vector<OracleEpisode> out;
  OracleEpisode cur;
  bool open = false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (cur.frames + s.env_frames > protocol::kMaxEpisodeFrames) {
      out.push_back(cur);
      return out;
    }
    cur.ret += s.reward;
    cur.frames += s.env_frames;
    ++cur.steps;
    open = true;
    if (s.game_over || cur.frames == protocol::kMaxEpisodeFrames) {
      out.push_back(cur);
      return out;
    }
  }
  if (open) out.push_back(cur);
  return out;
}

inline std::vector<double> oracle_sliding(const std::vector<double>& r, std::size_t k) {
  std::vector<double> out;
  for (std::size_t end = k; end <= r.size(); ++end) {
    double s = 0.0;
    for (std::size_t j = end - k; j < end; ++j) s += r[j];
    out.push_back(s / static_cast<double>(k));
  }
  return out;
}

// ---- generators ---------------------------------------------------------------

inline std::vector<protocol::StepEvent> random_episode(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> shape(0, 3);
  const int kind = shape(rng);
  // 0: short game-over episodes, 1: long runs toward the cap with action
  // repeat, 2: coarse steps that overshoot the cap, 3: stream ends early.
  std::size_t len = 0;
  std::uint64_t max_frames = 4;
  switch (kind) {
    case 0: len = std::uniform_int_distribution<std::size_t>(1, 200)(rng); break;
    case 1: len = std::uniform_int_distribution<std::size_t>(26000, 28000)(rng); break;
    case 2: len = 400; max_frames = 5000; break;
    default: len = std::uniform_int_distribution<std::size_t>(1, 50)(rng); break;
  }
  std::uniform_int_distribution<int> reward(-5, 20);
  std::uniform_int_distribution<std::uint64_t> frames(1, max_frames);
  std::bernoulli_distribution lose_life(0.01);
  std::vector<protocol::StepEvent> steps;
  int lives = 5;
  std::bernoulli_distribution new_run(0.02);
  double current = reward(rng) * 0.5;
  for (std::size_t i = 0; i < len; ++i) {
    protocol::StepEvent s;
    // Long episodes hold each reward for a run of steps.
    if (kind != 1 || new_run(rng)) current = reward(rng) * 0.5;
    s.reward = current;
    if (kind != 1 && lose_life(rng) && lives > 0) --lives;
    s.lives = lives;
    s.game_over = kind == 0 && i + 1 == len;
    s.env_frames = kind == 1 ? 4 : frames(rng);
    steps.push_back(s);
  }
  return steps;
}

// ---- properties ---------------------------------------------------------------

inline PropertyResult check_anchor_identities(const BaselineRegistry& reg) {
  PropertyResult r{"normalization anchors for all baselines"};
  for (const auto& b : reg.records()) {
    ++r.cases;
    if (hns(b.random, b).value != 0.0) r.fail(fmt::format("hns(random) != 0 for {}", b.game.name()));
    if (std::abs(hns(b.human_average, b).value - 1.0) > 1e-12) {
      r.fail(fmt::format("hns(human_average) != 1 for {}", b.game.name()));
    }
    if (std::abs(hwrns(b.human_world_record, b).value - 1.0) > 1e-12) {
      r.fail(fmt::format("hwrns(world_record) != 1 for {}", b.game.name()));
    }
    if (hwrns(b.random, b).value != 0.0) r.fail(fmt::format("hwrns(random) != 0 for {}", b.game.name()));
  }
  return r;
}

inline PropertyResult check_cap_invariants(std::uint64_t seed = kSeed) {
  PropertyResult r{"CHNS/SABER cap idempotence and range"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  std::uniform_real_distribution<double> narrow(-0.5, 2.5);
  for (int i = 0; i < 5000; ++i) {
    const double x = i % 2 ? wide(rng) : narrow(rng);
    ++r.cases;
    const auto c = chns(MetricValue{x, MetricKind::hns, std::nullopt});
    if (c.value < 0.0 || c.value > 1.0) r.fail(fmt::format("chns({}) = {}", x, c.value));
    if (chns(c).value != c.value) r.fail(fmt::format("chns not idempotent at {}", x));
    if (x >= 0.0 && x <= 1.0 && c.value != x) r.fail(fmt::format("chns moved in-range {}", x));

    const MetricValue h{x, MetricKind::hwrns, std::nullopt};
    const auto s = saber(h, CapMode::spec_floor);
    if (s.value < 0.0 || s.value > kSaberCap) r.fail(fmt::format("spec-floor saber({}) = {}", x, s.value));
    if (saber(s, CapMode::spec_floor).value != s.value) r.fail(fmt::format("spec-floor not idempotent at {}", x));
    if (s.value != std::clamp(x, 0.0, kSaberCap)) r.fail(fmt::format("spec-floor saber({}) wrong", x));

    const auto t = saber(h, CapMode::table_compat);
    if (t.value > kSaberCap) r.fail(fmt::format("table-compat saber({}) = {}", x, t.value));
    if (saber(t, CapMode::table_compat).value != t.value) r.fail(fmt::format("table-compat not idempotent at {}", x));
    if (t.value != std::min(x, kSaberCap)) r.fail(fmt::format("table-compat saber({}) wrong", x));
    if (x >= 0.0 && t.value != s.value) r.fail(fmt::format("cap modes disagree at non-negative {}", x));
  }
  return r;
}

inline PropertyResult check_argmax_invariance(const BaselineRegistry& reg, std::uint64_t seed = kSeed) {
  PropertyResult r{"per-game leader invariant under normalization"};
  std::mt19937_64 rng(seed ^ 0xa1);
  std::uniform_int_distribution<std::size_t> game_pick(0, kNumGames - 1);
  std::uniform_int_distribution<int> n_algs(1, 6);
  std::uniform_int_distribution<int> coarse(0, 4);  // small range forces ties
  for (int i = 0; i < 1000; ++i) {
    ++r.cases;
    const auto game = GameId::at(game_pick(rng));
    const auto& b = reg.lookup(game);
    const int n = n_algs(rng);
    std::vector<double> raw;
    std::vector<MetricColumn> by_hns, by_hwrns;
    for (int a = 0; a < n; ++a) {
      const double span = b.human_world_record - b.random;
      const double x = b.random + span * (coarse(rng) - 1) * 0.75;
      raw.push_back(x);
      const auto name = fmt::format("alg{}", a);
      by_hns.push_back({name, MetricKind::hns, {{game, hns(x, b)}}});
      by_hwrns.push_back({name, MetricKind::hwrns, {{game, hwrns(x, b)}}});
    }
    const double best = *std::max_element(raw.begin(), raw.end());
    std::vector<std::string> expect;
    for (int a = 0; a < n; ++a) {
      if (raw[a] == best) expect.push_back(fmt::format("alg{}", a));
    }
    std::sort(expect.begin(), expect.end());
    if (per_game_leader(by_hns, game) != expect) r.fail(fmt::format("hns leaders differ (case {})", i));
    if (per_game_leader(by_hwrns, game) != expect) r.fail(fmt::format("hwrns leaders differ (case {})", i));
  }
  return r;
}

inline PropertyResult check_median_hwrb_oracle(std::uint64_t seed = kSeed) {
  PropertyResult r{"median and HWRB match brute force"};
  std::mt19937_64 rng(seed ^ 0xb2);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_int_distribution<int> grid(-4, 12);  // quarter steps, hits exactly 1.0
  std::bernoulli_distribution missing(0.2);
  for (int i = 0; i < 2000; ++i) {
    MetricColumn col{"alg", MetricKind::hwrns, {}};
    std::vector<double> present;
    const auto n = size(rng);
    for (std::size_t g = 0; g < n; ++g) {
      if (missing(rng)) {
        col.entries[GameId::at(g)] = std::nullopt;
        continue;
      }
      const double v = grid(rng) * 0.25;
      present.push_back(v);
      col.entries[GameId::at(g)] = MetricValue{v, MetricKind::hwrns, std::nullopt};
    }
    if (present.empty()) continue;
    ++r.cases;
    if (median_metric(col) != oracle_median(present)) r.fail(fmt::format("median differs (case {})", i));
    const auto count = static_cast<std::size_t>(std::count_if(present.begin(), present.end(), [](double v) { return v >= 1.0; }));
    if (hwrb_count(col) != count) r.fail(fmt::format("hwrb differs (case {})", i));
    double sum = 0.0;
    for (double v : present) sum += v;
    if (std::abs(mean_metric(col).mean - sum / present.size()) > 1e-12) r.fail(fmt::format("mean differs (case {})", i));
  }
  return r;
}

inline std::string render_log(const std::vector<protocol::StepEvent>& steps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size();) {
    std::size_t j = i + 1;
    while (j < steps.size() && steps[j].reward == steps[i].reward && steps[j].lives == steps[i].lives &&
           steps[j].game_over == steps[i].game_over && steps[j].env_frames == steps[i].env_frames) {
      ++j;
    }
    const auto& s = steps[i];
    if (j - i > 1) os << "repeat " << (j - i) << ' ';
    os << format_number(s.reward) << ' ' << s.lives << ' ' << (s.game_over ? 1 : 0) << ' ' << s.env_frames << '\n';
    i = j;
  }
  return os.str();
}

// Covers both episode-return and frame-cap properties: every log is checked
// through accumulate_episode and through the text log reader.
inline PropertyResult check_episode_accounting(std::uint64_t seed = kSeed) {
  PropertyResult r{"episode return and frame cap match brute force"};
  std::mt19937_64 rng(seed ^ 0xc3);
  for (int i = 0; i < 1200; ++i) {
    const auto steps = random_episode(rng);
    const auto expect = oracle_episodes(steps);
    ++r.cases;
    const auto got = protocol::accumulate_episode(steps);
    if (expect.size() != 1) {
      r.fail(fmt::format("oracle produced {} episodes (case {})", expect.size(), i));
      continue;
    }
    if (got.episode_return != expect[0].ret) r.fail(fmt::format("return {} vs {} (case {})", got.episode_return, expect[0].ret, i));
    if (got.env_frames_used != expect[0].frames) r.fail(fmt::format("frames {} vs {} (case {})", got.env_frames_used, expect[0].frames, i));
    if (got.env_frames_used > protocol::kMaxEpisodeFrames) r.fail(fmt::format("episode over the cap (case {})", i));

    std::istringstream in(render_log(steps));
    const auto ledger = protocol::read_episode_log(in, "generated", {});
    if (ledger.episodes.empty() || ledger.episodes.front().episode_return != expect[0].ret ||
        ledger.episodes.front().env_frames_used != expect[0].frames) {
      r.fail(fmt::format("log reader disagrees (case {})", i));
    }
    for (const auto& e : ledger.episodes) {
      if (e.env_frames_used > protocol::kMaxEpisodeFrames) r.fail(fmt::format("log episode over the cap (case {})", i));
    }
  }
  return r;
}

inline PropertyResult check_sliding_window(std::uint64_t seed = kSeed) {
  PropertyResult r{"sliding-window training score matches brute force"};
  std::mt19937_64 rng(seed ^ 0xd4);
  std::uniform_int_distribution<std::size_t> len(1, 60);
  std::uniform_real_distribution<double> ret(-100.0, 1000.0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> returns(len(rng));
    for (auto& x : returns) x = ret(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, returns.size())(rng);
    ++r.cases;
    const auto got = protocol::training_score(returns, k);
    const auto expect = oracle_sliding(returns, k);
    if (got.series.size() != expect.size()) {
      r.fail(fmt::format("series length {} vs {} (case {})", got.series.size(), expect.size(), i));
      continue;
    }
    for (std::size_t j = 0; j < expect.size(); ++j) {
      if (std::abs(got.series[j] - expect[j]) > 1e-9 * (1.0 + std::abs(expect[j]))) {
        r.fail(fmt::format("window {} differs (case {})", j, i));
      }
    }
    if (got.final_score != got.series.back()) r.fail(fmt::format("final score is not the last window (case {})", i));
  }
  return r;
}

inline PropertyResult check_budget_monotone(std::uint64_t seed = kSeed) {
  PropertyResult r{"budget verdict monotone in frames"};
  std::mt19937_64 rng(seed ^ 0xe5);
  std::uniform_int_distribution<std::uint64_t> frames(1, 400'000'000);
  for (int i = 0; i < 1000; ++i) {
    ++r.cases;
    auto a = frames(rng), b = frames(rng);
    if (a > b) std::swap(a, b);
    auto ledger_with = [](std::uint64_t total) {
      protocol::RunLedger l;
      l.episodes.push_back({0.0, 1, protocol::Termination::game_over, 1, false});
      l.total_env_frames = total;
      return l;
    };
    const bool ok_a = protocol::check_budget(ledger_with(a)).conforming;
    const bool ok_b = protocol::check_budget(ledger_with(b)).conforming;
    if (ok_b && !ok_a) r.fail(fmt::format("{} fails but {} passes", a, b));
    if (ok_a != (a <= protocol::kDefaultFrameBudget)) r.fail(fmt::format("wrong verdict at {}", a));
  }
  return r;
}

}  // namespace hwrbench::testing
