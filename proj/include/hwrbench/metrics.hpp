#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hwrbench/baseline_registry.hpp"

namespace hwrbench {

enum class MetricKind { raw, minmax, hns, chns, hwrns, saber };

// How the SABER lower bound is applied. spec_floor clamps to [0, 2] as the
// formula states; table_compat only applies the upper cap of 2, which is
// what the published score tables print (they contain negative SABER cells).
enum class CapMode { spec_floor, table_compat };

std::string_view to_string(MetricKind kind);
std::string_view to_string(CapMode mode);
std::optional<MetricKind> parse_metric_kind(std::string_view text);
std::optional<CapMode> parse_cap_mode(std::string_view text);  // accepts '-' or '_'

// A dimensionless ratio; 1.0 means 100%. Percent is a presentation concern.
struct MetricValue {
  double value = 0.0;
  MetricKind kind = MetricKind::raw;
  std::optional<CapMode> cap_mode;  // set for saber only

  double percent() const { return value * 100.0; }
};

struct EfficiencyValue {
  double value;         // metric ratio per environment frame
  std::uint64_t frames;
};

inline constexpr double kSaberCap = 2.0;
inline constexpr double kFramesPerHalfHour = 108000.0;
inline constexpr double kFramesPerDay = kFramesPerHalfHour * 2.0 * 24.0;

// (raw - base) / (reference - base), uncapped. Throws DataError when
// reference == base or the result is not finite.
MetricValue normalize(double raw, double base, double reference, MetricKind kind);

struct MinMaxResult {
  MetricValue metric;
  bool clamped = false;  // raw was outside the declared scale
};
MinMaxResult min_max_scale(double raw, const ScoreScale& scale);

MetricValue hns(double raw, const BaselineRecord& baseline);
MetricValue hwrns(double raw, const BaselineRecord& baseline);

// Clamp to [0, 1]. Requires an hns value.
MetricValue chns(const MetricValue& h);
// Requires an hwrns value (or a saber value, making the cap idempotent).
MetricValue saber(const MetricValue& h, CapMode mode);
// HWRNS >= 1, inclusive.
bool hwrb_indicator(const MetricValue& h);

double game_time_days(std::uint64_t frames);

// Throws DataError when frames == 0.
EfficiencyValue learning_efficiency(double metric_ratio, std::uint64_t frames);

}  // namespace hwrbench
