#include "hwrbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "hwrbench/error.hpp"

namespace hwrbench {

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::raw: return "raw";
    case MetricKind::minmax: return "minmax";
    case MetricKind::hns: return "hns";
    case MetricKind::chns: return "chns";
    case MetricKind::hwrns: return "hwrns";
    case MetricKind::saber: return "saber";
  }
  return "?";
}

std::string_view to_string(CapMode mode) {
  return mode == CapMode::spec_floor ? "spec-floor" : "table-compat";
}

std::optional<MetricKind> parse_metric_kind(std::string_view text) {
  for (auto k : {MetricKind::raw, MetricKind::minmax, MetricKind::hns, MetricKind::chns,
                 MetricKind::hwrns, MetricKind::saber}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::optional<CapMode> parse_cap_mode(std::string_view text) {
  if (text == "spec-floor" || text == "spec_floor") return CapMode::spec_floor;
  if (text == "table-compat" || text == "table_compat") return CapMode::table_compat;
  return std::nullopt;
}

namespace {

void require_kind(const MetricValue& v, std::initializer_list<MetricKind> allowed,
                  std::string_view op) {
  if (std::ranges::find(allowed, v.kind) == allowed.end()) {
    throw std::invalid_argument(
        fmt::format("{} expects a different metric kind, got {}", op, to_string(v.kind)));
  }
}

}  // namespace

MetricValue normalize(double raw, double base, double reference, MetricKind kind) {
  const double denom = reference - base;
  if (denom == 0.0) {
    throw DataError(fmt::format("zero normalization denominator (reference = base = {})", base));
  }
  const double value = (raw - base) / denom;
  if (!std::isfinite(value)) {
    throw DataError(fmt::format("non-finite normalized score for raw {}", raw));
  }
  return MetricValue{value, kind, std::nullopt};
}

MinMaxResult min_max_scale(double raw, const ScoreScale& scale) {
  auto m = normalize(raw, scale.r_min, scale.r_max, MetricKind::minmax);
  const bool outside = raw < scale.r_min || raw > scale.r_max;
  if (outside) m.value = std::clamp(m.value, 0.0, 1.0);
  return MinMaxResult{m, outside};
}

MetricValue hns(double raw, const BaselineRecord& b) {
  return normalize(raw, b.random, b.human_average, MetricKind::hns);
}

MetricValue hwrns(double raw, const BaselineRecord& b) {
  return normalize(raw, b.random, b.human_world_record, MetricKind::hwrns);
}

MetricValue chns(const MetricValue& h) {
  require_kind(h, {MetricKind::hns, MetricKind::chns}, "chns");
  return MetricValue{std::clamp(h.value, 0.0, 1.0), MetricKind::chns, std::nullopt};
}

MetricValue saber(const MetricValue& h, CapMode mode) {
  require_kind(h, {MetricKind::hwrns, MetricKind::saber}, "saber");
  double v = std::min(h.value, kSaberCap);
  if (mode == CapMode::spec_floor) v = std::max(v, 0.0);
  return MetricValue{v, MetricKind::saber, mode};
}

bool hwrb_indicator(const MetricValue& h) {
  require_kind(h, {MetricKind::hwrns}, "hwrb_indicator");
  return h.value >= 1.0;
}

double game_time_days(std::uint64_t frames) { return static_cast<double>(frames) / kFramesPerDay; }

EfficiencyValue learning_efficiency(double metric_ratio, std::uint64_t frames) {
  if (frames == 0) throw DataError("learning efficiency needs a positive frame count");
  return EfficiencyValue{metric_ratio / static_cast<double>(frames), frames};
}

}  // namespace hwrbench
