#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "hwrbench/baseline_registry.hpp"
#include "hwrbench/error.hpp"
#include "hwrbench/metrics.hpp"
#include "hwrbench/report.hpp"
#include "support/properties.hpp"

using namespace hwrbench;

namespace {

const BaselineRegistry& reg() {
  static const auto r = BaselineRegistry::load(HWRBENCH_DATA_DIR "/baselines.csv");
  return r;
}

MetricValue hw(double v) { return MetricValue{v, MetricKind::hwrns, std::nullopt}; }
MetricValue hn(double v) { return MetricValue{v, MetricKind::hns, std::nullopt}; }

}  // namespace

TEST_CASE("hns and hwrns for published cells") {
  const auto& alien = reg().lookup("alien");
  const auto h = hns(9491.7, alien);
  CHECK(h.kind == MetricKind::hns);
  CHECK(h.value == doctest::Approx((9491.7 - 227.8) / (7127.8 - 227.8)).epsilon(1e-15));
  CHECK(format_percent(h.value) == "134.26");
  CHECK(format_percent(hwrns(9491.7, alien).value) == "3.68");

  const auto& boxing = reg().lookup("boxing");
  CHECK(format_percent(hns(100, boxing).value) == "832.50");
  CHECK(hwrns(100, boxing).value == 1.0);
}

TEST_CASE("normalize reports degenerate references") {
  CHECK_THROWS_AS(normalize(1.0, 5.0, 5.0, MetricKind::hns), DataError);
  CHECK_THROWS_AS(normalize(std::numeric_limits<double>::infinity(), 0.0, 1.0, MetricKind::hns),
                  DataError);
  CHECK(normalize(3.0, 1.0, 5.0, MetricKind::hwrns).value == 0.5);
}

TEST_CASE("min-max scale clamps only outside the declared range") {
  const auto s = pong_scale();
  auto r = min_max_scale(0.0, s);
  CHECK(r.metric.value == 0.5);
  CHECK_FALSE(r.clamped);
  r = min_max_scale(21.0, s);
  CHECK(r.metric.value == 1.0);
  CHECK_FALSE(r.clamped);
  r = min_max_scale(30.0, s);
  CHECK(r.metric.value == 1.0);
  CHECK(r.clamped);
  r = min_max_scale(-25.0, s);
  CHECK(r.metric.value == 0.0);
  CHECK(r.clamped);
}

TEST_CASE("chns clamps to the unit interval") {
  CHECK(chns(hn(-0.3)).value == 0.0);
  CHECK(chns(hn(0.4)).value == 0.4);
  CHECK(chns(hn(8.325)).value == 1.0);
  CHECK(chns(hn(0.4)).kind == MetricKind::chns);
  CHECK_THROWS_AS(chns(hw(0.4)), std::invalid_argument);
}

TEST_CASE("saber cap modes") {
  CHECK(saber(hw(3.5), CapMode::spec_floor).value == 2.0);
  CHECK(saber(hw(3.5), CapMode::table_compat).value == 2.0);
  CHECK(saber(hw(-0.2), CapMode::spec_floor).value == 0.0);
  CHECK(saber(hw(-0.2), CapMode::table_compat).value == -0.2);
  CHECK(saber(hw(0.7), CapMode::spec_floor).cap_mode == CapMode::spec_floor);
  CHECK_THROWS_AS(saber(hn(0.7), CapMode::spec_floor), std::invalid_argument);
}

TEST_CASE("published negative SABER cell needs table-compat mode") {
  // LASER skiing: raw -29968.4, printed SABER -93.09.
  const auto w = hwrns(-29968.4, reg().lookup("skiing"));
  CHECK(format_percent(saber(w, CapMode::table_compat).value) == "-93.09");
  CHECK(saber(w, CapMode::spec_floor).value == 0.0);
}

TEST_CASE("hwrb indicator is inclusive") {
  CHECK(hwrb_indicator(hw(1.0)));
  CHECK(hwrb_indicator(hw(1.7)));
  CHECK_FALSE(hwrb_indicator(hw(std::nextafter(1.0, 0.0))));
  CHECK_THROWS_AS(hwrb_indicator(hn(2.0)), std::invalid_argument);
}

TEST_CASE("game time and learning efficiency") {
  CHECK(game_time_days(200'000'000) == doctest::Approx(2e8 / (108000.0 * 48.0)));
  CHECK(fmt::format("{:.2f}", game_time_days(200'000'000)) == "38.58");
  CHECK(fmt::format("{:.1f}", game_time_days(100'000'000'000)) == "19290.1");
  CHECK(learning_efficiency(8.7397, 200'000'000).value == doctest::Approx(8.7397 / 2e8));
  CHECK(format_efficiency(learning_efficiency(8.7397, 200'000'000).value) == "4.37E-08");
  CHECK_THROWS_AS(learning_efficiency(1.0, 0), DataError);
}

TEST_CASE("metric and cap mode names") {
  CHECK(parse_metric_kind("hwrns") == MetricKind::hwrns);
  CHECK_FALSE(parse_metric_kind("score"));
  CHECK(parse_cap_mode("table-compat") == CapMode::table_compat);
  CHECK(parse_cap_mode("spec_floor") == CapMode::spec_floor);
  CHECK(to_string(CapMode::spec_floor) == "spec-floor");
}

TEST_CASE("percent formatting rounds half up") {
  CHECK(format_percent(0.125) == "12.50");
  CHECK(format_percent(1.0 / 3.0) == "33.33");
  CHECK(format_percent(0.0000499) == "0.00");
  CHECK(format_percent(-0.0000001) == "0.00");
  CHECK(format_percent(-0.0353) == "-3.53");
}

TEST_CASE("property: cap idempotence and range in both modes") {
  const auto r = testing::check_cap_invariants();
  CHECK(r.cases >= 1000);
  for (const auto& f : r.failures) FAIL_CHECK(f);
}
