#pragma once

#include <chrono>
#include <cstddef>
#include <ratio>
#include <span>

namespace pqchain {

/// Monotonic stopwatch reporting microseconds.
class Timer {
 public:
  using Clock = std::chrono::steady_clock;
  static_assert(Clock::is_steady);
  static_assert(std::ratio_less_equal_v<Clock::period, std::micro>,
                "benchmark clock must resolve at least one microsecond");

  Timer() : start_(Clock::now()) {}

  void restart() { start_ = Clock::now(); }

  double elapsed_us() const {
    return std::chrono::duration<double, std::micro>(Clock::now() - start_).count();
  }

  static constexpr double resolution_us() {
    return static_cast<double>(Clock::period::num) * 1e6 / static_cast<double>(Clock::period::den);
  }

 private:
  Clock::time_point start_;
};

struct TimingStats {
  double mean_us = 0;
  double min_us = 0;
  double max_us = 0;
  std::size_t samples = 0;

  /// Throws std::invalid_argument for an empty sample set.
  static TimingStats from_samples(std::span<const double> samples_us);
};

}  // namespace pqchain
