#pragma once

#include <chrono>

namespace sssp::detail {

// Monotonic phase timer: lap() returns seconds since the previous lap.
class Stopwatch {
 public:
  Stopwatch() : last_(std::chrono::steady_clock::now()) {}

  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_;
};

}  // namespace sssp::detail
