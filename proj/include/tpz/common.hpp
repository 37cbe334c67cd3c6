#ifndef TPZ_COMMON_HPP
#define TPZ_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tpz {

// Thrown when an exact solver is asked for an instance beyond its configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by distance-dependent operations on disconnected input.
struct DisconnectedGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a per-call time budget runs out mid-search.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 1-based display name of an internal 0-based vertex.
inline std::string vertex_name(int v) { return "x" + std::to_string(v + 1); }

// Common solver knobs. threads <= 1 selects the serial reference path;
// larger values opt into the OpenMP kernels (same value, witness may differ).
// budget_seconds == 0 means unlimited.
struct SearchOptions {
  int threads = 1;
  double budget_seconds = 0.0;
};

// Deadline helper derived from SearchOptions at solver entry.
class Deadline {
public:
  Deadline() = default;
  explicit Deadline(double budget_seconds) {
    if (budget_seconds > 0.0) {
      armed_ = true;
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(budget_seconds));
    }
  }
  bool expired() const {
    return armed_ && std::chrono::steady_clock::now() >= end_;
  }
  void check(const char* what) const {
    if (expired()) throw BudgetExceeded(what);
  }

private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point end_{};
};

}  // namespace tpz

#endif
