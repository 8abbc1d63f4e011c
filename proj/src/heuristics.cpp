/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace orsched {

namespace {

// Milli-hours. Exact for the quarter- and half-hour durations schedules use
// in practice; a final check in doubles guards the general case.
constexpr double kScale = 1000.0;
constexpr long kMaxTarget = 2'000'000;  // DP cutoff, 2000 hours

struct Cell {
  int room_type = 0;
  int day = 0;
  long value = 0;  // scaled duration
  int cap = 0;     // slots still open
};

}  // namespace

std::optional<Allocation> cover_schedule(const Instance& instance) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();

  std::vector<Cell> cells;
  for (int i = 0; i < I; ++i) {
    const auto& rt = instance.room_types()[i];
    for (int k = 0; k < K; ++k) {
      const long value = std::llround(rt.duration_by_day[k] * kScale);
      if (value <= 0) continue;
      cells.push_back({i, k, value, rt.availability_by_day[k]});
    }
  }
  const int C = static_cast<int>(cells.size());

  std::vector<int> order(J);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return instance.departments()[a].target_hours > instance.departments()[b].target_hours;
  });

  std::vector<double> schedule(static_cast<size_t>(I) * J * K, 0.0);
  for (const int j : order) {
    const auto& dept = instance.departments()[j];
    const long target = std::llround(std::ceil(dept.target_hours * kScale));
    if (target > kMaxTarget) return std::nullopt;
    if (target <= 0) continue;

    long dmax = 0;
    long reachable_total = 0;
    for (const Cell& cell : cells) {
      if (cell.cap <= 0) continue;
      dmax = std::max(dmax, cell.value);
      reachable_total += cell.value * cell.cap;
    }
    if (reachable_total < target) return std::nullopt;

    // A minimum-overshoot cover never exceeds the target by a full slot, so
    // values past target + dmax need no states.
    const long vmax = target + dmax;
    std::vector<uint8_t> reach(vmax + 1, 0);
    reach[0] = 1;
    // used[c][v]: slots of cell c in the first way found to reach v after
    // considering cells 0..c. Drives the reconstruction below.
    std::vector<std::vector<int32_t>> used(C, std::vector<int32_t>(vmax + 1, -1));
    for (int c = 0; c < C; ++c) {
      auto& used_c = used[c];
      for (long v = 0; v <= vmax; ++v) {
        if (reach[v]) used_c[v] = 0;
      }
      const long value = cells[c].value;
      const long cap = cells[c].cap;
      if (cap <= 0) continue;
      for (long v = std::min<long>(target - 1, vmax); v >= 0; --v) {
        if (used_c[v] != 0) continue;  // start only from carried states
        const long useful = (target - 1 - v) / value + 1;
        const long count = std::min(cap, useful);
        for (long n = 1; n <= count; ++n) {
          const long next = v + n * value;
          if (used_c[next] < 0) {
            used_c[next] = static_cast<int32_t>(n);
            reach[next] = 1;
          }
        }
      }
    }

    long best = -1;
    for (long v = target; v <= vmax; ++v) {
      if (reach[v]) {
        best = v;
        break;
      }
    }
    if (best < 0) return std::nullopt;

    double covered = 0.0;
    for (int c = C - 1; c >= 0; --c) {
      const int32_t n = used[c][best];
      if (n < 0) return std::nullopt;  // reconstruction broke; give up
      if (n > 0) {
        cells[c].cap -= n;
        best -= n * cells[c].value;
        const size_t at =
            (static_cast<size_t>(cells[c].room_type) * J + j) * K + cells[c].day;
        schedule[at] += n;
        covered += n * instance.room_types()[cells[c].room_type]
                           .duration_by_day[cells[c].day];
      }
    }

    // Fixed-point roundoff can leave a hair of shortfall on durations that
    // are not milli-hour exact; one extra slot settles it.
    if (covered < dept.target_hours) {
      int pick = -1;
      for (int c = 0; c < C; ++c) {
        if (cells[c].cap > 0 && (pick < 0 || cells[c].value > cells[pick].value)) pick = c;
      }
      if (pick < 0) return std::nullopt;
      cells[pick].cap -= 1;
      const size_t at =
          (static_cast<size_t>(cells[pick].room_type) * J + j) * K + cells[pick].day;
      schedule[at] += 1;
      covered += instance.room_types()[cells[pick].room_type].duration_by_day[cells[pick].day];
      if (covered < dept.target_hours) return std::nullopt;
    }
  }

  return Allocation(instance, std::move(schedule));
}

}  // namespace orsched
