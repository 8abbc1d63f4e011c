/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "orsched/errors.hpp"
#include "orsched/formulation.hpp"

namespace orsched {

namespace {

struct Cell {
  int room_type = 0;
  int day = 0;
  int available = 0;
  double duration = 0.0;
};

class Enumerator {
 public:
  explicit Enumerator(const Instance& instance) : instance_(instance) {
    const int I = instance.room_type_count();
    const int K = instance.day_count();
    J_ = instance.department_count();
    for (int i = 0; i < I; ++i) {
      const RoomType& rt = instance.room_types()[i];
      for (int k = 0; k < K; ++k) {
        cells_.push_back(Cell{i, k, rt.availability_by_day[k], rt.duration_by_day[k]});
      }
    }
    x_.assign(static_cast<size_t>(I) * J_ * K, 0);
    alloc_.assign(J_, 0.0);
  }

  OracleResult run() {
    double space = 1.0;
    for (const Cell& cell : cells_) {
      space *= std::pow(static_cast<double>(cell.available) + 1.0, J_);
      if (space > 1e7) {
        throw SearchSpaceError("enumeration space exceeds 1e7 schedules; instance is too large "
                               "for brute force");
      }
    }
    visit_cell(0);

    OracleResult result;
    if (best_key_ == no_schedule_) return result;
    result.feasible = true;
    result.primary = best_primary_;
    result.secondary = best_secondary_;
    result.room_values.assign(best_x_.begin(), best_x_.end());
    return result;
  }

 private:
  void visit_cell(size_t c) {
    if (c == cells_.size()) {
      score();
      return;
    }
    assign(c, 0, cells_[c].available);
  }

  void assign(size_t c, int j, int remaining) {
    if (j == J_) {
      visit_cell(c + 1);
      return;
    }
    const Cell& cell = cells_[c];
    const size_t idx = static_cast<size_t>(room_var_index(instance_, cell.room_type, j, cell.day));
    for (int count = 0; count <= remaining; ++count) {
      x_[idx] = count;
      alloc_[j] += cell.duration * count;
      assign(c, j + 1, remaining - count);
      alloc_[j] -= cell.duration * count;
    }
    x_[idx] = 0;
  }

  void score() {
    double primary = 0.0;
    double secondary = 0.0;
    for (int j = 0; j < J_; ++j) {
      const Department& dept = instance_.departments()[j];
      const double shortfall = std::max(0.0, dept.target_hours - alloc_[j]);
      if (shortfall > dept.under_limit) return;
      primary += shortfall / dept.target_hours;
      secondary += std::max(0.0, alloc_[j] - dept.target_hours);
    }
    const long long key = std::llround(primary * 1e12);
    if (key < best_key_ || (key == best_key_ && secondary < best_secondary_)) {
      best_key_ = key;
      best_primary_ = primary;
      best_secondary_ = secondary;
      best_x_ = x_;
    }
  }

  static constexpr long long no_schedule_ = std::numeric_limits<long long>::max();

  const Instance& instance_;
  int J_ = 0;
  std::vector<Cell> cells_;
  std::vector<int> x_;
  std::vector<double> alloc_;
  long long best_key_ = no_schedule_;
  double best_primary_ = 0.0;
  double best_secondary_ = 0.0;
  std::vector<int> best_x_;
};

}  // namespace

OracleResult brute_force(const Instance& instance) {
  Enumerator enumerator(instance);
  return enumerator.run();
}

}  // namespace orsched
