/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <vector>

#include "orsched/instance.hpp"

namespace orsched {

// Ground truth from full enumeration. `primary` is the weighted shortfall
// minimum; `secondary` is the least total over-allocation among schedules
// whose primary value ties the minimum (compared after rounding to 1e-12).
struct OracleResult {
  bool feasible = false;
  double primary = 0.0;
  double secondary = 0.0;
  std::vector<double> room_values;  // a schedule attaining both minima
};

// Enumerates every integer schedule, cell by cell: for each (room type, day)
// the room counts across departments form a composition of at most the
// available count. Refuses with SearchSpaceError when the bound
// prod over (i,k) of (a_ik + 1)^J exceeds 1e7.
OracleResult brute_force(const Instance& instance);

}  // namespace orsched
