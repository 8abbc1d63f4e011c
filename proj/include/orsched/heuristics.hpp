/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>

#include "orsched/instance.hpp"

namespace orsched {

// Deterministic constructive schedule: integer room counts covering every
// department's target with no shortfall, or nullopt when the construction
// does not find one. Departments are served in descending target order;
// each takes a minimum-overshoot combination of the remaining slots, found
// by dynamic programming over durations in fixed point. Intended to seed
// branch and bound with an incumbent; completeness never depends on it.
std::optional<Allocation> cover_schedule(const Instance& instance);

}  // namespace orsched
