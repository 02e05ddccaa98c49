#pragma once

#include <span>

#include "edgemesh/core/types.hpp"

namespace edgemesh::core {

// Whether a node keeps functioning through a slot: 0 iff the harvested
// energy plus the residual charge does not cover the slot's consumption.
int activity_indicator(double solar_input, double prev_charge, double consumption);

// Total energy a node draws in one slot. Locally initiated microservices
// pay only the compute cost; offloaded ones add the networking surcharge.
// Requires local <= hosted.
double slot_consumption(double compute_cost, double network_cost, int hosted, int local);

// Number of active slots in an indicator sequence.
int operative_time(std::span<const int> indicators);

struct BatteryStep {
    EnergyState state;  // updated charge; solar_input records this slot's input
    int active = 0;     // the slot's activity indicator
};

// Advance one slot: charge from solar, clamp to capacity, then decide
// activity on the unclamped balance and draw consumption only when active.
// An inactive node runs nothing and keeps the (clamped) charge.
BatteryStep step_battery(const EnergyState& state, double solar_input, double consumption);

}  // namespace edgemesh::core
