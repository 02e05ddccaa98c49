#include "edgemesh/core/energy.hpp"

#include <algorithm>
#include <stdexcept>

namespace edgemesh::core {

int activity_indicator(double solar_input, double prev_charge, double consumption) {
    return (solar_input + prev_charge - consumption) <= 0.0 ? 0 : 1;
}

double slot_consumption(double compute_cost, double network_cost, int hosted, int local) {
    if (local > hosted || local < 0 || hosted < 0)
        throw std::invalid_argument("slot_consumption: local count exceeds hosted count");
    return compute_cost * local + (compute_cost + network_cost) * (hosted - local);
}

int operative_time(std::span<const int> indicators) {
    int total = 0;
    for (int chi : indicators) total += chi != 0 ? 1 : 0;
    return total;
}

BatteryStep step_battery(const EnergyState& state, double solar_input, double consumption) {
    BatteryStep step;
    step.state = state;
    step.state.solar_input = solar_input;
    double charged = std::min(state.capacity, state.battery_charge + solar_input);
    step.active = activity_indicator(solar_input, state.battery_charge, consumption);
    if (step.active) {
        // The activity decision uses the unclamped balance; the stored charge
        // stays within [0, capacity] even when the clamp ate part of the input.
        step.state.battery_charge = std::clamp(charged - consumption, 0.0, state.capacity);
    } else {
        step.state.battery_charge = charged;
    }
    return step;
}

}  // namespace edgemesh::core
