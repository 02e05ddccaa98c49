#pragma once

#include <cstdint>
#include <string>

#include "edgemesh/net/endpoint.hpp"

namespace edgemesh::core {

// Identity plus the two service addresses of one peer node.
struct NodeRef {
    std::string node_id;
    net::Endpoint controller_address;
    net::Endpoint service_address;

    bool operator==(const NodeRef&) const = default;
};

// Battery and per-slot cost parameters of one node. Energy is in abstract
// units per timeslot; scenarios use percentage points of capacity.
struct EnergyState {
    double battery_charge = 0.0;  // current charge, 0 <= charge <= capacity
    double capacity = 0.0;        // maximum battery capacity, > 0
    double solar_input = 0.0;     // harvested energy in the last stepped slot
    double compute_cost = 0.0;    // per slot per hosted microservice
    double network_cost = 0.0;    // per slot per offloaded microservice

    double pct() const { return capacity > 0 ? battery_charge / capacity * 100.0 : 0.0; }
};

// Microservice counts hosted on one node in one slot.
struct LoadState {
    int hosted_count = 0;             // total microservices running here
    int locally_initiated_count = 0;  // of those, initiated by this node
};

struct Horizon {
    int num_slots = 1;            // T
    std::int64_t slot_ms = 60000; // wall-clock duration of one slot in live mode
};

// Homogeneous microservice description.
struct WorkloadSpec {
    std::string image_ref;
    double service_time_ms = 0.0;
    double input_period_ms = 0.0;
    int count = 1;  // m
};

}  // namespace edgemesh::core
