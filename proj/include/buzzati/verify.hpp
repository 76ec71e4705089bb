#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "buzzati/core.hpp"
#include "buzzati/simulator.hpp"

namespace buzzati::sim {

/// Worst relative disagreement seen for one clock kind, with the
/// (courier, tour) cell it occurred in.
struct ClockCheck {
    std::string clock;
    double max_rel_error = 0.0;
    int courier = 0;
    int tour = 0;
    std::size_t samples = 0;
};

struct VerificationReport {
    double threshold = 0.0;
    bool pass = true;
    std::vector<ClockCheck> checks;
};

/// Runs the simulator and compares it against the closed forms:
/// DepartCaravan event times against the departure progression (city
/// frame in Relativistic mode), DepartCaravan proper clocks against the
/// courier-clock departure reading, and ArriveCity proper clocks against
/// the courier-clock base-arrival reading. Disagreement lands in the
/// report, never in an exception.
VerificationReport verify_against_analytic(const KinematicConfig& config,
                                           std::span<const CourierSpec> couriers,
                                           int tours,
                                           double threshold = 1e-9);

} // namespace buzzati::sim
