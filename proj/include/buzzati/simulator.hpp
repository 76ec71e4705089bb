#pragma once

#include <span>
#include <vector>

#include "buzzati/core.hpp"

// Event-driven kinematic oracle. Couriers and convoy move as piecewise
// linear motion on a ray from the base (the origin) in the city frame;
// every rendezvous is the root of a linear position equation and proper
// time accrues as segment duration times the dilation root. This module
// must stay independent of the closed forms it is used to check: no
// classical/relativistic includes, no progression powers. A test scans
// these sources for that boundary.

namespace buzzati::sim {

enum class LegKind { DepartCaravan, ArriveCity, DepartCity, ArriveCaravan };

const char* to_string(LegKind kind);

/// One simulator event in the city frame. Positions are in
/// speed-unit x days with the base at the origin.
struct LegEvent {
    double time_city = 0.0;
    double position = 0.0;
    int courier_index = 0;
    LegKind kind = LegKind::DepartCaravan;
};

/// Running proper-time total of one courier's clock.
struct ProperClock {
    int courier_index = 0;
    double elapsed_proper = 0.0;
};

/// Events in (courier_index, time) order; clocks[k] is the courier's
/// proper-clock snapshot at events[k].
struct SimulationResult {
    std::vector<LegEvent> events;
    std::vector<ProperClock> clocks;
};

/// City-frame arrival time at the base for a courier that leaves the
/// convoy at depart_time. The courier starts at the convoy's position
/// convoy_speed * depart_time and rides toward the origin.
double intercept_return(double depart_time, double convoy_speed, double courier_speed);

/// City-frame rendezvous time for a courier that leaves the base at
/// depart_city_time chasing the receding convoy. Throws SpeedOrderError
/// if courier_speed <= convoy_speed (no intercept exists).
double intercept_catchup(double depart_city_time, double convoy_speed, double courier_speed);

/// Advances each courier independently through its `tours`-th departure
/// from the convoy, emitting the DepartCaravan / ArriveCity / DepartCity /
/// ArriveCaravan cycle with a proper-clock snapshot per event.
///
/// Turnarounds are instantaneous, so an arrival and the following
/// departure share a timestamp. In Relativistic mode the first departure
/// falls at city time t1 / sqrt(1 - beta_c^2) (clocks synchronized when
/// the convoy left the base) and proper time accrues at sqrt(1 - beta^2)
/// per city-frame day; in Classical mode clocks simply agree.
/// Throws OverflowError if event times leave double range.
SimulationResult simulate(const KinematicConfig& config,
                          std::span<const CourierSpec> couriers,
                          int tours);

} // namespace buzzati::sim
