#pragma once

#include <span>

#include "buzzati/core.hpp"

namespace buzzati::classical {

/// Duration of a courier's first round trip: 2 * q * t1.
/// The courier must cover twice the convoy's head start plus whatever
/// ground the convoy gains while the courier is under way.
double first_trip_duration(double q, double t1);

/// Duration of the n-th round trip: 2 * q * t1 * (1 + 2q)^(n-1).
/// Throws OverflowError if the value leaves double range.
double trip_duration(double q, double t1, int n);

/// Convoy-clock time of the n-th departure: t1 * (1 + 2q)^(n-1).
/// Computed directly from the closed form, so requesting tour n does not
/// depend on earlier tours. Throws OverflowError on double overflow.
double departure_time(double q, double t1, int n);

/// Fraction of the departure time a courier needs to ride back to the
/// base: q / (1 + q), which equals convoy_speed / courier_speed.
double city_arrival_fraction(double q);

/// Full M x N grid of departure records for a Classical config.
/// All clocks agree classically, so the three departure fields of each
/// record are equal; courier_proper_at_city carries the base-arrival
/// time departure * (1 + q/(1+q)).
/// Throws ModeMismatchError for a Relativistic config.
ScheduleTable build_classical_schedule(const KinematicConfig& config,
                                       std::span<const CourierSpec> couriers,
                                       int tours);

} // namespace buzzati::classical
