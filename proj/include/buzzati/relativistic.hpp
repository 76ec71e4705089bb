#pragma once

#include <span>

#include "buzzati/core.hpp"

namespace buzzati::relativistic {

/// Per-segment proper-time rates for the two constant speeds.
/// ratio = root_m / root_c is the coefficient that scales the courier's
/// geometric progression relative to the convoy's.
struct DilationFactors {
    double root_c = 1.0; // sqrt(1 - beta_c^2)
    double root_m = 1.0; // sqrt(1 - beta_m^2)
    double ratio = 1.0;  // root_m / root_c, in (0, 1) for valid configs
};

/// Throws ModeMismatchError for Classical configs and SuperluminalError
/// for beta_m == 1 (light-speed couriers have no proper time; use
/// em_limit_city_time for that regime).
DilationFactors dilation_factors(const KinematicConfig& config);

/// City-frame time of the n-th departure:
/// t1 * (1 + 2q)^(n-1) / sqrt(1 - beta_c^2).
double city_frame_departure(const KinematicConfig& config, double t1, int n);

/// Convoy-clock time of the n-th departure. Identical to the classical
/// closed form; exposed so the four clocks of a record can be read from
/// one module.
double caravan_proper_departure(const KinematicConfig& config, double t1, int n);

/// Courier-clock time of the n-th departure. The courier rides with the
/// convoy until its first departure and at beta_m afterwards, so
///   t1 + ratio * (t1 * (1 + 2q)^(n-1) - t1).
/// Equals the convoy clock exactly at n = 1.
double messenger_proper_departure(const KinematicConfig& config, double t1, int n);

/// Courier-clock time on reaching the base during the n-th tour: the
/// departure reading plus the dilated return leg,
///   t1 + ratio * (t1 * (1 + 2q)^(n-1) * (1 + q/(1+q)) - t1).
double messenger_proper_at_city(const KinematicConfig& config, double t1, int n);

/// City-frame exchange time when couriers are light signals (beta_m = 1),
/// to first order in beta_c: t1 * (1 + 2 * (n-1) * beta_c).
/// The caller owns the judgment that beta_c is small enough for the
/// expansion to be useful; nothing is clamped here.
double em_limit_city_time(double beta_c, double t1, int n);

/// Full M x N grid of records with all four clocks populated from the
/// operations above. Throws ModeMismatchError for Classical configs.
ScheduleTable build_relativistic_schedule(const KinematicConfig& config,
                                          std::span<const CourierSpec> couriers,
                                          int tours);

} // namespace buzzati::relativistic
