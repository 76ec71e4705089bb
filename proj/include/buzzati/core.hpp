#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace buzzati {

/// Kinematic regime: Classical speeds are arbitrary positive numbers in a
/// shared unit; Relativistic speeds are fractions of c (beta values).
enum class Mode { Classical, Relativistic };

class KinematicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A speed (or first-departure time) that must be strictly positive is not.
class NonPositiveError : public KinematicError {
public:
    using KinematicError::KinematicError;
};

/// courier_speed <= convoy_speed: the convoy can never be caught.
class SpeedOrderError : public KinematicError {
public:
    using KinematicError::KinematicError;
};

/// Relativistic speed at or beyond c where the model forbids it.
class SuperluminalError : public KinematicError {
public:
    using KinematicError::KinematicError;
};

/// An operation received a config in the wrong kinematic mode.
class ModeMismatchError : public KinematicError {
public:
    using KinematicError::KinematicError;
};

/// A schedule value left double-precision range.
class OverflowError : public KinematicError {
public:
    using KinematicError::KinematicError;
};

/// Convoy and courier speeds plus the regime they are interpreted in.
/// The single source of truth for the chase ratio q.
struct KinematicConfig {
    Mode mode = Mode::Classical;
    double convoy_speed = 0.0;
    double courier_speed = 0.0;
};

/// Checks the config invariants and returns the config unchanged.
///
/// Throws NonPositiveError if any speed is <= 0, SuperluminalError in
/// Relativistic mode if convoy_speed >= 1 or courier_speed > 1, and
/// SpeedOrderError if courier_speed <= convoy_speed. courier_speed == 1
/// passes validation in Relativistic mode; individual operations that
/// cannot handle light-speed couriers reject it themselves.
KinematicConfig validate(const KinematicConfig& config);

/// Chase ratio q = convoy_speed / (courier_speed - convoy_speed).
/// Governs the growth rate 1 + 2q of the departure-time progression.
/// Expects a validated config.
double q_factor(const KinematicConfig& config);

/// One courier: its 1-based index and first departure time in days,
/// measured on the convoy's clock.
struct CourierSpec {
    int index = 1;
    double first_departure = 0.0;
};

/// Throws NonPositiveError if first_departure <= 0 or index < 1.
CourierSpec validate(const CourierSpec& spec);

/// Fleet of `count` couriers with the conventional staggered start:
/// courier i departs (i + 1) days after the convoy.
std::vector<CourierSpec> make_fleet(int count);

/// The four clock readings attached to one (courier, tour) cell.
/// In Classical mode the first three coincide.
struct DepartureRecord {
    int courier_index = 0;
    int tour = 0;
    double caravan_proper = 0.0;         // departure, convoy clock
    double city_frame = 0.0;             // departure, city frame
    double courier_proper = 0.0;         // departure, courier clock
    double courier_proper_at_city = 0.0; // base arrival (courier clock;
                                         // city frame in Classical mode)
};

/// Complete M x N grid of DepartureRecords, row-major by tour
/// (tour 1 for every courier, then tour 2, ...).
struct ScheduleTable {
    KinematicConfig config;
    std::vector<DepartureRecord> records;
    double year_length_days = 365.0; // display conversion only
    int num_couriers = 0;
    int num_tours = 0;

    const DepartureRecord& at(int tour, int courier_slot) const;
};

} // namespace buzzati
