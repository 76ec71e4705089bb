#include "buzzati/classical.hpp"

#include <cmath>

namespace buzzati::classical {

namespace {

double checked_power(double base, int exponent)
{
    const double value = std::pow(base, static_cast<double>(exponent));
    if (!std::isfinite(value)) {
        throw OverflowError("(1+2q)^" + std::to_string(exponent) + " overflows double range");
    }
    return value;
}

} // namespace

double first_trip_duration(double q, double t1)
{
    return 2.0 * q * t1;
}

double trip_duration(double q, double t1, int n)
{
    const double value = first_trip_duration(q, t1) * checked_power(1.0 + 2.0 * q, n - 1);
    if (!std::isfinite(value)) {
        throw OverflowError("trip duration overflows double range at tour " + std::to_string(n));
    }
    return value;
}

double departure_time(double q, double t1, int n)
{
    const double value = t1 * checked_power(1.0 + 2.0 * q, n - 1);
    if (!std::isfinite(value)) {
        throw OverflowError("departure time overflows double range at tour " + std::to_string(n));
    }
    return value;
}

double city_arrival_fraction(double q)
{
    return q / (1.0 + q);
}

ScheduleTable build_classical_schedule(const KinematicConfig& config,
                                       std::span<const CourierSpec> couriers,
                                       int tours)
{
    if (config.mode != Mode::Classical) {
        throw ModeMismatchError("classical schedule requested for a relativistic config");
    }
    validate(config);

    const double q = q_factor(config);
    const double arrival_factor = 1.0 + city_arrival_fraction(q);

    ScheduleTable table;
    table.config = config;
    table.num_couriers = static_cast<int>(couriers.size());
    table.num_tours = tours;
    table.records.reserve(couriers.size() * static_cast<std::size_t>(tours));

    for (int n = 1; n <= tours; ++n) {
        for (const CourierSpec& courier : couriers) {
            validate(courier);
            const double departure = departure_time(q, courier.first_departure, n);
            table.records.push_back({
                courier.index,
                n,
                departure,
                departure,
                departure,
                departure * arrival_factor,
            });
        }
    }
    return table;
}

} // namespace buzzati::classical
