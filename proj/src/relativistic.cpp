#include "buzzati/relativistic.hpp"

#include <cmath>

#include "buzzati/classical.hpp"

namespace buzzati::relativistic {

namespace {

void require_relativistic(const KinematicConfig& config)
{
    if (config.mode != Mode::Relativistic) {
        throw ModeMismatchError("operation requires a relativistic config");
    }
}

} // namespace

DilationFactors dilation_factors(const KinematicConfig& config)
{
    require_relativistic(config);
    validate(config);
    if (config.courier_speed >= 1.0) {
        throw SuperluminalError("courier beta must be < 1 for proper-time factors; "
                                "light-speed couriers are handled by em_limit_city_time");
    }
    DilationFactors factors;
    factors.root_c = std::sqrt(1.0 - config.convoy_speed * config.convoy_speed);
    factors.root_m = std::sqrt(1.0 - config.courier_speed * config.courier_speed);
    factors.ratio = factors.root_m / factors.root_c;
    return factors;
}

double city_frame_departure(const KinematicConfig& config, double t1, int n)
{
    const DilationFactors factors = dilation_factors(config);
    return classical::departure_time(q_factor(config), t1, n) / factors.root_c;
}

double caravan_proper_departure(const KinematicConfig& config, double t1, int n)
{
    return classical::departure_time(q_factor(config), t1, n);
}

double messenger_proper_departure(const KinematicConfig& config, double t1, int n)
{
    const DilationFactors factors = dilation_factors(config);
    const double departure = classical::departure_time(q_factor(config), t1, n);
    return t1 + factors.ratio * (departure - t1);
}

double messenger_proper_at_city(const KinematicConfig& config, double t1, int n)
{
    const DilationFactors factors = dilation_factors(config);
    const double q = q_factor(config);
    const double departure = classical::departure_time(q, t1, n);
    const double arrival_factor = 1.0 + classical::city_arrival_fraction(q);
    return t1 + factors.ratio * (departure * arrival_factor - t1);
}

double em_limit_city_time(double beta_c, double t1, int n)
{
    return t1 * (1.0 + 2.0 * (n - 1) * beta_c);
}

ScheduleTable build_relativistic_schedule(const KinematicConfig& config,
                                          std::span<const CourierSpec> couriers,
                                          int tours)
{
    require_relativistic(config);
    dilation_factors(config); // rejects invalid and light-speed configs up front

    ScheduleTable table;
    table.config = config;
    table.num_couriers = static_cast<int>(couriers.size());
    table.num_tours = tours;
    table.records.reserve(couriers.size() * static_cast<std::size_t>(tours));

    for (int n = 1; n <= tours; ++n) {
        for (const CourierSpec& courier : couriers) {
            validate(courier);
            const double t1 = courier.first_departure;
            table.records.push_back({
                courier.index,
                n,
                caravan_proper_departure(config, t1, n),
                city_frame_departure(config, t1, n),
                messenger_proper_departure(config, t1, n),
                messenger_proper_at_city(config, t1, n),
            });
        }
    }
    return table;
}

} // namespace buzzati::relativistic
