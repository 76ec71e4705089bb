#include "buzzati/core.hpp"

#include <cmath>

namespace buzzati {

KinematicConfig validate(const KinematicConfig& config)
{
    if (!(config.convoy_speed > 0.0) || !(config.courier_speed > 0.0)) {
        throw NonPositiveError("speeds must be strictly positive (convoy="
                               + std::to_string(config.convoy_speed) + ", courier="
                               + std::to_string(config.courier_speed) + ")");
    }
    if (config.mode == Mode::Relativistic) {
        if (config.convoy_speed >= 1.0) {
            throw SuperluminalError("convoy beta must be < 1, got "
                                    + std::to_string(config.convoy_speed));
        }
        if (config.courier_speed > 1.0) {
            throw SuperluminalError("courier beta must be <= 1, got "
                                    + std::to_string(config.courier_speed));
        }
    }
    if (!(config.courier_speed > config.convoy_speed)) {
        throw SpeedOrderError("courier speed must exceed convoy speed (convoy="
                              + std::to_string(config.convoy_speed) + ", courier="
                              + std::to_string(config.courier_speed) + ")");
    }
    return config;
}

double q_factor(const KinematicConfig& config)
{
    return config.convoy_speed / (config.courier_speed - config.convoy_speed);
}

CourierSpec validate(const CourierSpec& spec)
{
    if (spec.index < 1) {
        throw NonPositiveError("courier index must be >= 1, got " + std::to_string(spec.index));
    }
    if (!(spec.first_departure > 0.0) || !std::isfinite(spec.first_departure)) {
        throw NonPositiveError("first departure must be a positive time, got "
                               + std::to_string(spec.first_departure));
    }
    return spec;
}

std::vector<CourierSpec> make_fleet(int count)
{
    std::vector<CourierSpec> fleet;
    fleet.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
    for (int i = 1; i <= count; ++i) {
        fleet.push_back({i, static_cast<double>(i + 1)});
    }
    return fleet;
}

const DepartureRecord& ScheduleTable::at(int tour, int courier_slot) const
{
    const auto row = static_cast<std::size_t>(tour - 1);
    const auto col = static_cast<std::size_t>(courier_slot);
    return records.at(row * static_cast<std::size_t>(num_couriers) + col);
}

} // namespace buzzati
