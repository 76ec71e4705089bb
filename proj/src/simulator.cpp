#include "buzzati/simulator.hpp"

#include <cmath>

namespace buzzati::sim {

const char* to_string(LegKind kind)
{
    switch (kind) {
    case LegKind::DepartCaravan: return "depart_caravan";
    case LegKind::ArriveCity: return "arrive_city";
    case LegKind::DepartCity: return "depart_city";
    case LegKind::ArriveCaravan: return "arrive_caravan";
    }
    return "unknown";
}

double intercept_return(double depart_time, double convoy_speed, double courier_speed)
{
    // Courier position: x(t) = x0 - courier_speed * (t - depart_time),
    // with x0 the convoy position at departure. Solve x(t) = 0.
    const double start_position = convoy_speed * depart_time;
    return depart_time + start_position / courier_speed;
}

double intercept_catchup(double depart_city_time, double convoy_speed, double courier_speed)
{
    const double closing_speed = courier_speed - convoy_speed;
    if (!(closing_speed > 0.0)) {
        throw SpeedOrderError("no intercept: courier is not faster than the convoy");
    }
    // Separation at departure is the convoy's absolute position; the gap
    // shrinks at the closing speed.
    const double separation = convoy_speed * depart_city_time;
    return depart_city_time + separation / closing_speed;
}

namespace {

struct ProperRates {
    double convoy = 1.0;
    double courier = 1.0;
};

ProperRates proper_rates(const KinematicConfig& config)
{
    if (config.mode == Mode::Classical) {
        return {1.0, 1.0}; // one universal clock
    }
    if (config.courier_speed >= 1.0) {
        throw SuperluminalError("cannot accumulate proper time for a light-speed courier");
    }
    return {
        std::sqrt(1.0 - config.convoy_speed * config.convoy_speed),
        std::sqrt(1.0 - config.courier_speed * config.courier_speed),
    };
}

class CourierRun {
public:
    CourierRun(const KinematicConfig& config, const CourierSpec& spec,
               const ProperRates& rates, SimulationResult& out)
        : config_(config), spec_(spec), rates_(rates), out_(out)
    {
    }

    void advance(int tours)
    {
        // Until the first departure the courier rides with the convoy,
        // so both the event time and the proper total come from the
        // convoy's clock.
        double now = spec_.first_departure;
        if (config_.mode == Mode::Relativistic) {
            now = spec_.first_departure / rates_.convoy;
        }
        proper_ = rates_.convoy * now;
        emit(LegKind::DepartCaravan, now, convoy_position(now));

        for (int tour = 1; tour < tours; ++tour) {
            const double at_city = intercept_return(now, config_.convoy_speed, config_.courier_speed);
            ride_to(at_city, now);
            emit(LegKind::ArriveCity, at_city, 0.0);
            emit(LegKind::DepartCity, at_city, 0.0);

            const double at_convoy =
                intercept_catchup(at_city, config_.convoy_speed, config_.courier_speed);
            ride_to(at_convoy, at_city);
            emit(LegKind::ArriveCaravan, at_convoy, convoy_position(at_convoy));
            emit(LegKind::DepartCaravan, at_convoy, convoy_position(at_convoy));
            now = at_convoy;
        }
    }

private:
    double convoy_position(double time) const { return config_.convoy_speed * time; }

    void ride_to(double time, double from)
    {
        if (!std::isfinite(time)) {
            throw OverflowError("simulated event time left double range for courier "
                                + std::to_string(spec_.index));
        }
        proper_ += (time - from) * rates_.courier;
    }

    void emit(LegKind kind, double time, double position)
    {
        out_.events.push_back({time, position, spec_.index, kind});
        out_.clocks.push_back({spec_.index, proper_});
    }

    const KinematicConfig& config_;
    const CourierSpec& spec_;
    const ProperRates& rates_;
    SimulationResult& out_;
    double proper_ = 0.0;
};

} // namespace

SimulationResult simulate(const KinematicConfig& config,
                          std::span<const CourierSpec> couriers,
                          int tours)
{
    validate(config);
    const ProperRates rates = proper_rates(config);

    SimulationResult result;
    if (tours < 1) {
        return result;
    }
    result.events.reserve(couriers.size() * static_cast<std::size_t>(4 * tours - 3));
    result.clocks.reserve(result.events.capacity());

    // Couriers never interact; simulating them one after the other
    // already yields the (courier_index, time) merge order.
    for (const CourierSpec& spec : couriers) {
        validate(spec);
        CourierRun run(config, spec, rates, result);
        run.advance(tours);
    }
    return result;
}

} // namespace buzzati::sim
