#include "buzzati/verify.hpp"

#include <cmath>
#include <unordered_map>

#include "buzzati/classical.hpp"
#include "buzzati/relativistic.hpp"

namespace buzzati::sim {

namespace {

void record_error(ClockCheck& check, double simulated, double expected, int courier, int tour)
{
    const double scale = std::abs(expected) > 0.0 ? std::abs(expected) : 1.0;
    const double rel = std::abs(simulated - expected) / scale;
    ++check.samples;
    if (rel > check.max_rel_error) {
        check.max_rel_error = rel;
        check.courier = courier;
        check.tour = tour;
    }
}

} // namespace

VerificationReport verify_against_analytic(const KinematicConfig& config,
                                           std::span<const CourierSpec> couriers,
                                           int tours,
                                           double threshold)
{
    const bool relativistic = config.mode == Mode::Relativistic;
    const double q = q_factor(validate(config));
    const double arrival_factor = 1.0 + classical::city_arrival_fraction(q);

    std::unordered_map<int, double> first_departure;
    for (const CourierSpec& spec : couriers) {
        first_departure[spec.index] = spec.first_departure;
    }

    const SimulationResult run = simulate(config, couriers, tours);

    VerificationReport report;
    report.threshold = threshold;
    report.checks = {
        {"departure_time", 0.0, 0, 0, 0},
        {"courier_proper_at_departure", 0.0, 0, 0, 0},
        {"courier_proper_at_city", 0.0, 0, 0, 0},
    };
    ClockCheck& departures = report.checks[0];
    ClockCheck& proper_departures = report.checks[1];
    ClockCheck& proper_arrivals = report.checks[2];

    std::unordered_map<int, int> departs_seen;
    std::unordered_map<int, int> arrivals_seen;

    for (std::size_t k = 0; k < run.events.size(); ++k) {
        const LegEvent& event = run.events[k];
        const double proper = run.clocks[k].elapsed_proper;
        const double t1 = first_departure.at(event.courier_index);

        if (event.kind == LegKind::DepartCaravan) {
            const int n = ++departs_seen[event.courier_index];
            const double expected_time =
                relativistic ? relativistic::city_frame_departure(config, t1, n)
                             : classical::departure_time(q, t1, n);
            record_error(departures, event.time_city, expected_time, event.courier_index, n);

            const double expected_proper =
                relativistic ? relativistic::messenger_proper_departure(config, t1, n)
                             : classical::departure_time(q, t1, n);
            record_error(proper_departures, proper, expected_proper, event.courier_index, n);
        } else if (event.kind == LegKind::ArriveCity) {
            const int n = ++arrivals_seen[event.courier_index];
            const double expected_proper =
                relativistic ? relativistic::messenger_proper_at_city(config, t1, n)
                             : classical::departure_time(q, t1, n) * arrival_factor;
            record_error(proper_arrivals, proper, expected_proper, event.courier_index, n);
        }
    }

    for (const ClockCheck& check : report.checks) {
        if (check.max_rel_error > threshold) {
            report.pass = false;
        }
    }
    return report;
}

} // namespace buzzati::sim
