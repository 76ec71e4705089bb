#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "buzzati/classical.hpp"
#include "buzzati/relativistic.hpp"

using namespace buzzati;
using namespace buzzati::relativistic;

namespace {

const KinematicConfig kDefault = {Mode::Relativistic, 0.5, 0.75};

// Exact city-frame exchange time for light-signal couriers; the
// first-order form is checked against this.
double exact_light_signal_time(double beta_c, double t1, int n)
{
    const double gamma = 1.0 / std::sqrt(1.0 - beta_c * beta_c);
    return t1 * gamma * std::pow((1.0 + beta_c) / (1.0 - beta_c), n - 1);
}

} // namespace

TEST_CASE("dilation factors for the default config")
{
    const DilationFactors factors = dilation_factors(kDefault);
    CHECK(factors.root_c == std::sqrt(0.75));
    CHECK(factors.root_m == std::sqrt(1.0 - 0.75 * 0.75));
    CHECK(factors.ratio == doctest::Approx(std::sqrt(7.0 / 12.0)).epsilon(1e-15));
    CHECK(factors.ratio == doctest::Approx(0.7637626).epsilon(1e-7));
    CHECK(factors.root_c == doctest::Approx(0.8660254).epsilon(1e-7));
}

TEST_CASE("dilation factors approach unity at crawling speeds")
{
    const DilationFactors factors = dilation_factors({Mode::Relativistic, 1e-12, 1.5e-12});
    CHECK(factors.ratio == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dilation factor ordering holds across valid configs")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> lo(0.001, 0.98);
    for (int trial = 0; trial < 300; ++trial) {
        const double beta_c = lo(rng);
        std::uniform_real_distribution<double> hi(beta_c + 1e-4, 0.999);
        const double beta_m = hi(rng);
        const DilationFactors factors = dilation_factors({Mode::Relativistic, beta_c, beta_m});
        CHECK(factors.root_m > 0.0);
        CHECK(factors.root_m < factors.root_c);
        CHECK(factors.root_c < 1.0);
        CHECK(factors.ratio > 0.0);
        CHECK(factors.ratio < 1.0);
    }
}

TEST_CASE("mode and light-speed guards")
{
    CHECK_THROWS_AS(dilation_factors({Mode::Classical, 1.0, 1.5}), ModeMismatchError);
    CHECK_THROWS_AS(city_frame_departure({Mode::Classical, 1.0, 1.5}, 5.0, 2),
                    ModeMismatchError);
    CHECK_THROWS_AS(messenger_proper_departure({Mode::Classical, 1.0, 1.5}, 5.0, 2),
                    ModeMismatchError);
    CHECK_THROWS_AS(build_relativistic_schedule({Mode::Classical, 1.0, 1.5}, make_fleet(1), 2),
                    ModeMismatchError);

    // beta_m = 1 passes config validation but has no proper-time factors.
    CHECK_THROWS_AS(dilation_factors({Mode::Relativistic, 0.5, 1.0}), SuperluminalError);
    CHECK_THROWS_AS(messenger_proper_at_city({Mode::Relativistic, 0.5, 1.0}, 5.0, 2),
                    SuperluminalError);
}

TEST_CASE("city-frame departures for messenger 4")
{
    CHECK(city_frame_departure(kDefault, 5.0, 1) == doctest::Approx(5.7735).epsilon(1e-4));
    CHECK(city_frame_departure(kDefault, 5.0, 3) == doctest::Approx(144.3376).epsilon(1e-6));
    CHECK(city_frame_departure(kDefault, 5.0, 3)
          == doctest::Approx(125.0 / std::sqrt(0.75)).epsilon(1e-15));
}

TEST_CASE("city-frame departures reduce to the universal clock at low speed")
{
    const KinematicConfig slow = {Mode::Relativistic, 1e-9, 1.5e-9};
    for (int n = 1; n <= 6; ++n) {
        CHECK(city_frame_departure(slow, 2.0, n)
              == doctest::Approx(classical::departure_time(2.0, 2.0, n)).epsilon(1e-12));
    }
}

TEST_CASE("convoy-clock departures are the classical progression")
{
    CHECK(caravan_proper_departure(kDefault, 5.0, 2) == 25.0);
    CHECK(caravan_proper_departure(kDefault, 5.0, 7) == 78125.0);
    CHECK(caravan_proper_departure(kDefault, 5.0, 7) / 365.0
          == doctest::Approx(214.0).epsilon(1e-3));
    CHECK(caravan_proper_departure(kDefault, 5.0, 1) == 5.0);
}

TEST_CASE("courier-clock departures for messenger 4")
{
    const double ratio = std::sqrt(7.0 / 12.0);

    CHECK(messenger_proper_departure(kDefault, 5.0, 1) == 5.0); // exact at n = 1
    CHECK(messenger_proper_departure(kDefault, 5.0, 2)
          == doctest::Approx(5.0 + ratio * 20.0).epsilon(1e-14));
    CHECK(messenger_proper_departure(kDefault, 5.0, 2) == doctest::Approx(20.3).epsilon(5e-3));

    // Tour 5 lands near 6.5 years on the courier's clock.
    const double tour5 = messenger_proper_departure(kDefault, 5.0, 5);
    CHECK(tour5 == doctest::Approx(ratio * 3125.0 + (1.0 - ratio) * 5.0).epsilon(1e-13));
    CHECK(std::abs(tour5 / 365.0 - 6.5) < 0.2);
}

TEST_CASE("courier clock at the base for messenger 4")
{
    CHECK(messenger_proper_at_city(kDefault, 5.0, 1) == doctest::Approx(7.546).epsilon(1e-3));
    CHECK(messenger_proper_at_city(kDefault, 5.0, 3) == doctest::Approx(160.3).epsilon(1e-3));

    const KinematicConfig slow = {Mode::Relativistic, 1e-9, 1.5e-9};
    for (int n = 1; n <= 6; ++n) {
        const double classical_arrival = classical::departure_time(2.0, 5.0, n) * (5.0 / 3.0);
        CHECK(messenger_proper_at_city(slow, 5.0, n)
              == doctest::Approx(classical_arrival).epsilon(1e-12));
    }
}

TEST_CASE("non-relativistic reduction at fixed q")
{
    const double q = 2.0;
    for (const double eps : {1e-9, 1e-6}) {
        const KinematicConfig config = {Mode::Relativistic, eps, eps * (1.0 + q) / q};
        const double tolerance = 10.0 * eps * eps + 1e-12;
        for (const double t1 : {2.0, 5.0}) {
            for (int n = 1; n <= 7; ++n) {
                const double departure = classical::departure_time(q, t1, n);
                const double arrival = departure * (1.0 + classical::city_arrival_fraction(q));

                CHECK(std::abs(city_frame_departure(config, t1, n) - departure) / departure
                      <= tolerance);
                CHECK(std::abs(messenger_proper_departure(config, t1, n) - departure) / departure
                      <= tolerance);
                CHECK(std::abs(messenger_proper_at_city(config, t1, n) - arrival) / arrival
                      <= tolerance);
                CHECK(std::abs(caravan_proper_departure(config, t1, n) - departure) / departure
                      <= tolerance);
            }
        }
    }
}

TEST_CASE("twin-paradox ordering of the three departure clocks")
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> betas(0.01, 0.9);
    std::uniform_real_distribution<double> t1s(0.1, 20.0);

    for (int trial = 0; trial < 100; ++trial) {
        const double beta_c = betas(rng);
        std::uniform_real_distribution<double> faster(beta_c + 0.01, 0.99);
        const KinematicConfig config = {Mode::Relativistic, beta_c, faster(rng)};
        const double t1 = t1s(rng);

        const double mes1 = messenger_proper_departure(config, t1, 1);
        const double car1 = caravan_proper_departure(config, t1, 1);
        CHECK(std::abs(mes1 - car1) <= 1e-12 * car1);

        for (int n = 2; n <= 6; ++n) {
            const double mes = messenger_proper_departure(config, t1, n);
            const double car = caravan_proper_departure(config, t1, n);
            const double city = city_frame_departure(config, t1, n);
            CHECK(mes < car);
            CHECK(car < city);
        }
    }
}

TEST_CASE("frame consistency: undilating the city clock recovers the convoy clock")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> betas(0.01, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
        const double beta_c = betas(rng);
        std::uniform_real_distribution<double> faster(beta_c + 0.01, 0.99);
        const KinematicConfig config = {Mode::Relativistic, beta_c, faster(rng)};
        const DilationFactors factors = dilation_factors(config);
        for (int n = 1; n <= 8; ++n) {
            const double city = city_frame_departure(config, 3.0, n);
            const double convoy = caravan_proper_departure(config, 3.0, n);
            CHECK(city * factors.root_c == doctest::Approx(convoy).epsilon(1e-12));
        }
    }
}

TEST_CASE("base-arrival clock decomposes into departure plus the dilated return leg")
{
    const DilationFactors factors = dilation_factors(kDefault);
    const double q = q_factor(kDefault);
    const double fraction = classical::city_arrival_fraction(q);
    for (int n = 1; n <= 8; ++n) {
        const double left =
            messenger_proper_at_city(kDefault, 5.0, n) - messenger_proper_departure(kDefault, 5.0, n);
        const double right = factors.root_m * fraction * city_frame_departure(kDefault, 5.0, n);
        CHECK(left == doctest::Approx(right).epsilon(1e-12));
    }
}

TEST_CASE("light-signal exchange times at first order")
{
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> betas(0.001, 0.999);
    for (int trial = 0; trial < 50; ++trial) {
        const double t1 = 1.0 + trial * 0.25;
        CHECK(em_limit_city_time(betas(rng), t1, 1) == t1); // zero correction
    }

    CHECK(em_limit_city_time(0.01, 2.0, 2) == doctest::Approx(2.04).epsilon(1e-15));

    // The first-order form misses the exact value by O(beta^2).
    const double err = std::abs(em_limit_city_time(0.01, 2.0, 2)
                                - exact_light_signal_time(0.01, 2.0, 2));
    CHECK(err == doctest::Approx(5.06e-4).epsilon(2e-2));

    for (int n = 2; n <= 4; ++n) {
        const double coarse =
            std::abs(em_limit_city_time(0.02, 2.0, n) - exact_light_signal_time(0.02, 2.0, n));
        const double fine =
            std::abs(em_limit_city_time(0.01, 2.0, n) - exact_light_signal_time(0.01, 2.0, n));
        CHECK(coarse / fine > 3.5);
        CHECK(coarse / fine < 4.5);
    }
}

TEST_CASE("relativistic schedule reproduces the four-clock reference rows")
{
    const CourierSpec courier4{4, 5.0};
    const ScheduleTable table = build_relativistic_schedule(kDefault, std::span(&courier4, 1), 7);
    REQUIRE(table.records.size() == 7);

    // Day-denominated rows.
    const DepartureRecord& first = table.records[0];
    CHECK(first.city_frame == doctest::Approx(5.8).epsilon(2e-2));
    CHECK(first.courier_proper == 5.0);
    CHECK(first.caravan_proper == 5.0);
    CHECK(first.courier_proper_at_city == doctest::Approx(7.54).epsilon(2e-3));

    const DepartureRecord& third = table.records[2];
    CHECK(third.city_frame == doctest::Approx(144.3).epsilon(1e-3));
    CHECK(third.courier_proper == doctest::Approx(96.6).epsilon(1e-3));
    CHECK(third.caravan_proper == 125.0);
    CHECK(third.courier_proper_at_city == doctest::Approx(160.3).epsilon(1e-3));

    // Year-denominated rows.
    const DepartureRecord& last = table.records[6];
    CHECK(last.city_frame / 365.0 == doctest::Approx(247.1).epsilon(1e-3));
    CHECK(last.courier_proper / 365.0 == doctest::Approx(163.5).epsilon(1e-3));
    CHECK(last.caravan_proper / 365.0 == doctest::Approx(214.0).epsilon(1e-3));
    CHECK(last.courier_proper_at_city / 365.0 == doctest::Approx(272.5).epsilon(1e-3));
}

TEST_CASE("relativistic schedule reduces to the classical one at crawling speeds")
{
    const KinematicConfig slow = {Mode::Relativistic, 1e-9, 1.5e-9};
    const KinematicConfig classical_config = {Mode::Classical, 1.0, 1.5};
    const auto fleet = make_fleet(3);

    const ScheduleTable fast = build_relativistic_schedule(slow, fleet, 5);
    const ScheduleTable reference =
        classical::build_classical_schedule(classical_config, fleet, 5);

    REQUIRE(fast.records.size() == reference.records.size());
    for (std::size_t k = 0; k < fast.records.size(); ++k) {
        const DepartureRecord& a = fast.records[k];
        const DepartureRecord& b = reference.records[k];
        CHECK(a.city_frame == doctest::Approx(b.city_frame).epsilon(1e-9));
        CHECK(a.caravan_proper == doctest::Approx(b.caravan_proper).epsilon(1e-9));
        CHECK(a.courier_proper == doctest::Approx(b.courier_proper).epsilon(1e-9));
        CHECK(a.courier_proper_at_city
              == doctest::Approx(b.courier_proper_at_city).epsilon(1e-9));
    }
}

TEST_CASE("schedule records grow strictly within each courier")
{
    const ScheduleTable table = build_relativistic_schedule(kDefault, make_fleet(4), 6);
    for (int c = 0; c < table.num_couriers; ++c) {
        for (int n = 2; n <= table.num_tours; ++n) {
            const DepartureRecord& prev = table.at(n - 1, c);
            const DepartureRecord& here = table.at(n, c);
            CHECK(here.caravan_proper > prev.caravan_proper);
            CHECK(here.city_frame > prev.city_frame);
            CHECK(here.courier_proper > prev.courier_proper);
            CHECK(here.courier_proper_at_city > prev.courier_proper_at_city);
        }
    }
}
