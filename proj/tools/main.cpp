#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "buzzati/classical.hpp"
#include "buzzati/core.hpp"
#include "buzzati/relativistic.hpp"
#include "buzzati/render.hpp"
#include "buzzati/simulator.hpp"
#include "buzzati/verify.hpp"

namespace {

using namespace buzzati;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

/// Flag combinations CLI11 cannot rule out declaratively.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigFlags {
    std::optional<double> q;
    std::optional<double> vc;
    std::optional<double> vm;
    std::optional<double> beta_c;
    std::optional<double> beta_m;
};

struct CourierFlags {
    std::vector<double> t1;
    std::optional<int> messengers;
};

struct OutputFlags {
    std::string format = "pretty";
    double year_days = 365.0;
    std::optional<std::string> output;
};

void add_classical_config(CLI::App* cmd, ConfigFlags& flags)
{
    auto* q = cmd->add_option("--q", flags.q, "Chase ratio q = Vc/(Vm-Vc); implies Vc=1, Vm=1+1/q");
    auto* vc = cmd->add_option("--vc", flags.vc, "Convoy speed");
    auto* vm = cmd->add_option("--vm", flags.vm, "Courier speed");
    q->excludes(vc)->excludes(vm);
    vc->needs(vm);
    vm->needs(vc);
}

void add_relativistic_config(CLI::App* cmd, ConfigFlags& flags)
{
    auto* bc = cmd->add_option("--beta-c", flags.beta_c, "Convoy speed as a fraction of c");
    auto* bm = cmd->add_option("--beta-m", flags.beta_m, "Courier speed as a fraction of c");
    bc->needs(bm);
    bm->needs(bc);
}

void add_courier_flags(CLI::App* cmd, CourierFlags& flags)
{
    auto* t1 = cmd->add_option("--t1", flags.t1,
                               "First departure day(s), comma separated; courier i gets the i-th value")
                   ->delimiter(',');
    auto* messengers =
        cmd->add_option("--messengers", flags.messengers,
                        "Fleet of M couriers with the staggered (i+1)-day first departures")
            ->check(CLI::PositiveNumber);
    t1->excludes(messengers);
    messengers->excludes(t1);
}

void add_output_flags(CLI::App* cmd, OutputFlags& flags)
{
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"pretty", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--year-days", flags.year_days, "Days per displayed year")
        ->capture_default_str();
    cmd->add_option("--output", flags.output, "Write to this file instead of stdout");
}

io::OutputSpec make_output_spec(const OutputFlags& flags)
{
    io::OutputSpec spec;
    if (flags.format == "csv") {
        spec.format = io::Format::Csv;
    } else if (flags.format == "json") {
        spec.format = io::Format::Json;
    }
    if (!(flags.year_days > 0.0)) {
        throw NonPositiveError("--year-days must be positive");
    }
    spec.year_length_days = flags.year_days;
    spec.destination = flags.output;
    return spec;
}

KinematicConfig classical_config(const ConfigFlags& flags)
{
    if (flags.vc && flags.vm) {
        return validate({Mode::Classical, *flags.vc, *flags.vm});
    }
    if (flags.q) {
        if (!(*flags.q > 0.0) || !std::isfinite(*flags.q)) {
            throw NonPositiveError("--q must be a positive finite ratio");
        }
        return validate({Mode::Classical, 1.0, 1.0 + 1.0 / *flags.q});
    }
    return validate({Mode::Classical, 1.0, 1.5}); // q = 2
}

KinematicConfig relativistic_config(const ConfigFlags& flags)
{
    const double beta_c = flags.beta_c.value_or(0.5);
    const double beta_m = flags.beta_m.value_or(0.75);
    return validate({Mode::Relativistic, beta_c, beta_m});
}

/// Couriers from flags. The fallback differs per command: the classical
/// grid defaults to the seven-courier fleet, the relativistic one to the
/// single courier 4 (first departure 5 days).
std::vector<CourierSpec> resolve_couriers(const CourierFlags& flags,
                                          const std::vector<CourierSpec>& fallback)
{
    if (flags.messengers) {
        if (*flags.messengers < 1) {
            throw NonPositiveError("--messengers must be >= 1");
        }
        return make_fleet(*flags.messengers);
    }
    if (!flags.t1.empty()) {
        std::vector<CourierSpec> couriers;
        couriers.reserve(flags.t1.size());
        for (std::size_t i = 0; i < flags.t1.size(); ++i) {
            couriers.push_back(validate(CourierSpec{static_cast<int>(i) + 1, flags.t1[i]}));
        }
        return couriers;
    }
    return fallback;
}

std::vector<CourierSpec> default_relativistic_courier()
{
    return {CourierSpec{4, 5.0}};
}

int run_classical_table(const ConfigFlags& config_flags, const CourierFlags& courier_flags,
                        int tours, const OutputFlags& output_flags)
{
    const KinematicConfig config = classical_config(config_flags);
    const std::vector<CourierSpec> couriers = resolve_couriers(courier_flags, make_fleet(7));
    const io::OutputSpec spec = make_output_spec(output_flags);

    ScheduleTable table = classical::build_classical_schedule(config, couriers, tours);
    table.year_length_days = spec.year_length_days;
    io::write_output(io::render_schedule(table, spec), spec);
    return kExitOk;
}

int run_relativistic_table(const ConfigFlags& config_flags, const CourierFlags& courier_flags,
                           int tours, const OutputFlags& output_flags)
{
    const KinematicConfig config = relativistic_config(config_flags);
    const std::vector<CourierSpec> couriers =
        resolve_couriers(courier_flags, default_relativistic_courier());
    const io::OutputSpec spec = make_output_spec(output_flags);

    ScheduleTable table = relativistic::build_relativistic_schedule(config, couriers, tours);
    table.year_length_days = spec.year_length_days;
    io::write_output(io::render_schedule(table, spec), spec);
    return kExitOk;
}

int run_simulate(const ConfigFlags& config_flags, const CourierFlags& courier_flags, int tours,
                 const OutputFlags& output_flags)
{
    const bool relativistic_mode = config_flags.beta_c || config_flags.beta_m;
    const KinematicConfig config =
        relativistic_mode ? relativistic_config(config_flags) : classical_config(config_flags);
    const std::vector<CourierSpec> couriers = resolve_couriers(
        courier_flags, relativistic_mode ? default_relativistic_courier() : make_fleet(7));
    const io::OutputSpec spec = make_output_spec(output_flags);

    const sim::SimulationResult result = sim::simulate(config, couriers, tours);
    io::write_output(io::render_events(config, result, spec), spec);
    return kExitOk;
}

struct VerifyJob {
    std::string label;
    KinematicConfig config;
    std::vector<CourierSpec> couriers;
    int tours = 0;
};

int run_verify(const ConfigFlags& config_flags, const CourierFlags& courier_flags,
               std::optional<int> tours, double threshold, const std::string& mode,
               const OutputFlags& output_flags)
{
    const io::OutputSpec spec = make_output_spec(output_flags);

    const bool has_relativistic_flags = config_flags.beta_c || config_flags.beta_m;
    const bool has_classical_flags = config_flags.q || config_flags.vc || config_flags.vm;
    if (mode == "classical" && has_relativistic_flags) {
        throw UsageError("--mode classical conflicts with beta flags");
    }
    if (mode == "relativistic" && has_classical_flags) {
        throw UsageError("--mode relativistic conflicts with --q/--vc/--vm");
    }

    const std::vector<double> sweep_t1{1.0, 2.5, 8.0};
    auto sweep_couriers = [&] {
        std::vector<CourierSpec> couriers;
        for (std::size_t i = 0; i < sweep_t1.size(); ++i) {
            couriers.push_back({static_cast<int>(i) + 1, sweep_t1[i]});
        }
        return couriers;
    }();

    std::vector<VerifyJob> jobs;
    const bool want_relativistic = has_relativistic_flags || mode == "relativistic";
    const bool want_classical = has_classical_flags || mode == "classical";

    if (want_relativistic) {
        jobs.push_back({"relativistic", relativistic_config(config_flags),
                        resolve_couriers(courier_flags, default_relativistic_courier()),
                        tours.value_or(8)});
    } else if (want_classical && has_classical_flags) {
        jobs.push_back({"classical", classical_config(config_flags),
                        resolve_couriers(courier_flags, sweep_couriers), tours.value_or(10)});
    } else {
        // No explicit config: sweep the standard grid.
        for (const double q : {0.5, 1.0, 2.0, 5.0}) {
            std::ostringstream label;
            label << "classical q=" << q;
            jobs.push_back({label.str(),
                            {Mode::Classical, 1.0, 1.0 + 1.0 / q},
                            resolve_couriers(courier_flags, sweep_couriers),
                            tours.value_or(10)});
        }
        if (mode != "classical") {
            jobs.push_back({"relativistic beta_c=0.5 beta_m=0.75",
                            {Mode::Relativistic, 0.5, 0.75},
                            resolve_couriers(courier_flags, default_relativistic_courier()),
                            tours.value_or(8)});
        }
    }

    bool all_pass = true;
    std::ostringstream out;
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const VerifyJob& job : jobs) {
        const sim::VerificationReport report =
            sim::verify_against_analytic(job.config, job.couriers, job.tours, threshold);
        all_pass = all_pass && report.pass;
        if (spec.format == io::Format::Json) {
            runs.push_back(nlohmann::ordered_json{
                {"label", job.label},
                {"tours", job.tours},
                {"report", nlohmann::ordered_json::parse(io::render_report(report, spec))},
            });
        } else {
            out << "== " << job.label << " (tours " << job.tours << ") ==\n"
                << io::render_report(report, spec);
        }
    }
    if (spec.format == io::Format::Json) {
        out << nlohmann::ordered_json{{"pass", all_pass}, {"runs", runs}}.dump(2) << '\n';
    }
    io::write_output(out.str(), spec);
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int run_em_limit(double beta_c, double t1, int tours, const OutputFlags& output_flags)
{
    if (!(beta_c > 0.0) || !(beta_c < 1.0)) {
        throw SuperluminalError("--beta-c must lie strictly between 0 and 1");
    }
    if (!(t1 > 0.0)) {
        throw NonPositiveError("--t1 must be positive");
    }
    const io::OutputSpec spec = make_output_spec(output_flags);

    // Exact light-signal exchange time in the city frame, for comparison
    // with the first-order form.
    const auto exact = [beta_c](double first, int n) {
        const double gamma = 1.0 / std::sqrt(1.0 - beta_c * beta_c);
        return first * gamma * std::pow((1.0 + beta_c) / (1.0 - beta_c), n - 1);
    };

    std::ostringstream out;
    if (spec.format == io::Format::Csv) {
        out << "tour,first_order_days,exact_days,abs_error_days,rel_error\n";
        for (int n = 1; n <= tours; ++n) {
            const double approx = relativistic::em_limit_city_time(beta_c, t1, n);
            const double reference = exact(t1, n);
            out << n << ',' << io::full_precision(approx) << ',' << io::full_precision(reference)
                << ',' << io::full_precision(std::abs(approx - reference)) << ','
                << io::full_precision(std::abs(approx - reference) / reference) << '\n';
        }
    } else {
        out << "light-signal exchange times, beta_c = " << beta_c << ", t1 = " << t1 << " d\n";
        char line[160];
        std::snprintf(line, sizeof(line), "%4s  %16s  %16s  %12s  %12s\n", "tour", "first order (d)",
                      "exact (d)", "abs err (d)", "rel err");
        out << line;
        for (int n = 1; n <= tours; ++n) {
            const double approx = relativistic::em_limit_city_time(beta_c, t1, n);
            const double reference = exact(t1, n);
            std::snprintf(line, sizeof(line), "%4d  %16.8g  %16.8g  %12.4e  %12.4e\n", n, approx,
                          reference, std::abs(approx - reference),
                          std::abs(approx - reference) / reference);
            out << line;
        }
    }
    io::write_output(out.str(), spec);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Courier relay schedules between a receding convoy and a fixed base:\n"
                 "closed-form departure tables (classical and relativistic), an\n"
                 "event-driven simulation oracle, and their cross-verification."};
    app.require_subcommand(1);

    ConfigFlags config_flags;
    CourierFlags courier_flags;
    OutputFlags output_flags;
    int tours = 7;
    std::optional<int> verify_tours;
    double threshold = 1e-9;
    std::string verify_mode;
    double em_beta_c = 0.0;
    double em_t1 = 2.0;

    auto* classical_cmd =
        app.add_subcommand("classical-table", "Departure-time grid, one universal clock");
    add_classical_config(classical_cmd, config_flags);
    add_courier_flags(classical_cmd, courier_flags);
    classical_cmd->add_option("--tours", tours, "Number of round trips")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_flags(classical_cmd, output_flags);

    auto* relativistic_cmd =
        app.add_subcommand("relativistic-table", "Four-clock grid for relativistic speeds");
    add_relativistic_config(relativistic_cmd, config_flags);
    add_courier_flags(relativistic_cmd, courier_flags);
    relativistic_cmd->add_option("--tours", tours, "Number of round trips")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_flags(relativistic_cmd, output_flags);

    auto* simulate_cmd =
        app.add_subcommand("simulate", "Emit the event-driven simulator's leg events");
    add_classical_config(simulate_cmd, config_flags);
    add_relativistic_config(simulate_cmd, config_flags);
    add_courier_flags(simulate_cmd, courier_flags);
    simulate_cmd->add_option("--tours", tours, "Number of round trips")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_flags(simulate_cmd, output_flags);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Compare the simulator against the closed forms; nonzero exit on disagreement");
    add_classical_config(verify_cmd, config_flags);
    add_relativistic_config(verify_cmd, config_flags);
    add_courier_flags(verify_cmd, courier_flags);
    verify_cmd->add_option("--tours", verify_tours, "Number of round trips")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--threshold", threshold, "Max relative error accepted")
        ->capture_default_str();
    verify_cmd->add_option("--mode", verify_mode, "Restrict to one kinematic mode")
        ->check(CLI::IsMember({"classical", "relativistic"}));
    add_output_flags(verify_cmd, output_flags);

    // simulate and verify take either speed group, never both.
    for (CLI::App* cmd : {simulate_cmd, verify_cmd}) {
        for (const std::string classical_flag : {"--q", "--vc", "--vm"}) {
            for (const std::string beta_flag : {"--beta-c", "--beta-m"}) {
                cmd->get_option(classical_flag)->excludes(cmd->get_option(beta_flag));
            }
        }
    }

    auto* em_cmd = app.add_subcommand(
        "em-limit", "First-order light-signal exchange times vs the exact values");
    em_cmd->add_option("--beta-c", em_beta_c, "Convoy speed as a fraction of c")->required();
    em_cmd->add_option("--t1", em_t1, "First exchange day")->capture_default_str();
    em_cmd->add_option("--tours", tours, "Number of exchanges")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_flags(em_cmd, output_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(classical_cmd)) {
            return run_classical_table(config_flags, courier_flags, tours, output_flags);
        }
        if (app.got_subcommand(relativistic_cmd)) {
            return run_relativistic_table(config_flags, courier_flags, tours, output_flags);
        }
        if (app.got_subcommand(simulate_cmd)) {
            return run_simulate(config_flags, courier_flags, tours, output_flags);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(config_flags, courier_flags, verify_tours, threshold, verify_mode,
                              output_flags);
        }
        if (app.got_subcommand(em_cmd)) {
            return run_em_limit(em_beta_c, em_t1, tours, output_flags);
        }
    } catch (const KinematicError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
