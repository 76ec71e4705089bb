#include "buzzati/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace buzzati::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string printf_double(const char* format, double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), format, value);
    return buffer;
}

bool integral(double days)
{
    return std::abs(days - std::round(days)) <= 1e-9 * std::max(1.0, std::abs(days));
}

/// Whole days as integers, fractional days with one decimal, long spans
/// as approximate years.
std::string pretty_cell(double days, const OutputSpec& spec)
{
    if (days > spec.year_threshold_days) {
        return "~ " + printf_double("%.1f", days / spec.year_length_days) + " yr";
    }
    if (integral(days)) {
        return printf_double("%.0f", days) + " d";
    }
    return printf_double("%.1f", days) + " d";
}

std::string mode_name(Mode mode)
{
    return mode == Mode::Classical ? "classical" : "relativistic";
}

std::string config_line(const KinematicConfig& config, const char* noun)
{
    std::ostringstream out;
    if (config.mode == Mode::Classical) {
        out << "classical " << noun << "  q = " << q_factor(config) << "  (convoy "
            << config.convoy_speed << ", courier " << config.courier_speed << ")";
    } else {
        out << "relativistic " << noun << "  q = " << q_factor(config) << "  (beta_c "
            << config.convoy_speed << ", beta_m " << config.courier_speed << ")";
    }
    return out.str();
}

void pad_to(std::string& cell, std::size_t width)
{
    if (cell.size() < width) {
        cell.insert(0, width - cell.size(), ' ');
    }
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            pad_to(cell, widths[c]);
            out << cell << (c + 1 < row.size() ? "  " : "");
        }
        out << '\n';
    }
    return out.str();
}

std::string pretty_schedule(const ScheduleTable& table, const OutputSpec& spec)
{
    std::ostringstream out;
    out << config_line(table.config, "schedule") << '\n';

    if (table.config.mode == Mode::Classical) {
        // One matrix of departure times: rows per tour, one column per courier.
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"tour"};
        for (int c = 0; c < table.num_couriers; ++c) {
            header.push_back("Mess. " + std::to_string(table.at(1, c).courier_index));
        }
        rows.push_back(header);
        for (int n = 1; n <= table.num_tours; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            for (int c = 0; c < table.num_couriers; ++c) {
                row.push_back(pretty_cell(table.at(n, c).caravan_proper, spec));
            }
            rows.push_back(row);
        }
        out << render_grid(rows);
        return out.str();
    }

    // One block per courier with all four clocks.
    for (int c = 0; c < table.num_couriers; ++c) {
        out << "Messenger " << table.at(1, c).courier_index << '\n';
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"tour", "city frame", "courier clock", "convoy clock", "courier at base"});
        for (int n = 1; n <= table.num_tours; ++n) {
            const DepartureRecord& record = table.at(n, c);
            rows.push_back({
                std::to_string(n),
                pretty_cell(record.city_frame, spec),
                pretty_cell(record.courier_proper, spec),
                pretty_cell(record.caravan_proper, spec),
                pretty_cell(record.courier_proper_at_city, spec),
            });
        }
        out << render_grid(rows);
    }
    return out.str();
}

std::string csv_schedule(const ScheduleTable& table)
{
    std::ostringstream out;
    if (table.config.mode == Mode::Classical) {
        out << "messenger,tour,city_frame_days,city_arrival_days\n";
        for (const DepartureRecord& record : table.records) {
            out << record.courier_index << ',' << record.tour << ','
                << full_precision(record.city_frame) << ','
                << full_precision(record.courier_proper_at_city) << '\n';
        }
    } else {
        out << "messenger,tour,city_frame_days,caravan_proper_days,messenger_proper_days,"
               "messenger_at_city_proper_days\n";
        for (const DepartureRecord& record : table.records) {
            out << record.courier_index << ',' << record.tour << ','
                << full_precision(record.city_frame) << ','
                << full_precision(record.caravan_proper) << ','
                << full_precision(record.courier_proper) << ','
                << full_precision(record.courier_proper_at_city) << '\n';
        }
    }
    return out.str();
}

ordered_json config_json(const KinematicConfig& config)
{
    return ordered_json{
        {"mode", mode_name(config.mode)},
        {"convoy_speed", config.convoy_speed},
        {"courier_speed", config.courier_speed},
        {"q", q_factor(config)},
    };
}

std::string json_schedule(const ScheduleTable& table)
{
    ordered_json records = ordered_json::array();
    for (const DepartureRecord& record : table.records) {
        if (table.config.mode == Mode::Classical) {
            records.push_back(ordered_json{
                {"messenger", record.courier_index},
                {"tour", record.tour},
                {"city_frame_days", record.city_frame},
                {"city_arrival_days", record.courier_proper_at_city},
            });
        } else {
            records.push_back(ordered_json{
                {"messenger", record.courier_index},
                {"tour", record.tour},
                {"city_frame_days", record.city_frame},
                {"caravan_proper_days", record.caravan_proper},
                {"messenger_proper_days", record.courier_proper},
                {"messenger_at_city_proper_days", record.courier_proper_at_city},
            });
        }
    }
    const ordered_json document{
        {"config", config_json(table.config)},
        {"records", records},
        {"year_length_days", table.year_length_days},
    };
    return document.dump(2) + "\n";
}

} // namespace

std::string full_precision(double value)
{
    return printf_double("%.17g", value);
}

std::string render_schedule(const ScheduleTable& table, const OutputSpec& spec)
{
    switch (spec.format) {
    case Format::Pretty: return pretty_schedule(table, spec);
    case Format::Csv: return csv_schedule(table);
    case Format::Json: return json_schedule(table);
    }
    return {};
}

std::string render_events(const KinematicConfig& config,
                          const sim::SimulationResult& result,
                          const OutputSpec& spec)
{
    if (spec.format == Format::Json) {
        ordered_json events = ordered_json::array();
        for (std::size_t k = 0; k < result.events.size(); ++k) {
            const sim::LegEvent& event = result.events[k];
            events.push_back(ordered_json{
                {"messenger", event.courier_index},
                {"kind", sim::to_string(event.kind)},
                {"time_city_days", event.time_city},
                {"position", event.position},
                {"proper_days", result.clocks[k].elapsed_proper},
            });
        }
        const ordered_json document{{"config", config_json(config)}, {"events", events}};
        return document.dump(2) + "\n";
    }

    if (spec.format == Format::Csv) {
        std::ostringstream out;
        out << "messenger,kind,time_city_days,position,proper_days\n";
        for (std::size_t k = 0; k < result.events.size(); ++k) {
            const sim::LegEvent& event = result.events[k];
            out << event.courier_index << ',' << sim::to_string(event.kind) << ','
                << full_precision(event.time_city) << ',' << full_precision(event.position)
                << ',' << full_precision(result.clocks[k].elapsed_proper) << '\n';
        }
        return out.str();
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"messenger", "kind", "time (city)", "position", "proper"});
    for (std::size_t k = 0; k < result.events.size(); ++k) {
        const sim::LegEvent& event = result.events[k];
        rows.push_back({
            std::to_string(event.courier_index),
            sim::to_string(event.kind),
            printf_double("%.6g", event.time_city),
            printf_double("%.6g", event.position),
            printf_double("%.6g", result.clocks[k].elapsed_proper),
        });
    }
    return config_line(config, "simulation") + "\n" + render_grid(rows);
}

std::string render_report(const sim::VerificationReport& report, const OutputSpec& spec)
{
    if (spec.format == Format::Json) {
        ordered_json checks = ordered_json::array();
        for (const sim::ClockCheck& check : report.checks) {
            checks.push_back(ordered_json{
                {"clock", check.clock},
                {"max_rel_error", check.max_rel_error},
                {"messenger", check.courier},
                {"tour", check.tour},
                {"samples", check.samples},
            });
        }
        const ordered_json document{
            {"threshold", report.threshold},
            {"pass", report.pass},
            {"checks", checks},
        };
        return document.dump(2) + "\n";
    }

    std::ostringstream out;
    for (const sim::ClockCheck& check : report.checks) {
        out << check.clock << ": max rel error " << printf_double("%.3e", check.max_rel_error);
        if (check.samples > 0 && check.max_rel_error > 0.0) {
            out << " at messenger " << check.courier << " tour " << check.tour;
        }
        out << " over " << check.samples << " samples\n";
    }
    out << (report.pass ? "PASS" : "FAIL") << " at threshold "
        << printf_double("%.3e", report.threshold) << '\n';
    return out.str();
}

void write_output(const std::string& content, const OutputSpec& spec)
{
    if (!spec.destination) {
        std::cout << content;
        return;
    }
    std::ofstream file(*spec.destination, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + *spec.destination);
    }
    file << content;
}

} // namespace buzzati::io
