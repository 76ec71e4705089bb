#pragma once

#include <optional>
#include <string>

#include "buzzati/core.hpp"
#include "buzzati/simulator.hpp"
#include "buzzati/verify.hpp"

namespace buzzati::io {

enum class Format { Pretty, Csv, Json };

/// How a table leaves the program. Pretty output switches a cell from
/// days to years above year_threshold_days; CSV and JSON always carry
/// full-precision days so downstream tools lose nothing.
struct OutputSpec {
    Format format = Format::Pretty;
    double year_threshold_days = 365.0;
    double year_length_days = 365.0;
    std::optional<std::string> destination; // file path; stdout if absent
};

/// Full-precision decimal form (17 significant digits); strtod round-trips
/// it to the identical double.
std::string full_precision(double value);

std::string render_schedule(const ScheduleTable& table, const OutputSpec& spec);

std::string render_events(const KinematicConfig& config,
                          const sim::SimulationResult& result,
                          const OutputSpec& spec);

std::string render_report(const sim::VerificationReport& report, const OutputSpec& spec);

/// Writes to spec.destination, or standard output when none is set.
void write_output(const std::string& content, const OutputSpec& spec);

} // namespace buzzati::io
