#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subsel/geometry.hpp"
#include "subsel/selection.hpp"

namespace subsel::io {

inline constexpr int kRunRecordVersion = 1;

enum class PointFormat { csv, json };
PointFormat parse_format(std::string_view text);

/// CSV: one point per line, comma-separated decimals; lines starting with '#' and
/// blank lines are skipped. With `maximize`, every value is negated on the way in.
PointSet parse_points_csv(std::string_view text, bool maximize = false);
/// JSON: an array of rows, or an object with a "points" array of rows.
PointSet parse_points_json(std::string_view text, bool maximize = false);
PointSet read_points(const std::filesystem::path& path, PointFormat format, bool maximize = false);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

void write_points_csv(std::ostream& out, const PointSet& points, bool negate = false,
                      std::string_view header = {});
void write_points_csv(const std::filesystem::path& path, const PointSet& points, bool negate = false,
                      std::string_view header = {});

/// Parses "1.1,1.1" into a reference point.
ReferencePoint parse_reference(std::string_view text);

/// Reference point for inputs normalized to [0, 1]^m: (1.125, 1.125) for two
/// objectives and (2, 2, 2, 2, 2) for five. Other dimensions use 1 + 1/H with the
/// largest H whose simplex lattice C(H + m - 1, m - 1) has at most k points.
ReferencePoint auto_reference(std::size_t m, std::size_t k);

struct RunRecord {
    SelectionSpec spec;
    std::string provenance;     ///< input file or generator description
    bool maximize = false;      ///< inputs were negated on ingestion
    SelectionResult result;
    PointSet selected;          ///< selected points in the original (un-negated) orientation
    double wall_time = 0.0;
    std::string tool_version;
};

std::string tool_version();

std::string run_record_json(const RunRecord& record);
RunRecord parse_run_record(std::string_view text);
void write_result(const RunRecord& record, const std::filesystem::path& path);
RunRecord read_result(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Pipeline stage list as JSON:
/// {"seed": 1, "stages": [{"strategy": "distance", "k": 100},
///                        {"strategy": "ga", "indicator": "igdplus", "k": 9, "mu": 100, "generations": 2000}]}
struct PipelineDocument {
    std::vector<PipelineStage> stages;
    std::optional<std::uint64_t> seed;
};
PipelineDocument parse_pipeline(std::string_view text);

// ---------------------------------------------------------------------------
// SVG scatter plots
// ---------------------------------------------------------------------------

struct PlotOptions {
    std::string title;
    std::vector<std::string> axis_names;  ///< defaults to f1, f2, ...
};

/// Full set as one series, selected rows as a second series. Panels: one for two
/// columns, the three coordinate-pair projections for three, and one per
/// consecutive column pair beyond that.
std::string render_svg(const PointSet& points, std::span<const std::size_t> selected, const PlotOptions& options);

}  // namespace subsel::io
