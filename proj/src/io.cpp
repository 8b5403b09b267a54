#include "subsel/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subsel/errors.hpp"

#ifndef SUBSEL_VERSION
#define SUBSEL_VERSION "dev"
#endif

namespace subsel::io {

using nlohmann::json;

PointFormat parse_format(std::string_view text) {
    if (text == "csv") return PointFormat::csv;
    if (text == "json") return PointFormat::json;
    throw InvalidArgument("unknown point format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view token, std::size_t line) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
        throw InputError("line " + std::to_string(line) + ": cannot parse '" + std::string(token) + "' as a number");
    if (!std::isfinite(v)) throw InputError("line " + std::to_string(line) + ": non-finite value");
    return v;
}

}  // namespace

PointSet parse_points_csv(std::string_view text, bool maximize) {
    PointSet out;
    std::size_t width = 0;
    std::size_t line_no = 0;
    std::vector<double> row;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        row.clear();
        while (true) {
            const auto comma = line.find(',');
            row.push_back(parse_number(line.substr(0, comma), line_no));
            if (comma == std::string_view::npos) break;
            line.remove_prefix(comma + 1);
        }
        if (maximize)
            for (auto& v : row) v = -v;
        if (width == 0) {
            if (row.size() < 2) throw InputError("line " + std::to_string(line_no) + ": at least two objectives required");
            width = row.size();
        } else if (row.size() != width) {
            throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                             " values, found " + std::to_string(row.size()));
        }
        out.push_back(row);
    }
    if (out.empty()) throw InputError("no points found");
    return out;
}

PointSet parse_points_json(std::string_view text, bool maximize) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
    const json& rows = doc.is_object() ? doc.at("points") : doc;
    if (!rows.is_array() || rows.empty()) throw InputError("JSON points must be a non-empty array of rows");
    PointSet out;
    std::vector<double> row;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& jr = rows[r];
        if (!jr.is_array()) throw InputError("row " + std::to_string(r + 1) + ": expected an array");
        row.clear();
        for (const auto& v : jr) {
            if (!v.is_number()) throw InputError("row " + std::to_string(r + 1) + ": non-numeric value");
            const double d = v.get<double>();
            if (!std::isfinite(d)) throw InputError("row " + std::to_string(r + 1) + ": non-finite value");
            row.push_back(maximize ? -d : d);
        }
        if (row.size() < 2) throw InputError("row " + std::to_string(r + 1) + ": at least two objectives required");
        if (!out.empty() && row.size() != out.dim())
            throw InputError("row " + std::to_string(r + 1) + ": expected " + std::to_string(out.dim()) +
                             " values, found " + std::to_string(row.size()));
        out.push_back(row);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

PointSet read_points(const std::filesystem::path& path, PointFormat format, bool maximize) {
    const std::string text = read_file(path);
    try {
        return format == PointFormat::csv ? parse_points_csv(text, maximize) : parse_points_json(text, maximize);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_points_csv(std::ostream& out, const PointSet& points, bool negate, std::string_view header) {
    if (!header.empty()) out << "# " << header << '\n';
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (std::size_t i = 0; i < points.dim(); ++i) {
            if (i) out << ',';
            out << format_double(negate ? -points[p][i] : points[p][i]);
        }
        out << '\n';
    }
}

void write_points_csv(const std::filesystem::path& path, const PointSet& points, bool negate,
                      std::string_view header) {
    std::ostringstream ss;
    write_points_csv(ss, points, negate, header);
    write_file(path, ss.str());
}

ReferencePoint parse_reference(std::string_view text) {
    std::vector<double> values;
    while (true) {
        const auto comma = text.find(',');
        try {
            values.push_back(parse_number(text.substr(0, comma), 1));
        } catch (const InputError&) {
            throw InvalidArgument("cannot parse reference point '" + std::string(text) + "'");
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return ReferencePoint(std::move(values));
}

ReferencePoint auto_reference(std::size_t m, std::size_t k) {
    if (m < 2) throw InvalidArgument("auto reference: at least two objectives required");
    double r = 0.0;
    if (m == 2) {
        r = 1.125;
    } else if (m == 5) {
        r = 2.0;
    } else {
        std::size_t h = 1;
        while (binomial(h + 1 + m - 1, m - 1) <= k) ++h;
        r = 1.0 + 1.0 / static_cast<double>(h);
    }
    return ReferencePoint(std::vector<double>(m, r));
}

std::string tool_version() { return SUBSEL_VERSION; }

namespace {

json points_json(const PointSet& points) {
    json rows = json::array();
    for (std::size_t p = 0; p < points.size(); ++p)
        rows.push_back(std::vector<double>(points[p].begin(), points[p].end()));
    return rows;
}

PointSet points_from_json(const json& rows) {
    PointSet out;
    for (const auto& r : rows) out.push_back(r.get<std::vector<double>>());
    return out;
}

json spec_json(const SelectionSpec& spec) {
    json j{{"indicator", to_string(spec.indicator)},
           {"strategy", to_string(spec.strategy)},
           {"k", spec.k},
           {"ga", {{"mu", spec.ga.population}, {"generations", spec.ga.generations},
                   {"crossover_prob", spec.ga.crossover_prob}}},
           {"seed", spec.seed},
           {"exhaustive_budget", spec.exhaustive_budget}};
    if (spec.reference) {
        auto v = spec.reference->values();
        j["reference_point"] = std::vector<double>(v.begin(), v.end());
    } else {
        j["reference_point"] = nullptr;
    }
    return j;
}

SelectionSpec spec_from_json(const json& j) {
    SelectionSpec spec;
    spec.indicator = parse_indicator(j.at("indicator").get<std::string>());
    spec.strategy = parse_strategy(j.at("strategy").get<std::string>());
    spec.k = j.at("k").get<std::size_t>();
    spec.ga.population = j.at("ga").at("mu").get<std::size_t>();
    spec.ga.generations = j.at("ga").at("generations").get<std::size_t>();
    spec.ga.crossover_prob = j.at("ga").at("crossover_prob").get<double>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.exhaustive_budget = j.value("exhaustive_budget", spec.exhaustive_budget);
    if (j.contains("reference_point") && !j["reference_point"].is_null())
        spec.reference = ReferencePoint(j["reference_point"].get<std::vector<double>>());
    return spec;
}

}  // namespace

std::string run_record_json(const RunRecord& record) {
    const auto mask = record.result.mask.indices();
    json doc{{"version", kRunRecordVersion},
             {"tool_version", record.tool_version},
             {"spec", spec_json(record.spec)},
             {"provenance", record.provenance},
             {"maximize", record.maximize},
             {"n", record.result.mask.size()},
             {"seed", record.result.seed},
             {"rng", record.result.rng},
             {"mask", mask},
             {"value", record.result.indicator_value},
             {"history", record.result.history},
             {"points", points_json(record.selected)},
             {"wall_time", record.wall_time}};
    return doc.dump(2) + "\n";
}

RunRecord parse_run_record(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("run record: ") + e.what());
    }
    try {
        const int version = doc.at("version").get<int>();
        if (version != kRunRecordVersion)
            throw InputError("run record: unsupported schema version " + std::to_string(version));
        RunRecord r;
        r.tool_version = doc.value("tool_version", "");
        r.spec = spec_from_json(doc.at("spec"));
        r.provenance = doc.value("provenance", "");
        r.maximize = doc.value("maximize", false);
        const auto n = doc.at("n").get<std::size_t>();
        const auto mask = doc.at("mask").get<std::vector<std::size_t>>();
        r.result.mask = SubsetMask::from_indices(n, mask);
        r.result.seed = doc.at("seed").get<std::uint64_t>();
        r.result.rng = doc.value("rng", "");
        r.result.indicator_value = doc.at("value").get<double>();
        r.result.history = doc.at("history").get<std::vector<double>>();
        r.selected = points_from_json(doc.at("points"));
        r.wall_time = doc.value("wall_time", 0.0);
        return r;
    } catch (const json::exception& e) {
        throw InputError(std::string("run record: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw InputError(std::string("run record: ") + e.what());
    }
}

void write_result(const RunRecord& record, const std::filesystem::path& path) {
    write_file(path, run_record_json(record));
}

RunRecord read_result(const std::filesystem::path& path) { return parse_run_record(read_file(path)); }

PipelineDocument parse_pipeline(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("pipeline: ") + e.what());
    }
    try {
        PipelineDocument out;
        if (doc.contains("seed")) out.seed = doc["seed"].get<std::uint64_t>();
        for (const auto& js : doc.at("stages")) {
            PipelineStage st;
            st.strategy = parse_strategy(js.at("strategy").get<std::string>());
            st.indicator = parse_indicator(js.value("indicator", std::string("igdplus")));
            st.k = js.at("k").get<std::size_t>();
            if (js.contains("ref")) st.reference = parse_reference(js["ref"].get<std::string>());
            st.ga.population = js.value("mu", st.ga.population);
            st.ga.generations = js.value("generations", st.ga.generations);
            st.ga.crossover_prob = js.value("crossover_prob", st.ga.crossover_prob);
            out.stages.push_back(std::move(st));
        }
        if (out.stages.empty()) throw InputError("pipeline: no stages");
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("pipeline: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw InputError(std::string("pipeline: ") + e.what());
    }
}

}  // namespace subsel::io
