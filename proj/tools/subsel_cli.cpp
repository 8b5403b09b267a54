// subsel: pick a small decision-ready subset of a large non-dominated set.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "subsel/errors.hpp"
#include "subsel/experiment.hpp"
#include "subsel/fronts.hpp"
#include "subsel/indicators.hpp"
#include "subsel/io.hpp"
#include "subsel/selection.hpp"

namespace fs = std::filesystem;
using namespace subsel;

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kInput = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where the candidate set comes from: a file or a front generator.
struct InputOptions {
    std::string input;
    std::string format = "csv";
    bool maximize = false;
    bool normalized = false;
    std::string front;
    fronts::FrontSpec front_spec;

    void add_to(CLI::App* app) {
        app->add_option("--input", input, "Points file (one point per row)");
        app->add_option("--format", format, "Input format: csv or json")->check(CLI::IsMember({"csv", "json"}));
        app->add_flag("--maximize", maximize, "Objectives are maximized; values are negated on ingestion");
        app->add_flag("--normalized", normalized, "Inputs are normalized to [0,1]^m (enables --ref auto)");
        app->add_option("--front", front, "Generate the input from an analytic front instead of --input");
        app->add_option("--n", front_spec.n, "Sample count for --front");
        app->add_option("--front-seed", front_spec.seed, "Sampler seed for --front");
        app->add_option("--wave-j", front_spec.wave_j, "Oscillations of the wave front");
        app->add_option("--wave-amp", front_spec.wave_amplitude, "Amplitude of the wave front");
    }

    struct Loaded {
        PointSet points;
        std::string provenance;
        bool normalized = false;
    };

    Loaded load() const {
        if (input.empty() == front.empty()) throw UsageError("exactly one of --input or --front is required");
        if (!input.empty())
            return {io::read_points(input, io::parse_format(format), maximize), "file:" + input, normalized};
        if (maximize) throw UsageError("--maximize applies to --input only");
        auto spec = front_spec;
        spec.kind = fronts::parse_front_kind(front);
        std::ostringstream prov;
        prov << "front:" << fronts::to_string(spec.kind) << " n=" << spec.n << " seed=" << spec.seed;
        if (spec.kind == fronts::FrontKind::wave)
            prov << " j=" << spec.wave_j << " amp=" << io::format_double(spec.wave_amplitude);
        // Generated fronts live in (or, for distmin-5, are treated as) the normalized setting.
        return {fronts::generate(spec).points, prov.str(), true};
    }
};

struct SelectOptions {
    std::string indicator = "igdplus";
    std::string strategy = "ga";
    std::size_t k = 9;
    std::string ref;
    std::size_t mu = 100;
    std::size_t generations = 2000;
    double crossover = 1.0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000'000;

    void add_to(CLI::App* app) {
        app->add_option("--indicator", indicator, "hv, igd or igdplus")->check(CLI::IsMember({"hv", "igd", "igdplus"}));
        app->add_option("--strategy", strategy, "exhaustive, greedy, ga or distance")
            ->check(CLI::IsMember({"exhaustive", "greedy", "ga", "distance"}));
        app->add_option("--k", k, "Subset size");
        app->add_option("--ref", ref, "HV reference point as a comma-separated tuple, or 'auto'");
        app->add_option("--mu", mu, "GA population size");
        app->add_option("--generations", generations, "GA generations");
        app->add_option("--crossover-prob", crossover, "GA crossover probability");
        app->add_option("--seed", seed, "Root random seed");
        app->add_option("--budget", budget, "Maximum subsets for exhaustive enumeration");
    }

    SelectionSpec build(const PointSet& points, bool normalized) const {
        SelectionSpec spec;
        spec.indicator = parse_indicator(indicator);
        spec.strategy = parse_strategy(strategy);
        spec.k = k;
        spec.ga = {mu, generations, crossover};
        spec.seed = seed;
        spec.exhaustive_budget = budget;
        if (spec.indicator == Indicator::hv) {
            if (ref.empty()) throw UsageError("--indicator hv requires --ref");
            if (ref == "auto") {
                if (!normalized) throw UsageError("--ref auto requires --normalized inputs");
                spec.reference = io::auto_reference(points.dim(), k);
            } else {
                spec.reference = io::parse_reference(ref);
            }
        } else if (!ref.empty()) {
            throw UsageError("--ref is only valid with --indicator hv");
        }
        try {
            spec.validate(points.size(), points.dim());
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        return spec;
    }
};

// Rebuilds the input options a record was produced from ("file:<path>" or
// "front:<kind> n=<n> seed=<seed> [j=<j> amp=<amp>]").
InputOptions inputs_from_provenance(const io::RunRecord& rec) {
    InputOptions in;
    in.maximize = rec.maximize;
    const std::string& p = rec.provenance;
    if (p.find(" pipeline:") != std::string::npos)
        throw UsageError("pipeline records cannot be replayed");
    if (p.starts_with("file:")) {
        in.input = p.substr(5);
        if (fs::path(in.input).extension() == ".json") in.format = "json";
        return in;
    }
    if (!p.starts_with("front:")) throw UsageError("record provenance unknown; pass --input or --front");
    std::istringstream words(p.substr(6));
    words >> in.front;
    for (std::string w; words >> w;) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = w.substr(0, eq), value = w.substr(eq + 1);
        if (key == "n") in.front_spec.n = std::stoull(value);
        else if (key == "seed") in.front_spec.seed = std::stoull(value);
        else if (key == "j") in.front_spec.wave_j = std::stoi(value);
        else if (key == "amp") in.front_spec.wave_amplitude = std::stod(value);
    }
    return in;
}

fs::path sibling_csv(const fs::path& json_path) {
    fs::path p = json_path;
    p.replace_extension(".csv");
    return p;
}

io::RunRecord make_record(const SelectionSpec& spec, const InputOptions& in, const std::string& provenance,
                          const PointSet& points, SelectionResult result, double seconds) {
    io::RunRecord rec;
    rec.spec = spec;
    rec.provenance = provenance;
    rec.maximize = in.maximize;
    const auto idx = result.mask.indices();
    PointSet selected = points.subset(idx);
    if (in.maximize) {
        PointSet flipped(selected.dim());
        std::vector<double> row(selected.dim());
        for (std::size_t p = 0; p < selected.size(); ++p) {
            for (std::size_t i = 0; i < row.size(); ++i) row[i] = -selected[p][i];
            flipped.push_back(row);
        }
        selected = std::move(flipped);
    }
    rec.selected = std::move(selected);
    rec.result = std::move(result);
    rec.wall_time = seconds;
    rec.tool_version = io::tool_version();
    return rec;
}

void emit_record(const io::RunRecord& rec, const std::string& out, const std::string& selected_out) {
    const std::string text = io::run_record_json(rec);
    if (out.empty()) {
        std::cout << text;
        return;
    }
    io::write_file(out, text);
    io::write_points_csv(selected_out.empty() ? sibling_csv(out) : fs::path(selected_out), rec.selected, false,
                         "selected points, original orientation");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run(int argc, char** argv) {
    CLI::App app{"Select a small decision-ready subset from a large non-dominated solution set"};
    app.set_version_flag("--version", io::tool_version());
    app.require_subcommand(1);

    // generate -------------------------------------------------------------
    auto* gen = app.add_subcommand("generate", "Sample an analytic Pareto front to a points CSV");
    std::string gen_front;
    fronts::FrontSpec gen_spec;
    std::string gen_out, gen_decision_out;
    gen->add_option("--front", gen_front, "dtlz2-2d, minus-dtlz2-2d, minus-dtlz1-3d, wave, distmin-5")->required();
    gen->add_option("--n", gen_spec.n, "Sample count");
    gen->add_option("--seed", gen_spec.seed, "Sampler seed");
    gen->add_option("--wave-j", gen_spec.wave_j, "Oscillations of the wave front");
    gen->add_option("--wave-amp", gen_spec.wave_amplitude, "Amplitude of the wave front");
    gen->add_option("--out", gen_out, "Output CSV (stdout if omitted)");
    gen->add_option("--decision-out", gen_decision_out, "distmin-5 only: decision-space points CSV");

    // select ---------------------------------------------------------------
    auto* sel = app.add_subcommand("select", "Select k points and write a run record");
    InputOptions sel_in;
    SelectOptions sel_opts;
    std::string sel_out, sel_csv;
    sel_in.add_to(sel);
    sel_opts.add_to(sel);
    sel->add_option("--out", sel_out, "Run record JSON (stdout if omitted)");
    sel->add_option("--selected-out", sel_csv, "Selected points CSV (default: --out with .csv)");

    // evaluate -------------------------------------------------------------
    auto* ev = app.add_subcommand("evaluate", "Report HV, IGD and IGD+ of a subset against the full set");
    InputOptions ev_in;
    std::string ev_subset, ev_record, ev_ref;
    ev_in.add_to(ev);
    ev->add_option("--subset", ev_subset, "Subset points file (same format and orientation as --input)");
    ev->add_option("--record", ev_record, "Run record whose mask indexes --input");
    ev->add_option("--ref", ev_ref, "HV reference point tuple or 'auto' (HV omitted without it)");
    std::size_t ev_k = 9;
    ev->add_option("--k", ev_k, "Subset size used by --ref auto");

    // pipeline -------------------------------------------------------------
    auto* pipe = app.add_subcommand("pipeline", "Run a staged reduction described by a JSON file");
    InputOptions pipe_in;
    std::string pipe_spec, pipe_out, pipe_csv;
    std::optional<std::uint64_t> pipe_seed;
    std::uint64_t pipe_budget = 10'000'000;
    pipe_in.add_to(pipe);
    pipe->add_option("--spec", pipe_spec, "Stage file")->required();
    pipe->add_option("--seed", pipe_seed, "Root seed (overrides the stage file)");
    pipe->add_option("--budget", pipe_budget, "Maximum subsets for exhaustive stages");
    pipe->add_option("--out", pipe_out, "Run record JSON (stdout if omitted)");
    pipe->add_option("--selected-out", pipe_csv, "Selected points CSV (default: --out with .csv)");

    // experiment -----------------------------------------------------------
    auto* exp = app.add_subcommand("experiment", "Repeat a selection over consecutive seeds and keep the median run");
    InputOptions exp_in;
    SelectOptions exp_opts;
    std::size_t repeats = 31;
    std::size_t threads = 0;
    std::string exp_out, exp_csv, exp_summary;
    exp_in.add_to(exp);
    exp_opts.add_to(exp);
    exp->add_option("--repeats", repeats, "Number of seeded runs");
    exp->add_option("--threads", threads, "Worker threads (0 = all cores)");
    exp->add_option("--out", exp_out, "Median run record JSON");
    exp->add_option("--selected-out", exp_csv, "Median run selected points CSV (default: --out with .csv)");
    exp->add_option("--summary", exp_summary, "Per-seed values JSON (stdout if omitted)");

    // plot -----------------------------------------------------------------
    auto* plot = app.add_subcommand("plot", "Render points and a selected subset as SVG");
    std::string plot_input, plot_format = "csv", plot_record, plot_title, plot_out;
    plot->add_option("--input", plot_input, "Points CSV/JSON (objective or decision space)")->required();
    plot->add_option("--format", plot_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    plot->add_option("--record", plot_record, "Run record whose mask indexes --input");
    plot->add_option("--title", plot_title, "Plot title");
    plot->add_option("--out", plot_out, "Output SVG")->required();

    // replay ---------------------------------------------------------------
    auto* rep = app.add_subcommand("replay", "Re-run a recorded selection and check it reproduces exactly");
    InputOptions rep_in;
    std::string rep_record;
    rep_in.add_to(rep);
    rep->add_option("--record", rep_record, "Run record JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (*gen) {
        fronts::FrontSpec spec = gen_spec;
        spec.kind = fronts::parse_front_kind(gen_front);
        auto front = fronts::generate(spec);
        const std::string header = std::string(fronts::to_string(spec.kind)) + " n=" + std::to_string(spec.n) +
                                   " seed=" + std::to_string(spec.seed);
        if (gen_out.empty())
            io::write_points_csv(std::cout, front.points, false, header);
        else
            io::write_points_csv(gen_out, front.points, false, header);
        if (!gen_decision_out.empty()) {
            if (front.decisions.empty()) throw UsageError("--decision-out is only available for distmin-5");
            PointSet xs(2);
            for (const auto& d : front.decisions) xs.push_back(d.x);
            io::write_points_csv(gen_decision_out, xs, false, header + " decision space");
        }
        return kOk;
    }

    if (*sel) {
        auto loaded = sel_in.load();
        const auto spec = sel_opts.build(loaded.points, loaded.normalized);
        const auto t0 = std::chrono::steady_clock::now();
        auto result = select(loaded.points, spec);
        auto rec = make_record(spec, sel_in, loaded.provenance, loaded.points, std::move(result), seconds_since(t0));
        emit_record(rec, sel_out, sel_csv);
        return kOk;
    }

    if (*ev) {
        auto loaded = ev_in.load();
        if (ev_subset.empty() == ev_record.empty()) throw UsageError("exactly one of --subset or --record is required");
        PointSet subset;
        if (!ev_subset.empty()) {
            subset = io::read_points(ev_subset, io::parse_format(ev_in.format), ev_in.maximize);
        } else {
            const auto rec = io::read_result(ev_record);
            if (rec.result.mask.size() != loaded.points.size())
                throw InputError("record mask length does not match --input");
            subset = loaded.points.subset(rec.result.mask.indices());
        }
        if (subset.dim() != loaded.points.dim()) throw InputError("subset dimension does not match --input");
        nlohmann::json out{{"k", subset.size()},
                           {"n", loaded.points.size()},
                           {"igd", igd(subset, loaded.points)},
                           {"igdplus", igd_plus(subset, loaded.points)},
                           {"expected_loss", expected_loss(subset, loaded.points)}};
        if (!ev_ref.empty()) {
            ReferencePoint r;
            if (ev_ref == "auto") {
                if (!loaded.normalized) throw UsageError("--ref auto requires --normalized inputs");
                r = io::auto_reference(loaded.points.dim(), ev_k);
            } else {
                r = io::parse_reference(ev_ref);
            }
            if (r.dim() != loaded.points.dim()) throw UsageError("--ref dimension does not match the points");
            out["hv"] = hv(subset, r);
            out["reference_point"] = std::vector<double>(r.values().begin(), r.values().end());
        }
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    if (*pipe) {
        auto loaded = pipe_in.load();
        auto doc = io::parse_pipeline(io::read_file(pipe_spec));
        const std::uint64_t seed = pipe_seed.value_or(doc.seed.value_or(1));
        const auto t0 = std::chrono::steady_clock::now();
        auto result = select_pipeline(loaded.points, doc.stages, seed, pipe_budget);
        SelectionSpec spec;
        const auto& last = doc.stages.back();
        spec.strategy = last.strategy;
        spec.indicator = last.indicator;
        spec.k = last.k;
        spec.reference = last.reference;
        spec.ga = last.ga;
        spec.seed = seed;
        spec.exhaustive_budget = pipe_budget;
        auto rec = make_record(spec, pipe_in, loaded.provenance + " pipeline:" + pipe_spec, loaded.points,
                               std::move(result), seconds_since(t0));
        emit_record(rec, pipe_out, pipe_csv);
        return kOk;
    }

    if (*exp) {
        auto loaded = exp_in.load();
        const auto spec = exp_opts.build(loaded.points, loaded.normalized);
        const auto t0 = std::chrono::steady_clock::now();
        auto res = run_experiment(loaded.points, spec, repeats, threads);
        const double elapsed = seconds_since(t0);

        nlohmann::json summary{{"indicator", to_string(spec.indicator)},
                               {"strategy", to_string(spec.strategy)},
                               {"repeats", repeats},
                               {"seeds", res.seeds},
                               {"median_seed", res.seeds[res.median_run]},
                               {"median_value", res.runs[res.median_run].indicator_value},
                               {"wall_time", elapsed}};
        std::vector<double> values;
        for (const auto& r : res.runs) values.push_back(r.indicator_value);
        summary["values"] = values;
        if (exp_summary.empty())
            std::cout << summary.dump(2) << '\n';
        else
            io::write_file(exp_summary, summary.dump(2) + "\n");

        auto median_spec = spec;
        median_spec.seed = res.seeds[res.median_run];
        auto rec = make_record(median_spec, exp_in, loaded.provenance, loaded.points,
                               std::move(res.runs[res.median_run]), elapsed);
        if (!exp_out.empty()) emit_record(rec, exp_out, exp_csv);
        return kOk;
    }

    if (*plot) {
        const auto points = io::read_points(plot_input, io::parse_format(plot_format));
        std::vector<std::size_t> selected;
        if (!plot_record.empty()) {
            const auto rec = io::read_result(plot_record);
            if (rec.result.mask.size() != points.size()) throw InputError("record mask length does not match --input");
            selected = rec.result.mask.indices();
        }
        io::write_file(plot_out, io::render_svg(points, selected, {plot_title, {}}));
        return kOk;
    }

    if (*rep) {
        const auto rec = io::read_result(rep_record);
        if (rep_in.input.empty() && rep_in.front.empty()) rep_in = inputs_from_provenance(rec);
        auto loaded = rep_in.load();
        auto again = select(loaded.points, rec.spec);
        const bool same = again.mask == rec.result.mask && again.indicator_value == rec.result.indicator_value &&
                          again.history == rec.result.history;
        std::cout << (same ? "identical" : "DIFFERENT") << '\n';
        return same ? kOk : kFailure;
    }
    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
