#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "laborshare/data_io.hpp"
#include "laborshare/dynamics.hpp"
#include "laborshare/fitter.hpp"
#include "laborshare/model.hpp"
#include "laborshare/paths.hpp"
#include "laborshare/report.hpp"
#include "laborshare/stats.hpp"

namespace {

using namespace laborshare;

int to_exit_code(const Error& e) {
    return dynamic_cast<const DataError*>(&e) != nullptr ? 2 : 3;
}

// Output is buffered and written only after the computation succeeded, so a
// failing command leaves no partial files behind.
void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write " + path);
    out << text;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ','))
        if (!current.empty()) items.push_back(current);
    return items;
}

struct FitFlags {
    std::string labor;
    std::string age;
    std::string country = "US";
    std::string source = "fed";
    std::string report_path = "-";
    std::string plot_path;
    bool loss_history = false;
    FitConfig config;
};

void add_fit_config_flags(CLI::App* cmd, FitConfig& config) {
    cmd->add_option("--iterations", config.iterations, "SGD epochs per run")
        ->capture_default_str();
    cmd->add_option("--runs", config.runs, "independent runs to average")
        ->capture_default_str();
    cmd->add_option("--lr", config.learning_rate, "learning rate")->capture_default_str();
    cmd->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
    cmd->add_option("--init-low", config.init_low, "initialization lower bound")
        ->capture_default_str();
    cmd->add_option("--init-high", config.init_high, "initialization upper bound")
        ->capture_default_str();
}

void write_fit_config(ReportWriter& w, const FitConfig& config) {
    w.kv("iterations", config.iterations);
    w.kv("runs", config.runs);
    w.kv("learning_rate", config.learning_rate);
    w.kv("seed", std::to_string(config.seed));
    w.kv("init_low", config.init_low);
    w.kv("init_high", config.init_high);
    w.kv("projection_margin", config.projection_margin);
}

void write_fit_body(ReportWriter& w, const CountryDataset& data, const FitResult& result,
                    bool loss_history) {
    w.section("input");
    w.kv("country", data.country);
    w.kv("source", data.source);
    w.kv("aligned_years", static_cast<int>(data.size()));
    w.kv("dropped_labor_years", data.dropped_labor_years);
    w.kv("dropped_age_years", data.dropped_age_years);
    w.kv("labor_normalized_from_percent",
         data.labor_share.normalized_from_percent ? 1 : 0);
    w.kv("mu0", result.averaged_params.mu0);

    w.section("result");
    w.kv("n", result.averaged_params.n);
    w.kv("r0", result.averaged_params.r0);
    w.kv("k", result.averaged_params.k);
    w.kv("rmse", result.rmse);
    w.kv("runs_used", static_cast<int>(result.per_run_params.size()));

    w.section("warnings");
    w.kv("projection_events", result.warnings.projection_events);
    w.kv("failed_runs", result.warnings.failed_runs);

    if (loss_history) {
        w.section("loss");
        w.csv_header("run,iteration,mse");
        for (std::size_t run = 0; run < result.loss_history.size(); ++run)
            for (std::size_t it = 0; it < result.loss_history[run].size(); ++it)
                w.csv_row(std::to_string(run) + ',' + std::to_string(it + 1) + ',' +
                          format_double(result.loss_history[run][it]));
    }

    w.section("series");
    w.csv_header("year,observed,fitted");
    for (std::size_t i = 0; i < data.size(); ++i)
        w.csv_row(std::to_string(data.labor_share.points[i].year) + ',' +
                  format_double(data.labor_share.points[i].value) + ',' +
                  format_double(result.fitted_series.points[i].value));
}

int run_fit(const FitFlags& flags) {
    const auto labor_path = resolve_data_path(flags.labor);
    const auto age_path = resolve_data_path(flags.age);
    const TimeSeries labor = load_series(labor_path, SeriesSchema::labor_share);
    const TimeSeries age = load_series(age_path, SeriesSchema::median_age);
    const CountryDataset data = align(labor, age, flags.country, flags.source);
    const FitResult result = fit(data, flags.config);

    std::ostringstream rep;
    ReportWriter w(rep, "fit");
    w.section("config");
    w.kv("labor", flags.labor);
    w.kv("labor_resolved", labor_path.string());
    w.kv("age", flags.age);
    w.kv("age_resolved", age_path.string());
    write_fit_config(w, flags.config);
    write_fit_body(w, data, result, flags.loss_history);
    w.finish();
    emit(flags.report_path, rep.str());

    if (!flags.plot_path.empty()) {
        std::ostringstream plot;
        write_fit_plot(data.labor_share, result.fitted_series, plot);
        emit(flags.plot_path, plot.str());
    }
    return 0;
}

struct BatchFlags {
    std::string manifest;
    std::string out_dir;
    FitConfig config;
};

int run_batch_fit(const BatchFlags& flags) {
    const auto manifest_path = resolve_data_path(flags.manifest);
    const auto entries = load_manifest(manifest_path);
    if (entries.empty()) {
        std::cerr << "error: manifest " << manifest_path.string() << " lists no countries\n";
        return 1;
    }
    if (!flags.out_dir.empty())
        std::filesystem::create_directories(flags.out_dir);

    std::ostringstream summary;
    summary << "country,source,n,r0,k,mu0,rmse,status\n";
    bool any_failed = false;
    for (const ManifestEntry& entry : entries) {
        try {
            const TimeSeries labor = load_series(entry.labor_csv, SeriesSchema::labor_share);
            const TimeSeries age = load_series(entry.age_csv, SeriesSchema::median_age);
            const CountryDataset data = align(labor, age, entry.country, entry.source);
            const FitResult result = fit(data, flags.config);
            const ModelParams& p = result.averaged_params;
            summary << entry.country << ',' << entry.source << ',' << format_double(p.n)
                    << ',' << format_double(p.r0) << ',' << format_double(p.k) << ','
                    << format_double(p.mu0) << ',' << format_double(result.rmse) << ",ok\n";
            if (!flags.out_dir.empty()) {
                std::ostringstream rep;
                ReportWriter w(rep, "fit");
                w.section("config");
                w.kv("labor", entry.labor_csv.string());
                w.kv("age", entry.age_csv.string());
                write_fit_config(w, flags.config);
                write_fit_body(w, data, result, false);
                w.finish();
                std::string name = entry.country + "_" + entry.source + ".report.txt";
                for (char& c : name)
                    if (c == ' ' || c == '/') c = '_';
                emit((std::filesystem::path(flags.out_dir) / name).string(), rep.str());
            }
        } catch (const Error& e) {
            any_failed = true;
            std::string message = e.what();
            for (char& c : message)
                if (c == ',' || c == '\n') c = ';';
            summary << entry.country << ',' << entry.source << ",,,,,,failed: " << message
                    << '\n';
        }
    }
    std::cout << summary.str();
    if (!flags.out_dir.empty())
        emit((std::filesystem::path(flags.out_dir) / "summary.csv").string(), summary.str());
    return any_failed ? 2 : 0;
}

struct SimulateFlags {
    double sigma = 0.0;
    double delta = 0.0;
    double exponent_n = 1.0;
    std::vector<double> params; // n r0 k mu0
    std::string age;
    double a0 = 0.0;
    double dt = 0.0;
    double horizon = 0.0;
    std::string out_path = "-";
};

int run_simulate(const SimulateFlags& flags, bool age_driven) {
    SimConfig config;
    config.a_init = flags.a0;
    config.dt = flags.dt;
    config.horizon = flags.horizon;
    if (age_driven) {
        AgeDrivenRates rates;
        rates.params = {flags.params[0], flags.params[1], flags.params[2], flags.params[3]};
        rates.median_age = load_series(resolve_data_path(flags.age), SeriesSchema::median_age);
        rates.delta = flags.delta;
        config.rates = rates;
    } else {
        config.rates = FixedRates{{flags.sigma, flags.delta}, flags.exponent_n};
    }
    const Trajectory trajectory = simulate(config);
    std::ostringstream out;
    write_trajectory(trajectory, out);
    emit(flags.out_path, out.str());
    if (trajectory.clamp_events > 0)
        std::cerr << "warning: " << trajectory.clamp_events
                  << " steps clamped to [0,1]; consider a smaller --dt\n";
    return 0;
}

struct Fig10Flags {
    std::string manifest = "fig10_manifest.csv";
    std::string cognition = "cognition_word_recall.csv";
    std::string exclude = "Spain";
    std::string decline_mode = "points";
    int window_start = 1970;
    int window_end = 2012;
    std::string report_path = "-";
};

int run_fig10(const Fig10Flags& flags) {
    const auto manifest_path = resolve_data_path(flags.manifest);
    const auto cognition_path = resolve_data_path(flags.cognition);
    const auto entries = load_manifest(manifest_path);
    if (entries.empty()) {
        std::cerr << "error: manifest " << manifest_path.string() << " lists no countries\n";
        return 1;
    }
    const auto cognition = load_cognition(cognition_path);
    const DeclineMode mode =
        flags.decline_mode == "relative" ? DeclineMode::relative : DeclineMode::points;

    std::vector<DeclineRecord> records;
    std::vector<std::string> skipped;
    for (const ManifestEntry& entry : entries) {
        const CognitionRecord* cog = nullptr;
        for (const CognitionRecord& c : cognition)
            if (c.country == entry.country) {
                cog = &c;
                break;
            }
        if (cog == nullptr) {
            skipped.push_back(entry.country + ",no cognition data");
            continue;
        }
        const TimeSeries labor = load_series(entry.labor_csv, SeriesSchema::labor_share);
        const TimeSeries age = load_series(entry.age_csv, SeriesSchema::median_age);
        const CountryDataset data = align(labor, age, entry.country, entry.source);

        DeclineRecord rec;
        rec.country = entry.country;
        rec.source = entry.source;
        rec.window_start = flags.window_start;
        rec.window_end = flags.window_end;
        rec.labor_share_decline_pp =
            labor_share_decline(data, flags.window_start, flags.window_end, mode);
        rec.median_age_increase_years =
            age.value_at(flags.window_end) - age.value_at(flags.window_start);
        rec.cognitive_decline_pct = 100.0 * (cog->score_50s - cog->score_70s) / cog->score_50s;
        rec.aggregate_cognitive_decline_pct =
            aggregate_cognitive_decline(rec.median_age_increase_years, *cog);
        records.push_back(std::move(rec));
    }
    const Fig10Result result = fig10_analysis(records, split_list(flags.exclude));

    std::ostringstream rep;
    ReportWriter w(rep, "fig10");
    w.section("config");
    w.kv("manifest", flags.manifest);
    w.kv("manifest_resolved", manifest_path.string());
    w.kv("cognition", flags.cognition);
    w.kv("cognition_resolved", cognition_path.string());
    w.kv("exclude", flags.exclude);
    w.kv("decline_mode", flags.decline_mode);
    w.kv("window_start", flags.window_start);
    w.kv("window_end", flags.window_end);

    w.section("records");
    w.csv_header(
        "country,source,labor_decline_pp,age_increase_years,cognitive_decline_pct,"
        "aggregate_decline_pct,outlier");
    for (const DeclineRecord& rec : records)
        w.csv_row(rec.country + ',' + rec.source + ',' +
                  format_double(rec.labor_share_decline_pp) + ',' +
                  format_double(rec.median_age_increase_years) + ',' +
                  format_double(rec.cognitive_decline_pct) + ',' +
                  format_double(rec.aggregate_cognitive_decline_pct) + ',' +
                  (rec.outlier ? "1" : "0"));
    if (!skipped.empty()) {
        w.section("skipped");
        w.csv_header("country,reason");
        for (const std::string& row : skipped) w.csv_row(row);
    }

    w.section("result");
    w.kv("slope_through_origin", result.slope_through_origin);
    w.kv("r_aggregate_with_usfed", result.r_aggregate_with_usfed);
    w.kv("r_aggregate_without_usfed", result.r_aggregate_without_usfed);
    w.kv("r_age_with_usfed", result.r_age_with_usfed);
    w.kv("r_age_without_usfed", result.r_age_without_usfed);
    w.kv("r_cognitive_with_usfed", result.r_cognitive_with_usfed);
    w.kv("r_cognitive_without_usfed", result.r_cognitive_without_usfed);
    w.kv("records_used", result.records_used);
    w.finish();
    emit(flags.report_path, rep.str());
    return 0;
}

struct SynthFlags {
    double n = 0.0;
    double r0 = 0.0;
    double k = 0.0;
    double mu0 = 0.0;
    std::string age;
    double noise = 0.0;
    std::uint64_t seed = 64;
    std::string out_path = "-";
};

int run_synth(const SynthFlags& flags) {
    const TimeSeries age = load_series(resolve_data_path(flags.age), SeriesSchema::median_age);
    const ModelParams params{flags.n, flags.r0, flags.k, flags.mu0};
    const CountryDataset data = synthesize(params, age, flags.noise, flags.seed);
    std::ostringstream out;
    write_series(data.labor_share, out);
    emit(flags.out_path, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laborshare: long-tail labor share model, fitting and statistics"};
    app.require_subcommand(1);

    FitFlags fit_flags;
    CLI::App* fit_cmd = app.add_subcommand("fit", "fit model parameters to one country");
    fit_cmd->add_option("--labor", fit_flags.labor, "labor share CSV (year,value)")->required();
    fit_cmd->add_option("--age", fit_flags.age, "median age CSV (year,value)")->required();
    fit_cmd->add_option("--country", fit_flags.country, "country label for the report");
    fit_cmd->add_option("--source", fit_flags.source, "provenance tag for the report");
    add_fit_config_flags(fit_cmd, fit_flags.config);
    fit_cmd->add_option("--report", fit_flags.report_path, "report path ('-' for stdout)");
    fit_cmd->add_option("--plot", fit_flags.plot_path, "plot CSV path (year,observed,fitted)");
    fit_cmd->add_flag("--loss-history", fit_flags.loss_history,
                      "include per-run loss traces in the report");

    BatchFlags batch_flags;
    CLI::App* batch_cmd = app.add_subcommand("batch-fit", "fit every country in a manifest");
    batch_cmd->add_option("--manifest", batch_flags.manifest,
                          "manifest CSV (country,labor_csv,age_csv,source)")
        ->required();
    batch_cmd->add_option("--out", batch_flags.out_dir,
                          "directory for per-country reports and summary.csv");
    add_fit_config_flags(batch_cmd, batch_flags.config);

    SimulateFlags sim_flags;
    CLI::App* sim_cmd = app.add_subcommand("simulate", "integrate da/dt = sigma - a*delta");
    auto* sigma_opt = sim_cmd->add_option("--sigma", sim_flags.sigma, "supply innovation rate");
    sim_cmd->add_option("--delta", sim_flags.delta,
                        "demand innovation rate (also the reference rate with --params)")
        ->required();
    sim_cmd->add_option("--n", sim_flags.exponent_n,
                        "output share exponent for the labor share column")
        ->capture_default_str();
    auto* params_opt = sim_cmd->add_option("--params", sim_flags.params,
                                           "model parameters: n r0 k mu0 (age-driven rates)")
        ->expected(4);
    auto* age_opt = sim_cmd->add_option("--age", sim_flags.age,
                                        "median age CSV driving sigma/delta");
    sim_cmd->add_option("--a0", sim_flags.a0, "initial automation fraction")
        ->capture_default_str();
    sim_cmd->add_option("--dt", sim_flags.dt, "step size, years")->required();
    sim_cmd->add_option("--horizon", sim_flags.horizon, "total simulated time, years")
        ->required();
    sim_cmd->add_option("--out", sim_flags.out_path, "trajectory CSV path ('-' for stdout)");
    params_opt->excludes(sigma_opt);
    params_opt->needs(age_opt);
    age_opt->needs(params_opt);

    Fig10Flags fig10_flags;
    CLI::App* fig10_cmd =
        app.add_subcommand("fig10", "labor-share decline vs cognitive decline analysis");
    fig10_cmd->add_option("--manifest", fig10_flags.manifest, "manifest of countries")
        ->capture_default_str();
    fig10_cmd->add_option("--cognition", fig10_flags.cognition, "cognition scores CSV")
        ->capture_default_str();
    fig10_cmd->add_option("--exclude", fig10_flags.exclude,
                          "comma-separated outlier countries ('' for none)")
        ->capture_default_str();
    fig10_cmd
        ->add_option("--decline-mode", fig10_flags.decline_mode,
                     "labor decline units: points or relative")
        ->check(CLI::IsMember({"points", "relative"}))
        ->capture_default_str();
    fig10_cmd->add_option("--window-start", fig10_flags.window_start, "analysis window start")
        ->capture_default_str();
    fig10_cmd->add_option("--window-end", fig10_flags.window_end, "analysis window end")
        ->capture_default_str();
    fig10_cmd->add_option("--report", fig10_flags.report_path, "report path ('-' for stdout)");

    SynthFlags synth_flags;
    CLI::App* synth_cmd =
        app.add_subcommand("synth", "generate a synthetic labor-share CSV from the model");
    synth_cmd->add_option("--n", synth_flags.n, "long-tail exponent")->required();
    synth_cmd->add_option("--r0", synth_flags.r0, "baseline innovation ratio")->required();
    synth_cmd->add_option("--k", synth_flags.k, "age attenuation coefficient")->required();
    synth_cmd->add_option("--mu0", synth_flags.mu0, "baseline median age")->required();
    synth_cmd->add_option("--age", synth_flags.age, "median age CSV")->required();
    synth_cmd->add_option("--noise", synth_flags.noise, "Gaussian noise sd")
        ->capture_default_str();
    synth_cmd->add_option("--seed", synth_flags.seed, "RNG seed")->capture_default_str();
    synth_cmd->add_option("--out", synth_flags.out_path, "output CSV path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (fit_cmd->parsed()) return run_fit(fit_flags);
        if (batch_cmd->parsed()) return run_batch_fit(batch_flags);
        if (sim_cmd->parsed()) {
            if (!params_opt->count() && !sigma_opt->count()) {
                std::cerr << "error: simulate needs either --sigma or --params\n";
                return 1;
            }
            return run_simulate(sim_flags, params_opt->count() > 0);
        }
        if (fig10_cmd->parsed()) return run_fig10(fig10_flags);
        if (synth_cmd->parsed()) return run_synth(synth_flags);
    } catch (const laborshare::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return to_exit_code(e);
    }
    return 1;
}
