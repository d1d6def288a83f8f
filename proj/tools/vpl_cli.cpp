#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "report.hpp"
#include "vpl/crossing.hpp"
#include "vpl/estimation.hpp"
#include "vpl/gof.hpp"
#include "vpl/trace_io.hpp"
#include "vpl/version.hpp"

namespace {

namespace fs = std::filesystem;
using vplcli::json;

/// "a,b" into two doubles. Failures are usage errors, not data errors.
std::pair<double, double> parse_pair(const std::string& text,
                                     const char* flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos ||
        text.find(',', comma + 1) != std::string::npos) {
        throw std::invalid_argument(std::string(flag) +
                                    " expects two comma-separated values");
    }
    try {
        return {vpl::parse_double(std::string_view(text).substr(0, comma)),
                vpl::parse_double(std::string_view(text).substr(comma + 1))};
    } catch (const vpl::ParseError&) {
        throw std::invalid_argument(std::string(flag) +
                                    " expects two comma-separated numbers");
    }
}

/// Output paths must be resolvable at parse time: the parent directory has
/// to exist already, only the file itself may be new.
const CLI::Validator kParentDirExists{
    [](std::string& value) -> std::string {
        const fs::path parent = fs::path(value).parent_path();
        std::error_code ec;
        if (!parent.empty() && !fs::is_directory(parent, ec)) {
            return "directory does not exist: " + parent.string();
        }
        return {};
    },
    "parent directory exists", "PARENT_DIR"};

struct SimulateOptions {
    double speed_kmh = 50.0;
    double separation_m = 35.0;
    double lateral_m = 0.0;
    double interval_ms = 5.0;
    double freq_ghz = 59.6;
    double eta1 = vpl::presets::kMovingIn50Kmh.eta1_db;
    double eta2 = vpl::presets::kMovingIn50Kmh.eta2;
    double sigma_db = vpl::presets::kMovingIn50Kmh.sigma_db;
    std::uint64_t seed = 0;
    std::string out;
};

struct FitOptions {
    std::string in;
    std::string out;
    std::string model = "all";
    double freq_ghz = 59.6;
    double speed_kmh = 50.0;
    double gamma = 2.0;
};

struct CompareOptions {
    std::string in;
    std::string out;
    std::string weights = "0.1,0.9";
    double freq_ghz = 59.6;
    double speed_kmh = 50.0;
    double gamma = 2.0;
};

struct AnalyzeOptions {
    std::vector<std::string> in;
    std::string eta1; // "a,b", empty = absent
    std::string eta2;
    std::string sigma_db;
    std::string gap_interval = "1,30";
    double freq_ghz = 59.6;
    std::string out;
};

vpl::CrossingTrace load_trace(const std::string& path, double freq_ghz,
                              double speed_kmh) {
    const std::string text = vpl::read_file(path);
    return vpl::parse_crossing_csv(text, vpl::Frequency::from_ghz(freq_ghz),
                                   speed_kmh / 3.6);
}

/// A one-sided pass is an input-data defect, not a usage error.
std::pair<vpl::Trace, vpl::Trace> split_or_data_error(
    const vpl::CrossingTrace& trace) {
    try {
        return vpl::split_at_rendezvous(trace);
    } catch (const std::invalid_argument& e) {
        throw vpl::ParseError(e.what(), 0);
    }
}

std::vector<vpl::FitResult> run_selected_fits(const vpl::Trace& trace,
                                              const std::string& model,
                                              double gamma) {
    if (model == "all") {
        return vpl::fit_all(trace, gamma);
    }
    if (model == "fi") {
        return {vpl::fit_fi(trace)};
    }
    if (model == "ci") {
        return {vpl::fit_ci(trace)};
    }
    if (model == "abg") {
        return {vpl::fit_abg(trace, gamma)};
    }
    if (model == "3gpp") {
        return {vpl::fit_three_gpp(trace)};
    }
    return {vpl::fit_crossing(trace)};
}

int run_simulate(const SimulateOptions& opt) {
    vpl::ScenarioConfig cfg;
    cfg.initial_separation_m = opt.separation_m;
    cfg.relative_speed_mps = opt.speed_kmh / 3.6;
    cfg.lateral_offset_m = opt.lateral_m;
    cfg.sample_interval_s = opt.interval_ms / 1000.0;
    cfg.frequency = vpl::Frequency::from_ghz(opt.freq_ghz);
    cfg.generator = vpl::CrossingParams{opt.eta1, opt.eta2, opt.sigma_db};
    cfg.seed = opt.seed;

    const vpl::CrossingTrace trace = vpl::simulate_crossing(cfg);
    std::size_t below = 0;
    for (const vpl::CrossingSample& s : trace.samples) {
        below += vpl::below_reference(s) ? 1 : 0;
    }
    vpl::write_file(opt.out, vpl::to_csv(trace));
    std::cout << "wrote " << opt.out << ": " << trace.samples.size()
              << " samples, " << below << " below the 1 m reference\n";
    return 0;
}

int run_fit(const FitOptions& opt) {
    const vpl::CrossingTrace trace =
        load_trace(opt.in, opt.freq_ghz, opt.speed_kmh);
    const auto halves = split_or_data_error(trace);

    const json config{{"freq_ghz", opt.freq_ghz}, {"gamma", opt.gamma},
                      {"in", opt.in},             {"model", opt.model},
                      {"out", opt.out},           {"speed_kmh", opt.speed_kmh}};

    json fits;
    std::string tables;
    for (const vpl::Trace* half : {&halves.first, &halves.second}) {
        const auto results = run_selected_fits(*half, opt.model, opt.gamma);
        json& dir = fits[std::string(vpl::direction_name(half->direction))];
        for (const vpl::FitResult& fit : results) {
            dir[std::string(vpl::family_name(vpl::family_of(fit.params)))] =
                vplcli::fit_json(fit);
        }
        tables += vplcli::fit_table(*half, results) + "\n";
    }

    const json report{{"command", "fit"},
                      {"config", config},
                      {"fits", fits},
                      {"provenance", vplcli::make_provenance(config, nullptr)}};
    vplcli::write_json_file(opt.out, report);
    std::cout << tables << "wrote " << opt.out << "\n";
    return 0;
}

int run_compare(const CompareOptions& opt) {
    const auto [alpha, beta] = parse_pair(opt.weights, "--weights");
    const vpl::GofWeights weights{alpha, beta};
    const vpl::CrossingTrace trace =
        load_trace(opt.in, opt.freq_ghz, opt.speed_kmh);
    const auto halves = split_or_data_error(trace);

    const json config{{"freq_ghz", opt.freq_ghz},
                      {"gamma", opt.gamma},
                      {"in", opt.in},
                      {"out", opt.out},
                      {"speed_kmh", opt.speed_kmh},
                      {"weights", json::array({alpha, beta})}};

    json fits;
    json gof;
    std::string tables;
    for (const vpl::Trace* half : {&halves.first, &halves.second}) {
        const auto results = vpl::fit_all(*half, opt.gamma);
        const vpl::GofReport ranked = rank_models(results, *half, weights);
        const std::string dir(vpl::direction_name(half->direction));
        json& dir_fits = fits[dir];
        for (const vpl::FitResult& fit : results) {
            dir_fits[std::string(
                vpl::family_name(vpl::family_of(fit.params)))] =
                vplcli::fit_json(fit);
        }
        gof[dir] = vplcli::gof_json(ranked);
        tables += vplcli::fit_table(*half, results);
        tables += vplcli::gof_table(ranked) + "\n";
    }

    json provenance = vplcli::make_provenance(config, nullptr);
    provenance["weights"] = json{{"alpha", alpha}, {"beta", beta}};
    const json report{{"command", "compare"},
                      {"config", config},
                      {"fits", fits},
                      {"gof", gof},
                      {"provenance", provenance}};
    vplcli::write_json_file(opt.out, report);
    std::cout << tables << "wrote " << opt.out << "\n";
    return 0;
}

struct LabeledParams {
    vpl::CrossingParams params;
    std::string source;
};

json parse_report_file(const std::string& path) {
    try {
        return json::parse(vpl::read_file(path));
    } catch (const json::exception& e) {
        throw vpl::ParseError(path + ": " + e.what(), 0);
    }
}

/// Two curves either from explicit parameter pairs or from report files:
/// one file pits its own directions against each other, two files pit the
/// first one's moving-in fit against the second one's moving-away fit.
std::pair<LabeledParams, LabeledParams> analyze_inputs(
    const AnalyzeOptions& opt) {
    const bool have_flags = !opt.eta1.empty() || !opt.eta2.empty();
    if (have_flags && !opt.in.empty()) {
        throw std::invalid_argument(
            "give either --in report files or --eta1/--eta2 pairs, not both");
    }
    if (have_flags) {
        if (opt.eta1.empty() || opt.eta2.empty()) {
            throw std::invalid_argument(
                "--eta1 and --eta2 must be given together");
        }
        const auto [e1a, e1b] = parse_pair(opt.eta1, "--eta1");
        const auto [e2a, e2b] = parse_pair(opt.eta2, "--eta2");
        double sa = 0.0;
        double sb = 0.0;
        if (!opt.sigma_db.empty()) {
            std::tie(sa, sb) = parse_pair(opt.sigma_db, "--sigma-db");
        }
        return {{vpl::CrossingParams{e1a, e2a, sa}, "flags"},
                {vpl::CrossingParams{e1b, e2b, sb}, "flags"}};
    }
    if (opt.in.empty() || opt.in.size() > 2) {
        throw std::invalid_argument(
            "analyze needs --eta1/--eta2 pairs or one or two --in reports");
    }
    const json first = parse_report_file(opt.in.front());
    const json second =
        opt.in.size() == 2 ? parse_report_file(opt.in.back()) : first;
    const std::string& first_path = opt.in.front();
    const std::string& second_path = opt.in.back();
    return {{vplcli::crossing_from_report(first, "moving_in", first_path),
             "moving_in from " + first_path},
            {vplcli::crossing_from_report(second, "moving_away", second_path),
             "moving_away from " + second_path}};
}

/// Median curve over a 0.1 m grid from 1 m to at least 35 m; points outside
/// the stated gap interval carry the extrapolation flag.
std::string plot_csv(const vpl::CrossingParams& params, vpl::Frequency freq,
                     double lo, double hi) {
    std::string out = "distance_m,pl_db,extrapolated\n";
    const long last =
        std::lround(std::min(std::max(35.0, hi), 1000.0) * 10.0);
    const vpl::ModelParams model{params};
    for (long i = 10; i <= last; ++i) {
        const double d = static_cast<double>(i) / 10.0;
        out += vpl::format_double(d) + ',' +
               vpl::format_double(vpl::median_path_loss_db(model, freq, d)) +
               ',' + (d < lo || d > hi ? '1' : '0') + '\n';
    }
    return out;
}

int run_analyze(const AnalyzeOptions& opt) {
    const auto [lo, hi] = parse_pair(opt.gap_interval, "--gap-interval");
    const auto [a, b] = analyze_inputs(opt);
    vpl::validate(vpl::ModelParams{a.params});
    vpl::validate(vpl::ModelParams{b.params});
    const vpl::Frequency freq = vpl::Frequency::from_ghz(opt.freq_ghz);

    json crossover;
    try {
        const double d = vpl::crossover_distance_m(a.params, b.params);
        if (std::isfinite(d)) {
            // A crossover outside the stated interval is still reported but
            // marked as an extrapolation beyond the analyzed span.
            crossover = json{{"distance_m", d},
                             {"extrapolated", !(d > lo && d < hi)},
                             {"note", nullptr}};
        } else {
            crossover = json{{"distance_m", nullptr},
                             {"extrapolated", nullptr},
                             {"note", "curves cross outside any finite "
                                      "distance range"}};
        }
    } catch (const std::invalid_argument& e) {
        crossover = json{{"distance_m", nullptr},
                         {"extrapolated", nullptr},
                         {"note", e.what()}};
    }

    const double max_gap = vpl::max_path_loss_gap_db(a.params, b.params, lo, hi);
    const auto gap_at = [&](double d) {
        return std::abs((a.params.eta1_db - b.params.eta1_db) +
                        (a.params.eta2 - b.params.eta2) * std::log10(d));
    };
    const double gap_argmax = gap_at(hi) >= gap_at(lo) ? hi : lo;
    const vpl::CrossingParams average = vpl::average_params(a.params, b.params);

    const fs::path out_path(opt.out);
    const fs::path plot_a =
        out_path.parent_path() / (out_path.stem().string() + "_curve_a.csv");
    const fs::path plot_b =
        out_path.parent_path() / (out_path.stem().string() + "_curve_b.csv");

    json config{{"freq_ghz", opt.freq_ghz},
                {"gap_interval_m", json::array({lo, hi})},
                {"out", opt.out}};
    if (!opt.in.empty()) {
        config["in"] = opt.in;
    } else {
        config["eta1"] = json::array({a.params.eta1_db, b.params.eta1_db});
        config["eta2"] = json::array({a.params.eta2, b.params.eta2});
        config["sigma_db"] =
            json::array({a.params.sigma_db, b.params.sigma_db});
    }

    const json report{
        {"command", "analyze"},
        {"config", config},
        {"average", vplcli::params_json(vpl::ModelParams{average})},
        {"crossover", crossover},
        {"gap",
         {{"interval_m", json::array({lo, hi})},
          {"max_gap_db", max_gap},
          {"at_distance_m", gap_argmax}}},
        {"inputs",
         {{"curve_a",
           {{"params", vplcli::params_json(vpl::ModelParams{a.params})},
            {"source", a.source}}},
          {"curve_b",
           {{"params", vplcli::params_json(vpl::ModelParams{b.params})},
            {"source", b.source}}}}},
        {"plot_files", json::array({plot_a.string(), plot_b.string()})},
        {"provenance", vplcli::make_provenance(config, nullptr)}};

    const std::string csv_a = plot_csv(a.params, freq, lo, hi);
    const std::string csv_b = plot_csv(b.params, freq, lo, hi);
    std::vector<fs::path> written;
    try {
        vpl::write_file(plot_a, csv_a);
        written.push_back(plot_a);
        vpl::write_file(plot_b, csv_b);
        written.push_back(plot_b);
        vplcli::write_json_file(out_path, report);
    } catch (...) {
        std::error_code ec;
        for (const fs::path& p : written) {
            fs::remove(p, ec);
        }
        throw;
    }

    std::cout << "curve a: " << vplcli::param_summary(
                     vpl::ModelParams{a.params})
              << "  (" << a.source << ")\n";
    std::cout << "curve b: " << vplcli::param_summary(
                     vpl::ModelParams{b.params})
              << "  (" << b.source << ")\n";
    if (crossover.at("distance_m").is_null()) {
        std::cout << "crossover: none (" << crossover.at("note").get<std::string>()
                  << ")\n";
    } else {
        std::cout << "crossover: "
                  << vpl::format_double(crossover.at("distance_m").get<double>())
                  << " m\n";
    }
    std::cout << "max gap over [" << vpl::format_double(lo) << ", "
              << vpl::format_double(hi) << "] m: "
              << vpl::format_double(max_gap) << " dB at "
              << vpl::format_double(gap_argmax) << " m\n";
    std::cout << "average model: "
              << vplcli::param_summary(vpl::ModelParams{average})
              << "  sigma_db=" << vpl::format_double(average.sigma_db) << "\n";
    std::cout << "wrote " << opt.out << ", " << plot_a.string() << ", "
              << plot_b.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmWave V2V crossing-cars path-loss toolkit"};
    app.set_version_flag("--version", std::string(vpl::kVersion));
    app.require_subcommand(1);

    SimulateOptions sim;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Generate a synthetic crossing trace");
    simulate->add_option("--speed-kmh", sim.speed_kmh, "Relative speed [km/h]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate
        ->add_option("--separation-m", sim.separation_m,
                     "Initial separation [m]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate
        ->add_option("--lateral-offset-m", sim.lateral_m,
                     "Lateral offset between lanes [m]")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    simulate
        ->add_option("--interval-ms", sim.interval_ms, "Sample interval [ms]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--freq-ghz", sim.freq_ghz, "Carrier frequency [GHz]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate
        ->add_option("--eta1", sim.eta1, "Generator eta1 [dB]")
        ->capture_default_str();
    simulate
        ->add_option("--eta2", sim.eta2, "Generator log-distance coefficient")
        ->capture_default_str();
    simulate
        ->add_option("--sigma-db", sim.sigma_db, "Shadow-fading std [dB]")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    simulate->add_option("--seed", sim.seed, "RNG seed")->required();
    simulate->add_option("--out", sim.out, "Output trace CSV")
        ->required()
        ->check(kParentDirExists);

    FitOptions fit;
    CLI::App* fit_cmd =
        app.add_subcommand("fit", "Fit path-loss models to a crossing trace");
    fit_cmd->add_option("--in", fit.in, "Input trace CSV")
        ->required()
        ->check(CLI::ExistingFile);
    fit_cmd->add_option("--out", fit.out, "Output report JSON")
        ->required()
        ->check(kParentDirExists);
    fit_cmd->add_option("--freq-ghz", fit.freq_ghz, "Carrier frequency [GHz]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fit_cmd
        ->add_option("--speed-kmh", fit.speed_kmh,
                     "Relative speed of the recorded pass [km/h]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    fit_cmd
        ->add_option("--model", fit.model, "Model family to fit, or all")
        ->check(CLI::IsMember({"all", "fi", "ci", "abg", "3gpp", "crossing"}))
        ->capture_default_str();
    fit_cmd
        ->add_option("--gamma", fit.gamma,
                     "Pinned ABG frequency exponent")
        ->capture_default_str();

    CompareOptions cmp;
    CLI::App* compare = app.add_subcommand(
        "compare", "Fit all families and rank them by goodness of fit");
    compare->add_option("--in", cmp.in, "Input trace CSV")
        ->required()
        ->check(CLI::ExistingFile);
    compare->add_option("--out", cmp.out, "Output report JSON")
        ->required()
        ->check(kParentDirExists);
    compare->add_option("--freq-ghz", cmp.freq_ghz, "Carrier frequency [GHz]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compare
        ->add_option("--speed-kmh", cmp.speed_kmh,
                     "Relative speed of the recorded pass [km/h]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    compare
        ->add_option("--weights", cmp.weights,
                     "Combined-score weights alpha,beta")
        ->capture_default_str();
    compare
        ->add_option("--gamma", cmp.gamma, "Pinned ABG frequency exponent")
        ->capture_default_str();

    AnalyzeOptions ana;
    CLI::App* analyze = app.add_subcommand(
        "analyze",
        "Crossover, gap and average of two crossing-model parameter sets");
    analyze
        ->add_option("--in", ana.in,
                     "Fit/compare report(s): one compares its own directions, "
                     "two compare the first's moving-in with the second's "
                     "moving-away")
        ->check(CLI::ExistingFile);
    analyze->add_option("--eta1", ana.eta1, "eta1 pair a,b [dB]");
    analyze->add_option("--eta2", ana.eta2,
                        "log-distance coefficient pair a,b");
    analyze->add_option("--sigma-db", ana.sigma_db,
                        "Shadow-fading std pair a,b [dB] (default 0,0)");
    analyze
        ->add_option("--gap-interval", ana.gap_interval,
                     "Distance interval lo,hi [m] for the max-gap scan")
        ->capture_default_str();
    analyze
        ->add_option("--freq-ghz", ana.freq_ghz,
                     "Frequency for plot-curve rendering [GHz]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--out", ana.out, "Output analysis JSON")
        ->required()
        ->check(kParentDirExists);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim);
        }
        if (fit_cmd->parsed()) {
            return run_fit(fit);
        }
        if (compare->parsed()) {
            return run_compare(cmp);
        }
        return run_analyze(ana);
    } catch (const vpl::FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const vpl::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
