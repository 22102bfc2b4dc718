#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "stsc/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"space-time storage code toolkit"};
    app.set_version_flag("--version", std::string("stsc ") + stsc::kVersion);
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo BER sweep and write CSV");
    std::string config_path;
    std::vector<std::string> scheme_names;
    std::string fading_name_opt;
    double snr_start = 0, snr_stop = 0, snr_step = 0;
    std::uint64_t trials = 0, seed = 0;
    int nr = 0;
    std::string out_path;
    auto* opt_config = sweep->add_option("--config", config_path, "JSON config file (flags override)");
    auto* opt_scheme = sweep->add_option("--scheme", scheme_names,
                                         "scheme: ssm, dsm, mac-golden, mac-golden-notwist (repeatable)");
    auto* opt_fading = sweep->add_option("--fading", fading_name_opt, "fading model: slow or fast");
    auto* opt_start = sweep->add_option("--snr-start", snr_start, "first SNR point (dB)");
    auto* opt_stop = sweep->add_option("--snr-stop", snr_stop, "last SNR point (dB)");
    auto* opt_step = sweep->add_option("--snr-step", snr_step, "SNR step (dB)");
    auto* opt_trials = sweep->add_option("--trials", trials, "Monte Carlo trials per point");
    auto* opt_seed = sweep->add_option("--seed", seed, "master seed");
    auto* opt_nr = sweep->add_option("--nr", nr, "receive antennas");
    auto* opt_out = sweep->add_option("--out", out_path, "output CSV path");

    // cnvd
    auto* cnvd = app.add_subcommand("cnvd", "verify the non-vanishing determinant property");
    std::string cnvd_scheme;
    std::string cnvd_mode = "over-codewords";
    cnvd->add_option("--scheme", cnvd_scheme, "mac-golden-twist or mac-golden-notwist")->required();
    cnvd->add_option("--mode", cnvd_mode, "over-codewords (default) or over-differences");

    // lift-check
    auto* lift = app.add_subcommand("lift-check", "exhaustive lift and coset bijectivity checks");
    int t_max = 4;
    lift->add_option("--t-max", t_max, "largest coset level to check (<= 8)");

    // selftest
    app.add_subcommand("selftest", "end-to-end sanity checks");

    // plot
    auto* plot = app.add_subcommand("plot", "render BER curves from sweep CSVs to SVG");
    std::vector<std::string> csv_paths;
    stsc::cli::PlotOptions plot_options;
    plot->add_option("csv", csv_paths, "sweep CSV files")->required();
    plot->add_option("--out", plot_options.out, "output SVG path");
    plot->add_option("--fragment-bits", plot_options.fragment_bits,
                     "fragment size used for the BER floor (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (sweep->parsed()) {
            stsc::cli::SweepSpec spec;
            if (opt_config->count() > 0) spec = stsc::cli::SweepSpec::from_json_file(config_path);
            if (opt_scheme->count() > 0) {
                spec.schemes.clear();
                for (const auto& name : scheme_names)
                    spec.schemes.push_back(stsc::Scheme::parse(name));
            }
            if (opt_fading->count() > 0) spec.fading = stsc::fading_parse(fading_name_opt);
            if (opt_start->count() > 0) spec.snr_start = snr_start;
            if (opt_stop->count() > 0) spec.snr_stop = snr_stop;
            if (opt_step->count() > 0) spec.snr_step = snr_step;
            if (opt_trials->count() > 0) spec.trials = trials;
            if (opt_seed->count() > 0) spec.seed = seed;
            if (opt_nr->count() > 0) spec.n_r = nr;
            if (opt_out->count() > 0) spec.out = out_path;
            return stsc::cli::cmd_sweep(spec);
        }
        if (cnvd->parsed()) return stsc::cli::cmd_cnvd(cnvd_scheme, cnvd_mode);
        if (lift->parsed()) return stsc::cli::cmd_lift_check(t_max);
        if (app.get_subcommand("selftest")->parsed()) return stsc::cli::cmd_selftest();
        if (plot->parsed()) return stsc::cli::cmd_plot(csv_paths, plot_options);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
