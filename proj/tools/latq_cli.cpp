// Config-driven front end: assembles catalog families, lifts and Omega maps
// from a JSON document and runs checks, evaluations and sweeps, writing
// machine-readable tables. Exit codes: 0 ok, 1 a check failed, 2 config error.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>

#include "latq/config.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& contents) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

fs::path out_path(const std::string& out_dir, const std::string& name) {
    return out_dir.empty() ? fs::path(name) : fs::path(out_dir) / name;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice-sum quantization experiments"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    bool have_seed = false;
    std::uint64_t seed_override = 0;
    app.add_option("--config", config_path, "JSON experiment config")->required();
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed_override, "override the config seed")
        ->each([&](const std::string&) { have_seed = true; });

    CLI::App* cmd_check = app.add_subcommand("check", "run configured property checks");
    CLI::App* cmd_bs = app.add_subcommand("bs", "emit the Bohr-Sommerfeld point table");
    CLI::App* cmd_theta = app.add_subcommand("theta-eval", "evaluate the theta section");
    CLI::App* cmd_norms = app.add_subcommand("norms", "L^p norms against the closed form");
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "adiabatic sweep over t_list");
    CLI::App* cmd_jacobi = app.add_subcommand("jacobi", "classical-theta identification residuals");
    for (CLI::App* sub : {cmd_check, cmd_bs, cmd_theta, cmd_norms, cmd_sweep, cmd_jacobi})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    latq::ExperimentConfig cfg;
    try {
        cfg = latq::load_config(config_path);
        if (have_seed) cfg.seed = seed_override;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_check->parsed()) {
            latq::CheckReport rep = latq::run_checks(cfg);
            std::cout << rep.text;
            return rep.all_passed ? 0 : 1;
        }
        if (cmd_bs->parsed()) {
            std::string csv = latq::bs_table_csv(cfg);
            std::cout << csv;
            if (!cfg.out_csv.empty()) write_file(out_path(out_dir, cfg.out_csv), csv);
            if (!cfg.out_json.empty())
                write_file(out_path(out_dir, cfg.out_json), latq::bs_table_json(cfg).dump(2) + "\n");
            return 0;
        }
        if (cmd_theta->parsed()) {
            std::string csv = latq::theta_eval_csv(cfg);
            std::cout << csv;
            if (!cfg.out_csv.empty()) write_file(out_path(out_dir, cfg.out_csv), csv);
            return 0;
        }
        if (cmd_norms->parsed()) {
            std::string csv = latq::norms_csv(cfg);
            std::cout << csv;
            if (!cfg.out_csv.empty()) write_file(out_path(out_dir, cfg.out_csv), csv);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            latq::SweepResult res = latq::run_sweep(cfg);
            std::string csv = latq::sweep_csv(res);
            std::cout << csv;
            if (!cfg.out_csv.empty()) write_file(out_path(out_dir, cfg.out_csv), csv);
            if (!cfg.out_json.empty())
                write_file(out_path(out_dir, cfg.out_json), latq::sweep_json(res).dump(2) + "\n");
            return 0;
        }
        if (cmd_jacobi->parsed()) {
            std::string csv = latq::jacobi_csv(cfg);
            std::cout << csv;
            if (!cfg.out_csv.empty()) write_file(out_path(out_dir, cfg.out_csv), csv);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
