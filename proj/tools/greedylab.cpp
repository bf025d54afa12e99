#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "greedylab/checks.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/report.hpp"
#include "greedylab/reproduce.hpp"
#include "greedylab/specjson.hpp"

using namespace greedylab;
using nlohmann::json;

namespace {

// Inline JSON (leading '{' or '[') or a path to a JSON file.
json load_json_arg(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream f(arg);
        if (!f) throw std::invalid_argument("cannot open " + arg);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("invalid JSON in " + arg);
    return j;
}

void emit(const Report& rep, const std::string& out, const std::string& format) {
    if (format == "csv") {
        for (const Table& t : rep.tables) std::cout << table_to_csv(t);
    } else {
        std::cout << report_to_json(rep).dump(2) << '\n';
    }
    if (!out.empty()) {
        for (const std::string& path : write_report(rep, out))
            std::cerr << "wrote " << path << '\n';
    }
}

int exit_code(const Report& rep) {
    if (!rep.all_pass) return 1;
    if (rep.budget_exhausted) return 3;
    return 0;
}

struct RunFlags {
    std::string config_arg, spec_arg, weight_arg, out, format = "json";
    int window = 0;
    unsigned long long seed = 0;
    bool seed_set = false;
    long long budget = 0;
    double tol = 0.0;
    int workers = 1;
};

// Shared executor for the estimate and check commands: runs every item the
// config requests and folds pass/budget state into one report.
int run_experiment(const RunFlags& flags, const char* title) {
    json cj = flags.config_arg.empty() ? json::object() : load_json_arg(flags.config_arg);
    if (!flags.spec_arg.empty()) cj["space"] = load_json_arg(flags.spec_arg);
    if (!flags.weight_arg.empty()) cj["weight"] = load_json_arg(flags.weight_arg);
    if (flags.window > 0) {
        cj["window"] = flags.window;
        if (cj.contains("family")) cj["family"]["window"] = flags.window;
    }
    ExperimentConfig cfg = config_from_json(cj);
    if (flags.seed_set) cfg.family.seed = flags.seed;
    if (flags.budget > 0) cfg.family.sigma_budget = flags.budget;
    if (flags.tol > 0.0) cfg.family.min_tol = flags.tol;

    NormModel model(cfg.space, cfg.window);
    Report rep;
    rep.title = title;
    rep.config = config_to_json(cfg);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::function<json()>> jobs;
    for (const std::string& name : cfg.estimates)
        jobs.emplace_back([&, name] {
            return estimate_to_json(estimate(model, cfg.weight, name, cfg.family, cfg.m));
        });
    for (const std::string& id : cfg.checks)
        jobs.emplace_back([&, id] {
            CheckOptions opts;
            opts.base_weight = cfg.base_weight;
            return check_to_json(run_check(id, model, cfg.weight, cfg.family, opts));
        });
    if (cfg.democracy)
        jobs.emplace_back([&] {
            return democracy_to_json(
                democracy_table(model, cfg.democracy->first, cfg.democracy->second));
        });

    // Items are merged in request order, so worker count never changes output.
    if (flags.workers > 1) {
        std::vector<std::future<json>> futs;
        for (auto& job : jobs) futs.push_back(std::async(std::launch::async, job));
        for (auto& f : futs) rep.items.push_back(f.get());
    } else {
        for (auto& job : jobs) rep.items.push_back(job());
    }

    Table est{"estimates", {"name", "value", "instances"}, {}};
    Table chk{"checks", {"check_id", "mode", "all_pass", "max_ratio", "instances"}, {}};
    for (const json& item : rep.items) {
        std::string kind = item.value("item", "");
        if (kind == "estimate") {
            est.rows.push_back({item["name"].get<std::string>(),
                                format12(item["value"].get<double>()),
                                std::to_string(item["instance_count"].get<long long>())});
            if (item["budget_exhausted"].get<bool>()) rep.budget_exhausted = true;
        } else if (kind == "check") {
            bool pass = item["all_pass"].get<bool>();
            chk.rows.push_back({item["check_id"].get<std::string>(),
                                item["mode"].get<std::string>(), pass ? "true" : "false",
                                format12(item["max_ratio"].get<double>()),
                                std::to_string(item["instance_count"].get<long long>())});
            if (!pass) rep.all_pass = false;
            if (item["budget_exhausted"].get<bool>()) rep.budget_exhausted = true;
        }
    }
    if (!est.rows.empty()) rep.tables.push_back(std::move(est));
    if (!chk.rows.empty()) rep.tables.push_back(std::move(chk));
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    emit(rep, flags.out, flags.format);
    return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedylab: weighted greedy approximation laboratory"};
    app.require_subcommand(1);

    std::string norm_spec, norm_vec;
    int norm_window = 0;
    CLI::App* norm = app.add_subcommand("norm", "evaluate a norm on one vector");
    norm->add_option("--spec", norm_spec, "space spec (JSON file or inline)")->required();
    norm->add_option("--vector", norm_vec, "coefficient vector (JSON file or inline)")->required();
    norm->add_option("--window", norm_window, "window size (default: vector length)");

    RunFlags ef, kf;
    auto add_run_flags = [](CLI::App* cmd, RunFlags& f) {
        cmd->add_option("--config", f.config_arg, "experiment config (JSON file or inline)");
        cmd->add_option("--spec", f.spec_arg, "override the config's space spec");
        cmd->add_option("--weight", f.weight_arg, "override the config's weight");
        cmd->add_option("--window", f.window, "override the window");
        cmd->add_option("--seed", f.seed, "override the family seed")
            ->envname("GREEDYLAB_SEED")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--budget", f.budget, "override the sigma budget");
        cmd->add_option("--tol", f.tol, "numeric minimizer tolerance");
        cmd->add_option("--workers", f.workers, "parallel item evaluation (default 1)")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--out", f.out, "output path prefix for JSON + CSV files");
        cmd->add_option("--format", f.format, "stdout format")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    CLI::App* est = app.add_subcommand("estimate", "run the estimates in a config");
    add_run_flags(est, ef);
    CLI::App* chk = app.add_subcommand("check", "run the checks in a config");
    add_run_flags(chk, kf);

    std::string repro_name, repro_out, repro_format = "json";
    CLI::App* rep = app.add_subcommand("reproduce", "run a named frozen experiment");
    rep->add_option("name", repro_name, "reproduction name")->required();
    rep->add_option("--out", repro_out, "output path prefix for JSON + CSV files");
    rep->add_option("--format", repro_format, "stdout format")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(norm)) {
            SpaceNode spec = space_from_json(load_json_arg(norm_spec));
            CoefVec x = vector_from_json(load_json_arg(norm_vec), norm_window);
            int W = norm_window > 0 ? norm_window : x.window();
            if (W < 1) throw std::invalid_argument("empty vector needs an explicit --window");
            NormModel model(spec, W);
            std::cout << format12(model.norm(x)) << '\n';
            return 0;
        }
        if (app.got_subcommand(est)) {
            ef.seed_set = est->count("--seed") > 0 || std::getenv("GREEDYLAB_SEED") != nullptr;
            return run_experiment(ef, "estimate");
        }
        if (app.got_subcommand(chk)) {
            kf.seed_set = chk->count("--seed") > 0 || std::getenv("GREEDYLAB_SEED") != nullptr;
            return run_experiment(kf, "check");
        }
        if (app.got_subcommand(rep)) {
            if (!is_reproduction(repro_name)) {
                std::cerr << "unknown reproduction \"" << repro_name << "\"; registered:\n";
                for (const std::string& n : reproduction_names()) std::cerr << "  " << n << '\n';
                return 2;
            }
            Report r = run_reproduction(repro_name);
            emit(r, repro_out, repro_format);
            return exit_code(r);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
