// Command-line front end: per-endpoint size subcommands, sweep grids, power
// inversion, bioequivalence mapping and the Monte Carlo simulator.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twoarm/bioeq.hpp"
#include "twoarm/engines.hpp"
#include "twoarm/power.hpp"
#include "twoarm/request_json.hpp"
#include "twoarm/simulate.hpp"
#include "twoarm/sweep.hpp"

namespace {

using nlohmann::json;
using namespace twoarm;

std::vector<double> split_doubles(const std::string& text, char sep) {
    std::vector<double> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, sep)) {
        if (item.empty()) continue;
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("could not parse number '" + item + "'");
        }
        if (used != item.size())
            throw ValidationError("could not parse number '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw ValidationError("empty numeric list");
    return out;
}

std::vector<double> parse_pair(const std::string& text, const char* flag) {
    auto values = split_doubles(text, ',');
    if (values.size() != 2)
        throw ValidationError(std::string(flag) + " needs exactly two comma-separated values");
    return values;
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// flag containers

struct GlobalFlags {
    std::string format = "table";
    std::string mode = "normal-approx";
    std::string correction = "none";
    bool strict_paper = false;
    std::uint64_t seed = 0;
    int replicates = 10000;

    EngineOptions engine_options() const {
        EngineOptions opt;
        if (mode == "exact-t") opt.mean_method = MeanMethod::exact_t;
        else if (mode == "normal-approx") opt.mean_method = MeanMethod::normal_approx;
        else throw ValidationError("unknown --mode '" + mode + "'");
        if (correction == "continuity") opt.correction = PropCorrection::continuity;
        else if (correction == "none") opt.correction = PropCorrection::none;
        else throw ValidationError("unknown --correction '" + correction + "'");
        opt.strict_paper = strict_paper;
        return opt;
    }
};

struct RequestFlags {
    std::string design;
    std::string test;
    double alpha = 0.0;
    double beta = 0.0;
    double k = 1.0;
    int seqnumber = 0;
    double delta = 0.0;
    std::string rho = "0,0";
    double r = 0.0;

    double sigma = 0.0;      // mean
    std::string varsigma;    // prop
    std::string varlambda;   // tte
    double ttotal = 0.0;
    double taccrual = 0.0;
    double gamma = 0.0;
    std::string varcatprob;  // ord
    double theta = 0.0;
    double effect = 0.0;     // --TTE, target treatment effect
    bool effect_given = false;

    std::vector<std::string> warnings;
};

void add_common_flags(CLI::App* cmd, RequestFlags& flags, bool with_adjustments) {
    cmd->add_option("--design", flags.design, "allocation design: parallel or crossover")
        ->required();
    cmd->add_option("--test", flags.test,
                    "hypothesis test: equality, noninferiority, superiority or equivalence")
        ->required();
    cmd->add_option("--alpha", flags.alpha, "test significance level")->required();
    cmd->add_option("--beta", flags.beta, "type II error, 1 - power")->required();
    cmd->add_option("--k", flags.k, "control-to-treatment allocation ratio (n1 = k*n2)");
    cmd->add_option("--delta", flags.delta, "margin of the test hypothesis");
    if (with_adjustments) {
        cmd->add_option("--rho", flags.rho,
                        "noncompliance rates, control and treatment arm (two comma-separated values)");
        cmd->add_option("--r", flags.r, "projected pooled loss-of-follow-up proportion");
    }
}

void add_mean_flags(CLI::App* cmd, RequestFlags& flags) {
    cmd->add_option("--sigma", flags.sigma, "pooled standard deviation")->required();
    cmd->add_option("--TTE", flags.effect, "target treatment effect")->required();
}

void add_prop_flags(CLI::App* cmd, RequestFlags& flags) {
    cmd->add_option("--varsigma", flags.varsigma,
                    "parallel: response probabilities p1,p2; crossover: SD of the "
                    "difference repeated (sd,sd)")
        ->required();
    cmd->add_option("--seqnumber", flags.seqnumber,
                    "number of crossover sequences (0 for parallel)");
    cmd->add_option("--TTE", flags.effect, "target treatment effect")
        ->each([&flags](const std::string&) { flags.effect_given = true; });
}

void add_tte_flags(CLI::App* cmd, RequestFlags& flags) {
    cmd->add_option("--varlambda", flags.varlambda,
                    "hazard rates, control and treatment arm (two comma-separated values)")
        ->required();
    cmd->add_option("--ttotal", flags.ttotal, "total trial time")->required();
    cmd->add_option("--taccrual", flags.taccrual, "accrual period")->required();
    cmd->add_option("--gamma", flags.gamma, "exponential dropout-process rate");
}

void add_ord_flags(CLI::App* cmd, RequestFlags& flags) {
    cmd->add_option("--varcatprob", flags.varcatprob,
                    "category probabilities per arm, two comma-separated lists joined "
                    "by ';' (control;treatment)")
        ->required();
    cmd->add_option("--theta", flags.theta,
                    "log odds ratio of outcome, treatment versus control")
        ->required();
}

Request build_request(const std::string& endpoint, RequestFlags& flags) {
    Request req;
    req.layout.design = design_from_name(flags.design);
    req.layout.k = flags.k;
    req.layout.seq_count = flags.seqnumber;
    req.frame.kind = test_kind_from_name(flags.test);
    req.frame.delta = flags.delta;
    req.sig.alpha = flags.alpha;
    req.sig.beta = flags.beta;
    const auto rho = parse_pair(flags.rho, "--rho");
    req.adj = AdjustmentProfile{rho[0], rho[1], flags.r};

    if (endpoint == "mean") {
        req.endpoint = ContinuousEndpoint{flags.sigma, flags.effect};
    } else if (endpoint == "prop") {
        const auto varsigma = parse_pair(flags.varsigma, "--varsigma");
        if (req.layout.design == Design::crossover) {
            if (varsigma[0] != varsigma[1])
                throw ValidationError(
                    "crossover binary varsigma must repeat the SD of the difference (sd,sd)");
            req.endpoint = BinaryEndpoint::sd_of_difference(varsigma[0], flags.effect);
        } else {
            req.endpoint = BinaryEndpoint::proportions(varsigma[0], varsigma[1]);
            if (flags.effect_given &&
                std::fabs(flags.effect - (varsigma[1] - varsigma[0])) > 1e-12)
                flags.warnings.push_back(
                    "supplied TTE ignored; the effect is derived as p2 - p1 in proportions mode");
        }
    } else if (endpoint == "tte") {
        const auto lambdas = parse_pair(flags.varlambda, "--varlambda");
        req.endpoint =
            SurvivalEndpoint{lambdas[0], lambdas[1], flags.ttotal, flags.taccrual, flags.gamma};
    } else if (endpoint == "ord") {
        std::string first, second;
        const auto split = flags.varcatprob.find(';');
        if (split == std::string::npos)
            throw ValidationError("--varcatprob needs two ';'-separated probability lists");
        OrdinalEndpoint ep;
        ep.probs1 = split_doubles(flags.varcatprob.substr(0, split), ',');
        ep.probs2 = split_doubles(flags.varcatprob.substr(split + 1), ',');
        ep.theta = flags.theta;
        req.endpoint = ep;
    } else {
        throw ValidationError("unknown endpoint '" + endpoint + "'");
    }
    return req;
}

// ---------------------------------------------------------------------------
// JSON config files: an object whose keys mirror the long flag names.
// Values are injected as trailing flags for every key the command line does
// not set explicitly, so explicit flags always win.

std::string scalarize(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_array()) {
        std::string joined;
        const char outer_sep = !value.empty() && value[0].is_array() ? ';' : ',';
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i) joined += outer_sep;
            if (value[i].is_array()) {
                for (std::size_t k = 0; k < value[i].size(); ++k) {
                    if (k) joined += ',';
                    joined += value[i][k].dump();
                }
            } else {
                joined += value[i].dump();
            }
        }
        return joined;
    }
    return value.dump();
}

void inject_config_args(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return;

    std::ifstream file(path);
    if (!file) throw ValidationError("could not open config file '" + path + "'");
    json config;
    try {
        file >> config;
    } catch (const json::exception& e) {
        throw ValidationError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!config.is_object())
        throw ValidationError("config file must hold a JSON object of flag values");

    std::set<std::string> given;
    for (const auto& arg : args)
        if (arg.rfind("--", 0) == 0) given.insert(arg.substr(0, arg.find('=')));

    for (const auto& [key, value] : config.items()) {
        const std::string flag = "--" + key;
        if (given.count(flag)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
            continue;
        }
        args.push_back(flag);
        args.push_back(scalarize(value));
    }
}

// ---------------------------------------------------------------------------
// rendering

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

std::string csv_header(bool with_power) {
    std::string header = "endpoint,design,test,alpha,beta,rho1,rho2,r,n2,n1,total,raw_n2";
    if (with_power) header += ",power_at_base_n";
    return header;
}

std::string csv_row(const Request& req, const SizeResult& result,
                    std::optional<double> power) {
    std::string row;
    row += endpoint_name(req.endpoint);
    row += ',';
    row += design_name(req.layout.design);
    row += ',';
    row += test_kind_name(req.frame.kind);
    row += ',';
    row += fmt_g(req.sig.alpha);
    row += ',';
    row += fmt_g(req.sig.beta);
    row += ',';
    row += fmt_g(req.adj.rho1);
    row += ',';
    row += fmt_g(req.adj.rho2);
    row += ',';
    row += fmt_g(req.adj.r);
    row += ',';
    row += std::to_string(result.n2);
    row += ',';
    row += std::to_string(result.n1);
    row += ',';
    row += std::to_string(result.total);
    row += ',';
    row += fmt_g(result.raw_n2);
    if (power) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.5f", *power);
        row += ',';
        row += buf;
    }
    return row;
}

void render_size(const Request& req, const EngineOptions& opt, const SizeResult& result,
                 const std::string& format) {
    print_warnings(result.warnings);
    if (format == "table") {
        std::printf("%-5s %6s %6s\n", "", "n_2", "n_1");
        std::printf("%-5s %6lld %6lld\n", "Size", result.n2, result.n1);
    } else if (format == "json") {
        json j;
        j["request"] = request_to_json(req);
        j["options"] = options_to_json(opt);
        j["result"] = size_result_to_json(result);
        std::printf("%s\n", j.dump(2).c_str());
    } else if (format == "csv") {
        std::printf("%s\n%s\n", csv_header(false).c_str(),
                    csv_row(req, result, std::nullopt).c_str());
    } else {
        throw ValidationError("unknown --format '" + format + "'");
    }
}

// ---------------------------------------------------------------------------

struct CommandContext {
    GlobalFlags globals;
    RequestFlags mean, prop, tte, ord, power, sweep, simulate;
    std::string power_endpoint, sweep_endpoint, simulate_endpoint;
    long long power_n2 = 0;
    long long simulate_n2 = 0;
    int simulate_threads = 0;
    std::string sweep_rho1, sweep_rho2, sweep_r;
    long long sweep_power_at = -1;
    std::string bioeq_form;
    double bioeq_theta1 = 0.0, bioeq_theta2 = 0.0;
    double bioeq_delta1 = 0.0, bioeq_delta2 = 0.0;
};

void add_endpoint_flags(CLI::App* cmd, const std::string& endpoint, RequestFlags& flags) {
    if (endpoint == "mean") add_mean_flags(cmd, flags);
    else if (endpoint == "prop") add_prop_flags(cmd, flags);
    else if (endpoint == "tte") add_tte_flags(cmd, flags);
    else if (endpoint == "ord") add_ord_flags(cmd, flags);
}

int run(int argc, char** argv) {
    CLI::App app{"Sample size for two-arm clinical trials under noncompliance and "
                 "loss of follow-up"};
    app.require_subcommand(1);

    CommandContext ctx;
    app.add_option("--format", ctx.globals.format, "output format: table, json or csv")
        ->capture_default_str();
    app.add_option("--mode", ctx.globals.mode,
                   "continuous solver: normal-approx or exact-t")
        ->capture_default_str();
    app.add_option("--correction", ctx.globals.correction,
                   "binary closed form: none or continuity")
        ->capture_default_str();
    app.add_flag("--strict-paper", ctx.globals.strict_paper,
                 "use the verbatim noninferiority margin sign");
    app.add_option("--seed", ctx.globals.seed, "master seed for simulation");
    app.add_option("--replicates", ctx.globals.replicates, "simulation replicates")
        ->capture_default_str();

    // size subcommands
    const char* size_names[4] = {"mean", "prop", "tte", "ord"};
    const char* size_blurbs[4] = {"size for a continuous endpoint",
                                  "size for a binary endpoint",
                                  "size for a time-to-event endpoint",
                                  "size for an ordinal categorical endpoint"};
    RequestFlags* size_flags[4] = {&ctx.mean, &ctx.prop, &ctx.tte, &ctx.ord};
    std::string size_configs[4];
    for (int i = 0; i < 4; ++i) {
        CLI::App* cmd = app.add_subcommand(size_names[i], size_blurbs[i]);
        cmd->fallthrough();
        cmd->add_option("--config", size_configs[i], "JSON file mirroring the flag schema");
        add_common_flags(cmd, *size_flags[i], true);
        add_endpoint_flags(cmd, size_names[i], *size_flags[i]);
    }

    // power
    CLI::App* power_cmd = app.add_subcommand("power", "achieved power at a given size");
    power_cmd->fallthrough();
    std::string power_config, sweep_config, sim_config;
    power_cmd->add_option("--config", power_config, "JSON file mirroring the flag schema");
    power_cmd->add_option("--endpoint", ctx.power_endpoint, "mean, prop, tte or ord")
        ->required();
    power_cmd->add_option("--n2", ctx.power_n2, "treatment-arm size")->required();
    add_common_flags(power_cmd, ctx.power, true);
    power_cmd->add_option("--sigma", ctx.power.sigma, "pooled standard deviation");
    power_cmd->add_option("--TTE", ctx.power.effect, "target treatment effect")
        ->each([&ctx](const std::string&) { ctx.power.effect_given = true; });
    power_cmd->add_option("--varsigma", ctx.power.varsigma, "binary varsigma pair");
    power_cmd->add_option("--seqnumber", ctx.power.seqnumber, "crossover sequences");
    power_cmd->add_option("--varlambda", ctx.power.varlambda, "hazard pair");
    power_cmd->add_option("--ttotal", ctx.power.ttotal, "total trial time");
    power_cmd->add_option("--taccrual", ctx.power.taccrual, "accrual period");
    power_cmd->add_option("--gamma", ctx.power.gamma, "dropout rate");
    power_cmd->add_option("--varcatprob", ctx.power.varcatprob, "category probabilities");
    power_cmd->add_option("--theta", ctx.power.theta, "log odds ratio");

    // sweep
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "grid of sizes over rho1 x rho2 x r");
    sweep_cmd->fallthrough();
    sweep_cmd->add_option("--config", sweep_config, "JSON file mirroring the flag schema");
    sweep_cmd->add_option("--endpoint", ctx.sweep_endpoint, "mean, prop, tte or ord")
        ->required();
    sweep_cmd->add_option("--rho1", ctx.sweep_rho1, "comma-separated rho1 grid")->required();
    sweep_cmd->add_option("--rho2", ctx.sweep_rho2, "comma-separated rho2 grid")->required();
    sweep_cmd->add_option("--r", ctx.sweep_r, "comma-separated r grid")->required();
    sweep_cmd->add_option("--power-at", ctx.sweep_power_at,
                          "also report achieved power at this fixed n2");
    add_common_flags(sweep_cmd, ctx.sweep, false);
    sweep_cmd->add_option("--sigma", ctx.sweep.sigma, "pooled standard deviation");
    sweep_cmd->add_option("--TTE", ctx.sweep.effect, "target treatment effect")
        ->each([&ctx](const std::string&) { ctx.sweep.effect_given = true; });
    sweep_cmd->add_option("--varsigma", ctx.sweep.varsigma, "binary varsigma pair");
    sweep_cmd->add_option("--seqnumber", ctx.sweep.seqnumber, "crossover sequences");
    sweep_cmd->add_option("--varlambda", ctx.sweep.varlambda, "hazard pair");
    sweep_cmd->add_option("--ttotal", ctx.sweep.ttotal, "total trial time");
    sweep_cmd->add_option("--taccrual", ctx.sweep.taccrual, "accrual period");
    sweep_cmd->add_option("--gamma", ctx.sweep.gamma, "dropout rate");
    sweep_cmd->add_option("--varcatprob", ctx.sweep.varcatprob, "category probabilities");
    sweep_cmd->add_option("--theta", ctx.sweep.theta, "log odds ratio");

    // simulate
    CLI::App* sim_cmd =
        app.add_subcommand("simulate", "Monte Carlo power at a given size");
    sim_cmd->fallthrough();
    sim_cmd->add_option("--config", sim_config, "JSON file mirroring the flag schema");
    sim_cmd->add_option("--endpoint", ctx.simulate_endpoint, "mean, prop, tte or ord")
        ->required();
    sim_cmd->add_option("--n2", ctx.simulate_n2, "treatment-arm size")->required();
    sim_cmd->add_option("--threads", ctx.simulate_threads,
                        "worker threads (result is independent of this)");
    add_common_flags(sim_cmd, ctx.simulate, true);
    sim_cmd->add_option("--sigma", ctx.simulate.sigma, "pooled standard deviation");
    sim_cmd->add_option("--TTE", ctx.simulate.effect, "target treatment effect")
        ->each([&ctx](const std::string&) { ctx.simulate.effect_given = true; });
    sim_cmd->add_option("--varsigma", ctx.simulate.varsigma, "binary varsigma pair");
    sim_cmd->add_option("--seqnumber", ctx.simulate.seqnumber, "crossover sequences");
    sim_cmd->add_option("--varlambda", ctx.simulate.varlambda, "hazard pair");
    sim_cmd->add_option("--ttotal", ctx.simulate.ttotal, "total trial time");
    sim_cmd->add_option("--taccrual", ctx.simulate.taccrual, "accrual period");
    sim_cmd->add_option("--gamma", ctx.simulate.gamma, "dropout rate");
    sim_cmd->add_option("--varcatprob", ctx.simulate.varcatprob, "category probabilities");
    sim_cmd->add_option("--theta", ctx.simulate.theta, "log odds ratio");

    // bioeq-map
    CLI::App* bioeq_cmd = app.add_subcommand(
        "bioeq-map", "rewrite a bioequivalence band as an equivalence triple");
    bioeq_cmd->fallthrough();
    bioeq_cmd->add_option("--form", ctx.bioeq_form, "additive or multiplicative")->required();
    bioeq_cmd->add_option("--theta1", ctx.bioeq_theta1, "control-arm parameter")->required();
    bioeq_cmd->add_option("--theta2", ctx.bioeq_theta2, "treatment-arm parameter")->required();
    bioeq_cmd->add_option("--delta1", ctx.bioeq_delta1, "lower band endpoint")->required();
    bioeq_cmd->add_option("--delta2", ctx.bioeq_delta2, "upper band endpoint")->required();

    std::vector<std::string> args(argv + 1, argv + argc);
    inject_config_args(args);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const EngineOptions opt = ctx.globals.engine_options();

    for (int i = 0; i < 4; ++i) {
        CLI::App* cmd = app.get_subcommand(size_names[i]);
        if (!cmd->parsed()) continue;
        if (opt.correction == PropCorrection::continuity && std::string(size_names[i]) != "prop")
            throw ValidationError("--correction continuity applies to the prop subcommand only");
        Request req = build_request(size_names[i], *size_flags[i]);
        print_warnings(size_flags[i]->warnings);
        const SizeResult result = compute_size(req, opt);
        render_size(validate_request(req).request, opt, result, ctx.globals.format);
        return 0;
    }

    if (power_cmd->parsed()) {
        Request req = build_request(ctx.power_endpoint, ctx.power);
        print_warnings(ctx.power.warnings);
        const AchievedPower result = achieved_power(req, ctx.power_n2, opt);
        if (result.saturated)
            std::fprintf(stderr, "note: power saturated at the inversion bound\n");
        if (ctx.globals.format == "json") {
            json j;
            j["request"] = request_to_json(validate_request(req).request);
            j["n2"] = ctx.power_n2;
            j["power"] = result.power;
            j["saturated"] = result.saturated;
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("%.5f\n", result.power);
        }
        return 0;
    }

    if (sweep_cmd->parsed()) {
        SweepSpec spec;
        spec.base = build_request(ctx.sweep_endpoint, ctx.sweep);
        print_warnings(ctx.sweep.warnings);
        spec.rho1_values = split_doubles(ctx.sweep_rho1, ',');
        spec.rho2_values = split_doubles(ctx.sweep_rho2, ',');
        spec.r_values = split_doubles(ctx.sweep_r, ',');
        if (ctx.sweep_power_at >= 0) spec.power_at = ctx.sweep_power_at;
        spec.options = opt;
        const auto rows = run_sweep(spec);
        if (ctx.globals.format == "json") {
            json out = json::array();
            for (const auto& row : rows) {
                Request point = spec.base;
                point.adj = AdjustmentProfile{row.rho1, row.rho2, row.r};
                json item;
                item["request"] = request_to_json(validate_request(point).request);
                item["result"] = size_result_to_json(row.result);
                if (row.power_at_base_n) item["power_at_base_n"] = *row.power_at_base_n;
                out.push_back(item);
            }
            std::printf("%s\n", out.dump(2).c_str());
        } else {
            std::printf("%s\n", csv_header(spec.power_at.has_value()).c_str());
            for (const auto& row : rows) {
                Request point = spec.base;
                point.adj = AdjustmentProfile{row.rho1, row.rho2, row.r};
                std::printf("%s\n",
                            csv_row(validate_request(point).request, row.result,
                                    row.power_at_base_n)
                                .c_str());
            }
        }
        return 0;
    }

    if (sim_cmd->parsed()) {
        SimConfig config;
        config.request = build_request(ctx.simulate_endpoint, ctx.simulate);
        print_warnings(ctx.simulate.warnings);
        config.n2 = ctx.simulate_n2;
        config.replicates = ctx.globals.replicates;
        config.master_seed = ctx.globals.seed;
        config.threads = ctx.simulate_threads;
        const SimResult result = simulate_power(config);
        json j;
        j["power"] = result.power;
        j["mc_se"] = result.mc_se;
        j["replicates"] = result.replicates;
        j["seed"] = result.seed;
        std::printf("%s\n", j.dump().c_str());
        return 0;
    }

    if (bioeq_cmd->parsed()) {
        const BioeqBand band{ctx.bioeq_delta1, ctx.bioeq_delta2};
        EquivalenceMap mapped;
        if (ctx.bioeq_form == "additive")
            mapped = additive_to_equivalence(ctx.bioeq_theta1, ctx.bioeq_theta2, band);
        else if (ctx.bioeq_form == "multiplicative")
            mapped = multiplicative_to_equivalence(ctx.bioeq_theta1, ctx.bioeq_theta2, band);
        else
            throw ValidationError("--form must be additive or multiplicative");
        if (ctx.globals.format == "json") {
            json j;
            j["theta1"] = mapped.theta1;
            j["theta2"] = mapped.theta2;
            j["delta"] = mapped.delta;
            std::printf("%s\n", j.dump(2).c_str());
        } else {
            std::printf("theta1 %s\ntheta2 %s\ndelta  %s\n", fmt_g(mapped.theta1).c_str(),
                        fmt_g(mapped.theta2).c_str(), fmt_g(mapped.delta).c_str());
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NoFiniteSizeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const PowerRangeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
}
