#include "twoarm/request_json.hpp"

namespace twoarm {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ValidationError(std::string("request JSON needs numeric field '") + key + "'");
    return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw ValidationError(std::string("request JSON field '") + key + "' must be numeric");
    return j.at(key).get<double>();
}

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw ValidationError(std::string("request JSON needs string field '") + key + "'");
    return j.at(key).get<std::string>();
}

std::vector<double> require_pair(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).size() != 2)
        throw ValidationError(std::string("request JSON field '") + key +
                              "' must be an array of two numbers");
    return j.at(key).get<std::vector<double>>();
}

} // namespace

json request_to_json(const Request& req) {
    json j;
    j["endpoint"] = endpoint_name(req.endpoint);
    j["design"] = design_name(req.layout.design);
    j["test"] = test_kind_name(req.frame.kind);
    j["alpha"] = req.sig.alpha;
    j["beta"] = req.sig.beta;
    j["k"] = req.layout.k;
    if (req.layout.design == Design::crossover) j["seqnumber"] = req.layout.seq_count;
    j["delta"] = req.frame.delta;
    j["rho"] = {req.adj.rho1, req.adj.rho2};
    j["r"] = req.adj.r;
    if (const auto* ep = std::get_if<ContinuousEndpoint>(&req.endpoint)) {
        j["sigma"] = ep->sigma;
        j["TTE"] = ep->effect;
    } else if (const auto* ep = std::get_if<BinaryEndpoint>(&req.endpoint)) {
        if (ep->mode == BinaryMode::proportions) {
            j["varsigma"] = {ep->p1, ep->p2};
        } else {
            j["varsigma"] = {ep->sigma_d, ep->sigma_d};
            j["TTE"] = ep->effect;
        }
    } else if (const auto* ep = std::get_if<SurvivalEndpoint>(&req.endpoint)) {
        j["varlambda"] = {ep->lambda1, ep->lambda2};
        j["ttotal"] = ep->t_total;
        j["taccrual"] = ep->t_accrual;
        j["gamma"] = ep->gamma;
    } else if (const auto* ep = std::get_if<OrdinalEndpoint>(&req.endpoint)) {
        j["varcatprob"] = {ep->probs1, ep->probs2};
        j["theta"] = ep->theta;
    }
    return j;
}

Request request_from_json(const json& j) {
    Request req;
    const std::string endpoint = require_string(j, "endpoint");
    req.layout.design = design_from_name(require_string(j, "design"));
    req.layout.k = number_or(j, "k", 1.0);
    req.layout.seq_count = static_cast<int>(number_or(j, "seqnumber", 0.0));
    req.frame.kind = test_kind_from_name(require_string(j, "test"));
    req.frame.delta = number_or(j, "delta", 0.0);
    req.sig.alpha = require_number(j, "alpha");
    req.sig.beta = require_number(j, "beta");
    if (j.contains("rho")) {
        const auto rho = require_pair(j, "rho");
        req.adj.rho1 = rho[0];
        req.adj.rho2 = rho[1];
    }
    req.adj.r = number_or(j, "r", 0.0);

    if (endpoint == "mean") {
        ContinuousEndpoint ep;
        ep.sigma = require_number(j, "sigma");
        ep.effect = number_or(j, "TTE", 0.0);
        req.endpoint = ep;
    } else if (endpoint == "prop") {
        const auto varsigma = require_pair(j, "varsigma");
        if (req.layout.design == Design::crossover) {
            if (varsigma[0] != varsigma[1])
                throw ValidationError(
                    "crossover binary varsigma must repeat the SD of the difference");
            req.endpoint =
                BinaryEndpoint::sd_of_difference(varsigma[0], number_or(j, "TTE", 0.0));
        } else {
            req.endpoint = BinaryEndpoint::proportions(varsigma[0], varsigma[1]);
        }
    } else if (endpoint == "tte") {
        SurvivalEndpoint ep;
        const auto lambdas = require_pair(j, "varlambda");
        ep.lambda1 = lambdas[0];
        ep.lambda2 = lambdas[1];
        ep.t_total = require_number(j, "ttotal");
        ep.t_accrual = require_number(j, "taccrual");
        ep.gamma = number_or(j, "gamma", 0.0);
        req.endpoint = ep;
    } else if (endpoint == "ord") {
        OrdinalEndpoint ep;
        if (!j.contains("varcatprob") || !j.at("varcatprob").is_array() ||
            j.at("varcatprob").size() != 2)
            throw ValidationError(
                "request JSON field 'varcatprob' must hold two probability arrays");
        ep.probs1 = j.at("varcatprob")[0].get<std::vector<double>>();
        ep.probs2 = j.at("varcatprob")[1].get<std::vector<double>>();
        ep.theta = require_number(j, "theta");
        req.endpoint = ep;
    } else {
        throw ValidationError("unknown endpoint '" + endpoint + "'");
    }

    return validate_request(req).request;
}

json options_to_json(const EngineOptions& opt) {
    json j;
    j["mode"] = opt.mean_method == MeanMethod::exact_t ? "exact-t" : "normal-approx";
    j["correction"] = opt.correction == PropCorrection::continuity ? "continuity" : "none";
    j["strict_paper"] = opt.strict_paper;
    return j;
}

EngineOptions options_from_json(const json& j) {
    EngineOptions opt;
    if (j.contains("mode")) {
        const auto mode = j.at("mode").get<std::string>();
        if (mode == "exact-t") opt.mean_method = MeanMethod::exact_t;
        else if (mode == "normal-approx") opt.mean_method = MeanMethod::normal_approx;
        else throw ValidationError("unknown mode '" + mode + "'");
    }
    if (j.contains("correction")) {
        const auto corr = j.at("correction").get<std::string>();
        if (corr == "continuity") opt.correction = PropCorrection::continuity;
        else if (corr == "none") opt.correction = PropCorrection::none;
        else throw ValidationError("unknown correction '" + corr + "'");
    }
    if (j.contains("strict_paper")) opt.strict_paper = j.at("strict_paper").get<bool>();
    return opt;
}

json size_result_to_json(const SizeResult& result) {
    json j;
    j["n2"] = result.n2;
    j["n1"] = result.n1;
    j["total"] = result.total;
    j["raw_n2"] = result.raw_n2;
    if (result.unadjusted_n2) j["unadjusted_n2"] = *result.unadjusted_n2;
    else j["unadjusted_n2"] = nullptr;
    j["warnings"] = result.warnings;
    return j;
}

} // namespace twoarm
