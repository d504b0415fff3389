#include "twoarm/trial_model.hpp"

#include <cmath>

namespace twoarm {

namespace {

constexpr double kSimplexTol = 1e-9;

void require(bool ok, const char* msg) {
    if (!ok) throw ValidationError(msg);
}

void check_probability_open(double v, const char* what) {
    if (!(v > 0.0 && v < 1.0))
        throw ValidationError(std::string(what) + " must lie strictly inside (0,1)");
}

void check_simplex(const std::vector<double>& p, const char* what) {
    if (p.size() < 2)
        throw ValidationError(std::string(what) + " needs at least two categories");
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0))
            throw ValidationError(std::string(what) + " entries must be nonnegative");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > kSimplexTol)
        throw ValidationError(std::string(what) + " must sum to 1 (got " +
                              std::to_string(sum) + "); renormalization is refused");
}

} // namespace

const char* design_name(Design d) {
    return d == Design::parallel ? "parallel" : "crossover";
}

Design design_from_name(const std::string& name) {
    if (name == "parallel") return Design::parallel;
    if (name == "crossover") return Design::crossover;
    throw ValidationError("unknown design '" + name + "'");
}

BinaryEndpoint BinaryEndpoint::proportions(double p1, double p2) {
    BinaryEndpoint ep;
    ep.mode = BinaryMode::proportions;
    ep.p1 = p1;
    ep.p2 = p2;
    ep.effect = p2 - p1;
    return ep;
}

BinaryEndpoint BinaryEndpoint::sd_of_difference(double sigma_d, double effect) {
    BinaryEndpoint ep;
    ep.mode = BinaryMode::sd_of_difference;
    ep.sigma_d = sigma_d;
    ep.effect = effect;
    return ep;
}

const char* endpoint_name(const Endpoint& endpoint) {
    struct Visitor {
        const char* operator()(const ContinuousEndpoint&) const { return "mean"; }
        const char* operator()(const BinaryEndpoint&) const { return "prop"; }
        const char* operator()(const SurvivalEndpoint&) const { return "tte"; }
        const char* operator()(const OrdinalEndpoint&) const { return "ord"; }
    };
    return std::visit(Visitor{}, endpoint);
}

ValidatedRequest validate_request(const Request& request) {
    ValidatedRequest out{request, {}};
    Request& req = out.request;

    // layout
    require(req.layout.k > 0.0, "allocation ratio k must be positive");
    if (req.layout.design == Design::parallel)
        require(req.layout.seq_count == 0, "parallel design requires seqnumber = 0");
    else
        require(req.layout.seq_count >= 1, "crossover design requires seqnumber >= 1");

    // frame and significance (shared invariants live in resolve); the
    // alpha+beta sanity bound applies to user requests, not to the beta
    // probes of the power inverter
    resolve(req.frame, req.sig);
    require(req.sig.alpha + req.sig.beta < 1.0, "alpha + beta must be below 1");

    // adjustments
    require(req.adj.rho1 >= 0.0 && req.adj.rho1 < 1.0, "rho1 must lie in [0,1)");
    require(req.adj.rho2 >= 0.0 && req.adj.rho2 < 1.0, "rho2 must lie in [0,1)");
    require(req.adj.rho1 + req.adj.rho2 < 1.0,
            "rho1 + rho2 must be below 1 (compliance probability must stay positive)");
    require(req.adj.r >= 0.0 && req.adj.r < 1.0, "loss of follow-up r must lie in [0,1)");

    // endpoint invariants and the supported-scenario gate
    const bool crossover = req.layout.design == Design::crossover;
    if (const auto* ep = std::get_if<ContinuousEndpoint>(&req.endpoint)) {
        require(ep->sigma > 0.0, "sigma must be positive");
        if (crossover && req.layout.k != 1.0) {
            req.layout.k = 1.0;
            out.warnings.push_back(
                "crossover continuous design fixes k = 1; supplied k was ignored");
        }
    } else if (const auto* ep = std::get_if<BinaryEndpoint>(&req.endpoint)) {
        if (crossover) {
            require(ep->mode == BinaryMode::sd_of_difference,
                    "crossover binary design takes the SD of the arm difference");
            require(ep->sigma_d > 0.0, "sigma_d must be positive");
        } else {
            require(ep->mode == BinaryMode::proportions,
                    "parallel binary design takes per-arm response probabilities");
            check_probability_open(ep->p1, "p1");
            check_probability_open(ep->p2, "p2");
        }
    } else if (const auto* ep = std::get_if<SurvivalEndpoint>(&req.endpoint)) {
        if (crossover)
            throw ValidationError(
                "scenario unsupported: crossover design with a time-to-event endpoint");
        require(ep->lambda1 > 0.0 && ep->lambda2 > 0.0, "hazard rates must be positive");
        require(ep->t_accrual > 0.0, "accrual period must be positive");
        require(ep->t_total >= ep->t_accrual,
                "total trial time must be at least the accrual period");
        require(ep->gamma >= 0.0, "dropout rate gamma must be nonnegative");
    } else if (const auto* ep = std::get_if<OrdinalEndpoint>(&req.endpoint)) {
        if (crossover)
            throw ValidationError(
                "scenario unsupported: crossover design with an ordinal endpoint");
        check_simplex(ep->probs1, "control-arm category probabilities");
        check_simplex(ep->probs2, "treatment-arm category probabilities");
        require(ep->probs1.size() == ep->probs2.size(),
                "both arms need the same number of categories");
        require(std::isfinite(ep->theta), "theta must be finite");
    }

    return out;
}

} // namespace twoarm
