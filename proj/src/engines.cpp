#include "twoarm/engines.hpp"

#include <cmath>

#include "twoarm/adjustments.hpp"
#include "twoarm/numerics.hpp"

namespace twoarm {

namespace {

constexpr double kMaxRawSize = 1e15;

// Squares the frame effect V, enforcing the finite-size rules: V = 0 never
// has a finite solution; V < 0 under equivalence means the effect magnitude
// reaches the margin; V < 0 under a one-sided frame computes through V^2 with
// a warning (the size then funds the mirrored one-sided test).
double checked_v_squared(const ResolvedFrame& rf, double v, std::vector<std::string>* warnings) {
    if (v == 0.0) {
        if (rf.kind == TestKind::equality)
            throw NoFiniteSizeError("no finite size: adjusted effect is zero");
        throw NoFiniteSizeError("no finite size: frame effect V is zero");
    }
    if (v < 0.0) {
        if (rf.kind == TestKind::equivalence)
            throw NoFiniteSizeError(
                "no finite size: adjusted effect magnitude reaches or exceeds the equivalence margin");
        if (warnings)
            warnings->push_back("adjusted effect lies on the null side of the margin; "
                                "size corresponds to the mirrored one-sided test");
    }
    return v * v;
}

double upper_z_sum(const ResolvedFrame& rf) {
    return num::normal_upper_quantile(rf.tail_prob) +
           num::normal_upper_quantile(rf.beta_quantile_arg);
}

void check_raw(double raw) {
    if (!std::isfinite(raw) || raw > kMaxRawSize)
        throw NoFiniteSizeError("no finite size within the supported range");
}

// Per-endpoint real-valued solutions at the *adjusted* parameters, before
// the attrition inflation.

double mean_raw_uninflated(const Request& req, const EngineOptions& opt,
                           std::vector<std::string>* warnings) {
    const auto& ep = std::get<ContinuousEndpoint>(req.endpoint);
    double k = req.layout.k;
    double s = 1.0;
    if (req.layout.design == Design::crossover) {
        k = 1.0;
        s = 4.0;
    }
    const ResolvedFrame rf = resolve(req.frame, req.sig, opt.strict_paper);
    const double adj_effect = (1.0 - req.adj.rho1 - req.adj.rho2) * ep.effect;
    const double v2 = checked_v_squared(rf, rf.effect(0.0, adj_effect), warnings);
    const double var_term = ep.sigma * ep.sigma * (1.0 + 1.0 / k);

    if (opt.mean_method == MeanMethod::normal_approx) {
        const double z = upper_z_sum(rf);
        return var_term * z * z / (s * v2);
    }

    // exact_t: least m whose noncentral-t power reaches W(beta)
    const double abs_v = std::sqrt(v2);
    auto pred = [&](std::uint64_t m) {
        const double df = (1.0 + k) * static_cast<double>(m) - 2.0;
        if (df < 1.0) return false;
        const double tcrit = num::central_t_upper_quantile(rf.tail_prob, df);
        const double ncp = std::sqrt(s * static_cast<double>(m) / var_term) * abs_v;
        const double power = 1.0 - num::noncentral_t_cdf(tcrit, df, ncp);
        return power >= rf.power_level;
    };
    const double z = upper_z_sum(rf);
    const double normal_guess = var_term * z * z / (s * v2);
    check_raw(normal_guess);
    const auto hint = static_cast<std::uint64_t>(std::ceil(std::max(2.0, normal_guess)));
    return static_cast<double>(num::integer_infimum(pred, hint));
}

double prop_raw_uninflated(const Request& req, const EngineOptions& opt,
                           std::vector<std::string>* warnings) {
    const auto& ep = std::get<BinaryEndpoint>(req.endpoint);
    const ResolvedFrame rf = resolve(req.frame, req.sig, opt.strict_paper);
    const double k = req.layout.k;

    double v2;
    double var_term;
    double s;
    if (ep.mode == BinaryMode::proportions) {
        // adjusted proportions substituted wholesale: both effect and variance move
        const MixedParams mix = mix_noncompliance(ep.p1, ep.p2, req.adj.rho1, req.adj.rho2);
        const double p1s = mix.theta1_star;
        const double p2s = mix.theta2_star;
        v2 = checked_v_squared(rf, rf.effect(p1s, p2s), warnings);
        var_term = p1s * (1.0 - p1s) / k + p2s * (1.0 - p2s);
        s = 1.0;
        if (opt.correction == PropCorrection::continuity) {
            const double a = (1.0 + 1.0 / k) / 2.0;
            const double b = std::sqrt(var_term);
            const double c = upper_z_sum(rf);
            const double d = std::sqrt(v2); // |V| keeps the radical real
            const double root = (b * c + std::sqrt(b * c * b * c + 4.0 * a * d)) / (2.0 * d);
            return root * root;
        }
    } else {
        if (opt.correction == PropCorrection::continuity)
            throw ValidationError(
                "continuity correction applies to parallel proportions only");
        const double adj_effect = (1.0 - req.adj.rho1 - req.adj.rho2) * ep.effect;
        v2 = checked_v_squared(rf, rf.effect(0.0, adj_effect), warnings);
        var_term = ep.sigma_d * ep.sigma_d;
        s = 2.0;
    }
    const double z = upper_z_sum(rf);
    return var_term * z * z / (s * v2);
}

double tte_raw_uninflated(const Request& req, const EngineOptions& opt,
                          std::vector<std::string>* warnings) {
    const auto& ep = std::get<SurvivalEndpoint>(req.endpoint);
    const ResolvedFrame rf = resolve(req.frame, req.sig, opt.strict_paper);
    const MixedParams mix =
        mix_noncompliance(ep.lambda1, ep.lambda2, req.adj.rho1, req.adj.rho2);
    const double l1s = mix.theta1_star;
    const double l2s = mix.theta2_star;
    // hazards live on the negated parameter scale: theta_i = -lambda_i
    const double v2 = checked_v_squared(rf, rf.effect(-l1s, -l2s), warnings);
    const double var_term =
        survival_variance(l1s, ep) / req.layout.k + survival_variance(l2s, ep);
    const double z = upper_z_sum(rf);
    return var_term * z * z / v2;
}

double ord_raw_uninflated(const Request& req, const EngineOptions& opt,
                          std::vector<std::string>* warnings) {
    const auto& ep = std::get<OrdinalEndpoint>(req.endpoint);
    const ResolvedFrame rf = resolve(req.frame, req.sig, opt.strict_paper);
    const double k = req.layout.k;
    const double rho1 = req.adj.rho1;
    const double rho2 = req.adj.rho2;

    const double adj_theta = (1.0 - rho1 - rho2) * ep.theta;
    const double v2 = checked_v_squared(rf, rf.effect(0.0, adj_theta), warnings);

    // pooled per-category probabilities after switching, averaged over arms
    double cube_sum = 0.0;
    const double w1 = 1.0 - rho1 + rho2;
    const double w2 = 1.0 + rho1 - rho2;
    for (std::size_t j = 0; j < ep.probs1.size(); ++j) {
        const double pooled = (w1 * ep.probs1[j] + w2 * ep.probs2[j]) / 2.0;
        cube_sum += pooled * pooled * pooled;
    }
    const double spread = 1.0 - cube_sum;
    if (!(spread > 1e-12))
        throw NoFiniteSizeError(
            "no finite size: category distribution is concentrated on a single category");

    const double z = upper_z_sum(rf);
    return 3.0 * (k + 1.0) * z * z / (k * v2 * spread);
}

double raw_uninflated(const Request& req, const EngineOptions& opt,
                      std::vector<std::string>* warnings) {
    struct Visitor {
        const Request& req;
        const EngineOptions& opt;
        std::vector<std::string>* warnings;
        double operator()(const ContinuousEndpoint&) const {
            return mean_raw_uninflated(req, opt, warnings);
        }
        double operator()(const BinaryEndpoint&) const {
            return prop_raw_uninflated(req, opt, warnings);
        }
        double operator()(const SurvivalEndpoint&) const {
            return tte_raw_uninflated(req, opt, warnings);
        }
        double operator()(const OrdinalEndpoint&) const {
            return ord_raw_uninflated(req, opt, warnings);
        }
    };
    return std::visit(Visitor{req, opt, warnings}, req.endpoint);
}

SizeResult assemble(const Request& req, const EngineOptions& opt,
                    std::vector<std::string> warnings) {
    SizeResult result;
    const double raw = inflate_for_attrition(raw_uninflated(req, opt, &warnings), req.adj.r);
    check_raw(raw);
    result.raw_n2 = raw;
    result.n2 = static_cast<long long>(std::ceil(raw));
    result.n1 = static_cast<long long>(std::ceil(req.layout.k * raw));
    result.total = result.n1 + result.n2;

    Request unadjusted = req;
    unadjusted.adj = AdjustmentProfile{};
    try {
        const double raw0 = raw_uninflated(unadjusted, opt, nullptr);
        check_raw(raw0);
        result.unadjusted_n2 = static_cast<long long>(std::ceil(raw0));
    } catch (const NoFiniteSizeError&) {
        result.unadjusted_n2 = std::nullopt; // adjusted size exists, ideal one does not
    }
    result.warnings = std::move(warnings);
    return result;
}

template <typename EndpointT>
SizeResult sized(const Request& request, const EngineOptions& opt) {
    ValidatedRequest validated = validate_request(request);
    if (!std::holds_alternative<EndpointT>(validated.request.endpoint))
        throw ValidationError("request endpoint does not match the invoked engine");
    return assemble(validated.request, opt, std::move(validated.warnings));
}

} // namespace

double expected_event_probability(double lambda, const SurvivalEndpoint& ep) {
    if (!(lambda > 0.0))
        throw ValidationError("hazard rate must be positive");
    const double h = lambda + ep.gamma;
    const double tail =
        (std::exp(-h * (ep.t_total - ep.t_accrual)) - std::exp(-h * ep.t_total)) /
        (h * ep.t_accrual);
    return lambda / h * (1.0 - tail);
}

double survival_variance(double lambda, const SurvivalEndpoint& ep) {
    return lambda * lambda / expected_event_probability(lambda, ep);
}

SizeResult size_mean(const Request& request, const EngineOptions& opt) {
    return sized<ContinuousEndpoint>(request, opt);
}

SizeResult size_prop(const Request& request, const EngineOptions& opt) {
    return sized<BinaryEndpoint>(request, opt);
}

SizeResult size_tte(const Request& request, const EngineOptions& opt) {
    return sized<SurvivalEndpoint>(request, opt);
}

SizeResult size_ord(const Request& request, const EngineOptions& opt) {
    return sized<OrdinalEndpoint>(request, opt);
}

SizeResult compute_size(const Request& request, const EngineOptions& opt) {
    ValidatedRequest validated = validate_request(request);
    return assemble(validated.request, opt, std::move(validated.warnings));
}

double raw_size(const Request& request, const EngineOptions& opt) {
    ValidatedRequest validated = validate_request(request);
    return raw_size_at_beta(validated.request, validated.request.sig.beta, opt);
}

double raw_size_at_beta(const Request& validated_request, double beta,
                        const EngineOptions& opt) {
    Request probe = validated_request;
    probe.sig.beta = beta;
    EngineOptions relaxed = opt;
    relaxed.mean_method = MeanMethod::normal_approx;
    return inflate_for_attrition(raw_uninflated(probe, relaxed, nullptr), probe.adj.r);
}

} // namespace twoarm
