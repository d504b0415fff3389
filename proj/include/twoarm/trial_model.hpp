#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twoarm/hypothesis.hpp"

// Domain vocabulary shared by all size engines: a trial design request and
// its result. All types are immutable value objects.

namespace twoarm {

enum class Design { parallel, crossover };

const char* design_name(Design d);
Design design_from_name(const std::string& name);

// Allocation design. k is the ratio of control-arm size to treatment-arm
// size (n1 = k*n2); seq_count is the crossover sequence count, 0 for parallel.
struct TrialLayout {
    Design design = Design::parallel;
    double k = 1.0;
    int seq_count = 0;
};

// Noncompliance rates per arm plus the pooled loss-of-follow-up proportion.
struct AdjustmentProfile {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double r = 0.0;
};

struct ContinuousEndpoint {
    double sigma = 0.0;  // pooled standard deviation
    double effect = 0.0; // target treatment effect, mu2 - mu1
};

enum class BinaryMode { proportions, sd_of_difference };

// proportions mode (parallel): per-arm response probabilities p1, p2 with
// effect = p2 - p1. sd_of_difference mode (crossover): the SD of the
// within-subject arm difference plus a supplied effect.
struct BinaryEndpoint {
    BinaryMode mode = BinaryMode::proportions;
    double p1 = 0.0;
    double p2 = 0.0;
    double sigma_d = 0.0;
    double effect = 0.0;

    static BinaryEndpoint proportions(double p1, double p2);
    static BinaryEndpoint sd_of_difference(double sigma_d, double effect);
};

// Exponential event hazards per arm, exponential dropout-process rate gamma,
// uniform accrual over [0, t_accrual], total trial time t_total.
struct SurvivalEndpoint {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double t_total = 0.0;
    double t_accrual = 0.0;
    double gamma = 0.0;
};

// Category probabilities per arm (two simplexes of equal length J >= 2) and
// the log odds ratio theta of treatment versus control.
struct OrdinalEndpoint {
    std::vector<double> probs1;
    std::vector<double> probs2;
    double theta = 0.0;
};

using Endpoint =
    std::variant<ContinuousEndpoint, BinaryEndpoint, SurvivalEndpoint, OrdinalEndpoint>;

const char* endpoint_name(const Endpoint& endpoint); // "mean", "prop", "tte", "ord"

struct Request {
    TrialLayout layout;
    HypothesisFrame frame;
    Significance sig;
    Endpoint endpoint;
    AdjustmentProfile adj;
};

// Per-arm sizes after ceiling, plus the real-valued pre-ceiling solution and
// the unadjusted (perfect compliance, no attrition) size for audit.
// unadjusted_n2 is absent when the unadjusted problem has no finite size.
struct SizeResult {
    long long n2 = 0;
    long long n1 = 0;
    long long total = 0;
    double raw_n2 = 0.0;
    std::optional<long long> unadjusted_n2;
    std::vector<std::string> warnings;
};

struct ValidatedRequest {
    Request request; // normalized (e.g. crossover-continuous k forced to 1)
    std::vector<std::string> warnings;
};

// Checks every type invariant and the supported-scenario table. Crossover
// with a survival or ordinal endpoint is rejected as unsupported. Returns
// the normalized request; throws ValidationError naming the violated
// invariant otherwise.
ValidatedRequest validate_request(const Request& request);

} // namespace twoarm
