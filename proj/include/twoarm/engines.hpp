#pragma once

#include "twoarm/trial_model.hpp"

// The four endpoint size solvers, the continuity-corrected binary closed
// form, and the survival variance function. Noncompliance and attrition are
// folded in per endpoint; the solution pipeline is: solve the real-valued
// relaxation at adjusted parameters, inflate by 1/(1-r), ceil once per arm.

namespace twoarm {

enum class MeanMethod { normal_approx, exact_t };
enum class PropCorrection { none, continuity };

struct EngineOptions {
    MeanMethod mean_method = MeanMethod::normal_approx;
    PropCorrection correction = PropCorrection::none;
    bool strict_paper = false; // noninferiority margin sign, see hypothesis.hpp
};

SizeResult size_mean(const Request& request, const EngineOptions& opt = {});
SizeResult size_prop(const Request& request, const EngineOptions& opt = {});
SizeResult size_tte(const Request& request, const EngineOptions& opt = {});
SizeResult size_ord(const Request& request, const EngineOptions& opt = {});

// Dispatches on the request's endpoint.
SizeResult compute_size(const Request& request, const EngineOptions& opt = {});

// sigma^2(lambda) = lambda^2 / E(lambda), where E(lambda) is the expected
// event probability under exponential survival, exponential dropout gamma,
// uniform accrual over [0, t_accrual] and total time t_total.
double survival_variance(double lambda, const SurvivalEndpoint& endpoint);
double expected_event_probability(double lambda, const SurvivalEndpoint& endpoint);

// Real-valued relaxation of the treatment-arm size: adjusted, inflated by
// 1/(1-r), before ceiling. Always evaluates the closed form (exact_t has no
// real-valued relaxation); used by the power inverter.
double raw_size(const Request& request, const EngineOptions& opt = {});

// Same relaxation at an explicit type II error. The request must already be
// validated; beta only needs to lie in (0,1), so the power inverter may probe
// outside the alpha+beta sanity bound of user requests.
double raw_size_at_beta(const Request& validated_request, double beta,
                        const EngineOptions& opt = {});

} // namespace twoarm
