#pragma once

#include <string>

#include <json.hpp>

#include "twoarm/engines.hpp"

// JSON wire schema for requests, options and results. Field names mirror the
// CLI flags (design, test, alpha, beta, sigma, varsigma, varlambda,
// varcatprob, k, seqnumber, ttotal, taccrual, gamma, delta, TTE, theta,
// rho, r).

namespace twoarm {

nlohmann::json request_to_json(const Request& request);
Request request_from_json(const nlohmann::json& j); // validates

nlohmann::json options_to_json(const EngineOptions& options);
EngineOptions options_from_json(const nlohmann::json& j);

nlohmann::json size_result_to_json(const SizeResult& result);

} // namespace twoarm
