#pragma once

#include "twoarm/errors.hpp"

// Noncompliance mixing algebra and attrition inflation, exposed standalone so
// property tests and the sweep tool can exercise them independently of the
// size engines.

namespace twoarm {

// Arm parameters after treatment-switching noncompliance. The identity
// theta2_star - theta1_star = compliance_prob * cace holds exactly.
struct MixedParams {
    double theta1_star;
    double theta2_star;
    double compliance_prob; // 1 - rho1 - rho2
    double cace;            // theta2 - theta1, the complier average causal effect
};

// theta1* = (1-rho1)*theta1 + rho1*theta2
// theta2* = rho2*theta1 + (1-rho2)*theta2
MixedParams mix_noncompliance(double theta1, double theta2, double rho1, double rho2);

// raw_n / (1 - r); strictly increasing and multiplicative in r.
double inflate_for_attrition(double raw_n, double r);

} // namespace twoarm
