#include "twoarm/adjustments.hpp"

namespace twoarm {

MixedParams mix_noncompliance(double theta1, double theta2, double rho1, double rho2) {
    if (!(rho1 >= 0.0 && rho1 < 1.0 && rho2 >= 0.0 && rho2 < 1.0))
        throw ValidationError("noncompliance rates must lie in [0,1)");
    if (!(rho1 + rho2 < 1.0))
        throw ValidationError("rho1 + rho2 must be below 1");
    MixedParams m;
    m.theta1_star = (1.0 - rho1) * theta1 + rho1 * theta2;
    m.theta2_star = rho2 * theta1 + (1.0 - rho2) * theta2;
    m.compliance_prob = 1.0 - rho1 - rho2;
    m.cace = theta2 - theta1;
    return m;
}

double inflate_for_attrition(double raw_n, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw ValidationError("loss of follow-up r must lie in [0,1)");
    return raw_n / (1.0 - r);
}

} // namespace twoarm
