#pragma once

#include "twoarm/engines.hpp"

namespace twoarm {

struct AchievedPower {
    double power = 0.0;
    bool saturated = false; // n2 exceeds the size at the smallest supported beta
};

// Recovers the achieved power for a given per-arm size by root finding on
// beta over [0.005, 0.995] in the real-valued size relaxation (pre-ceiling).
// Throws PowerRangeError when n2 falls below the size achievable at
// power 0.005; saturates at 0.995 on the other end.
AchievedPower achieved_power(const Request& request, long long n2,
                             const EngineOptions& opt = {});

} // namespace twoarm
