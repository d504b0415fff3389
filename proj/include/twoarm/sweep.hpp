#pragma once

#include <optional>
#include <vector>

#include "twoarm/engines.hpp"

// Grid evaluation over (rho1, rho2, r) for a fixed base request, in the
// deterministic order of the cartesian product (rho1 outer, r inner). Every
// grid point is validated before any result is produced, so an invalid point
// aborts the whole sweep.

namespace twoarm {

struct SweepSpec {
    Request base; // adjustment profile is overwritten per grid point
    std::vector<double> rho1_values;
    std::vector<double> rho2_values;
    std::vector<double> r_values;
    std::optional<long long> power_at; // emit achieved power at this fixed n2
    EngineOptions options;
};

struct SweepRow {
    double rho1 = 0.0;
    double rho2 = 0.0;
    double r = 0.0;
    SizeResult result;
    std::optional<double> power_at_base_n;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

} // namespace twoarm
