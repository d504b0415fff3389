#include "twoarm/bioeq.hpp"

#include <cmath>

namespace twoarm {

EquivalenceMap additive_to_equivalence(double theta1, double theta2, const BioeqBand& band) {
    if (!(band.delta1 < band.delta2))
        throw ValidationError("bioequivalence band requires delta1 < delta2");
    EquivalenceMap m;
    m.theta2 = theta2 - band.delta2 / 2.0;
    m.theta1 = theta1 + band.delta1 / 2.0;
    m.delta = (band.delta2 - band.delta1) / 2.0;
    if (!(m.delta > 0.0))
        throw ValidationError("mapped equivalence margin must be positive");
    return m;
}

EquivalenceMap multiplicative_to_equivalence(double theta1, double theta2,
                                             const BioeqBand& band) {
    if (!(band.delta1 > 0.0))
        throw ValidationError("multiplicative band requires delta1 > 0");
    if (!(band.delta1 < band.delta2))
        throw ValidationError("bioequivalence band requires delta1 < delta2");
    if (!(theta1 > 0.0 && theta2 > 0.0))
        throw ValidationError("multiplicative form requires positive arm parameters");
    EquivalenceMap m;
    m.theta2 = std::log(theta2) - 0.5 * std::log(band.delta2);
    m.theta1 = std::log(theta1) + 0.5 * std::log(band.delta1);
    m.delta = 0.5 * std::log(band.delta2 / band.delta1);
    return m;
}

} // namespace twoarm
