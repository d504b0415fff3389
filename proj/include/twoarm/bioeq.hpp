#pragma once

#include "twoarm/errors.hpp"

// Rewrites of the two bioequivalence hypothesis pairs into the plain
// equivalence frame, so the existing engines apply to the transformed triple.

namespace twoarm {

// Band endpoints delta1 < delta2. The multiplicative form additionally
// requires 0 < delta1 (and positive arm parameters).
struct BioeqBand {
    double delta1;
    double delta2;
};

struct EquivalenceMap {
    double theta1;
    double theta2;
    double delta;
};

// Additive band: H1: delta1 < theta2-theta1 < delta2 becomes
// |theta2*-theta1*| < delta* with theta2* = theta2 - delta2/2,
// theta1* = theta1 + delta1/2, delta* = (delta2-delta1)/2.
EquivalenceMap additive_to_equivalence(double theta1, double theta2, const BioeqBand& band);

// Multiplicative band: H1: delta1 < theta2/theta1 < delta2 becomes
// |theta2**-theta1**| < delta** with theta2** = log(theta2/sqrt(delta2)),
// theta1** = log(theta1*sqrt(delta1)), delta** = log(delta2/delta1)/2.
EquivalenceMap multiplicative_to_equivalence(double theta1, double theta2,
                                             const BioeqBand& band);

} // namespace twoarm
