#include "twoarm/hypothesis.hpp"

#include <cmath>

namespace twoarm {

const char* test_kind_name(TestKind kind) {
    switch (kind) {
    case TestKind::equality: return "equality";
    case TestKind::noninferiority: return "noninferiority";
    case TestKind::superiority: return "superiority";
    case TestKind::equivalence: return "equivalence";
    }
    return "?";
}

TestKind test_kind_from_name(const std::string& name) {
    if (name == "equality") return TestKind::equality;
    if (name == "noninferiority") return TestKind::noninferiority;
    if (name == "superiority") return TestKind::superiority;
    if (name == "equivalence") return TestKind::equivalence;
    throw ValidationError("unknown hypothesis test '" + name + "'");
}

double ResolvedFrame::effect(double theta1, double theta2) const {
    const double diff = theta2 - theta1;
    switch (kind) {
    case TestKind::equality:
        return std::fabs(diff);
    case TestKind::noninferiority:
        return strict_margin_sign ? diff - delta : diff + delta;
    case TestKind::superiority:
        return diff - delta;
    case TestKind::equivalence:
        return delta - std::fabs(diff);
    }
    return 0.0;
}

ResolvedFrame resolve(const HypothesisFrame& frame, const Significance& sig,
                      bool strict_paper) {
    if (!(sig.alpha > 0.0 && sig.alpha < 1.0))
        throw ValidationError("alpha must lie in (0,1)");
    if (!(sig.beta > 0.0 && sig.beta < 1.0))
        throw ValidationError("beta must lie in (0,1)");
    if (frame.kind == TestKind::equality && frame.delta != 0.0)
        throw ValidationError("equality test requires delta = 0");
    if (frame.kind == TestKind::equivalence && !(frame.delta > 0.0))
        throw ValidationError("equivalence test requires delta > 0");
    if (frame.delta < 0.0)
        throw ValidationError("delta margin must be nonnegative");

    ResolvedFrame rf;
    rf.kind = frame.kind;
    rf.delta = frame.delta;
    rf.strict_margin_sign = strict_paper;
    if (frame.kind == TestKind::equality) {
        rf.tail_prob = sig.alpha / 2.0;
        rf.beta_quantile_arg = sig.beta;
    } else if (frame.kind == TestKind::equivalence) {
        rf.tail_prob = sig.alpha;
        rf.beta_quantile_arg = sig.beta / 2.0;
    } else {
        rf.tail_prob = sig.alpha;
        rf.beta_quantile_arg = sig.beta;
    }
    rf.power_level = 1.0 - rf.beta_quantile_arg;
    return rf;
}

} // namespace twoarm
