#pragma once

#include <string>

#include "twoarm/errors.hpp"

namespace twoarm {

enum class TestKind { equality, noninferiority, superiority, equivalence };

const char* test_kind_name(TestKind kind);
TestKind test_kind_from_name(const std::string& name);

// Hypothesis test frame: the kind plus its margin.
// equality requires delta == 0; equivalence requires delta > 0.
struct HypothesisFrame {
    TestKind kind = TestKind::equality;
    double delta = 0.0;
};

struct Significance {
    double alpha = 0.0; // test significance level
    double beta = 0.0;  // type II error, 1 - power
};

// The (U(alpha), V, W(beta)) triple that parameterizes every size formula.
//
//   kind            U(alpha)   V(theta1,theta2,delta)       W(beta)
//   equality        alpha/2    |theta2-theta1|              1-beta
//   noninferiority  alpha      theta2-theta1+delta          1-beta
//   superiority     alpha      theta2-theta1-delta          1-beta
//   equivalence     alpha      delta-|theta2-theta1|        1-beta/2
//
// The noninferiority V substitutes the margin -delta into the one-sided
// form, consistent with its alternative theta2-theta1 > -delta. With
// strict_margin_sign the verbatim theta2-theta1-delta is used instead.
struct ResolvedFrame {
    TestKind kind;
    double delta;
    double tail_prob;          // U(alpha)
    double power_level;        // W(beta)
    double beta_quantile_arg;  // 1 - W(beta), the upper-tail argument
    bool strict_margin_sign = false;

    double effect(double theta1, double theta2) const;
};

ResolvedFrame resolve(const HypothesisFrame& frame, const Significance& sig,
                      bool strict_paper = false);

} // namespace twoarm
