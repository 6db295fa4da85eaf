#pragma once

#include <span>

namespace infoconv {

struct PearsonResult {
    double rho;
    double p_value; // two-sided, from the t distribution with n-2 dof
};

// Product-moment correlation. Requires equal lengths >= 3 and nonzero
// variance in both series.
PearsonResult pearson(std::span<const double> xs, std::span<const double> ys);

// Regularized incomplete beta function I_x(a, b), evaluated by a
// continued fraction. Used for the t-distribution tail.
double regularized_incomplete_beta(double a, double b, double x);

} // namespace infoconv
