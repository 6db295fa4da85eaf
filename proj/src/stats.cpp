#include "infoconv/stats.hpp"

#include <cmath>
#include <string>

#include "infoconv/errors.hpp"

namespace infoconv {

namespace {

// Lentz's algorithm for the continued fraction of I_x(a, b).
double betacf(double a, double b, double x) {
    constexpr int kMaxIters = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;
    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIters; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw ConvergenceError("incomplete beta continued fraction did not converge", 0.0);
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (x < 0.0 || x > 1.0)
        throw ValidationError("regularized_incomplete_beta: x out of [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    // The continued fraction converges fast for x < (a+1)/(a+b+2);
    // otherwise use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

PearsonResult pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw ValidationError("pearson: series lengths differ");
    const std::size_t n = xs.size();
    if (n < 3) throw ValidationError("pearson: need at least 3 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0)
        throw ValidationError("pearson: zero variance, correlation undefined");
    double rho = sxy / std::sqrt(sxx * syy);
    if (rho > 1.0) rho = 1.0;
    if (rho < -1.0) rho = -1.0;

    double df = static_cast<double>(n) - 2.0;
    double denom = 1.0 - rho * rho;
    double p;
    if (denom <= 0.0) {
        p = 0.0;
    } else {
        double t = rho * std::sqrt(df / denom);
        // Two-sided tail of the t distribution.
        p = regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
    }
    return {rho, p};
}

} // namespace infoconv
