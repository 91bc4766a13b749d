#pragma once

#include <vector>

namespace vmax {

// y = C log^m(3 + t) / t^p, least squares in log-log with the log factor divided out.
struct RateFit {
    double C = 0, p = 0;
    double p_lo = 0, p_hi = 0;  // 95% confidence interval for p
    double residual = 0;        // rms of the log residuals
};
RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& y, double m = 0);

// y = a + b log^m(t) / t^delta with m, delta fixed; returns the extrapolated a and the amplitude b.
struct Extrapolation {
    double a = 0, b = 0;
    double residual = 0;
};
Extrapolation extrapolate(const std::vector<double>& t, const std::vector<double>& y, double m, double delta);

}  // namespace vmax
