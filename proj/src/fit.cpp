#include "vmax/fit.hpp"

#include <gsl/gsl_cdf.h>

#include <cmath>

#include "vmax/errors.hpp"

namespace vmax {

namespace {
void check_series(const std::vector<double>& t, const std::vector<double>& y, std::size_t min_points) {
    if (t.size() != y.size()) throw ConfigError("fit: series lengths differ");
    if (t.size() < min_points) throw ConfigError("fit: too few points");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw ConfigError("fit: times must increase");
}

// Least squares y = a + b x; returns (a, b, se_b, rms).
struct Line {
    double a, b, se_b, rms;
};
Line line_fit(const std::vector<double>& x, const std::vector<double>& y) {
    double n = x.size(), sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i];
    double mx = sx / n, my = sy / n, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0)) throw ConfigError("fit: degenerate abscissae");
    double b = sxy / sxx, a = my - b * mx, ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) ss += std::pow(y[i] - a - b * x[i], 2);
    double se = x.size() > 2 ? std::sqrt(ss / (n - 2) / sxx) : 0;
    return {a, b, se, std::sqrt(ss / n)};
}
}  // namespace

RateFit fit_rate(const std::vector<double>& t, const std::vector<double>& y, double m) {
    check_series(t, y, 4);
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 0) || !(y[i] > 0)) throw ConfigError("fit_rate: needs positive t and y");
        lx.push_back(std::log(t[i]));
        ly.push_back(std::log(y[i]) - m * std::log(std::log(3 + t[i])));
    }
    Line l = line_fit(lx, ly);
    RateFit r;
    r.C = std::exp(l.a);
    r.p = -l.b;
    double q = gsl_cdf_tdist_Pinv(0.975, static_cast<double>(t.size() - 2));
    r.p_lo = r.p - q * l.se_b;
    r.p_hi = r.p + q * l.se_b;
    r.residual = l.rms;
    return r;
}

Extrapolation extrapolate(const std::vector<double>& t, const std::vector<double>& y, double m, double delta) {
    check_series(t, y, 3);
    std::vector<double> x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] > 1)) throw ConfigError("extrapolate: needs t > 1");
        x[i] = std::pow(std::log(t[i]), m) / std::pow(t[i], delta);
    }
    Line l = line_fit(x, y);
    return {l.a, l.b, l.rms};
}

}  // namespace vmax
