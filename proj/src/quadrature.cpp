#include "vmax/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "lebedev_table.hpp"
#include "vmax/errors.hpp"

namespace vmax {

namespace {

// exactness degree of the tabulated rules, in table order
constexpr int kDegrees[] = {3,  5,  7,  9,  11, 13, 15, 17, 19,  21,  23,  25,  27,  29,  31,  35,
                            41, 47, 53, 59, 65, 71, 77, 83, 89, 95, 101, 107, 113, 119, 125, 131};

void push(SphereRule& r, double x, double y, double z, double w) {
    r.x.push_back({x, y, z});
    r.w.push_back(w);
}

void expand(SphereRule& r, const detail::LebedevOrbit& o) {
    double w = o.w;
    switch (o.kind) {
        case 1:
            for (int d = 0; d < 3; ++d)
                for (int s = -1; s <= 1; s += 2) {
                    Vec3 p;
                    p[d] = s;
                    push(r, p.x, p.y, p.z, w);
                }
            break;
        case 2: {
            double a = std::sqrt(0.5);
            for (int d = 0; d < 3; ++d)
                for (int s1 = -1; s1 <= 1; s1 += 2)
                    for (int s2 = -1; s2 <= 1; s2 += 2) {
                        Vec3 p;
                        p[(d + 1) % 3] = s1 * a;
                        p[(d + 2) % 3] = s2 * a;
                        push(r, p.x, p.y, p.z, w);
                    }
            break;
        }
        case 3: {
            double a = std::sqrt(1.0 / 3);
            for (int s3 = -1; s3 <= 1; s3 += 2)
                for (int s2 = -1; s2 <= 1; s2 += 2)
                    for (int s1 = -1; s1 <= 1; s1 += 2) push(r, s1 * a, s2 * a, s3 * a, w);
            break;
        }
        case 4: {
            double a = o.a, b = std::sqrt(1 - 2 * a * a);
            for (int d = 0; d < 3; ++d)
                for (int s3 = -1; s3 <= 1; s3 += 2)
                    for (int s2 = -1; s2 <= 1; s2 += 2)
                        for (int s1 = -1; s1 <= 1; s1 += 2) {
                            Vec3 p;
                            p[d] = s3 * b;
                            p[(d + 1) % 3] = s1 * a;
                            p[(d + 2) % 3] = s2 * a;
                            push(r, p.x, p.y, p.z, w);
                        }
            break;
        }
        case 5: {
            double a = o.a, b = std::sqrt(1 - a * a);
            for (int swap = 0; swap < 2; ++swap) {
                double p1 = swap ? b : a, p2 = swap ? a : b;
                for (int d = 0; d < 3; ++d)
                    for (int s2 = -1; s2 <= 1; s2 += 2)
                        for (int s1 = -1; s1 <= 1; s1 += 2) {
                            Vec3 p;
                            p[(d + 1) % 3] = s1 * p1;
                            p[(d + 2) % 3] = s2 * p2;
                            push(r, p.x, p.y, p.z, w);
                        }
            }
            break;
        }
        case 6: {
            double a = o.a, b = o.b, c = std::sqrt(1 - a * a - b * b);
            const double c3[2][5] = {{a, b, c, a, b}, {b, a, c, b, a}};
            for (int rev = 0; rev < 2; ++rev)
                for (int d = 0; d < 3; ++d)
                    for (int s3 = -1; s3 <= 1; s3 += 2)
                        for (int s2 = -1; s2 <= 1; s2 += 2)
                            for (int s1 = -1; s1 <= 1; s1 += 2)
                                push(r, s1 * c3[rev][d], s2 * c3[rev][d + 1], s3 * c3[rev][d + 2], w);
            break;
        }
        default: throw ConfigError("bad Lebedev orbit");
    }
}

std::mutex g_mutex;

}  // namespace

std::vector<int> lebedev_degrees() { return {std::begin(kDegrees), std::end(kDegrees)}; }

const SphereRule& lebedev_rule(int degree) {
    static std::map<int, std::unique_ptr<SphereRule>> cache;
    const auto& rules = detail::lebedev_rules();
    std::size_t idx = 0;
    while (idx < rules.size() && kDegrees[idx] < degree) ++idx;
    if (idx == rules.size()) throw ConfigError("Lebedev degree above 131 not available");
    std::lock_guard<std::mutex> lk(g_mutex);
    auto& slot = cache[kDegrees[idx]];
    if (!slot) {
        auto r = std::make_unique<SphereRule>();
        for (const auto& o : rules[idx].orbits) expand(*r, o);
        r->degree = kDegrees[idx];
        slot = std::move(r);
    }
    return *slot;
}

SphereRule product_sphere_rule(int ntheta, int nphi) {
    SphereRule r;
    const GaussRule& g = gauss_legendre(ntheta);
    for (int i = 0; i < ntheta; ++i) {
        double ct = g.x[i], st = std::sqrt(std::max(0.0, 1 - ct * ct));
        for (int j = 0; j < nphi; ++j) {
            double ph = 2 * std::numbers::pi * (j + 0.5) / nphi;
            push(r, st * std::cos(ph), st * std::sin(ph), ct, 0.5 * g.w[i] / nphi);
        }
    }
    r.degree = std::min(2 * ntheta - 1, nphi - 1);
    return r;
}

SphereRule midpoint_sphere_rule(int ntheta, int nphi) {
    SphereRule r;
    double dth = std::numbers::pi / ntheta;
    for (int i = 0; i < ntheta; ++i) {
        double th = (i + 0.5) * dth, ct = std::cos(th), st = std::sin(th);
        for (int j = 0; j < nphi; ++j) {
            double ph = 2 * std::numbers::pi * (j + 0.5) / nphi;
            push(r, st * std::cos(ph), st * std::sin(ph), ct, 0.5 * st * dth / nphi);
        }
    }
    r.degree = 1;
    return r;
}

SphereRule aberrated_rule(const SphereRule& base, const Vec3& b) {
    double beta = norm(b);
    if (!(beta < 1)) throw ConfigError("aberrated_rule: |b| must be < 1");
    if (beta == 0) return base;
    Vec3 bh = b / beta;
    double gamma = 1 / std::sqrt(1 - beta * beta);
    SphereRule r;
    r.degree = base.degree;
    r.x.reserve(base.size());
    r.w.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        const Vec3& om = base.x[i];
        double c = dot(om, bh);
        Vec3 perp = om - c * bh;
        double den = 1 + c * beta;
        Vec3 y = ((c + beta) / den) * bh + (1 / (gamma * den)) * perp;
        r.x.push_back(y / norm(y));
        r.w.push_back(base.w[i] / (gamma * gamma * den * den));
    }
    return r;
}

const GaussRule& gauss_legendre(int n) {
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    if (n < 1) throw ConfigError("Gauss-Legendre needs n >= 1");
    std::lock_guard<std::mutex> lk(g_mutex);
    auto& slot = cache[n];
    if (!slot) {
        auto g = std::make_unique<GaussRule>();
        gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(n);
        for (int i = 0; i < n; ++i) {
            double xi, wi;
            gsl_integration_glfixed_point(-1, 1, i, &xi, &wi, t);
            g->x.push_back(xi);
            g->w.push_back(wi);
        }
        gsl_integration_glfixed_table_free(t);
        slot = std::move(g);
    }
    return *slot;
}

}  // namespace vmax
