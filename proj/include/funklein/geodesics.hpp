#pragma once

#include <vector>

#include "funklein/finsler.hpp"
#include "funklein/geometry.hpp"
#include "funklein/klein.hpp"

// Spray coefficients (closed form for the Klein-disc Funk metric, finite
// differences for any metric field), geodesic integration, and the curve
// length functional.

namespace funklein {

struct SprayCoeffs {
    Vec2 G; // G^1, G^2 at a fixed (x, xi); 2-homogeneous in xi
};

using SprayFn = std::function<Vec2(const Vec2&, const Vec2&)>;

// Closed-form spray of the Klein-disc Funk metric:
// G^i = xi^i / (r^2 - |x|^2) * (<x,xi> + (1-r^2)[(1-|x|^2)|xi|^2 + 2<x,xi>^2] / (2F(1-|x|^2)^2)).
inline SprayCoeffs spray_closed(const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("spray_closed: xi = 0");
    detail::require_klein_interior(x, "spray_closed");
    const double r = klein_funk_radius();
    const double u = x.norm_sq();
    const double s = x.dot(xi);
    const double F = funk_metric(x, xi);
    const double P = (1.0 - r * r) * ((1.0 - u) * xi.norm_sq() + 2.0 * s * s) /
                     (2.0 * F * (1.0 - u) * (1.0 - u));
    return {xi * ((s + P) / (r * r - u))};
}

inline Vec2 funk_spray(const Vec2& x, const Vec2& xi) { return spray_closed(x, xi).G; }

// Closed spray of the radius-r Klein norm (the Riemannian part alone):
// G^i = xi^i <x,xi> / (r^2 - |x|^2).  Oracle input for curvature checks.
inline Vec2 klein_spray(const Vec2& x, const Vec2& xi) {
    detail::require_klein_interior(x, "klein_spray");
    return xi * (x.dot(xi) / (klein_funk_radius() * klein_funk_radius() - x.norm_sq()));
}

namespace detail {
struct SpraydiffSteps {
    double hx;
    double hxi;
};
inline SpraydiffSteps spray_steps(const Vec2& x, const Vec2& xi) {
    return {1e-4 * (1.0 + x.norm()), 1e-4 * std::max(1.0, xi.norm())};
}
} // namespace detail

// Generic spray by central differences:
// G^i = 1/4 g^{il} ( [F^2]_{x^k xi^l} xi^k - [F^2]_{x^l} ).
// The x-derivatives are Richardson-extrapolated; their truncation error is
// what blows up first near a boundary pole of the metric.
inline SprayCoeffs spray_numeric(const MetricField& F, const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("spray_numeric: xi = 0");
    if (!F.domain(x)) throw OutOfDomain("spray_numeric: x outside domain of " + F.name);

    const detail::SpraydiffSteps steps = detail::spray_steps(x, xi);
    const double hx = steps.hx, hv = steps.hxi;
    auto F2 = [&](const Vec2& xx, const Vec2& vv) {
        const double f = F.eval(xx, vv);
        return f * f;
    };

    Vec2 dF2_dx;
    Mat2 mixed; // mixed(k, l) = [F^2]_{x^k xi^l}
    for (int k = 0; k < 2; ++k) {
        auto ddx = [&](double h) {
            Vec2 xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            return (F2(xp, xi) - F2(xm, xi)) / (2.0 * h);
        };
        dF2_dx[k] = (4.0 * ddx(hx / 2.0) - ddx(hx)) / 3.0;
        for (int l = 0; l < 2; ++l) {
            auto cross = [&](double h) {
                Vec2 xp = x, xm = x, vp = xi, vm = xi;
                xp[k] += h;
                xm[k] -= h;
                vp[l] += hv;
                vm[l] -= hv;
                return (F2(xp, vp) - F2(xp, vm) - F2(xm, vp) + F2(xm, vm)) /
                       (4.0 * h * hv);
            };
            mixed(k, l) = (4.0 * cross(hx / 2.0) - cross(hx)) / 3.0;
        }
    }

    const FundamentalTensor g = fundamental_tensor(F, x, xi);
    if (std::abs(g.g.det()) < 1e-14)
        throw SingularTensor("spray_numeric: fundamental tensor not invertible");
    const Mat2 ginv = g.g.inverse();

    Vec2 rhs;
    for (int l = 0; l < 2; ++l)
        rhs[l] = mixed(0, l) * xi.x + mixed(1, l) * xi.y - dF2_dx[l];
    return {ginv * rhs * 0.25};
}

inline SprayFn numeric_spray_fn(const MetricField& F) {
    return [F](const Vec2& x, const Vec2& xi) { return spray_numeric(F, x, xi).G; };
}

// ---------------------------------------------------------------------------
// Geodesic integration

struct TraceSample {
    double t;
    Vec2 x;
    Vec2 v;
};

enum class TraceEnd { completed, left_domain };

struct GeodesicTrace {
    std::vector<TraceSample> samples;
    TraceEnd terminated_reason = TraceEnd::completed;
};

// Fixed-step RK4 on (x' = v, v' = -2 G(x, v)).  Terminates with left_domain
// as soon as a step would land outside the field's domain (or a stage
// evaluation leaves it).
inline GeodesicTrace integrate_geodesic(const MetricField& F, const SprayFn& spray,
                                        const Point2& x0, const Vec2& v0,
                                        double t_end, double step) {
    if (v0.norm_sq() == 0.0) throw ZeroVector("integrate_geodesic: v0 = 0");
    if (!F.domain(x0)) throw OutOfDomain("integrate_geodesic: x0 outside domain of " + F.name);

    GeodesicTrace trace;
    trace.samples.push_back({0.0, x0, v0});

    Vec2 x = x0, v = v0;
    double t = 0.0;
    const auto n_steps = static_cast<long>(std::ceil(t_end / step - 1e-12));
    for (long i = 0; i < n_steps; ++i) {
        const double h = std::min(step, t_end - t);
        Vec2 xn, vn;
        try {
            const Vec2 k1x = v, k1v = spray(x, v) * -2.0;
            const Vec2 k2x = v + k1v * (h / 2), k2v = spray(x + k1x * (h / 2), v + k1v * (h / 2)) * -2.0;
            const Vec2 k3x = v + k2v * (h / 2), k3v = spray(x + k2x * (h / 2), v + k2v * (h / 2)) * -2.0;
            const Vec2 k4x = v + k3v * h, k4v = spray(x + k3x * h, v + k3v * h) * -2.0;
            xn = x + (k1x + k2x * 2.0 + k3x * 2.0 + k4x) * (h / 6.0);
            vn = v + (k1v + k2v * 2.0 + k3v * 2.0 + k4v) * (h / 6.0);
        } catch (const OutOfDomain&) {
            trace.terminated_reason = TraceEnd::left_domain;
            return trace;
        }
        if (!F.domain(xn)) {
            trace.terminated_reason = TraceEnd::left_domain;
            return trace;
        }
        x = xn;
        v = vn;
        t += h;
        trace.samples.push_back({t, x, v});
    }
    trace.terminated_reason = TraceEnd::completed;
    return trace;
}

inline GeodesicTrace integrate_geodesic(const MetricField& F, const Point2& x0,
                                        const Vec2& v0, double t_end, double step) {
    return integrate_geodesic(F, numeric_spray_fn(F), x0, v0, t_end, step);
}

// Max perpendicular distance of the trace from the line through its start
// along its initial velocity, normalized by the traced arc length.
inline double collinearity_residual(const GeodesicTrace& trace) {
    if (trace.samples.size() < 2) return 0.0;
    const Vec2 x0 = trace.samples.front().x;
    const Vec2 dir = trace.samples.front().v / trace.samples.front().v.norm();
    const Vec2 nrm = dir.perp();
    double worst = 0.0, arc = 0.0;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        worst = std::max(worst, std::abs((trace.samples[i].x - x0).dot(nrm)));
        arc += (trace.samples[i].x - trace.samples[i - 1].x).norm();
    }
    return worst / std::max(arc, 1e-300);
}

// Relative spread of F(x(t), v(t)) along the trace.
inline double speed_drift(const MetricField& F, const GeodesicTrace& trace) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& s : trace.samples) {
        const double f = F.eval(s.x, s.v);
        if (first) {
            lo = hi = f;
            first = false;
        } else {
            lo = std::min(lo, f);
            hi = std::max(hi, f);
        }
    }
    return first ? 0.0 : (hi - lo) / hi;
}

// ---------------------------------------------------------------------------
// Curve length

namespace detail {
// Composite Simpson weights over n subintervals; a trailing 3/8 block
// absorbs an odd count.
inline double simpson_sum(std::span<const double> f, double dt) {
    const std::size_t n = f.size() - 1;
    double acc = 0.0;
    std::size_t even_end = n % 2 == 0 ? n : n - 3;
    for (std::size_t i = 0; i + 2 <= even_end; i += 2)
        acc += (f[i] + 4.0 * f[i + 1] + f[i + 2]) * (dt / 3.0);
    if (n % 2 != 0) {
        const std::size_t k = even_end;
        acc += (f[k] + 3.0 * f[k + 1] + 3.0 * f[k + 2] + f[k + 3]) * (3.0 * dt / 8.0);
    }
    return acc;
}
} // namespace detail

// Length of a parametric curve under F, composite Simpson with the analytic
// tangent; n subintervals.
inline double curve_length(const MetricField& F, const std::function<Vec2(double)>& sigma,
                           const std::function<Vec2(double)>& dsigma, double t0,
                           double t1, int n = 256) {
    if (n < 2) n = 2;
    const double dt = (t1 - t0) / n;
    std::vector<double> f(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = t0 + dt * i;
        const Vec2 p = sigma(t);
        if (!F.domain(p)) throw OutOfDomain("curve_length: sample outside domain of " + F.name);
        f[static_cast<std::size_t>(i)] = F.eval(p, dsigma(t));
    }
    return detail::simpson_sum(f, dt);
}

// Length of a sampled path at uniform parameter spacing.  Tangents by
// centered differences interiorly, second-order one-sided at the endpoints.
inline double curve_length(const MetricField& F, std::span<const Vec2> path,
                           double t0 = 0.0, double t1 = 1.0) {
    const std::size_t n = path.size();
    if (n < 3) {
        if (n < 2) return 0.0;
        // two samples: straight-segment fallback
        if (!F.domain(path[0]) || !F.domain(path[1]))
            throw OutOfDomain("curve_length: sample outside domain of " + F.name);
        const Vec2 d = (path[1] - path[0]) / (t1 - t0);
        return 0.5 * (F.eval(path[0], d) + F.eval(path[1], d)) * (t1 - t0);
    }
    const double dt = (t1 - t0) / static_cast<double>(n - 1);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!F.domain(path[i]))
            throw OutOfDomain("curve_length: sample outside domain of " + F.name);
        Vec2 tangent;
        if (i == 0)
            tangent = (path[0] * -3.0 + path[1] * 4.0 - path[2]) / (2.0 * dt);
        else if (i == n - 1)
            tangent = (path[n - 1] * 3.0 - path[n - 2] * 4.0 + path[n - 3]) / (2.0 * dt);
        else
            tangent = (path[i + 1] - path[i - 1]) / (2.0 * dt);
        f[i] = F.eval(path[i], tangent);
    }
    return detail::simpson_sum(f, dt);
}

// Straight-segment length from a to b.
inline double segment_length(const MetricField& F, const Point2& a, const Point2& b,
                             int n = 2048) {
    return curve_length(
        F, [&](double t) { return a + (b - a) * t; },
        [&](double) { return b - a; }, 0.0, 1.0, n);
}

} // namespace funklein
