#pragma once

#include <numbers>
#include <span>
#include <utility>

#include "funklein/geometry.hpp"
#include "funklein/klein.hpp"

// Model maps between realizations of the hyperbolic plane, a generic
// pullback engine, and the closed-form Funk structures on the Poincare disc
// and the upper half-plane disc.  The pullback of the Klein-disc Funk metric
// is the ground truth for both closed forms.

namespace funklein {

// A differentiable map from an open set of R^2 into R^2 or R^3.  The closed
// Jacobian is optional; pullbacks fall back to central differences.
struct ChartMap {
    int dim_out = 2;
    std::function<Vec3(const Vec2&)> eval;
    std::function<Mat32(const Vec2&)> jacobian_closed; // may be empty
    std::function<bool(const Vec2&)> domain;
    std::string name;
};

struct AmbientMetric {
    enum class Signature { Riemannian, LorentzRanders };
    std::function<double(const Vec3&, const Vec3&)> eval;
    Signature signature = Signature::Riemannian;
    std::function<bool(const Vec3&)> domain;
    std::string name;
};

inline Vec3 map_eval(const ChartMap& map, const Vec2& x) {
    if (!map.domain(x)) throw OutOfDomain("map_eval: x outside domain of " + map.name);
    return map.eval(x);
}

// Central-difference Jacobian, step 1e-6 scaled by (1 + |x|).
inline Mat32 numeric_jacobian(const ChartMap& map, const Vec2& x) {
    const double h = 1e-6 * (1.0 + x.norm());
    Mat32 J;
    for (int j = 0; j < 2; ++j) {
        Vec2 xp = x, xm = x;
        xp[j] += h;
        xm[j] -= h;
        const Vec3 fp = map.eval(xp), fm = map.eval(xm);
        for (int i = 0; i < 3; ++i) J(i, j) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return J;
}

inline Mat32 chart_jacobian(const ChartMap& map, const Vec2& x) {
    return map.jacobian_closed ? map.jacobian_closed(x) : numeric_jacobian(map, x);
}

// Pullback through a 2D -> 3D chart.
inline double pullback(const ChartMap& map, const AmbientMetric& ambient,
                       const Vec2& x, const Vec2& xi) {
    const Vec3 y = map_eval(map, x);
    const Vec3 v = chart_jacobian(map, x) * xi;
    return ambient.eval(y, v);
}

// Pullback through a 2D -> 2D chart of a planar metric field.
inline double pullback(const ChartMap& map, const MetricField& dst,
                       const Vec2& x, const Vec2& xi) {
    const Vec3 y = map_eval(map, x);
    const Vec2 v = chart_jacobian(map, x).apply2(xi);
    return dst.eval({y.x, y.y}, v);
}

inline MetricField pullback_field(const ChartMap& map, const AmbientMetric& ambient,
                                  const std::string& name) {
    return {[map, ambient](const Vec2& x, const Vec2& xi) {
                return pullback(map, ambient, x, xi);
            },
            map.domain, name};
}

// ---------------------------------------------------------------------------
// Charts

// f : Poincare disc -> Klein disc, f(x) = 2x / (1 + |x|^2).
inline ChartMap poincare_to_klein_chart() {
    return {2,
            [](const Vec2& x) {
                const Vec2 y = x * (2.0 / (1.0 + x.norm_sq()));
                return Vec3{y.x, y.y, 0.0};
            },
            [](const Vec2& x) {
                const double u = x.norm_sq();
                const double c = 2.0 / ((1.0 + u) * (1.0 + u));
                Mat32 J;
                J(0, 0) = c * (1.0 + u - 2.0 * x.x * x.x);
                J(0, 1) = c * (-2.0 * x.x * x.y);
                J(1, 0) = c * (-2.0 * x.x * x.y);
                J(1, 1) = c * (1.0 + u - 2.0 * x.y * x.y);
                return J;
            },
            [](const Vec2& x) { return x.norm() < 1.0; }, "poincare-to-klein"};
}

// g : Klein disc -> upper half-plane.  No closed Jacobian on purpose; this
// is the chart that exercises the numeric fallback.
inline ChartMap klein_to_upper_chart() {
    return {2,
            [](const Vec2& x) {
                const double d = 1.0 + x.x;
                return Vec3{2.0 * x.y / d, 2.0 * std::sqrt(1.0 - x.norm_sq()) / d, 0.0};
            },
            nullptr,
            [](const Vec2& x) { return x.norm() < 1.0 && x.x > -1.0; },
            "klein-to-upper"};
}

// g^{-1} : upper half-plane -> Klein disc.
inline ChartMap upper_to_klein_chart() {
    return {2,
            [](const Vec2& x) {
                const double q = 4.0 + x.norm_sq();
                return Vec3{(4.0 - x.norm_sq()) / q, 4.0 * x.x / q, 0.0};
            },
            [](const Vec2& x) {
                const double q = 4.0 + x.norm_sq();
                Mat32 J;
                J(0, 0) = -16.0 * x.x / (q * q);
                J(0, 1) = -16.0 * x.y / (q * q);
                J(1, 0) = (4.0 * q - 8.0 * x.x * x.x) / (q * q);
                J(1, 1) = -8.0 * x.x * x.y / (q * q);
                return J;
            },
            [](const Vec2& x) { return x.y > 0.0; }, "upper-to-klein"};
}

// eta : D_E(r) -> upper hyperboloid sheet, eta(x) = (x, r)/sqrt(r^2 - |x|^2).
inline ChartMap hyperboloid_chart() {
    return {3,
            [](const Vec2& x) {
                const double r = klein_funk_radius();
                const double s = std::sqrt(r * r - x.norm_sq());
                return Vec3{x.x / s, x.y / s, r / s};
            },
            [](const Vec2& x) {
                const double r = klein_funk_radius();
                const double w = r * r - x.norm_sq();
                const double s3 = std::pow(w, 1.5);
                Mat32 J;
                J(0, 0) = (w + x.x * x.x) / s3;
                J(0, 1) = x.x * x.y / s3;
                J(1, 0) = x.x * x.y / s3;
                J(1, 1) = (w + x.y * x.y) / s3;
                J(2, 0) = r * x.x / s3;
                J(2, 1) = r * x.y / s3;
                return J;
            },
            [](const Vec2& x) { return in_klein_funk_domain(x); }, "hyperboloid"};
}

// Psi : D_K(1) -> upper hemisphere of radius r, Psi(x) = (x, sqrt(r^2 - |x|^2)).
inline ChartMap hemisphere_chart() {
    return {3,
            [](const Vec2& x) {
                const double r = klein_funk_radius();
                return Vec3{x.x, x.y, std::sqrt(r * r - x.norm_sq())};
            },
            [](const Vec2& x) {
                const double r = klein_funk_radius();
                const double s = std::sqrt(r * r - x.norm_sq());
                Mat32 J;
                J(0, 0) = 1.0;
                J(1, 1) = 1.0;
                J(2, 0) = -x.x / s;
                J(2, 1) = -x.y / s;
                return J;
            },
            [](const Vec2& x) { return in_klein_funk_domain(x); }, "hemisphere"};
}

inline ChartMap identity_chart() {
    return {2, [](const Vec2& x) { return Vec3{x.x, x.y, 0.0}; },
            [](const Vec2&) {
                Mat32 J;
                J(0, 0) = J(1, 1) = 1.0;
                return J;
            },
            [](const Vec2&) { return true; }, "identity"};
}

// ---------------------------------------------------------------------------
// Ambient metrics

// Lorentz-Randers metric on the upper half-space: an indefinite quadratic
// part plus a 1-form in dx^3.  Not positive definite off the hyperboloid;
// evaluation is only rejected when the quadratic part turns negative.
inline AmbientMetric lorentz_randers_metric() {
    const double r = klein_funk_radius();
    return {[r](const Vec3& x, const Vec3& v) {
                const double q = v.x * v.x + v.y * v.y - v.z * v.z;
                if (q < 0.0)
                    throw LorentzSignature("lorentz_randers: indefinite part negative");
                const double denom = x.z * x.z - r * r * (x.x * x.x + x.y * x.y);
                const double beta = (1.0 - r * r / denom) * v.z / x.z;
                return std::sqrt(q) + beta;
            },
            AmbientMetric::Signature::LorentzRanders,
            [r](const Vec3& x) {
                return x.z > 0.0 &&
                       x.z * x.z - r * r * (x.x * x.x + x.y * x.y) != 0.0;
            },
            "lorentz-randers"};
}

// Randers deformation of the upper half-space hyperbolic metric |v| / x^3
// by the 1-form b(x) dx^3; positive definite where |x| < 1.
inline AmbientMetric hemisphere_randers_metric() {
    return {[](const Vec3& x, const Vec3& v) {
                const double flat = 1.0 - x.x * x.x - x.y * x.y;
                const double b = (x.norm_sq() - 1.0) / (x.z * flat);
                return v.norm() / x.z + b * v.z;
            },
            AmbientMetric::Signature::Riemannian,
            [](const Vec3& x) { return x.z > 0.0 && x.norm() < 1.0; },
            "hemisphere-randers"};
}

// ---------------------------------------------------------------------------
// Closed forms in the other disc models

// Poincare unit disc has Euclidean radius tanh(1/2).
inline double funk_poincare_radius() {
    static const double rp = std::tanh(0.5);
    return rp;
}

inline bool in_poincare_funk_domain(const Vec2& x) {
    return x.norm() < funk_poincare_radius() - detail::kKleinMargin;
}

inline double funk_poincare_alpha(const Point2& x, const Vec2& xi) {
    if (!in_poincare_funk_domain(x))
        throw OutOfDomain("funk_poincare: |x| >= tanh(1/2) - margin");
    const double r = klein_funk_radius();
    const double u = x.norm_sq(), v = xi.norm_sq(), s = x.dot(xi);
    const double omu = 1.0 - u, opu = 1.0 + u;
    const double den = omu * omu - (1.0 - r * r) * opu * opu;
    return 2.0 * std::sqrt(omu * omu * v - (1.0 - r * r) * (opu * opu * v - 4.0 * s * s)) / den;
}

inline double funk_poincare_beta(const Point2& x, const Vec2& xi) {
    if (!in_poincare_funk_domain(x))
        throw OutOfDomain("funk_poincare: |x| >= tanh(1/2) - margin");
    const double r = klein_funk_radius();
    const double u = x.norm_sq(), s = x.dot(xi);
    const double omu = 1.0 - u, opu = 1.0 + u;
    const double den = omu * omu - (1.0 - r * r) * opu * opu;
    return 4.0 * (1.0 - r * r) * opu * s / (omu * den);
}

// Funk structure on the Poincare unit disc; agrees with the pullback of the
// Klein-disc Funk metric through poincare_to_klein_chart.
inline double funk_poincare(const Point2& x, const Vec2& xi) {
    return funk_poincare_alpha(x, xi) + funk_poincare_beta(x, xi);
}

// The unit hyperbolic disc about (0, 2) in the upper half-plane equals the
// Euclidean disc about (0, e + 1/e) of radius e - 1/e.
inline EuclideanDisc upper_funk_disc() {
    const double e = std::numbers::e;
    return {e - 1.0 / e, {0.0, e + 1.0 / e}};
}

inline bool in_upper_funk_domain(const Vec2& x) {
    const EuclideanDisc d = upper_funk_disc();
    return (x - d.center).norm() < d.radius - detail::kKleinMargin;
}

inline double funk_upper_alpha(const Point2& x, const Vec2& xi) {
    if (!in_upper_funk_domain(x))
        throw OutOfDomain("funk_upper: x outside the unit hyperbolic disc about (0,2)");
    const double r = klein_funk_radius();
    const double u = x.norm_sq(), v = xi.norm_sq(), s = x.dot(xi);
    const double q = 4.0 + u;
    const double t = q * xi.x - 2.0 * x.x * s;
    const double num = 16.0 * x.y * x.y * v - (1.0 - r * r) * (16.0 * s * s + t * t);
    const double den = 16.0 * x.y * x.y - (1.0 - r * r) * q * q;
    return 4.0 * std::sqrt(num) / den;
}

// Closed-form beta term.  Its denominator bracket (plain q where
// funk_upper_alpha's denominator carries q^2) disagrees with the defining
// pullback through upper_to_klein_chart; the pullback is authoritative,
// and `check typo-ledger` reports the gap.
inline double funk_upper_beta(const Point2& x, const Vec2& xi) {
    if (!in_upper_funk_domain(x))
        throw OutOfDomain("funk_upper: x outside the unit hyperbolic disc about (0,2)");
    const double r = klein_funk_radius();
    const double u = x.norm_sq(), s = x.dot(xi);
    const double q = 4.0 + u;
    const double num = (1.0 - r * r) * q * (x.x * xi.x * q - (4.0 - u + 2.0 * x.x * x.x) * s);
    const double den = x.y * x.y * (16.0 * x.y * x.y - (1.0 - r * r) * q);
    return num / den;
}

inline double funk_upper(const Point2& x, const Vec2& xi) {
    return funk_upper_alpha(x, xi) + funk_upper_beta(x, xi);
}

// ---------------------------------------------------------------------------
// Field factories and the isometry comparator

inline MetricField funk_poincare_field() {
    return {[](const Vec2& x, const Vec2& xi) { return funk_poincare(x, xi); },
            [](const Vec2& x) { return in_poincare_funk_domain(x); }, "poincare"};
}

inline MetricField funk_upper_field() {
    return {[](const Vec2& x, const Vec2& xi) { return funk_upper(x, xi); },
            [](const Vec2& x) { return in_upper_funk_domain(x); }, "upper"};
}

// Riemannian Poincare norm on the unit disc, 2|xi| / (1 - |x|^2).
inline MetricField poincare_norm_field() {
    return {[](const Vec2& x, const Vec2& xi) {
                return 2.0 * xi.norm() / (1.0 - x.norm_sq());
            },
            [](const Vec2& x) { return x.norm() < 1.0 - detail::kBoundaryMargin; },
            "poincare-norm"};
}

// Hyperbolic norm of the upper half-plane, |xi| / x^2.
inline MetricField upper_half_norm_field() {
    return {[](const Vec2& x, const Vec2& xi) { return xi.norm() / x.y; },
            [](const Vec2& x) { return x.y > 0.0; }, "upper-half-norm"};
}

// Max over samples of |dst(map(x), J xi) - src(x, xi)| / src(x, xi).
inline double isometry_check(const ChartMap& map, const MetricField& src,
                             const MetricField& dst,
                             std::span<const std::pair<Vec2, Vec2>> samples) {
    double worst = 0.0;
    for (const auto& [x, xi] : samples) {
        const double here = src.eval(x, xi);
        const double there = pullback(map, dst, x, xi);
        worst = std::max(worst, std::abs(there - here) / here);
    }
    return worst;
}

} // namespace funklein
