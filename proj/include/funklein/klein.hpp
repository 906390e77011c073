#pragma once

#include "funklein/disc.hpp"
#include "funklein/finsler.hpp"
#include "funklein/geometry.hpp"

// The Funk-Finsler structure on the Klein unit disc: the set of points at
// Klein distance < 1 from the origin, which coincides with the Euclidean
// disc of radius tanh(1).  On it the Funk norm is a Randers metric
// F = alpha + beta with alpha the radius-r Klein norm and beta an exact
// 1-form; this header carries the closed forms, the equivalent coth
// definition used as an oracle, and the induced asymmetric distance.

namespace funklein {

// Euclidean radius of the unit Klein disc.  Computed, not a literal.
inline double klein_funk_radius() {
    static const double r = std::tanh(1.0);
    return r;
}

namespace detail {
inline constexpr double kKleinMargin = 1e-9;

inline void require_klein_interior(const Vec2& x, const char* who) {
    if (x.norm() >= klein_funk_radius() - kKleinMargin)
        throw OutOfDomain(std::string(who) + ": |x| >= tanh(1) - margin");
}

inline void require_unit_interior(const Vec2& x, const char* who) {
    if (x.norm() >= 1.0 - kBoundaryMargin)
        throw OutOfDomain(std::string(who) + ": |x| >= 1 - margin");
}

inline EuclideanDisc unit_disc() { return {1.0, {0.0, 0.0}}; }
inline EuclideanDisc klein_funk_disc() { return {klein_funk_radius(), {0.0, 0.0}}; }
} // namespace detail

// Klein (= Hilbert) distance on the unit disc, via the log cross-ratio of
// the chord through x and y.  d(0, x) = artanh|x|.
inline double klein_distance(const Point2& x, const Point2& y) {
    detail::require_unit_interior(x, "klein_distance");
    detail::require_unit_interior(y, "klein_distance");
    if ((x - y).norm() < detail::kCoincidentTol) return 0.0;
    const EuclideanDisc d = detail::unit_disc();
    const Point2 a = ray_boundary_hit(d, x, y - x);
    const Point2 b = ray_boundary_hit(d, y, x - y);
    return 0.5 * std::log(((x - a).norm() * (y - b).norm()) /
                          ((y - a).norm() * (x - b).norm()));
}

// Riemannian Klein norm on the unit disc; the symmetrization of the unit
// disc's Funk norm.
inline double klein_norm(const Point2& x, const Vec2& xi) {
    detail::require_unit_interior(x, "klein_norm");
    const double u = x.norm_sq();
    const double s = x.dot(xi);
    return std::sqrt((1.0 - u) * xi.norm_sq() + s * s) / (1.0 - u);
}

// Randers split of the Klein-disc Funk metric.
inline double funk_alpha(const Point2& x, const Vec2& xi) {
    detail::require_klein_interior(x, "funk_alpha");
    const double r = klein_funk_radius();
    const double w = r * r - x.norm_sq();
    const double s = x.dot(xi);
    return std::sqrt(w * xi.norm_sq() + s * s) / w;
}

inline double funk_beta(const Point2& x, const Vec2& xi) {
    detail::require_klein_interior(x, "funk_beta");
    const double r = klein_funk_radius();
    const double w = r * r - x.norm_sq();
    return (1.0 - r * r) * x.dot(xi) / (w * (1.0 - x.norm_sq()));
}

// The Funk-Finsler metric on the Klein unit disc.  Accepts xi = 0 (returns
// 0 by homogeneity); strictly positive otherwise.
inline double funk_metric(const Point2& x, const Vec2& xi) {
    return funk_alpha(x, xi) + funk_beta(x, xi);
}

// Equivalent definition: coth of the Klein distance from x to the boundary
// hit of the ray, times the Klein norm of xi.  Needs a direction, so xi = 0
// is rejected.  Serves as the independent oracle for funk_metric.
inline double funk_metric_cothdef(const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("funk_metric_cothdef: xi = 0");
    detail::require_klein_interior(x, "funk_metric_cothdef");
    const Point2 a = ray_boundary_hit(detail::klein_funk_disc(), x, xi);
    const double d = klein_distance(x, a);
    return (std::cosh(d) / std::sinh(d)) * klein_norm(x, xi);
}

// Pointwise Randers data a_ij, a^ij, b_i, ||beta||_alpha^2 of funk_metric.
inline RandersData randers_data_at(const Point2& x) {
    detail::require_klein_interior(x, "randers_data_at");
    const double r = klein_funk_radius();
    const double r2 = r * r;
    const double u = x.norm_sq();
    const double w = r2 - u;

    const Mat2 a = (Mat2::identity() * w + Mat2::outer(x, x)) * (1.0 / (w * w));
    // inverse in closed form: (r^2 I - x x') w / r^2
    const Mat2 a_inv = (Mat2::identity() * r2 - Mat2::outer(x, x)) * (w / r2);
    const Vec2 b = x * ((1.0 - r2) / (w * (1.0 - u)));
    const double bn2 = u * (1.0 - r2) * (1.0 - r2) / (r2 * (1.0 - u) * (1.0 - u));
    return {a, a_inv, b, bn2};
}

// Potential of the 1-form beta: beta = df with
// f(x) = 1/2 log((1 - |x|^2) / (r^2 - |x|^2)).
inline double potential(const Point2& x) {
    detail::require_klein_interior(x, "potential");
    const double r = klein_funk_radius();
    const double u = x.norm_sq();
    return 0.5 * std::log((1.0 - u) / (r * r - u));
}

// Asymmetric distance induced by funk_metric: the log ratio of sinh Klein
// distances to the boundary hit of the ray from x through y.
inline double funk_distance(const Point2& x, const Point2& y) {
    detail::require_klein_interior(x, "funk_distance");
    detail::require_klein_interior(y, "funk_distance");
    if ((x - y).norm() < detail::kCoincidentTol) return 0.0;
    const Point2 a = ray_boundary_hit(detail::klein_funk_disc(), x, y - x);
    return std::log(std::sinh(klein_distance(x, a)) /
                    std::sinh(klein_distance(y, a)));
}

inline bool in_klein_funk_domain(const Vec2& x) {
    return x.norm() < klein_funk_radius() - detail::kKleinMargin;
}

inline MetricField funk_metric_field() {
    return {[](const Vec2& x, const Vec2& xi) { return funk_metric(x, xi); },
            [](const Vec2& x) { return in_klein_funk_domain(x); }, "klein-funk"};
}

inline MetricField klein_norm_field() {
    return {[](const Vec2& x, const Vec2& xi) { return klein_norm(x, xi); },
            [](const Vec2& x) { return x.norm() < 1.0 - detail::kBoundaryMargin; },
            "klein-norm"};
}

// The Riemannian part alpha of the Klein-disc Funk metric on its own:
// the Klein norm of the radius-tanh(1) disc.  Used as the beta -> 0 limit
// in curvature checks.
inline MetricField funk_alpha_field() {
    return {[](const Vec2& x, const Vec2& xi) { return funk_alpha(x, xi); },
            [](const Vec2& x) { return in_klein_funk_domain(x); }, "klein-funk-alpha"};
}

} // namespace funklein
