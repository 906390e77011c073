#pragma once

#include "funklein/finsler.hpp"
#include "funklein/geometry.hpp"

// Funk and Hilbert distances on Euclidean discs, and the Funk-Finsler norm
// of a disc.  Discs are the only convex bodies handled: every construction
// in this library reduces to one.

namespace funklein {

struct EuclideanDisc {
    double radius = 1.0;
    Point2 center = {0.0, 0.0};
};

namespace detail {
// Points closer than this to the boundary circle are rejected; the Funk
// formulas have a simple pole there.
inline constexpr double kBoundaryMargin = 1e-9;
// Below this separation two points are treated as coincident; the distance
// formulas would otherwise take the log of a ratio of ill-conditioned
// near-equal lengths.
inline constexpr double kCoincidentTol = 1e-14;

inline void require_interior(const EuclideanDisc& disc, const Point2& x,
                             const char* who) {
    if ((x - disc.center).norm() >= disc.radius - kBoundaryMargin)
        throw OutOfDomain(std::string(who) + ": point not interior to the disc");
}
} // namespace detail

// Unique boundary point x + t xi, t > 0.  Positive root of the circle
// intersection quadratic, written to avoid cancellation.
inline Point2 ray_boundary_hit(const EuclideanDisc& disc, const Point2& x,
                               const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("ray_boundary_hit: xi = 0");
    detail::require_interior(disc, x, "ray_boundary_hit");
    const Vec2 p = x - disc.center;
    const double a = xi.norm_sq();
    const double b = p.dot(xi);
    const double c = p.norm_sq() - disc.radius * disc.radius; // < 0 inside
    const double discr = std::sqrt(b * b - a * c);
    const double t = b <= 0.0 ? (discr - b) / a : -c / (b + discr);
    return x + xi * t;
}

// Funk norm of the disc: F(x, xi) = inf{ t > 0 : x + xi/t in the disc }.
// Closed form of the boundary-hit quadratic; F(x, 0) = 0.
inline double funk_finsler_disc(const EuclideanDisc& disc, const Point2& x,
                                const Vec2& xi) {
    detail::require_interior(disc, x, "funk_finsler_disc");
    const Vec2 p = x - disc.center;
    const double r2mu = disc.radius * disc.radius - p.norm_sq();
    const double s = p.dot(xi);
    return (std::sqrt(r2mu * xi.norm_sq() + s * s) + s) / r2mu;
}

// Asymmetric Funk distance: log |x - m| / |y - m| with m the boundary hit
// of the ray from x through y.
inline double funk_distance_disc(const EuclideanDisc& disc, const Point2& x,
                                 const Point2& y) {
    detail::require_interior(disc, x, "funk_distance_disc");
    detail::require_interior(disc, y, "funk_distance_disc");
    if ((x - y).norm() < detail::kCoincidentTol) return 0.0;
    const Point2 m = ray_boundary_hit(disc, x, y - x);
    return std::log((x - m).norm() / (y - m).norm());
}

// Hilbert distance: half the log cross-ratio through both boundary hits.
// Symmetric; equals the arithmetic symmetrization of the Funk distance.
inline double hilbert_distance_disc(const EuclideanDisc& disc, const Point2& x,
                                    const Point2& y) {
    detail::require_interior(disc, x, "hilbert_distance_disc");
    detail::require_interior(disc, y, "hilbert_distance_disc");
    if ((x - y).norm() < detail::kCoincidentTol) return 0.0;
    const Point2 m = ray_boundary_hit(disc, x, y - x);
    const Point2 mbar = ray_boundary_hit(disc, y, x - y);
    return 0.5 * std::log(((y - mbar).norm() * (x - m).norm()) /
                          ((x - mbar).norm() * (y - m).norm()));
}

inline MetricField disc_funk_field(const EuclideanDisc& disc) {
    return {[disc](const Vec2& x, const Vec2& xi) { return funk_finsler_disc(disc, x, xi); },
            [disc](const Vec2& x) {
                return (x - disc.center).norm() < disc.radius - detail::kBoundaryMargin;
            },
            "disc-funk"};
}

} // namespace funklein
