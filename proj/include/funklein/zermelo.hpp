#pragma once

#include <cassert>

#include "funklein/geometry.hpp"
#include "funklein/klein.hpp"

// Zermelo navigation representation of the Klein-disc Funk metric: the
// Riemannian sea metric h and wind W with ||W||_h < 1, plus the inverse
// solve back to the Randers metric.

namespace funklein {

struct NavigationData {
    Mat2 h;           // h_ij, symmetric positive definite
    Vec2 W;           // wind vector W^i
    double eps = 1.0; // 1 - ||beta||_alpha^2
};

// Navigation data of the Funk metric at x:
//   eps  = (r^2-|x|^2)(1-r^2|x|^2) / (r^2 (1-|x|^2)^2)
//   h_ij = (1-r^2|x|^2) [ d_ij (1-|x|^2)^2 + x^i x^j (2-r^2-|x|^2) ] / (r^2 (1-|x|^2)^4)
//   W^i  = -(1-r^2)(1-|x|^2) x^i / (1-r^2|x|^2)
// The wind follows the general rule W^i = -b^i/eps, so it points inward:
// outward travel runs against it, matching beta > 0 on outward vectors.
inline NavigationData to_navigation(const Point2& x) {
    detail::require_klein_interior(x, "to_navigation");
    const double r2 = klein_funk_radius() * klein_funk_radius();
    const double u = x.norm_sq();
    const double omu = 1.0 - u;

    NavigationData nav;
    nav.eps = (r2 - u) * (1.0 - r2 * u) / (r2 * omu * omu);
    const double c = (1.0 - r2 * u) / (r2 * omu * omu * omu * omu);
    nav.h = (Mat2::identity() * (omu * omu) + Mat2::outer(x, x) * (2.0 - r2 - u)) * c;
    nav.W = x * (-(1.0 - r2) * omu / (1.0 - r2 * u));

#ifndef NDEBUG
    // h must agree with eps (a - b b') built from the pointwise Randers data.
    const RandersData data = randers_data_at(x);
    const Mat2 check = (data.a - Mat2::outer(data.b, data.b)) * nav.eps;
    assert((nav.h - check).max_abs() <=
           1e-10 * std::max(1.0, nav.h.max_abs()));
#endif
    return nav;
}

// Unique F > 0 with ||xi/F - W||_h = 1: the positive root of
//   lam F^2 + 2 h(xi, W) F - h(xi, xi) = 0,   lam = 1 - ||W||_h^2.
// Returns 0 for xi = 0.
inline double from_navigation(const NavigationData& nav, const Vec2& xi) {
    if (std::sqrt(nav.h.quad(nav.W)) >= 1.0 - 1e-12)
        throw DegenerateWind("from_navigation: ||W||_h >= 1");
    const double lam = 1.0 - nav.h.quad(nav.W);
    if (xi.norm_sq() == 0.0) return 0.0;
    const double hw = nav.h.quad(xi, nav.W);
    const double hxx = nav.h.quad(xi);
    return (std::sqrt(hw * hw + lam * hxx) - hw) / lam;
}

} // namespace funklein
