#pragma once

#include <utility>
#include <vector>

#include "funklein/funklein.hpp"

// Test-only oracles.  These stay independent of the implementation paths
// they check: the analytic Randers Hessian validates the finite-difference
// fundamental tensor, and the plain central-difference helpers validate
// closed-form gradients.

namespace testsupport {

using funklein::Mat2;
using funklein::Vec2;

// Hessian of F^2/2 for F = sqrt(xi' a xi) + b.xi, assembled analytically:
//   g = (F/alpha)(a - alpha_k alpha_k') + F_k F_k',  alpha_k = a xi / alpha.
inline Mat2 analytic_randers_g(const Mat2& a, const Vec2& b, const Vec2& xi) {
    const double alpha = std::sqrt(a.quad(xi));
    const Vec2 alpha_k = (a * xi) / alpha;
    const Vec2 F_k = alpha_k + b;
    const double F = alpha + b.dot(xi);
    return (a - Mat2::outer(alpha_k, alpha_k)) * (F / alpha) + Mat2::outer(F_k, F_k);
}

inline Vec2 numeric_gradient(const std::function<double(Vec2)>& f, Vec2 x,
                             double h = 1e-6) {
    return {(f({x.x + h, x.y}) - f({x.x - h, x.y})) / (2 * h),
            (f({x.x, x.y + h}) - f({x.x, x.y - h})) / (2 * h)};
}

// d f1/dx2 - d f2/dx1 of a covector field.
inline double numeric_curl(const std::function<Vec2(Vec2)>& f, Vec2 x,
                           double h = 1e-6) {
    const double df1_dy = (f({x.x, x.y + h}).x - f({x.x, x.y - h}).x) / (2 * h);
    const double df2_dx = (f({x.x + h, x.y}).y - f({x.x - h, x.y}).y) / (2 * h);
    return df1_dy - df2_dx;
}

// Metric fields shipped by the library together with a disc to sample
// points from (center, radius) and whether the field is a closed form or a
// pullback construction.
struct FieldCase {
    funklein::MetricField field;
    Vec2 center;
    double radius;
    bool closed_form;
};

inline std::vector<FieldCase> shipped_fields() {
    using namespace funklein;
    std::vector<FieldCase> cases;
    const double r = klein_funk_radius();
    cases.push_back({euclidean_field(), {0, 0}, 2.0, true});
    cases.push_back({funk_metric_field(), {0, 0}, r - 1e-3, true});
    cases.push_back({funk_alpha_field(), {0, 0}, r - 1e-3, true});
    cases.push_back({klein_norm_field(), {0, 0}, 0.95, true});
    cases.push_back({disc_funk_field({1.0, {0, 0}}), {0, 0}, 0.95, true});
    cases.push_back({disc_funk_field({r, {0, 0}}), {0, 0}, r - 1e-3, true});
    cases.push_back({funk_poincare_field(), {0, 0}, funk_poincare_radius() - 1e-3, true});
    cases.push_back({poincare_norm_field(), {0, 0}, 0.95, true});
    const EuclideanDisc ud = upper_funk_disc();
    cases.push_back({funk_upper_field(), ud.center, ud.radius - 1e-3, true});
    cases.push_back({upper_half_norm_field(), {0, 2}, 1.0, true});
    cases.push_back({pullback_field(hyperboloid_chart(), lorentz_randers_metric(),
                                    "hyperboloid-pullback"),
                     {0, 0}, r - 1e-3, false});
    cases.push_back({pullback_field(hemisphere_chart(), hemisphere_randers_metric(),
                                    "hemisphere-pullback"),
                     {0, 0}, r - 1e-3, false});
    return cases;
}

// Randers fields with pointwise data everywhere SPD, for fundamental-tensor
// spot checks.
inline std::vector<FieldCase> randers_fields() {
    using namespace funklein;
    const double r = klein_funk_radius();
    return {
        {funk_metric_field(), {0, 0}, r - 2e-2, true},
        {disc_funk_field({1.0, {0, 0}}), {0, 0}, 0.9, true},
        {klein_norm_field(), {0, 0}, 0.9, true},
        {funk_poincare_field(), {0, 0}, funk_poincare_radius() - 2e-2, true},
    };
}

} // namespace testsupport
