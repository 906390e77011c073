#pragma once

#include <array>

#include "funklein/geodesics.hpp"
#include "funklein/geometry.hpp"
#include "funklein/klein.hpp"

// Closed-form curvature stack of the Klein-disc Funk metric: Christoffel
// symbols of its Riemannian part, covariant derivatives of beta,
// S-curvature, Riemann, Ricci and flag curvature.  Each closed form has a
// generic finite-difference oracle next to it.

namespace funklein {

// Christoffel symbols of the radius-r Klein norm and the covariant
// derivative of the 1-form b.  beta is closed and exact here, so the
// antisymmetric part s_ij vanishes and e_ij = r_ij = b_{i|j}.
struct CovariantData {
    std::array<Mat2, 2> Gamma; // Gamma[k](i, j) = Gamma^k_ij
    Mat2 db;                   // b_{i|j}, symmetric
    double e00(const Vec2& xi) const { return db.quad(xi); }
};

inline CovariantData covariant_data(const Point2& x) {
    detail::require_klein_interior(x, "covariant_data");
    const double r = klein_funk_radius();
    const double u = x.norm_sq();
    const double w = r * r - u;

    CovariantData out;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.Gamma[k](i, j) = (x[i] * (k == j) + x[j] * (k == i)) / w;

    const double c = (1.0 - r * r) / (w * (1.0 - u));
    out.db = (Mat2::identity() + Mat2::outer(x, x) * (2.0 / (1.0 - u))) * c;
    return out;
}

// S-curvature of the Funk metric (Busemann-Hausdorff volume), closed form:
//   S = 3 e_00 / (2F) - 3 rho_0,   rho = log sqrt(1 - ||beta||^2).
// Written out, rho_0 < 0 for outward xi, so the second term adds:
//   S = 3(1-r^2)[(1-|x|^2)|xi|^2 + 2<x,xi>^2] / (2F (r^2-|x|^2)(1-|x|^2)^2)
//     + 3<x,xi>(1-r^2)^2 (1+|x|^2) / ((r^2-|x|^2)(1-r^2|x|^2)(1-|x|^2)).
inline double s_curvature_closed(const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("s_curvature_closed: xi = 0");
    detail::require_klein_interior(x, "s_curvature_closed");
    const double r2 = klein_funk_radius() * klein_funk_radius();
    const double u = x.norm_sq();
    const double s = x.dot(xi);
    const double w = r2 - u;
    const double F = funk_metric(x, xi);
    const double t1 = 3.0 * (1.0 - r2) * ((1.0 - u) * xi.norm_sq() + 2.0 * s * s) /
                      (2.0 * F * w * (1.0 - u) * (1.0 - u));
    const double t2 = 3.0 * s * (1.0 - r2) * (1.0 - r2) * (1.0 + u) /
                      (w * (1.0 - r2 * u) * (1.0 - u));
    return t1 + t2;
}

// S-curvature from the spray definition,
//   S = dG^m/dxi^m - xi^m d(log sigma_BH)/dx^m,
// with the spray divergence by Richardson-extrapolated central differences
// over spray_numeric and the density derivative by central differences.
// `density` maps a point to the volume density the distortion is taken
// against (bh_density of the pointwise Randers data for Funk; sqrt(det a)
// for a plain Riemannian norm).
inline double s_curvature_numeric(const MetricField& F,
                                  const std::function<double(const Vec2&)>& density,
                                  const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("s_curvature_numeric: xi = 0");
    if (!F.domain(x)) throw OutOfDomain("s_curvature_numeric: x outside domain of " + F.name);

    auto div_spray = [&](double h) {
        double acc = 0.0;
        for (int m = 0; m < 2; ++m) {
            Vec2 vp = xi, vm = xi;
            vp[m] += h;
            vm[m] -= h;
            acc += (spray_numeric(F, x, vp).G[m] - spray_numeric(F, x, vm).G[m]) / (2.0 * h);
        }
        return acc;
    };
    const double h = 2e-2 * std::max(1.0, xi.norm());
    const double dG = (4.0 * div_spray(h / 2.0) - div_spray(h)) / 3.0;

    const double hx = 1e-6 * (1.0 + x.norm());
    double dlog = 0.0;
    for (int m = 0; m < 2; ++m) {
        Vec2 xp = x, xm = x;
        xp[m] += hx;
        xm[m] -= hx;
        dlog += xi[m] * (std::log(density(xp)) - std::log(density(xm))) / (2.0 * hx);
    }
    return dG - dlog;
}

struct CurvatureReport {
    double S = 0.0;   // S-curvature
    Mat2 R;           // Riemann curvature R^i_k (rows i, columns k)
    double Ric = 0.0; // trace of R
    double K = 0.0;   // flag curvature, Ric / F^2 in dimension 2
    double phi = 0.0; // b_{i|j} xi^i xi^j
    double psi = 0.0; // b_{i|j|k} xi^i xi^j xi^k
    Vec2 tau;         // tau_k; satisfies tau_k xi^k = 0
};

// Riemann tensor of a Randers metric with closed beta, assembled from the
// curvature of the Riemannian part (constant -1 here) and the deformation
// scalars:
//   R^i_k = -(d^i_k a^2 - a a_k xi^i)
//         + [3 (phi/2F)^2 - psi/2F] (d^i_k - (F_k / F) xi^i) + tau_k xi^i.
inline Mat2 randers_riemann(double alpha, const Vec2& alpha_k, double F,
                            const Vec2& F_k, double phi, double psi,
                            const Vec2& tau, const Vec2& xi) {
    const double bracket = 3.0 * (phi / (2.0 * F)) * (phi / (2.0 * F)) - psi / (2.0 * F);
    Mat2 R;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const double dik = i == k ? 1.0 : 0.0;
            R(i, k) = -(dik * alpha * alpha - alpha * alpha_k[k] * xi[i]) +
                      bracket * (dik - F_k[k] / F * xi[i]) + tau[k] * xi[i];
        }
    return R;
}

// Closed-form curvature report of the Funk metric at (x, xi).  alpha_k and
// F_k are evaluated analytically from the Randers data; they sit inside
// cancellation-prone products where finite differences would not do.
inline CurvatureReport riemann_closed(const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("riemann_closed: xi = 0");
    detail::require_klein_interior(x, "riemann_closed");

    const double r2 = klein_funk_radius() * klein_funk_radius();
    const double u = x.norm_sq();
    const double v = xi.norm_sq();
    const double s = x.dot(xi);
    const double w = r2 - u;
    const double omu = 1.0 - u;

    CurvatureReport rep;
    rep.phi = (1.0 - r2) * (omu * v + 2.0 * s * s) / (w * omu * omu);
    rep.psi = 2.0 * (1.0 - r2) * s / (omu * omu * omu * w * w) *
              (omu * v * (3.0 * r2 - 2.0 * u - 1.0) - 2.0 * s * s * (1.0 + u - 2.0 * r2));

    const RandersData data = randers_data_at(x);
    const double F = funk_metric(x, xi);
    const double alpha = funk_alpha(x, xi);
    const Vec2 alpha_k = (data.a * xi) / alpha;
    const Vec2 F_k = alpha_k + data.b;

    rep.tau = (x * v - xi * s) * ((1.0 - r2) / (F * w * w * omu));
    rep.R = randers_riemann(alpha, alpha_k, F, F_k, rep.phi, rep.psi, rep.tau, xi);
    rep.Ric = rep.R.trace();
    rep.K = rep.Ric / (F * F);
    rep.S = s_curvature_closed(x, xi);
    return rep;
}

// Riemann curvature from the definition
//   R^i_k = 2 dG^i/dx^k - xi^j d2G^i/dx^j dxi^k
//         + 2 G^j d2G^i/dxi^j dxi^k - dG^i/dxi^j dG^j/dxi^k,
// all derivatives by central differences over a spray function.
inline Mat2 riemann_numeric(const SprayFn& spray, const Point2& x, const Vec2& xi) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("riemann_numeric: xi = 0");
    const double hx = 1e-4 * (1.0 + x.norm());
    const double hv = 1e-4 * std::max(1.0, xi.norm());

    const Vec2 G0 = spray(x, xi);
    Mat2 dGdx, dGdv;
    for (int k = 0; k < 2; ++k) {
        Vec2 xp = x, xm = x, vp = xi, vm = xi;
        xp[k] += hx;
        xm[k] -= hx;
        vp[k] += hv;
        vm[k] -= hv;
        const Vec2 gx = (spray(xp, xi) - spray(xm, xi)) / (2.0 * hx);
        const Vec2 gv = (spray(x, vp) - spray(x, vm)) / (2.0 * hv);
        for (int i = 0; i < 2; ++i) {
            dGdx(i, k) = gx[i];
            dGdv(i, k) = gv[i];
        }
    }

    // d2G[i][j][k]: second derivatives, first index x^j or xi^j, second xi^k
    double d2Gxv[2][2][2], d2Gvv[2][2][2];
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Vec2 xp = x, xm = x, vp = xi, vm = xi;
            xp[j] += hx;
            xm[j] -= hx;
            vp[k] += hv;
            vm[k] -= hv;
            const Vec2 cross =
                (spray(xp, vp) - spray(xp, vm) - spray(xm, vp) + spray(xm, vm)) /
                (4.0 * hx * hv);
            Vec2 pure;
            if (j == k) {
                pure = (spray(x, vp) - G0 * 2.0 + spray(x, vm)) / (hv * hv);
            } else {
                Vec2 vpp = xi, vpm = xi, vmp = xi, vmm = xi;
                vpp[j] += hv; vpp[k] += hv;
                vpm[j] += hv; vpm[k] -= hv;
                vmp[j] -= hv; vmp[k] += hv;
                vmm[j] -= hv; vmm[k] -= hv;
                pure = (spray(x, vpp) - spray(x, vpm) - spray(x, vmp) + spray(x, vmm)) /
                       (4.0 * hv * hv);
            }
            for (int i = 0; i < 2; ++i) {
                d2Gxv[i][j][k] = cross[i];
                d2Gvv[i][j][k] = pure[i];
            }
        }

    Mat2 R;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            double val = 2.0 * dGdx(i, k);
            for (int j = 0; j < 2; ++j) {
                val -= xi[j] * d2Gxv[i][j][k];
                val += 2.0 * G0[j] * d2Gvv[i][j][k];
                val -= dGdv(i, j) * dGdv(j, k);
            }
            R(i, k) = val;
        }
    return R;
}

inline Mat2 riemann_numeric(const MetricField& F, const Point2& x, const Vec2& xi) {
    return riemann_numeric(numeric_spray_fn(F), x, xi);
}

struct Classification {
    bool douglas = false; // s_ij == 0
    bool berwald = false; // b_{i|j} == 0
};

// Douglas iff the antisymmetric part of b_{i|j} vanishes; Berwald iff
// b_{i|j} vanishes outright.  The Funk metric is Douglas and never Berwald.
inline Classification classify(const Point2& x) {
    const CovariantData cov = covariant_data(x);
    const double s_max = 0.5 * std::abs(cov.db(0, 1) - cov.db(1, 0));
    return {s_max <= 1e-10, cov.db.max_abs() <= 1e-10};
}

} // namespace funklein
