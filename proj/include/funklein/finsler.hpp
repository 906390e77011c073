#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "funklein/geometry.hpp"

// Generic Finsler-metric machinery: a type-erased metric field, the
// fundamental tensor by finite differences, a homogeneity probe, and the
// Randers-specific helpers (pointwise data, evaluation, Busemann-Hausdorff
// density).

namespace funklein {

// A Finsler metric presented as a black box: F(x, xi) plus a domain
// predicate.  All library metrics are shipped through this interface so the
// numeric machinery (fundamental tensor, sprays, curvature oracles) applies
// uniformly.
struct MetricField {
    std::function<double(const Vec2&, const Vec2&)> eval;
    std::function<bool(const Vec2&)> domain;
    std::string name;

    double operator()(const Vec2& x, const Vec2& xi) const { return eval(x, xi); }
    bool contains(const Vec2& x) const { return domain(x); }
};

// Pointwise data of a Randers metric F = sqrt(xi' a xi) + b.xi.
struct RandersData {
    Mat2 a;              // a_ij, symmetric positive definite
    Mat2 a_inv;          // a^ij
    Vec2 b;              // b_i
    double beta_norm_sq; // a^ij b_i b_j, must stay < 1
};

struct FundamentalTensor {
    Mat2 g;   // symmetrized Hessian of F^2/2 in xi at fixed (x, xi)
    bool spd; // false when an eigenvalue <= 0
};

inline double randers_eval(const RandersData& data, const Vec2& xi) {
    return std::sqrt(data.a.quad(xi)) + data.b.dot(xi);
}

// g_ij = 1/2 d^2(F^2)/dxi^i dxi^j by central differences on a 3x3 stencil.
// Step: max(1e-4, 1e-4 |xi|) unless the caller overrides with step > 0.
inline FundamentalTensor fundamental_tensor(const MetricField& F, const Vec2& x,
                                            const Vec2& xi, double step = 0.0) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("fundamental_tensor: xi = 0");
    if (!F.domain(x)) throw OutOfDomain("fundamental_tensor: x outside domain of " + F.name);

    const double h = step > 0.0 ? step : std::max(1e-4, 1e-4 * xi.norm());
    auto E = [&](double dx, double dy) {
        const double f = F.eval(x, {xi.x + dx, xi.y + dy});
        return 0.5 * f * f;
    };

    const double c = E(0, 0);
    Mat2 g;
    g(0, 0) = (E(h, 0) - 2.0 * c + E(-h, 0)) / (h * h);
    g(1, 1) = (E(0, h) - 2.0 * c + E(0, -h)) / (h * h);
    const double mixed =
        (E(h, h) - E(h, -h) - E(-h, h) + E(-h, -h)) / (4.0 * h * h);
    g(0, 1) = g(1, 0) = mixed;

    return {g, g.is_spd()};
}

// Max over lambda of |F(x, lambda xi) - lambda F(x, xi)| / (lambda F(x, xi)).
inline double check_homogeneity(const MetricField& F, const Vec2& x, const Vec2& xi,
                                std::span<const double> lambdas) {
    if (xi.norm_sq() == 0.0) throw ZeroVector("check_homogeneity: xi = 0");
    const double base = F.eval(x, xi);
    double worst = 0.0;
    for (double lam : lambdas) {
        const double scaled = F.eval(x, xi * lam);
        worst = std::max(worst, std::abs(scaled - lam * base) / (lam * base));
    }
    return worst;
}

// Busemann-Hausdorff density of a Randers metric in dimension 2:
// (1 - ||beta||_alpha^2)^{3/2} sqrt(det a).
inline double bh_density(const RandersData& data) {
    return std::pow(1.0 - data.beta_norm_sq, 1.5) * std::sqrt(data.a.det());
}

inline MetricField euclidean_field() {
    return {[](const Vec2&, const Vec2& xi) { return xi.norm(); },
            [](const Vec2&) { return true; }, "euclidean"};
}

} // namespace funklein
