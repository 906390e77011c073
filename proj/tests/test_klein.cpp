#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace funklein;

namespace {
const double r = klein_funk_radius();
}

TEST_CASE("the Klein-Funk disc radius is tanh(1)") {
    CHECK(std::abs(r - std::tanh(1.0)) < 1e-15);
    const double e2 = std::exp(2.0);
    CHECK(std::abs(r - (e2 - 1.0) / (e2 + 1.0)) < 1e-15);
}

TEST_CASE("klein_distance") {
    CHECK(klein_distance({0.2, -0.5}, {0.2, -0.5}) == 0.0);
    CHECK(klein_distance({0, 0}, {r, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    // additivity along a diameter: d(x, y) = artanh|y| - artanh|x|
    CHECK(klein_distance({0.2, 0}, {0.5, 0}) ==
          doctest::Approx(0.3465735902799726).epsilon(1e-12));
    for (double t : {0.3, 0.6, 0.9})
        CHECK(klein_distance({0, 0}, {t, 0}) == doctest::Approx(std::atanh(t)).epsilon(1e-12));
    // symmetric
    const auto pts = sample_point_pairs(31, 50, 0.99);
    for (const auto& [x, y] : pts)
        CHECK(std::abs(klein_distance(x, y) - klein_distance(y, x)) <= 1e-12);
    CHECK_THROWS_AS(klein_distance({1.1, 0}, {0, 0}), OutOfDomain);
}

TEST_CASE("klein_norm") {
    CHECK(klein_norm({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(klein_norm({0.5, 0}, {0, 1}) ==
          doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-14));

    // symmetrization of the unit-disc Funk norm
    const EuclideanDisc unit{1.0, {0, 0}};
    for (const auto& [x, xi] : sample_disc(37, 100, 0.99).items) {
        const double sym = 0.5 * (funk_finsler_disc(unit, x, xi) +
                                  funk_finsler_disc(unit, x, -xi));
        CHECK(std::abs(klein_norm(x, xi) - sym) <= 1e-12 * std::max(1.0, sym));
    }
}

TEST_CASE("funk_metric basics") {
    const Vec2 xi{0.3, -0.4};
    CHECK(funk_metric({0, 0}, xi) == doctest::Approx(xi.norm() / r).epsilon(1e-14));
    CHECK(funk_metric({0, 0}, {0, 0}) == 0.0);
    // beta flips sign with the direction
    const double fwd = funk_metric({0.3, 0.1}, {-1, 2});
    const double bwd = funk_metric({0.3, 0.1}, {1, -2});
    CHECK(fwd > 0.0);
    CHECK(std::abs(fwd - bwd) > 1e-3);
    CHECK_THROWS_AS(funk_metric({0.8, 0}, {1, 0}), OutOfDomain);
}

TEST_CASE("coth-definition oracle agrees with the closed form") {
    // at the origin: boundary hit at distance 1, so F = coth(1) |xi| = |xi|/r
    CHECK(funk_metric_cothdef({0, 0}, {1, 0}) ==
          doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-12));
    CHECK(funk_metric_cothdef({0, 0}, {1, 0}) ==
          doctest::Approx(1.0 / r).epsilon(1e-12));

    CHECK(std::abs(funk_metric({0.5, 0}, {1, 0}) - funk_metric_cothdef({0.5, 0}, {1, 0})) <=
          1e-9 * funk_metric({0.5, 0}, {1, 0}));
    CHECK(std::abs(funk_metric({0.5, 0}, {0, 1}) - funk_metric_cothdef({0.5, 0}, {0, 1})) <=
          1e-9 * funk_metric({0.5, 0}, {0, 1}));

    double worst = 0.0;
    for (const auto& [x, xi] : sample_disc(41, 1000, r - 1e-3).items)
        worst = std::max(worst, std::abs(funk_metric(x, xi) - funk_metric_cothdef(x, xi)) /
                                    funk_metric(x, xi));
    CHECK(worst <= 1e-9);

    CHECK_THROWS_AS(funk_metric_cothdef({0.1, 0}, {0, 0}), ZeroVector);
}

TEST_CASE("randers_data_at") {
    SUBCASE("origin") {
        const RandersData d0 = randers_data_at({0, 0});
        CHECK(std::abs(d0.a(0, 0) - 1.0 / (r * r)) < 1e-14);
        CHECK(std::abs(d0.a(1, 1) - 1.0 / (r * r)) < 1e-14);
        CHECK(std::abs(d0.a(0, 1)) < 1e-14);
        CHECK(d0.b.norm() == 0.0);
        CHECK(d0.beta_norm_sq == 0.0);
    }
    SUBCASE("structure at a generic point") {
        const Point2 x{0.3, 0.2};
        const RandersData d = randers_data_at(x);
        // a . a_inv = identity
        CHECK(((d.a * d.a_inv) - Mat2::identity()).max_abs() <= 1e-12);
        // det a = r^2 / (r^2 - |x|^2)^3
        const double w = r * r - x.norm_sq();
        CHECK(d.a.det() == doctest::Approx(r * r / (w * w * w)).epsilon(1e-12));
        // norm of beta via direct matrix arithmetic, and the closed form
        const double direct = d.a_inv.quad(d.b);
        CHECK(std::abs(d.beta_norm_sq - direct) <= 1e-12);
        const double u = x.norm_sq();
        CHECK(d.beta_norm_sq ==
              doctest::Approx(u * (1 - r * r) * (1 - r * r) /
                              (r * r * (1 - u) * (1 - u)))
                  .epsilon(1e-12));
        CHECK(d.beta_norm_sq < 1.0);
    }
    SUBCASE("decomposition rebuilds the metric") {
        for (const auto& [x, xi] : sample_disc(43, 200, r - 1e-3).items) {
            const RandersData d = randers_data_at(x);
            CHECK(std::abs(randers_eval(d, xi) - funk_metric(x, xi)) <=
                  1e-12 * std::max(1.0, funk_metric(x, xi)));
            CHECK(d.beta_norm_sq < 1.0);
            CHECK(d.a.is_spd());
        }
    }
}

TEST_CASE("potential generates beta") {
    CHECK(potential({0, 0}) == doctest::Approx(-std::log(r)).epsilon(1e-14));
    CHECK(potential({0, 0}) == doctest::Approx(0.2723414689118316).epsilon(1e-12));

    auto f = [](Vec2 p) { return potential(p); };
    auto b = [](Vec2 p) { return randers_data_at(p).b; };

    const Vec2 grad = testsupport::numeric_gradient(f, {0.3, 0.2});
    const Vec2 bval = b({0.3, 0.2});
    CHECK(std::abs(grad.x - bval.x) <= 1e-6);
    CHECK(std::abs(grad.y - bval.y) <= 1e-6);

    for (const auto& [x, xi] : sample_disc(47, 50, r - 5e-2).items) {
        const Vec2 g = testsupport::numeric_gradient(f, x);
        const Vec2 bb = b(x);
        CHECK(std::abs(g.x - bb.x) <= 1e-6);
        CHECK(std::abs(g.y - bb.y) <= 1e-6);
        CHECK(std::abs(testsupport::numeric_curl(b, x)) <= 1e-6);
    }
}

TEST_CASE("funk_distance") {
    CHECK(funk_distance({0.2, 0.1}, {0.2, 0.1}) == 0.0);
    // golden: log(sinh 1 / sinh 1/2)
    CHECK(funk_distance({0, 0}, {std::tanh(0.5), 0}) ==
          doctest::Approx(0.8132616875182228).epsilon(1e-12));
    CHECK(funk_distance({0, 0}, {std::tanh(0.5), 0}) ==
          doctest::Approx(std::log(std::sinh(1.0) / std::sinh(0.5))).epsilon(1e-12));

    // asymmetric, nonnegative, zero only at coincidence
    for (const auto& [x, y] : sample_point_pairs(53, 100, r - 1e-3)) {
        const double fwd = funk_distance(x, y);
        const double bwd = funk_distance(y, x);
        CHECK(fwd >= 0.0);
        CHECK(bwd >= 0.0);
        if ((x - y).norm() > 1e-6) {
            CHECK(fwd > 0.0);
            // generic pairs are asymmetric unless equidistant from the boundary
            if (std::abs(x.norm() - y.norm()) > 1e-3) CHECK(std::abs(fwd - bwd) > 1e-12);
        }
    }
    CHECK_THROWS_AS(funk_distance({0.8, 0}, {0, 0}), OutOfDomain);
}

TEST_CASE("funk_distance equals the segment length integral") {
    const MetricField F = funk_metric_field();
    CHECK(std::abs(segment_length(F, {0, 0}, {std::tanh(0.5), 0}) -
                   0.8132616875182228) <= 1e-6);
    for (const auto& [x, y] : sample_point_pairs(59, 100, r - 5e-3)) {
        if ((x - y).norm() < 1e-8) continue;
        const double d = funk_distance(x, y);
        CHECK(std::abs(segment_length(F, x, y) - d) <= 1e-6 * std::max(1.0, d));
    }
}
