#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace funklein;

namespace {
const double r = klein_funk_radius();
const double r2 = r * r;
}

TEST_CASE("navigation data at the origin") {
    const NavigationData nav = to_navigation({0, 0});
    CHECK(nav.eps == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(nav.W.norm() == 0.0);
    CHECK(nav.h(0, 0) == doctest::Approx(1.0 / r2).epsilon(1e-13));
    CHECK(nav.h(1, 1) == doctest::Approx(1.0 / r2).epsilon(1e-13));
    CHECK(std::abs(nav.h(0, 1)) < 1e-15);
}

TEST_CASE("wind norm equals the beta norm") {
    const Point2 x{0.3, 0.0};
    const NavigationData nav = to_navigation(x);
    const double wn2 = nav.h.quad(nav.W);
    const double bn2 = randers_data_at(x).beta_norm_sq;
    CHECK(std::abs(wn2 - bn2) <= 1e-10);
    const double u = x.norm_sq();
    CHECK(bn2 == doctest::Approx(u * (1 - r2) * (1 - r2) / (r2 * (1 - u) * (1 - u)))
                     .epsilon(1e-12));

    for (const auto& [xs, xi] : sample_disc(167, 200, r - 1e-3).items) {
        const NavigationData n = to_navigation(xs);
        CHECK(std::abs(n.h.quad(n.W) - randers_data_at(xs).beta_norm_sq) <= 1e-10);
        CHECK(n.h.is_spd());
        CHECK(std::sqrt(n.h.quad(n.W)) < 1.0);
    }
}

TEST_CASE("epsilon stays in (0, 1], equal to 1 only at the center") {
    CHECK(to_navigation({0, 0}).eps == doctest::Approx(1.0).epsilon(1e-15));
    for (const auto& [x, xi] : sample_disc(173, 200, r - 1e-3).items) {
        const double eps = to_navigation(x).eps;
        CHECK(eps > 0.0);
        CHECK(eps <= 1.0);
        if (x.norm() > 1e-3) CHECK(eps < 1.0);
    }
}

TEST_CASE("h agrees with eps (a - b b')") {
    for (const auto& [x, xi] : sample_disc(179, 100, r - 1e-3).items) {
        const NavigationData nav = to_navigation(x);
        const RandersData data = randers_data_at(x);
        const Mat2 rebuilt = (data.a - Mat2::outer(data.b, data.b)) * nav.eps;
        CHECK((nav.h - rebuilt).max_abs() <= 1e-10 * std::max(1.0, nav.h.max_abs()));
    }
}

TEST_CASE("inverse solve") {
    SUBCASE("no wind, flat sea: plain Euclidean norm") {
        const NavigationData flat{Mat2::identity(), {0, 0}, 1.0};
        CHECK(from_navigation(flat, {3, 4}) == doctest::Approx(5.0).epsilon(1e-14));
        CHECK(from_navigation(flat, {0, 0}) == 0.0);
    }
    SUBCASE("origin data reproduces the origin metric") {
        const NavigationData nav = to_navigation({0, 0});
        CHECK(from_navigation(nav, {1, 0}) == doctest::Approx(1.0 / r).epsilon(1e-13));
    }
    SUBCASE("defining property of the solve") {
        const NavigationData nav = to_navigation({0.25, -0.35});
        const Vec2 xi{0.7, 1.1};
        const double F = from_navigation(nav, xi);
        const Vec2 reach = xi / F - nav.W;
        CHECK(nav.h.quad(reach) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("degenerate wind is rejected") {
        NavigationData bad{Mat2::identity(), {1.0, 0.0}, 0.0};
        CHECK_THROWS_AS(from_navigation(bad, {1, 0}), DegenerateWind);
    }
}

TEST_CASE("round-trip reproduces the Funk metric") {
    double worst = 0.0;
    for (const auto& [x, xi] : sample_disc(181, 1000, r - 1e-3).items) {
        const double direct = funk_metric(x, xi);
        const double via_nav = from_navigation(to_navigation(x), xi);
        worst = std::max(worst, std::abs(direct - via_nav));
    }
    CHECK(worst <= 1e-10);
}
