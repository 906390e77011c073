#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace funklein;

TEST_CASE("ray_boundary_hit on radial rays") {
    const EuclideanDisc unit{1.0, {0, 0}};
    const Point2 m1 = ray_boundary_hit(unit, {0, 0}, {1, 0});
    CHECK(m1.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m1.y == doctest::Approx(0.0).epsilon(1e-15));

    const Point2 m2 = ray_boundary_hit(unit, {0.5, 0}, {-1, 0});
    CHECK(m2.x == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(m2.y) < 1e-15);
}

TEST_CASE("ray_boundary_hit lands on the circle") {
    const EuclideanDisc d{std::tanh(1.0), {0, 0}};
    const Point2 m = ray_boundary_hit(d, {0.3, 0.2}, {1, 1});
    CHECK(std::abs(m.norm() - d.radius) < 1e-12);
    CHECK((m - Point2{0.3, 0.2}).dot(Vec2{1, 1}) > 0.0); // forward root

    for (const auto& [x, xi] : sample_disc(3, 100, d.radius - 1e-3).items) {
        const Point2 hit = ray_boundary_hit(d, x, xi);
        CHECK(std::abs(hit.norm() - d.radius) < 1e-12);
    }
}

TEST_CASE("ray_boundary_hit error paths") {
    const EuclideanDisc unit{1.0, {0, 0}};
    CHECK_THROWS_AS(ray_boundary_hit(unit, {0, 0}, {0, 0}), ZeroVector);
    CHECK_THROWS_AS(ray_boundary_hit(unit, {1.5, 0}, {1, 0}), OutOfDomain);
}

TEST_CASE("disc Funk norm closed form") {
    const EuclideanDisc unit{1.0, {0, 0}};
    CHECK(funk_finsler_disc(unit, {0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-14));

    // along a radius: reciprocal distance to the boundary
    const EuclideanDisc d{0.8, {0, 0}};
    CHECK(funk_finsler_disc(d, {0.3, 0}, {1, 0}) ==
          doctest::Approx(1.0 / (0.8 - 0.3)).epsilon(1e-13));

    // defining property: x + xi / F(x, xi) lies on the boundary
    const EuclideanDisc dk{std::tanh(1.0), {0, 0}};
    const Point2 x{0.3, 0.2};
    const Vec2 xi{0.4, -0.1};
    const double F = funk_finsler_disc(dk, x, xi);
    CHECK(std::abs((x + xi / F).norm() - dk.radius) < 1e-12);

    for (const auto& [xs, xis] : sample_disc(9, 100, dk.radius - 1e-3).items) {
        const double Fs = funk_finsler_disc(dk, xs, xis);
        CHECK(std::abs((xs + xis / Fs).norm() - dk.radius) < 1e-12);
    }
}

TEST_CASE("funk distance on the unit disc") {
    const EuclideanDisc unit{1.0, {0, 0}};
    CHECK(funk_distance_disc(unit, {0.3, -0.2}, {0.3, -0.2}) == 0.0);
    CHECK(funk_distance_disc(unit, {0, 0}, {0.5, 0}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // asymmetry: the reverse ray exits on the far side
    CHECK(funk_distance_disc(unit, {0.5, 0}, {0, 0}) ==
          doctest::Approx(std::log(1.5)).epsilon(1e-14));
}

TEST_CASE("funk distance triangle inequality") {
    const EuclideanDisc unit{1.0, {0, 0}};
    const auto pts = sample_point_pairs(17, 200, 0.999);
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        const Vec2 x = pts[i].first, y = pts[i].second, z = pts[i + 1].first;
        const double dxy = funk_distance_disc(unit, x, y);
        const double dyz = funk_distance_disc(unit, y, z);
        const double dxz = funk_distance_disc(unit, x, z);
        CHECK(dxy + dyz >= dxz - 1e-12);
    }
}

TEST_CASE("hilbert distance: symmetry, symmetrization, artanh profile") {
    const EuclideanDisc unit{1.0, {0, 0}};
    CHECK(hilbert_distance_disc(unit, {0.1, 0.7}, {0.1, 0.7}) == 0.0);

    for (double t : {0.1, 0.5, 0.9}) {
        CHECK(hilbert_distance_disc(unit, {0, 0}, {t, 0}) ==
              doctest::Approx(std::atanh(t)).epsilon(1e-12));
    }

    for (const auto& [x, y] : sample_point_pairs(23, 100, 0.999)) {
        const double h = hilbert_distance_disc(unit, x, y);
        CHECK(std::abs(h - hilbert_distance_disc(unit, y, x)) <= 1e-12);
        const double sym = 0.5 * (funk_distance_disc(unit, x, y) +
                                  funk_distance_disc(unit, y, x));
        CHECK(std::abs(h - sym) <= 1e-12);
    }
}

TEST_CASE("boundary margin enforcement") {
    const EuclideanDisc unit{1.0, {0, 0}};
    CHECK_THROWS_AS(funk_finsler_disc(unit, {1.0 - 1e-10, 0}, {1, 0}), OutOfDomain);
    CHECK_THROWS_AS(funk_distance_disc(unit, {0, 0}, {1.0 - 1e-10, 0}), OutOfDomain);
    CHECK_THROWS_AS(hilbert_distance_disc(unit, {2, 0}, {0, 0}), OutOfDomain);
}

TEST_CASE("off-center discs") {
    const EuclideanDisc d{0.5, {1.0, -2.0}};
    const Point2 m = ray_boundary_hit(d, {1.0, -2.0}, {0, 1});
    CHECK(m.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.y == doctest::Approx(-1.5).epsilon(1e-14));
    CHECK(funk_finsler_disc(d, {1.0, -2.0}, {0, 2}) == doctest::Approx(4.0).epsilon(1e-13));
}
