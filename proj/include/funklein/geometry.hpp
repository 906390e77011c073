#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Small fixed-size linear algebra for the 2D base manifold and the 3D
// ambient spaces, plus the error types shared by all modules.

namespace funklein {

// ---------------------------------------------------------------------------
// Errors

struct OutOfDomain : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroVector : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularTensor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateWind : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LorentzSignature : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Vectors

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double operator[](int i) const { return i == 0 ? x : y; }
    double& operator[](int i) { return i == 0 ? x : y; }

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    // rotation by +90 degrees
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.dot(b); }

using Point2 = Vec2;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }
};

// ---------------------------------------------------------------------------
// 2x2 matrices, dense row-major

struct Mat2 {
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    static Mat2 identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
    static Mat2 diag(double a, double b) { return {{{a, 0.0}, {0.0, b}}}; }
    static Mat2 outer(const Vec2& a, const Vec2& b) {
        return {{{a.x * b.x, a.x * b.y}, {a.y * b.x, a.y * b.y}}};
    }

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }

    Mat2 operator+(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    Mat2 operator-(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
        return r;
    }
    Mat2 operator*(double s) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * s;
        return r;
    }
    Vec2 operator*(const Vec2& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }
    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }

    Mat2 transpose() const { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    double trace() const { return m[0][0] + m[1][1]; }

    Mat2 inverse() const {
        const double d = det();
        if (std::abs(d) < 1e-300) throw SingularTensor("Mat2::inverse: singular matrix");
        return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
    }

    double quad(const Vec2& u, const Vec2& v) const { return u.dot(*this * v); }
    double quad(const Vec2& v) const { return quad(v, v); }

    double max_abs() const {
        double r = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m[i][j]));
        return r;
    }

    // Eigenvalues of the symmetric part, smallest first.
    // Explicit 2x2 formula; the dimension is fixed so nothing fancier is needed.
    std::pair<double, double> sym_eigenvalues() const {
        const double a = m[0][0], d = m[1][1];
        const double b = 0.5 * (m[0][1] + m[1][0]);
        const double mean = 0.5 * (a + d);
        const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
        return {mean - disc, mean + disc};
    }

    bool is_spd(double tol = 0.0) const { return sym_eigenvalues().first > tol; }
};

// 3x2 Jacobian of a chart R^2 -> R^dim_out (rows = output components;
// for 2D charts the third row is zero and unused).
struct Mat32 {
    double m[3][2] = {{0, 0}, {0, 0}, {0, 0}};

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }

    Vec3 operator*(const Vec2& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y,
                m[1][0] * v.x + m[1][1] * v.y,
                m[2][0] * v.x + m[2][1] * v.y};
    }

    Vec2 apply2(const Vec2& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
    }

    double max_abs_diff(const Mat32& o) const {
        double r = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m[i][j] - o.m[i][j]));
        return r;
    }
};

} // namespace funklein
