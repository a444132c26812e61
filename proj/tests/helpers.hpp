#pragma once

// Shared test utilities: seeded random points, random SO_0(2,n+1) elements
// through the Lie-algebra exponential, random SL(2,R) matrices.

#include "h2n/core.hpp"
#include "h2n/spaces.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <random>

namespace h2n::testing {

inline std::mt19937_64 rng(uint64_t seed = 20240501) { return std::mt19937_64(seed); }

inline double unif(std::mt19937_64& g, double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Vec random_vec(std::mt19937_64& g, int dim) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = unif(g);
    return v;
}

/// random point of hat H^{2,n} through the warped chart, |u| <= umax
inline PointH random_point_h(std::mt19937_64& g, const QForm& q, double umax = 0.8) {
    Eigen::Vector2d u;
    do {
        u << unif(g), unif(g);
    } while (u.norm() >= 1.0);
    u *= umax;
    Vec v = random_vec(g, q.n + 1);
    v /= v.norm();
    return PointH{warped_chart(q, u, v)};
}

/// exp of a random element of so(2,n+1): [[a, B],[B^T, c]] with a, c skew
inline Mat random_so0(std::mt19937_64& g, const QForm& q, double scale = 0.5) {
    const int d = q.dim();
    Mat A = Mat::Zero(d, d);
    Mat a = Mat::Zero(2, 2), c = Mat::Zero(q.n + 1, q.n + 1);
    a(0, 1) = unif(g) * scale;
    a(1, 0) = -a(0, 1);
    for (int i = 0; i < q.n + 1; ++i)
        for (int j = i + 1; j < q.n + 1; ++j) {
            c(i, j) = unif(g) * scale;
            c(j, i) = -c(i, j);
        }
    Mat B(2, q.n + 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < q.n + 1; ++j) B(i, j) = unif(g) * scale;
    A.topLeftCorner(2, 2) = a;
    A.bottomRightCorner(q.n + 1, q.n + 1) = c;
    A.topRightCorner(2, q.n + 1) = B;
    A.bottomLeftCorner(q.n + 1, 2) = B.transpose();
    return A.exp();
}

inline Eigen::Matrix2d random_sl2(std::mt19937_64& g, double scale = 0.8) {
    Eigen::Matrix2d m;
    double a, b, c;
    do {
        a = unif(g) * scale + (unif(g) > 0 ? 1.0 : -1.0);
        b = unif(g) * scale;
        c = unif(g) * scale;
    } while (std::abs(a) < 0.2);
    m << a, b, c, (1.0 + b * c) / a;
    return m;
}

}  // namespace h2n::testing
