#pragma once

// Geometry of the pseudo-hyperbolic space H^{2,n} (projectivized q-negative
// lines), its conformal boundary Ein^{1,n} (isotropic lines), photons
// (totally isotropic 2-planes), space-like distance, geodesics and the
// warped product chart D x S^n -> hat H^{2,n}.

#include "h2n/core.hpp"

#include <optional>
#include <variant>

namespace h2n {

/// A point of H^{2,n} stored as a concrete lift with q = -1; the projective
/// point is +-rep.  Sign conventions (which sheet) are resolved per algorithm.
struct PointH {
    Vec rep;
};

/// A point of Ein^{1,n}: q = 0, normalized to unit Euclidean length.
struct PointEin {
    Vec rep;
};

/// Totally isotropic 2-plane, kept in a canonical column-echelon basis with
/// leading entries +1 so equality tests are entrywise.
struct Photon {
    Mat plane;  // (n+3) x 2
};

inline PointH make_point_h(const QForm& q, const Vec& v, double tol = kDefaultTol) {
    if (std::abs(q.eval(v) + 1.0) > tol)
        throw invariant_error("PointH: q(rep) must be -1");
    return PointH{v};
}

/// rescales a q-negative vector to the quadric q = -1
inline PointH normalize_point_h(const QForm& q, const Vec& v) {
    const double qv = q.eval(v);
    if (qv >= 0) throw invariant_error("PointH: vector is not q-negative");
    return PointH{v / std::sqrt(-qv)};
}

inline PointEin make_point_ein(const QForm& q, const Vec& v, double tol = kDefaultTol) {
    const double nrm = v.norm();
    if (nrm < tol) throw invariant_error("PointEin: zero vector");
    Vec u = v / nrm;
    if (std::abs(q.eval(u)) > tol)
        throw invariant_error("PointEin: vector is not isotropic");
    return PointEin{u};
}

/// min over +- of the Euclidean distance of normalized representatives
inline double projective_distance(const Vec& a, const Vec& b) {
    const Vec an = a / a.norm(), bn = b / b.norm();
    return std::min((an - bn).norm(), (an + bn).norm());
}

inline Photon make_photon(const QForm& q, Mat basis, double tol = kDefaultTol) {
    if (basis.cols() != 2 || basis.rows() != q.dim())
        throw invariant_error("Photon: basis must be (n+3) x 2");
    Subspace s{basis};
    require_independent(s, tol);
    if (gram_matrix(q, s).cwiseAbs().maxCoeff() > tol)
        throw invariant_error("Photon: plane is not totally isotropic");
    // canonical form: column-echelon by rows, pivots +1
    Eigen::HouseholderQR<Mat> qr(basis);
    Mat b = qr.householderQ() * Mat::Identity(q.dim(), 2);
    Mat t = b.transpose();  // 2 x (n+3), row-reduce
    int row = 0;
    for (int col = 0; col < t.cols() && row < 2; ++col) {
        int piv = -1;
        double best = 1e-10;
        for (int r = row; r < 2; ++r)
            if (std::abs(t(r, col)) > best) { best = std::abs(t(r, col)); piv = r; }
        if (piv < 0) continue;
        t.row(piv).swap(t.row(row));
        t.row(row) /= t(row, col);
        for (int r = 0; r < 2; ++r)
            if (r != row) t.row(r) -= t(r, col) * t.row(row);
        ++row;
    }
    return Photon{t.transpose()};
}

// ---------------------------------------------------------------------------
// chords and geodesics
// ---------------------------------------------------------------------------

enum class ChordKind { spacelike, lightlike, timelike, equal };

struct ChordClass {
    ChordKind kind;
    double distance = 0.0;  // set for spacelike chords
};

/// d([u],[v]) = acosh |q(u,v)| when |q(u,v)| > 1; the chord is light-like at
/// |q| = 1 and time-like below.
inline ChordClass chord_classify(const QForm& q, const PointH& x, const PointH& y,
                                 double tol = kDefaultTol) {
    if (projective_distance(x.rep, y.rep) < tol) return {ChordKind::equal, 0.0};
    const double c = std::abs(q.pair(x.rep, y.rep));
    if (c > 1.0 + tol) return {ChordKind::spacelike, std::acosh(c)};
    if (c >= 1.0 - tol) return {ChordKind::lightlike, 0.0};
    return {ChordKind::timelike, 0.0};
}

inline void check_unit_spacelike_direction(const QForm& q, const PointH& p, const Vec& w,
                                           double tol) {
    if (std::abs(q.eval(w) - 1.0) > tol || std::abs(q.pair(p.rep, w)) > tol)
        throw invariant_error("geodesic: direction must be unit space-like and orthogonal");
}

/// cosh(t) p + sinh(t) w stays on the quadric q = -1
inline PointH geodesic_point(const QForm& q, const PointH& p, const Vec& w, double t,
                             double tol = 1e-8) {
    check_unit_spacelike_direction(q, p, w, tol);
    return PointH{std::cosh(t) * p.rep + std::sinh(t) * w};
}

/// projective limit of the half-geodesic: the isotropic class [p + w]
inline PointEin geodesic_endpoint(const QForm& q, const PointH& p, const Vec& w,
                                  double tol = 1e-8) {
    check_unit_spacelike_direction(q, p, w, tol);
    Vec v = p.rep + w;
    return PointEin{v / v.norm()};
}

// ---------------------------------------------------------------------------
// warped product chart
// ---------------------------------------------------------------------------

/// F(u,v) = (2u/(1-|u|^2), (1+|u|^2)/(1-|u|^2) v); q = -1 identically.
/// Pullback metric: 4/(1-|u|^2)^2 on the disc minus
/// ((1+|u|^2)/(1-|u|^2))^2 times the round metric on S^n.
inline Vec warped_chart(const QForm& q, const Eigen::Vector2d& u, const Vec& v,
                        double tol = 1e-9) {
    if (v.size() != q.n + 1) throw invariant_error("warped_chart: sphere factor size");
    const double r2 = u.squaredNorm();
    if (r2 >= 1.0) throw invariant_error("warped_chart: |u| must be < 1");
    if (std::abs(v.norm() - 1.0) > tol) throw invariant_error("warped_chart: |v| must be 1");
    Vec x(q.dim());
    x.head<2>() = 2.0 / (1.0 - r2) * u;
    x.tail(q.n + 1) = (1.0 + r2) / (1.0 - r2) * v;
    return x;
}

struct WarpedCoords {
    Eigen::Vector2d u;
    Vec v;
};

inline WarpedCoords warped_chart_inv(const QForm& q, const Vec& x) {
    q.check_dim(x);
    const double s = x.tail(q.n + 1).norm();
    if (s < 1.0 - 1e-12) throw invariant_error("warped_chart_inv: not on the quadric");
    WarpedCoords c;
    c.v = x.tail(q.n + 1) / s;
    c.u = x.head<2>() / (s + 1.0);
    return c;
}

// ---------------------------------------------------------------------------
// boundary configuration and photons
// ---------------------------------------------------------------------------

/// true iff span(a,b,c) has signature (2,0,1): the space-like configuration
/// of three isotropic lines.  Projectively distinct but linearly dependent
/// triples span a plane at most and are never space-like.
inline bool spacelike_triple(const QForm& q, const PointEin& a, const PointEin& b,
                             const PointEin& c, double tol = kDefaultTol) {
    if (projective_distance(a.rep, b.rep) < tol || projective_distance(a.rep, c.rep) < tol ||
        projective_distance(b.rep, c.rep) < tol)
        throw invariant_error("spacelike_triple: points must be distinct");
    Mat basis(q.dim(), 3);
    basis << a.rep, b.rep, c.rep;
    return signature_of_gram(gram_matrix(q, Subspace{basis}), tol) == Signature{2, 0, 1};
}

/// Builds the photon {x + phi(x) : x in E} from an anti-isometry
/// phi : (E, g_E) -> (F, g_F), i.e. g_E(x,y) = -g_F(phi x, phi y).
/// phi is a 2-column coefficient matrix in the given basis of F.
inline Photon photon_from_graph(const QForm& q, const Subspace& E, const Subspace& F,
                                const Mat& phi, double tol = 1e-8) {
    if (E.dim() != 2) throw invariant_error("photon_from_graph: E must be 2-dimensional");
    if (phi.rows() != F.dim() || phi.cols() != 2)
        throw invariant_error("photon_from_graph: phi must be dim(F) x 2");
    const Mat f = F.basis * phi;  // images of the E-basis
    const Mat ge = gram_matrix(q, E);
    Mat gf(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gf(i, j) = q.pair(f.col(i), f.col(j));
    if ((ge + gf).cwiseAbs().maxCoeff() > tol)
        throw invariant_error("photon_from_graph: phi is not an anti-isometry");
    Mat basis(q.dim(), 2);
    basis.col(0) = E.basis.col(0) + f.col(0);
    basis.col(1) = E.basis.col(1) + f.col(1);
    return make_photon(q, basis, tol);
}

/// Photons inside x^perp and y^perp are disjoint iff (x + y)^perp has
/// signature (1,0,n) -- equivalently, the chord through x,y is space-like.
inline bool fibers_disjoint(const QForm& q, const PointH& x, const PointH& y,
                            double tol = kDefaultTol) {
    if (projective_distance(x.rep, y.rep) < tol)
        throw invariant_error("fibers_disjoint: points must be distinct");
    Mat basis(q.dim(), 2);
    basis << x.rep, y.rep;
    const Signature sig = signature(q, orth_complement(q, Subspace{basis}, tol), tol);
    return sig == Signature{1, 0, q.n};
}

}  // namespace h2n
