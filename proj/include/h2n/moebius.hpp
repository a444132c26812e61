#pragma once

// Hyperbolic plane in the Poincare disc model, driven by SU(1,1) matrices,
// and the regular-octagon fundamental domain for a genus-2 surface group.
//
// The octagon has all vertex angles pi/4 (circumradius cosh R = cot^2(pi/8)),
// sides S_k from v_k to v_{k+1} with v_k at angle (2k+1)pi/8, and sides
// labeled in the standard order  a1 b1 a1' b1' a2 b2 a2' b2'.  Side pairings
// identify S_k with S_{k+2}; walking the single vertex cycle shows the
// pairing maps satisfy  b2' a2 b2 a2' b1' a1 b1 a1' = 1, which becomes the
// standard relator [a1,b1][a2,b2] after replacing the b-generators by their
// inverses.  That renaming is baked into the generators returned here.

#include "h2n/core.hpp"

#include <array>
#include <complex>

namespace h2n {

using Cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat2 = Eigen::Matrix2d;

namespace detail {
// The construction is carried out in long double: the relator closes to
// ~1e-17 there, which keeps the residual of the degree-4 symmetric power
// comfortably under 1e-8 after double-precision roundoff amplification.
using Cplxl = std::complex<long double>;
using Mat2cl = Eigen::Matrix<Cplxl, 2, 2>;
using Mat2l = Eigen::Matrix<long double, 2, 2>;

inline Cplxl mobius_apply_l(const Mat2cl& m, Cplxl z) {
    return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

inline Mat2cl su11_translate_l(Cplxl p) {
    const long double s = 1.0L / std::sqrt(1.0L - std::norm(p));
    Mat2cl m;
    m << s, -s * p, -s * std::conj(p), s;
    return m;
}

inline Mat2cl su11_rotation_l(long double theta) {
    Mat2cl m = Mat2cl::Zero();
    m(0, 0) = std::polar(1.0L, theta / 2);
    m(1, 1) = std::polar(1.0L, -theta / 2);
    return m;
}

inline Mat2cl disc_isometry_two_points_l(Cplxl p1, Cplxl p2, Cplxl q1, Cplxl q2) {
    const Mat2cl a = su11_translate_l(p1);
    const Mat2cl b = su11_translate_l(q1);
    const Cplxl p2p = mobius_apply_l(a, p2);
    const Cplxl q2p = mobius_apply_l(b, q2);
    const Mat2cl r = su11_rotation_l(std::arg(q2p) - std::arg(p2p));
    return b.inverse() * r * a;
}

inline Mat2l su11_to_sl2_l(const Mat2cl& m) {
    Mat2cl c;
    c << Cplxl(0, 1), Cplxl(0, 1), Cplxl(-1, 0), Cplxl(1, 0);
    Mat2cl n = c * m * c.inverse();
    n /= std::sqrt(n.determinant());
    if (n.cwiseAbs().imag().maxCoeff() > 1e-9L) n *= Cplxl(0, 1);
    Mat2l r = n.real();
    r /= std::sqrt(r.determinant());
    return r;
}

struct OctagonLd {
    std::array<Cplxl, 8> verts;
    std::array<Mat2cl, 4> disc_gens;  // a1, b1, a2, b2
    std::array<Mat2l, 4> sl2_gens;
};

inline const OctagonLd& octagon_ld() {
    static const OctagonLd oc = [] {
        OctagonLd d;
        const long double pi = 3.14159265358979323846264338327950288L;
        const long double rcirc = std::acosh(1.0L / (std::tan(pi / 8) * std::tan(pi / 8)));
        const long double r = std::tanh(rcirc / 2);
        for (int k = 0; k < 8; ++k)
            d.verts[static_cast<size_t>(k)] = std::polar(r, (2 * k + 1) * pi / 8);
        auto v = [&](int k) { return d.verts[static_cast<size_t>(((k % 8) + 8) % 8)]; };
        auto pair_map = [&](int i, int j) {
            return disc_isometry_two_points_l(v(j), v(j + 1), v(i + 1), v(i));
        };
        d.disc_gens = {pair_map(0, 2), Mat2cl(pair_map(1, 3).inverse()), pair_map(4, 6),
                       Mat2cl(pair_map(5, 7).inverse())};
        for (int i = 0; i < 4; ++i)
            d.sl2_gens[static_cast<size_t>(i)] = su11_to_sl2_l(d.disc_gens[static_cast<size_t>(i)]);
        return d;
    }();
    return oc;
}
}  // namespace detail

inline Cplx mobius_apply(const Mat2c& m, Cplx z) {
    return (m(0, 0) * z + m(0, 1)) / (m(1, 0) * z + m(1, 1));
}

/// disc isometry sending p to 0
inline Mat2c su11_translate(Cplx p) {
    const double s = 1.0 / std::sqrt(1.0 - std::norm(p));
    Mat2c m;
    m << s, -s * p, -s * std::conj(p), s;
    return m;
}

inline Mat2c su11_rotation(double theta) {
    Mat2c m = Mat2c::Zero();
    m(0, 0) = std::polar(1.0, theta / 2);
    m(1, 1) = std::polar(1.0, -theta / 2);
    return m;
}

inline double disc_distance(Cplx z, Cplx w) {
    return 2.0 * std::atanh(std::abs((z - w) / (1.0 - std::conj(w) * z)));
}

/// geodesic midpoint in the disc model
inline Cplx disc_midpoint(Cplx z, Cplx w) {
    const Mat2c t = su11_translate(z);
    const Cplx wp = mobius_apply(t, w);
    const double r = std::abs(wp);
    if (r < 1e-300) return z;
    const Cplx m = wp / r * std::tanh(0.5 * std::atanh(r));
    return mobius_apply(t.inverse(), m);
}

/// orientation-preserving isometry with p1 -> q1, p2 -> q2 (equidistant pairs)
inline Mat2c disc_isometry_two_points(Cplx p1, Cplx p2, Cplx q1, Cplx q2) {
    const Mat2c a = su11_translate(p1);
    const Mat2c b = su11_translate(q1);
    const Cplx p2p = mobius_apply(a, p2);
    const Cplx q2p = mobius_apply(b, q2);
    const Mat2c r = su11_rotation(std::arg(q2p) - std::arg(p2p));
    return b.inverse() * r * a;
}

/// SU(1,1) -> SL(2,R) through the Cayley transform z -> i(1+z)/(1-z)
inline Mat2 su11_to_sl2(const Mat2c& m) {
    Mat2c c;
    c << Cplx(0, 1), Cplx(0, 1), Cplx(-1, 0), Cplx(1, 0);
    Mat2c n = c * m * c.inverse();
    n /= std::sqrt(n.determinant());
    if (n.cwiseAbs().imag().maxCoeff() > 1e-9) n *= Cplx(0, 1);
    if (n.imag().cwiseAbs().maxCoeff() > 1e-9)
        throw numerical_error("su11_to_sl2: conjugated matrix is not real");
    Mat2 r = n.real();
    r /= std::sqrt(r.determinant());
    return r;
}

inline double translation_length_sl2(const Mat2& m) {
    const double t = std::abs(m.trace());
    if (t <= 2.0) return 0.0;
    return 2.0 * std::acosh(t / 2.0);
}

/// Genus-2 generator images in SL(2,R); relator evaluates to +-I.
struct MoebiusRep {
    std::array<Mat2, 4> gens;  // a1, b1, a2, b2

    Mat2 letter(int l) const {
        const Mat2& g = gens[static_cast<size_t>(std::abs(l) - 1)];
        if (l > 0) return g;
        Mat2 inv;  // adjugate; det = 1
        inv << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
        return inv;
    }
};

/// One paired side of the fundamental octagon: points of side `from` are
/// carried onto side `to` by the generator word `letter`.
struct SidePairing {
    int from;
    int to;
    int letter;  // signed generator index, 1..4 = a1,b1,a2,b2
};

/// The regular octagon with the standard-relator side pairings, in both the
/// disc model (SU(1,1)) and SL(2,R).
struct OctagonDomain {
    std::array<Cplx, 8> verts;
    std::array<Mat2c, 4> disc_gens;  // a1, b1, a2, b2 acting on the disc
    std::array<SidePairing, 4> pairings;

    Mat2c disc_letter(int l) const {
        const Mat2c& g = disc_gens[static_cast<size_t>(std::abs(l) - 1)];
        return l > 0 ? g : g.inverse().eval();
    }

    Mat2c disc_word(const std::vector<int>& letters) const {
        Mat2c m = Mat2c::Identity();
        for (int l : letters) m *= disc_letter(l);
        return m;
    }
};

inline const OctagonDomain& octagon_domain() {
    static const OctagonDomain dom = [] {
        const detail::OctagonLd& oc = detail::octagon_ld();
        OctagonDomain d;
        for (int k = 0; k < 8; ++k)
            d.verts[static_cast<size_t>(k)] = static_cast<Cplx>(oc.verts[static_cast<size_t>(k)]);
        for (int i = 0; i < 4; ++i)
            d.disc_gens[static_cast<size_t>(i)] =
                oc.disc_gens[static_cast<size_t>(i)].cast<Cplx>();
        // raw pairing g_x carries the side labeled x' onto the side labeled x,
        // reversing the boundary direction; the b-generators were inverted so
        // that the vertex-cycle relation is the standard [a1,b1][a2,b2]
        d.pairings = {SidePairing{2, 0, 1},   // a1 : S2 -> S0
                      SidePairing{1, 3, 2},   // b1 : S1 -> S3
                      SidePairing{6, 4, 3},   // a2 : S6 -> S4
                      SidePairing{5, 7, 4}};  // b2 : S5 -> S7
        return d;
    }();
    return dom;
}

/// Side-pairing generators of the regular hyperbolic octagon, as SL(2,R)
/// matrices.  All four are hyperbolic with equal traces 2 + sqrt(2), and the
/// relator [a1,b1][a2,b2] evaluates to +-I (asserted to 1e-8 at build time).
inline MoebiusRep fuchsian_octagon() {
    const detail::OctagonLd& oc = detail::octagon_ld();
    MoebiusRep rep;
    for (int i = 0; i < 4; ++i)
        rep.gens[static_cast<size_t>(i)] = oc.sl2_gens[static_cast<size_t>(i)].cast<double>();
    Mat2 rel = Mat2::Identity();
    for (int l : {1, 2, -1, -2, 3, 4, -3, -4}) rel *= rep.letter(l);
    const double res = std::min((rel - Mat2::Identity()).cwiseAbs().maxCoeff(),
                                (rel + Mat2::Identity()).cwiseAbs().maxCoeff());
    if (res > 1e-8)
        throw numerical_error("fuchsian_octagon: relator residual " + std::to_string(res));
    for (const Mat2& g : rep.gens)
        if (std::abs(g.trace()) <= 2.0)
            throw numerical_error("fuchsian_octagon: generator is not hyperbolic");
    return rep;
}

inline Mat2 moebius_evaluate(const MoebiusRep& rep, const std::vector<int>& letters) {
    Mat2 m = Mat2::Identity();
    for (int l : letters) m *= rep.letter(l);
    return m;
}

/// log of the spectral radius: 2 log((|tr| + sqrt(tr^2 - 4))/2), the
/// hyperbolic translation length
inline double moebius_length(const Mat2& m) { return translation_length_sl2(m); }

}  // namespace h2n
