#pragma once

// Constructors for explicit maximal representations into SO_0(2,n+1):
// the symmetric-power representations of SL(2,R) with their invariant
// pairings Q_m, the irreducible SO_0(2,3) representation, the Fuchsian
// locus  rho = rho_Fuch (x) det(alpha) (+) alpha, and bending along the
// separating curve [a1,b1].

#include "h2n/core.hpp"
#include "h2n/moebius.hpp"
#include "h2n/words.hpp"

#include <optional>
#include <vector>

namespace h2n {

struct Provenance {
    std::string kind = "custom";  // fuchsian_locus | irreducible | bent | custom
    double bend_theta = 0.0;
    int toledo = 0;  // 2g-2 for every constructor here; stored, never computed
    std::optional<MoebiusRep> base;           // underlying Fuchsian representation
    std::vector<Mat> alpha;                   // O(n) data of the Fuchsian locus
};

struct Representation {
    int n = 2;
    int genus = 2;
    std::vector<Mat> gens;  // (n+3)x(n+3), one per generator a1,b1,...
    double relator_residual = 0.0;
    Provenance provenance;

    QForm form() const { return QForm{n}; }
};

inline Mat rep_evaluate(const Representation& rep, const Word& w) {
    return evaluate(rep.form(), rep.gens, w);
}

/// Relator residual ||rho(relator) - I||_inf, accumulated in long double:
/// the partial products along the relator reach norms ~e^{2 L} before
/// cancelling back to the identity, which swamps double precision for the
/// degree-4 symmetric power.
inline double relator_residual_of(const QForm& q, const std::vector<Mat>& gens,
                                  const Presentation& pres) {
    using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    std::vector<MatL> gl;
    gl.reserve(gens.size());
    for (const Mat& g : gens) gl.push_back(g.cast<long double>());
    auto adjoint_inv = [&](const MatL& m) {
        MatL w = m.transpose();
        w.leftCols(2).bottomRows(q.n + 1) *= -1.0L;
        w.rightCols(q.n + 1).topRows(2) *= -1.0L;
        return w;
    };
    MatL r = MatL::Identity(q.dim(), q.dim());
    for (int l : pres.relator().letters) {
        const size_t idx = static_cast<size_t>(std::abs(l) - 1);
        if (idx >= gl.size()) throw invariant_error("relator residual: letter out of range");
        r = l > 0 ? MatL(r * gl[idx]) : MatL(r * adjoint_inv(gl[idx]));
    }
    return static_cast<double>(
        (r - MatL::Identity(q.dim(), q.dim())).cwiseAbs().maxCoeff());
}

/// Checks every generator against SO_0 and the relator residual; throws on failure.
inline void validate_representation(const Representation& rep, double tol = 1e-8) {
    const QForm q = rep.form();
    for (const Mat& g : rep.gens)
        if (so0_classify(q, g, 1e-9 * 10) != So0Verdict::yes)
            throw invariant_error("Representation: generator not in SO_0(2,n+1)");
    if (rep.relator_residual > tol)
        throw invariant_error("Representation: relator residual " +
                              std::to_string(rep.relator_residual));
}

// ---------------------------------------------------------------------------
// symmetric powers of SL(2,R) and the pairings Q_m
// ---------------------------------------------------------------------------

/// Matrix of the action  P -> P o A^{-1}  of A in SL(2,R) on binary forms of
/// degree m, in the monomial basis (X^m, X^{m-1}Y, ..., Y^m).  Functorial:
/// sym_power(AB) = sym_power(A) sym_power(B).  A^{-1} is taken as the
/// adjugate, so det(A) must be 1.
inline Mat sym_power(const Mat2& A, int m) {
    if (m < 1 || m > 4) throw invariant_error("sym_power: supported degrees are 1..4");
    if (std::abs(A.determinant() - 1.0) > 1e-9)
        throw invariant_error("sym_power: determinant must be 1");
    // substitution X -> aX + bY, Y -> cX + dY with (a b; c d) = adj(A)
    const double a = A(1, 1), b = -A(0, 1), c = -A(1, 0), d = A(0, 0);
    Mat out = Mat::Zero(m + 1, m + 1);
    for (int k = 0; k <= m; ++k) {
        // expand (aX+bY)^(m-k) (cX+dY)^k; column k of the matrix
        std::vector<double> poly(static_cast<size_t>(m) + 1, 0.0);  // coeff of X^(m-i) Y^i
        poly[0] = 1.0;
        int deg = 0;
        auto mul_linear = [&](double p, double r) {  // multiply by pX + rY
            std::vector<double> nxt(static_cast<size_t>(m) + 1, 0.0);
            for (int i = 0; i <= deg; ++i) {
                nxt[static_cast<size_t>(i)] += poly[static_cast<size_t>(i)] * p;
                nxt[static_cast<size_t>(i) + 1] += poly[static_cast<size_t>(i)] * r;
            }
            poly = nxt;
            ++deg;
        };
        for (int t = 0; t < m - k; ++t) mul_linear(a, b);
        for (int t = 0; t < k; ++t) mul_linear(c, d);
        for (int i = 0; i <= m; ++i) out(i, k) = poly[static_cast<size_t>(i)];
    }
    return out;
}

/// The SL(2,R)-invariant pairing Q_m on degree-m binary forms: antidiagonal
/// entries (-1)^k a_{m,k} with a_{m,k} = k!(m-k)!/m!.  Symmetric for even m,
/// antisymmetric for odd m.
inline Mat qn_matrix(int m) {
    if (m < 1 || m > 4) throw invariant_error("qn_matrix: supported degrees are 1..4");
    auto fact = [](int k) { return k <= 1 ? 1.0 : k == 2 ? 2.0 : k == 3 ? 6.0 : 24.0; };
    Mat out = Mat::Zero(m + 1, m + 1);
    for (int k = 0; k <= m; ++k) {
        const double a = fact(k) * fact(m - k) / fact(m);
        out(k, m - k) = (k % 2 == 0 ? a : -a);
    }
    return out;
}

/// Congruence T with T^t (-Q_m) T = diag(1,..,1,-1,..,-1) (positives first),
/// from the eigendecomposition of -Q_m.  Fixed once; every module that maps
/// between the polynomial model and standard coordinates reuses it.
inline Mat qm_congruence(int m) {
    const Mat M = -qn_matrix(m);
    if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-14)
        throw invariant_error("qm_congruence: Q_m must be symmetric (even m)");
    Eigen::SelfAdjointEigenSolver<Mat> es(M);
    const Vec w = es.eigenvalues();  // ascending
    const Mat V = es.eigenvectors();
    std::vector<int> pos, neg;
    for (int i = 0; i < w.size(); ++i) (w(i) > 0 ? pos : neg).push_back(i);
    Mat T(M.rows(), M.cols());
    int c = 0;
    for (int i : pos) T.col(c++) = V.col(i) / std::sqrt(w(i));
    for (int i : neg) T.col(c++) = V.col(i) / std::sqrt(-w(i));
    return T;
}

namespace detail {
inline const Mat& t2() {
    static const Mat t = qm_congruence(2);
    return t;
}
inline const Mat& t4() {
    static const Mat t = qm_congruence(4);
    return t;
}
}  // namespace detail

/// SL(2,R) -> SO_0(2,1) in standard coordinates (q = y1^2 + y2^2 - y3^2)
inline Mat so21_of(const Mat2& A) {
    const Mat& T = detail::t2();
    return T.inverse() * sym_power(A, 2) * T;
}

/// SL(2,R) -> SO_0(2,3) through sym^4 and the cached congruence of -Q_4
inline Mat so23_irr_of(const Mat2& A) {
    const Mat& T = detail::t4();
    return T.inverse() * sym_power(A, 4) * T;
}

/// Equivariant embedding of the Poincare disc into the SO(2,1) hyperboloid
/// {q = -1, y3 > 0}: a disc point corresponds, through the upper half-plane,
/// to the quadratic form (X - zY)(X - zbar Y), carried to standard
/// coordinates by the cached congruence.
inline Eigen::Vector3d disc_to_hyperboloid(Cplx zd) {
    const Cplx z = Cplx(0, 1) * (1.0 + zd) / (1.0 - zd);  // Cayley: disc -> upper half-plane
    Eigen::Vector3d p(1.0, -2.0 * z.real(), std::norm(z));
    Eigen::Vector3d x = detail::t2().inverse() * p;
    const double nrm = -(x(0) * x(0) + x(1) * x(1) - x(2) * x(2));
    x /= std::sqrt(nrm);
    if (x(2) < 0) x = -x;
    return x;
}

// ---------------------------------------------------------------------------
// representation constructors
// ---------------------------------------------------------------------------

/// rho = sym^4 of a Fuchsian representation, conjugated into SO_0(2,3).
/// Length spectrum: L_rho = 2 L_j.
///
/// The relator residual of the stored double-precision generators is limited
/// by conditioning, not construction: partial products along the relator
/// reach norms ~e^{2 L(separating curve)} ~ 1e7, so rounding the generators
/// to double already costs ~1e-7 on the evaluated relator.  Validation uses a
/// bound that reflects this.
inline Representation irr_so23(const MoebiusRep& j) {
    Representation rep;
    rep.n = 2;
    rep.genus = 2;
    for (const Mat2& g : j.gens) rep.gens.push_back(so23_irr_of(g));
    rep.relator_residual = relator_residual_of(rep.form(), rep.gens, Presentation{2});
    rep.provenance.kind = "irreducible";
    rep.provenance.toledo = 2;
    rep.provenance.base = j;
    validate_representation(rep, 2e-6);
    return rep;
}

/// rho = rho_Fuch (x) det(alpha) (+) alpha with rho_Fuch the SO_0(2,1) image
/// of j; alpha gives one orthogonal n x n matrix per generator.
inline Representation fuchsian_locus(const MoebiusRep& j, const std::vector<Mat>& alpha) {
    if (alpha.size() != 4) throw invariant_error("fuchsian_locus: need 4 alpha images");
    const int n = static_cast<int>(alpha[0].rows());
    Representation rep;
    rep.n = n;
    rep.genus = 2;
    for (size_t i = 0; i < 4; ++i) {
        const Mat& al = alpha[i];
        if (al.rows() != n || al.cols() != n ||
            (al.transpose() * al - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
            throw invariant_error("fuchsian_locus: alpha image is not orthogonal");
        const double det_al = al.determinant() > 0 ? 1.0 : -1.0;
        Mat g = Mat::Zero(n + 3, n + 3);
        g.topLeftCorner(3, 3) = det_al * so21_of(j.gens[i]);
        g.bottomRightCorner(n, n) = al;
        rep.gens.push_back(std::move(g));
    }
    rep.relator_residual = relator_residual_of(rep.form(), rep.gens, Presentation{2});
    rep.provenance.kind = "fuchsian_locus";
    rep.provenance.toledo = 2;
    rep.provenance.base = j;
    rep.provenance.alpha = alpha;
    validate_representation(rep);
    return rep;
}

inline std::vector<Mat> trivial_alpha(int n) {
    return std::vector<Mat>(4, Mat::Identity(n, n));
}

/// Bends a genus-2 representation along the separating curve [a1,b1]:
/// a2 and b2 are conjugated by c, which must centralize rho([a1,b1]).
inline Representation bend(const Representation& rep, const Mat& c, double tol = 1e-9) {
    if (rep.genus != 2) throw invariant_error("bend: genus-2 representations only");
    const QForm q = rep.form();
    if (so0_classify(q, c, tol * 10) != So0Verdict::yes)
        throw invariant_error("bend: conjugator is not in SO_0(2,n+1)");
    const Mat sep = evaluate(q, rep.gens, Word{{1, 2, -1, -2}});
    if ((c * sep - sep * c).cwiseAbs().maxCoeff() > tol)
        throw invariant_error("bend: conjugator does not commute with rho([a1,b1])");
    Representation out = rep;
    const Mat cinv = q.adjoint_inverse(c);
    out.gens[2] = c * rep.gens[2] * cinv;
    out.gens[3] = c * rep.gens[3] * cinv;
    out.relator_residual = relator_residual_of(q, out.gens, Presentation{2});
    out.provenance.kind = "bent";
    validate_representation(out);
    return out;
}

/// The canonical bending conjugator: a rotation by theta in the plane
/// (e4, e5).  It centralizes rho([a1,b1]) for any Fuchsian-locus
/// representation whose alpha part fixes that plane.
inline Mat bend_rotation(int n, double theta) {
    if (n < 2) throw invariant_error("bend_rotation: needs n >= 2");
    Mat c = Mat::Identity(n + 3, n + 3);
    c(3, 3) = std::cos(theta);
    c(3, 4) = -std::sin(theta);
    c(4, 3) = std::sin(theta);
    c(4, 4) = std::cos(theta);
    return c;
}

inline Representation bend_fuchsian(const Representation& rep, double theta) {
    Representation out = bend(rep, bend_rotation(rep.n, theta), 1e-9);
    out.provenance.bend_theta = theta;
    return out;
}

}  // namespace h2n
