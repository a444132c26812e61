#pragma once

// Pseudo-Euclidean linear algebra over R^{2,n+1}: the quadratic form
// q(x) = x_1^2 + x_2^2 - x_3^2 - ... - x_{n+3}^2, Gram matrices, signatures,
// orthogonal complements and membership tests for SO_0(2,n+1).

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace h2n {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Thrown when an input breaks a documented invariant (CLI exit code 2).
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an iteration or solver leaves its validity domain (CLI exit code 3).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kDefaultTol = 1e-9;

/// The form q of signature (2, n+1) on R^{n+3}, diagonal (+1, +1, -1, ..., -1).
struct QForm {
    int n = 2;

    int dim() const { return n + 3; }

    double sign_of_axis(int k) const { return k < 2 ? 1.0 : -1.0; }

    Mat matrix() const {
        Vec d(dim());
        d(0) = d(1) = 1.0;
        d.segment(2, n + 1).setConstant(-1.0);
        return d.asDiagonal();
    }

    /// q(u)
    double eval(const Vec& u) const {
        check_dim(u);
        return u.head<2>().squaredNorm() - u.tail(n + 1).squaredNorm();
    }

    /// symmetric bilinear form q(u, v); polarization of eval
    double pair(const Vec& u, const Vec& v) const {
        check_dim(u);
        if (v.size() != u.size())
            throw invariant_error("q_pair: dimension mismatch");
        return u.head<2>().dot(v.head<2>()) - u.tail(n + 1).dot(v.tail(n + 1));
    }

    /// the vector Q u (flips the sign of the negative coordinates)
    Vec apply(const Vec& u) const {
        check_dim(u);
        Vec w = u;
        w.tail(n + 1) *= -1.0;
        return w;
    }

    /// inverse of a q-orthogonal matrix, computed exactly as Q M^T Q
    Mat adjoint_inverse(const Mat& M) const {
        Mat w = M.transpose();
        w.leftCols(2).bottomRows(n + 1) *= -1.0;
        w.rightCols(n + 1).topRows(2) *= -1.0;
        return w;
    }

    void check_dim(const Vec& u) const {
        if (u.size() != dim())
            throw invariant_error("QForm: expected vector of size " + std::to_string(dim()));
        if (!u.allFinite())
            throw invariant_error("QForm: non-finite entries");
    }
};

/// Linear subspace given by a basis (columns); rank must equal cols at tolerance.
struct Subspace {
    Mat basis;  // (n+3) x dim, columns linearly independent

    int dim() const { return static_cast<int>(basis.cols()); }
    int ambient() const { return static_cast<int>(basis.rows()); }
};

struct Signature {
    int pos = 0;
    int null = 0;
    int neg = 0;

    bool operator==(const Signature&) const = default;
};

inline Mat gram_matrix(const QForm& q, const Subspace& s) {
    Mat qb = s.basis;
    qb.bottomRows(q.n + 1) *= -1.0;
    return s.basis.transpose() * qb;
}

inline void require_independent(const Subspace& s, double tol) {
    Eigen::ColPivHouseholderQR<Mat> qr(s.basis);
    qr.setThreshold(tol);
    if (qr.rank() < s.dim())
        throw invariant_error("Subspace: basis is rank-deficient at tolerance");
}

inline Signature signature_of_gram(const Mat& gram, double tol = kDefaultTol) {
    Eigen::SelfAdjointEigenSolver<Mat> es(gram);
    Signature sig;
    for (double lam : es.eigenvalues()) {
        if (lam > tol)
            ++sig.pos;
        else if (lam < -tol)
            ++sig.neg;
        else
            ++sig.null;
    }
    return sig;
}

/// Counts of Gram eigenvalues above +tol / within tol / below -tol.
inline Signature signature(const QForm& q, const Subspace& s, double tol = kDefaultTol) {
    require_independent(s, tol);
    return signature_of_gram(gram_matrix(q, s), tol);
}

/// Basis of {v : q(v, s) = 0 for all s in S}; dimension is ambient - dim(S).
inline Subspace orth_complement(const QForm& q, const Subspace& s, double tol = kDefaultTol) {
    require_independent(s, tol);
    // kernel of B^T Q, via full SVD
    Mat bq = s.basis.transpose();
    bq.rightCols(q.n + 1) *= -1.0;
    Eigen::JacobiSVD<Mat> svd(bq, Eigen::ComputeFullV);
    const int k = q.dim() - s.dim();
    return Subspace{svd.matrixV().rightCols(k)};
}

inline Subspace span_of(std::initializer_list<Vec> vs) {
    Mat b(vs.begin()->size(), static_cast<Eigen::Index>(vs.size()));
    int c = 0;
    for (const Vec& v : vs) b.col(c++) = v;
    return Subspace{b};
}

enum class So0Verdict { yes, in_o_not_so0, no };

/// Classifies M against SO_0(2,n+1): q-orthogonality, det = 1, and positivity
/// of the determinant of the top-left 2x2 block. The latter is the orientation
/// character of the positive definite 2-plane span(e1,e2); it separates the
/// two det-1 components of O(2,n+1). Its determinant never vanishes on
/// q-orthogonal matrices (B^T B = I + C^T C forces |det B| >= 1).
inline So0Verdict so0_classify(const QForm& q, const Mat& M, double tol = kDefaultTol) {
    if (M.rows() != q.dim() || M.cols() != q.dim())
        throw invariant_error("so0_classify: matrix size mismatch");
    Mat qm = M;
    qm.bottomRows(q.n + 1) *= -1.0;
    Mat residual = M.transpose() * qm - q.matrix();
    if (residual.cwiseAbs().maxCoeff() > tol) return So0Verdict::no;
    const double det = M.determinant();
    if (std::abs(det - 1.0) > tol * q.dim()) return So0Verdict::in_o_not_so0;
    const double det2 = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    return det2 > 0 ? So0Verdict::yes : So0Verdict::in_o_not_so0;
}

/// max-norm residual of q-orthogonality, for diagnostics
inline double so0_residual(const QForm& q, const Mat& M) {
    Mat qm = M;
    qm.bottomRows(q.n + 1) *= -1.0;
    return (M.transpose() * qm - q.matrix()).cwiseAbs().maxCoeff();
}

inline Vec basis_vector(int dim, int k) {
    Vec v = Vec::Zero(dim);
    v(k) = 1.0;
    return v;
}

}  // namespace h2n
