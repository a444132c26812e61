#include "h2n/core.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace h2n;
using h2n::testing::random_so0;
using h2n::testing::random_vec;

namespace {
Vec e(const QForm& q, int k) { return basis_vector(q.dim(), k); }
}  // namespace

TEST_CASE("q_eval on axis vectors and cancellations") {
    QForm q{2};
    CHECK(q.eval(e(q, 0)) == 1.0);
    CHECK(q.eval(e(q, 2)) == -1.0);
    CHECK(q.eval(e(q, 0) + e(q, 2)) == 0.0);
}

TEST_CASE("q_pair symmetry and polarization") {
    QForm q{3};
    CHECK(q.pair(e(q, 0), e(q, 1)) == 0.0);
    CHECK(q.pair(e(q, 0) + e(q, 2), e(q, 0) - e(q, 2)) == 2.0);
    auto g = h2n::testing::rng();
    for (int t = 0; t < 50; ++t) {
        const Vec u = random_vec(g, q.dim());
        const Vec v = random_vec(g, q.dim());
        CHECK(q.pair(u, v) == q.pair(v, u));
        CHECK(q.pair(u, u) == q.eval(u));
    }
    CHECK_THROWS_AS(q.pair(e(q, 0), Vec::Zero(3)), invariant_error);
}

TEST_CASE("signatures of coordinate spans") {
    QForm q{2};
    CHECK(signature(q, span_of({e(q, 0), e(q, 1)})) == Signature{2, 0, 0});
    CHECK(signature(q, span_of({e(q, 0) + e(q, 2)})) == Signature{0, 1, 0});
    CHECK(signature(q, span_of({e(q, 0), e(q, 1), e(q, 2)})) == Signature{2, 0, 1});
    Mat degenerate(q.dim(), 2);
    degenerate.col(0) = e(q, 0);
    degenerate.col(1) = e(q, 0) * (1.0 + 1e-13);
    CHECK_THROWS_AS(signature(q, Subspace{degenerate}), invariant_error);
}

TEST_CASE("orthogonal complements") {
    QForm q{2};
    SECTION("coordinate axis") {
        const Subspace c = orth_complement(q, span_of({e(q, 2)}));
        REQUIRE(c.dim() == q.dim() - 1);
        for (int i = 0; i < c.dim(); ++i)
            CHECK(std::abs(q.pair(c.basis.col(i), e(q, 2))) < 1e-12);
        CHECK(signature(q, c) == Signature{2, 0, q.n});
    }
    SECTION("isotropic line lies in its own complement") {
        const Vec iso = e(q, 0) + e(q, 2);
        const Subspace c = orth_complement(q, span_of({iso}));
        // residual of iso against the complement's span
        const Vec proj = c.basis * (c.basis.transpose() * iso);
        CHECK((iso - proj).norm() < 1e-12);
    }
    SECTION("rank-nullity and double complement on random 2-planes") {
        auto g = h2n::testing::rng(99);
        for (int t = 0; t < 20; ++t) {
            Mat b(q.dim(), 2);
            b.col(0) = random_vec(g, q.dim());
            b.col(1) = random_vec(g, q.dim());
            const Subspace s{b};
            const Subspace c = orth_complement(q, s);
            REQUIRE(c.dim() == q.n + 1);
            const Subspace cc = orth_complement(q, c);
            REQUIRE(cc.dim() == 2);
            // cc spans the same plane as s
            Eigen::JacobiSVD<Mat> svd(cc.basis, Eigen::ComputeThinU | Eigen::ComputeThinV);
            for (int i = 0; i < 2; ++i) {
                const Vec x = s.basis.col(i);
                const Vec proj = cc.basis * svd.solve(x);
                CHECK((x - proj).norm() < 1e-9 * x.norm());
            }
        }
    }
    SECTION("signature additivity for non-degenerate subspaces") {
        auto g = h2n::testing::rng(7);
        for (int t = 0; t < 20; ++t) {
            Mat b(q.dim(), 2);
            b.col(0) = random_vec(g, q.dim());
            b.col(1) = random_vec(g, q.dim());
            const Subspace s{b};
            const Signature sig = signature(q, s);
            if (sig.null != 0) continue;
            const Signature cs = signature(q, orth_complement(q, s));
            CHECK(sig.pos + cs.pos == 2);
            CHECK(sig.neg + cs.neg == q.n + 1);
            CHECK(cs.null == 0);
        }
    }
}

TEST_CASE("SO_0 classification") {
    QForm q{2};
    const int d = q.dim();
    CHECK(so0_classify(q, Mat::Identity(d, d)) == So0Verdict::yes);

    SECTION("det 1 but positive 2-plane orientation reversed") {
        Vec diag = Vec::Ones(d);
        diag(1) = -1.0;  // flips e2 ...
        diag(2) = -1.0;  // ... and one negative axis, so det stays 1
        const Mat m = diag.asDiagonal();
        CHECK(std::abs(m.determinant() - 1.0) < 1e-15);
        CHECK(so0_classify(q, m) == So0Verdict::in_o_not_so0);
    }
    SECTION("time-orientation-preserving reflections stay inside") {
        // two negative axes flipped: still in the identity component
        Vec diag = Vec::Ones(d);
        diag(2) = -1.0;
        diag(4) = -1.0;
        CHECK(so0_classify(q, Mat(diag.asDiagonal())) == So0Verdict::yes);
    }
    SECTION("does not preserve q") {
        Vec diag = Vec::Ones(d);
        diag(0) = 2.0;
        CHECK(so0_classify(q, Mat(diag.asDiagonal())) == So0Verdict::no);
    }
    SECTION("closure under products") {
        auto g = h2n::testing::rng(3);
        for (int t = 0; t < 10; ++t) {
            Mat m = Mat::Identity(d, d);
            for (int k = 0; k < 8; ++k) m = m * random_so0(g, q);
            CHECK(so0_classify(q, m, 1e-9) == So0Verdict::yes);
        }
    }
}

TEST_CASE("q-adjoint inverse") {
    QForm q{2};
    auto g = h2n::testing::rng(11);
    for (int t = 0; t < 10; ++t) {
        const Mat m = random_so0(g, q);
        const Mat mi = q.adjoint_inverse(m);
        CHECK((m * mi - Mat::Identity(q.dim(), q.dim())).cwiseAbs().maxCoeff() < 1e-12);
    }
}
