#pragma once

// Length spectrum L(w) = log(spectral radius), boundary maps from
// attracting/repelling eigenvectors, entropy estimation, domination ratios
// against a Fuchsian base, and the collar inequality.
//
// Lengths are class functions, so they are always computed on the cyclically
// reduced representative; eigenvectors of a dressed word u c u^-1 are
// recovered from those of c by applying rho(u).  Both choices keep the
// eigenproblems well conditioned for long words.

#include "h2n/representations.hpp"
#include "h2n/spaces.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <set>
#include <optional>

namespace h2n {

struct LengthResult {
    double value = 0.0;
    bool loxodromic = false;
};

namespace detail {
/// w = dressing . core . dressing^-1 with core cyclically reduced
inline void split_cyclic(const Word& w, Word& dressing, Word& core) {
    std::vector<int> pre;
    std::vector<int> ls = w.letters;
    while (ls.size() >= 2 && ls.front() == -ls.back()) {
        pre.push_back(ls.front());
        ls.erase(ls.begin());
        ls.pop_back();
    }
    dressing = Word{std::move(pre)};
    core = Word{std::move(ls)};
}

struct SortedModuli {
    double top = 0.0;
    double second = 0.0;
};

inline SortedModuli eigen_moduli_top2(const Mat& m) {
    Eigen::EigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
    Vec mods = es.eigenvalues().cwiseAbs();
    std::sort(mods.data(), mods.data() + mods.size(), std::greater<double>());
    return {mods(0), mods(1)};
}
}  // namespace detail

/// log of the spectral radius of rho(w); flagged non-loxodromic when the
/// radius sits at 1 or the top eigenvalue has no gap.  The tolerance must
/// sit above the representation's numerical noise: relator-trivial words
/// evaluate to I only up to the relator residual, which reaches ~1e-6 for
/// the irreducible SO(2,3) model.  Genuine geodesics are never shorter than
/// the systole (~2.26 here), so 1e-5 separates the two regimes safely.
inline LengthResult length(const Representation& rep, const Word& w, double tol = 1e-5) {
    if (w.empty()) return {0.0, false};
    Word dressing, core;
    detail::split_cyclic(w, dressing, core);
    if (core.empty()) return {0.0, false};
    const auto mods = detail::eigen_moduli_top2(rep_evaluate(rep, core));
    const bool lox = mods.top > 1.0 + tol && mods.top / mods.second > 1.0 + tol;
    return {std::log(mods.top), lox};
}

/// translation length of a hyperbolic Moebius word: 2 log((|tr|+sqrt(tr^2-4))/2)
inline LengthResult moebius_word_length(const MoebiusRep& j, const Word& w) {
    if (w.empty()) return {0.0, false};
    const Word core = cyclic_reduce(w);
    if (core.empty()) return {0.0, false};
    const Mat2 m = moebius_evaluate(j, core.letters);
    const double t = std::abs(m.trace());
    if (t <= 2.0 + 1e-12) return {0.0, false};
    return {2.0 * std::acosh(t / 2.0), true};
}

struct BoundaryPair {
    PointEin xi_plus;
    PointEin xi_minus;
    double gap = 0.0;  // ratio of top eigenvalue modulus to second
};

namespace detail {
/// attracting fixed line of a loxodromic matrix, refined by forward power
/// iterations from the eigensolver's candidate
inline Vec attracting_vector(const Mat& m, double tol) {
    Eigen::EigenSolver<Mat> es(m);
    int top = 0;
    for (int i = 1; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i)) > std::abs(es.eigenvalues()(top))) top = i;
    const auto lam = es.eigenvalues()(top);
    if (std::abs(lam.imag()) > tol * std::abs(lam))
        throw numerical_error("boundary_pair: top eigenvalue is not real");
    Vec v = es.eigenvectors().col(top).real();
    if (v.norm() < 1e-12) throw numerical_error("boundary_pair: degenerate eigenvector");
    v /= v.norm();
    for (int it = 0; it < 6; ++it) {
        v = m * v;
        v /= v.norm();
    }
    return v;
}
}  // namespace detail

/// xi(gamma_+) and xi(gamma_-): attracting/repelling isotropic eigenlines
inline BoundaryPair boundary_pair(const Representation& rep, const Word& w, double tol = 1e-8) {
    if (w.empty()) throw invariant_error("boundary_pair: empty word");
    Word dressing, core;
    detail::split_cyclic(w, dressing, core);
    if (core.empty()) throw invariant_error("boundary_pair: word is trivial after reduction");
    const QForm q = rep.form();
    const Mat m = rep_evaluate(rep, core);
    const auto mods = detail::eigen_moduli_top2(m);
    if (mods.top <= 1.0 + tol || mods.top / mods.second <= 1.0 + tol)
        throw numerical_error("boundary_pair: word is not loxodromic at tolerance");

    Vec plus = detail::attracting_vector(m, tol);
    Vec minus = detail::attracting_vector(q.adjoint_inverse(m), tol);
    if (!dressing.empty()) {
        const Mat u = rep_evaluate(rep, dressing);
        plus = u * plus;
        minus = u * minus;
    }
    BoundaryPair bp;
    bp.xi_plus = make_point_ein(q, plus, tol);
    bp.xi_minus = make_point_ein(q, minus, tol);
    bp.gap = mods.top / mods.second;
    if (std::abs(q.pair(bp.xi_plus.rep, bp.xi_minus.rep)) < tol)
        throw numerical_error("boundary_pair: degenerate attracting/repelling pair");
    return bp;
}

/// Attracting fixed points xi(gamma_+) over conjugacy representatives,
/// deduplicated at projective tolerance, in enumeration order.
inline std::vector<PointEin> limit_curve_samples(const Representation& rep, int maxlen,
                                                 std::size_t max_samples = SIZE_MAX,
                                                 double dedup_tol = 1e-8) {
    std::vector<PointEin> out;
    for (const Word& w : conjugacy_reps(Presentation{rep.genus}, maxlen)) {
        const BoundaryPair bp = boundary_pair(rep, w);
        bool dup = false;
        for (const PointEin& p : out)
            if (projective_distance(p.rep, bp.xi_plus.rep) < dedup_tol) {
                dup = true;
                break;
            }
        if (!dup) {
            out.push_back(bp.xi_plus);
            if (out.size() >= max_samples) break;
        }
    }
    return out;
}

struct DistanceLength {
    double value = 0.0;
    bool spacelike = true;
};

/// (1/N) d(x, rho(w)^N x); converges to length(rep, w) for x on the
/// invariant surface
inline DistanceLength length_via_distance(const Representation& rep, const Word& w,
                                          const PointH& x, int N, double tol = 1e-9) {
    if (w.empty() || N < 1) throw invariant_error("length_via_distance: need a word and N >= 1");
    const Mat m = rep_evaluate(rep, w);
    Vec y = x.rep;
    for (int i = 0; i < N; ++i) y = m * y;
    const double c = std::abs(rep.form().pair(x.rep, y));
    if (c <= 1.0 + tol) return {0.0, false};
    return {std::acosh(c) / N, true};
}

struct SpectrumEntry {
    Word word;
    double length = 0.0;
    bool loxodromic = false;
};

struct SpectrumReport {
    std::vector<SpectrumEntry> entries;  // in conjugacy_reps order
    int maxlen = 0;
    std::string provenance;
};

inline SpectrumReport compute_spectrum(const Representation& rep, int maxlen) {
    SpectrumReport rpt;
    rpt.maxlen = maxlen;
    rpt.provenance = rep.provenance.kind;
    for (const Word& w : conjugacy_reps(Presentation{rep.genus}, maxlen)) {
        const LengthResult lr = length(rep, w);
        rpt.entries.push_back({w, lr.value, lr.loxodromic});
    }
    return rpt;
}

struct EntropyEstimate {
    double h_hat = 0.0;
    std::vector<std::pair<double, std::size_t>> counts;  // (R, #{L <= R}) at each jump
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t excluded_non_loxodromic = 0;
};

/// Least-squares slope of log #{L <= R} against R.  The count is only
/// complete up to roughly the shortest length at the enumeration horizon:
/// beyond it, classes of longer words are missing.  The fit window is
/// [R_hi/2, R_hi] with R_hi that completeness cutoff (the spec's
/// "largest usable R-window"); small-R transients fall outside it.
inline EntropyEstimate entropy_estimate_from_lengths(std::vector<double> lengths,
                                                     double horizon_min_length,
                                                     std::size_t excluded) {
    if (lengths.size() < 50)
        throw invariant_error("entropy_estimate: fewer than 50 usable classes");
    std::sort(lengths.begin(), lengths.end());
    EntropyEstimate est;
    est.excluded_non_loxodromic = excluded;
    est.counts.reserve(lengths.size());
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (i + 1 == lengths.size() || lengths[i + 1] > lengths[i] + 1e-12)
            est.counts.emplace_back(lengths[i], i + 1);
    est.window_hi = std::min(horizon_min_length, lengths.back());
    est.window_lo = est.window_hi / 2.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t npts = 0;
    for (const auto& [r, cnt] : est.counts) {
        if (r < est.window_lo || r > est.window_hi) continue;
        const double x = r, y = std::log(static_cast<double>(cnt));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++npts;
    }
    if (npts < 5) throw invariant_error("entropy_estimate: window too empty to fit");
    const double denom = static_cast<double>(npts) * sxx - sx * sx;
    est.h_hat = (static_cast<double>(npts) * sxy - sx * sy) / denom;
    return est;
}

/// Completeness cutoff for the fit window: the shortest class at the
/// enumeration horizon that genuinely lives there.  Words at the horizon
/// that contain more than half of the relator are rewrites of shorter
/// classes (Dehn's algorithm) and are skipped; the count #{L <= R} is
/// complete below the minimum over the rest.
inline double entropy_horizon(const SpectrumReport& rpt, int maxlen, int genus = 2) {
    const Presentation pres{genus};
    double horizon = std::numeric_limits<double>::infinity();
    for (const SpectrumEntry& e : rpt.entries)
        if (e.loxodromic && e.word.size() == maxlen && e.length < horizon &&
            dehn_reduced(pres, e.word))
            horizon = e.length;
    return horizon;
}

inline EntropyEstimate entropy_estimate_from_report(const SpectrumReport& rpt, int maxlen) {
    std::vector<double> lengths;
    std::size_t excluded = 0;
    for (const SpectrumEntry& e : rpt.entries) {
        if (!e.loxodromic) {
            ++excluded;
            continue;
        }
        lengths.push_back(e.length);
    }
    return entropy_estimate_from_lengths(std::move(lengths), entropy_horizon(rpt, maxlen),
                                         excluded);
}

inline EntropyEstimate entropy_estimate(const Representation& rep, int maxlen) {
    return entropy_estimate_from_report(compute_spectrum(rep, maxlen), maxlen);
}

struct DominationReport {
    double min_ratio = 0.0;
    Word argmin;
    std::size_t compared = 0;
    std::size_t excluded_non_loxodromic = 0;
};

/// min over conjugacy representatives of L_rho(w) / L_j(w); non-loxodromic
/// words on either side are excluded and counted
inline DominationReport domination_report(const Representation& rho, const MoebiusRep& j,
                                          int maxlen) {
    DominationReport rpt;
    rpt.min_ratio = std::numeric_limits<double>::infinity();
    for (const Word& w : conjugacy_reps(Presentation{rho.genus}, maxlen)) {
        const LengthResult lr = length(rho, w);
        const LengthResult lj = moebius_word_length(j, w);
        if (!lr.loxodromic || !lj.loxodromic) {
            ++rpt.excluded_non_loxodromic;
            continue;
        }
        const double ratio = lr.value / lj.value;
        ++rpt.compared;
        if (ratio < rpt.min_ratio) {
            rpt.min_ratio = ratio;
            rpt.argmin = w;
        }
    }
    if (rpt.compared == 0) throw invariant_error("domination_report: no loxodromic words");
    return rpt;
}

struct CollarResult {
    double lhs = 0.0;
    bool pass = false;
};

/// sinh(L(w1)/2) sinh(L(w2)/2) > 1 for registered essentially intersecting
/// pairs; refuses unregistered pairs (no intersection-number algorithm)
inline CollarResult collar_check(const Representation& rep, const Word& w1, const Word& w2) {
    if (!essentially_intersecting(Presentation{rep.genus}, w1, w2))
        throw invariant_error("collar_check: pair not registered as essentially intersecting");
    const LengthResult l1 = length(rep, w1);
    const LengthResult l2 = length(rep, w2);
    if (!l1.loxodromic || !l2.loxodromic)
        throw numerical_error("collar_check: non-loxodromic generator");
    const double lhs = std::sinh(l1.value / 2) * std::sinh(l2.value / 2);
    return {lhs, lhs > 1.0};
}

/// n = 0 member of the Fuchsian locus: the SO_0(2,1) image of j itself
inline Representation fuchsian_so21(const MoebiusRep& j) {
    Representation rep;
    rep.n = 0;
    rep.genus = 2;
    for (const Mat2& g : j.gens) rep.gens.push_back(so21_of(g));
    rep.relator_residual = relator_residual_of(rep.form(), rep.gens, Presentation{2});
    rep.provenance.kind = "fuchsian_locus";
    rep.provenance.toledo = 2;
    rep.provenance.base = j;
    validate_representation(rep);
    return rep;
}

}  // namespace h2n
