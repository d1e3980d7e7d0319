#pragma once

// Vertical-line probes of zeta: sampled segment spectra with certified
// zeros, quasi-invertibility verdicts, running-infimum envelopes over a
// growing horizon, and strip-wide scan tables with a left/right
// asymmetry summary.
//
// Every verdict produced here is a finite-horizon observation.  A scan
// up to height T can certify the presence of a zero, never the absence
// of all zeros beyond T; the names (UpToT, SoFar) carry that caveat.

#include <complex>
#include <utility>
#include <vector>

#include "zetastring/errors.hpp"
#include "zetastring/zeta.hpp"

namespace zst {

// One sample zeta(c + it) on a vertical segment.
struct LineSample {
    double t = 0.0;
    cplx value;
};

// A sampled vertical segment [c - iT, c + iT].
//
// Conjugate symmetry zeta(conj s) = conj zeta(s) makes the lower half
// of the segment redundant: samples cover t in [t_start, T] with
// t_start = 0, or 1e-3 when the pole neighborhood is excluded, and the
// minimum modulus over the stored half equals the minimum over the
// full segment.
//
// min_modulus is the smallest |zeta| over the samples, refined by
// golden-section minimization around the minimal sample (and around
// every certified zero); argmin_t is where it was attained.  zeros
// holds certified ordinates in [t_start, T]; when nonempty,
// min_modulus sits below 1e-6.  zero_warning propagates the finder's
// flag for candidates that resisted certification.
struct LineScan {
    double c = 0.0;
    double T = 0.0;
    double step = 0.0;
    std::vector<LineSample> samples;
    double min_modulus = 0.0;
    double argmin_t = 0.0;
    std::vector<double> zeros;
    bool zero_warning = false;
    bool pole_excluded = false;
};

// Sample zeta on the segment [c - iT, c + iT] at the given step (plus
// the exact endpoint T), refine the minimal modulus, and certify zeros.
// At c = 1 the segment crosses the pole of zeta: pass
// exclude_pole_nbhd = true to start the scan at t = 1e-3 (reported via
// pole_excluded), otherwise PoleOnSegment is thrown.  The exclusion
// flag is honored at any c.  T and step must be positive (DomainError).
LineScan truncated_spectrum(double c, double T, double step,
                            bool exclude_pole_nbhd = false);

enum class QuasiVerdict { QuasiInvertibleUpToT, NotQuasiInvertible };

// NotQuasiInvertible exactly when a certified zero lies on the segment
// [c - iT, c + iT] (scanned at the default step 0.05); otherwise
// QuasiInvertibleUpToT, explicitly a statement about this T only.
QuasiVerdict quasi_invertibility(double c, double T);

enum class EnvelopeTrend { BoundedAwayFromZeroSoFar, ApproachingZero };

// Running infimum of |zeta(c + it)| over a growing horizon.
//
// envelope[k] = (T_k, inf over 0 <= t <= T_k), nonincreasing in k by
// construction; b_lower[k] = (T_k, envelope[k]^2), the matching lower
// bound for the nonnegative multiplier |zeta|^2.  zeros holds the
// certified ordinates up to the last horizon.
//
// verdict_hint is a trend label, not a theorem: ApproachingZero when a
// zero was certified or when the envelope dropped by more than 5%
// between the half-horizon schedule point and the last one; otherwise
// BoundedAwayFromZeroSoFar.
struct InvertibilityReport {
    double c = 0.0;
    std::vector<std::pair<double, double>> envelope;
    std::vector<std::pair<double, double>> b_lower;
    std::vector<double> zeros;
    EnvelopeTrend verdict_hint = EnvelopeTrend::BoundedAwayFromZeroSoFar;
};

// Scan at step 0.05 over [0, max T_schedule], bucketed by the schedule
// points.  Requires 0 < c < 1 and a strictly increasing positive
// schedule (DomainError).
InvertibilityReport invertibility_probe(double c,
                                        const std::vector<double>& T_schedule);

// One row of a strip scan: the segment [c - iT, c + iT] reduced to its
// refined minimal modulus, certified zero count, and verdict.
struct ScanRow {
    double c = 0.0;
    double min_modulus = 0.0;
    int zero_count = 0;
    QuasiVerdict verdict = QuasiVerdict::QuasiInvertibleUpToT;
};

// Mirror pair (c, 1 - c) with the minima on both lines, c_left < 1/2.
struct AsymmetryPair {
    double c_left = 0.0;
    double c_right = 0.0;
    double min_left = 0.0;
    double min_right = 0.0;
};

// Strip scan at height T: one row per grid point (sorted by c), plus
// the asymmetry summary pairing each c < 1/2 with its mirror 1 - c
// whenever both lie on the grid.  Every grid point must be inside
// (0, 1) (DomainError); rows are computed at the default step 0.05.
struct ScanTable {
    double T = 0.0;
    std::vector<ScanRow> rows;
    std::vector<AsymmetryPair> asymmetry;
};

ScanTable rh_scan(const std::vector<double>& c_grid, double T);

}  // namespace zst
