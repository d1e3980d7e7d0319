#include "zetastring/rh_probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zst {

namespace {

constexpr double kDefaultStep = 0.05;
constexpr double kPoleGap = 1e-3;
constexpr double kGolden = 0.6180339887498948482;
constexpr double kTimeEps = 1e-12;

double modulus(const ZetaEvaluator& ev, double c, double t) {
    return std::abs(zeta(ev, cplx(c, t)));
}

// Golden-section minimum of |zeta(c + it)| over [lo, hi], converged to
// an interval of 1e-11.  |zeta| is smooth and the bracket spans at most
// two scan steps, so unimodality holds locally around the sampled dip.
std::pair<double, double> golden_min(const ZetaEvaluator& ev, double c,
                                     double lo, double hi) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = modulus(ev, c, x1);
    double f2 = modulus(ev, c, x2);
    while (b - a > 1e-11) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = modulus(ev, c, x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = modulus(ev, c, x2);
        }
    }
    const double tm = 0.5 * (a + b);
    return {tm, modulus(ev, c, tm)};
}

// Refine around an interesting ordinate and fold the result into the
// running (min_modulus, argmin) pair.  The bracket is clamped to the
// scanned range so the minimum stays a statement about [t_lo, t_hi].
void refine_into(const ZetaEvaluator& ev, double c, double center, double step,
                 double t_lo, double t_hi, double& min_modulus,
                 double& argmin_t) {
    const double lo = std::max(t_lo, center - step);
    const double hi = std::min(t_hi, center + step);
    if (!(hi > lo)) return;
    const auto [tm, vm] = golden_min(ev, c, lo, hi);
    if (vm < min_modulus) {
        min_modulus = vm;
        argmin_t = tm;
    }
}

}  // namespace

LineScan truncated_spectrum(double c, double T, double step,
                            bool exclude_pole_nbhd) {
    if (!(T > 0.0) || !(step > 0.0))
        throw DomainError("segment scan requires positive T and step");
    if (std::abs(c - 1.0) < 1e-12 && !exclude_pole_nbhd) throw PoleOnSegment();

    const double t_start = exclude_pole_nbhd ? kPoleGap : 0.0;
    const ZetaEvaluator ev;

    LineScan scan;
    scan.c = c;
    scan.T = T;
    scan.step = step;
    scan.pole_excluded = exclude_pole_nbhd;

    const auto n = static_cast<long long>(
        std::floor((T - t_start) / step + kTimeEps));
    scan.samples.reserve(static_cast<std::size_t>(n) + 2);
    for (long long k = 0; k <= n; ++k) {
        const double t = t_start + static_cast<double>(k) * step;
        scan.samples.push_back({t, zeta(ev, cplx(c, t))});
    }
    if (scan.samples.back().t < T - kTimeEps)
        scan.samples.push_back({T, zeta(ev, cplx(c, T))});

    std::size_t imin = 0;
    double vmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < scan.samples.size(); ++i) {
        const double v = std::abs(scan.samples[i].value);
        if (v < vmin) {
            vmin = v;
            imin = i;
        }
    }
    scan.min_modulus = vmin;
    scan.argmin_t = scan.samples[imin].t;
    refine_into(ev, c, scan.samples[imin].t, step, t_start, T,
                scan.min_modulus, scan.argmin_t);

    ZeroScan zs = find_zeros_on_line(ev, c, t_start, T, step);
    scan.zeros = std::move(zs.ordinates);
    scan.zero_warning = zs.warning;
    // A certified zero is the global minimum; refining around each one
    // keeps the invariant "zeros nonempty implies min_modulus < 1e-6"
    // independent of which dip the sample pass happened to pick.
    for (const double z : scan.zeros)
        refine_into(ev, c, z, step, t_start, T, scan.min_modulus,
                    scan.argmin_t);

    return scan;
}

QuasiVerdict quasi_invertibility(double c, double T) {
    const LineScan scan = truncated_spectrum(c, T, kDefaultStep);
    return scan.zeros.empty() ? QuasiVerdict::QuasiInvertibleUpToT
                              : QuasiVerdict::NotQuasiInvertible;
}

InvertibilityReport invertibility_probe(double c,
                                        const std::vector<double>& T_schedule) {
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("invertibility probe requires 0 < c < 1");
    if (T_schedule.empty()) throw DomainError("empty horizon schedule");
    for (std::size_t i = 0; i < T_schedule.size(); ++i) {
        if (!(T_schedule[i] > 0.0) ||
            (i > 0 && !(T_schedule[i] > T_schedule[i - 1])))
            throw DomainError(
                "horizon schedule must be positive and strictly increasing");
    }

    const ZetaEvaluator ev;
    const double t_max = T_schedule.back();

    // One absolute sample grid over [0, t_max]; the schedule points only
    // bucket it, so a longer schedule never perturbs earlier samples.
    std::vector<std::pair<double, double>> samples;
    const auto n =
        static_cast<long long>(std::floor(t_max / kDefaultStep + kTimeEps));
    samples.reserve(static_cast<std::size_t>(n) + 2);
    for (long long k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) * kDefaultStep;
        samples.emplace_back(t, modulus(ev, c, t));
    }
    if (samples.back().first < t_max - kTimeEps)
        samples.emplace_back(t_max, modulus(ev, c, t_max));

    ZeroScan zs = find_zeros_on_line(ev, c, 0.0, t_max, kDefaultStep);

    InvertibilityReport rep;
    rep.c = c;
    rep.zeros = std::move(zs.ordinates);

    double running = std::numeric_limits<double>::infinity();
    double arg_unused = 0.0;
    std::size_t si = 0;
    std::size_t zi = 0;
    for (const double Tk : T_schedule) {
        // minimal sample of this bucket
        double bmin = std::numeric_limits<double>::infinity();
        double bargt = 0.0;
        for (; si < samples.size() && samples[si].first <= Tk + kTimeEps; ++si) {
            if (samples[si].second < bmin) {
                bmin = samples[si].second;
                bargt = samples[si].first;
            }
        }
        if (bmin < std::numeric_limits<double>::infinity()) {
            running = std::min(running, bmin);
            refine_into(ev, c, bargt, kDefaultStep, 0.0, Tk, running,
                        arg_unused);
        }
        for (; zi < rep.zeros.size() && rep.zeros[zi] <= Tk + kTimeEps; ++zi)
            refine_into(ev, c, rep.zeros[zi], kDefaultStep, 0.0, Tk, running,
                        arg_unused);
        rep.envelope.emplace_back(Tk, running);
        rep.b_lower.emplace_back(Tk, running * running);
    }

    // Trend label: a certified zero settles it; otherwise compare the
    // last envelope value against the one at the largest schedule point
    // not beyond half the horizon (the first point when none exists).
    // A drop of more than 5% across that span counts as a downward trend.
    if (!rep.zeros.empty()) {
        rep.verdict_hint = EnvelopeTrend::ApproachingZero;
    } else if (T_schedule.size() >= 2) {
        std::size_t ref_idx = 0;
        for (std::size_t i = 0; i < T_schedule.size(); ++i)
            if (T_schedule[i] <= 0.5 * t_max) ref_idx = i;
        const double env_ref = rep.envelope[ref_idx].second;
        const double env_last = rep.envelope.back().second;
        rep.verdict_hint = env_last < 0.95 * env_ref
                               ? EnvelopeTrend::ApproachingZero
                               : EnvelopeTrend::BoundedAwayFromZeroSoFar;
    }
    return rep;
}

ScanTable rh_scan(const std::vector<double>& c_grid, double T) {
    if (c_grid.empty()) throw DomainError("empty scan grid");
    for (const double c : c_grid)
        if (!(c > 0.0 && c < 1.0))
            throw DomainError("scan grid point outside the open strip (0, 1)");

    std::vector<double> grid = c_grid;
    std::sort(grid.begin(), grid.end());

    ScanTable tab;
    tab.T = T;
    tab.rows.reserve(grid.size());
    for (const double c : grid) {
        const LineScan scan = truncated_spectrum(c, T, kDefaultStep);
        tab.rows.push_back({c, scan.min_modulus,
                            static_cast<int>(scan.zeros.size()),
                            scan.zeros.empty()
                                ? QuasiVerdict::QuasiInvertibleUpToT
                                : QuasiVerdict::NotQuasiInvertible});
    }

    for (const ScanRow& row : tab.rows) {
        if (row.c >= 0.5 - 1e-9) continue;
        const double mirror = 1.0 - row.c;
        for (const ScanRow& other : tab.rows) {
            if (std::abs(other.c - mirror) < 1e-9) {
                tab.asymmetry.push_back(
                    {row.c, other.c, row.min_modulus, other.min_modulus});
                break;
            }
        }
    }
    return tab;
}

}  // namespace zst
