#include "zetastring/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "zetastring/detail/euler_maclaurin.hpp"

namespace zst {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long long kMaxDirectTerms = 1LL << 21;
constexpr long long kMoebiusCap = 1LL << 26;

// Round-off floor of an N-term oscillatory partial sum, calibrated so it
// stays above the observed double-precision error up to |Im(s)| ~ 2500.
double roundoff_floor(long long n_terms) {
    return 5e-16 * static_cast<double>(n_terms);
}

// zeta on Re(s) > 0: direct sum + Euler-Maclaurin tail, doubling the
// direct term count until the truncation bound certifies the target.
cplx zeta_positive(const ZetaEvaluator& ev, cplx s, double* achieved_bound) {
    const int q = ev.em_order;
    long long N = std::max<long long>(ev.series_cutoff, 16);
    for (;;) {
        double bound = 0.0;
        const cplx value = detail::zeta_em_fixed(N, s, q, &bound);
        if (bound <= ev.target_abs_error) {
            if (achieved_bound) *achieved_bound = std::max(bound, roundoff_floor(N));
            return value;
        }
        if (N >= kMaxDirectTerms) {
            throw AccuracyNotReached(bound, ev.target_abs_error);
        }
        N *= 2;
    }
}

using detail::gl16;

// integral of t^(-s) over [a, b] by composite GL16; the number of panels
// scales with |s| because derivatives of t^(-s) grow like |s|^k.
cplx integrate_power(cplx s, double a, double b) {
    const int panels = std::max(1, static_cast<int>(std::ceil((2.0 + std::abs(s)) / 6.0)));
    const double hp = (b - a) / panels;
    cplx acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * hp;
        const double mid = lo + 0.5 * hp;
        for (const auto& [x, w] : gl16()) {
            const double t = mid + 0.5 * hp * x;
            acc += w * std::exp(-s * std::log(t));
        }
    }
    return acc * (0.5 * hp);
}

// Winding number of zeta(s) around the rectangle centered at c + i*t0
// with half-width w, by accumulating argument increments along 32 points
// per side, subdividing whenever a step turns by more than pi/2.
// Returns the rounded integer count, or -999 when subdivision bottoms
// out (certification failure).
struct WindingAccumulator {
    const ZetaEvaluator& ev;
    bool failed = false;

    double walk(cplx s_from, cplx s_to, cplx f_from, cplx f_to, int depth) {
        const double d = std::arg(f_to / f_from);
        if (std::abs(d) <= kPi / 2.0) return d;
        if (depth >= 24) {
            failed = true;
            return d;
        }
        const cplx s_mid = 0.5 * (s_from + s_to);
        const cplx f_mid = zeta(ev, s_mid);
        return walk(s_from, s_mid, f_from, f_mid, depth + 1) +
               walk(s_mid, s_to, f_mid, f_to, depth + 1);
    }
};

int winding_number(const ZetaEvaluator& ev, double c, double t0, double w) {
    const cplx corners[4] = {
        {c - w, t0 - w}, {c + w, t0 - w}, {c + w, t0 + w}, {c - w, t0 + w}};
    const int per_side = 32;
    std::vector<cplx> pts;
    pts.reserve(4 * per_side);
    for (int side = 0; side < 4; ++side) {
        const cplx from = corners[side];
        const cplx to = corners[(side + 1) % 4];
        for (int k = 0; k < per_side; ++k) {
            pts.push_back(from + (to - from) * (static_cast<double>(k) / per_side));
        }
    }
    std::vector<cplx> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = zeta(ev, pts[i]);

    WindingAccumulator acc{ev};
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::size_t j = (i + 1) % pts.size();
        total += acc.walk(pts[i], pts[j], vals[i], vals[j], 0);
    }
    if (acc.failed) return -999;
    return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

// Bisection root of component(zeta(c+it)) over [lo, hi]; requires a sign
// change.  Returns the root location in t.
template <typename Component>
double bisect_component(const ZetaEvaluator& ev, double c, double lo, double hi,
                        Component comp) {
    double flo = comp(zeta(ev, cplx(c, lo)));
    for (int iter = 0; iter < 80 && hi - lo > 1e-11; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = comp(zeta(ev, cplx(c, mid)));
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Golden-section minimum of |zeta(c+it)| over [lo, hi].
std::pair<double, double> golden_min(const ZetaEvaluator& ev, double c, double lo,
                                     double hi) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = std::abs(zeta(ev, cplx(c, x1)));
    double f2 = std::abs(zeta(ev, cplx(c, x2)));
    while (b - a > 1e-10) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = std::abs(zeta(ev, cplx(c, x1)));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = std::abs(zeta(ev, cplx(c, x2)));
        }
    }
    const double t = 0.5 * (a + b);
    return {t, std::abs(zeta(ev, cplx(c, t)))};
}

}  // namespace

ZetaEvaluator::ZetaEvaluator(int cutoff, int order, double target)
    : series_cutoff(cutoff), em_order(order), target_abs_error(target) {
    if (series_cutoff < 10) {
        throw DomainError("series_cutoff must be at least 10");
    }
    if (em_order < 0 || em_order > 30) {
        throw DomainError("em_order must lie in [0, 30] (Bernoulli growth bound)");
    }
    if (!(target_abs_error > 0.0)) {
        throw DomainError("target_abs_error must be positive");
    }
}

cplx zeta(const ZetaEvaluator& ev, cplx s, double* achieved_bound) {
    if (std::abs(s - 1.0) < 1e-12) throw PoleAtOne(s);
    if (s.real() > 0.0) {
        return zeta_positive(ev, s, achieved_bound);
    }
    // Reflection: zeta(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s),
    // with Re(1-s) >= 1 handled by the direct branch.  Any 2*pi*i branch
    // ambiguity in lgamma cancels inside exp of the difference.
    double inner_bound = 0.0;
    const cplx z1 = zeta_positive(ev, 1.0 - s, &inner_bound);
    const cplx chi = std::exp((s - 0.5) * std::log(kPi) +
                              detail::lgamma_complex(0.5 * (1.0 - s)) -
                              detail::lgamma_complex(0.5 * s));
    const cplx value = chi * z1;
    if (achieved_bound) {
        *achieved_bound = inner_bound * std::abs(chi) + 2e-14 * std::abs(value);
    }
    return value;
}

cplx zeta_via_integral(cplx s, double quad_cutoff) {
    if (std::abs(s - 1.0) < 1e-12) throw PoleAtOne(s);
    if (s.real() <= 0.0) {
        throw DomainError("zeta_via_integral requires Re(s) > 0");
    }
    const long long N0 =
        std::clamp(static_cast<long long>(quad_cutoff), 2LL, 1LL << 20);

    // 1/(s-1) + sum over unit intervals [n, n+1) of (n^(-s) - integral of
    // t^(-s)); the floor factor is constant on each interval, so the
    // integrand is smooth there and GL quadrature applies cleanly.
    cplx acc = 1.0 / (s - 1.0);
    for (long long n = 1; n < N0; ++n) {
        const double dn = static_cast<double>(n);
        acc += std::exp(-s * std::log(dn)) - integrate_power(s, dn, dn + 1.0);
    }

    // Analytic continuation of the remaining integral: subtracting the
    // plain power integral from the tail sum leaves N0^(-s)/2 plus the
    // Bernoulli corrections, with the same certified remainder bound.
    constexpr int kTailOrder = 8;
    constexpr double kTailTolerance = 1e-9;
    double bound = 0.0;
    const double dN0 = static_cast<double>(N0);
    const cplx tail = detail::em_tail(dN0, s, kTailOrder, &bound) -
                      std::exp((1.0 - s) * std::log(dN0)) / (s - 1.0);
    if (bound > kTailTolerance) {
        throw TailNotNegligible(bound, kTailTolerance);
    }
    return acc + tail;
}

cplx xi(const ZetaEvaluator& ev, cplx s) {
    if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12) {
        throw DomainExcluded(s);
    }
    return std::exp(-0.5 * s * std::log(kPi) + detail::lgamma_complex(0.5 * s)) *
           zeta(ev, s);
}

MoebiusTable moebius(long long limit) {
    if (limit < 1) throw DomainError("moebius limit must be at least 1");
    if (limit > kMoebiusCap) throw TableTooSmall(limit, kMoebiusCap);

    MoebiusTable table;
    table.limit = limit;
    table.values.assign(static_cast<std::size_t>(limit), 1);
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (long long p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (long long k = p; k <= limit; k += p) {
            if (k > p) composite[static_cast<std::size_t>(k)] = true;
            table.values[static_cast<std::size_t>(k - 1)] =
                static_cast<std::int8_t>(-table.values[static_cast<std::size_t>(k - 1)]);
        }
        if (p <= limit / p) {
            const long long p2 = p * p;
            for (long long k = p2; k <= limit; k += p2) {
                table.values[static_cast<std::size_t>(k - 1)] = 0;
            }
        }
    }
    return table;
}

cplx euler_product_partial(const ZetaEvaluator& ev, cplx s, long long prime_bound) {
    (void)ev;  // the product needs no series machinery, only the domain contract
    if (s.real() <= 1.0) {
        throw DomainError("euler_product_partial requires Re(s) > 1");
    }
    cplx prod = 1.0;
    for (long long p : detail::primes_up_to(prime_bound)) {
        prod /= 1.0 - std::exp(-s * std::log(static_cast<double>(p)));
    }
    return prod;
}

ZeroScan find_zeros_on_line(const ZetaEvaluator& ev, double c, double t_min,
                            double t_max, double step) {
    if (!(step > 0.0) || !(t_max > t_min)) {
        throw DomainError("find_zeros_on_line requires t_min < t_max and step > 0");
    }
    constexpr double kTrigger = 0.5;
    const long long ns =
        static_cast<long long>(std::ceil((t_max - t_min) / step)) + 1;

    std::vector<double> mod(static_cast<std::size_t>(ns));
    for (long long i = 0; i < ns; ++i) {
        const double t = std::min(t_min + static_cast<double>(i) * step, t_max);
        mod[static_cast<std::size_t>(i)] = std::abs(zeta(ev, cplx(c, t)));
    }

    ZeroScan result;
    for (long long i = 1; i + 1 < ns; ++i) {
        const double m = mod[static_cast<std::size_t>(i)];
        if (m >= kTrigger) continue;
        if (m > mod[static_cast<std::size_t>(i - 1)] ||
            m > mod[static_cast<std::size_t>(i + 1)]) {
            continue;
        }
        const double lo = t_min + static_cast<double>(i - 1) * step;
        const double hi = std::min(t_min + static_cast<double>(i + 1) * step, t_max);

        // A genuine zero has coinciding roots of Re and Im along the line.
        bool candidate = false;
        double t0 = 0.0;
        const cplx f_lo = zeta(ev, cplx(c, lo));
        const cplx f_hi = zeta(ev, cplx(c, hi));
        const bool re_change = (f_lo.real() <= 0.0) != (f_hi.real() <= 0.0);
        const bool im_change = (f_lo.imag() <= 0.0) != (f_hi.imag() <= 0.0);
        if (re_change && im_change) {
            const double root_re = bisect_component(
                ev, c, lo, hi, [](cplx v) { return v.real(); });
            const double root_im = bisect_component(
                ev, c, lo, hi, [](cplx v) { return v.imag(); });
            if (std::abs(root_re - root_im) < 1e-7) {
                candidate = true;
                t0 = 0.5 * (root_re + root_im);
            }
        }
        if (!candidate) {
            const auto [tg, mg] = golden_min(ev, c, lo, hi);
            if (mg < 1e-6) {
                candidate = true;
                t0 = tg;
            }
        }
        if (!candidate) continue;

        if (!result.ordinates.empty() &&
            std::abs(result.ordinates.back() - t0) < 1e-4) {
            continue;  // same zero seen from an adjacent sample
        }
        if (winding_number(ev, c, t0, 0.05) == 1) {
            result.ordinates.push_back(t0);
        } else {
            result.warning = true;
        }
    }
    return result;
}

}  // namespace zst
