#pragma once

// Riemann zeta engine: zeta(s) with certified truncation bounds, the
// completed function xi(s), a Moebius sieve, partial Euler products, and
// a vertical-line zero finder with argument-principle certification.
//
// All operations are pure; evaluators and tables are immutable after
// construction and safe to share across threads.

#include <complex>
#include <cstdint>
#include <vector>

#include "zetastring/errors.hpp"

namespace zst {

using cplx = std::complex<double>;

// Evaluation configuration.
//
//   series_cutoff    starting number of direct terms (>= 10); the engine
//                    doubles it until the truncation bound certifies
//                    target_abs_error, up to an internal cap of 2^21.
//   em_order         number of Bernoulli correction terms, 0..30.
//   target_abs_error requested absolute error.  Certified for the
//                    truncation; double-precision round-off adds about
//                    5e-16 per direct term on top, which stays below
//  	             1e-12 for |Im(s)| <= 100 and degrades gracefully
//                    above (reported, not certified).
struct ZetaEvaluator {
    int series_cutoff = 64;
    int em_order = 15;
    double target_abs_error = 1e-10;

    ZetaEvaluator() = default;
    ZetaEvaluator(int cutoff, int order, double target);
};

// zeta(s), s != 1.  Direct series plus Euler-Maclaurin tail for
// Re(s) > 0; reflection through the functional equation
// zeta(s) = pi^(s-1/2) Gamma((1-s)/2)/Gamma(s/2) zeta(1-s) for Re(s) <= 0.
// Throws PoleAtOne when |s-1| < 1e-12, AccuracyNotReached when the
// truncation bound cannot be certified at the configured order.
// If achieved_bound is non-null it receives the certified truncation
// bound combined with the round-off floor estimate.
cplx zeta(const ZetaEvaluator& ev, cplx s, double* achieved_bound = nullptr);

// Independent evaluation path on Re(s) > 0:
//
//   zeta(s) = 1/(s-1) + integral_1^inf ([t]^(-s) - t^(-s)) dt,
//
// by per-interval Gauss-Legendre quadrature of the integrand up to
// quad_cutoff whole intervals, plus the analytic tail of the integral
// with a certified remainder bound.  Throws PoleAtOne, DomainError when
// Re(s) <= 0, TailNotNegligible when the tail remainder at quad_cutoff
// exceeds the fixed internal tolerance 1e-9.
cplx zeta_via_integral(cplx s, double quad_cutoff);

// xi(s) = pi^(-s/2) Gamma(s/2) zeta(s); satisfies xi(s) = xi(1-s).
// Gamma is computed internally by a Lanczos rational approximation with
// at least 12 correct digits on the tested domain.  Throws
// DomainExcluded for s within 1e-12 of 0 or 1.
cplx xi(const ZetaEvaluator& ev, cplx s);

// Moebius function table over 1..limit.
struct MoebiusTable {
    long long limit = 0;
    std::vector<std::int8_t> values;  // values[n-1] = mu(n)

    int mu(long long n) const { return values[static_cast<std::size_t>(n - 1)]; }
};

// Sieve mu(1..limit).  The cap 2^26 keeps the table under 64 MiB;
// requests beyond it throw TableTooSmall.
MoebiusTable moebius(long long limit);

// Partial Euler product prod_{p <= prime_bound} (1 - p^(-s))^(-1).
// Requires Re(s) > 1 (throws DomainError otherwise).
cplx euler_product_partial(const ZetaEvaluator& ev, cplx s, long long prime_bound);

// Result of a vertical-line zero scan.
//
// warning is set when a refined candidate looked like a zero (the real-
// and imaginary-part bisection roots agreed, or the refined modulus fell
// below 1e-6) yet the winding-number count on the surrounding rectangle
// failed to certify it.  Minima that merely dip below the scan trigger
// without producing an agreeing root pair are ordinary non-zero minima
// and set no flag.
struct ZeroScan {
    std::vector<double> ordinates;
    bool warning = false;
};

// Certified zeros of zeta(c + it) for t in [t_min, t_max].  Scans
// |zeta| at the given step, refines sub-trigger minima by bisection on
// the real and imaginary parts, and confirms each candidate by an
// argument-principle winding count of 1 on a rectangle of half-width
// 0.05 (32 contour points per side, adaptively subdivided).  Returned
// ordinates are accurate to well within 1e-6.
ZeroScan find_zeros_on_line(const ZetaEvaluator& ev, double c, double t_min,
                            double t_max, double step = 0.05);

}  // namespace zst
