#pragma once

// Complex dimensions of lattice self-similar strings: the pole set of the
// geometric zeta function, residues by contour quadrature, the fractal
// tube formula, the exact middle-thirds counting series, and the Riemann
// explicit formula for the weighted prime-power count.

#include <complex>
#include <vector>

#include "zetastring/errors.hpp"
#include "zetastring/fractal_string.hpp"

namespace zst {

// Pole set of a single-ratio lattice string: an arithmetic progression
// omega_n = D + i n p on the vertical line Re(s) = D, with the common
// residue of the closed-form zeta_L.
//
// The stored residue is the one at omega_0 = D.  It is shared by every
// pole exactly when the first length is an integer power of the ratio
// (true for the middle-thirds string and every string tested here);
// otherwise the residues share a modulus and rotate in phase.
struct ComplexDimensionSet {
    double D = 0.0;        // real part of every pole
    double p = 0.0;        // oscillatory period 2 pi / log(1/r)
    cplx residue;          // residue at omega_0
    int n_max = 0;         // symmetric window |n| <= n_max

    cplx pole(int n) const { return {D, static_cast<double>(n) * p}; }
};

// Poles omega_n = D + i n p, |n| <= n_max, of a self-similar string,
// with D = log m / log(1/r), p = 2 pi / log(1/r) and the analytic
// residue l1^D / (m r^D log(1/r)).  Throws NotSelfSimilar for the other
// kinds, DomainError for n_max < 1.
ComplexDimensionSet lattice_poles(const FractalString& S, int n_max);

// Residue of zeta_L at omega by 16-point circular contour quadrature of
// radius 1e-3.  Throws NotAPole when the contour integral magnitude is
// below 1e-8 (zeta_L regular at omega).
cplx residue_at(const FractalString& S, cplx omega);

// Truncated tube formula
//
//   V(eps) ~ sum_{|n| <= n_max} res * (2 eps)^(1-omega_n) / (omega_n (1-omega_n))
//          + 2 eps * zeta_L(0),
//
// real part returned.  The constant term is forced by consistency with
// the exact middle-thirds volume: dropping it misses the direct volume
// by exactly 2 eps.  For lattice strings the remainder vanishes, so the
// truncation error is only the tail of the pole sum.  Requires
// 0 < eps < l1/2 (the caller's contract; eps > 0 is checked).  The
// symmetric sum is real up to round-off; *imag_residual receives the
// leftover imaginary magnitude when non-null (expected < 1e-8).
double tube_formula_eval(const ComplexDimensionSet& dims, cplx zeta_L_at_0,
                         double eps, double* imag_residual = nullptr);

// Truncated counting series for the middle-thirds string,
//
//   N_L(x) ~ 1/(2 log 3) sum_{|n| <= n_max} x^omega_n / omega_n - 1,
//
// valid between jumps (which sit at integer powers of 3).  Requires
// x > 1; throws NearJump when x is within 1e-3 of a power of 3.
double explicit_counting_geometric(double x, int n_max,
                                   double* imag_residual = nullptr);

// Spectral counterpart,
//
//   N_nu(x) ~ x + 1/(2 log 3) sum_{|n| <= n_max} zeta(omega_n) x^omega_n / omega_n
//           + 1/2,
//
// where the constant 1/2 = zeta(0) * zeta_L(0) closes the count-level
// identity (verified against direct enumeration; see the tests).  The
// spectral count jumps at multiples of 3; throws NearJump within 1e-3 of
// one, DomainError for x <= 1.  zeta(omega_n) values are cached across
// calls.  The truncated series resolves the count only up to
// x of order n_max * p / 2: beyond that the partial sum undershoots the
// staircase no matter how the points are placed.
double explicit_counting_spectral(double x, int n_max,
                                  double* imag_residual = nullptr);

// Principal-value logarithmic integral Li(x) = PV int_0^x dt/log t,
// x > 0, |x - 1| >= 1e-10 (DomainError otherwise).  Composite
// Gauss-Legendre ladders graded toward the singularities at t = 0 and
// t = 1; absolute accuracy ~1e-10.
double logarithmic_integral(double x);

// Weighted prime-power count Pi(x) = sum_{p^k <= x} 1/k.
double weighted_prime_power_count(double x);

// Riemann's explicit formula for Pi(x):
//
//   Pi(x) ~ Li(x) - sum_rho [Li(x^rho) + Li(x^conj(rho))]
//         + int_x^inf dt / (t (t^2-1) log t) - log 2,
//
// truncated to the first num_zeros critical-line zero pairs.  Zero
// ordinates are taken from *zero_ordinates when given (they must hold at
// least num_zeros entries); otherwise the zero finder scans for them,
// which costs a few seconds per hundred zeros.  Li(x^rho) is evaluated
// as Ei(rho log x).  Requires x >= 2 away from prime powers
// (PrimePowerPoint within 1e-6 of one).
double riemann_explicit_formula(double x, int num_zeros,
                                const std::vector<double>* zero_ordinates = nullptr);

}  // namespace zst
