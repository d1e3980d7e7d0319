#pragma once

// Discretization of the weighted Hilbert space H_c = L^2(R, e^{-2ct} dt)
// and of the arithmetic operators acting on it: the shift group, the
// quantized Dirichlet sum a f = sum_n f(t - log n), its Moebius inverse,
// the Euler product truncation, the resolvent of (d/dt - 1), the
// analytically continued operator valid for 0 < c < 1, and a Fourier
// multiplier oracle used to cross-check all of them.
//
// Functions live on a uniform grid over a finite window [t_min, t_max]
// and carry a compact support interval; samples are the authoritative
// data and every operator acts on the piecewise-linear representative
// of its input.  GridFunctions are immutable values: operators return
// new ones and never mutate their input, so concurrent use is safe.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "zetastring/errors.hpp"
#include "zetastring/zeta.hpp"

namespace zst {

// Uniform grid on [t_min, t_max] with the H_c weight attached.
//
//   n_points  power of two, >= 256 (the multiplier oracle needs a
//             radix-2 transform; the floor keeps quadrature honest).
//
// Quadrature weight at node i is e^{-2c t_i} h with the two window
// endpoints halved (trapezoid rule).
struct WeightedGrid {
    double c = 1.0;
    double t_min = 0.0;
    double t_max = 1.0;
    int n_points = 256;

    double step() const { return (t_max - t_min) / (n_points - 1); }
    double node(int i) const { return t_min + step() * i; }
};

// Validates and builds a grid: t_min < t_max, c >= 0, n_points a power
// of two and at least 256.  Throws DomainError otherwise.
WeightedGrid make_grid(double c, double t_min, double t_max, int n_points);

// Point evaluator backing a GridFunction.  The base implementation is
// linear interpolation of the samples, exactly zero outside the support
// interval; operator results substitute composed closures so that
// quantized sums of quantized sums telescope exactly (see
// apply_dirichlet / apply_moebius_inverse).
struct PointEvaluator {
    virtual ~PointEvaluator() = default;
    virtual cplx operator()(double t) const = 0;
};

// A sampled function with compact support [support_a, support_b] inside
// the grid window.  Immutable after construction.
//
// overflow / lost_tail_bound: a quantized sum has an image extending
// past t_max; the samples inside the window are still exact, the flag
// records that truncation happened, and lost_tail_bound bounds the
// weighted norm of the discarded tail (finite for c > 1, +inf
// otherwise, 0 when nothing was cut).
struct GridFunction {
    WeightedGrid grid;
    std::vector<cplx> samples;
    double support_a = 0.0;
    double support_b = 0.0;
    bool overflow = false;
    double lost_tail_bound = 0.0;
    std::shared_ptr<const PointEvaluator> eval;

    // Value of the function at an arbitrary point of the window;
    // exactly zero outside [support_a, support_b].
    cplx value_at(double t) const;
};

// Wraps raw samples.  Requires samples.size() == n_points and
// |samples| <= 1e-14 at every node outside [support_a, support_b]
// (DomainError otherwise; compact support is an invariant, not a hint).
GridFunction make_grid_function(const WeightedGrid& grid,
                                std::vector<cplx> samples,
                                double support_a, double support_b);

// Smooth test bump: Gaussian core exp(-z^2/2), z = (t - center)/width,
// cut to [center - 4 width, center + 4 width] by quintic smoothstep
// ramps over the outermost width on each side.  The product vanishes
// with its first two derivatives at the support edges, which makes the
// trapezoid rule superconvergent on it and keeps its spectrum
// effectively band-limited.  Support must lie inside the window
// (DomainError otherwise).
GridFunction make_bump(const WeightedGrid& grid, double center,
                       double width, double amplitude);

// Deterministic family of `count` bumps with centers in
// [center_lo, center_hi], widths in [0.4, 0.8] and amplitudes in
// [0.5, 2.0], drawn from a SplitMix64 stream seeded with `seed`.
// Parameter ranges must keep every support inside the window.
std::vector<GridFunction> bump_family(const WeightedGrid& grid, int count,
                                      std::uint64_t seed,
                                      double center_lo, double center_hi);

// Trapezoid H_c norm of the samples.
double weighted_norm(const GridFunction& f);

// Translate by h_shift (linear interpolation between nodes).  The
// shifted support must stay inside the window: throws SupportOverflow
// if it leaves.  Norm law: ||shift(f,h)||_c = e^{-hc} ||f||_c up to
// quadrature error.
GridFunction shift(const GridFunction& f, double h_shift);

// Quantized Dirichlet sum  (a f)(t) = sum_{n >= 1} f(t - log n).
// The sum is finite because f has compact support [a, b]: only
// n in [e^{t-b}, e^{t-a}] contribute.  The image extends past t_max
// for every t, so the result always carries the overflow flag; node
// values inside the window are exact.  Throws TableTooSmall when the
// support would need coefficients beyond n = 2^26.
GridFunction apply_dirichlet(const GridFunction& f);

// Truncated Euler product: composes, in increasing prime order, the
// factors  f |-> sum_{0 <= m <= m_max} f(t - m log p)  for p in
// `primes`.  Equivalent to the Dirichlet sum restricted to integers
// whose prime factors all lie in `primes` (with multiplicity capped by
// m_max).  An empty prime list is the identity.  `primes` must be
// strictly increasing primes, m_max >= 0 (DomainError otherwise).
GridFunction apply_euler_product(const GridFunction& f,
                                 const std::vector<long long>& primes,
                                 int m_max);

// Moebius-weighted sum  (a^{-1} f)(t) = sum_{n >= 1} mu(n) f(t - log n),
// the two-sided inverse of apply_dirichlet: composing the two in either
// order telescopes coefficient-wise to the identity, so the roundtrip
// is exact at the nodes whenever no translate was truncated away.
GridFunction apply_moebius_inverse(const GridFunction& f);

// Resolvent of the shifted generator: solves u' - u = g with the
// decay branch selected by the weight,
//
//   c > 1:  u(t) =  integral_{-inf}^{t} e^{t-tau} g(tau) dtau
//   c < 1:  u(t) = -integral_{t}^{inf}  e^{t-tau} g(tau) dtau
//
// (e^t lies in H_c exactly when c > 1, so that branch keeps the decay
// direction the weight can absorb; the two branches differ by a
// multiple of e^t).  Cell integrals treat g as linear per cell and are
// evaluated in closed form, so the truncation at the support boundary
// is exact.  Throws CEqualsOne when |c - 1| < 1e-6.
GridFunction resolvent_shift_minus_one(const GridFunction& g);

// Analytically continued operator
//
//   (a f)(t) = (resolvent term) + sum_{n=1}^{floor(tau_max)}
//              [ f(t - log n) - integral_n^{n+1} f(t - log tau) dtau ].
//
// The tau-integral over (0,1), where floor(tau) = 0, is omitted: its
// u-substitution is exactly the decaying-branch resolvent kernel, so
// keeping it would count the resolvent term twice.  Each cell integral
// is evaluated in closed form on the piecewise-linear representative,
// so for tau_max >= e^{t_max - support_a} the quadrature is exact and
// the omitted tail is empty.  Otherwise a Lipschitz tail bound is
// computed; it is returned through *tail_bound when given and the call
// throws TailNotNegligible when it exceeds 1e-9 * max(1, sup|f|).
// Throws CEqualsOne when |c - 1| < 1e-6.
GridFunction apply_continued(const GridFunction& f, double tau_max,
                             double* tail_bound = nullptr);

// Diagonal Fourier multipliers used as an independent oracle.
//   Zeta         zeta(c + i omega)
//   Xi           xi(c + i omega)
//   XiReflected  xi(1 - c - i omega)   (equal to Xi when xi(s)=xi(1-s))
//   ZetaInverse  1 / zeta(c + i omega) (cancellation checks; caller
//                must keep the band away from zeros of zeta)
enum class MultiplierKind { Zeta, Xi, XiReflected, ZetaInverse };

// Conjugates f to u = e^{-ct} f, applies the multiplier in the discrete
// Fourier basis, and conjugates back.  The transform is taken on the
// window zero-padded to four times its length, so image tails that
// leave the window decay inside the pad instead of wrapping onto the
// data; the result is reported on the original window.
// PadInsufficient is raised when the precondition fails measurably:
//   - the input carries more than 1e-10 of its squared mass in the
//     outermost 16 nodes of the window on either side (the support
//     needs room before it meets the boundary), or
//   - after multiplication, the central third of the pad still holds
//     more than 1e-10 of the squared mass: that residue is exactly the
//     mass that would have wrapped, so the window is too short for the
//     multiplier's spread at this c.  Kernel tails decay exponentially
//     at the distance from Re s = c to the symbol's nearest pole: s = 1
//     for the zeta kinds, s = 0 and s = 1 for the xi kinds.
// The multiplier is evaluated only on frequencies carrying more than
// 1e-13 of the peak spectral amplitude; bins below that sit under the
// FFT rounding floor and are zeroed instead of amplified.
GridFunction apply_multiplier_oracle(const GridFunction& f,
                                     MultiplierKind kind);

// CSV exchange, one "t,Re f,Im f" row per node ("%.17g", exact
// round-trip).  import_csv infers the support from the outermost rows
// with |f| > 1e-14 and requires exactly n_points rows matching the
// grid nodes.
void export_csv(const GridFunction& f, std::ostream& out);
GridFunction import_csv(const WeightedGrid& grid, std::istream& in);

}  // namespace zst
