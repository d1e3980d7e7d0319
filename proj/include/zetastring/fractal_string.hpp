#pragma once

// Fractal strings: bounded open subsets of the line identified with their
// nonincreasing sequence of interval lengths.  Provides the geometric zeta
// function, Minkowski dimension and content estimates, inner tube volumes,
// geometric/spectral counting functions, and the two-term Weyl fit.

#include <complex>
#include <cstdint>
#include <vector>

#include "zetastring/errors.hpp"

namespace zst {

using cplx = std::complex<double>;

enum class StringKind { Explicit, PowerLaw, SelfSimilar };

// A fractal string in one of three representations:
//
//   Explicit     a finite list of lengths, nonincreasing and positive.
//                Useful for tests; carries no asymptotics, so dimension-
//                dependent operations flag it as finite.
//   PowerLaw     lengths L * j^(-1/D), j = 1, 2, ...  with D in (0, 1);
//                the prototype Minkowski measurable string.
//   SelfSimilar  lengths r^(n-1) * l1 with multiplicity m^(n-1) (single
//                ratio, lattice case).  Summability needs m * r < 1.
//                The middle-thirds string is SelfSimilar(1/3, 2, 1/3).
//
// Values are immutable; construct through the factories, which validate.
struct FractalString {
    StringKind kind;

    std::vector<double> lengths;  // Explicit only

    double L = 0.0;  // PowerLaw scale
    double D = 0.0;  // PowerLaw exponent, in (0, 1)

    double r = 0.0;       // SelfSimilar ratio, in (0, 1)
    long long m = 0;      // SelfSimilar multiplicity base, >= 2
    double first_len = 0.0;  // SelfSimilar l1 > 0

    static FractalString explicit_lengths(std::vector<double> lengths);
    static FractalString power_law(double L, double D);
    static FractalString self_similar(double r, long long m, double first_len);
    static FractalString cantor() { return self_similar(1.0 / 3.0, 2, 1.0 / 3.0); }
};

// j-th largest length, 1-based, with multiplicity.  O(log j) for
// SelfSimilar.  Throws DomainError for j < 1 or past the end of an
// Explicit list.
double length_at(const FractalString& S, long long j);

// Total length |Omega| = sum of all lengths.  Closed form for SelfSimilar
// (l1/(1 - m r)), zeta(1/D)-based for PowerLaw, direct for Explicit.
double total_length(const FractalString& S);

// Geometric zeta function zeta_L(s) = sum_j l_j^s.
//
// SelfSimilar uses the closed form l1^s / (1 - m r^s), which is the
// analytic continuation and valid at every non-pole s.  PowerLaw reduces
// to L^s zeta(s/D) and is continued the same way the zeta engine is;
// tolerance bounds the absolute error of that path.  Explicit sums are
// finite and exact.  Throws PoleOfGeometricZeta when the denominator
// vanishes within 1e-12 (or s/D falls on the pole of zeta),
// TailNotNegligible when a PowerLaw tail cannot be certified.
cplx geometric_zeta(const FractalString& S, cplx s, double tolerance = 1e-10);

// Minkowski dimension.  SelfSimilar: log m / log(1/r); PowerLaw: D;
// Explicit: 0 by convention, with *finite_string set when non-null.
double minkowski_dimension(const FractalString& S, bool* finite_string = nullptr);

// N_L(x) = #{ j : 1/l_j <= x }, exact, with multiplicity.  Closed-form
// block counts for SelfSimilar and PowerLaw with a boundary adjustment
// that keeps the count consistent with per-length comparisons.
long long geometric_counting(const FractalString& S, double x);

// N_nu(x) = sum_j floor(l_j * x), exact.  Equals sum over n >= 1 of
// N_L(x/n), which tests verify as an integer identity.
long long spectral_counting(const FractalString& S, double x);

// Inner tube volume V(eps) = sum_j min(l_j, 2 eps): every interval
// contributes its full length once it is shorter than 2 eps and two
// end-caps of depth eps otherwise.  Closed-form tails for SelfSimilar
// and PowerLaw make this exact at any eps.
double tube_volume(const FractalString& S, double eps);

// Estimated Minkowski contents from a tube-volume sweep.
//
// lower/upper are min/max of V(eps)/eps^(1-D) over the finest half of
// the grid: a finite proxy for liminf/limsup, honest only as an estimate.
struct ContentEstimate {
    double D_used = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::vector<double> epsilons;
    bool finite_string = false;
};

// Sweep V(eps)/eps^(1-D) over eps_grid (strictly decreasing, >= 16
// points spanning >= 4 decades; GridTooCoarse otherwise).
ContentEstimate minkowski_contents(const FractalString& S, double D,
                                   const std::vector<double>& eps_grid);

enum class Measurability { Measurable, NotMeasurable, Inconclusive };

struct MeasurabilityReport {
    Measurability verdict = Measurability::Inconclusive;
    double L_est = 0.0;  // limit of l_j j^(1/D) when it exists
    double M_est = 0.0;  // 2^(1-D) L_est^D / (1-D)
    bool finite_string = false;
};

// Tests l_j j^(1/D) -> L along a geometric subsequence of j up to J
// (J >= 1000).  Measurable when the relative oscillation over the last
// decade is below 1e-2; lattice self-similar strings oscillate
// multiplicatively and come out NotMeasurable.  Finite explicit strings
// are Inconclusive.
MeasurabilityReport measurability_check(const FractalString& S, double D, long long J);

// Two-term fit of the spectral counting function.
//
//   N_nu(x) ~ weyl_coeff * x + second_coeff * x^D,
//
// weyl_coeff = |Omega| exactly; second_coeff is the tail-half mean of
// (N_nu(x) - |Omega| x)/x^D over x_grid, with [band_min, band_max] its
// oscillation band.  For a Minkowski measurable string the band is
// narrow; lattice strings keep a wide band and no limit.
struct WeylFit {
    double weyl_coeff = 0.0;
    double second_coeff = 0.0;
    double band_min = 0.0;
    double band_max = 0.0;
};

// x_grid must be strictly increasing with >= 16 points spanning >= 3
// decades (GridTooCoarse otherwise).
WeylFit weyl_fit(const FractalString& S, double D, const std::vector<double>& x_grid);

}  // namespace zst
