#pragma once

// Shared numerical kernels: the Euler-Maclaurin tail of sum n^(-s), a
// complex log-gamma, and the smallest amount of prime machinery the
// library needs.  Everything here is deterministic double-precision
// arithmetic with certified truncation bounds where stated.

#include <complex>
#include <utility>
#include <vector>

namespace zst::detail {

using cplx = std::complex<double>;

// B_{2k}/(2k)! for k = 1..31.  Alternating, rapidly decreasing; the
// growth of B_{2k} caps usable correction orders at 30 (one extra entry
// feeds the remainder bound at order 30).
inline constexpr double kBernoulliOverFactorial[31] = {
    0.08333333333333333,    -0.001388888888888889,  3.306878306878307e-05,
    -8.267195767195768e-07, 2.08767569878681e-08,   -5.284190138687493e-10,
    1.3382536530684679e-11, -3.3896802963225827e-13, 8.586062056277845e-15,
    -2.174868698558062e-16, 5.5090028283602295e-18, -1.3954464685812522e-19,
    3.534707039629467e-21,  -8.953517427037546e-23, 2.267952452337683e-24,
    -5.744790668872202e-26, 1.455172475614865e-27,  -3.6859949406653103e-29,
    9.336734257095045e-31,  -2.36502241570063e-32,  5.990671762482134e-34,
    -1.5174548844682903e-35, 3.843758125454189e-37, -9.736353072646691e-39,
    2.466247044200681e-40,  -6.247076741820743e-42, 1.5824030244644914e-43,
    -4.008273685948936e-45, 1.0153075855569557e-46, -2.5718041582418717e-48,
    6.514456035233815e-50,
};

// Analytic continuation of the tail sum_{n >= N} n^(-s):
//
//   T(N, s) = N^(1-s)/(s-1) + N^(-s)/2
//           + sum_{k=1}^{q} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
//
// valid for Re(s) > -(2q+1).  The returned bound is the magnitude of the
// first omitted correction term times |s+2q+1|/(Re(s)+2q+1), which
// dominates the truncation error (alternating-tail argument).
// Requires 1 <= q <= 30 and Re(s) + 2q + 1 > 0.
cplx em_tail(double N, cplx s, int q, double* bound);

// zeta(s) for Re(s) > 0 via direct sum to N-1 plus em_tail(N, s, q).
// Plain kernel: no pole check, no adaptivity.
cplx zeta_em_fixed(long long N, cplx s, int q, double* bound);

// log Gamma(z), Lanczos approximation (g = 607/128, 15 coefficients),
// reflection formula for Re(z) < 0.5.  The imaginary part is only
// defined modulo 2*pi*i on the reflected half-plane; every use here
// exponentiates the result or takes a difference inside exp, so the
// ambiguity cancels.  Relative accuracy of exp(lgamma) is ~1e-14 on the
// tested domain.
cplx lgamma_complex(cplx z);

// Primes up to limit, by Eratosthenes.
std::vector<long long> primes_up_to(long long limit);

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// Legendre recurrence.  Deterministic to the last bit for fixed n.
std::vector<std::pair<double, double>> gauss_legendre(int n);

// Cached 16-point rule, the workhorse panel quadrature.
const std::vector<std::pair<double, double>>& gl16();

// Deterministic 64-bit PRNG (splitmix64): byte-for-byte reproducible
// across platforms, unlike the unspecified std:: distributions.
struct SplitMix64 {
    unsigned long long state;
    explicit SplitMix64(unsigned long long seed) : state(seed) {}
    unsigned long long next() {
        unsigned long long z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace zst::detail
