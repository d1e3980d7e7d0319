#include "zetastring/complex_dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "zetastring/detail/euler_maclaurin.hpp"
#include "zetastring/zeta.hpp"

namespace zst {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

// Middle-thirds constants, computed once.
struct CantorConstants {
    double log3 = std::log(3.0);
    double D = std::log(2.0) / std::log(3.0);
    double p = 2.0 * kPi / std::log(3.0);
};
const CantorConstants& cantor_constants() {
    static const CantorConstants c;
    return c;
}

double gl16_panel(double a, double b, double (*f)(double)) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (const auto& [x, w] : detail::gl16()) acc += w * f(mid + half * x);
    return acc * half;
}

double inv_log(double t) { return 1.0 / std::log(t); }

double inv_log1p(double u) { return 1.0 / std::log1p(u); }

// GL16 over one panel of 1/log(1+u) in the shifted coordinate u = t - 1.
// Near the singularity the nodes then carry u-scale roundoff instead of
// t-scale roundoff; together with log1p this keeps full relative
// precision where 1/log t ~ 1/u blows up.
double li_panel_u(double ua, double ub) {
    const double mid = 0.5 * (ua + ub), half = 0.5 * (ub - ua);
    double acc = 0.0;
    for (const auto& [x, w] : detail::gl16()) acc += w * inv_log1p(mid + half * x);
    return acc * half;
}

// integral of 1/log t over [a, b] in (0, 1) with panels graded
// geometrically toward t = 0, where the integrand vanishes; it varies by
// a bounded factor inside each dyadic panel, so GL16 is near-exact.
double li_toward_zero(double a, double b) {
    double acc = 0.0;
    double hi = b;
    while (hi > 1e-60) {
        const double lo = std::max(a, 0.5 * hi);
        acc += gl16_panel(lo, hi, inv_log);
        if (lo <= a) break;
        hi = lo;
    }
    return acc;
}

// integral of 1/log(1+u) over [ua, ub], both endpoints on one side of the
// singularity at u = 0, with dyadic panels graded toward it.
double li_toward_one(double ua, double ub) {
    double acc = 0.0;
    if (ub <= 0.0) {
        double uhi = ub;  // least negative end, nearest the singularity
        while (true) {
            const double ulo = std::max(ua, 2.0 * uhi);
            acc += li_panel_u(ulo, uhi);
            if (ulo <= ua) break;
            uhi = ulo;
        }
    } else {
        double ulo = ua;  // smallest positive end first
        while (ulo < ub) {
            const double uhi = std::min(ub, 2.0 * ulo);
            acc += li_panel_u(ulo, uhi);
            ulo = uhi;
        }
    }
    return acc;
}

// Exponential integral Ei(w) for complex w.  Asymptotic expansion
// e^w/w sum k!/w^k for |w| >= 30 (stopped at the smallest term);
// convergent series gamma + log w + sum w^k/(k k!) below.  Only the real
// part of results enters downstream sums, so the log branch is
// immaterial there.
cplx ei_complex(cplx w) {
    const double aw = std::abs(w);
    if (aw >= 30.0) {
        cplx sum = 1.0, term = 1.0;
        double prev = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= static_cast<double>(k) / w;
            const double mag = std::abs(term);
            if (mag > prev) break;  // divergence point of the asymptotic series
            sum += term;
            prev = mag;
        }
        return std::exp(w) * sum / w;
    }
    cplx sum = 0.0, term = 1.0;
    for (int k = 1; k <= 120; ++k) {
        term *= w / static_cast<double>(k);
        sum += term / static_cast<double>(k);
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return kEulerGamma + std::log(w) + sum;
}

// zeta(D + i n p) for the middle-thirds string, cached across calls.
cplx cantor_zeta_at_pole(int n) {
    static std::vector<cplx> cache;
    static std::mutex mu;
    const int a = std::abs(n);
    std::lock_guard<std::mutex> lock(mu);
    if (a >= static_cast<int>(cache.size())) {
        const ZetaEvaluator ev(64, 15, 1e-10);
        const auto& cc = cantor_constants();
        for (int k = static_cast<int>(cache.size()); k <= a; ++k) {
            cache.push_back(zeta(ev, cplx(cc.D, k * cc.p)));
        }
    }
    return n >= 0 ? cache[a] : std::conj(cache[a]);
}

}  // namespace

ComplexDimensionSet lattice_poles(const FractalString& S, int n_max) {
    if (S.kind != StringKind::SelfSimilar) throw NotSelfSimilar();
    if (n_max < 1) throw DomainError("pole window must contain at least n = 1");
    const double log_inv_r = -std::log(S.r);
    ComplexDimensionSet dims;
    dims.D = std::log(static_cast<double>(S.m)) / log_inv_r;
    dims.p = 2.0 * kPi / log_inv_r;
    dims.n_max = n_max;
    dims.residue = std::pow(S.first_len, dims.D) /
                   (static_cast<double>(S.m) * std::pow(S.r, dims.D) * log_inv_r);
    return dims;
}

cplx residue_at(const FractalString& S, cplx omega) {
    constexpr double kRadius = 1e-3;
    constexpr int kPoints = 16;
    cplx acc = 0.0;
    for (int k = 0; k < kPoints; ++k) {
        const double th = 2.0 * kPi * k / kPoints;
        const cplx dir{std::cos(th), std::sin(th)};
        acc += geometric_zeta(S, omega + kRadius * dir, 1e-12) * dir;
    }
    acc *= kRadius / kPoints;
    if (std::abs(acc) < 1e-8) throw NotAPole(omega, std::abs(acc));
    return acc;
}

double tube_formula_eval(const ComplexDimensionSet& dims, cplx zeta_L_at_0,
                         double eps, double* imag_residual) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    const double log2e = std::log(2.0 * eps);
    cplx acc = 0.0;
    for (int n = -dims.n_max; n <= dims.n_max; ++n) {
        const cplx w = dims.pole(n);
        acc += dims.residue * std::exp((1.0 - w) * log2e) / (w * (1.0 - w));
    }
    acc += 2.0 * eps * zeta_L_at_0;
    if (imag_residual) *imag_residual = std::abs(acc.imag());
    return acc.real();
}

double explicit_counting_geometric(double x, int n_max, double* imag_residual) {
    if (!(x > 1.0)) throw DomainError("counting series requires x > 1");
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    for (double pw = 1.0; pw <= 1.001 * x + 1.0; pw *= 3.0) {
        if (std::abs(x - pw) < 1e-3) throw NearJump(x, pw);
    }
    const auto& cc = cantor_constants();
    const double lx = std::log(x);
    cplx acc = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const cplx w{cc.D, n * cc.p};
        acc += std::exp(w * lx) / w;
    }
    acc /= 2.0 * cc.log3;
    if (imag_residual) *imag_residual = std::abs(acc.imag());
    return acc.real() - 1.0;
}

double explicit_counting_spectral(double x, int n_max, double* imag_residual) {
    if (!(x > 1.0)) throw DomainError("counting series requires x > 1");
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    const double k = std::round(x / 3.0);
    if (k >= 1.0 && std::abs(x - 3.0 * k) < 1e-3) throw NearJump(x, 3.0 * k);
    const auto& cc = cantor_constants();
    const double lx = std::log(x);
    cplx acc = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const cplx w{cc.D, n * cc.p};
        acc += cantor_zeta_at_pole(n) * std::exp(w * lx) / w;
    }
    acc /= 2.0 * cc.log3;
    if (imag_residual) *imag_residual = std::abs(acc.imag());
    return x + acc.real() + 0.5;
}

double logarithmic_integral(double x) {
    if (!(x > 0.0)) throw DomainError("Li requires x > 0");
    if (std::abs(x - 1.0) < 1e-10) throw DomainError("Li diverges at x = 1");
    constexpr double kDelta = 1e-8;

    if (x < 1.0) {
        double acc = li_toward_zero(0.0, std::min(x, 0.5));
        if (x > 0.5) acc += li_toward_one(-0.5, x - 1.0);
        return acc;
    }
    // Principal value across t = 1, worked in u = t - 1: the integrand is
    // 1/u + 1/2 + O(u) there, so skipping the symmetric window
    // (-delta, delta) loses exactly delta + O(delta^3).  For x inside the
    // nominal window the split shrinks to keep the cancellation symmetric.
    const double ux = std::min(x, 2.0) - 1.0;
    const double delta = std::min(kDelta, 0.5 * ux);
    double acc = li_toward_zero(0.0, 0.5) + li_toward_one(-0.5, -delta) + delta;
    acc += li_toward_one(delta, ux);
    // Smooth region beyond t = 2: doubling panels.
    double lo = 2.0;
    while (lo < x) {
        const double hi = std::min(x, 2.0 * lo);
        acc += gl16_panel(lo, hi, inv_log);
        lo = hi;
    }
    return acc;
}

double weighted_prime_power_count(double x) {
    if (x < 2.0) return 0.0;
    const auto primes = detail::primes_up_to(static_cast<long long>(std::floor(x)));
    double acc = 0.0;
    for (long long p : primes) {
        double pk = static_cast<double>(p);
        for (int k = 1; pk <= x; ++k, pk *= static_cast<double>(p)) {
            acc += 1.0 / k;
        }
    }
    return acc;
}

double riemann_explicit_formula(double x, int num_zeros,
                                const std::vector<double>* zero_ordinates) {
    if (!(x >= 2.0)) throw DomainError("explicit formula requires x >= 2");
    if (num_zeros < 1) throw DomainError("need at least one zero pair");
    {
        const auto primes = detail::primes_up_to(static_cast<long long>(x) + 1);
        for (long long p : primes) {
            for (double pk = static_cast<double>(p); pk <= x + 1.0;
                 pk *= static_cast<double>(p)) {
                if (std::abs(x - pk) < 1e-6) throw PrimePowerPoint(x, pk);
            }
        }
    }

    std::vector<double> scanned;
    if (zero_ordinates == nullptr) {
        const ZetaEvaluator ev;
        double t0 = 0.0;
        while (static_cast<int>(scanned.size()) < num_zeros) {
            if (t0 > 1200.0) {
                throw DomainError("requested more zeros than the internal scan covers");
            }
            const auto scan = find_zeros_on_line(ev, 0.5, t0, t0 + 60.0);
            scanned.insert(scanned.end(), scan.ordinates.begin(), scan.ordinates.end());
            t0 += 60.0;
        }
        zero_ordinates = &scanned;
    } else if (static_cast<int>(zero_ordinates->size()) < num_zeros) {
        throw DomainError("fewer zero ordinates supplied than pairs requested");
    }

    const double lx = std::log(x);
    double zero_sum = 0.0;
    for (int i = 0; i < num_zeros; ++i) {
        // Li(x^rho) + Li(x^conj(rho)) = 2 Re Ei(rho log x)
        zero_sum += 2.0 * ei_complex(cplx(0.5, (*zero_ordinates)[i]) * lx).real();
    }

    // Tail integral of 1/(t (t^2-1) log t): doubling panels until the
    // remainder bound 1/(X^2 log X) is negligible.
    double tail = 0.0;
    double lo = x;
    while (1.0 / (lo * lo * std::log(lo)) > 1e-13) {
        const double hi = 2.0 * lo;
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (const auto& [u, w] : detail::gl16()) {
            const double t = mid + half * u;
            acc += w / (t * (t * t - 1.0) * std::log(t));
        }
        tail += acc * half;
        lo = hi;
    }

    return logarithmic_integral(x) - zero_sum + tail - std::log(2.0);
}

}  // namespace zst
