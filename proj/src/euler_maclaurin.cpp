#include "zetastring/detail/euler_maclaurin.hpp"

#include <cmath>

namespace zst::detail {

cplx em_tail(double N, cplx s, int q, double* bound) {
    const double logN = std::log(N);
    const cplx Ns = std::exp(-s * logN);  // N^(-s)
    cplx tail = Ns * N / (s - 1.0) + 0.5 * Ns;

    // rising = s(s+1)...(s+2k-2) entering the k-th correction; Npow tracks
    // N^(-s-2k+1).
    cplx rising = s;
    cplx Npow = Ns / N;
    const double Ninv2 = 1.0 / (N * N);
    for (int k = 1; k <= q; ++k) {
        tail += kBernoulliOverFactorial[k - 1] * rising * Npow;
        rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        Npow *= Ninv2;
    }
    if (bound) {
        // First omitted term, inflated by |s+2q+1|/(sigma+2q+1): standard
        // remainder estimate for the Euler-Maclaurin series of n^(-s).
        const double first_omitted =
            std::abs(kBernoulliOverFactorial[q] * rising * Npow);
        *bound = first_omitted * std::abs(s + static_cast<double>(2 * q + 1)) /
                 (s.real() + static_cast<double>(2 * q + 1));
    }
    return tail;
}

cplx zeta_em_fixed(long long N, cplx s, int q, double* bound) {
    cplx acc = 0.0;
    for (long long n = 1; n < N; ++n) {
        acc += std::exp(-s * std::log(static_cast<double>(n)));
    }
    return acc + em_tail(static_cast<double>(N), s, q, bound);
}

cplx lgamma_complex(cplx z) {
    // Lanczos coefficients for g = 607/128, n = 15.
    static constexpr double kG = 607.0 / 128.0;
    static constexpr double kCoef[15] = {
        0.99999999999999709182,
        57.156235665862923517,
        -59.597960355475491248,
        14.136097974741747174,
        -0.49191381609762019978,
        0.33994649984811888699e-4,
        0.46523628927048575665e-4,
        -0.98374475304879564677e-4,
        0.15808870322491248884e-3,
        -0.21026444172410488319e-3,
        0.21743961811521264320e-3,
        -0.16431810653676389022e-3,
        0.84418223983852743293e-4,
        -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    };
    static const double kHalfLog2Pi = 0.5 * std::log(2.0 * 3.14159265358979323846);
    static constexpr double kPi = 3.14159265358979323846;

    if (z.real() < 0.5) {
        // Reflection; the branch of log(sin) shifts the result by 2*pi*i*k,
        // harmless under exp.
        return std::log(kPi / std::sin(kPi * z)) - lgamma_complex(1.0 - z);
    }
    const cplx zm = z - 1.0;
    cplx sum = kCoef[0];
    for (int i = 1; i < 15; ++i) {
        sum += kCoef[i] / (zm + static_cast<double>(i));
    }
    const cplx t = zm + kG + 0.5;
    return kHalfLog2Pi + (zm + 0.5) * std::log(t) - t + std::log(sum);
}

std::vector<long long> primes_up_to(long long limit) {
    std::vector<long long> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (long long p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long long k = p * p; k <= limit; k += p) {
            composite[static_cast<std::size_t>(k)] = true;
        }
    }
    return out;
}

std::vector<std::pair<double, double>> gauss_legendre(int n) {
    constexpr double kPi = 3.14159265358979323846;
    std::vector<std::pair<double, double>> nw(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        {
            // Refresh p0/p1 at the converged node for the weight formula.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nw[static_cast<std::size_t>(i)] = {-x, w};
        nw[static_cast<std::size_t>(n - 1 - i)] = {x, w};
    }
    return nw;
}

const std::vector<std::pair<double, double>>& gl16() {
    static const std::vector<std::pair<double, double>> nw = gauss_legendre(16);
    return nw;
}

}  // namespace zst::detail
