#pragma once

// Error types shared across the toolkit.  Every throwing condition in the
// library maps to one of these; the CLI translates any zst::Error into
// exit status 2 (domain error) as opposed to 1 (usage error).

#include <complex>
#include <stdexcept>
#include <string>

namespace zst {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// s is within 1e-12 of the pole of zeta at s = 1.
struct PoleAtOne : Error {
    std::complex<double> s;
    explicit PoleAtOne(std::complex<double> s_);
};

// The truncation error bound could not be pushed below the requested
// target at the configured order / term caps.
struct AccuracyNotReached : Error {
    double achieved;
    double requested;
    AccuracyNotReached(double achieved_, double requested_);
};

// Argument excluded from an operation's domain (e.g. xi at s in {0, 1}).
struct DomainExcluded : Error {
    std::complex<double> s;
    explicit DomainExcluded(std::complex<double> s_);
};

// Generic precondition violation (e.g. Euler product with Re(s) <= 1).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A certified tail bound exceeds the tolerance at the given cutoff.
struct TailNotNegligible : Error {
    double bound;
    double tolerance;
    TailNotNegligible(double bound_, double tolerance_);
};

// Operation requires a single-ratio self-similar string.
struct NotSelfSimilar : Error {
    NotSelfSimilar();
};

// 1 - m r^s vanishes (within 1e-12) at the requested point.
struct PoleOfGeometricZeta : Error {
    std::complex<double> s;
    explicit PoleOfGeometricZeta(std::complex<double> s_);
};

// An epsilon / x grid has too few points for the tail statistics.
struct GridTooCoarse : Error {
    std::size_t n_points;
    std::size_t n_required;
    GridTooCoarse(std::size_t n_points_, std::size_t n_required_);
};

// Contour integral magnitude below threshold: not a pole.
struct NotAPole : Error {
    std::complex<double> omega;
    double magnitude;
    NotAPole(std::complex<double> omega_, double magnitude_);
};

// Counting-formula evaluation point within 1e-3 of a jump of the count.
struct NearJump : Error {
    double x;
    double jump;
    NearJump(double x_, double jump_);
};

// Explicit-formula evaluation point within 1e-6 of a prime power.
struct PrimePowerPoint : Error {
    double x;
    double prime_power;
    PrimePowerPoint(double x_, double prime_power_);
};

// A translate leaves the grid window (fatal for shift; quantized sums
// instead set a flag on the output, see GridFunction).
struct SupportOverflow : Error {
    double needed_lo;
    double needed_hi;
    double window_lo;
    double window_hi;
    SupportOverflow(double nlo, double nhi, double wlo, double whi);
};

// A quantized sum needs Moebius values beyond the table cap.
struct TableTooSmall : Error {
    long long needed;
    long long cap;
    TableTooSmall(long long needed_, long long cap_);
};

// Resolvent of (d/dt - 1) is undefined on H_c at c = 1.
struct CEqualsOne : Error {
    double c;
    explicit CEqualsOne(double c_);
};

// Fourier-multiplier input carries too much mass at the window edges.
struct PadInsufficient : Error {
    double edge_mass;
    double threshold;
    PadInsufficient(double edge_mass_, double threshold_);
};

// Vertical segment at c = 1 passes through the pole of zeta.
struct PoleOnSegment : Error {
    PoleOnSegment();
};

// A report input file does not match any known artifact schema.
struct SchemaMismatch : Error {
    std::string path;
    SchemaMismatch(const std::string& path_, const std::string& detail);
};

}  // namespace zst
