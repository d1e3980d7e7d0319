#include "zetastring/errors.hpp"

#include <sstream>

namespace zst {

namespace {

std::string fmt_complex(std::complex<double> s) {
    std::ostringstream os;
    os << s.real();
    if (s.imag() >= 0) {
        os << "+" << s.imag() << "i";
    } else {
        os << s.imag() << "i";
    }
    return os.str();
}

}  // namespace

PoleAtOne::PoleAtOne(std::complex<double> s_)
    : Error("zeta has a simple pole at s = 1; requested s = " + fmt_complex(s_)), s(s_) {}

AccuracyNotReached::AccuracyNotReached(double achieved_, double requested_)
    : Error("certified error bound " + std::to_string(achieved_) +
            " exceeds target " + std::to_string(requested_)),
      achieved(achieved_),
      requested(requested_) {}

DomainExcluded::DomainExcluded(std::complex<double> s_)
    : Error("argument excluded from domain: s = " + fmt_complex(s_)), s(s_) {}

TailNotNegligible::TailNotNegligible(double bound_, double tolerance_)
    : Error("tail bound " + std::to_string(bound_) + " exceeds tolerance " +
            std::to_string(tolerance_) + " at the given cutoff"),
      bound(bound_),
      tolerance(tolerance_) {}

NotSelfSimilar::NotSelfSimilar()
    : Error("operation requires a single-ratio self-similar string") {}

PoleOfGeometricZeta::PoleOfGeometricZeta(std::complex<double> s_)
    : Error("geometric zeta function has a pole at s = " + fmt_complex(s_)), s(s_) {}

GridTooCoarse::GridTooCoarse(std::size_t n_points_, std::size_t n_required_)
    : Error("grid has " + std::to_string(n_points_) + " points; at least " +
            std::to_string(n_required_) + " required"),
      n_points(n_points_),
      n_required(n_required_) {}

NotAPole::NotAPole(std::complex<double> omega_, double magnitude_)
    : Error("contour integral magnitude " + std::to_string(magnitude_) +
            " below pole threshold at omega = " + fmt_complex(omega_)),
      omega(omega_),
      magnitude(magnitude_) {}

NearJump::NearJump(double x_, double jump_)
    : Error("x = " + std::to_string(x_) + " is within 1e-3 of the jump point " +
            std::to_string(jump_)),
      x(x_),
      jump(jump_) {}

PrimePowerPoint::PrimePowerPoint(double x_, double prime_power_)
    : Error("x = " + std::to_string(x_) + " is within 1e-6 of the prime power " +
            std::to_string(prime_power_)),
      x(x_),
      prime_power(prime_power_) {}

SupportOverflow::SupportOverflow(double nlo, double nhi, double wlo, double whi)
    : Error("support [" + std::to_string(nlo) + ", " + std::to_string(nhi) +
            "] leaves the grid window [" + std::to_string(wlo) + ", " +
            std::to_string(whi) + "]"),
      needed_lo(nlo),
      needed_hi(nhi),
      window_lo(wlo),
      window_hi(whi) {}

TableTooSmall::TableTooSmall(long long needed_, long long cap_)
    : Error("quantized sum needs Moebius values up to " + std::to_string(needed_) +
            ", beyond the table cap " + std::to_string(cap_)),
      needed(needed_),
      cap(cap_) {}

CEqualsOne::CEqualsOne(double c_)
    : Error("resolvent of (d/dt - 1) undefined on H_c at c = " + std::to_string(c_)), c(c_) {}

PadInsufficient::PadInsufficient(double edge_mass_, double threshold_)
    : Error("window edge mass " + std::to_string(edge_mass_) +
            " exceeds wrap-around threshold " + std::to_string(threshold_)),
      edge_mass(edge_mass_),
      threshold(threshold_) {}

PoleOnSegment::PoleOnSegment()
    : Error("segment at c = 1 passes through the pole of zeta at s = 1 "
            "(request the pole-neighborhood exclusion to scan this line)") {}

SchemaMismatch::SchemaMismatch(const std::string& path_, const std::string& detail)
    : Error("file " + path_ + " does not match any artifact schema: " + detail), path(path_) {}

}  // namespace zst
