#include "zetastring/spectral_operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "zetastring/detail/euler_maclaurin.hpp"

namespace zst {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long long kTableCap = 1LL << 26;
constexpr double kVanishTol = 1e-14;
constexpr double kEdgeMassTol = 1e-10;
constexpr int kEdgeZone = 16;
// Spectral floor for the multiplier oracle.  Bins below it are zeroed
// rather than multiplied: they sit beneath the FFT rounding floor
// (~1e-16 relative), so "evaluating the multiplier" there would only
// amplify noise at frequencies far outside the input's real band.
constexpr double kSpectralCut = 1e-13;
constexpr double kTailTol = 1e-9;

// Per-operation cost guard.  Leaf interpolations and series terms are
// counted while an operator materializes its samples; runaway
// compositions (enormous windows, deeply nested closures) fail fast
// instead of hanging the process.
constexpr unsigned long long kCostCap = 1000000000ULL;
thread_local unsigned long long g_cost = 0;

double inf() { return std::numeric_limits<double>::infinity(); }

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Linear interpolation of the samples, exactly zero outside the
// support interval.  This is the representative every operator acts on.
struct LinearInterpolant final : PointEvaluator {
    double t_min, h;
    int n;
    std::shared_ptr<const std::vector<cplx>> s;
    double a, b;

    LinearInterpolant(const WeightedGrid& g,
                      std::shared_ptr<const std::vector<cplx>> samples,
                      double a_, double b_)
        : t_min(g.t_min), h(g.step()), n(g.n_points),
          s(std::move(samples)), a(a_), b(b_) {}

    cplx operator()(double t) const override {
        ++g_cost;
        if (!(t >= a && t <= b)) return cplx(0.0, 0.0);
        double x = (t - t_min) / h;
        int j = static_cast<int>(x);
        if (j < 0) j = 0;
        if (j > n - 2) j = n - 2;
        double frac = x - j;
        const std::vector<cplx>& v = *s;
        return v[j] + (v[j + 1] - v[j]) * frac;
    }
};

struct ShiftEvaluator final : PointEvaluator {
    std::shared_ptr<const PointEvaluator> inner;
    double h_shift = 0.0;
    cplx operator()(double t) const override { return (*inner)(t - h_shift); }
};

// Conceptual tail of a coefficient family, used to decide whether the
// window truncated the image.  The Dirichlet coefficients (all ones)
// and their Moebius inverse both extend to infinity, but composing the
// two telescopes to the identity, whose tail is empty; that exact
// cancellation is the only one recognized, everything else touching an
// infinite family is conservatively marked infinite.
enum TailKind { kTailFinite = 0, kTailOnes = 1, kTailMu = 2, kTailInf = 3 };

int compose_tail(int x, int y) {
    if ((x == kTailOnes && y == kTailMu) || (x == kTailMu && y == kTailOnes))
        return kTailFinite;
    if (x == kTailFinite && y == kTailFinite) return kTailFinite;
    return kTailInf;
}

// sum_n coef[n-1] f(t - log n) over the base's support band.  Keeping
// the coefficients as one flat table over a shared base evaluator lets
// successive quantized sums compose by Dirichlet convolution of the
// tables; the coefficient arithmetic is exact on small integers, so
// identities such as mu * 1 = delta hold coefficient-wise rather than
// approximately, and a composed sum never resamples the intermediate.
struct DirichletSeriesEvaluator final : PointEvaluator {
    std::shared_ptr<const PointEvaluator> base;
    double base_a, base_b;
    double base_sup = 0.0;      // sup |base| over its support (for bounds)
    std::vector<double> coef;   // coef[n-1] weights f(t - log n)
    std::vector<double> logn;   // log(n) cache, same indexing
    int tail_kind = kTailInf;
    double log_n2 = 0.0;        // log of the conceptual largest index

    DirichletSeriesEvaluator(std::shared_ptr<const PointEvaluator> base_,
                             double a_, double b_, std::vector<double> c)
        : base(std::move(base_)), base_a(a_), base_b(b_), coef(std::move(c)) {
        logn.resize(coef.size());
        for (std::size_t i = 0; i < coef.size(); ++i)
            logn[i] = std::log(static_cast<double>(i + 1));
    }

    cplx operator()(double t) const override {
        double xlo = std::exp(t - base_b);
        double xhi = std::exp(t - base_a);
        if (xlo > static_cast<double>(coef.size())) return cplx(0.0, 0.0);
        long long n_lo = std::max(1LL, static_cast<long long>(std::floor(xlo)));
        long long n_hi =
            xhi >= static_cast<double>(coef.size())
                ? static_cast<long long>(coef.size())
                : std::min(static_cast<long long>(coef.size()),
                           static_cast<long long>(std::ceil(xhi)));
        cplx acc(0.0, 0.0);
        g_cost += static_cast<unsigned long long>(n_hi - n_lo + 1);
        for (long long m = n_lo; m <= n_hi; ++m) {
            double w = coef[static_cast<std::size_t>(m - 1)];
            if (w == 0.0) continue;
            acc += w * (*base)(t - logn[static_cast<std::size_t>(m - 1)]);
        }
        return acc;
    }
};

// Truncated Dirichlet convolution: out[n-1] = sum_{ij=n} x[i-1] y[j-1].
std::vector<double> convolve(const std::vector<double>& x,
                             const std::vector<double>& y,
                             std::size_t out_len) {
    std::vector<double> out(out_len, 0.0);
    for (std::size_t i = 1; i <= std::min(x.size(), out_len); ++i) {
        double xi = x[i - 1];
        if (xi == 0.0) continue;
        std::size_t jmax = std::min(y.size(), out_len / i);
        for (std::size_t j = 1; j <= jmax; ++j) {
            double yj = y[j - 1];
            if (yj != 0.0) out[i * j - 1] += xi * yj;
        }
    }
    return out;
}

// Table length needed so that every node of the window sees the full
// band of translates of a function supported down to base_a.
long long needed_table(const WeightedGrid& g, double base_a) {
    double x = std::exp(g.t_max - base_a) * (1.0 + 1e-12);
    if (!(x < static_cast<double>(kTableCap)))
        throw TableTooSmall(static_cast<long long>(std::min(x, 9e18)),
                            kTableCap);
    return std::max(1LL, static_cast<long long>(std::ceil(x)));
}

// Weighted-norm bound for the image mass a quantized sum loses past
// t_max.  For the all-ones and Moebius families |coef| <= 1, so
// |af(t)| <= sup (e^{t-a} + 1) there and the integral closes for c > 1.
// For a finite family the coefficient mass C = sum |coef| bounds
// |af| <= sup C outright (c > 0).  Anything else: infinity.
double series_lost_bound(const WeightedGrid& g, int tail_kind,
                         double support_a, double sup_base,
                         double coef_abs_sum) {
    double T = g.t_max;
    if (tail_kind == kTailOnes || tail_kind == kTailMu) {
        if (!(g.c > 1.0)) return inf();
        double grow = std::exp(-2.0 * support_a + 2.0 * (1.0 - g.c) * T) /
                      (2.0 * (g.c - 1.0));
        double flat = std::exp(-2.0 * g.c * T) / (2.0 * g.c);
        return sup_base * std::sqrt(2.0 * (grow + flat));
    }
    if (tail_kind == kTailFinite) {
        if (!(g.c > 0.0)) return inf();
        return sup_base * coef_abs_sum * std::exp(-g.c * T) /
               std::sqrt(2.0 * g.c);
    }
    return inf();
}

double sup_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (const cplx& z : v) m = std::max(m, std::abs(z));
    return m;
}

// Materialize an evaluator into a GridFunction.
GridFunction finish(const WeightedGrid& g,
                    std::shared_ptr<const PointEvaluator> ev, double sa,
                    double sb, bool overflow, double bound) {
    GridFunction r;
    r.grid = g;
    r.support_a = sa;
    r.support_b = sb;
    r.overflow = overflow;
    r.lost_tail_bound = overflow ? bound : 0.0;
    r.samples.resize(static_cast<std::size_t>(g.n_points));
    g_cost = 0;
    for (int i = 0; i < g.n_points; ++i) {
        r.samples[static_cast<std::size_t>(i)] = (*ev)(g.node(i));
        if (g_cost > kCostCap)
            throw DomainError("operator evaluation exceeded the cost cap");
    }
    r.eval = std::move(ev);
    return r;
}

// Shared path of the three quantized sums: compose coefficient tables
// when the input is itself a quantized sum over the same base (the
// composed sum then reads the original base directly, bypassing the
// intermediate's window truncation), else wrap the input as a new base.
GridFunction apply_series(const GridFunction& f, std::vector<double> c2,
                          int tail2, double log_n2_2) {
    const auto* ds =
        dynamic_cast<const DirichletSeriesEvaluator*>(f.eval.get());
    std::shared_ptr<const PointEvaluator> base;
    double base_a, base_b, base_sup;
    std::vector<double> composed;
    int tail;
    double log_n2;
    bool inherited;
    if (ds != nullptr && static_cast<long long>(ds->coef.size()) ==
                             needed_table(f.grid, ds->base_a)) {
        base = ds->base;
        base_a = ds->base_a;
        base_b = ds->base_b;
        base_sup = ds->base_sup;
        composed = convolve(ds->coef, c2, ds->coef.size());
        tail = compose_tail(ds->tail_kind, tail2);
        bool cancelled = tail == kTailFinite &&
                         (ds->tail_kind != kTailFinite || tail2 != kTailFinite);
        log_n2 = cancelled ? 0.0 : ds->log_n2 + log_n2_2;
        inherited = false;
    } else {
        long long n = needed_table(f.grid, f.support_a);
        base = f.eval;
        base_a = f.support_a;
        base_b = f.support_b;
        base_sup = sup_abs(f.samples);
        composed = std::move(c2);
        composed.resize(static_cast<std::size_t>(n), 0.0);
        tail = tail2;
        log_n2 = log_n2_2;
        inherited = f.overflow;
    }

    std::size_t first_nz = 0, last_nz = 0;
    double coef_abs_sum = 0.0;
    bool any = false;
    for (std::size_t i = 0; i < composed.size(); ++i) {
        if (composed[i] != 0.0) {
            if (!any) first_nz = i;
            last_nz = i;
            any = true;
            coef_abs_sum += std::abs(composed[i]);
        }
    }
    auto ev = std::make_shared<DirichletSeriesEvaluator>(base, base_a, base_b,
                                                         std::move(composed));
    ev->base_sup = base_sup;
    ev->tail_kind = tail;
    ev->log_n2 = log_n2;

    const WeightedGrid& g = f.grid;
    if (!any)  // annihilated: the zero function
        return finish(g, ev, base_a, base_a, inherited, f.lost_tail_bound);

    double sa = base_a + std::log(static_cast<double>(first_nz + 1));
    double concept_b = base_b + log_n2;
    double computed_b = base_b + std::log(static_cast<double>(last_nz + 1));
    double sb = std::min(g.t_max, std::max(concept_b, computed_b));
    bool clipped = concept_b > g.t_max + 1e-12;
    double bound = 0.0;
    if (clipped)
        bound += series_lost_bound(g, tail, base_a, base_sup, coef_abs_sum);
    if (inherited) bound += f.lost_tail_bound;
    return finish(g, ev, sa, std::max(sa, sb), inherited || clipped, bound);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// In-place radix-2 FFT; twiddles come from std::polar per butterfly
// column so phase error stays at rounding level for long transforms.
void fft_radix2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * kPi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                cplx w = std::polar(1.0, ang * static_cast<double>(j));
                cplx u = a[i + j];
                cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
    if (inverse) {
        for (cplx& z : a) z /= static_cast<double>(n);
    }
}

double quintic_ramp(double x) {  // C^2 smoothstep on [0,1]
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (6.0 * x - 15.0));
}

double bump_value(double t, double center, double width, double amplitude) {
    double z = (t - center) / width;
    if (std::abs(z) >= 4.0) return 0.0;
    double v = amplitude * std::exp(-0.5 * z * z);
    if (z < -3.0) v *= quintic_ramp(z + 4.0);
    if (z > 3.0) v *= quintic_ramp(4.0 - z);
    return v;
}

// Relative squared mass of the outermost kEdgeZone nodes on each side.
double edge_mass_ratio(const std::vector<cplx>& v) {
    double total = 0.0, edge = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        double m = std::norm(v[i]);
        total += m;
        if (i < static_cast<std::size_t>(kEdgeZone) ||
            i + static_cast<std::size_t>(kEdgeZone) >= n)
            edge += m;
    }
    return total > 0.0 ? edge / total : 0.0;
}

}  // namespace

WeightedGrid make_grid(double c, double t_min, double t_max, int n_points) {
    if (!(c >= 0.0) || !std::isfinite(c))
        throw DomainError("grid weight c must be finite and >= 0");
    if (!(t_min < t_max) || !std::isfinite(t_min) || !std::isfinite(t_max))
        throw DomainError("grid window requires t_min < t_max");
    if (n_points < 256 || !power_of_two(n_points))
        throw DomainError("n_points must be a power of two, at least 256");
    return WeightedGrid{c, t_min, t_max, n_points};
}

cplx GridFunction::value_at(double t) const { return (*eval)(t); }

GridFunction make_grid_function(const WeightedGrid& grid,
                                std::vector<cplx> samples, double support_a,
                                double support_b) {
    if (static_cast<int>(samples.size()) != grid.n_points)
        throw DomainError("sample count does not match the grid");
    if (!(support_a <= support_b) || support_a < grid.t_min - 1e-12 ||
        support_b > grid.t_max + 1e-12)
        throw DomainError("support must be an interval inside the window");
    for (int i = 0; i < grid.n_points; ++i) {
        double t = grid.node(i);
        if ((t < support_a || t > support_b) &&
            std::abs(samples[static_cast<std::size_t>(i)]) > kVanishTol)
            throw DomainError("samples do not vanish outside the support");
    }
    GridFunction r;
    r.grid = grid;
    r.support_a = support_a;
    r.support_b = support_b;
    auto shared = std::make_shared<const std::vector<cplx>>(std::move(samples));
    r.samples = *shared;
    r.eval = std::make_shared<LinearInterpolant>(grid, shared, support_a,
                                                 support_b);
    return r;
}

GridFunction make_bump(const WeightedGrid& grid, double center, double width,
                       double amplitude) {
    if (!(width > 0.0)) throw DomainError("bump width must be positive");
    double a = center - 4.0 * width, b = center + 4.0 * width;
    if (a < grid.t_min || b > grid.t_max)
        throw DomainError("bump support leaves the grid window");
    std::vector<cplx> s(static_cast<std::size_t>(grid.n_points));
    for (int i = 0; i < grid.n_points; ++i)
        s[static_cast<std::size_t>(i)] =
            bump_value(grid.node(i), center, width, amplitude);
    return make_grid_function(grid, std::move(s), a, b);
}

std::vector<GridFunction> bump_family(const WeightedGrid& grid, int count,
                                      std::uint64_t seed, double center_lo,
                                      double center_hi) {
    if (count < 1) throw DomainError("bump_family needs count >= 1");
    if (!(center_lo <= center_hi))
        throw DomainError("bump_family needs center_lo <= center_hi");
    if (center_lo - 4.0 * 0.8 < grid.t_min ||
        center_hi + 4.0 * 0.8 > grid.t_max)
        throw DomainError("bump_family centers too close to the window edge");
    detail::SplitMix64 rng(seed);
    std::vector<GridFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        double t0 = rng.uniform(center_lo, center_hi);
        double w = rng.uniform(0.4, 0.8);
        double amp = rng.uniform(0.5, 2.0);
        out.push_back(make_bump(grid, t0, w, amp));
    }
    return out;
}

double weighted_norm(const GridFunction& f) {
    const WeightedGrid& g = f.grid;
    const double h = g.step();
    double acc = 0.0;
    for (int i = 0; i < g.n_points; ++i) {
        double w = (i == 0 || i == g.n_points - 1) ? 0.5 : 1.0;
        acc += w * std::exp(-2.0 * g.c * g.node(i)) *
               std::norm(f.samples[static_cast<std::size_t>(i)]);
    }
    return std::sqrt(acc * h);
}

GridFunction shift(const GridFunction& f, double h_shift) {
    if (!std::isfinite(h_shift)) throw DomainError("shift must be finite");
    const WeightedGrid& g = f.grid;
    double na = f.support_a + h_shift, nb = f.support_b + h_shift;
    if (na < g.t_min - 1e-12 || nb > g.t_max + 1e-12)
        throw SupportOverflow(na, nb, g.t_min, g.t_max);
    if (h_shift == 0.0) return f;
    auto ev = std::make_shared<ShiftEvaluator>();
    ev->inner = f.eval;
    ev->h_shift = h_shift;
    return finish(g, ev, na, nb, f.overflow, f.lost_tail_bound);
}

GridFunction apply_dirichlet(const GridFunction& f) {
    long long n = needed_table(f.grid, f.support_a);
    return apply_series(
        f, std::vector<double>(static_cast<std::size_t>(n), 1.0), kTailOnes,
        inf());
}

GridFunction apply_moebius_inverse(const GridFunction& f) {
    long long n = needed_table(f.grid, f.support_a);
    MoebiusTable mu = moebius(n);
    std::vector<double> c(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i)
        c[static_cast<std::size_t>(i - 1)] = static_cast<double>(mu.mu(i));
    return apply_series(f, std::move(c), kTailMu, inf());
}

GridFunction apply_euler_product(const GridFunction& f,
                                 const std::vector<long long>& primes,
                                 int m_max) {
    if (m_max < 0) throw DomainError("m_max must be >= 0");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw DomainError("euler product factors must be prime");
        if (i > 0 && primes[i] <= primes[i - 1])
            throw DomainError("euler product primes must be increasing");
    }
    if (primes.empty() || m_max == 0) return f;  // empty product: identity

    long long n = needed_table(f.grid, f.support_a);
    std::vector<double> c{1.0};
    double log_n2 = 0.0;
    for (long long p : primes) {
        std::vector<double> factor(1, 1.0);  // m = 0 term
        long long pm = 1;
        for (int m = 1; m <= m_max; ++m) {
            if (pm > n / p) break;  // next power exceeds the table
            pm *= p;
            factor.resize(static_cast<std::size_t>(pm), 0.0);
            factor[static_cast<std::size_t>(pm - 1)] = 1.0;
        }
        c = convolve(c, factor, static_cast<std::size_t>(n));
        log_n2 +=
            static_cast<double>(m_max) * std::log(static_cast<double>(p));
    }
    return apply_series(f, std::move(c), kTailFinite, log_n2);
}

GridFunction resolvent_shift_minus_one(const GridFunction& g) {
    const WeightedGrid& gr = g.grid;
    if (std::abs(gr.c - 1.0) < 1e-6) throw CEqualsOne(gr.c);
    const int n = gr.n_points;
    const double h = gr.step();
    // Clip the samples to the support: compact support is then exact
    // below and the recurrences cannot amplify stray round-off.
    std::vector<cplx> gs(g.samples);
    for (int i = 0; i < n; ++i) {
        double t = gr.node(i);
        if (t < g.support_a || t > g.support_b)
            gs[static_cast<std::size_t>(i)] = cplx(0.0, 0.0);
    }
    std::vector<cplx> u(static_cast<std::size_t>(n));
    double sa, sb, bound;
    bool overflow;
    if (gr.c > 1.0) {
        // u(t) = int_{-inf}^t e^{t-tau} g(tau) dtau; the cell integral
        // of the linear representative is A g_i + B g_{i+1} exactly.
        const double E1 = std::expm1(h);
        const double B = (E1 - h) / h;
        const double A = E1 - B;
        const double eh = E1 + 1.0;
        u[0] = cplx(0.0, 0.0);
        for (int i = 0; i + 1 < n; ++i)
            u[static_cast<std::size_t>(i + 1)] =
                eh * u[static_cast<std::size_t>(i)] +
                A * gs[static_cast<std::size_t>(i)] +
                B * gs[static_cast<std::size_t>(i + 1)];
        sa = g.support_a;
        sb = gr.t_max;
        // past t_max the solution is exactly u(t_max) e^{t - t_max}
        double tail_amp = std::abs(u[static_cast<std::size_t>(n - 1)]);
        overflow = tail_amp > 0.0;
        bound = tail_amp * std::exp(-gr.c * gr.t_max) /
                std::sqrt(2.0 * (gr.c - 1.0));
    } else {
        // u(t) = -int_t^inf e^{t-tau} g(tau) dtau
        const double F1 = -std::expm1(-h);
        const double emh = 1.0 - F1;  // e^{-h}
        const double F2 = F1 - h * emh;
        const double Q = F2 / h;
        const double P = F1 - Q;
        u[static_cast<std::size_t>(n - 1)] = cplx(0.0, 0.0);
        for (int i = n - 2; i >= 0; --i)
            u[static_cast<std::size_t>(i)] =
                emh * u[static_cast<std::size_t>(i + 1)] -
                (P * gs[static_cast<std::size_t>(i)] +
                 Q * gs[static_cast<std::size_t>(i + 1)]);
        sa = gr.t_min;
        sb = g.support_b;
        // below t_min the solution is exactly u(t_min) e^{t - t_min},
        // absorbed by the weight only when c < 1
        double tail_amp = std::abs(u[0]);
        overflow = tail_amp > 0.0;
        bound = gr.c < 1.0 ? tail_amp * std::exp(-gr.c * gr.t_min) /
                                 std::sqrt(2.0 * (1.0 - gr.c))
                           : inf();
    }
    auto shared = std::make_shared<const std::vector<cplx>>(std::move(u));
    GridFunction r;
    r.grid = gr;
    r.support_a = sa;
    r.support_b = sb;
    r.overflow = overflow;
    r.lost_tail_bound = overflow ? bound : 0.0;
    r.samples = *shared;
    r.eval = std::make_shared<LinearInterpolant>(gr, shared, sa, sb);
    return r;
}

GridFunction apply_continued(const GridFunction& f, double tau_max,
                             double* tail_bound) {
    const WeightedGrid& g = f.grid;
    if (std::abs(g.c - 1.0) < 1e-6) throw CEqualsOne(g.c);
    if (!(tau_max > 0.0) || !std::isfinite(tau_max))
        throw DomainError("tau_max must be positive and finite");
    const double h = g.step();
    const int n = g.n_points;
    const double a = f.support_a, b = f.support_b;
    const double M = std::floor(tau_max);

    // Lipschitz bound on the skipped cells n > M: cell [n, n+1]
    // contributes |f(t - log n) - cell average| <= Lip(f) log(1 + 1/n)
    // and cells up to e^{t_max - a} can still see the support.
    double lip = 0.0, supf = 0.0;
    for (int i = 0; i < n; ++i) {
        supf = std::max(supf,
                        std::abs(f.samples[static_cast<std::size_t>(i)]));
        if (i + 1 < n)
            lip = std::max(lip,
                           std::abs(f.samples[static_cast<std::size_t>(i + 1)] -
                                    f.samples[static_cast<std::size_t>(i)]) /
                               h);
    }
    double missing = (g.t_max - a) - std::log(M + 1.0);
    double tail = lip * std::max(0.0, missing);
    if (tail_bound != nullptr) *tail_bound = tail;
    double tol = kTailTol * std::max(1.0, supf);
    if (tail > tol) throw TailNotNegligible(tail, tol);

    GridFunction res = resolvent_shift_minus_one(f);

    // Quadrature term.  The tau-integral over (0,1) is omitted: under
    // u = t - log tau it is exactly the decaying-branch resolvent
    // kernel, which the resolvent term above already contributes.
    auto shared_f = std::make_shared<const std::vector<cplx>>(f.samples);
    LinearInterpolant rep(g, shared_f, a, b);
    const std::vector<cplx>& fs = *shared_f;
    std::vector<cplx> out(res.samples);
    g_cost = 0;
    for (int i = 0; i < n; ++i) {
        double t = g.node(i);
        double xlo = std::exp(t - b), xhi = std::exp(t - a);
        if (xlo > M) continue;
        long long n_lo = std::max(1LL, static_cast<long long>(std::floor(xlo)));
        long long n_hi = xhi >= M ? static_cast<long long>(M)
                                  : static_cast<long long>(std::ceil(xhi));
        cplx acc(0.0, 0.0);
        for (long long m = n_lo; m <= n_hi; ++m) {
            double lm = std::log(static_cast<double>(m));
            acc += rep(t - lm);
            // minus int_m^{m+1} f(t - log tau) dtau
            //     = int f(u) e^{t-u} du over the image of the cell
            double u_hi = std::min(t - lm, b);
            double u_lo = std::max(t - std::log(static_cast<double>(m + 1)), a);
            if (u_lo >= u_hi) continue;
            int j0 = std::max(0, static_cast<int>((u_lo - g.t_min) / h));
            int j1 = std::min(n - 2, static_cast<int>((u_hi - g.t_min) / h));
            for (int j = j0; j <= j1; ++j) {
                double cl = g.node(j);
                double p = std::max(u_lo, cl), q = std::min(u_hi, cl + h);
                if (p >= q) continue;
                double L = q - p;
                cplx fl = fs[static_cast<std::size_t>(j)];
                cplx slope = (fs[static_cast<std::size_t>(j + 1)] - fl) / h;
                double G1 = -std::expm1(-L);
                double G2 = G1 - L * std::exp(-L);
                acc -= std::exp(t - p) *
                       ((fl + slope * (p - cl)) * G1 + slope * G2);
                ++g_cost;
            }
        }
        out[static_cast<std::size_t>(i)] += acc;
        if (g_cost > kCostCap)
            throw DomainError("operator evaluation exceeded the cost cap");
    }
    double sa = g.c > 1.0 ? a : g.t_min;
    auto shared = std::make_shared<const std::vector<cplx>>(std::move(out));
    GridFunction r;
    r.grid = g;
    r.support_a = sa;
    r.support_b = g.t_max;
    r.overflow = true;
    r.lost_tail_bound =
        res.lost_tail_bound +
        (g.c > 1.0 ? 2.0 * series_lost_bound(g, kTailOnes, a, supf, 0.0)
                   : inf());
    r.samples = *shared;
    r.eval = std::make_shared<LinearInterpolant>(g, shared, sa, g.t_max);
    return r;
}

GridFunction apply_multiplier_oracle(const GridFunction& f,
                                     MultiplierKind kind) {
    const WeightedGrid& g = f.grid;
    const int n = g.n_points;
    const double h = g.step();
    std::vector<cplx> u(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        u[static_cast<std::size_t>(i)] =
            std::exp(-g.c * g.node(i)) *
            f.samples[static_cast<std::size_t>(i)];
    double e_in = edge_mass_ratio(u);
    if (e_in > kEdgeMassTol) throw PadInsufficient(e_in, kEdgeMassTol);

    // Zero-pad to 4n before the cyclic convolution: the image tails
    // that leave the window on either side decay inside the pad
    // instead of wrapping onto the data.  Whatever mass still reaches
    // the central third of the pad is the wrap-around mass proper.
    const int np = 4 * n;
    u.resize(static_cast<std::size_t>(np), cplx(0.0, 0.0));
    fft_radix2(u, false);
    double peak = sup_abs(u);
    if (peak == 0.0) return f;  // zero function: nothing to do
    const ZetaEvaluator ev(64, 15, 1e-12);
    const double cut = kSpectralCut * peak;
    for (int k = 0; k < np; ++k) {
        cplx& U = u[static_cast<std::size_t>(k)];
        if (std::abs(U) <= cut) {
            U = cplx(0.0, 0.0);
            continue;
        }
        int ks = k <= np / 2 ? k : k - np;
        double omega =
            2.0 * kPi * static_cast<double>(ks) / (static_cast<double>(np) * h);
        cplx m;
        switch (kind) {
            case MultiplierKind::Zeta:
                m = zeta(ev, cplx(g.c, omega));
                break;
            case MultiplierKind::Xi:
                m = xi(ev, cplx(g.c, omega));
                break;
            case MultiplierKind::XiReflected:
                m = xi(ev, cplx(1.0 - g.c, -omega));
                break;
            case MultiplierKind::ZetaInverse:
                m = 1.0 / zeta(ev, cplx(g.c, omega));
                break;
        }
        U *= m;
    }
    fft_radix2(u, true);
    double total = 0.0, wrap = 0.0;
    for (int k = 0; k < np; ++k) {
        double m2 = std::norm(u[static_cast<std::size_t>(k)]);
        total += m2;
        if (k >= 2 * n && k < 3 * n) wrap += m2;
    }
    double e_wrap = total > 0.0 ? wrap / total : 0.0;
    if (e_wrap > kEdgeMassTol) throw PadInsufficient(e_wrap, kEdgeMassTol);

    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            std::exp(g.c * g.node(i)) * u[static_cast<std::size_t>(i)];
    auto shared = std::make_shared<const std::vector<cplx>>(std::move(out));
    GridFunction r;
    r.grid = g;
    r.support_a = g.t_min;
    r.support_b = g.t_max;
    r.samples = *shared;
    r.eval = std::make_shared<LinearInterpolant>(g, shared, g.t_min, g.t_max);
    return r;
}

void export_csv(const GridFunction& f, std::ostream& out) {
    char buf[128];
    for (int i = 0; i < f.grid.n_points; ++i) {
        const cplx& z = f.samples[static_cast<std::size_t>(i)];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", f.grid.node(i),
                      z.real(), z.imag());
        out << buf;
    }
}

GridFunction import_csv(const WeightedGrid& grid, std::istream& in) {
    std::vector<cplx> samples;
    samples.reserve(static_cast<std::size_t>(grid.n_points));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t = 0.0, re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &t, &re, &im) != 3)
            throw DomainError("malformed GridFunction CSV row: " + line);
        int i = static_cast<int>(samples.size());
        if (i >= grid.n_points)
            throw DomainError("GridFunction CSV has more rows than grid nodes");
        if (std::abs(t - grid.node(i)) > 1e-9 * std::max(1.0, std::abs(t)))
            throw DomainError("GridFunction CSV nodes do not match the grid");
        samples.emplace_back(re, im);
    }
    if (static_cast<int>(samples.size()) != grid.n_points)
        throw DomainError("GridFunction CSV has fewer rows than grid nodes");
    int lo = -1, hi = -1;
    for (int i = 0; i < grid.n_points; ++i) {
        if (std::abs(samples[static_cast<std::size_t>(i)]) > kVanishTol) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0)
        return make_grid_function(grid, std::move(samples), grid.t_min,
                                  grid.t_min);
    return make_grid_function(grid, std::move(samples), grid.node(lo),
                              grid.node(hi));
}

}  // namespace zst
