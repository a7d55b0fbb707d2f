#pragma once

#include <complex>
#include <span>
#include <vector>

#include "isingecho/spectrum.hpp"

// Loschmidt echo of the chain conditioned on the central qubit,
//   L(t) = prod_{k>0} [1 - sin^2(2 alpha_k) sin^2(eps_e(k) t)],
// accumulated in the log domain (sum of log1p terms, one exp at the end) so
// deep valleys at large N do not underflow mode by mode.  delta = 0 gives
// L = 1 bitwise: every log term is log1p(-0) = 0.

namespace isingecho {

struct QubitState {
    std::complex<double> c_g{1.0, 0.0};  // amplitude on the g branch
    std::complex<double> c_e{0.0, 0.0};  // amplitude on the e branch

    // throws std::invalid_argument unless |c_g|^2 + |c_e|^2 = 1 within 1e-10
    void validate() const;
};

// Sum of log-factors over a prebuilt mode table (the hot path).
double log_loschmidt_echo(std::span<const ModeData> modes, double t);

double loschmidt_echo(const ChainParams& p, const MomentumGrid& grid, double t);
double loschmidt_echo(const ChainParams& p, double t,
                      GridConvention conv = GridConvention::PaperInteger);

struct EchoCurve {
    ChainParams params;
    MomentumGrid grid;
    std::vector<double> times;
    std::vector<double> values;      // exp(log_values), saturates to 0 below ~1e-308
    std::vector<double> log_values;  // authoritative in deep valleys
};

EchoCurve echo_curve(const ChainParams& p, std::span<const double> times,
                     GridConvention conv = GridConvention::PaperInteger);

// Uniform time grid helper: t_i = t_min + i*dt, last point <= t_max + dt/2.
std::vector<double> time_grid(double t_min, double t_max, double dt);

// Qubit purity after tracing out the chain:
//   P(t) = 1 - 2 |c_g|^2 |c_e|^2 (1 - L(t)),  in [1/2, 1].
// Rejects echo values outside [0, 1] beyond 1e-9.
double purity_from_echo(const QubitState& q, double echo);

// Product restricted to modes with k <= k_c (+1e-12 tolerance on the cutoff);
// 1 for a cutoff below the smallest mode (empty product).
double partial_echo(const ChainParams& p, const MomentumGrid& grid, double k_c, double t);
double partial_echo(const ChainParams& p, double k_c, double t,
                    GridConvention conv = GridConvention::PaperInteger);

// Quadratic small-time model of the cutoff echo:
//   L_c(t) ~ exp(-gamma t^2),
//   gamma = 4 J^2 delta^2 E(K_c) / (1 - lambda)^2,
//   E(K_c) = (4 pi^2 / N^2) * N_c (N_c + 1)(2 N_c + 1) / 6,
//   N_c = round(N K_c a / (2 pi)).
// gamma diverges at the critical point; the singular flag is set instead of
// dividing by zero and gamma is NaN there.
struct ShortTimeModel {
    double k_c = 0.0;
    long n_c = 0;        // number of positive modes below the cutoff
    double energy = 0.0; // E(K_c)
    double gamma = 0.0;
    bool singular = false;  // lambda = 1

    double gaussian(double t) const;  // exp(-gamma t^2), NaN when singular
};

ShortTimeModel short_time_model(const ChainParams& p, double k_c);

// Exact leading decay coefficient of the full echo,
//   Gamma_2 = sum_{k>0} sin^2(2 alpha_k) eps_e(k)^2,  -ln L = Gamma_2 t^2 + O(t^4).
double quadratic_decay_coefficient(const ChainParams& p, const MomentumGrid& grid);
double quadratic_decay_coefficient(const ChainParams& p,
                                   GridConvention conv = GridConvention::PaperInteger);

// Local maxima of the sampled curve whose quadratically interpolated peak
// value exceeds the threshold.  The interpolation fits a parabola through
// the three samples around each discrete peak, so peak times fall between
// grid points.  A flat curve (delta = 0) has no interior maxima -> empty.
struct RevivalPeak {
    double t = 0.0;
    double value = 0.0;
};
std::vector<RevivalPeak> find_revival_peaks(const EchoCurve& curve, double threshold);
std::vector<double> find_revival_times(const EchoCurve& curve, double threshold);

// Invariance check L(t; N, delta) vs L(t/alpha; N/alpha, alpha*delta):
// returns the max absolute deviation over the given times.  N must be
// divisible by alpha.
double scaling_compare(const ChainParams& base, double alpha,
                       std::span<const double> times,
                       GridConvention conv = GridConvention::PaperInteger);

// Least squares through the origin, y = slope * x.  r_squared uses the
// conventional 1 - SS_res / SS_tot with SS_tot about the mean of y.
struct OriginFit {
    double slope = 0.0;
    double r_squared = 0.0;
};
OriginFit fit_through_origin(std::span<const double> x, std::span<const double> y);

// Fit -ln L = c t^2 over n_points uniform samples t_i = t_fit * i / n_points
// (i = 1..n_points); the small-t limit of c is quadratic_decay_coefficient.
double fitted_decay_coefficient(const ChainParams& p, double t_fit, int n_points,
                                GridConvention conv = GridConvention::PaperInteger);

}  // namespace isingecho
