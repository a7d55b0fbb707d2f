#pragma once

#include <vector>

// Single-particle data of the transverse-field Ising chain
//   H(g) = -J sum_j (sigma^z_j sigma^z_{j+1} + g sigma^x_j),   periodic, N even.
// After fermionization the chain decouples into independent (k,-k) pairs with
// dispersion eps(k;g) and Bogoliubov angle theta(k;g).  The central-spin
// perturbation shifts the field g = lambda -> lambda + delta for the excited
// qubit branch; everything downstream is built from the per-mode mismatch
// alpha_k between the two branches.

namespace isingecho {

struct ChainParams {
    int N = 8;            // number of sites, even, >= 4
    double J = 1.0;       // ferromagnetic coupling, > 0
    double lambda = 0.0;  // transverse field
    double delta = 0.0;   // qubit-conditional field shift
    double a = 1.0;       // lattice spacing, > 0

    double field_g() const { return lambda; }           // qubit ground branch
    double field_e() const { return lambda + delta; }   // qubit excited branch

    // throws std::invalid_argument on malformed input
    void validate() const;
};

enum class GridConvention {
    PaperInteger,   // k_n = 2*pi*n/(N*a), n = 1..N/2 (includes pi/a)
    AntiPeriodic,   // k_n = (2n-1)*pi/(N*a), n = 1..N/2 (even-parity sector)
};

struct MomentumGrid {
    std::vector<double> k;        // positive momenta, strictly increasing, in (0, pi/a]
    GridConvention convention;
};

// Positive-k grid for a chain of N sites.  AntiPeriodic is the grid the
// even fermion-parity sector of the finite chain actually quantizes on and
// is what exact diagonalization agrees with; PaperInteger is the integer
// grid commonly quoted alongside the factorized echo.
MomentumGrid momentum_grid(const ChainParams& p, GridConvention conv);

// eps(k;g) = 2J sqrt(1 + g^2 - 2 g cos(ka))  >= 2J|1-g|
double dispersion(double k, double g, const ChainParams& p);

// theta(k;g) = atan2(-sin(ka), cos(ka) - g), continuous branch in (-pi, pi].
// At the zone edge ka = pi the sine vanishes; the angle snaps to exactly pi
// (or 0 if g > cos(ka)), so alpha at the edge is exactly zero.  When both
// arguments vanish (|g| = 1 and ka -> pi) the grid-limit value -pi/2 is used.
double bogoliubov_angle(double k, double g, const ChainParams& p);

struct ModeData {
    double k = 0.0;
    double theta_g = 0.0, theta_e = 0.0;  // Bogoliubov angles of the two branches
    double eps_g = 0.0, eps_e = 0.0;      // dispersions of the two branches
    double alpha = 0.0;                   // (theta_g - theta_e) / 2
    double sin2_2alpha = 0.0;             // sin^2(2 alpha), the mode's echo weight
};

ModeData mode_data(double k, const ChainParams& p);

// Mode table over a full grid, ascending k.  This is the hot-path input of
// the echo accumulators; build once per parameter point and reuse.
std::vector<ModeData> mode_table(const ChainParams& p, const MomentumGrid& grid);

// Per-mode echo factor F_k(t) = 1 - sin^2(2 alpha_k) sin^2(eps_e(k) t), in [0,1].
double mode_factor(const ModeData& m, double t);

// log F_k(t) evaluated stably (log1p), the accumulation unit of the echo.
double log_mode_factor(const ModeData& m, double t);

}  // namespace isingecho
