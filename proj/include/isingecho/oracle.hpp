#pragma once

#include <complex>
#include <span>
#include <vector>

#include "isingecho/spectrum.hpp"

// Two independent brute-force routes against the analytic echo.
//
// Pair-block route: each (k,-k) pair is a two-level problem
//   h(g) = 2J [ (g - cos ka) Z + sin ka X ],
// evolved in closed form (no eigenvalue library); the echo factor is the
// squared overlap of the h_g ground state evolved under h_g versus h_e.
//
// Spin route: dense 2^N exact diagonalization of the full spin Hamiltonian,
// even-parity ground state, spectral-decomposition evolution under both
// branches.  Agrees with the analytic product on the AntiPeriodic grid (the
// grid the even sector quantizes on); deviation from the PaperInteger grid
// is a finite-size artifact the checks report.

namespace isingecho {

struct Mat2 {
    // row-major 2x2 complex
    std::complex<double> m00, m01, m10, m11;
};

double hermiticity_error(const Mat2& m);  // max |m - m^dagger| entry

struct PairBlock {
    double k = 0.0;
    Mat2 h_g, h_e;
};

Mat2 pair_block_hamiltonian(double k, double g, const ChainParams& p);
PairBlock pair_block(double k, const ChainParams& p);

// eigenvalues {-r, +r} + c0 of the Hermitian block, closed form
std::pair<double, double> pair_block_eigenvalues(const Mat2& m);

// |<g| e^{+i h_g t} e^{-i h_e t} |g>|^2 for the block's h_g ground state
double pair_block_echo_factor(const PairBlock& b, double t);

// prod_k F_k^oracle over the grid, accumulated in the log domain
double oracle_echo_product(const ChainParams& p, double t,
                           GridConvention conv = GridConvention::PaperInteger);

// --- dense spin chain ---------------------------------------------------

// H(g) = -J sum_j (sigma^z_j sigma^z_{j+1} + g sigma^x_j), periodic.
// Column-major 2^N x 2^N, bit j of the basis index = spin j (bit 0 -> z=+1).
// Requires N <= 14 (dense feasibility bound).
std::vector<double> spin_hamiltonian_dense(const ChainParams& p, double g);

struct SpinSpectrum {
    int n_sites = 0;
    std::size_t dim = 0;
    std::vector<double> energies;  // ascending
    std::vector<double> vectors;   // column-major eigenvectors
};

SpinSpectrum spin_diagonalize(const ChainParams& p, double g);

struct SpinChainState {
    std::vector<double> amplitudes;  // real ground-state vector, unit norm
    double energy = 0.0;
    bool degenerate = false;  // E1 - E0 below tolerance (parity doublet)
};

// Ground state projected onto the even parity sector (prod_j sigma^x_j = +1);
// this is the sector whose momenta are antiperiodic.  degeneracy_tol is an
// absolute gap threshold (1e-10 * J at the spin_ed_echo call site).
SpinChainState spin_ground_state(const SpinSpectrum& s, double degeneracy_tol = 1e-10);

// |psi(t)> = sum_m |m> e^{-i E_m t} <m|psi0>, from the precomputed spectrum
std::vector<std::complex<double>> spin_evolve(const SpinSpectrum& s,
                                              std::span<const double> psi0, double t);

struct SpinEdEcho {
    std::vector<double> times;
    std::vector<double> values;
    bool degenerate = false;
};

// |<psi_0| e^{+i H_g t} e^{-i H_e t} |psi_0>|^2 with psi_0 the even-parity
// ground state of H_g.  Diagonalizes both branches once, then evolves
// spectrally for every time.
SpinEdEcho spin_ed_echo(const ChainParams& p, std::span<const double> times);

}  // namespace isingecho
