#include "isingecho/oracle.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace isingecho {

namespace {

using cplx = std::complex<double>;

struct Spinor {
    cplx up, dn;
};

// Pauli decomposition h = c0 I + hx X + hy Y + hz Z of a Hermitian 2x2
struct PauliVec {
    double c0, hx, hy, hz, r;  // r = |(hx,hy,hz)|
};

PauliVec decompose(const Mat2& m) {
    PauliVec v;
    v.c0 = 0.5 * (m.m00.real() + m.m11.real());
    v.hx = m.m10.real();
    v.hy = m.m10.imag();
    v.hz = 0.5 * (m.m00.real() - m.m11.real());
    v.r = std::sqrt(v.hx * v.hx + v.hy * v.hy + v.hz * v.hz);
    return v;
}

// ground spinor of h (eigenvalue c0 - r); branch chosen to avoid cancellation
Spinor ground_spinor(const PauliVec& v) {
    if (v.r == 0.0) return {1.0, 0.0};  // degenerate block, any state
    Spinor s;
    if (v.hz <= 0.0) {
        s.up = cplx(v.hz - v.r, 0.0);
        s.dn = cplx(v.hx, v.hy);
    } else {
        s.up = cplx(-v.hx, v.hy);
        s.dn = cplx(v.hz + v.r, 0.0);
    }
    const double n = std::sqrt(std::norm(s.up) + std::norm(s.dn));
    s.up /= n;
    s.dn /= n;
    return s;
}

// U(t) psi with U = e^{-i c0 t} [cos(rt) I - i sin(rt) n.sigma]
Spinor evolve(const PauliVec& v, double t, const Spinor& s) {
    const double c = std::cos(v.r * t);
    const double sn = (v.r == 0.0) ? 0.0 : std::sin(v.r * t) / v.r;
    const cplx i(0.0, 1.0);
    // (n.sigma) psi, unnormalized direction (hx,hy,hz)
    const cplx hs_up = v.hz * s.up + cplx(v.hx, -v.hy) * s.dn;
    const cplx hs_dn = cplx(v.hx, v.hy) * s.up - v.hz * s.dn;
    const cplx phase = std::exp(-i * v.c0 * t);
    return {phase * (c * s.up - i * sn * hs_up), phase * (c * s.dn - i * sn * hs_dn)};
}

}  // namespace

double hermiticity_error(const Mat2& m) {
    double e = std::abs(m.m00.imag());
    e = std::max(e, std::abs(m.m11.imag()));
    e = std::max(e, std::abs(m.m01 - std::conj(m.m10)));
    return e;
}

Mat2 pair_block_hamiltonian(double k, double g, const ChainParams& p) {
    const double ka = k * p.a;
    const double hz = 2.0 * p.J * (g - std::cos(ka));
    const double hx = 2.0 * p.J * std::sin(ka);
    return {cplx(hz, 0.0), cplx(hx, 0.0), cplx(hx, 0.0), cplx(-hz, 0.0)};
}

PairBlock pair_block(double k, const ChainParams& p) {
    return {k, pair_block_hamiltonian(k, p.field_g(), p),
            pair_block_hamiltonian(k, p.field_e(), p)};
}

std::pair<double, double> pair_block_eigenvalues(const Mat2& m) {
    const PauliVec v = decompose(m);
    return {v.c0 - v.r, v.c0 + v.r};
}

double pair_block_echo_factor(const PairBlock& b, double t) {
    const PauliVec vg = decompose(b.h_g);
    const PauliVec ve = decompose(b.h_e);
    const Spinor g0 = ground_spinor(vg);
    const Spinor sg = evolve(vg, t, g0);
    const Spinor se = evolve(ve, t, g0);
    const cplx ov = std::conj(sg.up) * se.up + std::conj(sg.dn) * se.dn;
    return std::norm(ov);
}

double oracle_echo_product(const ChainParams& p, double t, GridConvention conv) {
    const auto grid = momentum_grid(p, conv);
    double acc = 0.0;
    for (double k : grid.k) acc += std::log(pair_block_echo_factor(pair_block(k, p), t));
    return std::exp(acc);
}

std::vector<double> spin_hamiltonian_dense(const ChainParams& p, double g) {
    p.validate();
    if (p.N > 14)
        throw std::invalid_argument("spin_hamiltonian_dense: N <= 14 required, got " +
                                    std::to_string(p.N));
    const std::size_t dim = std::size_t(1) << p.N;
    std::vector<double> h(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        double diag = 0.0;
        for (int j = 0; j < p.N; ++j) {
            const int zj = 1 - 2 * int((i >> j) & 1);
            const int zj1 = 1 - 2 * int((i >> ((j + 1) % p.N)) & 1);
            diag += -p.J * zj * zj1;
            const std::size_t flipped = i ^ (std::size_t(1) << j);
            h[flipped + dim * i] += -p.J * g;
        }
        h[i + dim * i] = diag;
    }
    return h;
}

SpinSpectrum spin_diagonalize(const ChainParams& p, double g) {
    SpinSpectrum s;
    s.n_sites = p.N;
    s.dim = std::size_t(1) << p.N;
    s.vectors = spin_hamiltonian_dense(p, g);
    s.energies.resize(s.dim);
    const lapack_int n = static_cast<lapack_int>(s.dim);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                           s.vectors.data(), n, s.energies.data());
    if (info != 0)
        throw std::runtime_error("spin_diagonalize: dsyevd failed, info=" + std::to_string(info));
    return s;
}

SpinChainState spin_ground_state(const SpinSpectrum& s, double degeneracy_tol) {
    const std::size_t dim = s.dim;
    const std::size_t mask = dim - 1;  // global spin flip = parity operator
    SpinChainState st;
    st.degenerate = dim > 1 && (s.energies[1] - s.energies[0]) < degeneracy_tol;
    // project the lowest column onto the even sector; fall back to the next
    // column if the projection vanishes (lowest state purely odd)
    for (std::size_t col = 0; col < dim; ++col) {
        const double* v = s.vectors.data() + dim * col;
        std::vector<double> plus(dim);
        double n2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            plus[i] = v[i] + v[i ^ mask];
            n2 += plus[i] * plus[i];
        }
        if (n2 > 1e-12) {
            const double inv = 1.0 / std::sqrt(n2);
            for (double& x : plus) x *= inv;
            st.amplitudes = std::move(plus);
            st.energy = s.energies[col];
            return st;
        }
    }
    throw std::runtime_error("spin_ground_state: no even-parity component found");
}

namespace {

// |psi(t)> = V e^{-i E t} V^T |psi0> with real V, psi0
struct SpectralEvolution {
    const SpinSpectrum& spec;
    std::vector<double> coeff;  // V^T psi0

    SpectralEvolution(const SpinSpectrum& s, const std::vector<double>& psi0)
        : spec(s), coeff(s.dim, 0.0) {
        const std::size_t dim = s.dim;
        for (std::size_t m = 0; m < dim; ++m) {
            const double* col = s.vectors.data() + dim * m;
            double acc = 0.0;
            for (std::size_t i = 0; i < dim; ++i) acc += col[i] * psi0[i];
            coeff[m] = acc;
        }
    }

    void state_at(double t, std::vector<cplx>& out) const {
        const std::size_t dim = spec.dim;
        out.assign(dim, cplx(0.0, 0.0));
        for (std::size_t m = 0; m < dim; ++m) {
            const double w = coeff[m];
            if (w == 0.0) continue;
            const double ph = -spec.energies[m] * t;
            const cplx amp = w * cplx(std::cos(ph), std::sin(ph));
            const double* col = spec.vectors.data() + dim * m;
            for (std::size_t i = 0; i < dim; ++i) out[i] += amp * col[i];
        }
    }
};

}  // namespace

std::vector<cplx> spin_evolve(const SpinSpectrum& s, std::span<const double> psi0, double t) {
    if (psi0.size() != s.dim) throw std::invalid_argument("spin_evolve: dimension mismatch");
    const SpectralEvolution evo(s, std::vector<double>(psi0.begin(), psi0.end()));
    std::vector<cplx> out;
    evo.state_at(t, out);
    return out;
}

SpinEdEcho spin_ed_echo(const ChainParams& p, std::span<const double> times) {
    const SpinSpectrum sg = spin_diagonalize(p, p.field_g());
    const SpinSpectrum se = spin_diagonalize(p, p.field_e());
    const SpinChainState psi0 = spin_ground_state(sg, 1e-10 * p.J);

    SpinEdEcho out;
    out.times.assign(times.begin(), times.end());
    out.degenerate = psi0.degenerate;
    out.values.reserve(times.size());

    const SpectralEvolution evo_g(sg, psi0.amplitudes);
    const SpectralEvolution evo_e(se, psi0.amplitudes);
    std::vector<cplx> phi_g, phi_e;
    for (double t : times) {
        evo_g.state_at(t, phi_g);
        evo_e.state_at(t, phi_e);
        cplx ov(0.0, 0.0);
        for (std::size_t i = 0; i < sg.dim; ++i) ov += std::conj(phi_g[i]) * phi_e[i];
        out.values.push_back(std::norm(ov));
    }
    return out;
}

}  // namespace isingecho
