#include "isingecho/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace isingecho {

void ChainParams::validate() const {
    if (N < 4) throw std::invalid_argument("ChainParams: N must be >= 4, got " + std::to_string(N));
    if (N % 2 != 0) throw std::invalid_argument("ChainParams: N must be even, got " + std::to_string(N));
    if (!(J > 0.0)) throw std::invalid_argument("ChainParams: J must be > 0");
    if (!(a > 0.0)) throw std::invalid_argument("ChainParams: a must be > 0");
    if (!std::isfinite(lambda) || !std::isfinite(delta))
        throw std::invalid_argument("ChainParams: lambda and delta must be finite");
}

MomentumGrid momentum_grid(const ChainParams& p, GridConvention conv) {
    p.validate();
    MomentumGrid grid;
    grid.convention = conv;
    const int half = p.N / 2;
    grid.k.reserve(half);
    const double unit = std::numbers::pi / (p.N * p.a);
    for (int n = 1; n <= half; ++n) {
        // PaperInteger: 2*pi*n/(N*a); AntiPeriodic: (2n-1)*pi/(N*a)
        const double mult = (conv == GridConvention::PaperInteger) ? 2.0 * n : 2.0 * n - 1.0;
        grid.k.push_back(mult * unit);
    }
    return grid;
}

double dispersion(double k, double g, const ChainParams& p) {
    const double c = std::cos(k * p.a);
    return 2.0 * p.J * std::sqrt(1.0 + g * g - 2.0 * g * c);
}

double bogoliubov_angle(double k, double g, const ChainParams& p) {
    const double ka = k * p.a;
    const double s = std::sin(ka);
    const double x = std::cos(ka) - g;
    // Zone-boundary snap: sin(pi) evaluates to ~1.2e-16, and atan2 would pick
    // the -pi branch for x < 0.  Physical grid momenta stay >= 2*pi/(N*a),
    // far above the snap window.
    if (std::abs(s) < 1e-12) {
        if (x < -1e-12) return std::numbers::pi;
        if (x > 1e-12) return 0.0;
        return -std::numbers::pi / 2.0;  // singular |g|=1 corner, grid-limit value
    }
    return std::atan2(-s, x);
}

ModeData mode_data(double k, const ChainParams& p) {
    ModeData m;
    m.k = k;
    const double gg = p.field_g();
    const double ge = p.field_e();
    m.theta_g = bogoliubov_angle(k, gg, p);
    m.theta_e = bogoliubov_angle(k, ge, p);
    m.eps_g = dispersion(k, gg, p);
    m.eps_e = dispersion(k, ge, p);
    m.alpha = 0.5 * (m.theta_g - m.theta_e);
    const double s = std::sin(2.0 * m.alpha);
    m.sin2_2alpha = s * s;
    return m;
}

std::vector<ModeData> mode_table(const ChainParams& p, const MomentumGrid& grid) {
    std::vector<ModeData> table;
    table.reserve(grid.k.size());
    for (double k : grid.k) table.push_back(mode_data(k, p));
    return table;
}

double mode_factor(const ModeData& m, double t) {
    const double s = std::sin(m.eps_e * t);
    return 1.0 - m.sin2_2alpha * (s * s);
}

double log_mode_factor(const ModeData& m, double t) {
    const double s = std::sin(m.eps_e * t);
    return std::log1p(-m.sin2_2alpha * (s * s));
}

}  // namespace isingecho
