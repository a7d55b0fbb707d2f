#include "isingecho/echo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace isingecho {

void QubitState::validate() const {
    const double norm = std::norm(c_g) + std::norm(c_e);
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::invalid_argument("QubitState: |c_g|^2 + |c_e|^2 must be 1");
}

double log_loschmidt_echo(std::span<const ModeData> modes, double t) {
    double acc = 0.0;
    for (const ModeData& m : modes) acc += log_mode_factor(m, t);
    return acc;
}

double loschmidt_echo(const ChainParams& p, const MomentumGrid& grid, double t) {
    const auto modes = mode_table(p, grid);
    return std::exp(log_loschmidt_echo(modes, t));
}

double loschmidt_echo(const ChainParams& p, double t, GridConvention conv) {
    return loschmidt_echo(p, momentum_grid(p, conv), t);
}

std::vector<double> time_grid(double t_min, double t_max, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("time_grid: dt must be > 0");
    if (t_max < t_min) throw std::invalid_argument("time_grid: t_max < t_min");
    std::vector<double> out;
    const long n = std::lround(std::floor((t_max - t_min) / dt + 0.5));
    out.reserve(n + 1);
    for (long i = 0; i <= n; ++i) out.push_back(t_min + i * dt);
    return out;
}

EchoCurve echo_curve(const ChainParams& p, std::span<const double> times,
                     GridConvention conv) {
    EchoCurve curve;
    curve.params = p;
    curve.grid = momentum_grid(p, conv);
    curve.times.assign(times.begin(), times.end());
    const auto modes = mode_table(p, curve.grid);
    curve.log_values.reserve(times.size());
    curve.values.reserve(times.size());
    for (double t : times) {
        const double lg = log_loschmidt_echo(modes, t);
        curve.log_values.push_back(lg);
        curve.values.push_back(std::exp(lg));
    }
    return curve;
}

double purity_from_echo(const QubitState& q, double echo) {
    q.validate();
    if (echo < -1e-9 || echo > 1.0 + 1e-9)
        throw std::invalid_argument("purity_from_echo: echo outside [0, 1]");
    const double clamped = std::min(std::max(echo, 0.0), 1.0);
    const double w = std::norm(q.c_g) * std::norm(q.c_e);
    return 1.0 - 2.0 * w * (1.0 - clamped);
}

double partial_echo(const ChainParams& p, const MomentumGrid& grid, double k_c, double t) {
    double acc = 0.0;
    for (double k : grid.k) {
        if (k > k_c + 1e-12) break;
        acc += log_mode_factor(mode_data(k, p), t);
    }
    return std::exp(acc);
}

double partial_echo(const ChainParams& p, double k_c, double t, GridConvention conv) {
    return partial_echo(p, momentum_grid(p, conv), k_c, t);
}

double ShortTimeModel::gaussian(double t) const {
    return std::exp(-gamma * t * t);
}

ShortTimeModel short_time_model(const ChainParams& p, double k_c) {
    p.validate();
    if (!(k_c >= 0.0)) throw std::invalid_argument("short_time_model: k_c must be >= 0");
    ShortTimeModel m;
    m.k_c = k_c;
    m.n_c = std::lround(p.N * k_c * p.a / (2.0 * std::numbers::pi));
    if (m.n_c > p.N / 2) m.n_c = p.N / 2;
    const double nc = static_cast<double>(m.n_c);
    m.energy = 4.0 * std::numbers::pi * std::numbers::pi / (double(p.N) * p.N) *
               nc * (nc + 1.0) * (2.0 * nc + 1.0) / 6.0;
    const double det = 1.0 - p.lambda;
    if (det == 0.0) {
        m.singular = true;
        m.gamma = std::numeric_limits<double>::quiet_NaN();
    } else {
        m.gamma = 4.0 * p.J * p.J * p.delta * p.delta * m.energy / (det * det);
    }
    return m;
}

double quadratic_decay_coefficient(const ChainParams& p, const MomentumGrid& grid) {
    const auto modes = mode_table(p, grid);
    double acc = 0.0;
    for (const ModeData& m : modes) acc += m.sin2_2alpha * m.eps_e * m.eps_e;
    return acc;
}

double quadratic_decay_coefficient(const ChainParams& p, GridConvention conv) {
    return quadratic_decay_coefficient(p, momentum_grid(p, conv));
}

std::vector<RevivalPeak> find_revival_peaks(const EchoCurve& curve, double threshold) {
    std::vector<RevivalPeak> peaks;
    const auto& t = curve.times;
    const auto& v = curve.values;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (!(v[i - 1] < v[i] && v[i] >= v[i + 1])) continue;
        const double d2 = v[i + 1] - 2.0 * v[i] + v[i - 1];
        RevivalPeak pk{t[i], v[i]};
        if (d2 < 0.0) {
            const double h = 0.5 * (t[i + 1] - t[i - 1]);
            pk.t = t[i] + 0.5 * h * (v[i - 1] - v[i + 1]) / d2;
            pk.value = v[i] - (v[i + 1] - v[i - 1]) * (v[i + 1] - v[i - 1]) / (8.0 * d2);
        }
        if (pk.value > threshold) peaks.push_back(pk);
    }
    return peaks;
}

std::vector<double> find_revival_times(const EchoCurve& curve, double threshold) {
    std::vector<double> times;
    for (const RevivalPeak& pk : find_revival_peaks(curve, threshold)) times.push_back(pk.t);
    return times;
}

OriginFit fit_through_origin(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("fit_through_origin: need equal, nonzero sample counts");
    double sxy = 0.0, sxx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
        sy += y[i];
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_through_origin: degenerate abscissae");
    OriginFit fit;
    fit.slope = sxy / sxx;
    const double mean = sy / double(y.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - fit.slope * x[i];
        ss_res += r * r;
        const double d = y[i] - mean;
        ss_tot += d * d;
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

double fitted_decay_coefficient(const ChainParams& p, double t_fit, int n_points,
                                GridConvention conv) {
    if (!(t_fit > 0.0) || n_points < 1)
        throw std::invalid_argument("fitted_decay_coefficient: need t_fit > 0, n_points >= 1");
    const auto modes = mode_table(p, momentum_grid(p, conv));
    std::vector<double> t2(n_points), neg_log(n_points);
    for (int i = 1; i <= n_points; ++i) {
        const double t = t_fit * double(i) / double(n_points);
        t2[i - 1] = t * t;
        neg_log[i - 1] = -log_loschmidt_echo(modes, t);
    }
    return fit_through_origin(t2, neg_log).slope;
}

double scaling_compare(const ChainParams& base, double alpha,
                       std::span<const double> times, GridConvention conv) {
    base.validate();
    if (!(alpha > 0.0)) throw std::invalid_argument("scaling_compare: alpha must be > 0");
    const double n_scaled = base.N / alpha;
    if (std::abs(n_scaled - std::round(n_scaled)) > 1e-9)
        throw std::invalid_argument("scaling_compare: N must be divisible by alpha");
    ChainParams scaled = base;
    scaled.N = static_cast<int>(std::lround(n_scaled));
    scaled.delta = alpha * base.delta;
    scaled.validate();

    const auto modes_base = mode_table(base, momentum_grid(base, conv));
    const auto modes_scaled = mode_table(scaled, momentum_grid(scaled, conv));
    double max_dev = 0.0;
    for (double t : times) {
        const double lb = std::exp(log_loschmidt_echo(modes_base, t));
        const double ls = std::exp(log_loschmidt_echo(modes_scaled, t / alpha));
        max_dev = std::max(max_dev, std::abs(lb - ls));
    }
    return max_dev;
}

}  // namespace isingecho
