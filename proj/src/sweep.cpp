#include "isingecho/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "isingecho/echo.hpp"

#ifndef ISINGECHO_VERSION
#define ISINGECHO_VERSION "0.0.0"
#endif

namespace isingecho {

std::vector<double> GridRange::points() const {
    if (scalar()) return {min};
    return time_grid(min, max, step);
}

void GridRange::validate(const char* name) const {
    if (!std::isfinite(min) || !std::isfinite(max) || !std::isfinite(step))
        throw std::invalid_argument(std::string(name) + " grid: values must be finite");
    if (max < min)
        throw std::invalid_argument(std::string(name) + " grid: max < min");
    if (min < max && !(step > 0.0))
        throw std::invalid_argument(std::string(name) + " grid: step must be > 0");
}

void SweepConfig::validate() const {
    base.validate();
    lambda.validate("lambda");
    time.validate("time");
    std::set<std::string> paths;
    for (const auto& out : outputs) {
        if (out.format != "csv" && out.format != "json" && out.format != "svg")
            throw std::invalid_argument("output format must be csv, json or svg, got '" +
                                        out.format + "'");
        if (out.path.empty()) throw std::invalid_argument("output path must not be empty");
        if (!paths.insert(out.path).second)
            throw std::invalid_argument("duplicate output path '" + out.path + "'");
    }
}

SweepResult run_sweep(const SweepConfig& cfg, int threads) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    SweepResult r;
    r.config = cfg;
    r.version = ISINGECHO_VERSION;
    r.lambdas = cfg.lambda.points();
    r.times = cfg.time.points();
    const std::size_t nl = r.lambdas.size();
    const std::size_t nt = r.times.size();
    r.surface.assign(nl * nt, 0.0);

    int nw = threads;
    if (nw <= 0) nw = static_cast<int>(std::thread::hardware_concurrency());
    nw = std::clamp(nw, 1, static_cast<int>(nl));
    r.threads = nw;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < nl;) {
            ChainParams p = cfg.base;
            p.lambda = r.lambdas[i];
            const auto modes = mode_table(p, momentum_grid(p, cfg.grid));
            double* row = r.surface.data() + i * nt;
            for (std::size_t j = 0; j < nt; ++j)
                row[j] = std::exp(log_loschmidt_echo(modes, r.times[j]));
        }
    };
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(nw);
        for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
    }

    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ValleyReport detect_valley(const SweepResult& result) {
    const std::size_t nl = result.lambdas.size();
    const std::size_t nt = result.times.size();
    if (nl == 0 || nt == 0) throw std::invalid_argument("detect_valley: empty surface");
    if (result.lambdas.front() > 0.8 || result.lambdas.back() < 1.0)
        throw std::invalid_argument("detect_valley: lambda grid must cover [0.8, 1.0]");

    ValleyReport rep;
    double best_mean = std::numeric_limits<double>::infinity();
    double best_depth = std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < nl; ++i) {
        const double* row = result.surface.data() + i * nt;
        double sum = 0.0, dmin = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < nt; ++j) {
            sum += row[j];
            dmin = std::min(dmin, row[j]);
            lo = std::min(lo, row[j]);
            hi = std::max(hi, row[j]);
        }
        const double mean = sum / double(nt);
        if (mean < best_mean) {
            best_mean = mean;
            rep.lambda_min = result.lambdas[i];
            rep.mean_echo = mean;
        }
        if (dmin < best_depth) {
            best_depth = dmin;
            rep.lambda_min_depth = result.lambdas[i];
            rep.depth = dmin;
        }
    }
    rep.no_valley = (hi - lo) < 1e-12;
    return rep;
}

}  // namespace isingecho
