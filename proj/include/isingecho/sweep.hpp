#pragma once

#include <string>
#include <vector>

#include "isingecho/spectrum.hpp"

// Sweep engine: evaluates the echo surface L(lambda, t) over a rectangular
// grid.  Rows (fixed lambda) are distributed over a worker pool; the surface
// is preallocated and indexed by grid position, so the result is bitwise
// independent of the worker count and completion order.

namespace isingecho {

struct GridRange {
    double min = 0.0, max = 0.0, step = 0.0;

    bool scalar() const { return !(min < max); }
    std::vector<double> points() const;
    void validate(const char* name) const;  // step > 0 unless scalar, min <= max
};

struct OutputSpec {
    std::string format;  // "csv" | "json" | "svg"
    std::string path;
};

struct SweepConfig {
    ChainParams base;  // lambda ignored; filled per sweep row
    GridRange lambda;
    GridRange time;
    GridConvention grid = GridConvention::PaperInteger;
    std::vector<OutputSpec> outputs;

    void validate() const;  // grids valid, output formats known, paths distinct
};

struct SweepResult {
    SweepConfig config;
    std::vector<double> lambdas;
    std::vector<double> times;
    std::vector<double> surface;  // row-major, surface[i*times.size() + j]
    double wall_seconds = 0.0;
    int threads = 1;
    std::string version;
};

// threads = 0 picks hardware concurrency (clamped to the row count).
SweepResult run_sweep(const SweepConfig& cfg, int threads = 0);

struct ValleyReport {
    bool no_valley = false;         // flat surface (delta = 0)
    double lambda_min = 0.0;        // argmin of the time-averaged echo
    double mean_echo = 1.0;         // time average at lambda_min
    double lambda_min_depth = 0.0;  // argmin of the pointwise-minimum metric
    double depth = 1.0;             // min over t at lambda_min_depth
};

// Locates the decoherence valley.  Both metrics are computed; the reported
// lambda_min uses the time average, which tracks the valley's center rather
// than the near-critical point where isolated dips are deepest (the depth
// metric is kept alongside).  Ties break toward smaller lambda.  Requires
// the lambda grid to cover [0.8, 1.0].
ValleyReport detect_valley(const SweepResult& result);

}  // namespace isingecho
