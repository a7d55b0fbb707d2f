#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "isingecho/echo.hpp"
#include "isingecho/sweep.hpp"

// File emitters.  All output is deterministic for fixed input: numbers are
// serialized with fixed printf formats (17 significant digits in CSV, which
// round-trips IEEE-754 doubles), keys are ordered, line endings are LF.

namespace isingecho {

// header "lambda,t,L"; one row per grid point, lambda-outer / t-inner
void emit_csv(const SweepResult& result, std::ostream& os);
void emit_csv(const SweepResult& result, const std::string& path);

// mirrors SweepResult: config, lambda, time, surface rows, metadata
void emit_json(const SweepResult& result, const std::string& path);

struct SvgStyle {
    std::string title;                // default picked per plot kind
    int width = 800;
    int height = 600;
    std::vector<std::string> labels;  // per-curve legend labels (optional)
};

// Surface -> grayscale heat map (white L=1, black L=0); a single-lambda
// sweep renders as the L(t) cross-section curve instead.
void emit_svg(const SweepResult& result, const std::string& path, const SvgStyle& style = {});

// One or several echo curves overlaid as polylines with axes and legend.
void emit_svg(std::span<const EchoCurve> curves, const std::string& path,
              const SvgStyle& style = {});
void emit_svg(const EchoCurve& curve, const std::string& path, const SvgStyle& style = {});

}  // namespace isingecho
