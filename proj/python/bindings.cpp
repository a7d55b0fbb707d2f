#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "isingecho/config.hpp"
#include "isingecho/echo.hpp"
#include "isingecho/emit.hpp"
#include "isingecho/oracle.hpp"
#include "isingecho/spectrum.hpp"
#include "isingecho/sweep.hpp"

#ifndef ISINGECHO_VERSION
#define ISINGECHO_VERSION "0.0.0"
#endif

namespace py = pybind11;
using namespace pybind11::literals;
using namespace isingecho;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Loschmidt echo of a transverse-field Ising chain coupled to a two-level system";
    m.attr("__version__") = ISINGECHO_VERSION;

    py::enum_<GridConvention>(m, "GridConvention")
        .value("paper", GridConvention::PaperInteger)
        .value("antiperiodic", GridConvention::AntiPeriodic);

    py::class_<ChainParams>(m, "ChainParams")
        .def(py::init([](int N, double J, double lambda, double delta, double a) {
                 ChainParams p{.N = N, .J = J, .lambda = lambda, .delta = delta, .a = a};
                 p.validate();
                 return p;
             }),
             "N"_a = 8, "J"_a = 1.0, "lambda_"_a = 0.0, "delta"_a = 0.0, "a"_a = 1.0)
        .def_readwrite("N", &ChainParams::N)
        .def_readwrite("J", &ChainParams::J)
        .def_readwrite("lambda_", &ChainParams::lambda)
        .def_readwrite("delta", &ChainParams::delta)
        .def_readwrite("a", &ChainParams::a)
        .def("field_g", &ChainParams::field_g)
        .def("field_e", &ChainParams::field_e)
        .def("validate", &ChainParams::validate)
        .def("__repr__", [](const ChainParams& p) {
            return "ChainParams(N=" + std::to_string(p.N) + ", J=" + std::to_string(p.J) +
                   ", lambda_=" + std::to_string(p.lambda) + ", delta=" + std::to_string(p.delta) +
                   ", a=" + std::to_string(p.a) + ")";
        });

    py::class_<MomentumGrid>(m, "MomentumGrid")
        .def_readonly("k", &MomentumGrid::k)
        .def_readonly("convention", &MomentumGrid::convention);

    m.def("momentum_grid", &momentum_grid, "params"_a,
          "convention"_a = GridConvention::PaperInteger);
    m.def("dispersion", &dispersion, "k"_a, "g"_a, "params"_a);
    m.def("bogoliubov_angle", &bogoliubov_angle, "k"_a, "g"_a, "params"_a);

    py::class_<ModeData>(m, "ModeData")
        .def_readonly("k", &ModeData::k)
        .def_readonly("theta_g", &ModeData::theta_g)
        .def_readonly("theta_e", &ModeData::theta_e)
        .def_readonly("eps_g", &ModeData::eps_g)
        .def_readonly("eps_e", &ModeData::eps_e)
        .def_readonly("alpha", &ModeData::alpha)
        .def_readonly("sin2_2alpha", &ModeData::sin2_2alpha);

    m.def("mode_data", &mode_data, "k"_a, "params"_a);
    m.def("mode_factor", &mode_factor, "mode"_a, "t"_a);

    m.def("loschmidt_echo",
          py::overload_cast<const ChainParams&, double, GridConvention>(&loschmidt_echo),
          "params"_a, "t"_a, "convention"_a = GridConvention::PaperInteger);

    py::class_<EchoCurve>(m, "EchoCurve")
        .def_readonly("params", &EchoCurve::params)
        .def_readonly("grid", &EchoCurve::grid)
        .def_readonly("times", &EchoCurve::times)
        .def_readonly("values", &EchoCurve::values)
        .def_readonly("log_values", &EchoCurve::log_values);

    m.def(
        "echo_curve",
        [](const ChainParams& p, const std::vector<double>& times, GridConvention conv) {
            return echo_curve(p, times, conv);
        },
        "params"_a, "times"_a, "convention"_a = GridConvention::PaperInteger);
    m.def("time_grid", &time_grid, "t_min"_a, "t_max"_a, "dt"_a);

    py::class_<QubitState>(m, "QubitState")
        .def(py::init([](std::complex<double> c_g, std::complex<double> c_e) {
                 return QubitState{c_g, c_e};
             }),
             "c_g"_a = std::complex<double>(1.0, 0.0), "c_e"_a = std::complex<double>(0.0, 0.0))
        .def_readwrite("c_g", &QubitState::c_g)
        .def_readwrite("c_e", &QubitState::c_e)
        .def("validate", &QubitState::validate);

    m.def("purity_from_echo", &purity_from_echo, "qubit"_a, "echo"_a);
    m.def("partial_echo",
          py::overload_cast<const ChainParams&, double, double, GridConvention>(&partial_echo),
          "params"_a, "k_c"_a, "t"_a, "convention"_a = GridConvention::PaperInteger);

    py::class_<ShortTimeModel>(m, "ShortTimeModel")
        .def_readonly("k_c", &ShortTimeModel::k_c)
        .def_readonly("n_c", &ShortTimeModel::n_c)
        .def_readonly("energy", &ShortTimeModel::energy)
        .def_readonly("gamma", &ShortTimeModel::gamma)
        .def_readonly("singular", &ShortTimeModel::singular)
        .def("gaussian", &ShortTimeModel::gaussian, "t"_a);

    m.def("short_time_model", &short_time_model, "params"_a, "k_c"_a);
    m.def("quadratic_decay_coefficient",
          py::overload_cast<const ChainParams&, GridConvention>(&quadratic_decay_coefficient),
          "params"_a, "convention"_a = GridConvention::PaperInteger);
    m.def("fitted_decay_coefficient", &fitted_decay_coefficient, "params"_a, "t_fit"_a,
          "n_points"_a, "convention"_a = GridConvention::PaperInteger);

    py::class_<RevivalPeak>(m, "RevivalPeak")
        .def_readonly("t", &RevivalPeak::t)
        .def_readonly("value", &RevivalPeak::value);

    m.def("find_revival_peaks", &find_revival_peaks, "curve"_a, "threshold"_a);
    m.def("find_revival_times", &find_revival_times, "curve"_a, "threshold"_a);

    py::class_<OriginFit>(m, "OriginFit")
        .def_readonly("slope", &OriginFit::slope)
        .def_readonly("r_squared", &OriginFit::r_squared);

    m.def(
        "fit_through_origin",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return fit_through_origin(x, y);
        },
        "x"_a, "y"_a);

    m.def(
        "scaling_compare",
        [](const ChainParams& base, double alpha, const std::vector<double>& times,
           GridConvention conv) { return scaling_compare(base, alpha, times, conv); },
        "base"_a, "alpha"_a, "times"_a, "convention"_a = GridConvention::PaperInteger);

    m.def("oracle_echo_product", &oracle_echo_product, "params"_a, "t"_a,
          "convention"_a = GridConvention::PaperInteger);

    py::class_<SpinEdEcho>(m, "SpinEdEcho")
        .def_readonly("times", &SpinEdEcho::times)
        .def_readonly("values", &SpinEdEcho::values)
        .def_readonly("degenerate", &SpinEdEcho::degenerate);

    m.def(
        "spin_ed_echo",
        [](const ChainParams& p, const std::vector<double>& times) {
            return spin_ed_echo(p, times);
        },
        "params"_a, "times"_a);

    py::class_<GridRange>(m, "GridRange")
        .def(py::init([](double min, double max, double step) {
                 if (max < min) max = min;  // scalar shorthand: GridRange(x)
                 return GridRange{min, max, step};
             }),
             "min"_a, "max"_a = 0.0, "step"_a = 0.0)
        .def_readwrite("min", &GridRange::min)
        .def_readwrite("max", &GridRange::max)
        .def_readwrite("step", &GridRange::step)
        .def("scalar", &GridRange::scalar)
        .def("points", &GridRange::points);

    py::class_<OutputSpec>(m, "OutputSpec")
        .def(py::init([](std::string format, std::string path) {
                 return OutputSpec{std::move(format), std::move(path)};
             }),
             "format"_a, "path"_a)
        .def_readwrite("format", &OutputSpec::format)
        .def_readwrite("path", &OutputSpec::path);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("base", &SweepConfig::base)
        .def_readwrite("lambda_grid", &SweepConfig::lambda)
        .def_readwrite("time_grid", &SweepConfig::time)
        .def_readwrite("grid", &SweepConfig::grid)
        .def_readwrite("outputs", &SweepConfig::outputs)
        .def("validate", &SweepConfig::validate);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("config", &SweepResult::config)
        .def_readonly("lambdas", &SweepResult::lambdas)
        .def_readonly("times", &SweepResult::times)
        .def_readonly("surface", &SweepResult::surface)
        .def_readonly("wall_seconds", &SweepResult::wall_seconds)
        .def_readonly("threads", &SweepResult::threads)
        .def_readonly("version", &SweepResult::version)
        .def("value", [](const SweepResult& r, std::size_t i, std::size_t j) {
            if (i >= r.lambdas.size() || j >= r.times.size())
                throw py::index_error("surface index out of range");
            return r.surface[i * r.times.size() + j];
        });

    m.def("run_sweep", &run_sweep, "config"_a, "threads"_a = 0,
          py::call_guard<py::gil_scoped_release>());

    py::class_<ValleyReport>(m, "ValleyReport")
        .def_readonly("no_valley", &ValleyReport::no_valley)
        .def_readonly("lambda_min", &ValleyReport::lambda_min)
        .def_readonly("mean_echo", &ValleyReport::mean_echo)
        .def_readonly("lambda_min_depth", &ValleyReport::lambda_min_depth)
        .def_readonly("depth", &ValleyReport::depth);

    m.def("detect_valley", &detect_valley, "result"_a);

    m.def("load_sweep_config", &load_sweep_config, "path"_a);
    m.def(
        "config_from_json",
        [](const std::string& text) { return sweep_config_from_json(nlohmann::json::parse(text)); },
        "text"_a);
    m.def(
        "config_to_json",
        [](const SweepConfig& cfg) { return sweep_config_to_json(cfg).dump(2); },
        "config"_a);

    m.def(
        "emit_csv",
        [](const SweepResult& r, const std::string& path) { emit_csv(r, path); },
        "result"_a, "path"_a);
    m.def("emit_json", &emit_json, "result"_a, "path"_a);
    m.def(
        "emit_svg",
        [](const SweepResult& r, const std::string& path, const std::string& title) {
            SvgStyle style;
            style.title = title;
            emit_svg(r, path, style);
        },
        "result"_a, "path"_a, "title"_a = std::string());
    m.def(
        "emit_svg_curves",
        [](const std::vector<EchoCurve>& curves, const std::string& path, const std::string& title,
           const std::vector<std::string>& labels) {
            SvgStyle style;
            style.title = title;
            style.labels = labels;
            emit_svg(std::span<const EchoCurve>(curves.data(), curves.size()), path, style);
        },
        "curves"_a, "path"_a, "title"_a = std::string(),
        "labels"_a = std::vector<std::string>());
}
