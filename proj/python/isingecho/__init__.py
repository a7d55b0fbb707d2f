"""Loschmidt echo of a transverse-field Ising chain coupled to a two-level system."""

from ._core import (
    ChainParams,
    EchoCurve,
    GridConvention,
    GridRange,
    ModeData,
    MomentumGrid,
    OriginFit,
    OutputSpec,
    QubitState,
    RevivalPeak,
    ShortTimeModel,
    SpinEdEcho,
    SweepConfig,
    SweepResult,
    ValleyReport,
    __version__,
    bogoliubov_angle,
    config_from_json,
    config_to_json,
    detect_valley,
    dispersion,
    echo_curve,
    emit_csv,
    emit_json,
    emit_svg,
    emit_svg_curves,
    find_revival_peaks,
    find_revival_times,
    fit_through_origin,
    fitted_decay_coefficient,
    load_sweep_config,
    loschmidt_echo,
    mode_data,
    mode_factor,
    momentum_grid,
    oracle_echo_product,
    partial_echo,
    purity_from_echo,
    quadratic_decay_coefficient,
    run_sweep,
    scaling_compare,
    short_time_model,
    spin_ed_echo,
    time_grid,
)

__all__ = [
    "ChainParams",
    "EchoCurve",
    "GridConvention",
    "GridRange",
    "ModeData",
    "MomentumGrid",
    "OriginFit",
    "OutputSpec",
    "QubitState",
    "RevivalPeak",
    "ShortTimeModel",
    "SpinEdEcho",
    "SweepConfig",
    "SweepResult",
    "ValleyReport",
    "__version__",
    "bogoliubov_angle",
    "config_from_json",
    "config_to_json",
    "detect_valley",
    "dispersion",
    "echo_curve",
    "emit_csv",
    "emit_json",
    "emit_svg",
    "emit_svg_curves",
    "find_revival_peaks",
    "find_revival_times",
    "fit_through_origin",
    "fitted_decay_coefficient",
    "load_sweep_config",
    "loschmidt_echo",
    "mode_data",
    "mode_factor",
    "momentum_grid",
    "oracle_echo_product",
    "partial_echo",
    "purity_from_echo",
    "quadratic_decay_coefficient",
    "run_sweep",
    "scaling_compare",
    "short_time_model",
    "spin_ed_echo",
    "time_grid",
]
