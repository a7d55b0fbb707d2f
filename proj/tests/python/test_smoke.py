import math

import pytest

import isingecho as ie


def chain(N=200, lam=0.9, delta=0.1):
    return ie.ChainParams(N=N, lambda_=lam, delta=delta)


def test_version():
    assert ie.__version__


def test_trivial_limits():
    p = chain()
    assert ie.loschmidt_echo(p, 0.0) == 1.0
    assert ie.loschmidt_echo(chain(delta=0.0), 7.3) == 1.0


def test_frozen_spot_value():
    assert ie.loschmidt_echo(chain(), 10.0) == pytest.approx(
        0.04076403974232219, rel=1e-10
    )


def test_echo_curve_bounds():
    curve = ie.echo_curve(chain(N=50), ie.time_grid(0.0, 5.0, 0.1))
    assert curve.values[0] == 1.0
    assert all(0.0 <= v <= 1.0 for v in curve.values)
    assert len(curve.times) == len(curve.values) == 51
    assert len(curve.grid.k) == 25


def test_momentum_grid_conventions():
    p = chain(N=8)
    paper = ie.momentum_grid(p, ie.GridConvention.paper)
    anti = ie.momentum_grid(p, ie.GridConvention.antiperiodic)
    assert paper.k[-1] == pytest.approx(math.pi)
    assert anti.k[0] == pytest.approx(math.pi / 8)


def test_purity():
    balanced = ie.QubitState(c_g=complex(math.sqrt(0.5)), c_e=complex(math.sqrt(0.5)))
    assert ie.purity_from_echo(balanced, 1.0) == 1.0
    assert ie.purity_from_echo(balanced, 0.0) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        ie.purity_from_echo(balanced, 1.5)


def test_oracle_agreement():
    p = chain(N=50, lam=1.5)
    t = 5.0
    assert abs(ie.loschmidt_echo(p, t) - ie.oracle_echo_product(p, t)) < 1e-10


def test_spin_ed_agreement():
    p = chain(N=8)
    times = ie.time_grid(0.0, 5.0, 0.5)
    ed = ie.spin_ed_echo(p, times)
    for t, v in zip(times, ed.values):
        analytic = ie.loschmidt_echo(p, t, ie.GridConvention.antiperiodic)
        assert v == pytest.approx(analytic, abs=1e-8)


def test_sweep_and_emitters(tmp_path):
    cfg = ie.SweepConfig()
    cfg.base = chain(N=16)
    cfg.lambda_grid = ie.GridRange(0.5, 1.5, 0.25)
    cfg.time_grid = ie.GridRange(0.0, 3.0, 0.5)
    result = ie.run_sweep(cfg, threads=2)
    assert len(result.surface) == len(result.lambdas) * len(result.times)
    assert result.value(0, 0) == 1.0

    report = ie.detect_valley(result)
    assert not report.no_valley
    assert 0.5 <= report.lambda_min <= 1.5

    csv = tmp_path / "surface.csv"
    svg = tmp_path / "surface.svg"
    ie.emit_csv(result, str(csv))
    ie.emit_svg(result, str(svg))
    text = csv.read_text()
    assert text.startswith("lambda,t,L\n")
    assert len(text.splitlines()) == 1 + len(result.surface)
    assert svg.read_text().startswith("<?xml")


def test_config_round_trip():
    cfg = ie.config_from_json(
        '{"N": 8, "delta": 0.1, "lambda": 0.9,'
        ' "time": {"min": 0, "max": 1, "step": 0.5}}'
    )
    assert cfg.base.N == 8
    again = ie.config_from_json(ie.config_to_json(cfg))
    assert ie.config_to_json(again) == ie.config_to_json(cfg)
    with pytest.raises(RuntimeError):
        ie.config_from_json('{"N": 8, "delta": 0.1, "lambda": 0.9, "time": 5}')


def test_decay_coefficient():
    p = chain()
    gamma2 = ie.quadratic_decay_coefficient(p)
    assert gamma2 > 0
    t = 0.01 / math.sqrt(gamma2)
    assert -math.log(ie.loschmidt_echo(p, t)) == pytest.approx(
        gamma2 * t * t, rel=0.01
    )


def test_revival_detection():
    p = chain(N=50)
    curve = ie.echo_curve(p, ie.time_grid(0.0, 17.5, 0.05))
    peaks = ie.find_revival_peaks(curve, 0.5)
    assert peaks
    assert peaks[0].t == pytest.approx(12.713740380816196, rel=1e-9)
