"""Tests for dependency wiring and plan construction."""

import pytest

from src.domain.value_objects.system_config import QueueKind
from src.infrastructure.adapters.slsqp_beamformer import SlsqpBeamformer
from src.infrastructure.container import Container, parse_sweep_argument

CONFIG = {
    "system": {"L": 2, "K": 4, "N": 5, "lambda_total": 10.0, "queue_kind": "SMQ"},
    "solver": {"n_starts": 3},
    "simulation": {"n_services": 500, "seeds": [0, 1], "workers": 2},
    "theory": {"M": 50},
    "experiment": {"sweep": {"lambda": [5, 10], "S": [1, 2]}, "sources": "both"},
}


def test_components_are_shared():
    container = Container(CONFIG)
    assert isinstance(container.beamformer(), SlsqpBeamformer)
    assert container.beamformer() is container.beamformer()
    assert container.beamformer().settings.n_starts == 3
    assert container.service_time_sampler().beamformer is container.beamformer()
    engine = container.run_simulation_use_case().engine
    assert engine.sampler is container.service_time_sampler()


def test_trace_writer_attached_when_configured(tmp_path):
    config = dict(CONFIG, solver={"trace_file": str(tmp_path / "trace.jsonl")})
    assert Container(config).beamformer().trace_writer is not None
    assert Container(CONFIG).beamformer().trace_writer is None


def test_plan_from_configuration():
    plan = Container(CONFIG).create_experiment_plan()
    assert plan.sweep == (("lambda_total", (5, 10)), ("S", (1, 2)))
    assert plan.seeds == (0, 1)
    assert plan.n_services == 500
    assert plan.workers == 2
    assert plan.theory.M == 50
    assert plan.run_simulation and plan.run_theory
    assert len(plan.points()) == 4


def test_command_line_overrides_win():
    overrides = {
        "sweep": [parse_sweep_argument("S=1,3"), parse_sweep_argument("queue_kind=LOOPBACK")],
        "seeds": [7],
        "n_services": None,
        "sources": "sim",
    }
    plan = Container(CONFIG).create_experiment_plan(overrides)
    assert dict(plan.sweep) == {
        "lambda_total": (5, 10),
        "S": (1, 3),
        "queue_kind": ("LOOPBACK",),
    }
    assert plan.seeds == (7,)
    assert plan.n_services == 500
    assert not plan.run_theory
    assert {p.queue_kind for p in plan.points()} == {QueueKind.LOOPBACK}


def test_parse_sweep_argument():
    assert parse_sweep_argument("lambda=10,20.5") == ("lambda", (10.0, 20.5))
    assert parse_sweep_argument("scheme=MMF,MMF-RS") == ("scheme", ("MMF", "MMF-RS"))
    with pytest.raises(ValueError):
        parse_sweep_argument("lambda")
    with pytest.raises(ValueError):
        parse_sweep_argument("S=")
