"""End-to-end pipeline through the real solver, CSV files and plots."""

import pytest

from src.domain.value_objects.system_config import ALL, BAD, GOOD
from src.infrastructure.container import Container


def small_setup(tmp_path, **system):
    base = {"L": 2, "K": 3, "N": 3, "P": 10.0, "lambda_total": 1.0}
    base.update(system)
    return {
        "system": base,
        "solver": {"n_starts": 2, "maxiter": 200},
        "simulation": {"n_services": 40, "seeds": [0, 1]},
        "theory": {"M": 20, "M1": 20, "M2": 20},
        "experiment": {"output_dir": str(tmp_path), "sources": "both"},
    }


def run(config, **overrides):
    container = Container(config)
    plan = container.create_experiment_plan(overrides)
    return container, container.run_experiment_use_case().execute(plan)


def test_smq_sweep_writes_summary_and_plots(tmp_path):
    config = small_setup(tmp_path)
    container, result = run(
        config,
        sweep=[("lambda", (0.5, 1.0))],
        plots=["delay_vs_lambda", "theory_vs_sim"],
    )

    assert result.success
    loaded = container.report_repository().load_summary(result.summary_path)
    assert [(r.source, r.lambda_total) for r in loaded] == [
        ("sim", 0.5),
        ("theory", 0.5),
        ("sim", 1.0),
        ("theory", 1.0),
    ]
    for row in loaded:
        assert row.user_class == ALL
        assert row.mean_sojourn_s > row.mean_service_s * 0.5
    sim = [r for r in loaded if r.source == "sim"]
    assert all(r.ci_lo <= r.mean_sojourn_s <= r.ci_hi for r in sim)
    assert all(r.seed_count == 2 for r in sim)
    assert sorted(p.rsplit("/", 1)[-1] for p in result.plot_paths) == [
        "delay_vs_lambda.svg",
        "theory_vs_sim.svg",
    ]


def test_dsmq_rate_splitting_reports_classes(tmp_path):
    config = small_setup(
        tmp_path,
        scheme="MMF-RS",
        queue_kind="DSMQ",
        S=2,
        C=3,
        good_user_set=[0, 1],
        channel_gains_db=[0, 0, -10],
    )
    _, result = run(config, samples=True)

    assert result.success
    classes = {(r.source, r.user_class) for r in result.rows}
    assert classes == {(s, c) for s in ("sim", "theory") for c in (ALL, GOOD, BAD)}
    assert len(result.sample_paths) == 1


@pytest.mark.parametrize("kind", ["LOOPBACK", "TWO_Q_SIMULTANEOUS"])
def test_other_disciplines_simulate_without_theory(tmp_path, kind):
    system = {"queue_kind": kind, "r_thresh": 0.1}
    if kind == "TWO_Q_SIMULTANEOUS":
        system.update(S=2, good_user_set=[0])
    _, result = run(small_setup(tmp_path, **system))
    assert result.success
    assert {r.source for r in result.rows} == {"sim"}


def test_same_seeds_same_summary_bytes(tmp_path):
    first = run(small_setup(tmp_path / "a"), sources="sim")[1].summary_path
    second = run(small_setup(tmp_path / "b"), sources="sim")[1].summary_path
    assert open(first, "rb").read() == open(second, "rb").read()
