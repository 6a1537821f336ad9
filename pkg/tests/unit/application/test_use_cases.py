"""Tests for the simulation, replication, theory and experiment use cases."""

import math

import pytest

from src.application.dtos.experiment_plan import ExperimentPlan
from src.application.dtos.simulation_request import SimulationRequest
from src.application.dtos.summary_row import SummaryRow
from src.application.dtos.theory_settings import TheorySettings
from src.application.ports.i_plot_renderer import IPlotRenderer
from src.application.ports.i_report_repository import IReportRepository
from src.application.services.simulation_engine import SimulationEngine
from src.application.use_cases import (
    RenderPlotsUseCase,
    RunExperimentUseCase,
    RunReplicationsUseCase,
    RunSimulationUseCase,
    RunTheoryUseCase,
    pooled_class_summary,
)
from src.domain.exceptions import ConfigValidationError, PlotError
from src.domain.value_objects.system_config import ALL, BAD, GOOD
from tests.conftest import ConstantServiceSampler


class MemoryRepository(IReportRepository):
    def __init__(self):
        self.summaries = {}
        self.samples = {}

    def save_summary(self, rows, output_path):
        self.summaries[output_path] = list(rows)
        return output_path

    def load_summary(self, path):
        return self.summaries[path]

    def save_samples(self, rows, output_path):
        self.samples[output_path] = list(rows)
        return output_path


class RecordingRenderer(IPlotRenderer):
    def __init__(self, fail=False):
        self.fail = fail
        self.calls = []

    def render(self, rows, kind, output_path):
        if self.fail:
            raise ValueError("nothing to draw")
        self.calls.append((kind, len(rows)))
        return output_path


class FailingReplications:
    """Replications stand-in that fails for one arrival rate."""

    def __init__(self, inner, bad_lambda):
        self.inner = inner
        self.bad_lambda = bad_lambda

    def execute(self, config, *args, **kwargs):
        if config.lambda_total == self.bad_lambda:
            raise RuntimeError("solver blew up")
        return self.inner.execute(config, *args, **kwargs)


def simulation(sampler=None):
    return RunSimulationUseCase(SimulationEngine(sampler or ConstantServiceSampler(0.05)))


def experiment(repository, renderer=None, replications=None):
    return RunExperimentUseCase(
        replications or RunReplicationsUseCase(simulation()),
        RunTheoryUseCase(ConstantServiceSampler(0.05)),
        repository,
        renderer,
    )


def plan(config, tmp_path, **kwargs):
    kwargs.setdefault("n_services", 60)
    kwargs.setdefault("theory", TheorySettings(eps=1e-6, M=2, M1=2, M2=2))
    return ExperimentPlan(base_config=config, output_dir=str(tmp_path), **kwargs)


class TestPooledClassSummary:
    def test_normal_interval(self):
        summary = pooled_class_summary(ALL, [1.0, 2.0, 3.0])
        half = 1.959963984540054 * 1.0 / math.sqrt(3)
        assert summary.mean == pytest.approx(2.0)
        assert summary.ci_lo == pytest.approx(2.0 - half)
        assert summary.ci_hi == pytest.approx(2.0 + half)
        assert summary.replications == 3

    def test_single_replication_has_no_interval(self):
        summary = pooled_class_summary(ALL, [1.5])
        assert summary.mean == 1.5
        assert math.isnan(summary.ci_lo) and math.isnan(summary.ci_hi)

    def test_nan_means_are_dropped(self):
        summary = pooled_class_summary(GOOD, [math.nan, 2.0, 4.0])
        assert summary.mean == pytest.approx(3.0)
        assert summary.replications == 2
        assert math.isnan(pooled_class_summary(BAD, [math.nan]).mean)


def test_simulation_rejects_invalid_config(small_config):
    request = SimulationRequest(small_config.replace(S=5, L=2), 10)
    with pytest.raises(ConfigValidationError):
        simulation().execute(request)


@pytest.mark.parametrize("workers", [1, 3])
def test_replications_keep_seed_order(small_config, workers):
    summary = RunReplicationsUseCase(simulation(), max_workers=workers).execute(
        small_config, 50, seeds=[5, 6, 7]
    )
    assert summary.seeds == (5, 6, 7)
    assert summary[ALL].replications == 3
    assert summary.mean_service_time == pytest.approx(0.05)
    assert summary.services == sum(r.n_services for r in summary.reports)


def test_replications_need_a_seed(small_config):
    with pytest.raises(ValueError):
        RunReplicationsUseCase(simulation()).execute(small_config, 50, seeds=[])


def test_theory_use_case_validates(small_config):
    with pytest.raises(ConfigValidationError):
        RunTheoryUseCase(ConstantServiceSampler()).execute(small_config.replace(K=0))


class TestRunExperiment:
    def test_sweep_writes_one_row_per_point_and_class(self, small_config, tmp_path):
        repository = MemoryRepository()
        sweep = ExperimentPlan.normalize_sweep({"lambda": [2.0, 4.0, 6.0], "S": [1, 2]})
        result = experiment(repository).execute(plan(small_config, tmp_path, sweep=sweep))

        assert result.success
        assert len(result.rows) == 6
        assert [(r.lambda_total, r.S) for r in result.rows] == [
            (2.0, 1), (2.0, 2), (4.0, 1), (4.0, 2), (6.0, 1), (6.0, 2)
        ]
        assert result.summary_path == str(tmp_path / "summary.csv")
        assert repository.summaries[result.summary_path] == list(result.rows)

    def test_both_sources_for_dsmq(self, dual_config, tmp_path):
        result = experiment(MemoryRepository()).execute(
            plan(dual_config, tmp_path, sources="both")
        )
        sim = {r.user_class for r in result.rows if r.source == "sim"}
        theory = {r.user_class for r in result.rows if r.source == "theory"}
        assert sim == theory == {ALL, GOOD, BAD}

    def test_theory_is_skipped_for_loopback(self, small_config, tmp_path, caplog):
        config = small_config.replace(queue_kind="LOOPBACK")
        result = experiment(MemoryRepository()).execute(plan(config, tmp_path, sources="theory"))
        assert result.rows == ()
        assert "No theory for LOOPBACK" in caplog.text

    def test_failed_point_is_recorded_and_others_still_run(self, small_config, tmp_path):
        replications = FailingReplications(RunReplicationsUseCase(simulation()), bad_lambda=4.0)
        sweep = ExperimentPlan.normalize_sweep({"lambda": [2.0, 4.0, 6.0]})
        result = experiment(MemoryRepository(), replications=replications).execute(
            plan(small_config, tmp_path, sweep=sweep, workers=2)
        )
        assert not result.success
        assert result.failed_points == 1
        failed = [r for r in result.rows if r.failed]
        assert failed[0].lambda_total == 4.0
        assert failed[0].error == "solver blew up"
        assert math.isnan(failed[0].mean_sojourn_s)
        assert [r.lambda_total for r in result.rows] == [2.0, 4.0, 6.0]

    def test_invalid_point_stops_everything(self, small_config, tmp_path):
        repository = MemoryRepository()
        sweep = ExperimentPlan.normalize_sweep({"S": [1, 9]})
        with pytest.raises(ConfigValidationError):
            experiment(repository).execute(plan(small_config, tmp_path, sweep=sweep))
        assert not repository.summaries

    def test_samples_written_per_point(self, small_config, tmp_path):
        repository = MemoryRepository()
        sweep = ExperimentPlan.normalize_sweep({"lambda": [2.0, 4.0]})
        result = experiment(repository).execute(
            plan(small_config, tmp_path, sweep=sweep, samples=True, seeds=(3, 4))
        )
        assert result.sample_paths == (
            str(tmp_path / "samples_p000.csv"),
            str(tmp_path / "samples_p001.csv"),
        )
        rows = repository.samples[result.sample_paths[0]]
        assert {r.replication for r in rows} == {3, 4}

    def test_plots_rendered_and_failures_reported(self, small_config, tmp_path):
        renderer = RecordingRenderer()
        result = experiment(MemoryRepository(), renderer).execute(
            plan(small_config, tmp_path, plots=("delay_vs_lambda",))
        )
        assert result.plot_paths == (str(tmp_path / "delay_vs_lambda.svg"),)
        assert renderer.calls == [("delay_vs_lambda", 1)]

        result = experiment(MemoryRepository(), RecordingRenderer(fail=True)).execute(
            plan(small_config, tmp_path, plots=("good_vs_bad",))
        )
        assert result.plot_paths == ()
        assert result.plot_errors == ("Plot 'good_vs_bad' failed: nothing to draw",)
        assert result.failed_points == 0
        assert not result.success
        assert result.summary_path == str(tmp_path / "summary.csv")


def summary_row(**values):
    fields = dict(source="sim", scheme="MMF", queue_kind="SMQ", S=1, C=2, lambda_total=4.0)
    fields.update(K=4, L=2, N=5, user_class=ALL, mean_sojourn_s=0.2)
    fields.update(values)
    return SummaryRow(**fields)


class TestRenderPlotsUseCase:
    def stored(self, rows, path="out/summary.csv"):
        repository = MemoryRepository()
        repository.save_summary(rows, path)
        return repository

    def test_draws_next_to_the_summary_by_default(self):
        renderer = RecordingRenderer()
        use_case = RenderPlotsUseCase(self.stored([summary_row()]), renderer)
        paths = use_case.execute("out/summary.csv", ["delay_vs_lambda", "theory_vs_sim"])
        assert paths == ["out/delay_vs_lambda.svg", "out/theory_vs_sim.svg"]
        assert renderer.calls == [("delay_vs_lambda", 1), ("theory_vs_sim", 1)]

    def test_failed_and_undefined_rows_are_left_out(self, tmp_path):
        rows = [
            summary_row(),
            summary_row(lambda_total=8.0, error="solver blew up"),
            summary_row(lambda_total=9.0, mean_sojourn_s=math.nan),
        ]
        renderer = RecordingRenderer()
        RenderPlotsUseCase(self.stored(rows), renderer).execute(
            "out/summary.csv", ["delay_vs_lambda"], str(tmp_path)
        )
        assert renderer.calls == [("delay_vs_lambda", 1)]

    @pytest.mark.parametrize(
        "rows", [[], [summary_row(error="boom")]], ids=["empty", "only-failed"]
    )
    def test_nothing_usable_is_an_error(self, rows):
        use_case = RenderPlotsUseCase(self.stored(rows), RecordingRenderer())
        with pytest.raises(PlotError, match="no successful rows"):
            use_case.execute("out/summary.csv", ["delay_vs_lambda"])

    def test_renderer_refusal_is_an_error(self):
        use_case = RenderPlotsUseCase(self.stored([summary_row()]), RecordingRenderer(fail=True))
        with pytest.raises(PlotError, match="good_vs_bad"):
            use_case.execute("out/summary.csv", ["good_vs_bad"])

    def test_needs_a_kind(self):
        use_case = RenderPlotsUseCase(self.stored([summary_row()]), RecordingRenderer())
        with pytest.raises(PlotError, match="No plot kind"):
            use_case.execute("out/summary.csv", [])
