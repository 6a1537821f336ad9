"""Command-line entry point - sweeps of multicast queue simulations and theory."""

import argparse
import logging
import sys

import yaml

from .application.ports.i_plot_renderer import PLOT_KINDS
from .config import Config
from .domain.exceptions import ConfigValidationError, PlotError, ReportSchemaError
from .domain.services.config_validator import ConfigValidator
from .infrastructure.container import Container, parse_sweep_argument
from .utils import parse_int_list, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="Simulate and analyse multicast queues with MISO beamforming.",
    )
    source = parser.add_mutually_exclusive_group()
    parser.add_argument("--config", help="Configuration file (YAML or JSON)")
    parser.add_argument("--preset", help="Named preset from config/presets")
    parser.add_argument(
        "--full", action="store_true", help="Allow long-running full-scale presets"
    )
    parser.add_argument(
        "--sweep",
        action="append",
        metavar="KEY=V1,V2,...",
        help="Sweep axis; repeat for a Cartesian product (lambda, S, C, scheme, queue_kind, ...)",
    )
    parser.add_argument("--seeds", help="Replication seeds, e.g. 0,1,2 or 0-9")
    parser.add_argument("--services", type=int, help="Counted services per replication")
    parser.add_argument("--warmup", type=int, help="Services discarded before measuring")
    parser.add_argument("--out", help="Output directory")
    source.add_argument("--sim", dest="sources", action="store_const", const="sim")
    source.add_argument("--theory", dest="sources", action="store_const", const="theory")
    source.add_argument("--both", dest="sources", action="store_const", const="both")
    parser.add_argument(
        "--samples", action="store_true", default=None, help="Also write per-request CSVs"
    )
    parser.add_argument("--plot", action="append", choices=PLOT_KINDS, help="SVG figure kind")
    parser.add_argument(
        "--plot-from",
        metavar="SUMMARY_CSV",
        help="Only draw the --plot figures from an existing summary CSV",
    )
    parser.add_argument("--workers", type=int, help="Sweep points run concurrently")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    return parser


def render_plots(args: argparse.Namespace) -> int:
    """Draw figures from an existing summary file.

    An empty, malformed or unusable summary is an input error (exit code 1).
    """
    setup_logging(level=args.log_level or "INFO")
    if not args.plot:
        print("Error: --plot-from needs at least one --plot KIND", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        paths = Container({}).render_plots_use_case().execute(args.plot_from, args.plot, args.out)
    except (FileNotFoundError, ReportSchemaError, PlotError) as e:
        logger.error(f"Cannot plot {args.plot_from}: {e}")
        return EXIT_VALIDATION
    for path in paths:
        print(f"Wrote: {path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Run an experiment and return the process exit code.

    Exit codes: 0 success, 1 invalid configuration, 2 runtime failure.
    """
    args = build_parser().parse_args(argv)
    if args.plot_from:
        return render_plots(args)

    try:
        if args.preset and args.config:
            raise ValueError("Give either --config or --preset, not both")
        config_loader = Config.from_preset(args.preset) if args.preset else Config(args.config)
        if config_loader.full_scale and not args.full:
            raise ValueError(
                f"{config_loader.config_path.name} is a full-scale profile; pass --full to run it"
            )
        config_dict = config_loader.config
    except (FileNotFoundError, ValueError, yaml.YAMLError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_VALIDATION

    log_config = dict(config_dict.get("logging") or {})
    setup_logging(
        level=args.log_level or log_config.get("level", "INFO"), log_file=log_config.get("file")
    )

    try:
        container = Container(config_dict)
        overrides = {
            "sweep": [parse_sweep_argument(s) for s in args.sweep or []],
            "seeds": parse_int_list(args.seeds) if args.seeds else None,
            "n_services": args.services,
            "warmup_services": args.warmup,
            "output_dir": args.out,
            "sources": args.sources,
            "samples": args.samples,
            "plots": args.plot,
            "workers": args.workers,
        }
        plan = container.create_experiment_plan(overrides)
    except ConfigValidationError as e:
        logger.error(ConfigValidator().format_issues_report(list(e.issues)))
        return EXIT_VALIDATION
    except ValueError as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_VALIDATION

    try:
        result = container.run_experiment_use_case().execute(plan)
    except ConfigValidationError as e:
        logger.error(ConfigValidator().format_issues_report(list(e.issues)))
        return EXIT_VALIDATION
    except Exception as e:
        logger.error(f"Experiment failed: {e}", exc_info=True)
        return EXIT_RUNTIME

    print(f"Summary: {result.summary_path} ({len(result.rows)} rows)")
    for path in result.sample_paths + result.plot_paths:
        print(f"Wrote: {path}")
    if result.failed_points:
        logger.error(f"{result.failed_points} row(s) failed; see the error column")
    for error in result.plot_errors:
        logger.error(f"Plot not written: {error}")
    if not result.success:
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
