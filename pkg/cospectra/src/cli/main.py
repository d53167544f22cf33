"""Command line entry point: ``python -m src.cli.main``."""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from pydantic import ValidationError

from ..spectra import __version__
from ..spectra.errors import SpectraError
from ..spectra.util import parse_n_range
from . import commands
from .commands import EXIT_USAGE, CliConfig
from .dependencies import get_lab, get_settings, init_components, resolve_workers

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for failed checks
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="cospectra",
        description="Exact adjacency spectra of cographs and a theorem verification lab.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=["debug", "info", "warning", "error"])
    parser.add_argument("--config", help="settings YAML (overrides the lookup path)")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    for name, help_text in (
        ("analyze", "full report for one or more graph6 graphs"),
        ("cotree", "cotree text or a P4 witness"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", nargs="?", help="graph6 string, or - for stdin")
        p.add_argument("--file", help="file with one graph6 per line")
        if name == "analyze":
            p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("enumerate", help="all unlabeled cographs on N vertices")
    p.add_argument("n", help="N or A..B")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["graph6", "cotree"], default="graph6")

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--n", dest="n_range", help="N or A..B")
    p.add_argument("--mode", choices=["exhaustive", "random", "all-graphs"])
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--preset", help="named campaign from config/campaigns.yaml")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--output", help="also write the JSON summary to this path")
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    if args.subcommand in ("analyze", "cotree"):
        stdin = args.graph == "-"
        return CliConfig(
            subcommand=args.subcommand,
            graph=None if stdin else args.graph,
            file=args.file,
            stdin=stdin,
            format=getattr(args, "format", "json"),
        )
    if args.subcommand == "enumerate":
        lo, hi = parse_n_range(args.n)
        return CliConfig(subcommand="enumerate", n_min=lo, n_max=hi, format=args.format)

    overrides = {
        "mode": args.mode,
        "samples": args.samples,
        "seed": args.seed,
        "workers": args.workers,
        "format": args.format,
    }
    if args.n_range:
        overrides["n_min"], overrides["n_max"] = parse_n_range(args.n_range)
    if args.preset:
        return CliConfig.from_preset(commands.preset(args.preset), **overrides)
    return CliConfig.model_validate(
        {"subcommand": "verify", **{k: v for k, v in overrides.items() if v is not None}}
    )


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)

    components = init_components(args.config)
    level = (args.log_level or get_settings().log_level).upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    if components.settings_meta.get("path"):
        logger.info("Using settings from %s", components.settings_meta["path"])

    try:
        cfg = _config_from_args(args)
        if cfg.subcommand == "analyze":
            return commands.cmd_analyze(get_lab(), cfg, out)
        if cfg.subcommand == "cotree":
            return commands.cmd_cotree(cfg, out)
        if cfg.subcommand == "enumerate":
            return commands.cmd_enumerate(get_settings(), cfg, out, count_only=args.count_only)
        return commands.cmd_verify(
            get_lab(), cfg, resolve_workers(cfg.workers), out, output_path=args.output
        )
    except ValidationError as e:
        first = e.errors()[0]
        print(f"cospectra: {first['msg']}", file=sys.stderr)
        return EXIT_USAGE
    except (SpectraError, ValueError, OSError) as e:
        logger.debug("%s failed", args.subcommand, exc_info=True)
        print(f"cospectra: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.exception("Unexpected failure")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
