import logging
import sys
from typing import Any, Literal, TextIO

from pydantic import BaseModel, Field, model_validator

from ..spectra.cograph import (
    P4Witness,
    build_cotree,
    enumerate_cographs,
    enumerate_cotrees,
    format_cotree,
)
from ..spectra.config import CampaignPreset, Settings, load_presets
from ..spectra.errors import CapExceededError
from ..spectra.graph import parse_graph6, write_graph6
from ..spectra.lab import TheoremLab, render_table
from ..spectra.model import CampaignMode, CampaignSummary, VerificationReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2
EXIT_COUNTEREXAMPLE = 3


class CliConfig(BaseModel):
    """Validated view of the parsed command line."""

    subcommand: Literal["analyze", "enumerate", "verify", "cotree"]
    graph: str | None = None
    file: str | None = None
    stdin: bool = False
    format: str = "json"
    n_min: int | None = Field(default=None, ge=1)
    n_max: int | None = Field(default=None, ge=1)
    mode: CampaignMode = "exhaustive"
    samples: int = Field(default=100, ge=1)
    seed: int = 0
    workers: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check(self) -> "CliConfig":
        if self.subcommand in ("analyze", "cotree"):
            sources = [self.graph is not None, self.file is not None, self.stdin]
            if sum(sources) != 1:
                raise ValueError("Give exactly one input: a graph6 string, --file PATH, or -")
        if self.subcommand in ("enumerate", "verify"):
            if self.n_min is None or self.n_max is None:
                raise ValueError("An n-range is required")
            if self.n_max < self.n_min:
                raise ValueError(f"Invalid n-range {self.n_min}..{self.n_max}")
        return self

    def check_caps(self, settings: Settings) -> None:
        if self.n_max is None:
            return
        if self.subcommand == "enumerate":
            cap = settings.enumeration_cap
            what = "enumerate"
        elif self.subcommand == "verify":
            cap = {
                "exhaustive": settings.enumeration_cap,
                "random": settings.random_cap,
                "all-graphs": settings.all_graphs_cap,
            }[self.mode]
            what = f"{self.mode} campaign"
        else:
            return
        if self.n_max > cap:
            raise CapExceededError(what, self.n_max, cap)

    @classmethod
    def from_preset(cls, preset: CampaignPreset, **overrides: Any) -> "CliConfig":
        data: dict[str, Any] = {
            "subcommand": "verify",
            "n_min": preset.n_min,
            "n_max": preset.n_max,
            "mode": preset.mode,
            "samples": preset.samples,
            "seed": preset.seed,
        }
        data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.model_validate(data)


def preset(name: str) -> CampaignPreset:
    presets = load_presets()
    if name not in presets:
        known = ", ".join(sorted(presets)) or "none"
        raise ValueError(f"Unknown preset {name!r} (known: {known})")
    return presets[name]


def read_graph6_lines(cfg: CliConfig, stdin: TextIO | None = None) -> list[str]:
    if cfg.graph is not None:
        return [cfg.graph]
    if cfg.file is not None:
        with open(cfg.file, encoding="ascii") as f:
            text = f.read()
    else:
        text = (stdin or sys.stdin).read()
    return [line.strip() for line in text.splitlines() if line.strip()]


def _exit_code(failed: bool, counterexample: bool) -> int:
    if failed:
        return EXIT_CHECK_FAILED
    if counterexample:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def render_report(report: VerificationReport) -> str:
    a = report.analysis or {}
    lines = [f"graph6: {report.graph6}  n={report.n}  cograph={report.is_cograph}"]
    if "cotree" in a:
        lines.append(f"cotree: {a['cotree']}")
    if "p4_witness" in a:
        lines.append("P4 witness: " + " ".join(str(v) for v in a["p4_witness"]))
    if "char_poly" in a:
        lines.append(f"char poly: {a['char_poly']['text']}")
        spec = a["spectrum"]
        lines.append(f"mult(0)={spec['mult_zero']}  mult(-1)={spec['mult_minus_one']}")
        for rec in spec["factors"]:
            lines.append(f"  ({rec['factor']})^{rec['multiplicity']}")
    if "chain_cover" in a:
        cover = a["chain_cover"]
        lines.append(
            f"chains={cover['count']} regime={a['quotient']['regime']} threshold={a['threshold']}"
        )
    lines.append("")
    for name, rec in report.checks.items():
        lines.append(f"  {name:<28}{rec.status}")
    return "\n".join(lines)


def cmd_analyze(lab: TheoremLab, cfg: CliConfig, out: TextIO, stdin: TextIO | None = None) -> int:
    failed = counterexample = False
    for line in read_graph6_lines(cfg, stdin):
        g = parse_graph6(line)
        report = lab.verify(g, include_analysis=True)
        failed = failed or bool(report.failed())
        counterexample = counterexample or report.counterexample()
        if cfg.format == "text":
            out.write(render_report(report) + "\n\n")
        else:
            out.write(report.model_dump_json() + "\n")
    return _exit_code(failed, counterexample)


def cmd_cotree(cfg: CliConfig, out: TextIO, stdin: TextIO | None = None) -> int:
    for line in read_graph6_lines(cfg, stdin):
        result = build_cotree(parse_graph6(line))
        text = str(result) if isinstance(result, P4Witness) else format_cotree(result)
        out.write(text + "\n")
    return EXIT_OK


def cmd_enumerate(settings: Settings, cfg: CliConfig, out: TextIO, count_only: bool = False) -> int:
    assert cfg.n_min is not None and cfg.n_max is not None
    cfg.check_caps(settings)
    cap = settings.enumeration_cap
    for n in range(cfg.n_min, cfg.n_max + 1):
        if count_only:
            count = sum(1 for _ in enumerate_cotrees(n, cap=cap))
            prefix = f"{n} " if cfg.n_min != cfg.n_max else ""
            out.write(f"{prefix}{count}\n")
        elif cfg.format == "cotree":
            for t in enumerate_cotrees(n, cap=cap):
                out.write(format_cotree(t) + "\n")
        else:
            for g in enumerate_cographs(n, cap=cap):
                out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_verify(
    lab: TheoremLab,
    cfg: CliConfig,
    workers: int,
    out: TextIO,
    output_path: str | None = None,
) -> int:
    assert cfg.n_min is not None and cfg.n_max is not None
    cfg.check_caps(lab.settings)
    summary: CampaignSummary = lab.run_campaign(
        cfg.n_min,
        cfg.n_max,
        mode=cfg.mode,
        sample_count=cfg.samples,
        seed=cfg.seed,
        workers=workers,
    )
    if output_path:
        lab.save_summary(summary, output_path)
        logger.info("Summary written to %s", output_path)
    if cfg.format == "text":
        out.write(render_table(summary) + "\n")
    else:
        out.write(summary.model_dump_json(indent=2) + "\n")
    for f in summary.failures:
        logger.error("Check %s failed on %s", f.check, f.graph6)
    return _exit_code(bool(summary.failures), bool(summary.counterexamples))
