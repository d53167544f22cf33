"""Per-graph theorem checks and verification campaigns.

Every check returns a ``CheckRecord``. Preconditions that do not hold (not a
cograph, not threshold, too large) give ``n/a`` so one schema covers all graphs.
A broken conjecture bound is reported as ``counterexample``, never as ``fail``.
"""

from __future__ import annotations

import json
import logging
import os
import time
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from functools import cached_property
from itertools import combinations
from typing import Any

import numpy as np

from . import __version__
from .cograph import (
    Cotree,
    P4Witness,
    all_graphs,
    build_cotree,
    enumerate_cographs,
    format_cotree,
    random_cograph,
)
from .config import Settings
from .errors import CampaignError, CapExceededError
from .graph import Graph, induced_subgraph, parse_graph6, write_graph6
from .model import (
    ALL_CHECKS,
    STATUSES,
    CampaignMode,
    CampaignSummary,
    CheckName,
    CheckRecord,
    CheckStatus,
    FailureEntry,
    VerificationReport,
)
from .order import (
    ChainCover,
    ClassPartition,
    QuotientOrder,
    build_order,
    class_partition,
    coduplication_classes,
    duplication_classes,
    is_split,
    min_chain_cover,
    order_regime,
    split_partition,
)
from .poly import (
    ExactPoly,
    MultiplicitySpectrum,
    count_distinct_roots,
    count_roots_open_interval,
    square_free_decomposition,
)
from .spectrum import (
    char_poly,
    count_eigs_open_interval,
    distinct_nonzero_rows,
    numeric_eigenvalues,
    rank_exact,
)
from .util import digest

logger = logging.getLogger(__name__)


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


class GraphAnalysis:
    """Lazily computed invariants of one graph, shared by all checks."""

    def __init__(self, g: Graph, settings: Settings | None = None):
        self.g = g
        self.settings = settings or Settings()

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.g)

    @cached_property
    def decomposition(self) -> Cotree | P4Witness | None:
        if self.g.n == 0:
            return None
        return build_cotree(self.g)

    @cached_property
    def is_cograph(self) -> bool:
        return not isinstance(self.decomposition, P4Witness)

    @property
    def witness(self) -> P4Witness | None:
        d = self.decomposition
        return d if isinstance(d, P4Witness) else None

    @cached_property
    def partition(self) -> ClassPartition:
        return class_partition(self.g)

    @cached_property
    def order(self) -> QuotientOrder:
        return build_order(self.g)

    @cached_property
    def cover(self) -> ChainCover:
        return min_chain_cover(self.order)

    @cached_property
    def is_threshold(self) -> bool:
        return self.cover.count <= 1

    @cached_property
    def spectrum(self) -> MultiplicitySpectrum:
        return square_free_decomposition(self.char_poly)

    @cached_property
    def char_poly(self) -> ExactPoly:
        return char_poly(self.g)

    @cached_property
    def rank0(self) -> int:
        return rank_exact(self.g, 0)

    @cached_property
    def rank1(self) -> int:
        return rank_exact(self.g, 1)

    @cached_property
    def has_isolated(self) -> bool:
        return bool(self.g.isolated_vertices())

    @cached_property
    def eigenvalues(self) -> list[float]:
        return numeric_eigenvalues(
            self.g, tol=self.settings.jacobi_tol, max_sweeps=self.settings.jacobi_max_sweeps
        )


def _analysis(g: Graph | GraphAnalysis, settings: Settings | None = None) -> GraphAnalysis:
    return g if isinstance(g, GraphAnalysis) else GraphAnalysis(g, settings)


def _na(reason: str) -> CheckRecord:
    return CheckRecord(status="n/a", witness={"reason": reason})


def _passed(ok: bool) -> CheckStatus:
    return "pass" if ok else "fail"


def _spectrum_witness(a: GraphAnalysis) -> dict[str, Any]:
    return {"graph6": a.graph6, "char_poly": a.char_poly.format(), **a.spectrum.to_json()}


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def check_interval_theorem(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if a.is_cograph:
        count = count_roots_open_interval(a.spectrum, -1, 0)
        return CheckRecord(
            status=_passed(count == 0),
            expected=0,
            actual=count,
            witness=None if count == 0 else _spectrum_witness(a),
        )
    w = a.witness
    assert w is not None
    sub = induced_subgraph(a.g, w.vertices)
    count = count_eigs_open_interval(sub, -1, 0)
    return CheckRecord(
        status=_passed(count == 1),
        expected=1,
        actual=count,
        witness={"graph6": a.graph6, "p4": list(w.vertices), "subgraph": write_graph6(sub)},
    )


def check_multiplicity_formulas(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if not a.is_cograph:
        return _na("not a cograph")
    part = a.partition
    verbatim_zero = part.duplication_excess()
    corrected_zero = verbatim_zero + (1 if a.has_isolated else 0)
    minus_one = part.coduplication_excess()
    actual = {"mult_zero": a.spectrum.mult_zero, "mult_minus_one": a.spectrum.mult_minus_one}
    expected = {
        "mult_zero": corrected_zero,
        "mult_minus_one": minus_one,
        "verbatim_mult_zero": verbatim_zero,
    }
    ok = actual["mult_zero"] == corrected_zero and actual["mult_minus_one"] == minus_one
    witness: dict[str, Any] = {
        "verbatim_holds": actual["mult_zero"] == verbatim_zero,
        "has_isolated_vertex": a.has_isolated,
    }
    if not ok:
        witness.update(
            graph6=a.graph6,
            duplication_classes=[list(c) for c in part.duplication_classes],
            coduplication_classes=[list(c) for c in part.coduplication_classes],
            spectrum=a.spectrum.to_json(),
        )
    return CheckRecord(status=_passed(ok), expected=expected, actual=actual, witness=witness)


def check_mult_bounds(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if not a.is_cograph:
        return _na("not a cograph")
    ell = a.partition.ell
    spec = a.spectrum
    worst_nontrivial = spec.max_nontrivial_multiplicity()
    worst_any = spec.max_multiplicity()
    rhs = spec.mult_zero + spec.mult_minus_one
    rhs_verbatim = a.partition.duplication_excess() + a.partition.coduplication_excess()
    ok = worst_nontrivial <= ell and worst_any <= rhs
    return CheckRecord(
        status=_passed(ok),
        expected={"class_count": ell, "corollary_rhs": rhs, "corollary_rhs_verbatim": rhs_verbatim},
        actual={"max_nontrivial_multiplicity": worst_nontrivial, "max_multiplicity": worst_any},
        witness=None if ok else _spectrum_witness(a),
    )


def check_threshold_simple(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if not a.is_threshold:
        return _na("not a threshold graph")
    repeated = [rec for rec in a.spectrum.nontrivial() if rec.multiplicity > 1]
    return CheckRecord(
        status=_passed(not repeated),
        expected=1,
        actual=a.spectrum.max_nontrivial_multiplicity(),
        witness=None
        if not repeated
        else {
            "graph6": a.graph6,
            "repeated": [{"factor": r.factor.format(), "multiplicity": r.multiplicity} for r in repeated],
        },
    )


def check_conjecture(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if not a.is_cograph:
        return _na("not a cograph")
    m = a.spectrum.max_nontrivial_multiplicity()
    k = a.cover.count
    regime = order_regime(a.order)
    witness: dict[str, Any] = {"regime": regime, "antichain": list(a.cover.antichain)}
    if regime == "antichain":
        # no two classes comparable, so k is the number of classes and m <= ell applies
        witness["class_count"] = a.partition.ell
        witness["class_bound_holds"] = m <= a.partition.ell
    if m <= k:
        return CheckRecord(status="pass", expected=k, actual=m, witness=witness)
    logger.warning("Conjecture counterexample: %s (multiplicity %d > %d chains)", a.graph6, m, k)
    witness.update(
        graph6=a.graph6,
        chains=[list(c) for c in a.cover.chains],
        spectrum=a.spectrum.to_json(),
    )
    return CheckRecord(status="counterexample", expected=k, actual=m, witness=witness)


def check_interlacing(g: Graph | GraphAnalysis, settings: Settings | None = None) -> CheckRecord:
    a = _analysis(g, settings)
    s = settings or a.settings
    n = a.g.n
    if n < 2:
        return _na("needs at least 2 vertices")
    if n > s.interlacing_max_n:
        return _na(f"n={n} above interlacing_max_n={s.interlacing_max_n}")
    lam = a.eigenvalues
    tol = s.interlacing_tol
    for v in range(n):
        keep = [u for u in range(n) if u != v]
        mu = numeric_eigenvalues(
            induced_subgraph(a.g, keep), tol=s.jacobi_tol, max_sweeps=s.jacobi_max_sweeps
        )
        for i, m in enumerate(mu):
            if lam[i] < m - tol or m < lam[i + 1] - tol:
                return CheckRecord(
                    status="fail",
                    expected="lambda_i >= mu_i >= lambda_(i+1)",
                    actual={"i": i, "lambda_i": lam[i], "mu_i": m, "lambda_next": lam[i + 1]},
                    witness={"graph6": a.graph6, "deleted_vertex": v, "lambda": lam, "mu": mu},
                )
    return CheckRecord(status="pass", expected="interlacing", actual={"deletions": n})


def check_rank_law(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if not a.is_cograph:
        return _na("not a cograph")
    rows = distinct_nonzero_rows(a.g)
    return CheckRecord(
        status=_passed(a.rank0 == rows),
        expected=rows,
        actual=a.rank0,
        witness=None if a.rank0 == rows else {"graph6": a.graph6},
    )


def check_rank_crosscheck(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    n = a.g.n
    expected = {"mult_zero": n - a.rank0, "mult_minus_one": n - a.rank1}
    actual = {"mult_zero": a.spectrum.mult_zero, "mult_minus_one": a.spectrum.mult_minus_one}
    ok = expected == actual
    return CheckRecord(
        status=_passed(ok),
        expected=expected,
        actual=actual,
        witness=None if ok else _spectrum_witness(a),
    )


def check_class_structure(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    if not a.is_cograph:
        return _na("not a cograph")
    part = a.partition
    dup = {v for c in part.duplication_classes for v in c}
    codup = {v for c in part.coduplication_classes for v in c}
    shared = sorted(dup & codup)
    needs_pair = a.g.n >= 2
    ok = not shared and (part.ell > 0 or not needs_pair)
    return CheckRecord(
        status=_passed(ok),
        expected={"shared_vertices": [], "has_class": needs_pair},
        actual={"shared_vertices": shared, "has_class": part.ell > 0},
        witness=None if ok else {"graph6": a.graph6},
    )


def _pairs(h: Graph, kind: str) -> list[tuple[int, int]]:
    classes = duplication_classes(h) if kind == "duplication" else coduplication_classes(h)
    return [p for c in classes for p in combinations(c, 2)]


def _same_kind(g: Graph, kind: str, u: int, v: int) -> bool:
    if kind == "duplication":
        return g.open_row(u) == g.open_row(v)
    return g.closed_row(u) == g.closed_row(v)


def check_class_removal(g: Graph | GraphAnalysis, settings: Settings | None = None) -> CheckRecord:
    """Removing part of a (co)duplication class creates no new pairs of its kind."""
    a = _analysis(g, settings)
    s = settings or a.settings
    if not a.is_cograph:
        return _na("not a cograph")
    if a.g.n > s.class_removal_max_n:
        return _na(f"n={a.g.n} above class_removal_max_n={s.class_removal_max_n}")
    part = a.partition
    tried = 0
    families = [("duplication", part.duplication_classes), ("coduplication", part.coduplication_classes)]
    for kind, classes in families:
        for cls in classes:
            for size in range(1, len(cls)):
                for removed in combinations(cls, size):
                    tried += 1
                    keep = [v for v in range(a.g.n) if v not in removed]
                    h = induced_subgraph(a.g, keep)
                    survivor = None
                    if size == len(cls) - 1:
                        (survivor,) = (v for v in cls if v not in removed)
                    for i, j in _pairs(h, kind):
                        u, v = keep[i], keep[j]
                        if survivor in (u, v):
                            bad = True
                        else:
                            bad = not _same_kind(a.g, kind, u, v)
                        if bad:
                            return CheckRecord(
                                status="fail",
                                expected=f"no new {kind} pair",
                                actual=[u, v],
                                witness={
                                    "graph6": a.graph6,
                                    "class": list(cls),
                                    "removed": list(removed),
                                    "pair": [u, v],
                                },
                            )
    return CheckRecord(status="pass", expected="no new pairs", actual={"removals": tried})


def check_threshold_characterization(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    by_definition = a.is_cograph and is_split(a.g)
    ok = a.is_threshold == by_definition
    return CheckRecord(
        status=_passed(ok),
        expected={"cograph_and_split": by_definition},
        actual={"total_order": a.is_threshold},
        witness=None if ok else {"graph6": a.graph6, "chains": [list(c) for c in a.cover.chains]},
    )


def check_sturm_total(g: Graph | GraphAnalysis) -> CheckRecord:
    a = _analysis(g)
    n = a.g.n
    total = sum(
        rec.multiplicity * count_distinct_roots(rec.factor, -n - 1, n + 1)
        for rec in a.spectrum.records
    )
    return CheckRecord(
        status=_passed(total == n),
        expected=n,
        actual=total,
        witness=None if total == n else _spectrum_witness(a),
    )


CHECKS: dict[str, Callable[..., CheckRecord]] = {
    "interval_theorem": check_interval_theorem,
    "multiplicity_formulas": check_multiplicity_formulas,
    "mult_bounds": check_mult_bounds,
    "threshold_simple": check_threshold_simple,
    "conjecture": check_conjecture,
    "interlacing": check_interlacing,
    "rank_law": check_rank_law,
    "rank_crosscheck": check_rank_crosscheck,
    "class_structure": check_class_structure,
    "class_removal": check_class_removal,
    "threshold_characterization": check_threshold_characterization,
    "sturm_total": check_sturm_total,
}


def describe(a: GraphAnalysis) -> dict[str, Any]:
    """Everything ``analyze`` prints besides the checks."""
    out: dict[str, Any] = {"n": a.g.n, "edges": a.g.edge_count()}
    if a.decomposition is None:
        out["cotree"] = None
    elif a.witness is not None:
        out["p4_witness"] = list(a.witness.vertices)
    else:
        out["cotree"] = format_cotree(a.decomposition)
    part = a.partition
    out["duplication_classes"] = [list(c) for c in part.duplication_classes]
    out["coduplication_classes"] = [list(c) for c in part.coduplication_classes]
    out["quotient"] = {
        "representatives": list(a.order.representatives),
        "classes": a.order.classes(),
        "less": sorted([list(p) for p in a.order.strict_less]),
        "regime": order_regime(a.order),
    }
    out["chain_cover"] = {
        "count": a.cover.count,
        "chains": [list(c) for c in a.cover.chains],
        "antichain": list(a.cover.antichain),
    }
    out["threshold"] = a.is_threshold
    if a.is_threshold:
        sp = split_partition(a.g)
        out["split"] = None if sp is None else {"clique": sp[0], "independent": sp[1]}
    out["char_poly"] = {"text": a.char_poly.format(), "coeffs": a.char_poly.to_json()}
    out["spectrum"] = a.spectrum.to_json()
    out["rank"] = {"A": a.rank0, "A+I": a.rank1}
    out["eigenvalues"] = [round(x, 9) for x in a.eigenvalues]
    return out


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------


def _sample_seed(seed: int, n: int, i: int) -> int:
    return int(np.random.SeedSequence([seed, n, i]).generate_state(1)[0])


def _verify_chunk(payload: tuple[list[str], dict[str, Any], tuple[str, ...]]) -> list[dict[str, Any]]:
    """Worker entry point; takes graph6 strings and returns compact results."""
    graph6s, settings_data, checks = payload
    lab = TheoremLab(Settings.model_validate(settings_data), checks=checks)
    out = []
    for g6 in graph6s:
        report = lab.verify(parse_graph6(g6))
        logger.debug("Verified %s (%d check(s) failed)", g6, len(report.failed()))
        out.append(
            {
                "graph6": g6,
                "n": report.n,
                "is_cograph": report.is_cograph,
                "statuses": {name: rec.status for name, rec in report.checks.items()},
                "failures": [
                    {"check": name, "witness": rec.witness}
                    for name, rec in report.checks.items()
                    if rec.status == "fail"
                ],
            }
        )
    return out


def _chunks(items: list[str], size: int) -> Iterator[list[str]]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


class TheoremLab:
    def __init__(self, settings: Settings | None = None, checks: Iterable[str] | None = None):
        self.settings = settings or Settings()
        self.checks: tuple[str, ...] = tuple(checks) if checks else ALL_CHECKS
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"Unknown check(s): {', '.join(unknown)}")

    def analysis(self, g: Graph) -> GraphAnalysis:
        return GraphAnalysis(g, self.settings)

    def run_check(self, name: CheckName | str, g: Graph | GraphAnalysis) -> CheckRecord:
        fn = CHECKS[name]
        a = g if isinstance(g, GraphAnalysis) else self.analysis(g)
        if name in ("interlacing", "class_removal"):
            return fn(a, self.settings)
        return fn(a)

    def verify(self, g: Graph, include_analysis: bool = False, seed: int | None = None) -> VerificationReport:
        a = self.analysis(g)
        checks: dict[str, CheckRecord] = {}
        timing: dict[str, float] = {}
        for name in self.checks:
            t0 = time.perf_counter()
            checks[name] = self.run_check(name, a)
            timing[name] = time.perf_counter() - t0
        return VerificationReport(
            graph6=a.graph6,
            n=g.n,
            is_cograph=a.is_cograph,
            checks=checks,
            analysis=describe(a) if include_analysis else None,
            timing=timing,
            meta={"version": __version__, "seed": seed, "generated_at": _now_iso()},
        )

    # -- campaign -------------------------------------------------------

    def campaign_graphs(
        self,
        n_min: int,
        n_max: int,
        mode: CampaignMode,
        sample_count: int = 100,
        seed: int = 0,
    ) -> Iterator[Graph]:
        s = self.settings
        cap = {
            "exhaustive": s.enumeration_cap,
            "random": s.random_cap,
            "all-graphs": s.all_graphs_cap,
        }[mode]
        if n_max > cap:
            raise CapExceededError(f"{mode} campaign", n_max, cap)
        for n in range(n_min, n_max + 1):
            if mode == "exhaustive":
                yield from enumerate_cographs(n, cap=s.enumeration_cap)
            elif mode == "all-graphs":
                yield from all_graphs(n)
            else:
                for i in range(sample_count):
                    yield random_cograph(n, _sample_seed(seed, n, i))

    def run_campaign(
        self,
        n_min: int,
        n_max: int,
        mode: CampaignMode = "exhaustive",
        sample_count: int = 100,
        seed: int = 0,
        workers: int = 1,
    ) -> CampaignSummary:
        if n_min < 1 or n_max < n_min:
            raise ValueError(f"Invalid n-range {n_min}..{n_max}")
        started = time.perf_counter()
        graph6s = [
            write_graph6(g) for g in self.campaign_graphs(n_min, n_max, mode, sample_count, seed)
        ]
        logger.info(
            "Campaign %s n=%d..%d: %d graphs, %d worker(s)", mode, n_min, n_max, len(graph6s), workers
        )
        settings_data = self.settings.model_dump()
        try:
            if workers <= 1 or len(graph6s) < 2:
                results = _verify_chunk((graph6s, settings_data, self.checks))
            else:
                size = max(1, len(graph6s) // (workers * 4))
                payloads = [(chunk, settings_data, self.checks) for chunk in _chunks(graph6s, size)]
                logger.debug(
                    "Split %d graphs into %d chunk(s) of up to %d", len(graph6s), len(payloads), size
                )
                results = []
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    for part in pool.map(_verify_chunk, payloads):
                        results.extend(part)
        except Exception as e:
            logger.error("Campaign %s n=%d..%d aborted, worker failed: %s", mode, n_min, n_max, e)
            raise CampaignError(f"Campaign worker failed: {e}") from e
        summary = self._summarize(results, mode, n_min, n_max, sample_count, seed)
        logger.info(
            "Campaign done in %.1fs: %d processed, %d failure(s), %d counterexample(s)",
            time.perf_counter() - started,
            summary.processed,
            len(summary.failures),
            len(summary.counterexamples),
        )
        return summary

    def _summarize(
        self,
        results: list[dict[str, Any]],
        mode: CampaignMode,
        n_min: int,
        n_max: int,
        sample_count: int,
        seed: int,
    ) -> CampaignSummary:
        results = sorted(results, key=lambda r: (r["n"], r["graph6"]))
        counts = {str(n): 0 for n in range(n_min, n_max + 1)}
        tallies = {name: dict.fromkeys(STATUSES, 0) for name in self.checks}
        failures: list[FailureEntry] = []
        counterexamples: list[str] = []
        cographs = 0
        for r in results:
            counts[str(r["n"])] += 1
            cographs += bool(r["is_cograph"])
            for name, status in r["statuses"].items():
                tallies[name][status] += 1
            for f in r["failures"]:
                failures.append(FailureEntry(graph6=r["graph6"], check=f["check"], witness=f["witness"]))
            if r["statuses"].get("conjecture") == "counterexample":
                counterexamples.append(r["graph6"])
        randomized = mode == "random"
        return CampaignSummary(
            mode=mode,
            n_min=n_min,
            n_max=n_max,
            seed=seed if randomized else None,
            samples=sample_count if randomized else None,
            processed=len(results),
            cographs=cographs,
            graph_counts=counts,
            tallies=tallies,
            failures=failures,
            counterexamples=counterexamples,
            meta={"version": __version__, "checks": list(self.checks)},
        )

    # -- persistence ----------------------------------------------------

    @staticmethod
    def summary_hash(summary: CampaignSummary) -> str:
        return digest(summary.model_dump(mode="json"))

    @staticmethod
    def save_summary(summary: CampaignSummary, path: str) -> None:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(summary.model_dump(mode="json"), f, indent=2, sort_keys=True)

    @staticmethod
    def load_summary(path: str) -> CampaignSummary | None:
        if not os.path.exists(path):
            return None
        with open(path, encoding="utf-8") as f:
            return CampaignSummary.model_validate(json.load(f))


def render_table(summary: CampaignSummary) -> str:
    header = f"{'check':<28}" + "".join(f"{s:>16}" for s in STATUSES)
    lines = [
        f"mode={summary.mode} n={summary.n_min}..{summary.n_max} "
        f"processed={summary.processed} cographs={summary.cographs}",
        "graphs per n: " + ", ".join(f"{n}:{c}" for n, c in summary.graph_counts.items()),
        "",
        header,
        "-" * len(header),
    ]
    for name, row in summary.tallies.items():
        lines.append(f"{name:<28}" + "".join(f"{row.get(s, 0):>16}" for s in STATUSES))
    lines.append("")
    if summary.failures:
        lines.append(f"FAILURES ({len(summary.failures)}):")
        lines.extend(f"  {f.check}: {f.graph6}" for f in summary.failures)
    else:
        lines.append("no theorem-check failures")
    if summary.counterexamples:
        lines.append(f"CONJECTURE COUNTEREXAMPLES ({len(summary.counterexamples)}):")
        lines.extend(f"  {g6}" for g6 in summary.counterexamples)
    else:
        lines.append("no conjecture counterexamples")
    return "\n".join(lines)
