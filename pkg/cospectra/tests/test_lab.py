import pytest

from src.spectra.cograph import enumerate_cographs, random_cograph
from src.spectra.config import Settings
from src.spectra.graph import (
    Graph,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    parse_graph6,
    path_graph,
    random_graph,
)
from src.spectra.lab import (
    CHECKS,
    GraphAnalysis,
    TheoremLab,
    check_class_removal,
    check_class_structure,
    check_conjecture,
    check_interlacing,
    check_interval_theorem,
    check_mult_bounds,
    check_multiplicity_formulas,
    check_rank_crosscheck,
    check_rank_law,
    check_sturm_total,
    check_threshold_characterization,
    check_threshold_simple,
    describe,
)
from src.spectra.model import ALL_CHECKS

STAR = complete_bipartite_graph(1, 3)


def test_every_check_is_registered() -> None:
    assert set(CHECKS) == set(ALL_CHECKS)


def test_interval_theorem_on_p4_and_cograph() -> None:
    rec = check_interval_theorem(parse_graph6("Ch"))
    assert rec.status == "pass"
    assert rec.actual == 1
    assert rec.witness["p4"] == [0, 1, 2, 3]

    rec = check_interval_theorem(parse_graph6("C~"))
    assert (rec.status, rec.actual) == ("pass", 0)


def test_interval_theorem_on_non_cograph_uses_witness() -> None:
    rec = check_interval_theorem(cycle_graph(5))
    assert rec.status == "pass"
    assert rec.expected == 1


def test_multiplicity_formulas_complete_graph() -> None:
    rec = check_multiplicity_formulas(parse_graph6("C~"))
    assert rec.status == "pass"
    assert rec.actual == {"mult_zero": 0, "mult_minus_one": 3}


@pytest.mark.parametrize(
    ("text", "mult_zero", "verbatim"),
    [("C?", 4, 3), ("A?", 2, 1)],
)
def test_multiplicity_formulas_isolated_vertex_correction(text, mult_zero, verbatim) -> None:
    rec = check_multiplicity_formulas(parse_graph6(text))
    assert rec.status == "pass"
    assert rec.actual["mult_zero"] == mult_zero
    assert rec.expected["mult_zero"] == mult_zero
    assert rec.expected["verbatim_mult_zero"] == verbatim
    assert rec.witness["verbatim_holds"] is False
    assert rec.witness["has_isolated_vertex"] is True


def test_verbatim_formula_holds_without_isolated_vertices() -> None:
    rec = check_multiplicity_formulas(cycle_graph(4))
    assert rec.status == "pass"
    assert rec.witness["verbatim_holds"] is True
    assert rec.actual == {"mult_zero": 2, "mult_minus_one": 0}


def test_cograph_only_checks_are_na_on_p4() -> None:
    p4 = path_graph(4)
    for check in (
        check_multiplicity_formulas,
        check_mult_bounds,
        check_conjecture,
        check_rank_law,
        check_class_structure,
    ):
        assert check(p4).status == "n/a"
    assert check_threshold_simple(p4).status == "n/a"


def test_mult_bounds() -> None:
    rec = check_mult_bounds(complete_bipartite_graph(3, 3))
    assert rec.status == "pass"
    assert rec.expected["class_count"] == 2
    assert rec.actual["max_multiplicity"] == 4

    rec = check_mult_bounds(empty_graph(4))
    assert rec.status == "pass"
    assert rec.expected["corollary_rhs"] == 4
    assert rec.expected["corollary_rhs_verbatim"] == 3


def test_threshold_simple() -> None:
    rec = check_threshold_simple(STAR)
    assert (rec.status, rec.actual) == ("pass", 1)
    assert check_threshold_simple(cycle_graph(4)).status == "n/a"


def test_conjecture_records_regime() -> None:
    rec = check_conjecture(cycle_graph(4))
    assert rec.status == "pass"
    assert rec.expected == 2
    assert rec.witness["regime"] == "antichain"
    assert rec.witness["class_bound_holds"] is True
    assert check_conjecture(STAR).witness["regime"] == "chain"


def test_conjecture_reports_counterexample(monkeypatch: pytest.MonkeyPatch) -> None:
    a = GraphAnalysis(complete_bipartite_graph(3, 3))
    # pretend the spectrum has a repeated non-trivial eigenvalue
    monkeypatch.setattr(type(a.spectrum), "max_nontrivial_multiplicity", lambda self: 5)
    rec = check_conjecture(a)
    assert rec.status == "counterexample"
    assert rec.actual == 5
    assert "chains" in rec.witness


def test_interlacing(settings: Settings) -> None:
    assert check_interlacing(path_graph(4), settings).status == "pass"
    assert check_interlacing(empty_graph(1), settings).status == "n/a"
    small = Settings(interlacing_max_n=4)
    assert check_interlacing(path_graph(5), small).status == "n/a"


@pytest.mark.parametrize("seed", range(20))
def test_interlacing_on_random_graphs(seed: int, settings: Settings) -> None:
    g = random_graph(3 + seed % 8, seed)
    assert check_interlacing(g, settings).status == "pass"


@pytest.mark.slow
def test_interlacing_on_two_hundred_random_graphs(settings: Settings) -> None:
    for seed in range(200):
        g = random_graph(2 + seed % 9, 1000 + seed)
        assert check_interlacing(g, settings).status == "pass"


def test_rank_checks() -> None:
    assert check_rank_law(cycle_graph(4)).status == "pass"
    assert check_rank_law(cycle_graph(4)).actual == 2
    for g in (path_graph(4), cycle_graph(5), random_graph(9, 3)):
        assert check_rank_crosscheck(g).status == "pass"
        assert check_sturm_total(g).status == "pass"


def test_class_structure_and_removal(settings: Settings) -> None:
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 0), (4, 0)])
    assert check_class_structure(g).status == "pass"
    rec = check_class_removal(g, settings)
    assert rec.status == "pass"
    assert rec.actual["removals"] > 0
    assert check_class_removal(random_cograph(9, 1), settings).status == "n/a"


def test_threshold_characterization() -> None:
    for g in (STAR, cycle_graph(4), path_graph(4), cycle_graph(5)):
        assert check_threshold_characterization(g).status == "pass"


def test_all_checks_pass_on_small_cographs(settings: Settings) -> None:
    lab = TheoremLab(settings)
    for n in range(1, 7):
        for g in enumerate_cographs(n):
            report = lab.verify(g)
            assert report.failed() == []
            assert not report.counterexample()
            assert report.checks["interval_theorem"].actual == 0


def test_verify_report_shape() -> None:
    lab = TheoremLab()
    report = lab.verify(path_graph(3), include_analysis=True, seed=7)
    assert report.graph6 == "Bg"
    assert report.is_cograph
    assert list(report.checks) == list(ALL_CHECKS)
    assert set(report.timing) == set(ALL_CHECKS)
    assert report.meta["seed"] == 7
    assert report.analysis["cotree"] == "J(1,U(0,2))"


def test_describe() -> None:
    info = describe(GraphAnalysis(STAR))
    assert info["cotree"] == "J(0,U(1,2,3))"
    assert info["threshold"] is True
    assert info["split"] is not None
    assert info["quotient"]["regime"] == "chain"
    assert info["chain_cover"]["count"] == 1
    assert info["char_poly"]["text"] == "x^4 - 3x^2"
    assert info["rank"] == {"A": 2, "A+I": 4}

    info = describe(GraphAnalysis(path_graph(4)))
    assert info["p4_witness"] == [0, 1, 2, 3]
    assert "split" not in info


def test_lab_rejects_unknown_check() -> None:
    with pytest.raises(ValueError):
        TheoremLab(checks=["interval_theorem", "nope"])


def test_lab_subset_of_checks() -> None:
    lab = TheoremLab(checks=["rank_law"])
    report = lab.verify(cycle_graph(4))
    assert list(report.checks) == ["rank_law"]
