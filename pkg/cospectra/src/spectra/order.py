"""Duplication classes, the equivalence ``≡``, and the neighborhood order ``<``.

``u ≡ v`` iff ``N(u) = N(v)`` or ``N[u] = N[v]``; on one representative per class
(the minimum vertex id) ``u < v`` iff ``N(u) ⊆ N[v]``.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Literal

from .errors import OrderAxiomError
from .graph import Graph

logger = logging.getLogger(__name__)

Regime = Literal["chain", "antichain", "general"]


@dataclass(frozen=True)
class ClassPartition:
    duplication_classes: tuple[tuple[int, ...], ...]
    coduplication_classes: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.duplication_classes)

    @property
    def s(self) -> int:
        return len(self.coduplication_classes)

    @property
    def ell(self) -> int:
        return self.r + self.s

    def duplication_excess(self) -> int:
        return sum(len(c) - 1 for c in self.duplication_classes)

    def coduplication_excess(self) -> int:
        return sum(len(c) - 1 for c in self.coduplication_classes)


@dataclass(frozen=True)
class QuotientOrder:
    representatives: tuple[int, ...]
    class_membership: tuple[int, ...]
    strict_less: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = defaultdict(list)
        for v, rep in enumerate(self.class_membership):
            groups[rep].append(v)
        return [groups[rep] for rep in self.representatives]

    def less(self, u: int, v: int) -> bool:
        return (u, v) in self.strict_less

    def comparable(self, u: int, v: int) -> bool:
        return self.less(u, v) or self.less(v, u)


@dataclass(frozen=True)
class ChainCover:
    chains: tuple[tuple[int, ...], ...]
    antichain: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.chains)


def _group_by(g: Graph, key: Callable[[int], int]) -> tuple[tuple[int, ...], ...]:
    groups: dict[int, list[int]] = defaultdict(list)
    for v in range(g.n):
        groups[key(v)].append(v)
    # dict keeps first-seen order, which is ascending minimum member
    return tuple(tuple(vs) for vs in groups.values() if len(vs) > 1)


def duplication_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    return _group_by(g, g.open_row)


def coduplication_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    return _group_by(g, g.closed_row)


def class_partition(g: Graph) -> ClassPartition:
    return ClassPartition(duplication_classes(g), coduplication_classes(g))


def is_reduced(g: Graph) -> bool:
    return not duplication_classes(g)


def is_coreduced(g: Graph) -> bool:
    return not coduplication_classes(g)


def equivalent(g: Graph, u: int, v: int) -> bool:
    if g.adjacent(u, v):
        return g.closed_row(u) == g.closed_row(v)
    return g.open_row(u) == g.open_row(v)


def equivalence_classes(g: Graph) -> QuotientOrder:
    membership = list(range(g.n))
    for v in range(g.n):
        for u in range(v):
            if membership[u] == u and equivalent(g, u, v):
                membership[v] = u
                break
    reps = tuple(v for v in range(g.n) if membership[v] == v)
    return QuotientOrder(representatives=reps, class_membership=tuple(membership))


def less_two_case(g: Graph, u: int, v: int) -> bool:
    """``<`` by cases: closed neighborhoods if u ~ v, open ones otherwise."""
    if equivalent(g, u, v):
        return False
    if g.adjacent(u, v):
        return g.closed_row(u) & ~g.closed_row(v) == 0
    return g.open_row(u) & ~g.open_row(v) == 0


def build_order(g: Graph) -> QuotientOrder:
    q = equivalence_classes(g)
    reps = q.representatives
    less = frozenset(
        (u, v) for u in reps for v in reps if u != v and g.open_row(u) & ~g.closed_row(v) == 0
    )
    _assert_partial_order(reps, less)
    return QuotientOrder(reps, q.class_membership, less)


def _assert_partial_order(reps: tuple[int, ...], less: frozenset[tuple[int, int]]) -> None:
    for u, v in less:
        if u == v:
            raise OrderAxiomError(f"Irreflexivity broken at {u}")
        if (v, u) in less:
            raise OrderAxiomError(f"Antisymmetry broken on {u}, {v}")
    succ: dict[int, set[int]] = defaultdict(set)
    for u, v in less:
        succ[u].add(v)
    for u, v in less:
        missing = succ[v] - succ[u]
        if missing:
            w = min(missing)
            raise OrderAxiomError(f"Transitivity broken: {u} < {v} < {w} but not {u} < {w}")


def _max_matching(reps: tuple[int, ...], less: frozenset[tuple[int, int]]) -> dict[int, int]:
    """Augmenting-path matching on the split graph left u -> right v for u < v.

    Returns right -> left.
    """
    succ: dict[int, list[int]] = {u: [] for u in reps}
    for u, v in sorted(less):
        succ[u].append(v)
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in succ[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    for u in reps:
        augment(u, set())
    return match_right


def min_chain_cover(q: QuotientOrder) -> ChainCover:
    """Minimum chain partition plus a maximum antichain of the same size (Dilworth)."""
    reps = q.representatives
    less = q.strict_less
    match_right = _max_matching(reps, less)
    match_left = {u: v for v, u in match_right.items()}

    chains: list[tuple[int, ...]] = []
    for start in reps:
        if start in match_right:
            continue
        chain = [start]
        while chain[-1] in match_left:
            chain.append(match_left[chain[-1]])
        chains.append(tuple(chain))

    # König: vertices reachable from free left vertices by alternating paths.
    succ: dict[int, list[int]] = defaultdict(list)
    for u, v in less:
        succ[u].append(v)
    reach_left = {u for u in reps if u not in match_left}
    reach_right: set[int] = set()
    frontier = list(reach_left)
    while frontier:
        u = frontier.pop()
        for v in succ[u]:
            if v in reach_right or match_left.get(u) == v:
                continue
            reach_right.add(v)
            w = match_right.get(v)
            if w is not None and w not in reach_left:
                reach_left.add(w)
                frontier.append(w)
    # cover = (L \ Z) | (R & Z); antichain = elements in neither side of the cover
    antichain = tuple(x for x in reps if x in reach_left and x not in reach_right)
    return ChainCover(chains=tuple(chains), antichain=antichain)


def order_regime(q: QuotientOrder) -> Regime:
    reps = q.representatives
    if len(reps) <= 1:
        return "chain"
    if not q.strict_less:
        return "antichain"
    total = all(q.comparable(u, v) for i, u in enumerate(reps) for v in reps[i + 1 :])
    return "chain" if total else "general"


def is_threshold(g: Graph) -> bool:
    return min_chain_cover(build_order(g)).count <= 1


def is_split(g: Graph) -> bool:
    """Hammer–Simeone degree-sequence test."""
    d = sorted(g.degrees(), reverse=True)
    m = 0
    for i, di in enumerate(d, start=1):
        if di >= i - 1:
            m = i
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def split_partition(g: Graph) -> tuple[list[int], list[int]] | None:
    """(clique, independent set) if g is split, else None. Checked before returning."""
    by_degree = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    m = 0
    for i, v in enumerate(by_degree, start=1):
        if g.degree(v) >= i - 1:
            m = i
    clique = sorted(by_degree[:m])
    independent = sorted(by_degree[m:])
    clique_mask = sum(1 << v for v in clique)
    indep_mask = sum(1 << v for v in independent)
    if any(g.closed_row(v) & clique_mask != clique_mask for v in clique):
        return None
    if any(g.open_row(v) & indep_mask for v in independent):
        return None
    return clique, independent

