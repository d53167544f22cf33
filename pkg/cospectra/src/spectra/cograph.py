"""Cograph recognition, cotrees, and enumeration of unlabeled cographs.

A cotree has alternating UNION (``U``) and JOIN (``J``) internal nodes, each with
at least two children, and one leaf per vertex. Its text form is ``J(0,U(1,2))``.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import cache
from typing import Literal

import networkx as nx
import numpy as np

from .errors import CapExceededError, CographError
from .graph import (
    Graph,
    components_within,
    disjoint_union,
    empty_graph,
    from_networkx,
    join,
    relabel,
)
from .util import iter_bits

logger = logging.getLogger(__name__)

Op = Literal["U", "J"]

LEAF_TOKEN = "*"
DEFAULT_ENUMERATION_CAP = 12
ATLAS_MAX_N = 7


@dataclass(frozen=True)
class Leaf:
    vertex: int


@dataclass(frozen=True)
class Node:
    op: Op
    children: tuple[Cotree, ...]


Cotree = Leaf | Node


@dataclass(frozen=True)
class P4Witness:
    a: int
    b: int
    c: int
    d: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"P4 witness: {self.a} {self.b} {self.c} {self.d}"


def _other(op: Op) -> Op:
    return "J" if op == "U" else "U"


def leaves(t: Cotree) -> list[int]:
    if isinstance(t, Leaf):
        return [t.vertex]
    out: list[int] = []
    for c in t.children:
        out.extend(leaves(c))
    return out


def leaf_count(t: Cotree) -> int:
    if isinstance(t, Leaf):
        return 1
    return sum(leaf_count(c) for c in t.children)


def validate_cotree(t: Cotree) -> None:
    def walk(node: Cotree, parent_op: Op | None) -> None:
        if isinstance(node, Leaf):
            return
        if node.op not in ("U", "J"):
            raise CographError(f"Unknown cotree operator {node.op!r}")
        if len(node.children) < 2:
            raise CographError(f"{node.op}-node with {len(node.children)} child(ren)")
        if node.op == parent_op:
            raise CographError(f"{node.op}-node directly below another {node.op}-node")
        for c in node.children:
            walk(c, node.op)

    walk(t, None)
    ids = sorted(leaves(t))
    if ids != list(range(len(ids))):
        raise CographError(f"Leaf ids must be exactly 0..{len(ids) - 1}, got {ids}")


# ---------------------------------------------------------------------------
# Text forms
# ---------------------------------------------------------------------------


def format_cotree(t: Cotree) -> str:
    if isinstance(t, Leaf):
        return str(t.vertex)
    return f"{t.op}({','.join(format_cotree(c) for c in t.children)})"


def canonical_encoding(t: Cotree) -> str:
    """Label-free encoding; children sorted by (leaf count, encoding)."""
    return _canonical(t)[1]


def _canonical(t: Cotree) -> tuple[int, str]:
    if isinstance(t, Leaf):
        return 1, LEAF_TOKEN
    parts = sorted(_canonical(c) for c in t.children)
    return sum(k for k, _ in parts), f"{t.op}({','.join(enc for _, enc in parts)})"


def _parse(text: str, make_leaf: Callable[[str, int], Leaf]) -> Cotree:
    pos = 0

    def node() -> Cotree:
        nonlocal pos
        if pos >= len(text):
            raise CographError(f"Unexpected end of cotree text at {pos}")
        ch = text[pos]
        if ch in "UJ":
            op: Op = "U" if ch == "U" else "J"
            pos += 1
            if pos >= len(text) or text[pos] != "(":
                raise CographError(f"Expected '(' at {pos} in {text!r}")
            pos += 1
            children = [node()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                children.append(node())
            if pos >= len(text) or text[pos] != ")":
                raise CographError(f"Expected ')' at {pos} in {text!r}")
            pos += 1
            return Node(op, tuple(children))
        start = pos
        while pos < len(text) and text[pos] not in ",()":
            pos += 1
        token = text[start:pos]
        if not token:
            raise CographError(f"Empty leaf at {start} in {text!r}")
        return make_leaf(token, start)

    tree = node()
    if pos != len(text):
        raise CographError(f"Trailing text at {pos} in {text!r}")
    return tree


def parse_cotree(text: str) -> Cotree:
    def make_leaf(token: str, at: int) -> Leaf:
        if not token.isdigit():
            raise CographError(f"Leaf {token!r} at {at} is not a vertex id")
        return Leaf(int(token))

    tree = _parse("".join(text.split()), make_leaf)
    validate_cotree(tree)
    return tree


def _shape_to_cotree(encoding: str) -> Cotree:
    counter = iter(range(encoding.count(LEAF_TOKEN)))

    def make_leaf(token: str, at: int) -> Leaf:
        if token != LEAF_TOKEN:
            raise CographError(f"Unexpected token {token!r} at {at} in shape {encoding!r}")
        return Leaf(next(counter))

    return _parse(encoding, make_leaf)


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------


def find_induced_p4(g: Graph) -> P4Witness | None:
    """Lexicographically least (a, b, c, d) inducing the path a-b-c-d."""
    rows = g.rows
    for a in range(g.n):
        closed_a = g.closed_row(a)
        for b in iter_bits(rows[a]):
            closed_ab = closed_a | g.closed_row(b)
            for c in iter_bits(rows[b] & ~closed_a):
                for d in iter_bits(rows[c] & ~closed_ab):
                    return P4Witness(a, b, c, d)
    return None


def is_cograph(g: Graph) -> bool:
    return find_induced_p4(g) is None


def _sort_key(t: Cotree) -> tuple[int, int]:
    ids = leaves(t)
    return (len(ids), min(ids))


def _decompose(rows: tuple[int, ...], co_rows: tuple[int, ...], mask: int) -> Cotree | None:
    if mask & (mask - 1) == 0:
        return Leaf(mask.bit_length() - 1)
    op: Op = "U"
    parts = components_within(rows, mask)
    if len(parts) == 1:
        op = "J"
        parts = components_within(co_rows, mask)
        if len(parts) == 1:
            return None
    children: list[Cotree] = []
    for part in parts:
        child = _decompose(rows, co_rows, part)
        if child is None:
            return None
        children.append(child)
    children.sort(key=_sort_key)
    return Node(op, tuple(children))


def build_cotree(g: Graph) -> Cotree | P4Witness:
    if g.n == 0:
        raise CographError("The graph on 0 vertices has no cotree")
    full = g.all_mask
    co_rows = tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows))
    tree = _decompose(g.rows, co_rows, full)
    if tree is not None:
        return tree
    witness = find_induced_p4(g)
    if witness is None:
        raise CographError("Decomposition stalled on a P4-free graph")
    return witness


def cotree_to_graph(t: Cotree) -> Graph:
    validate_cotree(t)

    def evaluate(node: Cotree) -> tuple[Graph, list[int]]:
        if isinstance(node, Leaf):
            return empty_graph(1), [node.vertex]
        combine = disjoint_union if node.op == "U" else join
        g, labels = evaluate(node.children[0])
        for child in node.children[1:]:
            h, more = evaluate(child)
            g = combine(g, h)
            labels = labels + more
        return g, labels

    g, labels = evaluate(t)
    return relabel(g, labels)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _flip(encoding: str) -> str:
    return encoding.translate(str.maketrans("UJ", "JU"))


@cache
def _union_shapes(n: int) -> tuple[str, ...]:
    """Canonical shapes on n >= 2 leaves whose root is a UNION node."""
    items = sorted((m, enc) for m in range(1, n) for enc in _non_union_shapes(m))
    out: list[str] = []
    chosen: list[str] = []

    def extend(start: int, remaining: int) -> None:
        if remaining == 0:
            out.append(f"U({','.join(chosen)})")
            return
        for idx in range(start, len(items)):
            m, enc = items[idx]
            if m > remaining:
                break
            chosen.append(enc)
            extend(idx, remaining - m)
            chosen.pop()

    extend(0, n)
    return tuple(out)


@cache
def _non_union_shapes(m: int) -> tuple[str, ...]:
    if m == 1:
        return (LEAF_TOKEN,)
    # Swapping U and J keeps sibling order: both letters sort above the punctuation.
    return tuple(_flip(enc) for enc in _union_shapes(m))


def cograph_shapes(n: int) -> tuple[str, ...]:
    """Canonical encodings of every unlabeled cograph on n vertices."""
    if n == 1:
        return (LEAF_TOKEN,)
    disconnected = _union_shapes(n)
    return disconnected + tuple(_flip(enc) for enc in disconnected)


def enumerate_cographs(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Graph]:
    if n < 1:
        raise CographError(f"Enumeration needs n >= 1, got {n}")
    if n > cap:
        raise CapExceededError("enumerate_cographs", n, cap)
    for enc in cograph_shapes(n):
        yield cotree_to_graph(_shape_to_cotree(enc))


def enumerate_cotrees(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Cotree]:
    if n > cap:
        raise CapExceededError("enumerate_cotrees", n, cap)
    for enc in cograph_shapes(n):
        yield _shape_to_cotree(enc)


def random_cotree(n: int, seed: int) -> Cotree:
    if n < 1:
        raise CographError(f"Random cograph needs n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    root: Op = "U" if rng.integers(2) == 0 else "J"
    labels = iter(int(v) for v in rng.permutation(n))

    def grow(m: int, op: Op) -> Cotree:
        if m == 1:
            return Leaf(next(labels))
        k = int(rng.integers(2, min(4, m) + 1))
        cuts = sorted(int(c) for c in rng.choice(np.arange(1, m), size=k - 1, replace=False))
        sizes = [hi - lo for lo, hi in zip([0, *cuts], [*cuts, m], strict=True)]
        return Node(op, tuple(grow(size, _other(op)) for size in sizes))

    return grow(n, root)


def random_cograph(n: int, seed: int) -> Graph:
    return cotree_to_graph(random_cotree(n, seed))


@cache
def _atlas() -> tuple[Graph, ...]:
    return tuple(from_networkx(a) for a in nx.graph_atlas_g())


def all_graphs(n: int) -> list[Graph]:
    """Every graph on n vertices up to isomorphism, from the graph atlas."""
    if n > ATLAS_MAX_N:
        raise CapExceededError("all_graphs", n, ATLAS_MAX_N)
    return [g for g in _atlas() if g.n == n]
