"""Closed forms and brute-force oracles for independence, open packing,
total domination and chromatic number.

The closed forms are specific to the standard distance-{1,3} family; the
oracles work on any circulant graph up to a configurable vertex limit
(default 24, override via the CIRCULANT_TDC_ORACLE_LIMIT environment
variable).  Oracle witnesses are deterministic: ties are broken toward the
lexicographically smallest vertex set, which the searches realize by
exploring candidate vertices in increasing order and stopping at the first
optimum found.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .coloring import Coloring
from .graphs import CirculantGraph, is_standard_13, mask_to_vertices

DEFAULT_ORACLE_LIMIT = 24
ORACLE_LIMIT_ENV = "CIRCULANT_TDC_ORACLE_LIMIT"


class OracleLimitError(ValueError):
    """Raised when an exhaustive search is asked to run above its vertex limit."""

    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(
            f"refusing exhaustive search on n={n} vertices (limit {limit}; "
            f"raise via {ORACLE_LIMIT_ENV} or the limit argument)"
        )


def oracle_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get(ORACLE_LIMIT_ENV, DEFAULT_ORACLE_LIMIT))


def _check_limit(n: int, limit: int | None) -> None:
    eff = oracle_limit(limit)
    if n > eff:
        raise OracleLimitError(n, eff)


@dataclass(frozen=True)
class InvariantValue:
    """A named invariant with closed-form and/or brute-force value.

    closed_form is present only for the standard distance-{1,3} graph inside
    the formula's stated range; oracle is present when a search ran.  When
    both are present, agree records their equality.
    """

    name: str
    closed_form: int | None
    oracle: int | None
    witness: tuple[int, ...] | Coloring | None
    agree: bool | None

    def to_dict(self) -> dict:
        if isinstance(self.witness, Coloring):
            witness = self.witness.as_lists()
        elif self.witness is None:
            witness = None
        else:
            witness = list(self.witness)
        return {
            "name": self.name,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "witness": witness,
            "agree": self.agree,
        }


def _combine(name: str, closed: int | None, oracle_val: int, witness) -> InvariantValue:
    agree = None if closed is None else (closed == oracle_val)
    return InvariantValue(
        name=name, closed_form=closed, oracle=oracle_val, witness=witness, agree=agree
    )


# ---------------------------------------------------------------------------
# closed forms (standard distance-{1,3} graph)


def independence_number_formula(n: int) -> int:
    """Independence number of the standard graph: n/2 for even n, (n-3)/2 for odd."""
    if n < 4:
        raise ValueError(f"independence closed form needs n >= 4, got {n}")
    return n // 2 if n % 2 == 0 else (n - 3) // 2


def open_packing_number_formula(n: int) -> int:
    """Open packing number of the standard graph.

    n//3 for 3 <= n <= 6, then n//4 - 1 when n = 4 or 6 mod 8 and n//4
    otherwise.
    """
    if n < 3:
        raise ValueError(f"open packing closed form needs n >= 3, got {n}")
    if n <= 6:
        return n // 3
    if n % 8 in (4, 6):
        return n // 4 - 1
    return n // 4


def total_domination_number_formula(n: int) -> int:
    """Total domination number of the standard graph: ceil(n/4), +1 when n = 2,4 mod 8."""
    if n < 4:
        raise ValueError(f"total domination closed form needs n >= 4, got {n}")
    value = (n + 3) // 4
    return value + 1 if n % 8 in (2, 4) else value


# ---------------------------------------------------------------------------
# brute-force searches


def _max_independent_size(masks: list[int], avail: int, current: int, best: int) -> int:
    # branch and bound on the lowest available vertex: include it, then loop
    # on with it excluded
    while avail:
        if current + avail.bit_count() <= best:
            return best
        low = avail & -avail
        v = low.bit_length() - 1
        best = _max_independent_size(masks, avail & ~(low | masks[v]), current + 1, best)
        avail ^= low
    return max(best, current)


def _lex_first_independent(masks: list[int], n: int, target: int) -> tuple[int, ...] | None:
    """First independent set of exactly `target` vertices in lex DFS order."""
    out: list[int] = []

    def rec(avail: int, need: int) -> bool:
        if need == 0:
            return True
        if avail.bit_count() < need:
            return False
        a = avail
        while a:
            low = a & -a
            a ^= low
            v = low.bit_length() - 1
            out.append(v + 1)
            if rec(a & ~masks[v], need - 1):
                return True
            out.pop()
        return False

    if rec((1 << n) - 1, target):
        return tuple(out)
    return None


def independence_number_oracle(g: CirculantGraph, limit: int | None = None) -> InvariantValue:
    """Maximum independent set size by exhaustive search, with lex-least witness."""
    _check_limit(g.n, limit)
    masks = list(g.masks)
    size = _max_independent_size(masks, g.full_mask, 0, 0)
    witness = _lex_first_independent(masks, g.n, size)
    closed = None
    if is_standard_13(g) and g.n >= 4:
        closed = independence_number_formula(g.n)
    return _combine("independence", closed, size, witness)


def _open_packings_of_size(
    masks: list[int], n: int, target: int, stop_at_first: bool
) -> list[tuple[int, ...]]:
    """All open packings of exactly `target` vertices, in lex order.

    A set is an open packing iff the open neighborhoods of its members are
    pairwise disjoint; `used` accumulates their union.
    """
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        if len(chosen) == target:
            found.append(tuple(chosen))
            return stop_at_first
        if n - start < target - len(chosen):
            return False
        for v in range(start, n):
            if masks[v] & used:
                continue
            chosen.append(v + 1)
            if rec(v + 1, used | masks[v]):
                return True
            chosen.pop()
        return False

    rec(0, 0)
    return found


def _max_open_packing_size(masks: list[int], n: int) -> int:
    best = 0

    def rec(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (n - start) <= best:
            return
        for v in range(start, n):
            if not masks[v] & used:
                rec(v + 1, used | masks[v], size + 1)

    rec(0, 0, 0)
    return best


def open_packing_number_oracle(g: CirculantGraph, limit: int | None = None) -> InvariantValue:
    """Maximum open packing size by exhaustive search, with lex-least witness."""
    _check_limit(g.n, limit)
    masks = list(g.masks)
    size = _max_open_packing_size(masks, g.n)
    witness: tuple[int, ...] | None = None
    if size:
        witness = _open_packings_of_size(masks, g.n, size, stop_at_first=True)[0]
    closed = None
    if is_standard_13(g) and g.n >= 3:
        closed = open_packing_number_formula(g.n)
    return _combine("open_packing", closed, size, witness)


@dataclass(frozen=True)
class PackingShape:
    """Induced shape of one maximum open packing: its edges and isolated vertices."""

    vertices: tuple[int, ...]
    induced_edges: tuple[tuple[int, int], ...]
    isolated: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "induced_edges": [list(e) for e in self.induced_edges],
            "isolated": list(self.isolated),
        }


@dataclass(frozen=True)
class PackingStructureReport:
    """Shape census over all maximum open packings of one standard graph.

    `conforms` holds when every maximum packing induces exactly
    `expected_edges` edges plus `expected_isolated` isolated vertices.
    """

    n: int
    packing_number: int
    expected_edges: int
    expected_isolated: int
    packings: tuple[PackingShape, ...]
    conforms: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "packing_number": self.packing_number,
            "expected_edges": self.expected_edges,
            "expected_isolated": self.expected_isolated,
            "num_maximum_packings": len(self.packings),
            "conforms": self.conforms,
            "packings": [p.to_dict() for p in self.packings],
        }


def max_open_packing_structure(
    g: CirculantGraph, limit: int | None = None
) -> PackingStructureReport:
    """Enumerate every maximum open packing and classify its induced subgraph.

    On the standard graph the expectation is n//8 induced edges, plus one
    isolated vertex exactly when n = 5 or 7 mod 8.  The claim quantifies over
    all maximum packings, so all of them are enumerated.
    """
    if not is_standard_13(g) or g.n < 7:
        raise ValueError("structure census applies to the standard distance-{1,3} graph, n >= 7")
    _check_limit(g.n, limit)
    masks = list(g.masks)
    size = _max_open_packing_size(masks, g.n)
    shapes = []
    conforms = True
    expected_edges = g.n // 8
    expected_isolated = 1 if g.n % 8 in (5, 7) else 0
    for packing in _open_packings_of_size(masks, g.n, size, stop_at_first=False):
        edges = [
            (u, v) for u, v in combinations(packing, 2) if g.has_edge(u, v)
        ]
        matched = {x for e in edges for x in e}
        isolated = tuple(v for v in packing if v not in matched)
        shapes.append(
            PackingShape(vertices=packing, induced_edges=tuple(edges), isolated=isolated)
        )
        if len(edges) != expected_edges or len(isolated) != expected_isolated:
            conforms = False
    return PackingStructureReport(
        n=g.n,
        packing_number=size,
        expected_edges=expected_edges,
        expected_isolated=expected_isolated,
        packings=tuple(shapes),
        conforms=conforms,
    )


def _lex_first_total_dominating(
    masks: list[int], n: int, target: int
) -> tuple[int, ...] | None:
    """First total dominating set of exactly `target` vertices in lex order.

    Prunes on coverage: each added vertex covers at most `deg` new vertices,
    and the lowest uncovered vertex must still have an available neighbor.
    """
    full = (1 << n) - 1
    deg = max(m.bit_count() for m in masks)
    chosen: list[int] = []

    def rec(start: int, covered: int) -> bool:
        remaining = target - len(chosen)
        if covered == full and remaining == 0:
            return True
        if remaining == 0:
            return False
        missing = (full & ~covered).bit_count()
        if missing > remaining * deg:
            return False
        if covered != full:
            lowest = (full & ~covered) & -(full & ~covered)
            u = lowest.bit_length() - 1
            avail = full & ~((1 << start) - 1)
            if not masks[u] & avail:
                return False
        for v in range(start, n):
            if n - v < remaining:
                return False
            chosen.append(v + 1)
            if rec(v + 1, covered | masks[v]):
                return True
            chosen.pop()
        return False

    if rec(0, 0):
        return tuple(chosen)
    return None


def total_domination_number_oracle(
    g: CirculantGraph, limit: int | None = None
) -> InvariantValue:
    """Minimum total dominating set size by increasing-cardinality search."""
    _check_limit(g.n, limit)
    masks = list(g.masks)
    # a single vertex never dominates itself and each vertex covers <= deg others
    start = max(2, -(-g.n // g.degree))
    for size in range(start, g.n + 1):
        witness = _lex_first_total_dominating(masks, g.n, size)
        if witness is not None:
            closed = None
            if is_standard_13(g) and g.n >= 4:
                closed = total_domination_number_formula(g.n)
            return _combine("total_domination", closed, size, witness)
    raise AssertionError("graph has an isolated vertex; no total dominating set exists")


def _greedy_clique(masks: list[int], n: int) -> list[int]:
    clique: list[int] = []
    common = (1 << n) - 1
    for v in range(n):
        if common >> v & 1:
            clique.append(v + 1)
            common &= masks[v]
    return clique


def _proper_coloring_search(masks: list[int], n: int, num_colors: int) -> list[int] | None:
    """Backtracking proper coloring with first-use color ordering.

    Returns per-vertex colors (1-based) or None when no proper coloring with
    at most `num_colors` colors exists.
    """
    colors = [0] * n
    class_masks = [0] * (num_colors + 1)

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        nv = masks[v]
        top = min(used + 1, num_colors)
        for c in range(1, top + 1):
            if class_masks[c] & nv:
                continue
            colors[v] = c
            class_masks[c] |= 1 << v
            if rec(v + 1, max(used, c)):
                return True
            class_masks[c] &= ~(1 << v)
        colors[v] = 0
        return False

    return colors[:] if rec(0, 0) else None


def chromatic_number_oracle(g: CirculantGraph, limit: int | None = None) -> InvariantValue:
    """Chromatic number by backtracking, starting from a greedy clique lower bound."""
    _check_limit(g.n, limit)
    masks = list(g.masks)
    lower = max(1, len(_greedy_clique(masks, g.n)))
    for k in range(lower, g.n + 1):
        colors = _proper_coloring_search(masks, g.n, k)
        if colors is not None:
            classes: dict[int, set[int]] = {}
            for v, c in enumerate(colors, start=1):
                classes.setdefault(c, set()).add(v)
            witness = Coloring.from_classes(g.n, [classes[c] for c in sorted(classes)])
            return _combine("chromatic", None, k, witness)
    raise AssertionError("unreachable: n colors always suffice")
