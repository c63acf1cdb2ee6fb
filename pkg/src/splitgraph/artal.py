"""Artal arrangements: a smooth degree-d curve with three tangent lines.

An arrangement is identified here with its type (three partitions of d) and
an offset ``beta`` in ``[0, s)``.  Its splitting graph is a Z_d-cover of the
hexagon formed by the three lines and their three intersection points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cmp_to_key, reduce
from typing import Iterable, Optional

from .cover import GaloisCover
from .curvecomb import (CurveCombinatorics, CyclicSplittingData, IncidenceGraph,
                        build_splitting_cover, incidence_graph)
from .errors import InvalidArgument
from .fingroup import GroupAutomorphism, cyclic_unit_automorphism, make_cyclic
from .multigraph import MINUS, PLUS, Multigraph, Step, Walk, inverse_walk

PLUS_CHIRALITY = "+"
MINUS_CHIRALITY = "-"


@dataclass(frozen=True)
class Partition:
    """A partition of d with parts in ascending order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts or any(not isinstance(e, int) or e < 1 for e in parts):
            raise InvalidArgument(f"partition parts must be positive integers, got {parts}")
        if list(parts) != sorted(parts):
            raise InvalidArgument(f"partition parts must be ascending, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        return cls(tuple(sorted(int(e) for e in parts)))

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def gcd(self) -> int:
        return reduce(math.gcd, self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partition_compare(p: Partition, q: Partition) -> int:
    """-1, 0 or 1 as p precedes, equals or follows q at the first differing part."""
    if p.d != q.d:
        raise InvalidArgument(f"partitions of different integers: {p.d} and {q.d}")
    for a, b in zip(p.parts, q.parts):
        if a != b:
            return -1 if a < b else 1
    # equal sums and a common prefix force equal lengths
    return 0


def sort_partitions(ps: Iterable[Partition]) -> list[Partition]:
    return sorted(ps, key=cmp_to_key(partition_compare))


@dataclass(frozen=True)
class ArtalType:
    p1: Partition
    p2: Partition
    p3: Partition

    def __post_init__(self):
        d = self.p1.d
        if self.p2.d != d or self.p3.d != d:
            raise InvalidArgument("the three partitions must share the same sum d")
        if d < 3:
            raise InvalidArgument(f"degree must be at least 3, got {d}")
        if partition_compare(self.p1, self.p2) > 0 or partition_compare(self.p2, self.p3) > 0:
            raise InvalidArgument("partitions must be listed in increasing order; "
                                  "use ArtalType.normalized to sort them")

    @classmethod
    def normalized(cls, partitions: Iterable[Iterable[int]]) -> "ArtalType":
        ps = [p if isinstance(p, Partition) else Partition.of(p) for p in partitions]
        if len(ps) != 3:
            raise InvalidArgument(f"an Artal type has three partitions, got {len(ps)}")
        return cls(*sort_partitions(ps))

    @classmethod
    def parse(cls, text: str) -> "ArtalType":
        """Parse ``"2,4:2,2,2:6"``; a single partition is used for all three lines."""
        chunks = [c.strip() for c in text.strip().split(":")]
        try:
            parts = [[int(e) for e in c.split(",")] for c in chunks]
        except ValueError:
            raise InvalidArgument(f"cannot parse type {text!r}") from None
        if len(parts) == 1:
            parts = parts * 3
        return cls.normalized(parts)

    @property
    def partitions(self) -> tuple[Partition, Partition, Partition]:
        return (self.p1, self.p2, self.p3)

    @property
    def d(self) -> int:
        return self.p1.d

    @property
    def s_lines(self) -> tuple[int, int, int]:
        return tuple(p.gcd for p in self.partitions)

    @property
    def s(self) -> int:
        return reduce(math.gcd, self.s_lines)

    @property
    def mu(self) -> tuple[int, int, int]:
        return tuple(self.d // si for si in self.s_lines)

    @property
    def mu_parts(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e // si for e in p.parts) for p, si in zip(self.partitions, self.s_lines))

    @property
    def distinct(self) -> bool:
        return len({self.p1, self.p2, self.p3}) == 3

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.partitions) + ")"

    def to_text(self) -> str:
        return ":".join(",".join(map(str, p.parts)) for p in self.partitions)


@dataclass(frozen=True)
class ArtalClass:
    type: ArtalType
    alpha: int
    chirality: Optional[str] = None

    def label(self) -> str:
        return f"F^{self.alpha}{self.chirality or ''}"


def _check_beta(T: ArtalType, beta: int) -> None:
    if not isinstance(beta, int) or not 0 <= beta < T.s:
        raise InvalidArgument(f"beta must lie in [0, {T.s}), got {beta!r}")


def classify(T: ArtalType, beta: int) -> ArtalClass:
    _check_beta(T, beta)
    s = T.s
    alpha = beta if beta <= s // 2 else s - beta
    chirality = None
    if T.distinct and 0 < alpha and 2 * alpha < s:
        chirality = PLUS_CHIRALITY if beta == alpha else MINUS_CHIRALITY
    return ArtalClass(T, alpha, chirality)


def family_table(T: ArtalType) -> list[ArtalClass]:
    return [ArtalClass(T, a) for a in range(T.s // 2 + 1)]


def same_embedded_topology(a1: tuple[ArtalType, int], a2: tuple[ArtalType, int]) -> bool:
    (t1, b1), (t2, b2) = a1, a2
    if t1 != t2:
        raise InvalidArgument("arrangements of different types are not comparable")
    return classify(t1, b1).alpha == classify(t2, b2).alpha


def allowed_automorphisms(d: int) -> list[GroupAutomorphism]:
    """[1] -> [1] and [1] -> [-1] on Z_d (a single map when they coincide)."""
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument("d must be a positive integer")
    G = make_cyclic(d)
    out = [cyclic_unit_automorphism(G, 1)]
    minus = cyclic_unit_automorphism(G, -1 % d if d > 1 else 0)
    if minus != out[0]:
        out.append(minus)
    return out


def hexagon_curve() -> CurveCombinatorics:
    """Lines L1, L2, L3 and their pairwise intersections P1, P2, P3."""
    return CurveCombinatorics.build(
        {"L1": 1, "L2": 1, "L3": 1},
        {"P1": ["L1", "L3"], "P2": ["L1", "L2"], "P3": ["L2", "L3"]})


def artal_splitting_data(T: ArtalType, beta: int) -> CyclicSplittingData:
    _check_beta(T, beta)
    s1, s2, s3 = T.s_lines
    return CyclicSplittingData(T.d, {"L1": s1, "L2": s2, "L3": s3},
                               {"P1": (0, beta), "P2": (0, 0), "P3": (0, 0)})


def splitting_graph_of(T: ArtalType, beta: int) -> GaloisCover:
    return build_splitting_cover(incidence_graph(hexagon_curve()), artal_splitting_data(T, beta))


def hexagon_walk(g, sign: str = PLUS) -> Walk:
    """The walk P1, L1, P2, L2, P3, L3, P1 (or its inverse for ``sign='-'``).

    ``g`` may be the hexagon base graph, its :class:`IncidenceGraph`, or a
    cover over it.
    """
    if isinstance(g, GaloisCover):
        g = g.base
    elif isinstance(g, IncidenceGraph):
        g = g.graph
    if not isinstance(g, Multigraph):
        raise InvalidArgument("expected a hexagon graph or a cover over one")
    w = Walk(g, "P1", (Step("P1.0", PLUS), Step("P2.0", MINUS), Step("P2.1", PLUS),
                       Step("P3.0", MINUS), Step("P3.1", PLUS), Step("P1.1", MINUS)))
    if sign == PLUS:
        return w
    if sign == MINUS:
        return inverse_walk(w)
    raise InvalidArgument("sign must be '+' or '-'")
