"""Finite groups given by explicit Cayley tables.

Elements are referred to by their index into ``FiniteGroup.elements``; labels
are only used for I/O.  Subsets of a group are sorted, duplicate-free index
tuples wrapped in :class:`Subset`.

Permutation products in :func:`make_symmetric` apply the right factor first,
i.e. ``(p*q)(x) = p(q(x))``.  With this convention ``(1 2)*(1 3) = (1 3 2)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import InvalidArgument, ResourceLimitError

# Full associativity check up to this order, sampled above it.
_FULL_ASSOC_MAX = 64
_ASSOC_SAMPLES = 20_000


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    descriptor: Optional[dict] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = len(self.elements)
        if n == 0:
            raise InvalidArgument("a group needs at least one element")
        if len(set(self.elements)) != n:
            raise InvalidArgument("element labels must be unique")
        arr = np.asarray(self.table, dtype=np.int64)
        if arr.shape != (n, n):
            raise InvalidArgument(f"table must be {n}x{n}, got shape {arr.shape}")
        if arr.min() < 0 or arr.max() >= n:
            raise InvalidArgument("table entries must be element indices")
        full = np.arange(n)
        if not (np.sort(arr, axis=1) == full).all() or not (np.sort(arr, axis=0) == full[:, None]).all():
            raise InvalidArgument("table is not a Latin square")
        e = self.identity
        if not 0 <= e < n or not (arr[e] == full).all() or not (arr[:, e] == full).all():
            raise InvalidArgument("identity index is not a two-sided identity")
        _check_associative(arr)
        inverse = np.empty(n, dtype=np.int64)
        rows, cols = np.nonzero(arr == e)
        inverse[rows] = cols
        object.__setattr__(self, "_arr", arr)
        object.__setattr__(self, "_inv", tuple(int(x) for x in inverse))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.elements)})

    # -- element arithmetic -------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, a: int) -> int:
        """Return ``g a g^-1``."""
        return self.table[self.table[g][a]][self._inv[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidArgument(f"unknown group element {label!r}") from None

    def label(self, i: int) -> str:
        return self.elements[i]

    def is_abelian(self) -> bool:
        return bool((self._arr == self._arr.T).all())

    def is_standard_cyclic(self) -> bool:
        """True when element ``i`` is the residue ``[i]`` of Z_m."""
        m = self.order
        idx = np.arange(m)
        return self.identity == 0 and bool((self._arr == (idx[:, None] + idx[None, :]) % m).all())

    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in index order."""
        gens: list[int] = []
        span = {self.identity}
        for a in range(self.order):
            if a not in span:
                gens.append(a)
                span = set(self.generated(gens))
            if len(span) == self.order:
                break
        return tuple(gens)

    def generated(self, gens: Iterable[int]) -> tuple[int, ...]:
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    # -- subsets ------------------------------------------------------------

    def subset(self, members: Iterable[int]) -> "Subset":
        members = tuple(sorted(set(int(m) for m in members)))
        if members and (members[0] < 0 or members[-1] >= self.order):
            raise InvalidArgument("subset member out of range")
        return Subset(self, members)

    def subset_of_labels(self, labels: Iterable[str]) -> "Subset":
        return self.subset(self.index(lab) for lab in labels)

    def full(self) -> "Subset":
        return Subset(self, tuple(range(self.order)))


def _check_associative(arr: np.ndarray) -> None:
    n = arr.shape[0]
    if n <= _FULL_ASSOC_MAX:
        left = arr[arr]            # left[a, b, c] = (ab)c
        right = arr[:, arr]        # right[a, b, c] = a(bc)
        bad = np.argwhere(left != right)
        if len(bad):
            a, b, c = (int(x) for x in bad[0])
            raise InvalidArgument(f"table is not associative at ({a}, {b}, {c})")
        return
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, _ASSOC_SAMPLES))
    bad = np.nonzero(arr[arr[a, b], c] != arr[a, arr[b, c]])[0]
    if len(bad):
        i = bad[0]
        raise InvalidArgument(f"table is not associative at ({a[i]}, {b[i]}, {c[i]})")


@dataclass(frozen=True)
class Subset:
    group: FiniteGroup = field(repr=False)
    members: tuple[int, ...]

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            raise InvalidArgument("subset members must be sorted and duplicate-free")

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    def labels(self) -> list[str]:
        return [self.group.elements[i] for i in self.members]

    def conjugate(self, g: int) -> "Subset":
        G = self.group
        return G.subset(G.conj(g, a) for a in self.members)

    def inverse(self) -> "Subset":
        return self.group.subset(self.group.inv(a) for a in self.members)

    def __mul__(self, other: "Subset") -> "Subset":
        _same_group(self.group, other.group)
        t = self.group.table
        return self.group.subset(t[a][b] for a in self.members for b in other.members)


def _same_group(g1: FiniteGroup, g2: FiniteGroup) -> None:
    if g1 is not g2 and g1 != g2:
        raise InvalidArgument("operands belong to different groups")


@dataclass(frozen=True)
class ConjugacyClass:
    """The family ``{g S g^-1 : g in G}`` keyed by its least member."""

    group: FiniteGroup = field(repr=False)
    canonical: tuple[int, ...]
    conjugates: frozenset = field(compare=False, hash=False, repr=False)

    def __len__(self):
        return len(self.conjugates)

    def representative(self) -> Subset:
        return Subset(self.group, self.canonical)

    def contains(self, s: Subset) -> bool:
        return s.members in self.conjugates

    def labels(self) -> list[list[str]]:
        el = self.group.elements
        return [[el[i] for i in c] for c in sorted(self.conjugates)]


def conjugacy_class_of_subset(s: Subset) -> ConjugacyClass:
    G = s.group
    conj = frozenset(s.conjugate(g).members for g in range(G.order))
    return ConjugacyClass(G, min(conj), conj)


@dataclass(frozen=True)
class GroupAutomorphism:
    group: FiniteGroup = field(repr=False)
    images: tuple[int, ...]

    def __post_init__(self):
        G = self.group
        n = G.order
        if sorted(self.images) != list(range(n)):
            raise InvalidArgument("automorphism images are not a permutation")
        img = np.asarray(self.images)
        arr = G._arr
        bad = np.argwhere(img[arr] != arr[img[:, None], img[None, :]])
        if len(bad):
            a, b = (int(x) for x in bad[0])
            raise InvalidArgument(
                f"map is not multiplicative at ({G.label(a)}, {G.label(b)})")

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def apply_subset(self, s: Subset) -> Subset:
        _same_group(self.group, s.group)
        return self.group.subset(self.images[a] for a in s.members)

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """``self o other``."""
        return GroupAutomorphism(self.group, tuple(self.images[other.images[a]] for a in range(self.group.order)))

    def inverse(self) -> "GroupAutomorphism":
        inv = [0] * self.group.order
        for a, b in enumerate(self.images):
            inv[b] = a
        return GroupAutomorphism(self.group, tuple(inv))

    def to_labels(self) -> dict[str, str]:
        el = self.group.elements
        return {el[a]: el[b] for a, b in enumerate(self.images)}


def apply_automorphism(tau: GroupAutomorphism, c: ConjugacyClass) -> ConjugacyClass:
    _same_group(tau.group, c.group)
    return conjugacy_class_of_subset(tau.apply_subset(c.representative()))


def identity_automorphism(G: FiniteGroup) -> GroupAutomorphism:
    return GroupAutomorphism(G, tuple(range(G.order)))


def inner_automorphism(G: FiniteGroup, g: int) -> GroupAutomorphism:
    return GroupAutomorphism(G, tuple(G.conj(g, a) for a in range(G.order)))


def inversion_automorphism(G: FiniteGroup) -> GroupAutomorphism:
    """``a -> a^-1``; an automorphism only for abelian groups."""
    if not G.is_abelian():
        raise InvalidArgument("inversion is an automorphism only for abelian groups")
    return GroupAutomorphism(G, tuple(G.inv(a) for a in range(G.order)))


def cyclic_unit_automorphism(G: FiniteGroup, u: int) -> GroupAutomorphism:
    """``[1] -> [u]`` on a standard Z_m; ``u`` must be a unit mod m."""
    if not G.is_standard_cyclic():
        raise InvalidArgument("unit automorphisms need a standard cyclic group")
    m = G.order
    if math.gcd(u, m) != 1:
        raise InvalidArgument(f"{u} is not a unit modulo {m}")
    return GroupAutomorphism(G, tuple((a * u) % m for a in range(m)))


def all_automorphisms(G: FiniteGroup, max_order: int = 120) -> list[GroupAutomorphism]:
    """Every automorphism of ``G``, by searching images of a generating set."""
    if G.order > max_order:
        raise ResourceLimitError(f"automorphism search limited to order <= {max_order}")
    gens = G.generators()
    orders = [G.element_order(g) for g in gens]
    candidates = [[a for a in range(G.order) if G.element_order(a) == k] for k in orders]
    found = []
    for imgs in itertools.product(*candidates):
        images = _extend_homomorphism(G, gens, imgs)
        if images is None or len(set(images)) != G.order:
            continue
        try:
            found.append(GroupAutomorphism(G, images))
        except InvalidArgument:
            continue
    return found


def _extend_homomorphism(G, gens, imgs):
    images = [-1] * G.order
    images[G.identity] = G.identity
    frontier = [G.identity]
    t = G.table
    while frontier:
        nxt = []
        for x in frontier:
            for g, h in zip(gens, imgs):
                y, z = t[x][g], t[images[x]][h]
                if images[y] == -1:
                    images[y] = z
                    nxt.append(y)
                elif images[y] != z:
                    return None
        frontier = nxt
    return tuple(images)


# -- constructors ------------------------------------------------------------

def make_cyclic(m: int) -> FiniteGroup:
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument(f"cyclic group order must be a positive integer, got {m!r}")
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return FiniteGroup(tuple(f"[{i}]" for i in range(m)), table, 0,
                       descriptor={"kind": "cyclic", "m": m})


def cycle_notation(perm: Sequence[int]) -> str:
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "id"


def make_symmetric(n: int) -> FiniteGroup:
    if not isinstance(n, int) or not 1 <= n <= 6:
        raise InvalidArgument(f"symmetric group degree must be in 1..6, got {n!r}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms)
        for p in perms
    )
    return FiniteGroup(tuple(cycle_notation(p) for p in perms), table, 0,
                       descriptor={"kind": "symmetric", "n": n})


def group_from_table(elements: Sequence[str], table: Sequence[Sequence[int]], identity: int) -> FiniteGroup:
    return FiniteGroup(tuple(elements), tuple(tuple(int(x) for x in row) for row in table), int(identity))


# -- cyclic cosets -----------------------------------------------------------

@dataclass(frozen=True)
class CycloCoset:
    """The coset ``[offset] + step*Z_m`` of Z_m."""

    m: int
    offset: int
    step: int

    def __post_init__(self):
        if self.m < 1 or self.step < 1 or self.m % self.step:
            raise InvalidArgument(f"step {self.step} must be a positive divisor of m={self.m}")
        if not 0 <= self.offset < self.step:
            raise InvalidArgument("offset must lie in [0, step)")

    @classmethod
    def normalized(cls, m: int, offset: int, step: int) -> "CycloCoset":
        return cls(m, offset % step, step)

    def members(self) -> tuple[int, ...]:
        return tuple(range(self.offset, self.m, self.step))

    def negated(self) -> "CycloCoset":
        return CycloCoset(self.m, (-self.offset) % self.step, self.step)

    def __str__(self):
        return f"[{self.offset}]+{self.step}Z_{self.m}"


def coset_of(s: Subset) -> Optional[CycloCoset]:
    G = s.group
    if not G.is_standard_cyclic():
        raise InvalidArgument("coset_of needs a standard cyclic group Z_m")
    m = G.order
    if not s.members:
        return None
    for step in _divisors(m):
        if len(s.members) * step != m:
            continue
        c = CycloCoset.normalized(m, s.members[0], step)
        return c if c.members() == s.members else None
    return None


def _divisors(m: int) -> list[int]:
    return [k for k in range(1, m + 1) if m % k == 0]
