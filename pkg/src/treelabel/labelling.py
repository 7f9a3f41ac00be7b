"""Labellings of rooted trees and the distance-three separation checks.

A linear labelling with span ell maps vertices to {0..ell} and requires
|f(u)-f(v)| >= h_i whenever d(u,v) = i <= 3.  A cyclic labelling with
modulus ell maps to {0..ell-1} and uses the cyclic distance
|x|_ell = min(|x|, ell-|x|) instead.

Also implements the two structural notions used by the constructions:
 * elegant: every vertex u owns an interval I_u covering its neighbours'
   labels, with I_u and I_v disjoint across every edge uv;
 * super elegant: the neighbour label set f(N(u)) is itself an interval
   (linear) or circular interval (cyclic) at every vertex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .trees import RootedTree

LINEAR = "linear"
CYCLIC = "cyclic"


class LabelRangeError(ValueError):
    """A label is outside the range allowed by the labelling mode."""


def cyclic_distance(x: int, y: int, ell: int) -> int:
    d = abs(x - y) % ell
    return min(d, ell - d)


@dataclass(frozen=True)
class SeparationParams:
    """Required separations (h1, h2, h3) at distances 1, 2, 3."""

    h1: int
    h2: int
    h3: int

    def __post_init__(self) -> None:
        if min(self.h1, self.h2, self.h3) < 0:
            raise ValueError("separations must be nonnegative")

    @classmethod
    def hpp(cls, h: int, p: int) -> "SeparationParams":
        return cls(h, p, p)

    def at(self, distance: int) -> int:
        return (self.h1, self.h2, self.h3)[distance - 1]

    def is_monotone(self) -> bool:
        return self.h1 >= self.h2 >= self.h3


@dataclass(frozen=True)
class Labelling:
    mode: str
    ell: int
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.mode not in (LINEAR, CYCLIC):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.ell < (0 if self.mode == LINEAR else 1):
            raise ValueError("span/modulus out of range")

    def check_ranges(self) -> None:
        hi = self.ell if self.mode == LINEAR else self.ell - 1
        for v, x in enumerate(self.labels):
            if not 0 <= x <= hi:
                raise LabelRangeError(f"label {x} of vertex {v} outside 0..{hi} ({self.mode})")

    def span(self) -> int:
        return max(self.labels) if self.mode == LINEAR else self.ell

    def separation(self, u: int, v: int) -> int:
        if self.mode == LINEAR:
            return abs(self.labels[u] - self.labels[v])
        return cyclic_distance(self.labels[u], self.labels[v], self.ell)

    def to_json(self) -> str:
        return json.dumps({"mode": self.mode, "ell": self.ell, "labels": list(self.labels)})

    @classmethod
    def from_json(cls, text: str) -> "Labelling":
        obj = json.loads(text)
        return cls(mode=obj["mode"], ell=int(obj["ell"]), labels=tuple(int(x) for x in obj["labels"]))


@dataclass(frozen=True)
class CircularInterval:
    """[a, b] mod ell: the labels a, a+1, ..., b taken cyclically."""

    a: int
    b: int
    ell: int

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError("modulus must be >= 1")

    def size(self) -> int:
        return (self.b - self.a) % self.ell + 1

    def __contains__(self, x: int) -> bool:
        return (x - self.a) % self.ell <= (self.b - self.a) % self.ell

    def members(self) -> list[int]:
        return [(self.a + i) % self.ell for i in range(self.size())]

    def intersects(self, other: "CircularInterval") -> bool:
        smaller, larger = sorted((self, other), key=CircularInterval.size)
        return any(x in larger for x in smaller.members())


@dataclass(frozen=True)
class PSet:
    """c + p[a, b] mod ell: an arithmetic progression with step p."""

    c: int
    p: int
    a: int
    b: int
    ell: int

    def size(self) -> int:
        return self.b - self.a + 1

    def members(self) -> list[int]:
        return [(self.c + j * self.p) % self.ell for j in range(self.a, self.b + 1)]

    def __contains__(self, x: int) -> bool:
        return x % self.ell in set(self.members())


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    distance: int
    required: int
    actual: int

    def to_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "distance": self.distance,
                "required": self.required, "actual": self.actual}


def _pairs_within_3(tree: RootedTree):
    """Yield (u, v, d) with u < v and d = d(u,v) in {1,2,3}.

    Three-step expansion from each vertex instead of all-pairs distances.
    """
    for v in range(tree.n):
        seen = {v: 0}
        frontier = [v]
        for d in (1, 2, 3):
            nxt = []
            for x in frontier:
                for y in tree.neighbours(x):
                    if y not in seen:
                        seen[y] = d
                        nxt.append(y)
                        if y > v:
                            yield v, y, d
            frontier = nxt


def validate(tree: RootedTree, f: Labelling, params: SeparationParams) -> list[Violation]:
    """Exhaustive list of separation violations; empty means valid."""
    if len(f.labels) != tree.n:
        raise ValueError(f"labelling has {len(f.labels)} labels for {tree.n} vertices")
    f.check_ranges()
    out = []
    for u, v, d in _pairs_within_3(tree):
        required = params.at(d)
        if required == 0:
            continue
        actual = f.separation(u, v)
        if actual < required:
            out.append(Violation(u, v, d, required, actual))
    return out


def _is_interval(values: set[int]) -> bool:
    return max(values) - min(values) + 1 == len(values)


def _is_circular_interval(values: set[int], ell: int) -> bool:
    if len(values) == ell:
        return True
    ordered = sorted(values)
    breaks = 0
    for i, x in enumerate(ordered):
        nxt = ordered[(i + 1) % len(ordered)]
        if (nxt - x) % ell != 1:
            breaks += 1
    return breaks <= 1


def is_super_elegant(tree: RootedTree, f: Labelling) -> bool:
    """True iff every neighbourhood label set is an interval (linear) or a
    circular interval mod ell (cyclic), with no duplicate labels in it."""
    for v in range(tree.n):
        nbrs = tree.neighbours(v)
        if not nbrs:
            continue
        labels = [f.labels[u] for u in nbrs]
        values = set(labels)
        if len(values) != len(labels):
            return False
        if f.mode == LINEAR:
            if not _is_interval(values):
                return False
        else:
            if not _is_circular_interval(values, f.ell):
                return False
    return True


@dataclass(frozen=True)
class EleganceCertificate:
    """Per-vertex intervals witnessing elegance.

    intervals[v] = (a, b): plain integer interval for linear mode, circular
    interval mod ell for cyclic mode.
    """

    mode: str
    ell: int
    intervals: tuple[tuple[int, int], ...]

    def interval_members(self, v: int) -> set[int]:
        a, b = self.intervals[v]
        if self.mode == LINEAR:
            return set(range(a, b + 1))
        return set(CircularInterval(a, b, self.ell).members())

    def problems(self, tree: RootedTree, f: Labelling) -> list[str]:
        """Empty list iff the certificate witnesses elegance of f on tree."""
        out = []
        covers = [self.interval_members(v) for v in range(tree.n)]
        for v in range(tree.n):
            for u in tree.neighbours(v):
                if f.labels[u] not in covers[v]:
                    out.append(f"vertex {v}: neighbour label {f.labels[u]} outside interval")
        for v in range(1, tree.n):
            p = tree.parent[v]
            if covers[v] & covers[p]:
                out.append(f"edge {p}-{v}: intervals intersect")
        return out

    def to_dict(self) -> dict:
        return {"mode": self.mode, "ell": self.ell,
                "intervals": [list(iv) for iv in self.intervals]}


def minimal_cover_interval(values: list[int], ell: int) -> tuple[int, int]:
    """Shortest circular interval mod ell containing values (max-gap rule).

    Deterministic: among maximum gaps the one starting at the smallest
    sorted position is deleted.
    """
    distinct = sorted(set(v % ell for v in values))
    if not distinct:
        raise ValueError("empty value set has no cover interval")
    if len(distinct) == ell:
        return 0, ell - 1
    best_gap, best_i = -1, 0
    for i, x in enumerate(distinct):
        nxt = distinct[(i + 1) % len(distinct)]
        gap = (nxt - x) % ell
        if gap > best_gap:
            best_gap, best_i = gap, i
    lo = distinct[(best_i + 1) % len(distinct)]
    hi = distinct[best_i]
    return lo, hi


def _gap_candidates(values: list[int], ell: int) -> list[tuple[int, int]]:
    """Inclusion-minimal circular intervals covering values: one per gap."""
    distinct = sorted(set(v % ell for v in values))
    if len(distinct) == ell:
        return [(0, ell - 1)]
    cands = []
    for i, x in enumerate(distinct):
        nxt = distinct[(i + 1) % len(distinct)]
        if (nxt - x) % ell > 1 or len(distinct) == 1:
            cands.append((nxt, x))
    # Dedup while keeping sorted-gap order
    seen: set[tuple[int, int]] = set()
    out = []
    for c in cands:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def check_elegance(tree: RootedTree, f: Labelling) -> EleganceCertificate | None:
    """Search for an elegance certificate; None when no certificate exists.

    Linear mode needs no search: the hull [min f(N(u)), max f(N(u))] is the
    unique inclusion-minimal interval, so elegance holds iff those hulls are
    disjoint across every edge.  Cyclic mode backtracks over the
    inclusion-minimal circular covers (one candidate per gap of f(N(u))).
    """
    if tree.n == 1:
        return EleganceCertificate(f.mode, f.ell, ((0, 0),))

    if f.mode == LINEAR:
        hulls = []
        for v in range(tree.n):
            labels = [f.labels[u] for u in tree.neighbours(v)]
            hulls.append((min(labels), max(labels)))
        for v in range(1, tree.n):
            a, b = hulls[v]
            c, d = hulls[tree.parent[v]]
            if a <= d and c <= b:
                return None
        return EleganceCertificate(LINEAR, f.ell, tuple(hulls))

    candidates = [_gap_candidates([f.labels[u] for u in tree.neighbours(v)], f.ell)
                  for v in range(tree.n)]
    member_cache: dict[tuple[int, int], set[int]] = {}

    def members(iv: tuple[int, int]) -> set[int]:
        if iv not in member_cache:
            member_cache[iv] = set(CircularInterval(iv[0], iv[1], f.ell).members())
        return member_cache[iv]

    chosen: list[tuple[int, int] | None] = [None] * tree.n

    def assign(v: int) -> bool:
        if v == tree.n:
            return True
        parent_iv = chosen[tree.parent[v]] if v > 0 else None
        for iv in candidates[v]:
            if parent_iv is not None and members(iv) & members(parent_iv):
                continue
            chosen[v] = iv
            if assign(v + 1):
                return True
        chosen[v] = None
        return False

    if not assign(0):
        return None
    return EleganceCertificate(CYCLIC, f.ell, tuple(chosen))  # type: ignore[arg-type]
