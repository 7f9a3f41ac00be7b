"""Rooted trees as parent arrays, the two regular tree families, and the
structural statistics (max degree, heavy-edge degree sum, diameter) that the
labelling bounds depend on.

Vertices are 0-based and breadth-first: vertex 0 is the root and
parent[v] < v for every v >= 1, so the parent array alone determines the
tree and every algorithm downstream is deterministic.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

COMPLETE_MARY = "mary"
REGULAR_SUBTREE = "regular"

COMPLETE_DENSE = "complete"
REGULAR_DENSE = "regular"


class TreeFormatError(ValueError):
    """Raised when tree text does not satisfy the wire format."""


@dataclass(frozen=True)
class RootedTree:
    """A finite rooted tree on vertices {0, ..., n-1}.

    parent[0] is the sentinel -1; parent[v] < v for v >= 1. children and
    level are derived on construction; children lists are ascending.
    """

    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...] = field(init=False, compare=False)
    level: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if not self.parent or self.parent[0] != -1:
            raise ValueError("parent[0] must be the sentinel -1")
        kids: list[list[int]] = [[] for _ in self.parent]
        lev = [0] * len(self.parent)
        for v, p in enumerate(self.parent):
            if v == 0:
                continue
            if not 0 <= p < v:
                raise ValueError(f"parent[{v}] = {p} must satisfy 0 <= parent < {v}")
            kids[p].append(v)
            lev[v] = lev[p] + 1
        object.__setattr__(self, "children", tuple(tuple(c) for c in kids))
        object.__setattr__(self, "level", tuple(lev))

    @property
    def n(self) -> int:
        return len(self.parent)

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (0 if v == 0 else 1)

    def neighbours(self, v: int) -> tuple[int, ...]:
        if v == 0:
            return self.children[v]
        return (self.parent[v],) + self.children[v]

    def height(self) -> int:
        return max(self.level)


@dataclass(frozen=True)
class TreeStats:
    n: int
    delta: int
    delta2: int
    diam: int


@dataclass(frozen=True)
class FamilySpec:
    """Complete m-ary tree of height k, or the degree-(m+1) regular tree
    truncated at level k (root has m+1 children, other internals m)."""

    family: str
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.family not in (COMPLETE_MARY, REGULAR_SUBTREE):
            raise ValueError(f"unknown family {self.family!r}")
        if self.m < 2 or self.k < 2:
            raise ValueError("family trees require m >= 2 and k >= 2")

    def vertex_count(self) -> int:
        m, k = self.m, self.k
        if self.family == COMPLETE_MARY:
            return (m ** (k + 1) - 1) // (m - 1)
        return 1 + (m + 1) * (m**k - 1) // (m - 1)


def build_family(spec: FamilySpec) -> RootedTree:
    """Generate the family tree with vertices in breadth-first order."""
    root_children = spec.m if spec.family == COMPLETE_MARY else spec.m + 1
    parent = [-1]
    frontier = deque([(0, 0)])  # (vertex, level)
    while frontier:
        v, lev = frontier.popleft()
        if lev == spec.k:
            continue
        fanout = root_children if v == 0 else spec.m
        for _ in range(fanout):
            parent.append(v)
            frontier.append((len(parent) - 1, lev + 1))
    tree = RootedTree(tuple(parent))
    assert tree.n == spec.vertex_count()
    return tree


def serialize_tree(tree: RootedTree) -> str:
    """First line n, second line parent[1] ... parent[n-1]."""
    return f"{tree.n}\n{' '.join(str(p) for p in tree.parent[1:])}\n"


def parse_tree(text: str) -> RootedTree:
    """Inverse of serialize_tree. Errors name the offending line."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise TreeFormatError("line 1: expected vertex count")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise TreeFormatError(f"line 1: malformed vertex count {lines[0].strip()!r}") from None
    if n < 1:
        raise TreeFormatError("line 1: vertex count must be >= 1")
    fields = lines[1].split() if len(lines) > 1 else []
    if len(fields) != n - 1:
        raise TreeFormatError(f"line 2: expected {n - 1} parent entries, found {len(fields)}")
    parents = [-1]
    for i, tok in enumerate(fields, start=1):
        try:
            p = int(tok)
        except ValueError:
            raise TreeFormatError(f"line 2: malformed integer {tok!r}") from None
        if p >= i:
            raise TreeFormatError(f"line 2: parent index {p} not less than child {i}")
        if p < 0:
            raise TreeFormatError(f"line 2: parent index {p} is negative")
        parents.append(p)
    return RootedTree(tuple(parents))


def tree_stats(tree: RootedTree) -> TreeStats:
    """Max degree, max edge degree-sum, and diameter of the undirected tree."""
    n = tree.n
    if n == 1:
        return TreeStats(n=1, delta=0, delta2=0, diam=0)
    degs = [tree.degree(v) for v in range(n)]
    delta = max(degs)
    delta2 = max(degs[v] + degs[tree.parent[v]] for v in range(1, n))
    far, _ = _farthest(tree, 0)
    _, diam = _farthest(tree, far)
    return TreeStats(n=n, delta=delta, delta2=delta2, diam=diam)


def _farthest(tree: RootedTree, start: int) -> tuple[int, int]:
    dist = {start: 0}
    queue = deque([start])
    best = start
    while queue:
        v = queue.popleft()
        if dist[v] > dist[best]:
            best = v
        for u in tree.neighbours(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return best, dist[best]


def dist3_neighborhood(tree: RootedTree, v: int) -> list[tuple[int, int]]:
    """All vertices at distance exactly 1, 2 or 3 from v, with distances.

    Three-step breadth-first expansion; result sorted by (distance, vertex).
    """
    if not 0 <= v < tree.n:
        raise ValueError(f"vertex {v} out of range")
    dist = {v: 0}
    queue = deque([v])
    out = []
    while queue:
        u = queue.popleft()
        if dist[u] == 3:
            continue
        for w in tree.neighbours(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                out.append((w, dist[w]))
                queue.append(w)
    out.sort(key=lambda t: (t[1], t[0]))
    return out


def has_dense_depth2_subtree(tree: RootedTree, variant: str) -> bool:
    """Detect an embedded depth-2 tree that forces the stronger bounds.

    variant "complete": some vertex has >= delta-1 neighbours of degree
    delta (hosts a complete (delta-1)-ary depth-2 subtree).
    variant "regular": some degree-delta vertex has all of its delta
    neighbours of degree delta.

    Degree counting is exact for these two patterns; no general subtree
    isomorphism is attempted.
    """
    if variant not in (COMPLETE_DENSE, REGULAR_DENSE):
        raise ValueError(f"unknown variant {variant!r}")
    stats = tree_stats(tree)
    delta = stats.delta
    if delta < 3:
        raise ValueError("dense depth-2 subtrees are undefined for max degree < 3")
    degs = [tree.degree(v) for v in range(tree.n)]
    for r in range(tree.n):
        full = sum(1 for u in tree.neighbours(r) if degs[u] == delta)
        if variant == COMPLETE_DENSE and full >= delta - 1:
            return True
        if variant == REGULAR_DENSE and degs[r] == delta and full == degs[r]:
            return True
    return False


def reroot(tree: RootedTree, new_root: int) -> tuple[RootedTree, tuple[int, ...]]:
    """Re-parent the tree at new_root, renumbering breadth-first.

    Returns (rerooted, old_index) where old_index[new] is the original
    vertex each new index came from.
    """
    if not 0 <= new_root < tree.n:
        raise ValueError(f"vertex {new_root} out of range")
    old_of_new = [new_root]
    new_of_old = {new_root: 0}
    parent = [-1]
    queue = deque([new_root])
    while queue:
        v = queue.popleft()
        for u in sorted(tree.neighbours(v)):
            if u not in new_of_old:
                new_of_old[u] = len(old_of_new)
                old_of_new.append(u)
                parent.append(new_of_old[v])
                queue.append(u)
    return RootedTree(tuple(parent)), tuple(old_of_new)


def random_tree(n: int, max_degree: int, seed: int) -> RootedTree:
    """Seeded random tree: each vertex attaches to a uniformly chosen
    earlier vertex that still has spare degree."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n >= 2 and max_degree < 1:
        raise ValueError("max_degree must allow at least one edge")
    rng = random.Random(seed)
    parent = [-1]
    degs = [0]
    for v in range(1, n):
        eligible = [u for u in range(v) if degs[u] < max_degree]
        if not eligible:
            raise ValueError(f"cannot place vertex {v}: degree cap {max_degree} too tight")
        p = rng.choice(eligible)
        parent.append(p)
        degs[p] += 1
        degs.append(1)
    return RootedTree(tuple(parent))
