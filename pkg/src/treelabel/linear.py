"""Constructions of linear (h, p, p) labellings of trees.

The general construction alternates two palettes down the levels of the
rooted tree: A0 = {0, p, ..., (delta-1)p} near the bottom of the range and
A1 = {h+(delta-1)p, ..., h+(2*delta-2)p} at the top, so that labels within
a palette are p-separated and labels across palettes are h-separated.  Its
span h + 2(delta-1)p is optimal whenever the tree hosts a dense regular
depth-2 subtree, and within a (delta-1)/(delta2-1) factor always.

Depth-2 and depth-3 complete m-ary trees admit tighter custom assignments
that realize their exact optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labelling import LINEAR, EleganceCertificate, Labelling, check_elegance
from .trees import COMPLETE_MARY, FamilySpec, RootedTree, build_family, tree_stats

TWO_PALETTE = "two-palette-linear"
DEPTH2_LINEAR = "depth2-linear"
DEPTH3_LINEAR = "depth3-linear"


@dataclass(frozen=True)
class ConstructionResult:
    labelling: Labelling
    certificate: EleganceCertificate
    source: str


def _certified(tree: RootedTree, labelling: Labelling, source: str) -> ConstructionResult:
    certificate = check_elegance(tree, labelling)
    if certificate is None:
        raise AssertionError(f"{source}: construction lost its elegance certificate")
    return ConstructionResult(labelling, certificate, source)


@dataclass(frozen=True)
class Palette:
    """The two label pools: a0 packed at the bottom of the range in p-steps,
    a1 at the top, h above a0's largest element.  Both have delta labels, so
    any vertex's children fit in one pool with one label excluded."""

    a0: tuple[int, ...]
    a1: tuple[int, ...]

    @classmethod
    def build(cls, delta: int, h: int, p: int) -> "Palette":
        return cls(tuple(i * p for i in range(delta)),
                   tuple(h + (delta - 1 + i) * p for i in range(delta)))


def palette_pair(delta: int, h: int, p: int) -> tuple[list[int], list[int]]:
    """The two label palettes, each of size delta."""
    pal = Palette.build(delta, h, p)
    return list(pal.a0), list(pal.a1)


def label_linear(tree: RootedTree, h: int, p: int, delta: int | None = None) -> ConstructionResult:
    """Two-palette construction on an arbitrary rooted tree.

    Children take palette labels in ascending order (children in ascending
    vertex order), skipping the grandparent's label in place.  Supplying a
    delta larger than the tree's max degree widens the palettes, which
    reproduces embedding arguments; by default delta is measured from the
    tree.
    """
    if h < p or p < 1:
        raise ValueError(f"requires h >= p >= 1, got h={h}, p={p}")
    if tree.n < 2:
        raise ValueError("tree must have at least 2 vertices")
    stats = tree_stats(tree)
    if delta is None:
        delta = stats.delta
    elif delta < stats.delta:
        raise ValueError(f"delta={delta} below the tree's max degree {stats.delta}")
    a0, a1 = palette_pair(delta, h, p)

    labels = [0] * tree.n
    for v in range(tree.n):
        kids = tree.children[v]
        if not kids:
            continue
        if v == 0:
            pool = a1
        else:
            palette = a0 if tree.level[v] % 2 == 1 else a1
            pool = [x for x in palette if x != labels[tree.parent[v]]]
        if len(kids) > len(pool):
            raise AssertionError(f"palette exhausted at vertex {v}")
        for child, x in zip(kids, pool):
            labels[child] = x

    labelling = Labelling(LINEAR, h + 2 * (delta - 1) * p, tuple(labels))
    return _certified(tree, labelling, TWO_PALETTE)


def label_linear_depth2(m: int, h: int, p: int) -> ConstructionResult:
    """Optimal labelling of the complete m-ary tree of height 2.

    Same palettes with delta = m+1, but the root's children avoid the top
    label h+2mp, pulling the span down to the exact optimum h+(2m-1)p.
    """
    if h < p or p < 1:
        raise ValueError(f"requires h >= p >= 1, got h={h}, p={p}")
    if m < 2:
        raise ValueError("requires m >= 2")
    tree = build_family(FamilySpec(COMPLETE_MARY, m, 2))
    a0, a1 = palette_pair(m + 1, h, p)
    top = h + 2 * m * p
    root_pool = [x for x in a1 if x != top]

    labels = [0] * tree.n
    for child, x in zip(tree.children[0], root_pool):
        labels[child] = x
    for v in tree.children[0]:
        pool = [x for x in a0 if x != 0]
        for child, x in zip(tree.children[v], pool):
            labels[child] = x

    labelling = Labelling(LINEAR, h + (2 * m - 1) * p, tuple(labels))
    return _certified(tree, labelling, DEPTH2_LINEAR)


def label_linear_depth3(m: int, h: int, p: int) -> ConstructionResult:
    """Optimal labelling of the complete m-ary tree of height 3.

    Two regimes meeting at h = 2p:
      h >= 2p: root mp, level 1 at h+(m+i-1)p, level 2 from {0..(m-1)p},
               level 3 from {h+(m-1)p..h+(2m-1)p} minus the grandparent
               label; span h+(2m-1)p.
      h <= 2p: root mp, level 1 at (m+i+1)p, level 2 from {0..(m-1)p},
               level 3 from {(m+1)p..(2m+1)p} minus the grandparent label;
               span (2m+1)p.
    """
    if h < p or p < 1:
        raise ValueError(f"requires h >= p >= 1, got h={h}, p={p}")
    if m < 2:
        raise ValueError("requires m >= 2")
    tree = build_family(FamilySpec(COMPLETE_MARY, m, 3))
    labels = [0] * tree.n
    labels[0] = m * p
    low = [j * p for j in range(m)]
    if h >= 2 * p:
        level1 = [h + (m + i) * p for i in range(m)]
        level3 = [h + (m - 1 + j) * p for j in range(m + 1)]
        span = h + (2 * m - 1) * p
    else:
        level1 = [(m + i + 2) * p for i in range(m)]
        level3 = [(m + 1 + j) * p for j in range(m + 1)]
        span = (2 * m + 1) * p

    for u1, x in zip(tree.children[0], level1):
        labels[u1] = x
        for u2, y in zip(tree.children[u1], low):
            labels[u2] = y
            pool = [z for z in level3 if z != x]
            for u3, z in zip(tree.children[u2], pool):
                labels[u3] = z

    labelling = Labelling(LINEAR, span, tuple(labels))
    return _certified(tree, labelling, DEPTH3_LINEAR)
