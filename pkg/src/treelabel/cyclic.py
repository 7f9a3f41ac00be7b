"""Constructions of cyclic (h, p, p) labellings of trees.

All three constructions label level by level and maintain, for every
expanded vertex, the label set its neighbourhood would carry if the tree
were completed to the full degree-(delta) regular pattern.  Expanding with
the completed neighbourhood (real labels plus phantom-child labels) keeps
the frontier step feasible on arbitrary trees: the allowed label set is
always large enough, and sits in at most two arcs flanking the parent's
label.  Real children take the allowed labels closest to the parent's
label, so restricted neighbourhoods stay contiguous (a p-set, or a
circular interval when p = 1).

 * label_cyclic_large: modulus 2h + delta*p - 1, needs h >= delta*p.
   Neighbourhood label sets are p-sets; the frontier picks the maximal
   p-set through the parent label inside the arc at cyclic distance >= h
   from the expanding vertex.
 * label_cyclic_h11: p = 1.  Delegates to the large-separation route when
   h >= delta, otherwise modulus h + 2*delta - 1 with interval frontiers.
 * label_cyclic_depth2: the tighter explicit assignments for the depth-2
   families, achieving their exact optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .labelling import CYCLIC, EleganceCertificate, Labelling, minimal_cover_interval
from .linear import ConstructionResult
from .trees import (
    COMPLETE_MARY,
    REGULAR_SUBTREE,
    FamilySpec,
    RootedTree,
    build_family,
    reroot,
    tree_stats,
)

LARGE_SEP_CYCLIC = "large-sep-cyclic"
INTERVAL_FRONTIER_CYCLIC = "interval-frontier-cyclic"
DEPTH2_CYCLIC = "depth2-cyclic"


class FrontierError(AssertionError):
    """The level-by-level expansion ran out of feasible labels."""


@dataclass(frozen=True)
class FrontierState:
    """One expansion step: handing labels to the children of a vertex v.

    blocked_near holds the completed neighbourhood of v's parent w plus
    f(w) itself; blocked_ball the labels within cyclic distance h-1 of
    f(v).  allowed is the complement, which the construction keeps large
    enough (at least delta-1 labels) and flanking f(w), so that chosen
    together with f(w) always extends to a p-grid or circular interval.
    """

    blocked_near: frozenset[int]
    blocked_ball: frozenset[int]
    allowed: frozenset[int]
    chosen: tuple[int, ...]

    @classmethod
    def build(cls, ell: int, h: int, parent_nbhd: list[int], fw: int, fv: int,
              chosen: list[int]) -> "FrontierState":
        near = frozenset(parent_nbhd) | {fw}
        ball = frozenset((fv + d) % ell for d in range(-(h - 1), h))
        return cls(near, ball, frozenset(range(ell)) - near - ball, tuple(chosen))

    def require(self, vertex: int, min_allowed: int) -> None:
        if len(self.allowed) < min_allowed:
            raise FrontierError(
                f"frontier shrank below {min_allowed} labels at vertex {vertex}")
        outside = [x for x in self.chosen if x not in self.allowed]
        if outside:
            raise FrontierError(
                f"labels {outside} blocked while expanding vertex {vertex}")


def _ascending_from(values: list[int], start: int, ell: int) -> list[int]:
    """Sort cyclically ascending beginning just above start."""
    return sorted(values, key=lambda x: (x - start - 1) % ell)


def _emit(tree: RootedTree, labels: list[int], ell: int, source: str) -> ConstructionResult:
    labelling = Labelling(CYCLIC, ell, tuple(labels))
    intervals = []
    for v in range(tree.n):
        nbr_labels = [labels[u] for u in tree.neighbours(v)]
        intervals.append(minimal_cover_interval(nbr_labels, ell) if nbr_labels else (0, 0))
    certificate = EleganceCertificate(CYCLIC, ell, tuple(intervals))
    problems = certificate.problems(tree, labelling)
    if problems:
        raise FrontierError(f"{source}: certificate failed: {problems[0]}")
    return ConstructionResult(labelling, certificate, source)


def label_cyclic_large(tree: RootedTree, h: int, p: int) -> ConstructionResult:
    """Large-separation construction with modulus ell = 2h + delta*p - 1.

    Root gets 0, its i-th child h+(i-1)p.  Every later expansion places the
    children of v inside the arc at cyclic distance >= h from f(v), on the
    maximal p-grid through the parent label; with m = delta-1 that grid has
    exactly m+1 points, so up to m children always fit.
    """
    stats = tree_stats(tree)
    if stats.diam < 3 or stats.delta < 3:
        raise ValueError(f"requires diameter >= 3 and max degree >= 3, got "
                         f"diam={stats.diam}, delta={stats.delta}")
    if p < 1 or h < stats.delta * p:
        raise ValueError(f"requires h >= delta*p = {stats.delta * p}, got h={h}")
    m = stats.delta - 1
    ell = 2 * h + (m + 1) * p - 1

    labels = [0] * tree.n
    # Completed root neighbourhood: the full p-grid {h, h+p, ..., h+mp}.
    full_nbhd: dict[int, list[int]] = {0: [h + j * p for j in range(m + 1)]}
    root_kids = tree.children[0]
    if len(root_kids) > m + 1:
        raise AssertionError("max degree bookkeeping violated at the root")
    for i, child in enumerate(root_kids, start=1):
        labels[child] = h + (i - 1) * p

    for v in range(1, tree.n):
        kids = tree.children[v]
        if not kids:
            continue
        w = tree.parent[v]
        fw, fv = labels[w], labels[v]
        # Arc of labels at cyclic distance >= h from f(v); it has (m+1)p
        # positions and contains f(w).
        arc_start = (fv + h) % ell
        offset = (fw - arc_start) % ell
        if offset >= (m + 1) * p:
            raise FrontierError(f"parent label {fw} outside the allowed arc of vertex {v}")
        down_full = offset // p
        up_full = m - down_full
        if len(kids) > m:
            raise AssertionError(f"vertex {v} has more than delta-1 children")
        up_real = min(len(kids), up_full)
        down_real = len(kids) - up_real
        chosen = [(fw + j * p) % ell for j in range(1, up_real + 1)]
        chosen += [(fw - j * p) % ell for j in range(1, down_real + 1)]
        FrontierState.build(ell, h, full_nbhd[w], fw, fv, chosen).require(v, m)
        for child, x in zip(kids, _ascending_from(chosen, fw, ell)):
            labels[child] = x
        full_nbhd[v] = [(fw + j * p) % ell for j in range(-down_full, up_full + 1)]

    return _emit(tree, labels, ell, LARGE_SEP_CYCLIC)


def _h11_root(tree: RootedTree) -> int:
    """Root used by the interval-frontier construction.

    A neighbour of a maximum degree vertex; when some heavy edge joins two
    maximum degree vertices (delta2 = 2*delta), a neighbour of one end
    avoiding the other end.  Ties break to smallest vertex index.
    """
    stats = tree_stats(tree)
    degs = [tree.degree(v) for v in range(tree.n)]
    if stats.delta2 == 2 * stats.delta:
        for v in range(1, tree.n):
            x, y = tree.parent[v], v
            if degs[x] + degs[y] != stats.delta2:
                continue
            for end, other in ((min(x, y), max(x, y)), (max(x, y), min(x, y))):
                options = [u for u in tree.neighbours(end) if u != other]
                if options:
                    return min(options)
        raise AssertionError("no heavy edge found despite delta2 = 2*delta")
    z = min(v for v in range(tree.n) if degs[v] == stats.delta)
    return min(tree.neighbours(z))


def label_cyclic_h11(tree: RootedTree, h: int) -> ConstructionResult:
    """Cyclic (h, 1, 1) labelling; exact for h >= delta, else modulus
    h + 2*delta - 1 via the interval frontier."""
    stats = tree_stats(tree)
    if stats.diam < 3 or stats.delta < 3:
        raise ValueError(f"requires diameter >= 3 and max degree >= 3, got "
                         f"diam={stats.diam}, delta={stats.delta}")
    if h < 1:
        raise ValueError(f"requires h >= 1, got h={h}")
    if h >= stats.delta:
        return label_cyclic_large(tree, h, 1)

    root = _h11_root(tree)
    rooted, old_index = reroot(tree, root)
    labels_new, ell = _h11_core(rooted, h, stats.delta)
    labels = [0] * tree.n
    for new, old in enumerate(old_index):
        labels[old] = labels_new[new]
    return _emit(tree, labels, ell, INTERVAL_FRONTIER_CYCLIC)


def _h11_core(tree: RootedTree, h: int, delta: int) -> tuple[list[int], int]:
    """Interval-frontier labelling of a rooted tree, modulus h+2*delta-1.

    Level-2 label blocks follow the completed degree-delta pattern: root
    position i (1-based) uses [h+m+1, h+2m] up to the split i = m-h+2 and
    [2h+i-1, 2h+m+i-1] minus {0} after it, where m = delta-1.  Real
    children take the block labels cyclically closest to 0 so that {0}
    together with them stays a circular interval.
    """
    m = delta - 1
    ell = h + 2 * m + 1
    labels = [0] * tree.n
    full_nbhd: dict[int, list[int]] = {0: [h + i for i in range(m + 1)]}

    root_kids = tree.children[0]
    if len(root_kids) > m + 1:
        raise AssertionError("root degree exceeds delta")
    for i, child in enumerate(root_kids, start=1):
        labels[child] = h + i - 1

    for v in range(1, tree.n):
        kids = tree.children[v]
        if tree.level[v] == 1:
            i = root_kids.index(v) + 1
            if i <= m - h + 2:
                block = list(range(h + m + 1, h + 2 * m + 1))
            else:
                block = [x % ell for x in range(2 * h + i - 1, 2 * h + m + i)]
                block = [x for x in block if x != 0]
            interval_members = set(block) | {0}
            # Extend from 0 upward inside the block, then downward.
            up, down = [], []
            x = 1
            while x in interval_members and len(up) < len(kids):
                up.append(x)
                x += 1
            x = ell - 1
            while x in interval_members and len(up) + len(down) < len(kids):
                down.append(x)
                x -= 1
            chosen = up + down
            if len(chosen) < len(kids):
                raise FrontierError(f"level-2 block too small at vertex {v}")
            for child, x in zip(kids, _ascending_from(chosen, 0, ell)):
                labels[child] = x
            full_nbhd[v] = block + [0]
            continue
        if not kids:
            continue
        w = tree.parent[v]
        fw, fv = labels[w], labels[v]
        blocked = set(full_nbhd[w]) | {fw}
        blocked |= {(fv + d) % ell for d in range(-(h - 1), h)}
        run_up, run_down = [], []
        x = (fw + 1) % ell
        while x not in blocked and len(run_up) < m:
            run_up.append(x)
            x = (x + 1) % ell
        x = (fw - 1) % ell
        while x not in blocked and len(run_down) < m:
            run_down.append(x)
            x = (x - 1) % ell
        if len(run_up) + len(run_down) < m:
            raise FrontierError(f"interval run around parent label broke at vertex {v}")
        up_full = min(m, len(run_up))
        down_full = m - up_full
        if len(kids) > m:
            raise AssertionError(f"vertex {v} has more than delta-1 children")
        up_real = min(len(kids), up_full)
        chosen = run_up[:up_real] + run_down[:len(kids) - up_real]
        FrontierState.build(ell, h, full_nbhd[w], fw, fv, chosen).require(v, m)
        for child, x in zip(kids, _ascending_from(chosen, fw, ell)):
            labels[child] = x
        full_nbhd[v] = run_up[:up_full] + run_down[:down_full] + [fw]

    return labels, ell


def label_cyclic_depth2(spec: FamilySpec, h: int, p: int) -> ConstructionResult:
    """Exact cyclic labellings of the depth-2 families.

    Large-separation branch (h >= mp complete, h >= (m+1)p regular):
    modulus 2h+mp with the grandchild p-grids (2h + p[i-1, m+i-1]) minus
    {0}.  Small-h branch (p = 1, h <= m): modulus h+2m (complete) or
    h+2m+1 (regular) with the two-block grandchild assignment split at
    root position d(root)-h+1.
    """
    if spec.k != 2:
        raise ValueError("depth-2 construction needs k = 2")
    if p < 1 or h < 1:
        raise ValueError(f"requires h, p >= 1, got h={h}, p={p}")
    m = spec.m
    complete = spec.family == COMPLETE_MARY
    r = m if complete else m + 1
    tree = build_family(spec)
    labels = [0] * tree.n

    large_ok = h >= m * p if complete else h >= (m + 1) * p
    if large_ok:
        ell = 2 * h + m * p
        for i, u in enumerate(tree.children[0], start=1):
            labels[u] = h + (i - 1) * p
            block = [(2 * h + j * p) % ell for j in range(i - 1, m + i)]
            block = [x for x in block if x != 0]
            for child, x in zip(tree.children[u], _ascending_from(block, 0, ell)):
                labels[child] = x
        return _emit(tree, labels, ell, DEPTH2_CYCLIC)

    if p != 1 or h > m:
        raise ValueError(f"no depth-2 construction for h={h}, p={p} on this family")
    ell = (h + 2 * m) if complete else (h + 2 * m + 1)
    split = r - h + 1
    first_block = list(range(ell - m, ell))  # [h+m, h+2m-1] resp. [h+m+1, h+2m]
    for i, u in enumerate(tree.children[0], start=1):
        labels[u] = h + i - 1
        if i <= split:
            block = first_block
        else:
            block = [x % ell for x in range(2 * h + i - 1, 2 * h + m + i)]
            block = [x for x in block if x != 0]
        for child, x in zip(tree.children[u], _ascending_from(block, 0, ell)):
            labels[child] = x
    return _emit(tree, labels, ell, DEPTH2_CYCLIC)


def label_cyclic_auto(tree: RootedTree, h: int, p: int) -> ConstructionResult:
    """Pick the best applicable cyclic construction for a tree.

    Depth-2 family trees in canonical order get their exact construction;
    otherwise the large-separation route when h >= delta*p, falling back to
    the interval frontier for p = 1.
    """
    spec = match_depth2_family(tree)
    if spec is not None:
        try:
            return label_cyclic_depth2(spec, h, p)
        except ValueError:
            pass
    stats = tree_stats(tree)
    if p >= 1 and h >= stats.delta * p:
        return label_cyclic_large(tree, h, p)
    if p == 1:
        return label_cyclic_h11(tree, h)
    raise ValueError(f"no cyclic construction covers h={h}, p={p} for this tree "
                     f"(needs h >= delta*p or p = 1)")


def match_depth2_family(tree: RootedTree) -> FamilySpec | None:
    """Recognize canonical depth-2 family trees (as build_family emits)."""
    if tree.n < 7:
        return None
    r = len(tree.children[0])
    for family, m in ((COMPLETE_MARY, r), (REGULAR_SUBTREE, r - 1)):
        if m < 2:
            continue
        spec = FamilySpec(family, m, 2)
        if spec.vertex_count() == tree.n and tree == build_family(spec):
            return spec
    return None
