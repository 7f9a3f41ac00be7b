"""Shared fixtures and independent brute-force oracles.

The oracles here recompute everything from the undirected edge list with
no shared code paths: all-pairs distances by BFS, statistics from the
distance matrix, and subtree embedding by explicit backtracking.  Tests
use them to cross-check the package's faster implementations.
"""

from __future__ import annotations

import itertools
from collections import deque

import pytest
from hypothesis import strategies as st

from treelabel import CYCLIC, FamilySpec, RootedTree, build_family
from treelabel import COMPLETE_MARY, REGULAR_SUBTREE


def adjacency(tree: RootedTree) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(tree.n)]
    for v in range(1, tree.n):
        adj[v].append(tree.parent[v])
        adj[tree.parent[v]].append(v)
    return adj


def bf_distances(tree: RootedTree) -> list[list[int]]:
    adj = adjacency(tree)
    dist = [[-1] * tree.n for _ in range(tree.n)]
    for s in range(tree.n):
        dist[s][s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if dist[s][u] < 0:
                    dist[s][u] = dist[s][v] + 1
                    queue.append(u)
    return dist


def bf_stats(tree: RootedTree) -> tuple[int, int, int]:
    """(delta, delta2, diam) from the distance matrix and edge list."""
    adj = adjacency(tree)
    degs = [len(a) for a in adj]
    delta = max(degs) if tree.n > 1 else 0
    delta2 = max((degs[u] + degs[v] for v in range(1, tree.n)
                  for u in [tree.parent[v]]), default=0)
    dist = bf_distances(tree)
    diam = max(max(row) for row in dist)
    return delta, delta2, diam


def bf_violations(tree: RootedTree, labels, ell: int, mode: str, h1: int, h2: int, h3: int):
    """All separation violations by checking every vertex pair."""
    dist = bf_distances(tree)
    req = {1: h1, 2: h2, 3: h3}
    out = []
    for u in range(tree.n):
        for v in range(u + 1, tree.n):
            d = dist[u][v]
            if d not in req:
                continue
            gap = abs(labels[u] - labels[v])
            if mode == CYCLIC:
                gap = min(gap, ell - gap)
            if gap < req[d]:
                out.append((u, v, d))
    return out


def bf_embeds_rooted(host: RootedTree, pattern: RootedTree) -> bool:
    """Does the pattern tree embed into the host (as a subtree, any root)?

    Rooted backtracking over all host vertices as the pattern root image,
    matching pattern children to distinct host neighbours by permutation.
    """
    if pattern.n > host.n:
        return False
    host_adj = adjacency(host)

    def match(pv: int, hv: int, used_parent: int) -> bool:
        kids = pattern.children[pv]
        if not kids:
            return True
        options = [u for u in host_adj[hv] if u != used_parent]
        if len(options) < len(kids):
            return False
        for combo in itertools.permutations(options, len(kids)):
            if all(match(k, c, hv) for k, c in zip(kids, combo)):
                return True
        return False

    return any(match(0, hv, -1) for hv in range(host.n))


def random_parent_tree(rng_values: list[int]) -> RootedTree:
    """Build a tree from a list of drawn parent choices (v=1..n-1)."""
    parent = [-1]
    for v, choice in enumerate(rng_values, start=1):
        parent.append(choice % v)
    return RootedTree(tuple(parent))


@st.composite
def tree_strategy(draw, min_n: int = 2, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    choices = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    parent = [-1] + choices
    return RootedTree(tuple(parent))


@pytest.fixture(scope="session")
def t22() -> RootedTree:
    return build_family(FamilySpec(COMPLETE_MARY, 2, 2))


@pytest.fixture(scope="session")
def treg22() -> RootedTree:
    return build_family(FamilySpec(REGULAR_SUBTREE, 2, 2))


@pytest.fixture(scope="session")
def path4() -> RootedTree:
    return RootedTree((-1, 0, 1, 2))


@pytest.fixture(scope="session")
def star3() -> RootedTree:
    return RootedTree((-1, 0, 0, 0))
