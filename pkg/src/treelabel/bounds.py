"""Closed-form lower/upper bounds and exact values for the four labelling
numbers (lambda, lambda*, sigma, sigma*) of trees under (h, p, p)
separations.

Every report carries machine-readable source tags so tests can bind to the
specific result that produced a number instead of the number itself.  When
several results apply, lower bounds are combined by max and upper bounds by
min, and all contributing tags are kept.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .trees import (
    COMPLETE_DENSE,
    COMPLETE_MARY,
    REGULAR_DENSE,
    FamilySpec,
    RootedTree,
    build_family,
    has_dense_depth2_subtree,
    tree_stats,
)

# Source tags: linear quantities
LINEAR_GENERAL = "linear-general-bounds"
LINEAR_DENSE_COMPLETE = "linear-dense-complete-lower"
LINEAR_DENSE_REGULAR = "linear-dense-regular-exact"
LINEAR_DEPTH2 = "linear-depth2-exact"
LINEAR_DEPTH3 = "linear-depth3-exact"
LINEAR_FAMILY = "linear-family-exact"

# Source tags: cyclic quantities
CYCLIC_LARGE_SEP = "cyclic-large-sep-bounds"
CYCLIC_H_GE_DELTA = "cyclic-h-ge-delta-exact"
CYCLIC_GENERAL = "cyclic-general-bounds"
CYCLIC_DENSE_COMPLETE = "cyclic-dense-complete-lower"
CYCLIC_DENSE_REGULAR = "cyclic-dense-regular-exact"
CYCLIC_DEPTH2_COMPLETE = "cyclic-depth2-complete-exact"
CYCLIC_DEPTH2_REGULAR = "cyclic-depth2-regular-exact"
CYCLIC_FAMILY = "cyclic-family-exact"
CYCLIC_FAMILY_BOUNDS = "cyclic-family-bounds"


@dataclass(frozen=True)
class BoundsReport:
    quantity: str  # "lambda", "lambda_star", "sigma", "sigma_star"
    lower: int = 0
    upper: int | None = None
    exact: int | None = None
    sources: tuple[str, ...] = ()
    applicable: bool = True
    reason: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.applicable:
            if self.upper is not None and self.lower > self.upper:
                raise ValueError(f"lower {self.lower} exceeds upper {self.upper}")
            if self.exact is not None and self.exact != self.lower:
                raise ValueError("exact value must equal both bounds")
            if self.exact is not None and self.exact != self.upper:
                raise ValueError("exact value must equal both bounds")

    @classmethod
    def exact_value(cls, quantity: str, value: int, sources: tuple[str, ...]) -> "BoundsReport":
        return cls(quantity, lower=value, upper=value, exact=value, sources=sources)

    @classmethod
    def not_applicable(cls, quantity: str, reason: str) -> "BoundsReport":
        return cls(quantity, lower=0, upper=None, exact=None, sources=(),
                   applicable=False, reason=reason)

    def to_dict(self) -> dict:
        return {"quantity": self.quantity, "lower": self.lower, "upper": self.upper,
                "exact": self.exact, "sources": list(self.sources),
                "applicable": self.applicable, "reason": self.reason}


def _combine(quantity: str, pieces: list[tuple[int | None, int | None, str]]) -> BoundsReport:
    """Max of lower bounds, min of upper bounds, all tags retained."""
    lower = max(lo for lo, _, _ in pieces if lo is not None)
    uppers = [up for _, up, _ in pieces if up is not None]
    upper = min(uppers) if uppers else None
    sources = tuple(tag for lo, up, tag in pieces
                    if (lo is not None and lo == lower) or (up is not None and up == upper))
    exact = lower if upper == lower else None
    return BoundsReport(quantity, lower=lower, upper=upper, exact=exact, sources=sources)


def lambda_bounds(tree: RootedTree, h: int, p: int) -> BoundsReport:
    """Bounds on the linear (h,p,p) span of a tree with diameter >= 3.

    lower = max{(delta2-1)p, h+(delta-1)p}, upper = h+2(delta-1)p, improved
    to h+(2*delta-3)p or pinned exactly at the upper bound when the tree
    hosts a dense depth-2 subtree.
    """
    if h < p or p < 1:
        return BoundsReport.not_applicable("lambda", f"requires h >= p >= 1, got h={h}, p={p}")
    stats = tree_stats(tree)
    if stats.diam < 3:
        return BoundsReport.not_applicable("lambda", f"requires diameter >= 3, got {stats.diam}")
    delta, delta2 = stats.delta, stats.delta2
    pieces = [
        (max((delta2 - 1) * p, h + (delta - 1) * p), h + 2 * (delta - 1) * p, LINEAR_GENERAL),
    ]
    if delta >= 3:
        if has_dense_depth2_subtree(tree, COMPLETE_DENSE):
            pieces.append((h + (2 * delta - 3) * p, None, LINEAR_DENSE_COMPLETE))
        if has_dense_depth2_subtree(tree, REGULAR_DENSE):
            value = h + 2 * (delta - 1) * p
            pieces.append((value, value, LINEAR_DENSE_REGULAR))
    return _combine("lambda", pieces)


def lambda_family_exact(spec: FamilySpec, h: int, p: int) -> BoundsReport:
    """Exact linear (h,p,p) span of the complete m-ary and regular families.

    The value covers both the plain and the elegant-restricted optimum.
    """
    if h < p or p < 1:
        return BoundsReport.not_applicable("lambda", f"requires h >= p >= 1, got h={h}, p={p}")
    m = spec.m
    if spec.family == COMPLETE_MARY:
        if spec.k == 2:
            return BoundsReport.exact_value("lambda", h + (2 * m - 1) * p, (LINEAR_DEPTH2,))
        if spec.k == 3:
            value = max(h + (2 * m - 1) * p, (2 * m + 1) * p)
            return BoundsReport.exact_value("lambda", value, (LINEAR_DEPTH3,))
        return BoundsReport.exact_value("lambda", h + 2 * m * p, (LINEAR_FAMILY,))
    return BoundsReport.exact_value("lambda", h + 2 * m * p, (LINEAR_FAMILY,))


def sigma_bounds(tree: RootedTree, h: int, p: int) -> BoundsReport:
    """Bounds on the cyclic (h,p,p) modulus of a tree.

    p = 1 has full coverage for any h >= 1; p > 1 is only covered in the
    large-separation regime h >= delta*p, where the gap between the bounds
    is p-1 independent of the tree.
    """
    if h < 1 or p < 1:
        return BoundsReport.not_applicable("sigma", f"requires h, p >= 1, got h={h}, p={p}")
    stats = tree_stats(tree)
    if stats.diam < 3:
        return BoundsReport.not_applicable("sigma", f"requires diameter >= 3, got {stats.diam}")
    delta, delta2 = stats.delta, stats.delta2
    if delta < 3:
        return BoundsReport.not_applicable("sigma", f"requires max degree >= 3, got {delta}")

    if p == 1:
        pieces = [
            (max(delta2, 2 * h + delta - 1), max(h + 2 * delta - 1, 2 * h + delta - 1),
             CYCLIC_GENERAL),
        ]
        if h >= delta:
            value = 2 * h + delta - 1
            pieces.append((value, value, CYCLIC_H_GE_DELTA))
        if h <= delta and has_dense_depth2_subtree(tree, COMPLETE_DENSE):
            pieces.append((h + 2 * delta - 2, None, CYCLIC_DENSE_COMPLETE))
        if h <= delta and has_dense_depth2_subtree(tree, REGULAR_DENSE):
            value = h + 2 * delta - 1
            pieces.append((value, value, CYCLIC_DENSE_REGULAR))
        return _combine("sigma", pieces)

    if h < delta * p:
        return BoundsReport.not_applicable(
            "sigma", f"p > 1 covered only for h >= delta*p = {delta * p}, got h={h}")
    return _combine("sigma", [
        (2 * h + (delta - 1) * p, 2 * h + delta * p - 1, CYCLIC_LARGE_SEP),
    ])


def sigma_family_exact(spec: FamilySpec, h: int, p: int) -> BoundsReport:
    """Exact cyclic (h,p,p) modulus of the depth-2 families and, for p = 1,
    of the full families; bounds only where no formula exists."""
    if h < 1 or p < 1:
        return BoundsReport.not_applicable("sigma", f"requires h, p >= 1, got h={h}, p={p}")
    m, k = spec.m, spec.k
    complete = spec.family == COMPLETE_MARY

    if p == 1:
        if complete and k == 2:
            return BoundsReport.exact_value(
                "sigma", max(h + 2 * m, 2 * h + m), (CYCLIC_DEPTH2_COMPLETE,))
        if not complete and k == 2:
            return BoundsReport.exact_value(
                "sigma", max(h + 2 * m + 1, 2 * h + m), (CYCLIC_DEPTH2_REGULAR,))
        if complete and k == 3:
            # No family formula at depth 3; fall back to the general bounds.
            return sigma_bounds(build_family(spec), h, 1)
        return BoundsReport.exact_value(
            "sigma", max(h + 2 * m + 1, 2 * h + m), (CYCLIC_FAMILY,))

    if k == 2:
        if complete and h >= m * p:
            return BoundsReport.exact_value("sigma", 2 * h + m * p, (CYCLIC_DEPTH2_COMPLETE,))
        if not complete and h >= (m + 1) * p:
            return BoundsReport.exact_value("sigma", 2 * h + m * p, (CYCLIC_DEPTH2_REGULAR,))
        return BoundsReport.not_applicable(
            "sigma", f"no depth-2 formula for p={p}, h={h} (needs h >= {'m*p' if complete else '(m+1)*p'})")
    if h >= (m + 1) * p:
        return _combine("sigma", [
            (2 * h + m * p, 2 * h + (m + 1) * p - 1, CYCLIC_FAMILY_BOUNDS),
        ])
    return BoundsReport.not_applicable(
        "sigma", f"p > 1 covered only for h >= (m+1)p = {(m + 1) * p}, got h={h}")


def sandwich_inequalities(lam: int, sigma: int, h1: int) -> bool:
    """Cross-check: lambda + 1 <= sigma <= lambda + h1."""
    return lam + 1 <= sigma <= lam + h1
