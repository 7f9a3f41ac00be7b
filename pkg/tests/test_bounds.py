from fractions import Fraction

import pytest

from treelabel import (
    COMPLETE_MARY,
    REGULAR_SUBTREE,
    FamilySpec,
    RootedTree,
    build_family,
    lambda_bounds,
    lambda_family_exact,
    sandwich_inequalities,
    sigma_bounds,
    sigma_family_exact,
)
from treelabel import bounds as B

DOUBLE_STAR = RootedTree((-1, 0, 0, 0, 1))  # five vertices, diameter 3


class TestLambdaBounds:
    def test_double_star(self):
        report = lambda_bounds(DOUBLE_STAR, 2, 1)
        assert (report.lower, report.upper) == (4, 6)
        assert report.exact is None
        assert B.LINEAR_GENERAL in report.sources

    def test_regular_2_2_pins_exact(self, treg22):
        report = lambda_bounds(treg22, 3, 1)
        assert report.exact == 7
        assert B.LINEAR_DENSE_REGULAR in report.sources

    def test_t22_complete_subtree_raises_lower(self, t22):
        report = lambda_bounds(t22, 2, 1)
        assert (report.lower, report.upper) == (5, 6)
        assert B.LINEAR_DENSE_COMPLETE in report.sources

    def test_path_has_no_subtree_terms(self):
        path = RootedTree((-1, 0, 1, 2, 3))
        report = lambda_bounds(path, 2, 1)
        assert report.applicable
        assert (report.lower, report.upper) == (3, 4)

    def test_not_applicable_small_diameter(self, star3):
        report = lambda_bounds(star3, 2, 1)
        assert not report.applicable
        assert "diameter" in report.reason

    def test_not_applicable_h_below_p(self, t22):
        assert not lambda_bounds(t22, 1, 2).applicable


class TestLambdaFamilyExact:
    def test_depth2(self):
        assert lambda_family_exact(FamilySpec(COMPLETE_MARY, 2, 2), 2, 1).exact == 5

    def test_depth3_small_h(self):
        report = lambda_family_exact(FamilySpec(COMPLETE_MARY, 2, 3), 1, 1)
        assert report.exact == 5
        assert B.LINEAR_DEPTH3 in report.sources

    def test_regular(self):
        assert lambda_family_exact(FamilySpec(REGULAR_SUBTREE, 3, 2), 4, 1).exact == 10

    def test_deep_complete(self):
        assert lambda_family_exact(FamilySpec(COMPLETE_MARY, 2, 4), 3, 2).exact == 3 + 8

    @pytest.mark.parametrize("family,m,k", [
        (COMPLETE_MARY, 2, 2), (COMPLETE_MARY, 2, 3), (COMPLETE_MARY, 3, 4),
        (REGULAR_SUBTREE, 2, 2), (REGULAR_SUBTREE, 3, 3),
    ])
    @pytest.mark.parametrize("h,p", [(1, 1), (3, 1), (2, 2), (5, 2)])
    def test_family_exact_within_general_bounds(self, family, m, k, h, p):
        spec = FamilySpec(family, m, k)
        exact = lambda_family_exact(spec, h, p)
        general = lambda_bounds(build_family(spec), h, p)
        assert general.applicable
        assert general.lower <= exact.exact <= general.upper


class TestSigmaBounds:
    def test_h_at_least_delta_exact(self, t22):
        report = sigma_bounds(t22, 5, 1)
        assert report.exact == 12
        assert B.CYCLIC_H_GE_DELTA in report.sources

    def test_large_separation_p2(self):
        tree = build_family(FamilySpec(COMPLETE_MARY, 3, 2))  # delta 4
        report = sigma_bounds(tree, 9, 2)
        assert (report.lower, report.upper) == (24, 25)
        assert report.exact is None

    def test_regular_dense_exact(self, treg22):
        report = sigma_bounds(treg22, 2, 1)
        assert report.exact == 7
        assert B.CYCLIC_DENSE_REGULAR in report.sources

    def test_complete_dense_lower(self, t22):
        report = sigma_bounds(t22, 2, 1)
        assert report.lower == 6
        assert report.upper == 7
        assert B.CYCLIC_DENSE_COMPLETE in report.sources

    def test_not_applicable_cases(self, t22, star3, path4):
        assert not sigma_bounds(t22, 5, 2).applicable  # p>1 needs h >= delta*p
        assert not sigma_bounds(star3, 2, 1).applicable  # diameter
        assert not sigma_bounds(path4, 2, 1).applicable  # max degree


class TestSigmaFamilyExact:
    def test_complete_depth2(self):
        assert sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 2), 3, 1).exact == 8

    def test_regular_depth2(self):
        assert sigma_family_exact(FamilySpec(REGULAR_SUBTREE, 2, 2), 1, 1).exact == 6

    def test_complete_depth2_p2(self):
        assert sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 2), 4, 2).exact == 12

    def test_deep_families_p1(self):
        assert sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 4), 2, 1).exact == 7
        assert sigma_family_exact(FamilySpec(REGULAR_SUBTREE, 2, 3), 2, 1).exact == 7

    def test_complete_depth3_falls_back_to_tree_bounds(self):
        report = sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 3), 2, 1)
        assert report.applicable
        assert report.exact is None
        assert (report.lower, report.upper) == (6, 7)

    def test_deep_family_p2_bounds_only(self):
        report = sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 3), 7, 2)
        assert report.applicable
        assert report.exact is None
        assert (report.lower, report.upper) == (18, 19)
        assert B.CYCLIC_FAMILY_BOUNDS in report.sources

    def test_uncovered_gaps(self):
        assert not sigma_family_exact(FamilySpec(REGULAR_SUBTREE, 2, 2), 5, 2).applicable
        assert not sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 2), 3, 2).applicable
        assert not sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 3), 5, 2).applicable


class TestSandwich:
    def test_examples(self):
        assert sandwich_inequalities(5, 6, 2)
        assert not sandwich_inequalities(5, 8, 2)
        assert sandwich_inequalities(5, 6, 1)

    def test_depth2_formulas_respect_it(self):
        lam = lambda_family_exact(FamilySpec(COMPLETE_MARY, 2, 2), 2, 1).exact
        sig = sigma_family_exact(FamilySpec(COMPLETE_MARY, 2, 2), 2, 1).exact
        assert sandwich_inequalities(lam, sig, 2)


class TestApproximationGaps:
    def test_linear_ratio_bound_over_grid(self):
        for delta in range(2, 11):
            for delta2 in range(delta + 1, 2 * delta + 1):
                cap = 1 + Fraction(delta - 1, delta2 - 1)
                for p in range(1, 21):
                    for h in range(p, 21):
                        span = h + 2 * (delta - 1) * p
                        low = max((delta2 - 1) * p, h + (delta - 1) * p)
                        assert Fraction(span, low) <= cap

    def test_cyclic_ratio_bound_over_grid(self):
        # delta2 >= delta + 2 holds for every tree of diameter >= 3
        for delta in range(3, 11):
            cap = 1 + Fraction(2 * delta - 3, 2 * delta + 4)
            for delta2 in range(delta + 2, 2 * delta + 1):
                for h in range(1, 21):
                    span = max(h + 2 * delta - 1, 2 * h + delta - 1)
                    low = max(delta2, 2 * h + delta - 1)
                    ratio = Fraction(span, low)
                    assert ratio <= cap
                    if delta2 in (2 * delta - 1, 2 * delta):
                        assert ratio <= Fraction(7, 5)
