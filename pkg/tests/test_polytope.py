import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gcq.errors import CapacityError, DomainError
from gcq.polytope import (
    DominantWeight,
    GCPattern,
    contains,
    contains_interior,
    count_dominant_weights,
    count_integral_points,
    dominant_weights,
    dual_weight,
    enumerate_integral_points,
    exact_point,
    weyl_dim,
)
from oracles import gc_points, weights_in_box, weyl_dimension

weights = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(-4, 4), min_size=n, max_size=n).map(lambda a: tuple(sorted(a, reverse=True)))
)


class TestDominantWeight:
    def test_rejects_increasing(self):
        with pytest.raises(DomainError):
            DominantWeight((0, 1))

    def test_rejects_non_integer(self):
        with pytest.raises(DomainError):
            DominantWeight((1.5, 0))

    def test_accepts_integral_fraction(self):
        assert DominantWeight((Fraction(2), 0)).alpha == (2, 0)


class TestContains:
    def test_closed(self):
        assert contains((1, 0), (0,))
        assert contains((1, 0), (1,))

    def test_outside(self):
        assert not contains((1, 0), (2,))

    def test_n1(self):
        assert contains((4,), ())

    def test_rational(self):
        assert contains((2, 1, 0), (Fraction(3, 2), Fraction(1, 2), Fraction(1)))
        assert not contains((2, 1, 0), (Fraction(3, 2), Fraction(1, 2), Fraction(2)))

    def test_tolerance(self):
        p = exact_point([1.0 + 1e-12])
        assert not contains((1, 0), p)
        assert contains((1, 0), p, tol=Fraction(1, 10**9))

    def test_rejects_float(self):
        with pytest.raises(DomainError):
            contains((1, 0), (0.5,))

    def test_length_mismatch(self):
        with pytest.raises(DomainError):
            contains((1, 0), (0, 0))

    def test_interior(self):
        assert contains_interior((2, 0), (1,))
        assert not contains_interior((2, 0), (2,))

    @pytest.mark.parametrize("q", range(-3, 4))
    def test_interior_unit_interval_has_no_integers(self, q):
        assert not contains_interior((1, 0), (q,))


class TestEnumeration:
    def test_1_0(self):
        pats = enumerate_integral_points((1, 0))
        assert [p.rows for p in pats] == [((1, 0), (0,)), ((1, 0), (1,))]

    def test_n1(self):
        pats = enumerate_integral_points((5,))
        assert len(pats) == 1 and pats[0].lower == ()

    def test_2_1_0(self):
        pats = enumerate_integral_points((2, 1, 0))
        assert len(pats) == 8
        assert sorted(p.lower for p in pats) == gc_points((2, 1, 0))

    @pytest.mark.parametrize("alpha", [(2, 1, 0), (3, 0, -1), (2, 2, 0, -1), (1, 1, 1), (3, 1, 0, -2)])
    @pytest.mark.parametrize("strict", [False, True])
    def test_matches_brute_force_in_order(self, alpha, strict):
        ours = [p.lower for p in enumerate_integral_points(alpha, strict=strict)]
        assert ours == gc_points(alpha, strict)  # oracle output is lexicographic

    def test_patterns_valid(self):
        for p in enumerate_integral_points((3, 1, 0, -1)):
            assert contains(p.alpha, p.lower)
            tri = p.rows
            all_strict = all(tri[j][k] > tri[j + 1][k] > tri[j][k + 1]
                             for j in range(p.n - 1) for k in range(p.n - 1 - j))
            assert contains_interior(p.alpha, p.lower) == all_strict

    def test_capacity(self):
        with pytest.raises(CapacityError):
            enumerate_integral_points((6, 3, 0, -3), cap=100)


class TestCounting:
    @pytest.mark.parametrize("alpha, expected", [((1, 0), 2), ((3, 3), 1), ((2, 1, 0), 8)])
    def test_examples(self, alpha, expected):
        assert count_integral_points(alpha) == expected

    def test_big_integer(self):
        alpha = (20, 15, 10, 5, 0, 0)
        assert count_integral_points(alpha) == weyl_dim(alpha) > 2**32

    @settings(max_examples=80, deadline=None)
    @given(alpha=weights)
    def test_enumerate_matches_count(self, alpha):
        assert len(enumerate_integral_points(alpha)) == count_integral_points(alpha)
        assert len(enumerate_integral_points(alpha, strict=True)) == count_integral_points(alpha, strict=True)

    @settings(max_examples=80, deadline=None)
    @given(alpha=weights)
    def test_dual_symmetry(self, alpha):
        assert count_integral_points(alpha) == count_integral_points(dual_weight(alpha))

    @settings(max_examples=80, deadline=None)
    @given(alpha=weights, c=st.integers(-5, 5))
    def test_translation(self, alpha, c):
        assert count_integral_points(tuple(a + c for a in alpha)) == count_integral_points(alpha)


class TestWeylDim:
    @pytest.mark.parametrize("alpha, expected", [((1, 0), 2), ((7,), 1), ((2, 1, 0), 8), ((1, 1, 0, 0), 6)])
    def test_examples(self, alpha, expected):
        assert weyl_dim(alpha) == expected

    def test_against_oracle(self):
        for alpha in weights_in_box(4, 3):
            assert weyl_dim(alpha) == weyl_dimension(alpha)


class TestDual:
    def test_examples(self):
        assert dual_weight((1, 0)).alpha == (0, -1)
        assert dual_weight((4, 4)).alpha == (-4, -4)

    @settings(max_examples=50, deadline=None)
    @given(alpha=weights)
    def test_involution(self, alpha):
        assert dual_weight(dual_weight(alpha)).alpha == alpha


class TestDominantWeights:
    @pytest.mark.parametrize("n, N", [(1, 2), (2, 1), (3, 2), (4, 1)])
    def test_lex_descending_and_complete(self, n, N):
        ws = [w.alpha for w in dominant_weights(n, N)]
        assert ws == sorted(weights_in_box(n, N), reverse=True)
        assert len(ws) == count_dominant_weights(n, N)

    def test_strict(self):
        ws = [w.alpha for w in dominant_weights(2, 1, strict=True)]
        assert ws == [(1, 0), (1, -1), (0, -1)]
        assert count_dominant_weights(2, 1, strict=True) == 3


class TestPatternJson:
    def test_round_trip(self):
        p = enumerate_integral_points((2, 1, 0))[3]
        doc = json.loads(p.to_json())
        assert doc["alpha"] == [2, 1, 0] and doc["rows"][0] == doc["alpha"]
        assert GCPattern.from_json(p.to_json()) == p

    def test_rejects_non_interlacing(self):
        with pytest.raises(DomainError):
            GCPattern(((1, 0), (2,)))
