import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcq.errors import DomainError
from gcq.linalg import (
    HermitianMatrix,
    UnitaryMatrix,
    coadjoint,
    corner,
    eigenvalues_desc,
    haar_unitary,
    matrix_from_json,
    matrix_to_json,
    random_hermitian,
    sweep,
)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestConstruction:
    def test_symmetrizes(self):
        x = HermitianMatrix([[1, 2 + 1e-13j], [2, 3]])
        assert x.entries[0, 1] == np.conj(x.entries[1, 0])
        assert np.all(x.entries.diagonal().imag == 0)

    def test_rejects_non_hermitian(self):
        with pytest.raises(DomainError):
            HermitianMatrix([[1, 2], [3, 4]])

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            HermitianMatrix([[np.nan]])

    def test_read_only(self):
        x = HermitianMatrix.diag([1, 2])
        with pytest.raises(ValueError):
            x.entries[0, 0] = 5

    def test_unitary_validation(self):
        with pytest.raises(DomainError):
            UnitaryMatrix([[1, 0], [0, 2]])


class TestCorner:
    def test_identity_at_zero(self):
        x = HermitianMatrix.diag([3, 2, 1])
        assert corner(x, 0) == x

    def test_diagonal(self):
        assert corner(HermitianMatrix.diag([3, 2, 1]), 1) == HermitianMatrix.diag([2, 1])

    def test_block_is_bit_equal(self):
        x = random_hermitian(4, 11)
        c = corner(x, 2)
        assert c.n == 2
        assert np.array_equal(c.entries, x.entries[2:4, 2:4])

    @pytest.mark.parametrize("j", [-1, 3])
    def test_out_of_range(self, j):
        with pytest.raises(DomainError):
            corner(HermitianMatrix.diag([1, 2, 3]), j)


class TestEigenvalues:
    def test_diagonal(self):
        assert eigenvalues_desc(HermitianMatrix.diag([1, 4, 2])) == (4.0, 2.0, 1.0)

    def test_pauli_x(self):
        # characteristic polynomial t^2 - 1
        assert eigenvalues_desc(HermitianMatrix([[0, 1], [1, 0]])) == (1.0, -1.0)

    def test_complex_2x2_closed_form(self):
        # [[a, z], [z*, d]]: (a+d)/2 +- sqrt(((a-d)/2)^2 + |z|^2)
        x = HermitianMatrix([[1, 3 + 4j], [3 - 4j, 1]])
        assert eigenvalues_desc(x) == pytest.approx((6.0, -4.0), abs=1e-14)

    def test_conjugated_diagonal(self):
        u = haar_unitary(3, 5)
        x = coadjoint(u, HermitianMatrix.diag([5, 0, -3]))
        assert eigenvalues_desc(x) == pytest.approx((5, 0, -3), abs=1e-9)

    def test_zero_matrix(self):
        assert eigenvalues_desc(HermitianMatrix(np.zeros((4, 4)))) == (0.0,) * 4

    def test_jacobi_against_numpy(self):
        for n in (3, 5, 9, 16):
            x = random_hermitian(n, n)
            ref = np.sort(np.linalg.eigvalsh(x.entries))[::-1]
            assert np.allclose(eigenvalues_desc(x), ref, atol=1e-10 * x.norm())

    def test_degenerate_spectrum(self):
        u = haar_unitary(5, 2)
        x = coadjoint(u, HermitianMatrix.diag([2, 2, 2, -1, -1]))
        assert eigenvalues_desc(x) == pytest.approx((2, 2, 2, -1, -1), abs=1e-10)

    @settings(max_examples=60, deadline=None)
    @given(n=st.integers(1, 6), seed=seeds)
    def test_negation_reverses(self, n, seed):
        x = random_hermitian(n, seed)
        pos = np.array(eigenvalues_desc(x))
        neg = np.array(eigenvalues_desc(-x))
        assert np.allclose(neg, -pos[::-1], atol=1e-10 * max(1, x.norm()))

    @settings(max_examples=60, deadline=None)
    @given(n=st.integers(1, 6), seed=seeds)
    def test_trace(self, n, seed):
        x = random_hermitian(n, seed, scale=3.0)
        assert abs(sum(eigenvalues_desc(x)) - x.trace()) <= 1e-9 * max(1, x.norm())

    def test_cauchy_interlacing(self):
        rng = np.random.default_rng(1234)
        for _ in range(1000):
            n = int(rng.integers(2, 7))
            x = random_hermitian(n, rng)
            for j in range(n - 1):
                big = eigenvalues_desc(corner(x, j))
                small = eigenvalues_desc(corner(x, j + 1))
                for k, s in enumerate(small):
                    assert big[k] + 1e-8 >= s >= big[k + 1] - 1e-8


class TestSweep:
    def test_sorts(self):
        assert sweep(HermitianMatrix.diag([1, 3])) == HermitianMatrix.diag([3, 1])

    def test_2x2(self):
        s = sweep(HermitianMatrix([[2, 1], [1, 2]]))
        assert np.allclose(s.entries, np.diag([3, 1]), atol=1e-15)

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(1, 6), seed=seeds)
    def test_idempotent(self, n, seed):
        s = sweep(random_hermitian(n, seed))
        assert np.allclose(sweep(s).entries, s.entries, atol=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(1, 6), seed=seeds)
    def test_orbit_invariant(self, n, seed):
        x = random_hermitian(n, seed)
        g = haar_unitary(n, seed + 1)
        assert np.allclose(sweep(coadjoint(g, x)).entries, sweep(x).entries, atol=1e-9)


class TestCoadjoint:
    def test_identity(self):
        x = random_hermitian(3, 0)
        assert np.allclose(coadjoint(UnitaryMatrix.identity(3), x).entries, x.entries, atol=1e-15)

    def test_permutation(self):
        p = UnitaryMatrix([[0, 1], [1, 0]])
        assert coadjoint(p, HermitianMatrix.diag([7, -2])) == HermitianMatrix.diag([-2, 7])

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            coadjoint(UnitaryMatrix.identity(2), HermitianMatrix.diag([1, 2, 3]))

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(1, 6), seed=seeds)
    def test_spectrum_invariant(self, n, seed):
        x = random_hermitian(n, seed)
        y = coadjoint(haar_unitary(n, seed ^ 0x5A5A), x)
        assert np.allclose(eigenvalues_desc(y), eigenvalues_desc(x), atol=1e-9)


class TestHaar:
    @pytest.mark.parametrize("seed", [0, 1, 99])
    def test_scalar_unit_modulus(self, seed):
        u = haar_unitary(1, seed)
        assert abs(abs(u.entries[0, 0]) - 1) <= 1e-12

    def test_deterministic(self):
        assert np.array_equal(haar_unitary(3, 42).entries, haar_unitary(3, 42).entries)

    def test_second_moment(self):
        # E|U_ij|^2 = 1/n under Haar measure
        rng = np.random.default_rng(7)
        acc = np.zeros((2, 2))
        for _ in range(10_000):
            acc += np.abs(haar_unitary(2, rng).entries) ** 2
        assert np.all(np.abs(acc / 10_000 - 0.5) <= 0.02)

    def test_fourth_moment(self):
        # E|U_11|^4 = 2 / (n (n + 1)); catches the unphased QR bias
        rng = np.random.default_rng(8)
        m4 = np.mean([abs(haar_unitary(3, rng).entries[0, 0]) ** 4 for _ in range(20_000)])
        assert m4 == pytest.approx(2 / 12, abs=0.01)

    def test_phase_uniform(self):
        # Haar U_11 has uniformly distributed phase: E[U_11] = 0
        rng = np.random.default_rng(9)
        m = np.mean([haar_unitary(2, rng).entries[0, 0] for _ in range(10_000)])
        assert abs(m) < 0.03


class TestJson:
    def test_round_trip(self):
        x = random_hermitian(3, 4)
        y = matrix_from_json(matrix_to_json(x))
        assert np.array_equal(x.entries, y.entries)

    @pytest.mark.parametrize("text", [
        '{"n": 1, "entries": [[[NaN, 0]]]}',
        '{"n": 1, "entries": [[[Infinity, 0]]]}',
        '{"n": 2, "entries": [[[1, 0]]]}',
        '{"entries": []}',
        '{"n": 1, "entries": [[[1]]]}',
        'not json',
    ])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            matrix_from_json(text)

    def test_schema(self):
        doc = json.loads(matrix_to_json(HermitianMatrix([[1, 1j], [-1j, 2]])))
        assert doc == {"n": 2, "entries": [[[1.0, 0.0], [0.0, 1.0]], [[0.0, -1.0], [2.0, 0.0]]]}
