"""Spectral units, matrix representation, and block structure."""

import random

import pytest

from wittmat import (
    DimensionMismatch,
    DomainError,
    ExactMatrix,
    GaussianRational,
    InputError,
    SpectralIndex,
    a,
    b,
    block_assemble,
    block_split,
    det2,
    from_matrix,
    mv_inverse,
    mv_trace,
    one,
    spectral_table,
    spectral_unit,
    to_matrix,
    u,
    zero,
)
from conftest import rand_matrix, rand_mv


class TestSpectralUnits:
    def test_matrix_unit_law_exhaustive_low_rank(self):
        for n in (1, 2):
            size = 1 << n
            E = spectral_table(n)
            for r in range(size):
                for c in range(size):
                    for r2 in range(size):
                        for c2 in range(size):
                            prod = E[r][c] * E[r2][c2]
                            expect = E[r][c2] if c == r2 else zero(n)
                            assert prod == expect

    def test_matrix_unit_law_sampled_rank3(self):
        rng = random.Random(130)
        size = 8
        for _ in range(150):
            r, c, r2, c2 = (rng.randrange(size) for _ in range(4))
            prod = spectral_unit(3, r, c) * spectral_unit(3, r2, c2)
            expect = spectral_unit(3, r, c2) if c == r2 else zero(3)
            assert prod == expect

    def test_units_resolve_identity(self):
        for n in (1, 2, 3):
            total = zero(n)
            for r in range(1 << n):
                total = total + spectral_unit(n, r, r)
            assert total == one(n)

    def test_rank1_units_are_the_null_generators(self):
        assert spectral_unit(1, 0, 0) == u(1, 1)
        assert spectral_unit(1, 0, 1) == a(1, 1)
        assert spectral_unit(1, 1, 0) == b(1, 1)
        assert spectral_unit(1, 1, 1) == one(1) - u(1, 1)

    def test_index_validation(self):
        with pytest.raises(InputError):
            SpectralIndex(1, 2, 0)
        with pytest.raises(InputError):
            spectral_unit(2, 0, 4)


class TestMatrixRepresentation:
    def test_homomorphism_random(self):
        rng = random.Random(131)
        for n in (1, 2, 3):
            for _ in range(20):
                x, y = rand_mv(rng, n, complexified=True), rand_mv(rng, n, complexified=True)
                assert to_matrix(x * y) == to_matrix(x) * to_matrix(y)
                assert to_matrix(x + y) == to_matrix(x) + to_matrix(y)

    def test_round_trip_from_algebra(self):
        rng = random.Random(132)
        for n in (1, 2, 3):
            for _ in range(20):
                g = rand_mv(rng, n, complexified=True)
                assert from_matrix(to_matrix(g), n, complexified=True) == g

    def test_round_trip_from_matrices(self):
        rng = random.Random(133)
        for n in (1, 2):
            size = 1 << n
            for _ in range(20):
                m = rand_matrix(rng, size, size, complex_entries=True)
                assert to_matrix(from_matrix(m, n, complexified=True)) == m

    def test_identity_maps_to_identity(self):
        for n in (1, 2, 3):
            assert to_matrix(one(n)) == ExactMatrix.identity(1 << n)

    def test_trace(self):
        rng = random.Random(134)
        for n in (1, 2, 3):
            for _ in range(20):
                g = rand_mv(rng, n, complexified=True)
                assert mv_trace(g) == to_matrix(g).trace()

    def test_trace_of_scalar(self):
        assert mv_trace(one(3)) == GaussianRational(8)

    def test_inverse(self):
        rng = random.Random(135)
        for n in (1, 2):
            found = 0
            while found < 10:
                g = rand_mv(rng, n, max_terms=6)
                if to_matrix(g).rank() < (1 << n):
                    continue
                found += 1
                assert g * mv_inverse(g) == one(n)
                assert mv_inverse(g) * g == one(n)

    def test_inverse_of_nilpotent_fails(self):
        with pytest.raises(DomainError):
            mv_inverse(a(1, 1))

    def test_rank_mismatch(self):
        with pytest.raises(DimensionMismatch):
            from_matrix(ExactMatrix.identity(3), 1)


class TestInvolutionPatterns:
    def test_rank1_involution_entry_patterns(self):
        rng = random.Random(136)
        for _ in range(30):
            g = rand_mv(rng, 1, complexified=True)
            m = to_matrix(g)
            md = to_matrix(g.reverse())
            mi = to_matrix(g.grade_involution())
            mc = to_matrix(g.clifford_conj())
            # dagger: conjugated anti-transpose; conjugation: plain anti-transpose
            # with off-diagonal signs; grade involution: entrywise conjugate with
            # off-diagonal signs
            for i in range(2):
                for j in range(2):
                    assert md[(i, j)] == m[(1 - j, 1 - i)].conjugate()
                    sign = GaussianRational(1 if i == j else -1)
                    assert mi[(i, j)] == m[(i, j)].conjugate() * sign
                    assert mc[(i, j)] == m[(1 - j, 1 - i)] * sign

    def test_rank2_involution_entry_patterns(self):
        # signed anti-transpose patterns on the 4x4 representation
        eps_dag = (1, 1, -1, -1)
        eps_conj = (1, -1, 1, -1)
        rng = random.Random(137)
        for _ in range(30):
            g = rand_mv(rng, 2)
            m = to_matrix(g)
            md = to_matrix(g.reverse())
            mc = to_matrix(g.clifford_conj())
            for i in range(4):
                for j in range(4):
                    assert md[(i, j)] == m[(3 - j, 3 - i)] * GaussianRational(eps_dag[i] * eps_dag[j])
                    assert mc[(i, j)] == m[(3 - j, 3 - i)] * GaussianRational(eps_conj[i] * eps_conj[j])


class TestDet2:
    def test_closed_form(self):
        rng = random.Random(138)
        for _ in range(30):
            g = rand_mv(rng, 1, complexified=True)
            m = to_matrix(g)
            assert det2(g) == m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]

    def test_multiplicative(self):
        rng = random.Random(139)
        for _ in range(30):
            x, y = rand_mv(rng, 1), rand_mv(rng, 1)
            assert det2(x * y) == det2(x) * det2(y)

    def test_rank_restriction(self):
        with pytest.raises(DimensionMismatch):
            det2(one(2))


class TestBlocks:
    def test_split_examples(self):
        z = zero(0)
        assert block_split(u(1, 1)) == (one(0), z, z, z)
        assert block_split(a(1, 1)) == (z, one(0), z, z)
        assert block_split(b(1, 1)) == (z, z, one(0), z)
        assert block_split(u(2, 2)) == (u(1, 1), zero(1), zero(1), u(1, 1))

    def test_round_trip(self):
        rng = random.Random(140)
        for n in (1, 2, 3):
            for _ in range(25):
                g = rand_mv(rng, n, complexified=True)
                h1, h2, h3, h4 = block_split(g)
                assert all(h.n == n - 1 for h in (h1, h2, h3, h4))
                assert block_assemble(h1, h2, h3, h4) == g

    def test_assemble_then_split(self):
        rng = random.Random(141)
        for _ in range(25):
            hs = tuple(rand_mv(rng, 1) for _ in range(4))
            assert block_split(block_assemble(*hs)) == hs

    def test_errors(self):
        with pytest.raises(DomainError):
            block_split(one(0))
        with pytest.raises(DimensionMismatch):
            block_assemble(one(1), one(1), one(1), one(2))
