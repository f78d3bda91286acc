"""Clifford signature embeddings into the rank-n null-generator algebra."""

import random

import pytest

from wittmat import (
    DomainError,
    GaussianRational,
    GeneratorSet,
    SignatureSpec,
    f,
    f_extra,
    generators,
    one,
    pseudoscalar_candidate,
    verify_signature,
)

# every (p, q) with p + q = 2n + 1 that the embedding covers at low rank
FULL_ODD = [
    (1, 2, 1),
    (3, 0, 1),
    (2, 3, 2),
    (4, 1, 2),
    (0, 5, 2),
    (3, 4, 3),
    (5, 2, 3),
    (7, 0, 3),
    (1, 6, 3),
]


class TestEmbeddings:
    def test_full_odd_signatures_verify(self):
        for p, q, n in FULL_ODD:
            gs = generators(SignatureSpec(p, q, n))
            assert len(gs.plus) == p and len(gs.minus) == q
            report = verify_signature(gs)
            assert report.ok, (p, q, report.failures)

    def test_all_subsignatures_verify_rank2(self):
        n = 2
        for p in range(0, 2 * n + 2):
            for q in range(0, 2 * n + 2 - p):
                gs = generators(SignatureSpec(p, q, n))
                report = verify_signature(gs)
                assert report.ok, (p, q, report.failures)

    def test_labels_track_generators(self):
        gs = generators(SignatureSpec(5, 2, 3))
        assert gs.plus_labels == ("e1", "e2", "e3", "if1", "if2")
        assert gs.minus_labels == ("f3", "f4")

    def test_high_e_tail_flips_when_minus_overflows(self):
        gs = generators(SignatureSpec(1, 6, 3))
        assert gs.plus_labels == ("e1",)
        assert gs.minus_labels == ("ie2", "ie3", "f1", "f2", "f3", "f4")

    def test_too_large_signature_rejected(self):
        with pytest.raises(DomainError):
            SignatureSpec(4, 4, 3)
        with pytest.raises(DomainError):
            SignatureSpec(-1, 0, 1)


class TestExtraVector:
    def test_square_minus_one(self):
        for n in (1, 2, 3):
            fx = f_extra(n)
            assert fx * fx == -one(n)

    def test_anticommutes_with_base_vectors(self):
        for n in (1, 2, 3):
            fx = f_extra(n)
            gs = generators(SignatureSpec(n, n + 1, n))
            for g in gs.plus + gs.minus[:-1]:
                assert (fx * g + g * fx).is_zero()

    def test_pseudoscalar_candidate(self):
        for n in (1, 2, 3):
            pc = pseudoscalar_candidate(n)
            assert pc * pc == one(n)
            # attaching the formal i to the real 2n-volume gives the extra vector
            assert pc.complexify().scale(GaussianRational.I) == f_extra(n)


class TestVerifier:
    def test_reports_wrong_square(self):
        n = 1
        bad = GeneratorSet(n, plus=(f(n, 1),), minus=(), plus_labels=("f1",))
        report = verify_signature(bad)
        assert not report.ok
        assert any("square(f1)" in msg for msg in report.failures)

    def test_reports_commuting_pair(self):
        n = 2
        # e2 f1 squares to +1 but commutes with e1
        from wittmat import e

        bad = GeneratorSet(n, plus=(e(n, 1), e(n, 2) * f(n, 1)), minus=())
        report = verify_signature(bad)
        assert not report.ok
        assert any("does not anticommute" in msg for msg in report.failures)

    def test_even_flip_preserves_validity(self):
        # multiplying any two generators by i keeps squares/anticommutators valid
        rng = random.Random(150)
        i_unit = GaussianRational.I
        for p, q, n in FULL_ODD:
            gs = generators(SignatureSpec(p, q, n))
            gens = [(mv.complexify(), +1) for mv in gs.plus] + [
                (mv.complexify(), -1) for mv in gs.minus
            ]
            if len(gens) < 2:
                continue
            k1, k2 = rng.sample(range(len(gens)), 2)
            flipped_plus = []
            flipped_minus = []
            for pos, (mv, sign) in enumerate(gens):
                if pos in (k1, k2):
                    mv = mv.scale(i_unit)
                    sign = -sign
                if sign > 0:
                    flipped_plus.append(mv)
                else:
                    flipped_minus.append(mv)
            report = verify_signature(
                GeneratorSet(n, tuple(flipped_plus), tuple(flipped_minus))
            )
            assert report.ok, report.failures
