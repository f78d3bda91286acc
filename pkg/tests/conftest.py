"""Shared builders for randomized test data.

Every randomized test seeds its own random.Random so failures reproduce;
helpers here only turn an rng into exact scalars, matrices, and multivectors.
"""

from fractions import Fraction
import random

from wittmat import ExactMatrix, GaussianRational, Multivector, WittMonomial


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 7) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_gauss(rng: random.Random) -> GaussianRational:
    return GaussianRational(rand_fraction(rng), rand_fraction(rng))


def rand_real_gauss(rng: random.Random) -> GaussianRational:
    return GaussianRational(rand_fraction(rng))


def rand_monomial(rng: random.Random, n: int) -> WittMonomial:
    return WittMonomial(n, rng.randrange(1 << n), rng.randrange(1 << n))


def rand_mv(rng: random.Random, n: int, complexified: bool = False, max_terms: int = 5) -> Multivector:
    """Random multivector with up to max_terms monomial terms."""
    draw = rand_gauss if complexified else rand_real_gauss
    terms: dict[WittMonomial, GaussianRational] = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = rand_monomial(rng, n)
        terms[mono] = terms.get(mono, GaussianRational.ZERO) + draw(rng)
    terms = {m: c for m, c in terms.items() if not c.is_zero()}
    return Multivector(n, terms, complexified=complexified)


def rand_matrix(rng: random.Random, rows: int, cols: int, complex_entries: bool = False) -> ExactMatrix:
    draw = rand_gauss if complex_entries else rand_real_gauss
    return ExactMatrix([[draw(rng) for _ in range(cols)] for _ in range(rows)])
