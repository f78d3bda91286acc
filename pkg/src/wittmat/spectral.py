"""The matrix isomorphism between rank-n Witt algebras and 2^n x 2^n matrices.

Spectral units E_{rc} := (prod ascending i in row: b_i) u_{1..n}
(prod descending j in col: a_j) multiply like matrix units,
E_{rc} E_{r'c'} = delta_{c r'} E_{r c'}; bit i of a row or column index
selects index i+1.  to_matrix/from_matrix convert along this basis; both
directions go through a change of basis that is computed once per monomial
and cached (the inverse direction uses the closed form
[m]_{rc} via m * E_{c0} = sum_r [m]_{rc} E_{r0}, which stays exact and avoids
a dense 4^n x 4^n inversion).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DimensionMismatch, DomainError, InputError
from .exact import ExactMatrix, GaussianRational
from .witt import Multivector, WittMonomial, one, reduce_word

__all__ = [
    "SpectralIndex",
    "spectral_unit",
    "spectral_table",
    "to_matrix",
    "from_matrix",
    "block_split",
    "block_assemble",
    "det2",
    "mv_inverse",
    "mv_trace",
]


@dataclass(frozen=True)
class SpectralIndex:
    n: int
    row: int
    col: int

    def __post_init__(self):
        size = 1 << self.n
        if not (0 <= self.row < size and 0 <= self.col < size):
            raise InputError(f"row/col out of range for rank {self.n}")

    def unit(self) -> Multivector:
        return spectral_unit(self.n, self.row, self.col)


def _bits(mask: int, n: int):
    return [i for i in range(1, n + 1) if mask >> (i - 1) & 1]


@lru_cache(maxsize=None)
def spectral_unit(n: int, row: int, col: int) -> Multivector:
    SpectralIndex(n, row, col)  # validate
    tokens = [(i, 1) for i in _bits(row, n)]
    for i in range(1, n + 1):
        tokens += [(i, 0), (i, 1)]
    tokens += [(j, 0) for j in reversed(_bits(col, n))]
    return reduce_word(n, tokens)


def spectral_table(n: int) -> list[list[Multivector]]:
    size = 1 << n
    return [[spectral_unit(n, r, c) for c in range(size)] for r in range(size)]


@lru_cache(maxsize=None)
def _column_units(n: int):
    """E_{r0} = b_row u_{1..n} reduce to single signed monomials; map them back to r."""
    full = (1 << n) - 1
    by_amask = {}
    signs = []
    for r in range(1 << n):
        unit = spectral_unit(n, r, 0)
        terms = unit.terms()
        assert len(terms) == 1, "column-zero unit must be a single monomial"
        mono, coeff = terms[0]
        assert mono.b_mask == full and coeff.im == 0 and abs(coeff.re) == 1
        sign = 1 if coeff.re > 0 else -1
        by_amask[mono.a_mask] = (r, sign)
        signs.append(sign)
    return by_amask, tuple(signs)


@lru_cache(maxsize=None)
def _mono_matrix_entries(n: int, a_mask: int, b_mask: int):
    """Matrix entries of a canonical monomial: tuple of (row, col, integer weight)."""
    from .witt import _mono_mul  # reuse the cached word kernel

    full = (1 << n) - 1
    by_amask, signs = _column_units(n)
    out = []
    for c in range(1 << n):
        cu = spectral_unit(n, c, 0)
        (cmono, ccoeff), = cu.terms()
        csign = 1 if ccoeff.re > 0 else -1
        for (am, bm), w in _mono_mul(n, a_mask, b_mask, cmono.a_mask, cmono.b_mask):
            assert bm == full, "product must stay in the column-zero slab"
            r, rsign = by_amask[am]
            out.append((r, c, w * csign * rsign))
    return tuple(out)


def to_matrix(g: Multivector) -> ExactMatrix:
    size = 1 << g.n
    grid = [[GaussianRational.ZERO] * size for _ in range(size)]
    for mono, coeff in g.terms():
        for r, c, w in _mono_matrix_entries(g.n, mono.a_mask, mono.b_mask):
            grid[r][c] = grid[r][c] + coeff * w
    return ExactMatrix(grid)


def from_matrix(M: ExactMatrix, n: int | None = None, complexified: bool | None = None) -> Multivector:
    if M.rows != M.cols:
        raise DimensionMismatch("matrix must be square")
    if n is None:
        n = M.rows.bit_length() - 1
    if M.rows != 1 << n:
        raise DimensionMismatch(f"matrix size {M.rows} is not 2^{n}")
    acc = Multivector(n, {}, complexified=True)
    for r in range(M.rows):
        for c in range(M.cols):
            x = M.cells[r][c]
            if x:
                acc = acc + spectral_unit(n, r, c).scale(x)
    if complexified is None:
        complexified = any(not x.is_real() for row in M.cells for x in row)
    return Multivector(n, dict(acc.terms()), complexified=complexified)


def mv_trace(g: Multivector) -> GaussianRational:
    """Trace of to_matrix(g), i.e. 2^n times the complex scalar part.

    The scalar part here is the grade-0 projection: a canonical monomial with
    a-set equal to b-set S is the idempotent product u_S with scalar part
    2^-|S|, and every other monomial projects to 0.
    """
    total = GaussianRational.ZERO
    for mono, coeff in g.terms():
        if mono.a_mask == mono.b_mask:
            total = total + coeff * (1 << (g.n - mono.a_mask.bit_count()))
    return total


def mv_inverse(g: Multivector) -> Multivector:
    """Multiplicative inverse computed through the matrix representation."""
    return from_matrix(to_matrix(g).inverse(), g.n, complexified=g.complexified)


def block_split(g: Multivector):
    """Split g into (h1, h2, h3, h4) with g = u1 h1 + a1 h2^- + b1 h3^- + u1^dag h4.

    The h_i live at rank n-1 with indices 2..n re-labeled to 1..n-1; the minus
    is the grade involution coming from pulling a_1/b_1 through the rest of
    each word.
    """
    if g.n == 0:
        raise DomainError("rank must be at least 1 to take blocks")
    n1 = g.n - 1
    slots = [{}, {}, {}, {}]

    def put(k, w, c):
        tot = slots[k].get(w, GaussianRational.ZERO) + c
        if tot.is_zero():
            slots[k].pop(w, None)
        else:
            slots[k][w] = tot

    for m, c in g.terms():
        w = WittMonomial(n1, m.a_mask >> 1, m.b_mask >> 1)
        sgn = -1 if w.degree % 2 else 1
        has_a, has_b = m.a_mask & 1, m.b_mask & 1
        if has_a and has_b:
            put(0, w, c)
        elif has_a:
            put(1, w, c * sgn)
        elif has_b:
            put(2, w, c * sgn)
        else:
            put(0, w, c)
            put(3, w, c)
    return tuple(Multivector(n1, s, complexified=g.complexified) for s in slots)


def block_assemble(h1: Multivector, h2: Multivector, h3: Multivector, h4: Multivector) -> Multivector:
    ranks = {h.n for h in (h1, h2, h3, h4)}
    if len(ranks) != 1:
        raise DimensionMismatch("blocks must share a rank")
    n = ranks.pop() + 1
    terms: dict[WittMonomial, GaussianRational] = {}

    def put(am, bm, c):
        key = WittMonomial(n, am, bm)
        tot = terms.get(key, GaussianRational.ZERO) + c
        if tot.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = tot

    for w, c in h1.terms():  # u1 h1
        put(w.a_mask << 1 | 1, w.b_mask << 1 | 1, c)
    for w, c in h2.terms():  # a1 h2^-
        sgn = -1 if w.degree % 2 else 1
        put(w.a_mask << 1 | 1, w.b_mask << 1, c * sgn)
    for w, c in h3.terms():  # b1 h3^-
        sgn = -1 if w.degree % 2 else 1
        put(w.a_mask << 1, w.b_mask << 1 | 1, c * sgn)
    for w, c in h4.terms():  # u1^dag h4 = (1 - u1) h4
        put(w.a_mask << 1, w.b_mask << 1, c)
        put(w.a_mask << 1 | 1, w.b_mask << 1 | 1, -c)
    comp = any(h.complexified for h in (h1, h2, h3, h4))
    return Multivector(n, terms, complexified=comp)


def det2(g: Multivector) -> GaussianRational:
    """Determinant of a rank-1 element: the scalar g g*, equal to g11 g22 - g12 g21."""
    if g.n != 1:
        raise DimensionMismatch("det2 is defined at rank 1")
    p = g * g.clifford_conj()
    assert p.is_scalar(), "g g* must reduce to a scalar at rank 1"
    return p.scalar_part()
