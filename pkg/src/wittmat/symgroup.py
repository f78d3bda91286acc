"""Symmetric groups acting inside G(n,n): permutation and standard images.

S_m for m = 2^n acts on the spectral basis by permutation matrices pulled back
through from_matrix.  The all-ones matrix A and Casimir C = A - 1 have exact
closed forms in the Witt generators, built by the doubling recursion

    A_{2^{k+1}} = A_{2^k} (1 + 2^k (a_{k+1} + b_{k+1}) w_1 w_2 .. w_k),

with w_j = a_j b_j - 1/2 and A_1 = 1.  Spectral surgery with the idempotents
of A produces g_c, and conjugation by g_c turns permutation images into
standard-representation images, which extend to S_{m+1} through the closed
form for the transposition (1, m+1).
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

from .errors import DomainError, InputError
from .exact import ExactMatrix, GaussianRational
from .spectral import from_matrix, mv_inverse, mv_trace
from .witt import Multivector, b, one, reduce_word, scalar_mv, u_all, u_all_dag, wedge_ab

__all__ = [
    "Permutation",
    "perm_matrix",
    "std_rep_matrix",
    "geom_perm",
    "all_ones_mv",
    "casimir_mv",
    "casimir_idempotents",
    "surgery_gc",
    "surgery_gc_inverse",
    "standard_irrep",
    "character",
]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A permutation of {1, .., m}, stored as the tuple of images of 1..m.

    Trailing fixed points are trimmed so equal permutations of different
    nominal degrees compare equal.  Multiplication composes right to left:
    (p * q)(x) = p(q(x)).
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        m = len(images)
        if sorted(images) != list(range(1, m + 1)):
            raise InputError(f"not a permutation of 1..{m}: {images}")
        while m > 0 and images[m - 1] == m:
            m -= 1
        object.__setattr__(self, "images", images[:m])

    @classmethod
    def identity(cls) -> "Permutation":
        return cls(())

    @classmethod
    def from_cycles(cls, spec) -> "Permutation":
        """Build from cycles: "(1 8)(2 3)", "(189)" (digits as letters), or [(1,8)]."""
        if isinstance(spec, str):
            body = spec.strip()
            if body and "(" not in body:
                body = f"({body})"
            if body and (_CYCLE_RE.sub("", body).strip() != ""):
                raise InputError(f"malformed cycle notation: {spec!r}")
            cycles = []
            for grp in _CYCLE_RE.findall(body):
                grp = grp.strip()
                if not grp:
                    continue
                if re.search(r"[ ,]", grp):
                    letters = [tok for tok in re.split(r"[ ,]+", grp) if tok]
                elif grp.isdigit():
                    letters = list(grp)  # paper style: (189) means 1,8,9
                else:
                    raise InputError(f"malformed cycle: ({grp})")
                try:
                    cycles.append(tuple(int(tok) for tok in letters))
                except ValueError:
                    raise InputError(f"malformed cycle: ({grp})") from None
        else:
            cycles = [tuple(int(x) for x in cyc) for cyc in spec]
        m = max((ltr for cyc in cycles for ltr in cyc), default=0)
        images = list(range(1, m + 1))
        for cyc in cycles:
            if any(ltr < 1 for ltr in cyc):
                raise InputError("cycle letters must be positive")
            if len(set(cyc)) != len(cyc):
                raise InputError(f"repeated letter in cycle {cyc}")
            for pos, ltr in enumerate(cyc):
                images[ltr - 1] = cyc[(pos + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, letter: int) -> int:
        if letter < 1:
            raise InputError("letters start at 1")
        return self.images[letter - 1] if letter <= len(self.images) else letter

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        m = max(self.degree, other.degree)
        return Permutation(self(other(x)) for x in range(1, m + 1))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(images)

    def __pow__(self, k: int) -> "Permutation":
        base = self.inverse() if k < 0 else self
        out = Permutation.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def order(self) -> int:
        k, acc = 1, self
        while acc.images:
            acc = acc * self
            k += 1
        return k

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_str(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({self.cycle_str()!r})"


def perm_matrix(p: Permutation, m: int | None = None) -> ExactMatrix:
    """The m x m matrix with column j equal to the unit vector at p(j)."""
    if m is None:
        m = max(p.degree, 1)
    if p.degree > m:
        raise DomainError(f"degree overflow: permutation moves letter {p.degree} > {m}")
    one_ = GaussianRational.ONE
    zero = GaussianRational.ZERO
    return ExactMatrix([[one_ if p(j) == i else zero for j in range(1, m + 1)]
                        for i in range(1, m + 1)])


def std_rep_matrix(p: Permutation, m: int) -> ExactMatrix:
    """The m x m quotient image of p in S_{m+1}: letter m+1 maps to the all -1 column."""
    if p.degree > m + 1:
        raise DomainError(f"degree overflow: permutation moves letter {p.degree} > {m + 1}")
    one_ = GaussianRational.ONE
    zero = GaussianRational.ZERO
    cols = []
    for j in range(1, m + 1):
        img = p(j)
        if img == m + 1:
            cols.append([-one_] * m)
        else:
            cols.append([one_ if i == img else zero for i in range(1, m + 1)])
    return ExactMatrix([[cols[j][i] for j in range(m)] for i in range(m)])


def geom_perm(p: Permutation, n: int, rep: str = "permutation") -> Multivector:
    """The multivector whose spectral matrix is the chosen matrix image of p."""
    m = 1 << n
    if rep in ("permutation", "perm"):
        return from_matrix(perm_matrix(p, m), n=n)
    if rep in ("standard", "std"):
        return from_matrix(std_rep_matrix(p, m), n=n)
    raise InputError(f"unknown representation {rep!r}")


@functools.lru_cache(maxsize=None)
def all_ones_mv(n: int) -> Multivector:
    """Closed form of the all-ones matrix, by the doubling recursion."""
    if n < 1:
        raise DomainError("rank must be at least 1")
    acc = one(n)
    wedge = one(n)
    for k in range(n):
        step = one(n) + (reduce_word(n, [(k + 1, 0)]) + reduce_word(n, [(k + 1, 1)])).scale(1 << k) * wedge
        acc = acc * step
        wedge = wedge * wedge_ab(n, k + 1)
    return acc


def casimir_mv(n: int) -> Multivector:
    return all_ones_mv(n) - one(n)


def casimir_idempotents(n: int) -> tuple[Multivector, Multivector]:
    """The pair s1 = (A - 2^n)/(-2^n), s2 = A/2^n with s^2 = s and s1 s2 = 0."""
    m = 1 << n
    a_mv = all_ones_mv(n)
    s1 = (a_mv - scalar_mv(n, m)).scale(Fraction(-1, m))
    s2 = a_mv.scale(Fraction(1, m))
    return s1, s2


@functools.lru_cache(maxsize=None)
def surgery_gc(n: int) -> Multivector:
    """g_c = s1 (1 - u^dag) + s2 u^dag, diagonalizing to (-1, .., -1, 2^n - 1)."""
    s1, s2 = casimir_idempotents(n)
    udag = u_all_dag(n)
    return s1 * (one(n) - udag) + s2 * udag


@functools.lru_cache(maxsize=None)
def surgery_gc_inverse(n: int) -> Multivector:
    return mv_inverse(surgery_gc(n))


def _one_k_transpositions(p: Permutation) -> list[int]:
    """Write p as a product of transpositions (1 k), returned as the list of k's."""
    out = []
    for cyc in p.cycles():
        pairs = [(cyc[0], cyc[pos]) for pos in range(len(cyc) - 1, 0, -1)]
        for x, y in pairs:
            if x == 1:
                out.append(y)
            elif y == 1:
                out.append(x)
            else:
                out.extend((x, y, x))
    return out


@functools.lru_cache(maxsize=None)
def _std_factor(n: int, k: int) -> Multivector:
    """Standard image of the transposition (1 k), k up to 2^n + 1."""
    m = 1 << n
    if k <= m:
        gc, gcinv = surgery_gc(n), surgery_gc_inverse(n)
        return gcinv * geom_perm(Permutation.from_cycles([(1, k)]), n) * gc
    # the extra letter: 1 - u - (1+b_1)..(1+b_n) u  with u = u_{1..n}
    u = u_all(n)
    prod = one(n)
    for i in range(1, n + 1):
        prod = prod * (one(n) + b(n, i))
    return one(n) - u - prod * u


def standard_irrep(p: Permutation, n: int) -> Multivector:
    """Image of p in the 2^n-dimensional standard representation of S_{2^n + 1}."""
    m = 1 << n
    if p.degree > m + 1:
        raise DomainError(f"degree overflow: permutation moves letter {p.degree} > {m + 1}")
    out = one(n)
    for k in _one_k_transpositions(p):
        out = out * _std_factor(n, k)
    return out


def character(g: Multivector) -> GaussianRational:
    """Trace of the spectral image, read off as 2^n times the projected scalar."""
    return mv_trace(g)
