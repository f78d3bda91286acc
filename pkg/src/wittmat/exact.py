"""Exact scalar, matrix, and polynomial arithmetic over the Gaussian rationals.

Everything here is dense, deterministic, and float-free: scalars are pairs of
``fractions.Fraction``, matrices are tuples of tuples of scalars, and the only
polynomial factorisation offered is rational-root splitting.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DomainError, InputError

__all__ = [
    "GaussianRational",
    "ExactMatrix",
    "RationalPolynomial",
    "solve_linear",
    "min_poly",
    "eval_poly",
]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {x!r}") from exc
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


class GaussianRational:
    """A complex number re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            assert im == 0
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):  # immutable
        raise AttributeError("GaussianRational is immutable")

    # -- field operations -------------------------------------------------

    @staticmethod
    def _coerce(x) -> "GaussianRational | None":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise DomainError("division by zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- predicates, hashing ----------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- text form ---------------------------------------------------------
    # Canonical literals: "p/q" for rationals, "p/q+r/si" for complex values,
    # with zero parts omitted and "0" for zero.

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imag = f"{self.im}i"
        if self.re == 0:
            return imag
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self):
        return f"GaussianRational({self})"

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        s = text.strip().replace(" ", "")
        if not s:
            raise InputError("empty scalar literal")
        if not s.endswith("i"):
            return cls(_as_fraction(s))
        body = s[:-1]
        # split off a real part if one precedes the imaginary term
        cut = -1
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "+-/":
                cut = pos
                break
        if cut == -1:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im = Fraction(1)
        elif im_part == "-":
            im = Fraction(-1)
        else:
            im = _as_fraction(im_part)
        return cls(_as_fraction(re_part), im)


GaussianRational.ZERO = GaussianRational(0)
GaussianRational.ONE = GaussianRational(1)
GaussianRational.I = GaussianRational(0, 1)


def _as_scalar(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, str):
        return GaussianRational.parse(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a scalar")


class ExactMatrix:
    """Dense matrix of GaussianRational entries."""

    __slots__ = ("rows", "cols", "cells")

    def __init__(self, rows_of_entries: Iterable[Sequence]):
        cells = tuple(tuple(_as_scalar(x) for x in row) for row in rows_of_entries)
        if not cells or not cells[0]:
            raise InputError("matrix needs at least one row and column")
        width = len(cells[0])
        if any(len(r) != width for r in cells):
            raise InputError("ragged matrix rows")
        object.__setattr__(self, "rows", len(cells))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def column(cls, entries: Sequence) -> "ExactMatrix":
        return cls([[x] for x in entries])

    @classmethod
    def from_json(cls, data) -> "ExactMatrix":
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise InputError("matrix JSON must be an array of arrays")
        return cls(data)

    def to_json(self):
        return [[str(x) for x in row] for row in self.cells]

    # -- element access ----------------------------------------------------

    def __getitem__(self, rc) -> GaussianRational:
        r, c = rc
        return self.cells[r][c]

    def row(self, i: int):
        return self.cells[i]

    def col(self, j: int):
        return tuple(self.cells[i][j] for i in range(self.rows))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- ring operations ----------------------------------------------------

    def _check_same_shape(self, other: "ExactMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape ({self.rows},{self.cols}) vs ({other.rows},{other.cols})"
            )

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(
            [
                [self.cells[i][j] + other.cells[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_shape(other)
        return ExactMatrix(
            [
                [self.cells[i][j] - other.cells[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        c = _as_scalar(c)
        return ExactMatrix([[c * x for x in row] for row in self.cells])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply ({self.rows},{self.cols}) by ({other.rows},{other.cols})"
                )
            ocols = list(zip(*other.cells))
            return ExactMatrix(
                [
                    [
                        sum((a * b for a, b in zip(row, col)), GaussianRational.ZERO)
                        for col in ocols
                    ]
                    for row in self.cells
                ]
            )
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    __matmul__ = __mul__

    def __pow__(self, k: int):
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        out = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.cells)))

    def trace(self) -> GaussianRational:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.cells[i][i] for i in range(self.rows)), GaussianRational.ZERO)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def pretty(self) -> str:
        text = [[str(x) for x in row] for row in self.cells]
        widths = [max(len(text[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = [
            "[ " + "  ".join(t.rjust(w) for t, w in zip(row, widths)) + " ]"
            for row in text
        ]
        return "\n".join(lines)

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple["ExactMatrix", tuple[int, ...]]:
        """Reduced row echelon form with leftmost-pivot selection.

        Returns the reduced matrix and the pivot column indices.
        """
        m = [list(row) for row in self.cells]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            # first row at or below r with a nonzero entry in column c
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inverse()
            m[r] = [inv * x for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return ExactMatrix(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list["ExactMatrix"]:
        """Canonical kernel basis: each free column, in ascending order, set to 1."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [GaussianRational.ZERO] * self.cols
            v[free] = GaussianRational.ONE
            for prow, pcol in enumerate(pivots):
                v[pcol] = -red.cells[prow][free]
            basis.append(ExactMatrix.column(v))
        return basis

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = ExactMatrix(
            [list(self.cells[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        )
        red, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise DomainError("matrix is singular")
        return ExactMatrix([red.cells[i][n:] for i in range(n)])


def solve_linear(columns: Sequence[ExactMatrix], target: ExactMatrix):
    """Express `target` as a combination of the given column vectors.

    Returns the coefficient list, or None when the system is inconsistent.
    Assumes the columns are linearly independent (unique solution).
    """
    if not columns:
        return None if any(x for row in target.cells for x in row) else []
    height = columns[0].rows
    aug = ExactMatrix(
        [
            [col.cells[i][0] for col in columns] + [target.cells[i][0]]
            for i in range(height)
        ]
    )
    red, pivots = aug.rref()
    k = len(columns)
    if k in pivots:  # pivot in the augmented column: inconsistent
        return None
    assert pivots == tuple(range(k)), "solve_linear requires independent columns"
    sol = [GaussianRational.ZERO] * k
    for prow, pcol in enumerate(pivots):
        sol[pcol] = red.cells[prow][k]
    return sol


class RationalPolynomial:
    """Polynomial with GaussianRational coefficients, stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "RationalPolynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-_as_scalar(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial: -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "RationalPolynomial":
        inv = self.leading().inverse()
        return RationalPolynomial([inv * c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [GaussianRational.ZERO] * (n - len(self.coeffs))
        b = list(other.coeffs) + [GaussianRational.ZERO] * (n - len(other.coeffs))
        return RationalPolynomial([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self + RationalPolynomial([-c for c in other.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _as_scalar(other)
            return RationalPolynomial([c * x for x in self.coeffs])
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalPolynomial([])
        out = [GaussianRational.ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __divmod__(self, other: "RationalPolynomial"):
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [GaussianRational.ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead_inv = other.leading().inverse()
        for k in range(len(rem) - len(other.coeffs), -1, -1):
            f = rem[k + other.degree] * lead_inv
            q[k] = f
            for j, c in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - f * c
        return RationalPolynomial(q), RationalPolynomial(rem)

    def evaluate(self, x) -> GaussianRational:
        x = _as_scalar(x)
        acc = GaussianRational.ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def factor_rational_roots(self):
        """Split off rational roots; returns (roots with multiplicity, remainder).

        Only applies to polynomials with purely rational coefficients;
        whatever does not split stays in the (possibly irreducible) remainder.
        """
        if self.is_zero() or any(not c.is_real() for c in self.coeffs):
            return [], self
        roots = []
        poly = self
        while poly.degree >= 1:
            root = poly._find_rational_root()
            if root is None:
                break
            roots.append(root)
            poly, rem = divmod(poly, RationalPolynomial([-root, 1]))
            assert rem.is_zero()
        return roots, poly

    def _find_rational_root(self):
        from math import gcd

        denoms = [c.re.denominator for c in self.coeffs]
        scale = 1
        for d in denoms:
            scale = scale * d // gcd(scale, d)
        ints = [int(c.re * scale) for c in self.coeffs]
        if ints[0] == 0:
            return Fraction(0)
        lead = abs(ints[-1])
        const = abs(ints[0])
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if self.evaluate(cand).is_zero():
                        return cand
        return None

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            if k == 0:
                body = str(c)
            else:
                xs = "x" if k == 1 else f"x^{k}"
                if c == 1:
                    body = xs
                elif c == -1:
                    body = f"-{xs}"
                elif c.is_real():
                    body = f"{c}{xs}"
                else:
                    body = f"({c}){xs}"
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(f"- {body[1:]}")
            else:
                parts.append(f"+ {body}")
        return " ".join(parts)

    def factored_str(self) -> str:
        roots, rest = self.factor_rational_roots()
        if not roots:
            return str(self)
        pieces = []
        for r in sorted(set(roots)):
            mult = roots.count(r)
            if r == 0:
                base = "x"
            elif r > 0:
                base = f"(x - {r})"
            else:
                base = f"(x + {-r})"
            pieces.append(base if mult == 1 else f"{base}^{mult}")
        lead = ""
        if rest.degree == 0 and rest.coeffs[0] != 1:
            lead = f"{rest.coeffs[0]} "
        elif rest.degree > 0:
            pieces.append(f"({rest})")
        return lead + "".join(pieces)

    def __repr__(self):
        return f"RationalPolynomial({self})"


def _divisors(n: int):
    n = abs(n)
    assert n > 0
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def eval_poly(p: RationalPolynomial, A: ExactMatrix) -> ExactMatrix:
    """Evaluate p at a square matrix (Horner form, scalar term times identity)."""
    if not A.is_square:
        raise DimensionMismatch("polynomial of a non-square matrix")
    eye = ExactMatrix.identity(A.rows)
    acc = ExactMatrix.zeros(A.rows)
    for c in reversed(p.coeffs):
        acc = acc * A + eye.scale(c)
    return acc


def min_poly(A: ExactMatrix) -> RationalPolynomial:
    """Monic minimal polynomial via the first linear dependence among I, A, A^2, ..."""
    if not A.is_square:
        raise DimensionMismatch("minimal polynomial of a non-square matrix")
    flat = lambda M: ExactMatrix.column([x for row in M.cells for x in row])
    powers = []
    current = ExactMatrix.identity(A.rows)
    while True:
        target = flat(current)
        combo = solve_linear(powers, target)
        if combo is not None:
            return RationalPolynomial([-c for c in combo] + [1])
        powers.append(target)
        current = current * A
