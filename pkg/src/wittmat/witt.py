"""Null-vector (Witt basis) geometric algebra with exact coefficients.

Rank n means generators a_1..a_n, b_1..b_n subject to

    a_i^2 = b_i^2 = 0,        a_i b_i + b_i a_i = 1,
    distinct-index generators anticommute.

A canonical monomial visits indices in ascending order, emitting a_i before
b_i when both occur; it is encoded by the bitmask pair (a_mask, b_mask).
The only non-canonical same-index adjacency is b_i a_i, which rewrites to
1 - a_i b_i and makes products branch into sums.

Complexified elements carry GaussianRational coefficients whose imaginary
unit behaves as a formal central scalar of odd grade 2n+1: reversal fixes it
for even n and conjugates it for odd n, and the grade involution always
conjugates it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import DimensionMismatch, InputError
from .exact import GaussianRational

__all__ = [
    "WittMonomial",
    "BladeMonomial",
    "Multivector",
    "reduce_word",
    "a",
    "b",
    "e",
    "f",
    "u",
    "u_dag",
    "u_all",
    "u_all_dag",
    "one",
    "zero",
    "scalar_mv",
    "wedge_ab",
    "to_blade_basis",
    "from_blade_basis",
]


def _mask_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class WittMonomial(NamedTuple):
    n: int
    a_mask: int
    b_mask: int

    @property
    def degree(self) -> int:
        return bin(self.a_mask).count("1") + bin(self.b_mask).count("1")

    def word(self) -> tuple[tuple[int, int], ...]:
        """Canonical word as (index, kind) tokens, kind 0 for a and 1 for b."""
        toks = []
        for i in range(1, self.n + 1):
            bit = 1 << (i - 1)
            if self.a_mask & bit:
                toks.append((i, 0))
            if self.b_mask & bit:
                toks.append((i, 1))
        return tuple(toks)

    def sort_key(self) -> tuple[int, int]:
        return (self.a_mask, self.b_mask)

    def pretty(self) -> str:
        """Render the canonical word with same-letter runs grouped: a1b12, b1a2."""
        if not self.a_mask and not self.b_mask:
            return "1"
        parts = []
        for idx, kind in self.word():
            letter = "ab"[kind]
            if parts and parts[-1][0] == letter:
                parts[-1] = (letter, parts[-1][1] + str(idx))
            else:
                parts.append((letter, str(idx)))
        return "".join(letter + digits for letter, digits in parts)


class BladeMonomial(NamedTuple):
    n: int
    e_mask: int
    f_mask: int

    @property
    def grade(self) -> int:
        return bin(self.e_mask).count("1") + bin(self.f_mask).count("1")

    def pretty(self) -> str:
        if not self.e_mask and not self.f_mask:
            return "1"
        out = ""
        if self.e_mask:
            out += "e" + "".join(str(i) for i in _mask_indices(self.e_mask))
        if self.f_mask:
            out += "f" + "".join(str(i) for i in _mask_indices(self.f_mask))
        return out


# ---------------------------------------------------------------------------
# rewriting kernel


def _reduce_tokens(tokens: tuple[tuple[int, int], ...]) -> dict[tuple[int, int], int]:
    """Rewrite an arbitrary word into canonical monomials with integer weights."""
    out: dict[tuple[int, int], int] = {}
    stack = [(list(tokens), 1)]
    while stack:
        word, sign = stack.pop()
        i = 0
        while i + 1 < len(word):
            t1, t2 = word[i], word[i + 1]
            if t1 == t2:  # N1: null square kills the branch
                sign = 0
                break
            if t1[0] == t2[0]:
                if t1[1] == 1:  # b_i a_i -> 1 - a_i b_i
                    stack.append((word[:i] + word[i + 2 :], sign))
                    word[i], word[i + 1] = t2, t1
                    sign = -sign
                    i = max(i - 1, 0)
                    continue
                i += 1  # a_i b_i is canonical
                continue
            if t1[0] > t2[0]:  # N2 distinct indices: anticommute
                word[i], word[i + 1] = t2, t1
                sign = -sign
                i = max(i - 1, 0)
                continue
            i += 1
        if sign:
            a_mask = b_mask = 0
            for idx, kind in word:
                if kind:
                    b_mask |= 1 << (idx - 1)
                else:
                    a_mask |= 1 << (idx - 1)
            key = (a_mask, b_mask)
            tot = out.get(key, 0) + sign
            if tot:
                out[key] = tot
            else:
                del out[key]
    return out


@lru_cache(maxsize=None)
def _mono_mul(n, a1, b1, a2, b2) -> tuple[tuple[tuple[int, int], int], ...]:
    w1 = WittMonomial(n, a1, b1).word()
    w2 = WittMonomial(n, a2, b2).word()
    return tuple(sorted(_reduce_tokens(w1 + w2).items()))


@lru_cache(maxsize=None)
def _mono_reverse(n, a_mask, b_mask) -> tuple[tuple[tuple[int, int], int], ...]:
    word = WittMonomial(n, a_mask, b_mask).word()
    return tuple(sorted(_reduce_tokens(word[::-1]).items()))


def _as_coeff(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, str):
        return GaussianRational.parse(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a coefficient")


class Multivector:
    """Finite GaussianRational combination of canonical monomials at a fixed rank."""

    __slots__ = ("n", "complexified", "_terms")

    def __init__(self, n: int, terms=None, complexified: bool = False):
        if n < 0:
            raise InputError("rank must be nonnegative")
        clean: dict[WittMonomial, GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, WittMonomial):
                mono = WittMonomial(*mono)
            if mono.n != n:
                raise DimensionMismatch(f"monomial rank {mono.n} inside rank-{n} element")
            if mono.a_mask >> n or mono.b_mask >> n:
                raise InputError(f"monomial index out of range for rank {n}")
            c = _as_coeff(coeff)
            if c.is_zero():
                continue
            if not complexified and not c.is_real():
                raise InputError("imaginary coefficient in a non-complexified element")
            clean[mono] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "complexified", bool(complexified))
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- inspection ---------------------------------------------------------

    def terms(self):
        """Term pairs sorted by (a_mask, b_mask)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coeff(self, mono: WittMonomial) -> GaussianRational:
        return self._terms.get(mono, GaussianRational.ZERO)

    def scalar_part(self) -> GaussianRational:
        return self.coeff(WittMonomial(self.n, 0, 0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(m.a_mask == 0 and m.b_mask == 0 for m in self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = scalar_mv(self.n, other, complexified=self.complexified)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    # -- linear structure -----------------------------------------------------

    def _check_rank(self, other: "Multivector"):
        if self.n != other.n:
            raise DimensionMismatch(f"rank {self.n} vs rank {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = scalar_mv(self.n, other, complexified=True)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_rank(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            tot = terms.get(m, GaussianRational.ZERO) + c
            if tot.is_zero():
                terms.pop(m, None)
            else:
                terms[m] = tot
        return self._make(self.n, terms, self.complexified or other.complexified)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, Multivector) else -_as_coeff(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Multivector":
        c = _as_coeff(c)
        comp = self.complexified or not c.is_real()
        if c.is_zero():
            return self._make(self.n, {}, comp)
        return self._make(self.n, {m: c * v for m, v in self._terms.items()}, comp)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_rank(other)
        n = self.n
        acc: dict[WittMonomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                c = c1 * c2
                for (am, bm), w in _mono_mul(n, m1.a_mask, m1.b_mask, m2.a_mask, m2.b_mask):
                    key = WittMonomial(n, am, bm)
                    tot = acc.get(key, GaussianRational.ZERO) + c * w
                    if tot.is_zero():
                        acc.pop(key, None)
                    else:
                        acc[key] = tot
        return self._make(n, acc, self.complexified or other.complexified)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative multivector powers need an explicit inverse")
        out = one(self.n) if not self.complexified else one(self.n).complexify()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @classmethod
    def _make(cls, n, terms, complexified) -> "Multivector":
        mv = object.__new__(cls)
        object.__setattr__(mv, "n", n)
        object.__setattr__(mv, "complexified", complexified)
        object.__setattr__(mv, "_terms", terms)
        return mv

    def complexify(self) -> "Multivector":
        return self._make(self.n, dict(self._terms), True)

    # -- involutions ------------------------------------------------------------
    # The formal imaginary unit has grade 2n+1, so reversal conjugates it for
    # odd n only, while the grade involution always conjugates it.

    def reverse(self) -> "Multivector":
        conj = self.n % 2 == 1
        acc: dict[WittMonomial, GaussianRational] = {}
        for m, c in self._terms.items():
            if conj:
                c = c.conjugate()
            for (am, bm), w in _mono_reverse(self.n, m.a_mask, m.b_mask):
                key = WittMonomial(self.n, am, bm)
                tot = acc.get(key, GaussianRational.ZERO) + c * w
                if tot.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = tot
        return self._make(self.n, acc, self.complexified)

    def grade_involution(self) -> "Multivector":
        acc = {}
        for m, c in self._terms.items():
            c = c.conjugate()
            acc[m] = -c if m.degree % 2 else c
        return self._make(self.n, acc, self.complexified)

    def clifford_conj(self) -> "Multivector":
        return self.grade_involution().reverse()

    # -- blade view ---------------------------------------------------------------

    def to_blades(self) -> dict[BladeMonomial, GaussianRational]:
        acc: dict[BladeMonomial, GaussianRational] = {}
        for m, c in self._terms.items():
            for (em, fm), w in _mono_to_blades(self.n, m.a_mask, m.b_mask):
                key = BladeMonomial(self.n, em, fm)
                tot = acc.get(key, GaussianRational.ZERO) + c * w
                if tot.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = tot
        return acc

    def grade_project(self, k: int) -> "Multivector":
        kept = {bl: c for bl, c in self.to_blades().items() if bl.grade == k}
        return from_blade_basis(self.n, kept, complexified=self.complexified)

    def grades(self) -> tuple[int, ...]:
        return tuple(sorted({bl.grade for bl in self.to_blades()}))

    # -- text and JSON ----------------------------------------------------------

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for m, c in self.terms():
            name = m.pretty()
            if name == "1":
                body = str(c)
            elif c == 1:
                body = name
            elif c == -1:
                body = f"-{name}"
            elif c.is_real():
                body = f"{c} {name}"
            else:
                body = f"({c}) {name}"
            if not parts:
                parts.append(body)
            elif body.startswith("-"):
                parts.append(f"- {body[1:]}")
            else:
                parts.append(f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Multivector[{self.n}]({self.pretty()})"

    def to_json(self):
        return {
            "n": self.n,
            "complex": self.complexified,
            "terms": [
                {
                    "a": list(_mask_indices(m.a_mask)),
                    "b": list(_mask_indices(m.b_mask)),
                    "coeff": str(c),
                }
                for m, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, data) -> "Multivector":
        try:
            n = data["n"]
            complexified = bool(data.get("complex", False))
            raw = data["terms"]
        except (TypeError, KeyError) as exc:
            raise InputError(f"multivector JSON missing field: {exc}") from exc
        if not isinstance(n, int) or n < 0:
            raise InputError("multivector JSON has a bad rank")
        terms: dict[WittMonomial, GaussianRational] = {}
        for entry in raw:
            try:
                a_idx = entry.get("a", [])
                b_idx = entry.get("b", [])
                coeff = GaussianRational.parse(entry["coeff"])
            except (TypeError, KeyError, AttributeError) as exc:
                raise InputError(f"bad term entry {entry!r}") from exc
            am = bm = 0
            for i in a_idx:
                if not isinstance(i, int) or not 1 <= i <= n:
                    raise InputError(f"index {i!r} out of range for rank {n}")
                am |= 1 << (i - 1)
            for i in b_idx:
                if not isinstance(i, int) or not 1 <= i <= n:
                    raise InputError(f"index {i!r} out of range for rank {n}")
                bm |= 1 << (i - 1)
            key = WittMonomial(n, am, bm)
            terms[key] = terms.get(key, GaussianRational.ZERO) + coeff
        return cls(n, terms, complexified=complexified)


# ---------------------------------------------------------------------------
# constructors


def zero(n: int) -> Multivector:
    return Multivector(n, {})


def one(n: int) -> Multivector:
    return Multivector(n, {WittMonomial(n, 0, 0): GaussianRational.ONE})


def scalar_mv(n: int, c, complexified: bool | None = None) -> Multivector:
    c = _as_coeff(c)
    if complexified is None:
        complexified = not c.is_real()
    return Multivector(n, {WittMonomial(n, 0, 0): c}, complexified=complexified)


def _check_index(n: int, i: int):
    if not 1 <= i <= n:
        raise InputError(f"generator index {i} out of range for rank {n}")


def a(n: int, i: int) -> Multivector:
    _check_index(n, i)
    return Multivector(n, {WittMonomial(n, 1 << (i - 1), 0): 1})


def b(n: int, i: int) -> Multivector:
    _check_index(n, i)
    return Multivector(n, {WittMonomial(n, 0, 1 << (i - 1)): 1})


def e(n: int, i: int) -> Multivector:
    """Unit-square vector e_i = a_i + b_i."""
    return a(n, i) + b(n, i)


def f(n: int, i: int) -> Multivector:
    """Negative-square vector f_i = a_i - b_i."""
    return a(n, i) - b(n, i)


def u(n: int, i: int) -> Multivector:
    """Idempotent u_i = a_i b_i."""
    _check_index(n, i)
    bit = 1 << (i - 1)
    return Multivector(n, {WittMonomial(n, bit, bit): 1})


def u_dag(n: int, i: int) -> Multivector:
    """Complementary idempotent u_i^dagger = b_i a_i = 1 - a_i b_i."""
    return one(n) - u(n, i)


def u_all(n: int) -> Multivector:
    """Primitive idempotent u_1 u_2 ... u_n."""
    full = (1 << n) - 1
    return Multivector(n, {WittMonomial(n, full, full): 1})


def u_all_dag(n: int) -> Multivector:
    out = one(n)
    for i in range(1, n + 1):
        out = out * u_dag(n, i)
    return out


def wedge_ab(n: int, i: int) -> Multivector:
    """The commutator blade a_i ^ b_i = a_i b_i - 1/2."""
    return u(n, i) - scalar_mv(n, Fraction(1, 2))


_TOKEN_KINDS = {"a": 0, "b": 1}


def _parse_token(tok):
    if isinstance(tok, tuple) and len(tok) == 2:
        idx, kind = tok
        if kind in _TOKEN_KINDS:
            kind = _TOKEN_KINDS[kind]
        return int(idx), int(kind), 1
    if isinstance(tok, str):
        s = tok.strip()
        sign = 1
        if s.startswith("-"):
            sign = -1
            s = s[1:]
        elif s.startswith("+"):
            s = s[1:]
        if len(s) >= 2 and s[0] in _TOKEN_KINDS and s[1:].isdigit():
            return int(s[1:]), _TOKEN_KINDS[s[0]], sign
    raise InputError(f"bad generator token {tok!r}")


def reduce_word(n: int, word: Iterable, coeff=1, complexified: bool = False) -> Multivector:
    """Rewrite a product of signed generators into canonical form.

    Tokens may be strings like "a1", "-b2" or pairs (index, kind) with kind
    "a"/"b" or 0/1.
    """
    tokens = []
    total_sign = 1
    for tok in word:
        idx, kind, sign = _parse_token(tok)
        _check_index(n, idx)
        total_sign *= sign
        tokens.append((idx, kind))
    c = _as_coeff(coeff) * total_sign
    reduced = _reduce_tokens(tuple(tokens))
    terms = {WittMonomial(n, am, bm): c * w for (am, bm), w in reduced.items()}
    return Multivector(n, terms, complexified=complexified or not c.is_real())


# ---------------------------------------------------------------------------
# blade basis conversion: e_i = a_i + b_i, f_i = a_i - b_i with e_i^2 = 1,
# f_i^2 = -1, all generators anticommuting; blade order is e's ascending then
# f's ascending.


def _blade_times_gen(e_mask: int, f_mask: int, pos: int, square: int):
    """Right-multiply a basis blade by the generator at slot `pos`.

    Slots 0..31 are e_1..e_32, slots 32..63 are f_1..f_32, so the slot order
    matches the canonical blade order (e's first, then f's); `square` is the
    generator's square (+1 or -1). Returns (e_mask, f_mask, sign).
    """
    blade = e_mask | (f_mask << 32)
    sign = 1
    for p in range(pos + 1, 64):
        if blade >> p & 1:
            sign = -sign
    if blade >> pos & 1:
        blade &= ~(1 << pos)
        sign *= square
    else:
        blade |= 1 << pos
    return blade & 0xFFFFFFFF, blade >> 32, sign


@lru_cache(maxsize=None)
def _mono_to_blades(n, a_mask, b_mask) -> tuple[tuple[tuple[int, int], Fraction], ...]:
    acc: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for idx, kind in WittMonomial(n, a_mask, b_mask).word():
        nxt: dict[tuple[int, int], Fraction] = {}
        f_weight = Fraction(1, 2) if kind == 0 else Fraction(-1, 2)
        for (em, fm), w in acc.items():
            for pos, square, scale in (
                (idx - 1, 1, Fraction(1, 2)),
                (32 + idx - 1, -1, f_weight),
            ):
                em2, fm2, sgn = _blade_times_gen(em, fm, pos, square)
                key = (em2, fm2)
                tot = nxt.get(key, Fraction(0)) + w * sgn * scale
                if tot:
                    nxt[key] = tot
                else:
                    nxt.pop(key, None)
        acc = nxt
    return tuple(sorted(acc.items()))


@lru_cache(maxsize=None)
def _blade_to_monos(n, e_mask, f_mask) -> tuple[tuple[tuple[int, int], int], ...]:
    # expand each e_i / f_i into a_i +- b_i and reduce the resulting words
    gens = [(i, 1) for i in _mask_indices(e_mask)] + [(i, -1) for i in _mask_indices(f_mask)]
    words: list[tuple[tuple[tuple[int, int], ...], int]] = [((), 1)]
    for idx, b_sign in gens:
        words = [
            (word + ((idx, kind),), sgn * (b_sign if kind else 1))
            for word, sgn in words
            for kind in (0, 1)
        ]
    acc: dict[tuple[int, int], int] = {}
    for word, sgn in words:
        for key, w in _reduce_tokens(word).items():
            tot = acc.get(key, 0) + sgn * w
            if tot:
                acc[key] = tot
            else:
                acc.pop(key, None)
    return tuple(sorted(acc.items()))


def to_blade_basis(g: Multivector) -> dict[BladeMonomial, GaussianRational]:
    return g.to_blades()


def from_blade_basis(n: int, blade_terms, complexified: bool = False) -> Multivector:
    acc: dict[WittMonomial, GaussianRational] = {}
    any_imag = False
    for bl, c in blade_terms.items():
        if not isinstance(bl, BladeMonomial):
            bl = BladeMonomial(*bl)
        if bl.n != n:
            raise DimensionMismatch(f"blade rank {bl.n} inside rank-{n} element")
        c = _as_coeff(c)
        any_imag = any_imag or not c.is_real()
        for (am, bm), w in _blade_to_monos(n, bl.e_mask, bl.f_mask):
            key = WittMonomial(n, am, bm)
            tot = acc.get(key, GaussianRational.ZERO) + c * w
            if tot.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = tot
    return Multivector(n, acc, complexified=complexified or any_imag)
