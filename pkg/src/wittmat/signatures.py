"""Arbitrary-signature generator sets G(p,q) inside the complexified rank-n algebra.

The ambient complexified algebra supplies e_1..e_n (square +1),
f_1..f_n (square -1) and the extra vector

    f_{n+1} := e_{1..n} f_{1..n}^dagger i = e_1..e_n f_n..f_1 i,

which squares to -1 and anticommutes with every e_i, f_i.  Any signature with
p + q <= 2n + 1 is reached by flipping generators: multiplying by the central
formal scalar i turns a +1 square into -1 and vice versa.  Flips consume f's
from the lowest index up when p > n, and e's from the highest index down when
q > n + 1, which reproduces the published generator lists verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .exact import GaussianRational
from .witt import Multivector, e, f, one

__all__ = [
    "SignatureSpec",
    "GeneratorSet",
    "SignatureReport",
    "pseudoscalar_candidate",
    "f_extra",
    "generators",
    "verify_signature",
]


@dataclass(frozen=True)
class SignatureSpec:
    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.n < 1:
            raise DomainError("signature parts must be nonnegative and rank positive")
        if self.p + self.q > 2 * self.n + 1:
            raise DomainError(
                f"signature ({self.p},{self.q}) too large for ambient rank {self.n}"
            )


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    plus: tuple[Multivector, ...]
    minus: tuple[Multivector, ...]
    plus_labels: tuple[str, ...] = field(default=())
    minus_labels: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class SignatureReport:
    ok: bool
    failures: tuple[str, ...]


def pseudoscalar_candidate(n: int) -> Multivector:
    """The real 2n-generator product e_n...e_1 f_1...f_n (the unit lacking f_{n+1})."""
    out = one(n)
    for i in range(n, 0, -1):
        out = out * e(n, i)
    for i in range(1, n + 1):
        out = out * f(n, i)
    return out


def f_extra(n: int) -> Multivector:
    """The extra anticommuting vector e_1..e_n f_n..f_1 i with square -1."""
    out = one(n)
    for i in range(1, n + 1):
        out = out * e(n, i)
    for i in range(n, 0, -1):
        out = out * f(n, i)
    return out.scale(GaussianRational.I)


def generators(spec: SignatureSpec) -> GeneratorSet:
    n, p, q = spec.n, spec.p, spec.q
    i_unit = GaussianRational.I
    base_plus = [(f"e{k}", e(n, k).complexify()) for k in range(1, n + 1)]
    base_minus = [(f"f{k}", f(n, k).complexify()) for k in range(1, n + 1)]
    base_minus.append((f"f{n + 1}", f_extra(n)))

    if p > n:
        flips = p - n  # flip f's, lowest index first
        plus = base_plus + [(f"i{lab}", mv.scale(i_unit)) for lab, mv in base_minus[:flips]]
        minus = base_minus[flips:][:q]
    elif q > n + 1:
        flips = q - (n + 1)  # flip e's, highest index first
        keep = n - flips
        plus = base_plus[:keep][:p]
        minus = [(f"i{lab}", mv.scale(i_unit)) for lab, mv in base_plus[keep:]] + base_minus
    else:
        plus = base_plus[:p]
        minus = base_minus[:q]
    assert len(plus) == p and len(minus) == q
    return GeneratorSet(
        n=n,
        plus=tuple(mv for _, mv in plus),
        minus=tuple(mv for _, mv in minus),
        plus_labels=tuple(lab for lab, _ in plus),
        minus_labels=tuple(lab for lab, _ in minus),
    )


def verify_signature(gs: GeneratorSet) -> SignatureReport:
    """Check every square and every pairwise anticommutator by multiplication."""
    labeled = []
    for k, mv in enumerate(gs.plus):
        lab = gs.plus_labels[k] if k < len(gs.plus_labels) else f"plus{k + 1}"
        labeled.append((lab, mv, 1))
    for k, mv in enumerate(gs.minus):
        lab = gs.minus_labels[k] if k < len(gs.minus_labels) else f"minus{k + 1}"
        labeled.append((lab, mv, -1))
    failures = []
    for lab, mv, want in labeled:
        sq = mv * mv
        if sq != want * one(gs.n):
            got = str(sq.scalar_part()) if sq.is_scalar() else sq.pretty()
            failures.append(f"square({lab}) = {got}, expected {want:+d}")
    for idx1 in range(len(labeled)):
        for idx2 in range(idx1 + 1, len(labeled)):
            lab1, g1, _ = labeled[idx1]
            lab2, g2, _ = labeled[idx2]
            if not (g1 * g2 + g2 * g1).is_zero():
                failures.append(f"pair ({lab1}, {lab2}) does not anticommute")
    return SignatureReport(ok=not failures, failures=tuple(failures))
