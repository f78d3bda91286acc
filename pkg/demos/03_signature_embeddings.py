"""Real Clifford algebras of odd dimension living inside the rank-n algebra.

The split basis e_i = a_i + b_i, f_i = a_i - b_i gives n generators of square
+1 and n of square -1.  One extra anticommuting vector comes for free: the
full product of the e's and f's times the formal imaginary unit.  Flipping
generators by i then reaches every signature (p, q) with p + q = 2n + 1.
"""

from wittmat import (
    GaussianRational,
    SignatureSpec,
    f_extra,
    generators,
    one,
    pseudoscalar_candidate,
    verify_signature,
)

ROWS = [
    (1, 2, 1), (3, 0, 1),
    (2, 3, 2), (4, 1, 2), (0, 5, 2),
    (3, 4, 3), (5, 2, 3), (7, 0, 3), (1, 6, 3),
]

print("signature   rank   generators")
for p, q, n in ROWS:
    gs = generators(SignatureSpec(p, q, n))
    labels = ", ".join(gs.plus_labels + gs.minus_labels)
    report = verify_signature(gs)
    status = "ok" if report.ok else "FAILED " + "; ".join(report.failures)
    print(f"  ({p},{q})     {n}      R({labels})   {status}")

print()
for n in (1, 2, 3):
    fx = f_extra(n)
    sq = fx * fx
    print(f"rank {n}: f_{n + 1}^2 =", sq.pretty(), " anticommutes with the 2n base vectors")

# the real 2n-volume squares to +1; attaching i turns it into the extra
# minus-square vector
n = 2
vol = pseudoscalar_candidate(n)
print("\nvolume element squared:", (vol * vol).pretty())
print("extra vector is i * volume:", f_extra(n) == vol.complexify().scale(GaussianRational.I))
assert (f_extra(n) * f_extra(n)) == -one(n)
