"""The three involutions and the 2x2 determinant.

reverse flips every product word, grade_involution negates odd grades, and
clifford_conj composes the two.  At rank 1 the conjugation gives an adjugate,
so g * clifford_conj(g) is the scalar det[g] and division becomes possible.
"""

import random
from fractions import Fraction

from wittmat import GaussianRational, a, b, det2, mv_inverse, one, scalar_mv, to_matrix, u, u_dag

rng = random.Random(7)


def rand_rank1():
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
    return (u(1, 1).scale(coeffs[0]) + a(1, 1).scale(coeffs[1])
            + b(1, 1).scale(coeffs[2]) + u_dag(1, 1).scale(coeffs[3]))


g = rand_rank1()
print("g   =", g.pretty())
print("[g] =")
print(to_matrix(g).pretty())

for name, img in (("reverse", g.reverse()),
                  ("grade_involution", g.grade_involution()),
                  ("clifford_conj", g.clifford_conj())):
    print(f"\n[{name}(g)] =")
    print(to_matrix(img).pretty())

d = det2(g)
print("\ng * clifford_conj(g) collapses to the scalar", (g * g.clifford_conj()).pretty())
print("det2(g) =", d, " (equals g11*g22 - g12*g21)")

if not d.is_zero():
    ginv = g.clifford_conj().scale(d.inverse())
    print("adjugate inverse: g * (g*/det) =", (g * ginv).pretty())
    print("matches mv_inverse:", ginv == mv_inverse(g))

# a worked fixed example: determinant -1
h = u(1, 1).scale(2) + a(1, 1).scale(3) + b(1, 1).scale(5) + u_dag(1, 1).scale(7)
print("\n2u + 3a + 5b + 7u_dag has det2 =", det2(h), "so it is invertible over the rationals")

# reversal composed twice is the identity, and it reverses products
x, y = rand_rank1(), rand_rank1()
print("(xy)dag == ydag xdag:", (x * y).reverse() == y.reverse() * x.reverse())
