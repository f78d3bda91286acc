"""Walk through the null-vector generators and their matrix pictures.

Two generators per index: a_i and b_i, both squaring to zero, with
a_i b_i + b_i a_i = 1.  Products of the idempotents u_i = a_i b_i build a
complete family of matrix units, so every rank-n element IS a 2^n x 2^n
matrix with exact rational entries.
"""

from wittmat import (
    a, b, one, u, u_dag,
    from_matrix, mv_trace, spectral_table, to_matrix,
)


def show(title, text):
    print(f"\n== {title}")
    print(text)


n = 1
print("The defining relations at rank 1:")
print("  a1*a1       =", (a(n, 1) * a(n, 1)).pretty())
print("  b1*b1       =", (b(n, 1) * b(n, 1)).pretty())
print("  a1b1 + b1a1 =", (a(n, 1) * b(n, 1) + b(n, 1) * a(n, 1)).pretty())

show("rank-1 spectral table", "")
for row in spectral_table(1):
    print("   ", "   ".join(entry.pretty().ljust(10) for entry in row))
print("Those four elements multiply like the 2x2 matrix units.")

show("matrices of the rank-2 generators", "")
for name, g in (("a1", a(2, 1)), ("b1", b(2, 1)), ("a2", a(2, 2)), ("b2", b(2, 2))):
    print(f"[{name}] =")
    print(to_matrix(g).pretty())

show("the isomorphism in action", "")
g = u(2, 1).scale(2) + a(2, 1) * b(2, 2) - u_dag(2, 2).scale(3)
h = b(2, 1) + u(2, 2)
lhs = to_matrix(g * h)
rhs = to_matrix(g) * to_matrix(h)
print("to_matrix(g*h) == to_matrix(g)*to_matrix(h):", lhs == rhs)
print("round trip recovers g:", from_matrix(to_matrix(g), 2) == g)
print("trace without building the matrix:", mv_trace(g), "==", to_matrix(g).trace())

show("scalars become multiples of the identity", "")
print(to_matrix(one(2).scale(5)).pretty())
