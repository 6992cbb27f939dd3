# Quotient spaces and their groups
#
# A type X(d; A) stands for C^n divided by a diagonal action of a product of
# cyclic groups.  The group elements are kept as exact weight vectors in
# (Q/Z)^n, so every question about stabilizers reduces to counting fractions.

from qzeta import QuotientType, from_type, is_normalized, normalize_dim2, stabilizer_order
from qzeta.qspace import ell

q = QuotientType.cyclic(6, 3, 2)
g = from_type(q)
print(q, "has", g.order, "elements")

# The x axis is fixed pointwise by the elements acting trivially on y, so the
# space has a non-trivial stabilizer along a whole coordinate hyperplane.

for zeros in ({0}, {1}):
    print("stabilizer of a point with zero coordinates", zeros, "has order", stabilizer_order(q, zeros))
print("normalized?", is_normalized(q))

# Normalizing rewrites the coordinates as powers; here the quotient is just C^2
# and monomials pick up rational exponents.

target, transport = normalize_dim2(q)
print(q, "->", target, "with exponents scaled by", [str(t) for t in transport])

# The character orders ell_j are computed two ways: an lcm formula and a brute
# force over the group.  They always agree.

for j in range(q.n):
    print("ell_%d: formula %d, enumeration %d" % (j, ell(q, j), g.character_order(j)))

# Non-cyclic types work the same way.

q2 = QuotientType((2, 3), ((1, 1), (1, 2)))
print(q2, "order", from_type(q2).order, "ell", [ell(q2, j) for j in range(2)])
