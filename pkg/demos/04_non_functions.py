# Germs that are not functions on the quotient
#
# On X(6; 3, 2) the germ x y (x^2 + y^3) is only semi-invariant: the group
# rescales it by a character.  Its zero set is still a curve in the quotient and
# the zeta function makes sense with rational exponents.

from fractions import Fraction

from qzeta import QuotientType, germ_from_text, pipeline_curve, report, semi_invariant_weight
from qzeta.qspace import min_power
from qzeta.zeta import subst_power

X = QuotientType.cyclic(6, 3, 2)
rows = ["x^2 y^3 (x^2+y^3)", "x y (x^2+y^3)"]
for text in rows:
    f = germ_from_text(text, X)
    v = semi_invariant_weight(f)
    res = pipeline_curve(X, f)
    rep = report(res.strata)
    print(text, "weight", [str(x) for x in v], "f^k a function for k =", min_power(v, X.d))
    print("   Z =", rep.zeta, " mu_f =", rep.mu)

# Replacing f by a power f^k scales every exponent by k, so Z(f^k)(t^(1/k)) does
# not depend on k.

f = germ_from_text("x y (x^2+y^3)", X)
for k in (1, 2, 6):
    z = pipeline_curve(X, f.power(k)).zeta
    print("k=%d" % k, subst_power(z, Fraction(1, k)))

# On C^2 the same germ is an honest function with mu = 12.

print(report(pipeline_curve(QuotientType.trivial(2), germ_from_text("x y (x^2+y^3)")).strata).mu)
