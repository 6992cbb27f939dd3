# Plane curve singularities from one weighted blow-up
#
# For x^p + y^q a single (q/e, p/e) weighted blow-up already gives an embedded
# Q-resolution.  The strata on the exceptional divisor produce the zeta function.

from qzeta import QuotientType, pipeline_curve, binomial_germ, expand, report
from qzeta.oracles import oracle_semigroup_mu

C2 = QuotientType.trivial(2)

res = pipeline_curve(C2, binomial_germ(4, 6))
for s in res.strata:
    print("m=%s ell=%d chi=%d  %s" % (s.m, s.ell, s.chi, s.label))
rep = report(res.strata, expand_delta=True)
print("Z     =", rep.zeta)
print("Delta =", rep.delta)
print("      =", rep.delta_expanded)
print("mu    =", rep.mu)

# The same answer comes out of the unreduced (6, 4) blow-up, whose exceptional
# divisor carries a generic stabilizer of order 2.

other = pipeline_curve(C2, binomial_germ(4, 6), weights=(6, 4))
print("routes agree:", other.delta == res.delta)

# Two Puiseux pairs need a second blow-up.  The Milnor number is twice the
# number of gaps of the semigroup of the branch.

from qzeta import pipeline_two_pairs
from qzeta.resolve import two_pairs_N

br = pipeline_two_pairs(3, 2, 5, 3)
print("Delta =", br.delta)
print("mu =", report(br.strata).mu, "semigroup:", oracle_semigroup_mu((6, 9, two_pairs_N(3, 2, 5, 3))))
