# Surface singularities: Brieskorn-Pham and Yomdin-Le
#
# x^p + y^q + z^r is resolved by one weighted blow-up.  The exceptional divisor
# is a weighted projective plane; its three coordinate lines and three vertices
# carry their own stabilizers.

from qzeta import expand, pipeline_brieskorn, pipeline_yomdin, report
from qzeta.oracles import oracle_quasihomogeneous, polynomial_root_multiset

res = pipeline_brieskorn(4, 6, 10)
for s in res.strata:
    print("m=%s ell=%d chi=%d  %s" % (s.m, s.ell, s.chi, s.label))
print("mu =", report(res.strata).mu, "expected", 3 * 5 * 9)
print("\n".join(res.notes))

# The roots of Delta are the classical eigenvalues exp(2 pi i (i/p + j/q + k/r)).

small = pipeline_brieskorn(2, 3, 5)
roots, rest = polynomial_root_multiset(expand(small.delta), 30)
print("eigenvalues match:", roots == oracle_quasihomogeneous((2, 3, 5)))

# Yomdin-Le surfaces z^(m+k) + h_m: a cubic with one ordinary cusp and k = 1.

yl = pipeline_yomdin(3, 1, 2, 3, 1)
print("Delta =", expand(yl.delta))
print("twist route agrees:", yl.closed_form_agrees())
