"""
Brute-force verification oracles, independent of the resolution machinery.
"""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Sequence

from .errors import QZetaError
from .zeta import IntPolynomial

QUASIHOMOGENEOUS_BOUND = 10**5
SEMIGROUP_BOUND = 10**4


def oracle_quasihomogeneous(exponents: Sequence[int]) -> Counter:
    """Monodromy eigenvalues of x_1^a_1 + ... + x_k^a_k as a multiset of theta in [0, 1).

    theta = frac(i_1/a_1 + ... + i_k/a_k) over 1 <= i_j < a_j.
    """
    exponents = [int(a) for a in exponents]
    if any(a < 2 for a in exponents):
        raise QZetaError(f"exponents must be >= 2, got {exponents}")
    if prod(exponents) > QUASIHOMOGENEOUS_BOUND:
        raise QZetaError(f"product of exponents exceeds {QUASIHOMOGENEOUS_BOUND}")
    out: Counter = Counter()
    for idx in itertools.product(*(range(1, a) for a in exponents)):
        s = sum((Fraction(i, a) for i, a in zip(idx, exponents)), Fraction(0))
        out[s - (s.numerator // s.denominator)] += 1
    return out


def semigroup_gaps(generators: Sequence[int]) -> list[int]:
    """Positive integers not in the numerical semigroup spanned by ``generators``."""
    gens = sorted({int(g) for g in generators})
    if not gens or gens[0] < 1:
        raise QZetaError(f"generators must be positive, got {generators}")
    if gcd(*gens) != 1:
        raise QZetaError(f"generators {gens} are not coprime")
    if gens[-1] > SEMIGROUP_BOUND:
        raise QZetaError(f"generators exceed {SEMIGROUP_BOUND}")
    smallest = gens[0]
    reachable = [True]
    gaps = []
    run = 1  # length of the current run of representable integers, counting 0
    x = 0
    while run < smallest:
        x += 1
        ok = any(x >= g and reachable[x - g] for g in gens)
        reachable.append(ok)
        if ok:
            run += 1
        else:
            gaps.append(x)
            run = 0
    return gaps


def oracle_semigroup_mu(generators: Sequence[int]) -> int:
    """Twice the number of gaps: the Milnor number of a plane branch with this semigroup."""
    return 2 * len(semigroup_gaps(generators))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> IntPolynomial:
    """Phi_d, by dividing t^d - 1 by Phi_e for every proper divisor e."""
    poly = IntPolynomial.from_roots_of_unity_factor(d)
    for e in range(1, d):
        if d % e == 0:
            poly, rem = poly.divmod_monic(cyclotomic_polynomial(e))
            if not rem.is_zero():
                raise AssertionError("cyclotomic division is not exact")
    return poly


def polynomial_root_multiset(poly: IntPolynomial, max_order: int) -> tuple[Counter, IntPolynomial]:
    """Roots of unity of order <= max_order in ``poly``, with multiplicity.

    Found by repeated exact division by Phi_d.  Returns the multiset of
    theta = j/d and the cofactor left over.
    """
    out: Counter = Counter()
    rest = poly
    for d in range(1, max_order + 1):
        phi = cyclotomic_polynomial(d)
        while rest.degree >= phi.degree:
            q, r = rest.divmod_monic(phi)
            if not r.is_zero():
                break
            rest = q
            for j in range(d):
                if gcd(j, d) == 1:
                    out[Fraction(j, d)] += 1
    return out, rest
