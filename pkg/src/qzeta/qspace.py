"""
Abelian quotient-space types X(d; A) and the finite diagonal groups behind them.

A type is a list of cyclic orders ``d = (d_1, ..., d_r)`` together with an
``r x n`` weight matrix ``A``; the group ``mu_d1 x ... x mu_dr`` acts on C^n by
``x_j -> prod_i xi_i^{a_ij} x_j``.  Group elements are encoded exactly as
weight vectors in (Q/Z)^n, so stabilizers, character orders and orbits all
reduce to finite enumerations over rationals.

Coordinate indices are 0-based throughout.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Iterable, Sequence

from .errors import EnumerationBoundError, NotSemiInvariant, QZetaError

DEFAULT_ENUMERATION_BOUND = 10**6

_VARS = "xyz"


def _frac_mod1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class QuotientType:
    """The type (d; A) of a quotient space X(d; A).

    Rows of ``A`` are stored reduced into ``[0, d_i)``, so ``X(2; -1, 1)`` and
    ``X(2; 1, 1)`` compare equal.
    """

    d: tuple[int, ...]
    A: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        rows = tuple(tuple(int(a) for a in row) for row in self.A)
        if not d:
            raise QZetaError("a quotient type needs at least one cyclic order")
        if len(rows) != len(d):
            raise QZetaError(f"weight matrix has {len(rows)} rows for {len(d)} orders")
        if not rows[0]:
            raise QZetaError("a quotient type needs ambient dimension n >= 1")
        n = len(rows[0])
        if any(len(row) != n for row in rows):
            raise QZetaError("weight rows have different lengths")
        if any(di < 1 for di in d):
            raise QZetaError(f"cyclic orders must be positive, got {d}")
        rows = tuple(tuple(a % di for a in row) for di, row in zip(d, rows))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "A", rows)

    @classmethod
    def cyclic(cls, d: int, *weights: int) -> QuotientType:
        """``QuotientType.cyclic(6, 3, 2)`` is X(6; 3, 2)."""
        return cls((d,), (tuple(weights),))

    @classmethod
    def trivial(cls, n: int) -> QuotientType:
        return cls((1,), ((0,) * n,))

    @property
    def n(self) -> int:
        return len(self.A[0])

    @property
    def r(self) -> int:
        return len(self.d)

    @property
    def is_cyclic(self) -> bool:
        return self.r == 1

    @property
    def is_trivial(self) -> bool:
        return all(di == 1 for di in self.d)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.A)

    def generators(self) -> tuple[tuple[Fraction, ...], ...]:
        """Weight vectors in (Q/Z)^n of the r defining generators."""
        return tuple(
            tuple(Fraction(a, di) for a in row) for di, row in zip(self.d, self.A)
        )

    def to_str(self, signed: bool = False) -> str:
        if self.is_trivial:
            return f"C^{self.n}"

        def show(a, di):
            if signed and 2 * a > di:
                return str(a - di)
            return str(a)

        orders = ",".join(str(di) for di in self.d)
        rows = "|".join(
            ",".join(show(a, di) for a in row) for di, row in zip(self.d, self.A)
        )
        return f"X({orders};{rows})"

    def __str__(self) -> str:
        return self.to_str()


@dataclass(frozen=True)
class DiagonalGroup:
    """A finite subgroup of (Q/Z)^n, stored as its full element set."""

    n: int
    generators: tuple[tuple[Fraction, ...], ...]
    elements: frozenset

    @classmethod
    def generated_by(
        cls,
        generators: Iterable[Sequence],
        n: int | None = None,
        bound: int = DEFAULT_ENUMERATION_BOUND,
    ) -> DiagonalGroup:
        gens = tuple(tuple(_frac_mod1(g) for g in gen) for gen in generators)
        if n is None:
            if not gens:
                raise QZetaError("dimension is required for an empty generator list")
            n = len(gens[0])
        if any(len(g) != n for g in gens):
            raise QZetaError("generators have inconsistent lengths")
        # Breadth-first closure on integer numerators over a common denominator.
        den = lcm(1, *(x.denominator for g in gens for x in g))
        int_gens = [tuple(int(x * den) for x in g) for g in gens]
        zero = (0,) * n
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for el in frontier:
                for g in int_gens:
                    s = tuple((a + b) % den for a, b in zip(el, g))
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            if len(seen) > bound:
                raise EnumerationBoundError(
                    f"group closure exceeds the enumeration bound {bound}"
                )
            frontier = nxt
        elements = frozenset(tuple(Fraction(a, den) for a in el) for el in seen)
        return cls(n, gens, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        return tuple(_frac_mod1(x) for x in item) in self.elements

    def character_image(self, j: int) -> frozenset:
        """The image of the j-th coordinate character, as a subgroup of Q/Z."""
        return frozenset(el[j] for el in self.elements)

    def character_order(self, j: int) -> int:
        return len(self.character_image(j))

    def stabilizer(self, zero_coords: Iterable[int]) -> DiagonalGroup:
        """Elements fixing a point whose zero coordinates are exactly ``zero_coords``."""
        zero_coords = set(zero_coords)
        free = [j for j in range(self.n) if j not in zero_coords]
        els = frozenset(el for el in self.elements if all(el[j] == 0 for j in free))
        return DiagonalGroup(self.n, tuple(sorted(els)), els)

    def to_type(self) -> QuotientType:
        """A (generally non-canonical) type whose group is this one."""
        rows, orders = [], []
        for g in self.generators:
            di = lcm(1, *(x.denominator for x in g))
            if di == 1:
                continue
            orders.append(di)
            rows.append(tuple(int(x * di) for x in g))
        if not orders:
            return QuotientType.trivial(self.n)
        return QuotientType(tuple(orders), tuple(rows))


def _check_bound(q: QuotientType, bound: int) -> None:
    if prod(q.d) > bound:
        raise EnumerationBoundError(
            f"|mu_d| = {prod(q.d)} exceeds the enumeration bound {bound}"
        )


def from_type(q: QuotientType, bound: int = DEFAULT_ENUMERATION_BOUND) -> DiagonalGroup:
    """Enumerate the diagonal group acting on C^n for the type ``q``."""
    _check_bound(q, bound)
    return DiagonalGroup.generated_by(q.generators(), n=q.n, bound=bound)


def group_order(q: QuotientType, bound: int = DEFAULT_ENUMERATION_BOUND) -> int:
    return from_type(q, bound).order


def ell(q: QuotientType, j: int) -> int:
    """lcm_i d_i / gcd(d_i, a_ij): the order of the j-th coordinate character."""
    if not 0 <= j < q.n:
        raise IndexError(f"coordinate {j} out of range for n={q.n}")
    return lcm(*(di // gcd(di, a) for di, a in zip(q.d, q.column(j))))


def stabilizer_order(
    q: QuotientType, zero_coords: Iterable[int], bound: int = DEFAULT_ENUMERATION_BOUND
) -> int:
    """Order of the subgroup of mu_d fixing a point with the given zero coordinates.

    Counted in the abstract group mu_d, so a non-faithful type has a
    nontrivial stabilizer on the torus.
    """
    zero_coords = set(zero_coords)
    if any(not 0 <= j < q.n for j in zero_coords):
        raise IndexError(f"zero coordinates {sorted(zero_coords)} out of range")
    free = [j for j in range(q.n) if j not in zero_coords]
    if q.is_cyclic:
        (d,), (row,) = q.d, q.A
        return gcd(d, *(row[j] for j in free))
    _check_bound(q, bound)
    count = 0
    for ks in itertools.product(*(range(di) for di in q.d)):
        if all(
            sum(Fraction(k * q.A[i][j], q.d[i]) for i, k in enumerate(ks)).denominator == 1
            for j in free
        ):
            count += 1
    return count


def is_normalized(q: QuotientType, bound: int = DEFAULT_ENUMERATION_BOUND) -> bool:
    """Free on the torus and small: trivial stabilizers off the coordinate axes."""
    if stabilizer_order(q, (), bound) != 1:
        return False
    return all(stabilizer_order(q, {j}, bound) == 1 for j in range(q.n))


def make_faithful(q: QuotientType) -> QuotientType:
    """Divide a cyclic type by the kernel of its action."""
    if not q.is_cyclic:
        raise QZetaError("make_faithful is only implemented for cyclic types")
    (d,), (row,) = q.d, q.A
    g = gcd(d, *row)
    return QuotientType((d // g,), (tuple(a // g for a in row),))


def normalize_cyclic(q: QuotientType) -> tuple[QuotientType, tuple[Fraction, ...]]:
    """Normalize a faithful cyclic type by maps of the form x_i -> x_i^k.

    Returns the normalized type and, per coordinate, the factor by which an
    exponent of x_i is multiplied when a monomial is rewritten in the new
    coordinates.
    """
    if not q.is_cyclic:
        raise QZetaError("normalization is only implemented for cyclic types")
    (d,), (row,) = q.d, q.A
    if gcd(d, *row) != 1:
        raise QZetaError(
            f"{q} is not faithful (gcd(d, a) = {gcd(d, *row)}); apply make_faithful first"
        )
    row = list(row)
    transport = [Fraction(1)] * len(row)
    changed = True
    while changed:
        changed = False
        for i in range(len(row)):
            k = gcd(d, *(a for j, a in enumerate(row) if j != i))
            if k > 1:
                d //= k
                row = [a if j == i else a // k for j, a in enumerate(row)]
                transport[i] /= k
                changed = True
    return QuotientType((d,), (tuple(row),)), tuple(transport)


def normalize_dim2(q: QuotientType) -> tuple[QuotientType, tuple[Fraction, Fraction]]:
    """X(d; a, b) -> X(d/((d,a)(d,b)); a/(d,a), b/(d,b)), [(x, y)] -> [(x^(d,b), y^(d,a))]."""
    if not (q.is_cyclic and q.n == 2):
        raise QZetaError(f"normalize_dim2 expects a cyclic type with n=2, got {q}")
    return normalize_cyclic(q)


def monomial_weight(q: QuotientType, exponents: Sequence) -> tuple[Fraction, ...]:
    """Per row i, sum_j a_ij e_j reduced mod d_i (rational exponents allowed)."""
    out = []
    for di, row in zip(q.d, q.A):
        w = sum((a * Fraction(e) for a, e in zip(row, exponents)), Fraction(0))
        out.append(w - di * (w // di))
    return tuple(out)


def semi_invariant_weight(f) -> tuple[Fraction, ...]:
    """The common weight v with f(xi . x) = xi^v f(x).

    ``f`` is a :class:`qzeta.germ.Germ`; f descends to a function on the
    quotient iff the returned vector is zero.
    """
    if not f.terms:
        raise QZetaError("the zero germ has no weight")
    weights = {monomial_weight(f.ambient, e) for e in f.terms}
    if len(weights) > 1:
        raise NotSemiInvariant(
            f"monomials of {f} carry different weights {sorted(weights)} on "
            f"{f.ambient}; its zero set may still be invariant, but no power "
            "of it is a function on the quotient"
        )
    return weights.pop()


def min_power(v: Sequence, d: Sequence[int]) -> int:
    """Smallest k >= 1 with k v_i = 0 mod d_i for every i."""
    k = 1
    for vi, di in zip(v, d):
        vi = Fraction(vi)
        modulus = di * vi.denominator
        k = lcm(k, modulus // gcd(modulus, vi.numerator))
    return k


def reduce_projective_weights(w: Sequence[int]) -> tuple[int, ...]:
    """P(q_0, ..., q_n) -> P(p_0, ..., p_n) with p_i = q_i / prod_{j != i} d_j."""
    w = tuple(int(x) for x in w)
    if len(w) < 2 or any(x < 1 for x in w):
        raise QZetaError(f"expected at least two positive weights, got {w}")
    if gcd(*w) != 1:
        raise QZetaError(f"weights {w} are not coprime")
    ds = [gcd(*(x for j, x in enumerate(w) if j != i)) for i in range(len(w))]
    out = []
    for i, q in enumerate(w):
        e = prod(dj for j, dj in enumerate(ds) if j != i)
        out.append(q // e)
    return tuple(out)


def var_name(j: int, n: int) -> str:
    return _VARS[j] if n <= len(_VARS) else f"x{j + 1}"
