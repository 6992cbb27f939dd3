"""
Weighted blow-ups and the resolution pipelines for the families treated here:
one binomial factor on a cyclic quotient surface, plane branches with two
Puiseux pairs, Brieskorn-Pham surfaces and Yomdin-Le surfaces.

Blow-ups of a quotient ambient C^n / G are computed on the C^n cover.  The
chart group is the closure in (Q/Z)^n of the usual chart generator together
with one lift of each ambient generator through the chart map; closure
absorbs the choice of lift.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import QZetaError, UnsupportedGerm
from .germ import Germ
from .qspace import (
    DEFAULT_ENUMERATION_BOUND,
    DiagonalGroup,
    QuotientType,
    make_faithful,
    normalize_dim2,
    semi_invariant_weight,
)
from .strata import InvariantReport, Stratum, StrataSet, report, zeta_from_strata
from .zeta import (
    DELTA_FORM,
    CyclotomicProduct,
    subst_power,
    to_delta,
    twist,
)


@dataclass(frozen=True)
class Chart:
    """One affine chart C^n / group of a weighted blow-up.

    ``matrix[k][j]`` is the exponent of the chart coordinate x_j in the k-th
    original coordinate, so the chart map is X_k = prod_j x_j^matrix[k][j].
    """

    index: int
    n: int
    group: DiagonalGroup
    matrix: tuple[tuple[int, ...], ...]
    local_equation: Germ
    divisor_coords: dict = field(default_factory=dict, compare=False)


def weighted_blowup(
    ambient: QuotientType,
    weights: Sequence[int],
    f: Germ,
    *,
    require_coprime: bool = True,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> tuple[list[Chart], Fraction]:
    """Charts of the weighted blow-up of ``ambient`` at the origin, and the weighted order of f."""
    weights = tuple(int(w) for w in weights)
    n = ambient.n
    if len(weights) != n or any(w < 1 for w in weights):
        raise QZetaError(f"need {n} positive weights, got {weights}")
    if require_coprime and gcd(*weights) != 1:
        raise QZetaError(f"weights {weights} are not coprime")
    if not ambient.is_cyclic:
        raise QZetaError("blow-ups are implemented over cyclic ambient types only")
    if f.is_zero():
        raise QZetaError("cannot blow up the zero germ")
    ambient_gens = [] if ambient.is_trivial else list(ambient.generators())
    nu = f.order(weights)
    charts = []
    for i in range(n):
        wi = weights[i]
        matrix = tuple(
            tuple(
                (wi if j == i else 0) if k == i else (weights[k] if j == i else int(j == k))
                for j in range(n)
            )
            for k in range(n)
        )
        gens = [tuple(Fraction(-1, wi) if j == i else Fraction(weights[j], wi) for j in range(n))]
        for g in ambient_gens:
            lift_i = g[i] / wi
            gens.append(tuple(lift_i if j == i else g[j] - weights[j] * lift_i for j in range(n)))
        group = DiagonalGroup.generated_by(gens, n=n, bound=bound)
        local = f.pullback(matrix, group.to_type())
        charts.append(Chart(i, n, group, matrix, local, {"E": i}))
    return charts, nu


def blowup2(ambient: QuotientType, weights: Sequence[int], f: Germ, **kwargs):
    """(chart 1, chart 2, nu) for the (p, q)-blow-up of a cyclic surface quotient."""
    if ambient.n != 2:
        raise QZetaError("blowup2 expects a two-dimensional ambient")
    (c1, c2), nu = weighted_blowup(ambient, weights, f, **kwargs)
    return c1, c2, nu


def blowup3(ambient: QuotientType, weights: Sequence[int], f: Germ, **kwargs):
    if ambient.n != 3:
        raise QZetaError("blowup3 expects a three-dimensional ambient")
    (c1, c2, c3), nu = weighted_blowup(ambient, weights, f, **kwargs)
    return c1, c2, c3, nu


def divisor_ell(chart: Chart, divisor_coord: int, zero_coords=None) -> int:
    """Order of the divisor character on the stabilizer of a point of the chart.

    ``zero_coords`` defaults to the divisor coordinate alone, i.e. a
    generic point of the divisor.
    """
    if zero_coords is None:
        zero_coords = {divisor_coord}
    stab = chart.group.stabilizer(zero_coords)
    return len(stab.character_image(divisor_coord))


def exceptional_multiplicity(chart: Chart, divisor: str, nu) -> Fraction:
    """m(E) = nu / ell_E at a generic point of the divisor."""
    if divisor not in chart.divisor_coords:
        raise QZetaError(f"divisor {divisor!r} is not visible in chart {chart.index}")
    j = chart.divisor_coords[divisor]
    return Fraction(nu) / divisor_ell(chart, j)


def count_branch_points(chart: Chart, exponent: int, coordinate: int, constant=-1) -> int:
    """Number of group orbits of the solutions of x_coordinate^exponent = constant.

    The solutions are the rational arguments (arg(constant) + j) / exponent
    mod 1; the chart group moves them by its weights on ``coordinate``.
    """
    constant = Fraction(constant)
    if not constant or exponent < 1:
        raise QZetaError("need a nonzero constant and a positive exponent")
    arg = Fraction(0) if constant > 0 else Fraction(1, 2)
    sols = {(arg + j) / exponent for j in range(exponent)}
    sols = {s - (s.numerator // s.denominator) for s in sols}
    shifts = chart.group.character_image(coordinate)
    orbits = 0
    seen: set = set()
    for s in sorted(sols):
        if s in seen:
            continue
        orbits += 1
        for w in shifts:
            t = s + w
            seen.add(t - (t.numerator // t.denominator))
    return orbits


@dataclass
class PipelineResult:
    strata: StrataSet
    charts: list[Chart] = field(default_factory=list)
    closed_form: CyclotomicProduct | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def zeta(self) -> CyclotomicProduct:
        return zeta_from_strata(self.strata)

    @property
    def delta(self) -> CyclotomicProduct:
        return to_delta(self.zeta, self.strata.n)

    def report(self, **kwargs) -> InvariantReport:
        rep = report(self.strata, **kwargs)
        rep.warnings.extend(self.notes)
        return rep

    def closed_form_agrees(self) -> bool | None:
        if self.closed_form is None:
            return None
        return self.delta == self.closed_form

    def to_json(self) -> dict:
        out = self.strata.to_json()
        out["closed_form"] = self.closed_form.to_json() if self.closed_form is not None else None
        out["notes"] = list(self.notes)
        return out


def delta_product(factors: dict) -> CyclotomicProduct:
    return CyclotomicProduct({Fraction(m): e for m, e in factors.items()}, 1, DELTA_FORM)


def one_pair_delta(p: int, q: int) -> CyclotomicProduct:
    """(t-1)(t^(pq/e)-1)^e / ((t^p-1)(t^q-1)), e = gcd(p, q)."""
    e = gcd(p, q)
    factors: dict = {}
    for m, a in ((1, 1), (p * q // e, e), (p, -1), (q, -1)):
        factors[m] = factors.get(m, 0) + a
    return delta_product(factors)


# -- curves on cyclic quotient surfaces ---------------------------------------


@dataclass(frozen=True)
class _BinomialShape:
    coeff: Fraction
    mono: tuple[Fraction, Fraction]
    c_x: Fraction
    alpha: int
    c_y: Fraction
    beta: int
    mult: int


def _binomial_shape(f: Germ) -> _BinomialShape:
    """Read f as coeff * x^a y^b (c_x x^alpha + c_y y^beta)^mult."""
    if f.n != 2:
        raise UnsupportedGerm("curve germs need two variables")
    if f.factored is not None:
        coeff, mono, inner = f.factored
        mono = list(mono)
        binomials: list[tuple[Germ, int]] = []
        for g, k in inner:
            if g.is_monomial():
                (e, c), = g.terms.items()
                mono = [a + k * x for a, x in zip(mono, e)]
                coeff *= c**k
                continue
            for i, (h, kk) in enumerate(binomials):
                if h == g:
                    binomials[i] = (h, kk + k)
                    break
            else:
                binomials.append((g, k))
        if len(binomials) != 1:
            raise UnsupportedGerm(
                f"expected exactly one non-monomial factor in {f}, found {len(binomials)}"
            )
        g, mult = binomials[0]
    else:
        coeff, mono, g, mult = Fraction(1), [Fraction(0), Fraction(0)], f, 1
    common = g.common_monomial()
    if any(common):
        mono = [a + mult * c for a, c in zip(mono, common)]
        g = Germ({tuple(x - c for x, c in zip(e, common)): v for e, v in g.terms.items()}, g.ambient)
    terms = g.terms
    if len(terms) != 2:
        raise UnsupportedGerm(f"{g} is not a binomial x^alpha + c y^beta")
    (e1, c1), (e2, c2) = sorted(terms.items(), key=lambda t: -t[0][0])
    if not (e1[1] == 0 and e2[0] == 0 and e1[0] > 0 and e2[1] > 0):
        raise UnsupportedGerm(f"{g} is not of the form c1 x^alpha + c2 y^beta")
    if e1[0].denominator != 1 or e2[1].denominator != 1:
        raise UnsupportedGerm(f"binomial {g} must have integer exponents")
    return _BinomialShape(
        Fraction(coeff),
        (Fraction(mono[0]), Fraction(mono[1])),
        c1,
        int(e1[0]),
        c2,
        int(e2[1]),
        int(mult),
    )


def pipeline_curve(
    space: QuotientType,
    germ: Germ,
    weights: Sequence[int] | None = None,
    *,
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> PipelineResult:
    """Resolve x^a y^b (x^alpha + c y^beta)^s on a cyclic quotient surface by one weighted blow-up.

    The ambient is normalized first and the germ transported (its monomial
    part may acquire rational exponents).  ``weights`` overrides the
    blow-up weights, e.g. with non-coprime ones; they must make the
    transported binomial weighted-homogeneous.
    """
    if not (space.is_cyclic and space.n == 2):
        raise QZetaError(f"pipeline_curve needs a cyclic surface quotient, got {space}")
    notes: list[str] = []
    shape = _binomial_shape(germ.with_ambient(space))
    a, b = shape.mono
    reduced = Germ.from_factors(
        (Fraction(int(a > 0)), Fraction(int(b > 0))),
        [(Germ({(shape.alpha, 0): shape.c_x, (0, shape.beta): shape.c_y}, 2), 1)],
        1,
        space,
    )
    v = semi_invariant_weight(reduced)
    faithful = make_faithful(space)
    if faithful != space:
        notes.append(f"{space} acts through the faithful quotient {faithful}")
    target, (tx, ty) = normalize_dim2(faithful)
    if (tx, ty) != (1, 1):
        notes.append(f"normalized {faithful} -> {target}, exponents scaled by ({tx}, {ty})")
    a_, b_ = a * tx, b * ty
    alpha_, beta_ = shape.alpha * tx, shape.beta * ty
    if alpha_.denominator != 1 or beta_.denominator != 1:
        raise UnsupportedGerm(
            f"binomial exponents ({alpha_}, {beta_}) are not integers after normalization"
        )
    alpha_, beta_ = int(alpha_), int(beta_)
    if weights is None:
        g = gcd(alpha_, beta_)
        w1, w2 = beta_ // g, alpha_ // g
        coprime = True
    else:
        w1, w2 = (int(w) for w in weights)
        if w1 * alpha_ != w2 * beta_:
            raise QZetaError(
                f"weights ({w1}, {w2}) do not make x^{alpha_} + y^{beta_} weighted-homogeneous"
            )
        coprime = gcd(w1, w2) == 1
    notes.append(f"weighted blow-up of type ({w1}, {w2})")

    f_t = germ.with_ambient(space).transport((tx, ty), target)
    c1, c2, nu = blowup2(target, (w1, w2), f_t, require_coprime=coprime, bound=bound)
    nu_check = w1 * a_ + w2 * b_ + shape.mult * w1 * alpha_
    if nu != nu_check:
        raise AssertionError(f"weighted order {nu} != {nu_check}")

    ell_e = divisor_ell(c1, 0)
    if divisor_ell(c2, 1) != ell_e:
        raise AssertionError("generic stabilizers of E disagree between charts")
    branch = count_branch_points(c1, beta_, 1, -shape.c_x / shape.c_y)
    notes.append(f"strict transform meets E in {branch} point(s)")

    strata: list[Stratum] = []
    excluded = 0
    for chart, axis_exp, e_coord, name in ((c1, b_, 0, "chart 1"), (c2, a_, 1, "chart 2")):
        if axis_exp > 0:
            excluded += 1
            notes.append(f"{name} origin lies on a second divisor; it contributes 1")
            continue
        if chart.group.order > ell_e:
            ell_o = chart.group.character_order(e_coord)
            strata.append(Stratum(nu, ell_o, 1, f"{name} origin, type {chart.group.to_type()}"))
            excluded += 1
        else:
            notes.append(f"{name} origin is a smooth point of E; kept in the generic stratum")
    strata.insert(0, Stratum(nu, ell_e, 2 - branch - excluded, "generic points of E"))

    closed = None
    if space.is_trivial and a == 0 and b == 0 and shape.mult == 1:
        closed = one_pair_delta(shape.alpha, shape.beta)
    elif v != tuple(Fraction(0) for _ in v):
        notes.append(f"f is semi-invariant of weight {tuple(str(x) for x in v)}; exponents are rational")
    if not space.is_trivial and weights is None:
        notes.append("blow-up performed after normalizing the ambient")
    return PipelineResult(StrataSet(1, tuple(strata)), [c1, c2], closed, notes)


def binomial_germ(
    alpha: int, beta: int, a=0, b=0, mult: int = 1, space: QuotientType | None = None
) -> Germ:
    """x^a y^b (x^alpha + y^beta)^mult, keeping the factorization."""
    space = space if space is not None else QuotientType.trivial(2)
    inner = Germ({(alpha, 0): 1, (0, beta): 1}, 2)
    return Germ.from_factors((a, b), [(inner, mult)], 1, space)


# -- two Puiseux pairs ---------------------------------------------------------


def two_pairs_N(p1: int, q1: int, p2: int, q2: int) -> int:
    return p1 * q1 * q2 + p2 * q1 - p1 * q2


def pipeline_two_pairs(p1: int, q1: int, p2: int, q2: int) -> PipelineResult:
    """Plane branch y = x^(p1/q1) + x^(p2/q2) resolved by two weighted blow-ups."""
    if min(p1, q1, p2, q2) < 1:
        raise QZetaError("Puiseux data must be positive integers")
    if gcd(p1, q1) != 1 or gcd(p2, q2) != 1:
        raise QZetaError("p1/q1 and p2/q2 must be irreducible fractions")
    if gcd(q1, q2) != 1:
        raise QZetaError("gcd(q1, q2) > 1 is not supported")
    if p1 * q2 >= p2 * q1:
        raise QZetaError("need p1/q1 < p2/q2")
    N = two_pairs_N(p1, q1, p2, q2)
    m0 = p1 * q1 * q2
    strata = (
        Stratum(m0, 1, -1, "E0 minus three points"),
        Stratum(m0, q1, 1, f"E0 point of type ({q1}; -1, {p1})"),
        Stratum(m0, p1, 1, f"E0 point of type ({p1}; {q1}, -1)"),
        Stratum(q2 * N, 1, -1, "E1 minus three points"),
        Stratum(q2 * N, q2, 1, f"E1 point of type ({q2}; -1, {p2 * q1})"),
    )
    closed = delta_product({})
    for m, e in ((1, 1), (m0, 1), (q2 * N, 1), (p1 * q2, -1), (q1 * q2, -1), (N, -1)):
        closed = closed * CyclotomicProduct.factor(m, e, DELTA_FORM)
    notes = [
        f"first blow-up ({q1}, {p1}): E0 has multiplicity {m0}",
        f"second blow-up ({q2}, {p2 * q1 - p1 * q2}): E1 has multiplicity {q2 * N}",
        f"E0 and E1 meet at a point of type ({p2 * q1 - p1 * q2}; {q2}, -1); it contributes 1",
    ]
    return PipelineResult(StrataSet(1, strata), [], closed, notes)


# -- Brieskorn-Pham surfaces -----------------------------------------------------


def weighted_fermat_curve_chi(e1: int, e2: int, e3: int) -> Fraction:
    """chi of x^(e2 e3/e) + y^(e1 e3/e) + z^(e1 e2/e) = 0 in P^2(e1/e, e2/e, e3/e)."""
    e = gcd(e1, e2, e3)
    return Fraction(e1 + e2 + e3) - Fraction(e1 * e2 * e3, e)


def brieskorn_curve_chi_from_degree(p: int, q: int, r: int) -> Fraction:
    """chi(C) solved from deg Delta = (p-1)(q-1)(r-1) and the strata degrees."""
    e1, e2, e3 = gcd(q, r), gcd(p, r), gcd(p, q)
    e = gcd(p, q, r)
    k = e1 * e2 * e3
    mu = (p - 1) * (q - 1) * (r - 1)
    big = Fraction(e * p * q * r, k)
    rest = -1 - q * r - p * r - p * q + p + q + r
    # mu = big * (e1 + e2 + e3 - chi) + rest
    return e1 + e2 + e3 - (mu - rest) / big


def pipeline_brieskorn(p: int, q: int, r: int, *, bound: int = DEFAULT_ENUMERATION_BOUND) -> PipelineResult:
    """x^p + y^q + z^r resolved by the weighted blow-up with weights (e/k)(qr, pr, pq)."""
    if min(p, q, r) < 1:
        raise QZetaError("Brieskorn exponents must be positive")
    notes: list[str] = []
    if min(p, q, r) < 2:
        notes.append("an exponent below 2 makes the germ smooth; formulas applied as is")
    e1, e2, e3 = gcd(q, r), gcd(p, r), gcd(p, q)
    e = gcd(p, q, r)
    k = e1 * e2 * e3
    omega = (e * q * r // k, e * p * r // k, e * p * q // k)
    f = Germ({(p, 0, 0): 1, (0, q, 0): 1, (0, 0, r): 1}, 3)
    u1, u2, u3 = weighted_blowup(QuotientType.trivial(3), omega, f, bound=bound)[0]
    nu = f.order(omega)
    notes.append(f"weighted blow-up of type {omega}, exceptional multiplicity {nu}")

    # Lines at infinity: L0 = {x=0}, L1 = {y=0} seen in the third chart, L2 = {z=0} in the first.
    lines = [
        (u3, {0, 2}, 2, count_branch_points(u3, q, 1), "L0"),
        (u3, {1, 2}, 2, count_branch_points(u3, p, 0), "L1"),
        (u1, {0, 2}, 0, count_branch_points(u1, q, 1), "L2"),
    ]
    counts = tuple(c for *_, c, _ in lines)
    if counts != (e1, e2, e3):
        raise AssertionError(f"branch counts {counts} differ from gcds {(e1, e2, e3)}")
    chi_c = weighted_fermat_curve_chi(e1, e2, e3)
    notes.append(f"chi(C) = {chi_c}")
    strata = [Stratum(nu, divisor_ell(u3, 2), int(e1 + e2 + e3 - chi_c), "E minus lines and C")]
    for chart, zeros, coord, count, name in lines:
        strata.append(Stratum(nu, divisor_ell(chart, coord, zeros), -count, f"{name} minus {count + 2} points"))
    for chart, name in ((u1, "U1"), (u2, "U2"), (u3, "U3")):
        strata.append(
            Stratum(nu, chart.group.character_order(chart.index), 1, f"origin of {name}")
        )
    closed = delta_product({})
    for m, a in (
        (Fraction(e * p * q * r, k), k // e),
        (p, 1),
        (q, 1),
        (r, 1),
        (1, -1),
        (Fraction(q * r, e1), -e1),
        (Fraction(p * r, e2), -e2),
        (Fraction(p * q, e3), -e3),
    ):
        closed = closed * CyclotomicProduct.factor(m, a, DELTA_FORM)
    return PipelineResult(StrataSet(2, tuple(strata)), [u1, u2, u3], closed, notes)


# -- Yomdin-Le surfaces ------------------------------------------------------------


def chi_complement_unicuspidal(m: int, p: int, q: int) -> int:
    """chi(P^2 minus C) for a degree-m curve whose only singularity is a cusp x^q + y^p."""
    chi_curve = 3 * m - m * m + (p - 1) * (q - 1)
    return 3 - chi_curve


def yomdin_twist_route(m: int, k: int, p: int, q: int, chi_complement: int) -> CyclotomicProduct:
    """(t^m - 1)^chi / (t - 1) * Delta_P^k(t^(m+k)) with Delta_P the cusp x^q + y^p."""
    head = delta_product({m: chi_complement}) * CyclotomicProduct.factor(1, -1, DELTA_FORM)
    return head * subst_power(twist(one_pair_delta(p, q), k), m + k)


def pipeline_yomdin(m: int, k: int, p: int, q: int, chi_complement: int) -> PipelineResult:
    """z^(m+k) + h_m(x, y, z) whose projective curve has one cusp x^q + y^p."""
    if min(m, k) < 1:
        raise QZetaError("m and k must be positive")
    if min(p, q) < 2 or gcd(p, q) != 1:
        raise QZetaError("the cusp exponents p, q must be coprime and >= 2")
    k1, k2 = gcd(k, p), gcd(k, q)
    ell_ = Fraction(p * q * (m + k), k1 * k2)
    chi_d = weighted_fermat_curve_chi(k1, k2, 1)
    chi_s = 3 - (2 + 2 + 2 + chi_d) + k1 + k2 + 4
    strata = (
        Stratum(m, 1, chi_complement, "E0 minus C"),
        Stratum(ell_, 1, int(chi_s), "E1 minus lines and D"),
        Stratum(ell_, p // k1, -k2, f"E1 line with {k2} points of the strict transform"),
        Stratum(ell_, q // k2, -k1, f"E1 line with {k1} points of the strict transform"),
        Stratum(ell_, p * q // (k1 * k2), 1, "E1 vertex point"),
    )
    notes = [
        f"k1 = gcd(k, p) = {k1}, k2 = gcd(k, q) = {k2}",
        f"second blow-up weights ({k * p // (k1 * k2)}, {k * q // (k1 * k2)}, {p * q // (k1 * k2)})",
        f"chi(D) = {chi_d}, chi(S_l,1) = {chi_s}",
    ]
    closed = yomdin_twist_route(m, k, p, q, chi_complement)
    return PipelineResult(StrataSet(2, strata), [], closed, notes)
