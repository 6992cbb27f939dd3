"""
Strata of an embedded Q-resolution and the invariants they determine.

A stratum records the exponent ``m`` of the exceptional divisor at its
points, the order ``ell`` of the divisor-coordinate character of the local
group there, and its Euler characteristic ``chi``.  Only strata lying on
exactly one divisor are represented; those contribute ``(1 - t^(m/ell))^chi``
to the monodromy zeta function, the others contribute 1.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonIntegerExponent, NotAPolynomial, QZetaError
from .qspace import QuotientType, ell
from .zeta import (
    CyclotomicProduct,
    IntPolynomial,
    Z_FORM,
    expand,
    format_rational,
    lefschetz,
    milnor,
    parse_rational,
    series_check,
    to_delta,
    z_degree,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Stratum:
    m: Fraction
    ell: int = 1
    chi: int = 0
    label: str = ""

    def __post_init__(self):
        m = Fraction(self.m)
        if m <= 0:
            raise QZetaError(f"stratum multiplicity must be positive, got {m}")
        if int(self.ell) != self.ell or self.ell < 1:
            raise QZetaError(f"ell must be a positive integer, got {self.ell}")
        if int(self.chi) != self.chi:
            raise QZetaError(f"chi must be an integer, got {self.chi}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "ell", int(self.ell))
        object.__setattr__(self, "chi", int(self.chi))

    @property
    def multiplicity(self) -> Fraction:
        """m(D, q) = m / ell."""
        return self.m / self.ell

    def to_json(self) -> dict:
        out = {"m": format_rational(self.m), "ell": self.ell, "chi": self.chi}
        if self.label:
            out["label"] = self.label
        return out

    @classmethod
    def from_json(cls, rec: Mapping) -> Stratum:
        has_m, has_ratio = "m" in rec, "m_over_ell" in rec
        if has_m == has_ratio:
            raise QZetaError("each stratum needs exactly one of 'm' and 'm_over_ell'")
        if "chi" not in rec:
            raise QZetaError("stratum record is missing 'chi'")
        chi = rec["chi"]
        if not isinstance(chi, int) or isinstance(chi, bool):
            raise QZetaError(f"'chi' must be an integer, got {chi!r}")
        label = str(rec.get("label", ""))
        if has_ratio:
            if "ell" in rec:
                raise QZetaError("'ell' is not allowed alongside 'm_over_ell'")
            return cls(parse_rational(rec["m_over_ell"]), 1, chi, label)
        ell_ = rec.get("ell", 1)
        if not isinstance(ell_, int) or isinstance(ell_, bool):
            raise QZetaError(f"'ell' must be an integer, got {ell_!r}")
        return cls(parse_rational(rec["m"]), ell_, chi, label)


@dataclass(frozen=True)
class StrataSet:
    """Strata of a hypersurface germ of dimension ``n`` (ambient dimension n+1)."""

    n: int
    strata: tuple[Stratum, ...] = ()
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise QZetaError(f"n must be a positive integer, got {self.n}")
        object.__setattr__(self, "strata", tuple(self.strata))

    def __iter__(self):
        return iter(self.strata)

    def __len__(self):
        return len(self.strata)

    def to_json(self) -> dict:
        return {"n": self.n, "strata": [s.to_json() for s in self.strata]}

    @classmethod
    def from_json(cls, data: Mapping) -> StrataSet:
        if not isinstance(data, Mapping) or "n" not in data or "strata" not in data:
            raise QZetaError("strata document needs 'n' and 'strata' fields")
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise QZetaError(f"'n' must be an integer, got {n!r}")
        strata, warnings = [], []
        for i, rec in enumerate(data["strata"]):
            # Extension: a stratum on two or more divisors contributes 1 and is dropped.
            if int(rec.get("divisors", 1)) >= 2:
                msg = f"stratum {i} lies on {rec['divisors']} divisors and was ignored"
                log.warning(msg)
                warnings.append(msg)
                continue
            strata.append(Stratum.from_json(rec))
        return cls(n, tuple(strata), tuple(warnings))

    @classmethod
    def loads(cls, text: str) -> StrataSet:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QZetaError(f"invalid strata JSON: {exc}") from None
        return cls.from_json(data)


def local_monomial_zeta(q: QuotientType, exponents: Mapping[int, int]) -> CyclotomicProduct:
    """Zeta function of x_j1^m1 ... x_jk^mk on X(d; A) at the origin.

    ``exponents`` maps coordinate index to positive exponent.  One factor
    gives 1 - t^(m/ell_j); two or more give 1.
    """
    if not exponents:
        raise QZetaError("need at least one exponent")
    if any(m <= 0 for m in exponents.values()):
        raise QZetaError("exponents must be positive")
    if len(exponents) >= 2:
        return CyclotomicProduct.one()
    (j, m), = exponents.items()
    return CyclotomicProduct.factor(Fraction(m, ell(q, j)), 1)


def zeta_from_strata(s: StrataSet | Iterable[Stratum]) -> CyclotomicProduct:
    """prod over strata of (1 - t^(m/ell))^chi."""
    factors: dict[Fraction, int] = {}
    for st in s:
        key = st.multiplicity
        factors[key] = factors.get(key, 0) + st.chi
    return CyclotomicProduct(factors, 1, Z_FORM)


@dataclass
class InvariantReport:
    n: int
    zeta: CyclotomicProduct
    mu: Fraction
    chi_fiber: Fraction
    delta: CyclotomicProduct | None = None
    delta_expanded: IntPolynomial | None = None
    lambda_table: list[tuple[int, int]] | None = None
    series_ok: bool | None = None
    absent: dict[str, str] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "zeta": self.zeta.to_json(),
            "delta": self.delta.to_json() if self.delta is not None else None,
            "mu": format_rational(self.mu),
            "chi_fiber": format_rational(self.chi_fiber),
        }
        if self.delta_expanded is not None:
            out["delta_expanded"] = {
                "coefficients": list(self.delta_expanded.coeffs),
                "text": self.delta_expanded.to_str(),
                "degree": self.delta_expanded.degree,
            }
        if self.lambda_table is not None:
            out["lefschetz"] = [{"k": k, "value": v} for k, v in self.lambda_table]
        if self.series_ok is not None:
            out["series_check"] = self.series_ok
        if self.absent:
            out["absent"] = dict(self.absent)
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out

    def to_text(self) -> str:
        lines = [
            f"Z(t)     = {self.zeta}",
            f"Delta(t) = {self.delta if self.delta is not None else '(omitted)'}",
        ]
        if self.delta_expanded is not None:
            lines.append(f"         = {self.delta_expanded}")
        lines.append(f"mu       = {format_rational(self.mu)}")
        lines.append(f"chi(F)   = {format_rational(self.chi_fiber)}")
        if self.lambda_table is not None:
            lines.append("Lefschetz numbers:")
            lines.extend(f"  Lambda(h^{k}) = {v}" for k, v in self.lambda_table)
        if self.series_ok is not None:
            lines.append(f"series check: {'ok' if self.series_ok else 'FAILED'}")
        for key, reason in self.absent.items():
            lines.append(f"note: {key} omitted ({reason})")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def report(
    s: StrataSet,
    *,
    expand_delta: bool = False,
    lefschetz_range: Sequence[int] | None = None,
    series_order: int | None = None,
) -> InvariantReport:
    """Evaluate every invariant the strata determine.

    Fields needing integer keys (Delta, its expansion, Lambda, the series
    check) are left out with a reason when the keys are rational.
    """
    z = zeta_from_strata(s)
    chi = z_degree(z)
    rep = InvariantReport(s.n, z, milnor(z, s.n), chi, warnings=list(s.warnings))
    if not z.has_integer_keys():
        reason = "NonIntegerExponent: zeta function has rational exponents"
        rep.absent["delta"] = reason
        if expand_delta:
            rep.absent["delta_expanded"] = reason
        if lefschetz_range is not None:
            rep.absent["lefschetz"] = reason
        if series_order is not None:
            rep.absent["series_check"] = reason
        return rep
    rep.delta = to_delta(z, s.n)
    if expand_delta:
        try:
            rep.delta_expanded = expand(rep.delta)
        except (NotAPolynomial, NonIntegerExponent) as exc:
            rep.absent["delta_expanded"] = f"{type(exc).__name__}: {exc}"
    if lefschetz_range is not None:
        rep.lambda_table = [(k, lefschetz(z, k)) for k in lefschetz_range]
    if series_order is not None:
        rep.series_ok = series_check(z, series_order)
    return rep
