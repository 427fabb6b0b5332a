"""Two-sided volume bounds for equiangular polyhedra from combinatorial data.

Every bound is a rational combination of ``V8`` and ``V3``.  Terms keep
their exact coefficients as :class:`fractions.Fraction` so that ties
between candidate terms are decided exactly; floats appear only in the
final ``value``.

Case tags used by :func:`max_vertices_for_volume` and the CLI:
``ideal_pi2``, ``compact_pi2``, ``mixed_pi2`` and ``ideal_pi3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .andreev import RealizabilityReport, check_pi2, check_pi3
from .combinatorics import (
    FaceColoring,
    max_independent_set,
    trivalent_independence_floor,
    two_color_faces,
)
from .lobachevsky import V3, V8
from .polyhedron import AbstractPolyhedron, AngleKind

UNITS = {"V8": V8, "V3": V3}
CASES = ("ideal_pi2", "compact_pi2", "mixed_pi2", "ideal_pi3")

LOWER, UPPER = "lower", "upper"


class NotRealizable(ValueError):
    pass


class HasFiniteVertices(ValueError):
    pass


class HasIdealVertices(ValueError):
    pass


class WrongDispatch(ValueError):
    pass


class UnknownKind(ValueError):
    pass


class NegativeArea(ValueError):
    pass


@dataclass(frozen=True)
class BoundTerm:
    """One candidate bound: ``sum(coef * unit)``, clamped below at 0."""

    tag: str
    side: str
    coefficients: Mapping[str, Fraction]
    strict: bool
    clamped: bool = False

    @classmethod
    def make(cls, tag: str, side: str, strict: bool, **coefficients) -> "BoundTerm":
        coefs = {u: Fraction(c) for u, c in coefficients.items() if Fraction(c) != 0}
        clamped = sum(float(c) * UNITS[u] for u, c in coefs.items()) < 0
        return cls(tag, side, coefs, strict, clamped)

    @property
    def exact(self) -> Fraction | float:
        """Exact coefficient when the term uses one unit, otherwise the float value."""
        if self.clamped or not self.coefficients:
            return Fraction(0)
        if len(self.coefficients) == 1:
            return next(iter(self.coefficients.values()))
        return self.value

    @property
    def value(self) -> float:
        if self.clamped:
            return 0.0
        return math.fsum(float(c) * UNITS[u] for u, c in sorted(self.coefficients.items()))

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "side": self.side,
            "value": self.value,
            "strict": self.strict,
            "clamped": self.clamped,
            "coefficients": {u: str(c) for u, c in sorted(self.coefficients.items())},
        }


@dataclass(frozen=True)
class BoundInterval:
    case: str
    lower: float
    lower_strict: bool
    upper: float
    upper_strict: bool
    terms: tuple[BoundTerm, ...]
    data: Mapping[str, object] = field(default_factory=dict)

    @property
    def lower_terms(self) -> tuple[BoundTerm, ...]:
        return tuple(t for t in self.terms if t.side == LOWER)

    @property
    def upper_terms(self) -> tuple[BoundTerm, ...]:
        return tuple(t for t in self.terms if t.side == UPPER)

    def admits(self, volume: float) -> bool:
        """Whether ``volume`` is consistent with both bounds."""
        lo_ok = volume > self.lower if self.lower_strict else volume >= self.lower
        hi_ok = volume < self.upper if self.upper_strict else volume <= self.upper
        return lo_ok and hi_ok

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "lower": self.lower,
            "lower_strict": self.lower_strict,
            "upper": self.upper,
            "upper_strict": self.upper_strict,
            "terms": [t.to_dict() for t in self.terms],
            "data": dict(self.data),
        }


def _combine(case: str, terms: list[BoundTerm], data: dict) -> BoundInterval:
    lows = [t for t in terms if t.side == LOWER]
    ups = [t for t in terms if t.side == UPPER]
    lo = max(t.exact for t in lows)
    winners = [t for t in lows if t.exact == lo]
    hi = min(t.exact for t in ups)
    hi_winners = [t for t in ups if t.exact == hi]
    return BoundInterval(
        case=case,
        lower=winners[0].value,
        lower_strict=any(t.strict for t in winners),
        upper=hi_winners[0].value,
        upper_strict=any(t.strict for t in hi_winners),
        terms=tuple(terms),
        data=data,
    )


# -- area quantities ---------------------------------------------------------


def white_area(n: int, w: int) -> float:
    """Total area of the white faces, ``2 pi (N - |W|)``."""
    if w < 0 or n < w:
        raise NegativeArea(f"need n >= w >= 0, got n={n}, w={w}")
    return 2.0 * math.pi * (n - w)


def boundary_area(n_inf: int, n_f: int, f: int) -> float:
    """Area of the boundary of the orbifold obtained by doubling along all faces."""
    k = 8 * n_inf + 3 * n_f - 4 * f
    if k < 0:
        raise NegativeArea(f"8*{n_inf} + 3*{n_f} - 4*{f} = {k} < 0")
    return math.pi * k / 2.0


def miyamoto_lower(area: float) -> float:
    """Volume lower bound for an orbifold with totally geodesic boundary of this area."""
    return area * V8 / (4.0 * math.pi)


# -- bounds from counts ------------------------------------------------------


def ideal_pi2_interval(n: int, w: int) -> BoundInterval:
    """Bounds for an all-ideal right-angled polyhedron with ``n`` vertices and
    ``w`` white faces in the 2-coloring with at least as many black faces."""
    terms = [
        BoundTerm.make("ideal-pi2-vertex-lower", LOWER, False, V8=Fraction(n - 2, 4)),
        BoundTerm.make("white-face-area", LOWER, False, V8=Fraction(n - w, 2)),
        BoundTerm.make("black-face-area", LOWER, False, V8=Fraction(w - 2, 2)),
        BoundTerm.make("ideal-pi2-upper", UPPER, False, V8=Fraction(n - 4, 2)),
    ]
    return _combine("ideal_pi2", terms, {"n": n, "n_white": w})


def compact_pi2_interval(n: int, f: int) -> BoundInterval:
    """Bounds for a compact right-angled polyhedron (all vertices trivalent)."""
    a, b = Fraction(n - 8, 32), Fraction(3 * n - 4 * f, 32)
    if a != b:
        raise ArithmeticError(f"Euler bookkeeping broken: N-8={n - 8} but 3N-4F={3 * n - 4 * f}")
    terms = [
        BoundTerm.make("compact-pi2-lower", LOWER, False, V8=a),
        BoundTerm.make("compact-pi2-upper", UPPER, True, V3=Fraction(5 * (n - 10), 8)),
    ]
    return _combine("compact_pi2", terms, {"n": n, "f": f})


def mixed_pi2_interval(n_inf: int, n_f: int, f: int) -> BoundInterval:
    """Bounds for a right-angled polyhedron with both ideal and finite vertices."""
    a = Fraction(4 * n_inf + n_f - 8, 32)
    b = Fraction(8 * n_inf + 3 * n_f - 4 * f, 32)
    if a != b:
        raise ArithmeticError(f"Euler bookkeeping broken for (n_inf={n_inf}, n_f={n_f}, f={f})")
    terms = [
        BoundTerm.make("mixed-pi2-lower", LOWER, False, V8=a),
        BoundTerm.make("face-area-four-coloring", LOWER, False, V8=b),
        BoundTerm.make(
            "mixed-pi2-upper",
            UPPER,
            True,
            V8=Fraction(n_inf - 1, 2),
            V3=Fraction(5 * n_f, 8),
        ),
    ]
    return _combine("mixed_pi2", terms, {"n_inf": n_inf, "n_f": n_f, "f": f})


def ideal_pi3_interval(n: int, independent: int | None = None) -> BoundInterval:
    """Bounds for a polyhedron with all dihedral angles pi/3 and ``n`` vertices.

    ``independent`` is the size of any independent vertex set, if known.
    ``n == 4`` is the regular ideal tetrahedron, returned as a point interval.
    """
    if n == 4:
        terms = [
            BoundTerm.make("regular-ideal-tetrahedron", LOWER, False, V3=1),
            BoundTerm.make("regular-ideal-tetrahedron", UPPER, False, V3=1),
        ]
        return _combine("ideal_pi3", terms, {"n": n})
    terms = [BoundTerm.make("horoball-packing", LOWER, True, V3=Fraction(n, 3))]
    if independent is not None:
        terms.append(BoundTerm.make("independent-tetrahedra", LOWER, False, V3=independent))
    terms.append(BoundTerm.make("cubic-independence-ratio", LOWER, False, V3=trivalent_independence_floor(n)))
    terms.append(BoundTerm.make("ideal-pi3-upper", UPPER, False, V3=Fraction(3 * n - 14, 2)))
    data = {"n": n}
    if independent is not None:
        data["independent_set_size"] = independent
    return _combine("ideal_pi3", terms, data)


# -- bounds from polyhedra ---------------------------------------------------


def _require(report: RealizabilityReport) -> None:
    if not report.realizable:
        raise NotRealizable("failed conditions: " + ", ".join(report.failed_conditions))


def bounds_ideal_pi2(p: AbstractPolyhedron, coloring: FaceColoring | None = None) -> BoundInterval:
    report = check_pi2(p)
    _require(report)
    if report.n_finite:
        raise HasFiniteVertices(f"{report.n_finite} finite vertices; use compact or mixed bounds")
    coloring = coloring or two_color_faces(p)
    out = ideal_pi2_interval(p.n_vertices, coloring.n_white)
    return _with_data(out, n_black=coloring.n_black)


def bounds_compact_pi2(p: AbstractPolyhedron) -> BoundInterval:
    report = check_pi2(p)
    _require(report)
    if report.n_ideal:
        raise HasIdealVertices(f"{report.n_ideal} ideal vertices; use ideal or mixed bounds")
    return compact_pi2_interval(p.n_vertices, p.n_faces)


def bounds_mixed_pi2(p: AbstractPolyhedron) -> BoundInterval:
    report = check_pi2(p)
    _require(report)
    if not report.n_ideal or not report.n_finite:
        raise WrongDispatch("mixed bounds need both ideal and finite vertices")
    return mixed_pi2_interval(report.n_ideal, report.n_finite, p.n_faces)


def bounds_ideal_pi3(p: AbstractPolyhedron) -> BoundInterval:
    _require(check_pi3(p))
    if p.n_vertices == 4:
        return ideal_pi3_interval(4)
    mis = max_independent_set(p)
    out = ideal_pi3_interval(p.n_vertices, len(mis))
    return _with_data(out, independent_set_exact=mis.exact)


def _with_data(b: BoundInterval, **extra) -> BoundInterval:
    return BoundInterval(
        b.case, b.lower, b.lower_strict, b.upper, b.upper_strict, b.terms, {**b.data, **extra}
    )


def pi2_case(report: RealizabilityReport) -> str:
    if report.n_finite == 0:
        return "ideal_pi2"
    if report.n_ideal == 0:
        return "compact_pi2"
    return "mixed_pi2"


def bounds_for(p: AbstractPolyhedron, kind: AngleKind | str) -> BoundInterval:
    """Dispatch to the bound matching the angle kind and vertex classes."""
    kind = AngleKind.parse(kind)
    if kind is AngleKind.PI3:
        return bounds_ideal_pi3(p)
    report = check_pi2(p)
    _require(report)
    case = pi2_case(report)
    if case == "ideal_pi2":
        return bounds_ideal_pi2(p)
    if case == "compact_pi2":
        return compact_pi2_interval(p.n_vertices, p.n_faces)
    return mixed_pi2_interval(report.n_ideal, report.n_finite, p.n_faces)


# -- inversion ---------------------------------------------------------------


def _largest(ok, start: int) -> int:
    """Largest integer n with ok(n), given ok is monotone decreasing and
    ``start`` is a float estimate."""
    n = start
    while not ok(n):
        n -= 1
    while ok(n + 1):
        n += 1
    return n


def max_vertices_for_volume(v: float, kind: str) -> int:
    """Largest vertex count not excluded by the case's universal lower bound.

    The comparison uses the same floating-point expressions as the bound
    functions, so a polyhedron with more vertices always has a lower bound
    above ``v`` (or equal to it and strict).  Returns 0 when no count fits.
    """
    if kind not in ("ideal_pi2", "compact_pi2", "ideal_pi3"):
        raise UnknownKind(f"unknown case {kind!r}; expected ideal_pi2, compact_pi2 or ideal_pi3")
    if v < 0 or math.isnan(v):
        raise ValueError("volume must be nonnegative")
    if math.isinf(v):
        raise ValueError("volume must be finite")

    if kind == "ideal_pi2":
        n = _largest(lambda n: float(Fraction(n - 2, 4)) * V8 <= v, int(2 + 4 * v / V8))
        return max(n, 0)
    if kind == "compact_pi2":
        n = _largest(lambda n: float(Fraction(n - 8, 32)) * V8 <= v, int(8 + 32 * v / V8))
        return max(n, 0)

    def ok(n: int) -> bool:
        return float(Fraction(n, 3)) * V3 < v and trivalent_independence_floor(n) * V3 <= v

    if ok(5):
        return _largest(ok, max(5, int(8 * v / (3 * V3))))
    return 4 if V3 <= v else 0
