"""The Lobachevsky function and closed-form hyperbolic volumes built from it.

``lobachevsky(t) = -int_0^t log|2 sin s| ds``, odd and pi-periodic.  After
range reduction to ``[0, pi/2]`` it is evaluated as half the Clausen
function ``Cl2(2t)`` through the Bernoulli-type expansion

    Cl2(x) = x - x log x + sum_{k>=1} 2 zeta(2k) / (2k (2k+1)) (x / 2pi)^(2k) x

which converges geometrically (ratio at most 1/4) on ``0 <= x <= pi``.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache
from typing import Sequence

from scipy.special import zeta

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2
_TERMS = 32  # tail below 4**-32 relative to the leading terms
_CLAMP_TOL = 1e-12


class AngleOutOfRange(ValueError):
    pass


class NotAnOrthoscheme(ValueError):
    pass


class ConstraintOutOfRange(ValueError):
    pass


_COEFFS = tuple(
    2.0 * float(zeta(2 * k)) / (2 * k * (2 * k + 1)) / (2 * math.pi) ** (2 * k) for k in range(1, _TERMS + 1)
)


def _clausen2_reduced(x: float) -> float:
    """Cl2(x) for 0 <= x <= pi."""
    if x == 0.0:
        return 0.0
    x2 = x * x
    acc = 0.0
    power = x2
    for c in _COEFFS:
        term = c * power
        acc += term
        if term < 1e-18:
            break
        power *= x2
    return x - x * math.log(x) + acc * x


def lobachevsky(theta: float) -> float:
    """Lobachevsky function, accurate to about 1e-15 absolute."""
    if theta < 0:
        return -lobachevsky(-theta)
    t = math.fmod(theta, math.pi)
    if t > HALF_PI:
        return -0.5 * _clausen2_reduced(2.0 * (math.pi - t))
    return 0.5 * _clausen2_reduced(2.0 * t)


@lru_cache(maxsize=None)
def constant_V8() -> float:
    """Volume of the regular ideal octahedron, ``8 lobachevsky(pi/4)``."""
    return 8.0 * lobachevsky(math.pi / 4)


@lru_cache(maxsize=None)
def constant_V3() -> float:
    """Volume of the regular ideal tetrahedron, ``2 lobachevsky(pi/6)``."""
    return 2.0 * lobachevsky(math.pi / 6)


V8 = constant_V8()
V3 = constant_V3()


def _clamp(value: float, what: str) -> float:
    if value < 0:
        if value > -_CLAMP_TOL:
            logger.debug("clamped %s = %.3e to 0", what, value)
            return 0.0
        raise ArithmeticError(f"{what} evaluated to negative volume {value!r}")
    return value


def _check_closed(angle: float, name: str = "angle") -> None:
    if not (0.0 <= angle <= HALF_PI):
        raise AngleOutOfRange(f"{name} = {angle!r} is outside [0, pi/2]")


def _check_open(angle: float, name: str) -> None:
    if not (0.0 < angle < HALF_PI):
        raise AngleOutOfRange(f"{name} = {angle!r} is outside (0, pi/2)")


def cone_on_ideal_polygon(angles: Sequence[float]) -> float:
    """Volume of the cone from an ideal point over an ideal polygon.

    ``angles`` are the dihedral angles between the polygon's plane and the
    vertical faces of the cone.
    """
    for i, a in enumerate(angles):
        _check_closed(a, f"angles[{i}]")
    return _clamp(math.fsum(lobachevsky(a) for a in angles), "cone volume")


def two_ideal_vertex_tet_volume(alpha: float) -> float:
    """Volume of the tetrahedron with two ideal and two finite vertices,
    three right dihedral angles and angle ``alpha`` along the ideal edge."""
    _check_closed(alpha, "alpha")
    return _clamp(0.5 * lobachevsky(HALF_PI - alpha), "tetrahedron volume")


def orthoscheme_vertex_types(alpha: float, beta: float, gamma: float, tol: float = 1e-12) -> tuple[str, str]:
    """Type of the two vertices that can leave hyperbolic space.

    The vertex opposite the ``alpha`` face is finite, ideal or hyperideal as
    ``sin^2 gamma - cos^2 beta`` is positive, zero or negative; the vertex
    opposite the ``gamma`` face likewise with ``alpha``.
    """

    def kind(x: float) -> str:
        return "ideal" if abs(x) <= tol else ("finite" if x > 0 else "hyperideal")

    cb2 = math.cos(beta) ** 2
    return kind(math.sin(gamma) ** 2 - cb2), kind(math.sin(alpha) ** 2 - cb2)


def orthoscheme_volume(alpha: float, beta: float, gamma: float) -> float:
    """Volume of the orthoscheme with essential dihedral angles ``alpha, beta, gamma``.

    The Gram determinant ``sin^2 alpha sin^2 gamma - cos^2 beta`` must be
    non-positive.  Covers compact orthoschemes and those with ideal
    vertices (``beta = pi/2 - alpha`` or ``beta = pi/2 - gamma``).  If
    :func:`orthoscheme_vertex_types` reports a hyperideal vertex the
    expression is still evaluated, but it is no longer the volume of a
    finite-volume tetrahedron.
    """
    _check_open(alpha, "alpha")
    _check_open(beta, "beta")
    _check_open(gamma, "gamma")
    gram = math.sin(alpha) ** 2 * math.sin(gamma) ** 2 - math.cos(beta) ** 2
    if gram > 0:
        raise NotAnOrthoscheme(f"Gram determinant {gram:.3e} > 0: not a hyperbolic orthoscheme")
    delta = math.atan2(math.sqrt(-gram), math.cos(alpha) * math.cos(gamma))
    L = lobachevsky
    value = 0.25 * (
        L(alpha + delta)
        - L(alpha - delta)
        + L(gamma + delta)
        - L(gamma - delta)
        - L(HALF_PI - beta + delta)
        + L(HALF_PI - beta - delta)
        + 2.0 * L(HALF_PI - delta)
    )
    return _clamp(value, "orthoscheme volume")


def ideal_orthoscheme_volume(alpha: float, gamma: float) -> float:
    """Volume of the orthoscheme ``T(alpha, pi/2 - alpha, gamma)`` with one ideal vertex."""
    _check_open(alpha, "alpha")
    _check_open(gamma, "gamma")
    L = lobachevsky
    value = 0.25 * (L(alpha + gamma) + L(alpha - gamma) + 2.0 * L(HALF_PI - alpha))
    return _clamp(value, "orthoscheme volume")


def vertex_volume_cap(m: int, c: float) -> float:
    """Largest possible ``1/2 sum lobachevsky(pi/2 - a_i)`` over ``m`` angles
    in ``[0, pi/2]`` summing to ``c``; attained when all angles equal ``c/m``."""
    if int(m) != m or m < 1:
        raise ConstraintOutOfRange(f"m must be a positive integer, got {m!r}")
    if not (0.0 <= c <= m * HALF_PI):
        raise ConstraintOutOfRange(f"angle sum {c!r} is outside [0, {m}*pi/2]")
    return _clamp(0.5 * m * lobachevsky(HALF_PI - c / m), "vertex volume cap")
