"""Explicit infinite families of equiangular polyhedra.

* ``octglue``: chains of right-angled ideal octahedra glued black face to
  black face; exact volume ``m * V8``.
* ``p2k``: the square-diagonal line arrangement between two horizontal
  lines, rolled into a cylinder; all vertices 4-valent (ideal, pi/2).
* ``q2k``: a strip of the hexagonal tiling rolled into a cylinder; all
  vertices trivalent (ideal, pi/3).
* ``r2k``: the hexagonal strip with its quadrilateral boundary faces
  replaced by caps of pentagons and heptagons, giving a compact pi/2
  polyhedron whose faces all have at least 5 sides.

Lattice points use doubled integer coordinates, so every incidence is an
exact integer comparison.  P2k: ``(X, Y) = (2x, 2y)``.  Q2k and R2k:
``(X, s) = (2x, 2y / sqrt 3)``; row ``s`` holds the points with
``X = 3s`` (left type) and ``X = 3s + 2`` (right type) modulo 6.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .andreev import RealizabilityReport, check_pi2, check_pi3
from .bounds import BoundInterval, bounds_for
from .lobachevsky import V8
from .polyhedron import AbstractPolyhedron, AngleKind, build_from_face_cycles, orient_faces
from .solids import octahedron

FAMILIES = ("octglue", "p2k", "q2k", "r2k")


class ParameterTooSmall(ValueError):
    pass


class UnknownFamily(ValueError):
    pass


@dataclass(frozen=True)
class FamilyMember:
    polyhedron: AbstractPolyhedron
    family: str
    parameter: int
    expected: dict[str, int]
    exact_volume: float | None = None
    kind: AngleKind = AngleKind.PI2
    notes: dict = field(default_factory=dict)

    def check(self) -> RealizabilityReport:
        return check_pi3(self.polyhedron) if self.kind is AngleKind.PI3 else check_pi2(self.polyhedron)

    def bounds(self) -> BoundInterval:
        return bounds_for(self.polyhedron, self.kind)

    def counts_match(self) -> bool:
        p = self.polyhedron
        actual = {"n": p.n_vertices, "f": p.n_faces}
        return all(actual[key] == val for key, val in self.expected.items() if key in actual)


# -- octahedron chains -------------------------------------------------------

# In the octahedron from ``solids``, faces with an even number of "minus"
# axes are black.  The glued face is (0, 2, 4); the next chain link uses
# (1, 3, 4), which shares only vertex 4 with it.
_GLUE_FACE = (0, 2, 4)
_NEXT_FACE = (1, 3, 4)


def _merge_across(a: tuple[int, ...], b: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Amalgamate faces ``a`` (containing ``u -> v``) and ``b`` (containing
    ``v -> u``) by deleting their common edge."""
    i = a.index(v)
    path_a = a[i:] + a[:i]  # v ... u
    j = b.index(u)
    path_b = b[j:] + b[:j]  # u ... v
    return path_a + path_b[1:-1]


def glue_octahedra(m: int) -> FamilyMember:
    """``m`` right-angled ideal octahedra glued in a path along black faces.

    At every edge of a glued face the two white triangles meet at angle
    ``pi/2 + pi/2`` and merge into one face.
    """
    if m < 1:
        raise ParameterTooSmall(f"need m >= 1, got {m}")
    base = orient_faces(octahedron().faces)
    faces = [tuple(f) for f in base]
    n = 6
    attach = _GLUE_FACE  # black face of the newest octahedron to glue onto

    for _ in range(m - 1):
        a, b, c = _find_rotation(faces, attach)
        # new octahedron: 0 -> a, 2 -> c, 4 -> b reverses (0, 2, 4) onto (a, b, c)
        label = {0: a, 2: c, 4: b, 1: n, 3: n + 1, 5: n + 2}
        n += 3
        new_faces = [tuple(label[x] for x in f) for f in base]
        glued_old = (a, b, c)
        glued_new = _find_rotation(new_faces, (a, c, b))
        faces.remove(glued_old)
        new_faces.remove(glued_new)
        for u, v in ((a, b), (b, c), (c, a)):
            # the removed face held u -> v, so its old neighbour holds v -> u
            fa = next(f for f in faces if _has_dart(f, v, u))
            fb = next(f for f in new_faces if _has_dart(f, u, v))
            faces.remove(fa)
            new_faces.remove(fb)
            faces.append(_merge_across(fa, fb, v, u))
        faces.extend(new_faces)
        attach = tuple(label[x] for x in _NEXT_FACE)

    p = build_from_face_cycles(faces, label=AngleKind.PI2)
    expected = {"n": 3 * m + 3, "f": 3 * m + 5, "n_white": m + 3}
    return FamilyMember(p, "octglue", m, expected, exact_volume=m * V8)


def _has_dart(face: tuple[int, ...], u: int, v: int) -> bool:
    k = len(face)
    return any(face[i] == u and face[(i + 1) % k] == v for i in range(k))


def _find_rotation(faces: Iterable[tuple[int, ...]], cyc: tuple[int, ...]) -> tuple[int, ...]:
    k = len(cyc)
    rots = {cyc[i:] + cyc[:i] for i in range(k)}
    for f in faces:
        if f in rots:
            return f
    raise LookupError(f"no face equal to {cyc} up to rotation")


# -- square-diagonal cylinder ------------------------------------------------


def family_P2k(k: int) -> FamilyMember:
    """Right-angled ideal polyhedron from the lines ``y = 0``, ``y = 2k`` and
    ``y = +-x + z`` with ``x`` taken modulo ``2k``."""
    if k < 3:
        raise ParameterTooSmall(f"need k >= 3, got {k}")
    width, top = 4 * k, 4 * k

    def vid(x: int, y: int) -> int:
        return y * 2 * k + (x % width) // 2

    faces = []
    for cy in range(1, top):
        for cx in range(width):
            if (cx + cy) % 2:
                faces.append((vid(cx, cy - 1), vid(cx + 1, cy), vid(cx, cy + 1), vid(cx - 1, cy)))
    for x in range(0, width, 2):
        faces.append((vid(x + 2, 0), vid(x, 0), vid(x + 1, 1)))
        faces.append((vid(x, top), vid(x + 2, top), vid(x + 1, top - 1)))
    faces.append(tuple(vid(x, 0) for x in range(0, width, 2)))
    faces.append(tuple(vid(x, top) for x in range(width - 2, -1, -2)))

    p = build_from_face_cycles(orient_faces(faces), label=AngleKind.PI2)
    expected = {"n": 8 * k * k + 2 * k, "f": 8 * k * k + 2 * k + 2}
    return FamilyMember(p, "p2k", k, expected)


# -- hexagonal strip ---------------------------------------------------------


def _hex_indexer(k: int, first_row: int) -> Callable[[int, int], int]:
    width = 6 * k

    def vid(x: int, s: int) -> int:
        off = (x - 3 * s) % width
        if off % 6 not in (0, 2):
            raise ValueError(f"({x}, {s}) is not a lattice vertex")
        return (s - first_row) * 2 * k + 2 * (off // 6) + (off % 6) // 2

    return vid


def _hexagon(vid, x: int, t: int) -> tuple[int, ...]:
    """Hexagon whose bottom edge runs from ``(x, t)`` to ``(x + 2, t)``."""
    return (
        vid(x, t),
        vid(x + 2, t),
        vid(x + 3, t + 1),
        vid(x + 2, t + 2),
        vid(x, t + 2),
        vid(x - 1, t + 1),
    )


def family_Q2k(k: int) -> FamilyMember:
    """Ideal pi/3 polyhedron: the hexagonal tiling between ``y = 0`` and
    ``y = 2k sqrt 3`` with ``x`` taken modulo ``3k``."""
    if k < 2:
        raise ParameterTooSmall(f"need k >= 2, got {k}")
    width, top = 6 * k, 4 * k
    vid = _hex_indexer(k, 0)

    faces = []
    for t in range(0, top - 1):
        for j in range(k):
            faces.append(_hexagon(vid, 3 * t + 6 * j, t))
    for j in range(k):
        x = 6 * j + 3
        faces.append((vid(x - 1, 0), vid(x + 3, 0), vid(x + 2, 1), vid(x, 1)))
        y = top - 1
        faces.append((vid(x, y), vid(x + 2, y), vid(x + 3, top), vid(x - 1, top)))
    bottom = sorted({(x % width) for x in range(width) if (x % 6) in (0, 2)})
    faces.append(tuple(vid(x, 0) for x in bottom))
    faces.append(tuple(vid(x, top) for x in bottom))

    p = build_from_face_cycles(orient_faces(faces), label=AngleKind.PI3)
    expected = {"n": 8 * k * k + 2 * k, "f": 4 * k * k + k + 2}
    return FamilyMember(p, "q2k", k, expected, kind=AngleKind.PI3)


def family_R2k(k: int) -> FamilyMember:
    """Compact right-angled polyhedron built on the hexagonal strip.

    Rows 1 .. 4k-1 of the strip are kept.  Each end is closed by a cap: a
    ``2k``-gon ``v``, a ring of ``2k`` pentagons through spoke vertices
    ``s`` and outer vertices ``p``, and a ring alternating pentagons and
    heptagons joining ``p`` to the strip.  Every vertex is trivalent and
    every face has at least 5 sides.
    """
    if k <= 2:
        raise ParameterTooSmall(f"need k > 2, got {k}")
    top = 4 * k
    vid = _hex_indexer(k, 1)
    n_strip = (top - 1) * 2 * k
    faces = []
    for t in range(1, top - 2):
        for j in range(k):
            faces.append(_hexagon(vid, 3 * t + 6 * j, t))

    def cap(base: int, edge_row: int, inner_row: int) -> None:
        m = 2 * k

        def v(i):
            return base + i % m

        def s(i):
            return base + m + i % m

        def p(i):
            return base + 2 * m + i % m

        def g(i):
            i %= m
            return vid(6 * (i // 2) + 3 + 2 * (i % 2), edge_row)

        faces.append(tuple(v(i) for i in range(m)))
        for i in range(m):
            faces.append((v(i), v(i + 1), s(i + 1), p(i), s(i)))
            j = i // 2
            if i % 2 == 0:
                faces.append((p(i), s(i + 1), p(i + 1), g(i + 1), g(i)))
            else:
                faces.append(
                    (
                        p(i),
                        s(i + 1),
                        p(i + 1),
                        g(i + 1),
                        vid(6 * j + 8, inner_row),
                        vid(6 * j + 6, inner_row),
                        g(i),
                    )
                )

    cap(n_strip, 1, 2)
    cap(n_strip + 6 * k, top - 1, top - 2)

    p = build_from_face_cycles(orient_faces(faces), label=AngleKind.PI2)
    expected = {"n": 8 * k * k + 10 * k, "f": 4 * k * k + 5 * k + 2}
    return FamilyMember(p, "r2k", k, expected, notes={"construction": "pentagon-heptagon caps"})


GENERATORS: dict[str, Callable[[int], FamilyMember]] = {
    "octglue": glue_octahedra,
    "p2k": family_P2k,
    "q2k": family_Q2k,
    "r2k": family_R2k,
}


def family(name: str, parameter: int) -> FamilyMember:
    try:
        gen = GENERATORS[name.lower()]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}") from None
    return gen(parameter)


# -- bound trends ------------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticRow:
    parameter: int
    n: int
    lower: float
    upper: float

    @property
    def upper_per_vertex(self) -> float:
        return self.upper / self.n

    @property
    def lower_per_vertex(self) -> float:
        return self.lower / self.n


def asymptotic_report(tag: str, params: Iterable[int]) -> list[AsymptoticRow]:
    """Bounds per vertex along a family, one row per parameter."""
    rows = []
    for k in params:
        member = family(tag, k)
        b = member.bounds()
        rows.append(AsymptoticRow(k, member.polyhedron.n_vertices, b.lower, b.upper))
    return rows


def format_report(rows: Iterable[AsymptoticRow]) -> str:
    header = f"{'param':>5} {'N':>6} {'lower':>14} {'upper':>14} {'upper/N':>10} {'lower/N':>10}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.parameter:>5} {r.n:>6} {r.lower:>14.6f} {r.upper:>14.6f} "
            f"{r.upper_per_vertex:>10.6f} {r.lower_per_vertex:>10.6f}"
        )
    return "\n".join(lines)
