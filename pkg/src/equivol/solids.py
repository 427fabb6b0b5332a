"""Face lists for the Platonic solids, classical infinite families, and
local operations for growing random polyhedra."""

from __future__ import annotations

import random

from .polyhedron import PolyhedronError, AbstractPolyhedron, build_from_face_cycles, dual_polyhedron, orient_faces, rotation_system


def tetrahedron() -> AbstractPolyhedron:
    return build_from_face_cycles([(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)])


def cube() -> AbstractPolyhedron:
    """Unit cube, vertex ``v`` at ``(v & 1, v >> 1 & 1, v >> 2 & 1)``.

    Faces 0 and 1 are bottom and top; faces 2-5 are the lateral faces.
    """
    return build_from_face_cycles(
        [
            (0, 2, 3, 1),
            (4, 5, 7, 6),
            (0, 1, 5, 4),
            (1, 3, 7, 5),
            (3, 2, 6, 7),
            (2, 0, 4, 6),
        ]
    )


def octahedron() -> AbstractPolyhedron:
    """Vertices +x, -x, +y, -y, +z, -z; one face per octant."""
    faces = []
    for sx in (0, 1):
        for sy in (2, 3):
            for sz in (4, 5):
                f = (sx, sy, sz)
                odd = (sx + sy + sz - 6) % 2 == 1
                faces.append(tuple(reversed(f)) if odd else f)
    return build_from_face_cycles(faces)


def icosahedron() -> AbstractPolyhedron:
    faces = []
    for i in range(5):
        u, u1 = 1 + i, 1 + (i + 1) % 5
        low, low1 = 6 + i, 6 + (i + 1) % 5
        faces += [(0, u, u1), (u, low, u1), (u1, low, low1), (11, low1, low)]
    return build_from_face_cycles(faces)


def dodecahedron() -> AbstractPolyhedron:
    return dual_polyhedron(icosahedron())


def prism(n: int) -> AbstractPolyhedron:
    """``n``-gonal prism: faces 0 and 1 are the caps, then the lateral quadrilaterals."""
    if n < 3:
        raise ValueError("prism needs n >= 3")
    faces = [tuple(reversed(range(n))), tuple(range(n, 2 * n))]
    faces += [(i, (i + 1) % n, n + (i + 1) % n, n + i) for i in range(n)]
    return build_from_face_cycles(faces)


def antiprism(n: int) -> AbstractPolyhedron:
    """``n``-gonal antiprism: faces 0 and 1 are the caps, then ``2n`` triangles."""
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    faces = [tuple(reversed(range(n))), tuple(range(n, 2 * n))]
    for i in range(n):
        j = (i + 1) % n
        faces += [(i, j, n + i), (j, n + j, n + i)]
    return build_from_face_cycles(faces)


def pyramid(n: int) -> AbstractPolyhedron:
    if n < 3:
        raise ValueError("pyramid needs n >= 3")
    faces = [tuple(reversed(range(n)))]
    faces += [(i, (i + 1) % n, n) for i in range(n)]
    return build_from_face_cycles(faces)


def truncate(p: AbstractPolyhedron) -> AbstractPolyhedron:
    """Cut off every vertex.  The result is trivalent with ``2E`` vertices;
    new vertex ``(v, w)`` sits on edge ``vw`` next to ``v``."""
    ids: dict[tuple[int, int], int] = {}

    def node(v: int, w: int) -> int:
        return ids.setdefault((v, w), len(ids))

    faces = []
    for f in orient_faces(p.faces):
        k = len(f)
        cyc = []
        for i in range(k):
            cyc += [node(f[i], f[i - 1]), node(f[i], f[(i + 1) % k])]
        faces.append(cyc)
    for v, rot in enumerate(rotation_system(p)):
        faces.append([node(v, w) for w in rot])
    return build_from_face_cycles(orient_faces(faces))


def truncate_vertex(p: AbstractPolyhedron, v: int) -> AbstractPolyhedron:
    """Cut off one vertex, replacing it by a face with ``deg(v)`` new vertices."""
    rot = rotation_system(p)[v]
    ids = {w: (v if i == 0 else p.n_vertices + i - 1) for i, w in enumerate(rot)}
    faces = []
    for f in orient_faces(p.faces):
        if v not in f:
            faces.append(f)
            continue
        i = f.index(v)
        k = len(f)
        a, b = f[i - 1], f[(i + 1) % k]
        faces.append(f[:i] + (ids[a], ids[b]) + f[i + 1 :])
    faces.append(tuple(ids[w] for w in rot))
    return build_from_face_cycles(orient_faces(faces))


def add_diagonal(p: AbstractPolyhedron, f: int, i: int, j: int) -> AbstractPolyhedron:
    """Split face ``f`` by a new edge between its ``i``-th and ``j``-th corners."""
    face = p.faces[f]
    i, j = sorted((i % len(face), j % len(face)))
    u, w = face[i], face[j]
    if w in p.adjacency[u]:
        raise PolyhedronError(f"vertices {u} and {w} are already adjacent", element=(u, w))
    faces = [g for k, g in enumerate(p.faces) if k != f]
    faces += [face[i : j + 1], face[j:] + face[: i + 1]]
    return build_from_face_cycles(orient_faces(faces))


def insert_chord(p: AbstractPolyhedron, f: int, i: int, j: int) -> AbstractPolyhedron:
    """Subdivide edges ``i`` and ``j`` of face ``f`` (edge ``i`` runs from
    corner ``i`` to corner ``i + 1``) and join the two new vertices.
    Preserves trivalence."""
    face = p.faces[f]
    k = len(face)
    i, j = sorted((i % k, j % k))
    if i == j:
        raise PolyhedronError("chord needs two distinct edges", element=f)
    x, y = p.n_vertices, p.n_vertices + 1
    ex = (face[i], face[(i + 1) % k])
    ey = (face[j], face[(j + 1) % k])
    faces = []
    for g_idx, g in enumerate(p.faces):
        if g_idx == f:
            continue
        faces.append(_subdivide(_subdivide(g, ex, x), ey, y))
    rolled = face[i + 1 :] + face[: i + 1]  # starts after x
    cut = (j - i) % k  # position of ey's first corner in ``rolled``, minus one
    faces.append((x,) + rolled[:cut] + (y,))
    faces.append((y,) + rolled[cut:] + (x,))
    return build_from_face_cycles(orient_faces(faces))


def _subdivide(face: tuple[int, ...], edge: tuple[int, int], new: int) -> tuple[int, ...]:
    k = len(face)
    for i in range(k):
        a, b = face[i], face[(i + 1) % k]
        if {a, b} == set(edge):
            return face[: i + 1] + (new,) + face[i + 1 :]
    return tuple(face)


def random_polyhedron(rng: random.Random, max_vertices: int = 40, steps: int | None = None) -> AbstractPolyhedron:
    """Grow a polyhedron from a random seed solid by random local operations.

    Operations that would leave the class of polyhedra (or exceed
    ``max_vertices``) are skipped, so the result is always valid.
    """
    seeds = [
        tetrahedron,
        cube,
        octahedron,
        dodecahedron,
        icosahedron,
        lambda: prism(rng.randint(3, 8)),
        lambda: antiprism(rng.randint(3, 8)),
        lambda: pyramid(rng.randint(3, 8)),
    ]
    p = rng.choice(seeds)()
    steps = rng.randint(0, 6) if steps is None else steps
    for _ in range(steps):
        op = rng.random()
        try:
            if op < 0.35:
                q = truncate_vertex(p, rng.randrange(p.n_vertices))
            elif op < 0.75:
                f = rng.randrange(p.n_faces)
                k = len(p.faces[f])
                q = insert_chord(p, f, rng.randrange(k), rng.randrange(k))
            else:
                f = rng.randrange(p.n_faces)
                k = len(p.faces[f])
                if k < 4:
                    continue
                i = rng.randrange(k)
                q = add_diagonal(p, f, i, i + rng.randint(2, k - 2))
        except PolyhedronError:
            continue
        if q.n_vertices <= max_vertices:
            p = q
    return p


PLATONIC = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "icosahedron": icosahedron,
}
