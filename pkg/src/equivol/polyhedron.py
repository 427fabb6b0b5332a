"""Abstract polyhedra as combinatorial maps on the sphere.

A polyhedron is given by its faces, each a cyclic sequence of vertex
indices.  Edges are the unordered vertex pairs that appear consecutively
in some face.  Construction validates the cell-complex conditions
(every edge in exactly two faces, simple faces, Euler characteristic 2,
3-connected 1-skeleton), so every :class:`AbstractPolyhedron` that exists
is a valid abstract polyhedron.
"""

from __future__ import annotations

import enum
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

Edge = tuple[int, int]


class AngleKind(str, enum.Enum):
    """The two equiangular labelings that can be realized."""

    PI2 = "pi2"
    PI3 = "pi3"

    @classmethod
    def parse(cls, value: "AngleKind | str") -> "AngleKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown angle kind {value!r}; expected 'pi2' or 'pi3'") from None


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------


class PolyhedronError(ValueError):
    """Base class for invalid face data.  ``element`` names the culprit."""

    def __init__(self, message: str, element=None):
        super().__init__(message)
        self.element = element


class MalformedFaces(PolyhedronError):
    pass


class EdgeNotShared(PolyhedronError):
    pass


class NotSimple(PolyhedronError):
    pass


class EulerViolation(PolyhedronError):
    pass


class NotThreeConnected(PolyhedronError):
    pass


class TooSmall(NotThreeConnected):
    pass


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def face_edges(face: Sequence[int]) -> list[Edge]:
    """Edges of a face cycle, in traversal order."""
    k = len(face)
    return [edge_key(face[i], face[(i + 1) % k]) for i in range(k)]


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def _has_articulation_point(adj: Sequence[Iterable[int]], removed: int) -> bool:
    """True if ``adj`` minus vertex ``removed`` is disconnected or has a cut vertex.

    Iterative Tarjan low-link search.
    """
    n = len(adj)
    start = 0 if removed != 0 else 1
    disc = [-1] * n
    low = [0] * n
    disc[removed] = -2
    timer = 0
    disc[start] = low[start] = timer
    timer += 1
    root_children = 0
    stack = [(start, -1, iter(adj[start]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed or w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                if v == start:
                    root_children += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent != -1:
            low[parent] = min(low[parent], low[v])
            if parent != start and low[v] >= disc[parent]:
                return True
    if root_children > 1:
        return True
    # vertices never reached: G - removed is disconnected
    return any(d == -1 for d in disc)


def is_three_connected(adjacency: Sequence[Iterable[int]] | Mapping[int, Iterable[int]]) -> bool:
    """Decide whether a simple graph is 3-connected.

    ``adjacency`` maps each vertex ``0..n-1`` to its neighbours.  The graph is
    3-connected iff deleting any single vertex leaves a 2-connected graph,
    which is checked with one articulation-point sweep per deleted vertex.

    Raises
    ------
    TooSmall
        If the graph has fewer than 4 vertices.
    """
    if isinstance(adjacency, Mapping):
        adj = [list(adjacency[v]) for v in range(len(adjacency))]
    else:
        adj = [list(nbrs) for nbrs in adjacency]
    n = len(adj)
    if n < 4:
        raise TooSmall(f"3-connectivity needs at least 4 vertices, got {n}", element=n)
    return not any(_has_articulation_point(adj, u) for u in range(n))


def separating_pair(adjacency: Sequence[Iterable[int]]) -> tuple[int, int] | None:
    """Return a vertex pair whose removal disconnects the graph, if one exists.

    Used only to name the offending element in error messages.
    """
    adj = [set(nbrs) for nbrs in adjacency]
    n = len(adj)
    for u in range(n):
        for v in range(u + 1, n):
            rest = [w for w in range(n) if w not in (u, v)]
            if not rest:
                continue
            seen = {rest[0]}
            queue = deque([rest[0]])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen and y != u and y != v:
                        seen.add(y)
                        queue.append(y)
            if len(seen) < len(rest):
                return (u, v)
    return None


# ---------------------------------------------------------------------------
# The polyhedron
# ---------------------------------------------------------------------------


class DegreeProfile(NamedTuple):
    vertex: Counter
    face: Counter


@dataclass(frozen=True)
class AbstractPolyhedron:
    """A validated abstract polyhedron.

    Use :func:`build_from_face_cycles` rather than the constructor; the
    dataclass itself performs no validation.
    """

    vertex_count: int
    faces: tuple[tuple[int, ...], ...]
    label: AngleKind | None = None

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(sorted({e for f in self.faces for e in face_edges(f)}))

    @cached_property
    def edge_faces(self) -> dict[Edge, tuple[int, int]]:
        """Map each edge to the (sorted) pair of faces containing it."""
        inc: dict[Edge, list[int]] = defaultdict(list)
        for i, f in enumerate(self.faces):
            for e in face_edges(f):
                inc[e].append(i)
        return {e: tuple(sorted(fs)) for e, fs in inc.items()}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbrs)

    @cached_property
    def face_vertex_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(f) for f in self.faces)

    @property
    def n_vertices(self) -> int:
        return self.vertex_count

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def faces_around_vertex(self, v: int) -> tuple[int, ...]:
        """Faces containing ``v`` in cyclic order (consecutive faces share an edge at ``v``)."""
        start = next(i for i, s in enumerate(self.face_vertex_sets) if v in s)
        f = self.faces[start]
        w = f[(f.index(v) + 1) % len(f)]
        order = [start]
        current = start
        while True:
            a, b = self.edge_faces[edge_key(v, w)]
            current = b if a == current else a
            if current == start:
                return tuple(order)
            order.append(current)
            g = self.faces[current]
            j = g.index(v)
            prev, nxt = g[j - 1], g[(j + 1) % len(g)]
            w = prev if nxt == w else nxt

    def with_label(self, label: AngleKind | str | None) -> "AbstractPolyhedron":
        lab = None if label is None else AngleKind.parse(label)
        return AbstractPolyhedron(self.vertex_count, self.faces, lab)

    def to_json_dict(self) -> dict:
        return {"faces": [list(f) for f in self.faces]}


def build_from_face_cycles(
    faces: Iterable[Sequence[int]],
    label: AngleKind | str | None = None,
) -> AbstractPolyhedron:
    """Validate face cycles and return the polyhedron they describe.

    Parameters
    ----------
    faces
        Cyclic vertex sequences with dense, 0-based integer vertices.
    label
        Optional equiangular labeling carried along with the polyhedron.

    Raises
    ------
    MalformedFaces
        Non-integer or negative vertices, a face with fewer than 3 vertices,
        or vertex indices with gaps.
    NotSimple
        A face visits a vertex twice.
    EdgeNotShared
        Some edge lies in a number of faces other than 2.
    EulerViolation
        ``V - E + F != 2``.
    NotThreeConnected
        The 1-skeleton has fewer than 4 vertices or a separating vertex pair.
    """
    cycles: list[tuple[int, ...]] = []
    for i, f in enumerate(faces):
        cyc = tuple(f)
        if any(isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in cyc):
            raise MalformedFaces(f"face {i} has a non-integer or negative vertex: {list(cyc)}", element=i)
        if len(cyc) < 3:
            raise MalformedFaces(f"face {i} has fewer than 3 vertices: {list(cyc)}", element=i)
        if len(set(cyc)) != len(cyc):
            dup = next(v for v, c in Counter(cyc).items() if c > 1)
            raise NotSimple(f"face {i} visits vertex {dup} more than once", element=(i, dup))
        cycles.append(cyc)
    if not cycles:
        raise MalformedFaces("no faces given")

    used = {v for f in cycles for v in f}
    n = max(used) + 1
    if len(used) != n:
        missing = min(set(range(n)) - used)
        raise MalformedFaces(f"vertex indices are not contiguous: {missing} is unused", element=missing)

    count: Counter = Counter(e for f in cycles for e in face_edges(f))
    for e in sorted(count):
        if count[e] != 2:
            raise EdgeNotShared(f"edge {e} lies in {count[e]} face(s), expected 2", element=e)

    n_edges, n_faces = len(count), len(cycles)
    chi = n - n_edges + n_faces
    if chi != 2:
        raise EulerViolation(f"V - E + F = {n} - {n_edges} + {n_faces} = {chi}, expected 2", element=chi)

    poly = AbstractPolyhedron(n, tuple(cycles), None if label is None else AngleKind.parse(label))
    if n < 4:
        raise NotThreeConnected(f"only {n} vertices; a polyhedron needs at least 4", element=n)
    if not is_three_connected(poly.adjacency):
        pair = separating_pair(poly.adjacency)
        raise NotThreeConnected(f"vertices {pair} separate the 1-skeleton", element=pair)
    return poly


def degree_profile(p: AbstractPolyhedron) -> DegreeProfile:
    """Multisets of vertex degrees and face degrees."""
    return DegreeProfile(
        Counter(len(nbrs) for nbrs in p.adjacency),
        Counter(len(f) for f in p.faces),
    )


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualEdge:
    faces: tuple[int, int]
    primal: Edge


@dataclass(frozen=True)
class DualGraph:
    """One node per primal face, one edge per primal edge."""

    node_count: int
    edges: tuple[DualEdge, ...]
    _adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False, default=())

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def primal_edge(self, f: int, g: int) -> Edge:
        for de in self.edges:
            if de.faces == (min(f, g), max(f, g)):
                return de.primal
        raise KeyError((f, g))


def dual(p: AbstractPolyhedron) -> DualGraph:
    edges = tuple(DualEdge(fs, e) for e, fs in sorted(p.edge_faces.items(), key=lambda kv: (kv[1], kv[0])))
    nbrs: list[set[int]] = [set() for _ in range(p.n_faces)]
    for de in edges:
        a, b = de.faces
        nbrs[a].add(b)
        nbrs[b].add(a)
    return DualGraph(p.n_faces, edges, tuple(tuple(sorted(s)) for s in nbrs))


def dual_polyhedron(p: AbstractPolyhedron) -> AbstractPolyhedron:
    """The dual as a polyhedron: vertex ``i`` is face ``i``, face ``v`` surrounds vertex ``v``."""
    return build_from_face_cycles([p.faces_around_vertex(v) for v in range(p.n_vertices)])


# ---------------------------------------------------------------------------
# Orientation and rotation systems
# ---------------------------------------------------------------------------


def orient_faces(faces: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Reverse faces as needed so that every directed edge is used exactly once.

    Face 0 keeps its given direction.  Raises :class:`PolyhedronError` if
    the complex is not orientable or faces do not close up consistently.
    """
    faces = [tuple(f) for f in faces]
    by_edge: dict[Edge, list[int]] = defaultdict(list)
    for i, f in enumerate(faces):
        for e in face_edges(f):
            by_edge[e].append(i)
    oriented: list[tuple[int, ...] | None] = [None] * len(faces)

    def directed(f):
        return {(f[i], f[(i + 1) % len(f)]) for i in range(len(f))}

    for seed in range(len(faces)):
        if oriented[seed] is not None:
            continue
        oriented[seed] = faces[seed]
        queue = deque([seed])
        while queue:
            i = queue.popleft()
            darts = directed(oriented[i])
            for e in face_edges(oriented[i]):
                for j in by_edge[e]:
                    if j == i:
                        continue
                    cand = faces[j]
                    if directed(cand) & darts:
                        cand = tuple(reversed(cand))
                    if oriented[j] is None:
                        oriented[j] = cand
                        queue.append(j)
                    elif directed(oriented[j]) & darts:
                        raise PolyhedronError("face cycles are not consistently orientable", element=j)
    return tuple(oriented)  # type: ignore[arg-type]


def rotation_system(p: AbstractPolyhedron) -> tuple[tuple[int, ...], ...]:
    """Cyclic neighbour order at each vertex, induced by a consistent face orientation.

    With faces oriented so that ``u -> v -> w`` runs along a face, ``w``
    follows ``u`` in the rotation at ``v``.  Each list starts at the
    smallest neighbour.
    """
    faces = orient_faces(p.faces)
    succ: list[dict[int, int]] = [dict() for _ in range(p.n_vertices)]
    for f in faces:
        k = len(f)
        for i in range(k):
            u, v, w = f[i - 1], f[i], f[(i + 1) % k]
            succ[v][u] = w
    rotations = []
    for v in range(p.n_vertices):
        start = min(succ[v])
        order = [start]
        nxt = succ[v][start]
        while nxt != start:
            order.append(nxt)
            nxt = succ[v][nxt]
        rotations.append(tuple(order))
    return tuple(rotations)


def canonical_cycle(face: Sequence[int]) -> tuple[int, ...]:
    """Rotation/reflection-invariant representative of a cyclic sequence."""
    k = len(face)
    candidates = []
    for seq in (tuple(face), tuple(reversed(face))):
        for i in range(k):
            candidates.append(seq[i:] + seq[:i])
    return min(candidates)
