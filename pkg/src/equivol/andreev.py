"""Realizability of equiangular labeled polyhedra.

Two special cases of Andreev's theorem are implemented:

* all dihedral angles pi/2: at least 6 faces, vertex degrees 3 or 4, the
  face-triple condition, and no prismatic 4-circuit in the dual;
* all dihedral angles pi/3: every vertex of degree 3 and no prismatic
  3-circuit in the dual (every vertex of the realization is then ideal).

Every condition is evaluated, none short-circuits, and each failure comes
with explicit witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .polyhedron import AbstractPolyhedron, AngleKind, Edge, dual, edge_key, face_edges


class UnsupportedK(ValueError):
    pass


# condition tags, in report order
MIN_FACES = "min-6-faces"
VERTEX_DEGREE = "vertex-degree"
FACE_TRIPLE = "face-triple"
PRISMATIC_4 = "prismatic-4-circuit"
PRISMATIC_3 = "prismatic-3-circuit"

FINITE = "finite"
IDEAL = "ideal"


@dataclass(frozen=True)
class PrismaticCircuit:
    k: int
    dual_nodes: tuple[int, ...]
    primal_edges: tuple[Edge, ...]

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "faces": list(self.dual_nodes),
            "edges": [list(e) for e in self.primal_edges],
        }


def _dual_cycles(adj: tuple[tuple[int, ...], ...], k: int):
    """Simple ``k``-cycles, each once: rooted at its smallest node, second node < last node."""
    for s in range(len(adj)):
        path = [s]

        def extend():
            v = path[-1]
            if len(path) == k:
                if s in adj[v] and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in adj[v]:
                if w > s and w not in path:
                    path.append(w)
                    yield from extend()
                    path.pop()

        yield from extend()


def prismatic_circuits(p: AbstractPolyhedron, k: int) -> list[PrismaticCircuit]:
    """All prismatic ``k``-circuits of the dual graph, ``k`` in {3, 4}.

    A dual ``k``-cycle is prismatic when the ``k`` primal edges it crosses
    are pairwise vertex-disjoint.  Circuits are sorted by their sorted face
    indices.
    """
    if k not in (3, 4):
        raise UnsupportedK(f"prismatic circuits are only defined here for k = 3 or 4, got {k}")
    g = dual(p)
    crossing = {de.faces: de.primal for de in g.edges}
    found = []
    for cyc in _dual_cycles(g.adjacency, k):
        edges = tuple(crossing[edge_key(cyc[i], cyc[(i + 1) % k])] for i in range(k))
        endpoints = [v for e in edges for v in e]
        if len(set(endpoints)) == 2 * k:
            found.append(PrismaticCircuit(k, cyc, edges))
    found.sort(key=lambda c: (sorted(c.dual_nodes), c.dual_nodes))
    return found


def face_triple_violations(p: AbstractPolyhedron) -> list[dict]:
    """Triples ``(F_i, F_j, F_k)`` where ``F_j`` meets ``F_i`` and ``F_k`` in
    vertex-disjoint edges but ``F_i`` and ``F_k`` still intersect.

    Faces intersect when they share at least one vertex.
    """
    out = []
    for j, face in enumerate(p.faces):
        edges = face_edges(face)
        for e1, e2 in combinations(edges, 2):
            if set(e1) & set(e2):
                continue
            i = _other_face(p, e1, j)
            k = _other_face(p, e2, j)
            common = p.face_vertex_sets[i] & p.face_vertex_sets[k]
            if i == k or common:
                a, b = (i, k) if i <= k else (k, i)
                ea, eb = (e1, e2) if i <= k else (e2, e1)
                out.append(
                    {
                        "faces": [a, j, b],
                        "edges": [list(ea), list(eb)],
                        "common_vertices": sorted(common),
                    }
                )
    return out


def _other_face(p: AbstractPolyhedron, e: Edge, f: int) -> int:
    a, b = p.edge_faces[e]
    return b if a == f else a


@dataclass(frozen=True)
class RealizabilityReport:
    kind: AngleKind
    realizable: bool
    conditions: dict[str, bool]
    witnesses: dict[str, list]
    vertex_classes: tuple[str, ...]
    counts: dict[str, int]
    diagnostics: tuple[str, ...] = field(default=())

    @property
    def failed_conditions(self) -> list[str]:
        return [tag for tag, ok in self.conditions.items() if not ok]

    @property
    def n_ideal(self) -> int:
        return self.counts["n_ideal"]

    @property
    def n_finite(self) -> int:
        return self.counts["n_finite"]

    def to_dict(self) -> dict:
        witnesses = {}
        for tag, items in self.witnesses.items():
            witnesses[tag] = [w.to_dict() if isinstance(w, PrismaticCircuit) else w for w in items]
        return {
            "kind": self.kind.value,
            "realizable": self.realizable,
            "conditions": dict(self.conditions),
            "witnesses": witnesses,
            "vertex_classes": list(self.vertex_classes),
            "counts": dict(self.counts),
            "diagnostics": list(self.diagnostics),
        }


def check_pi2(p: AbstractPolyhedron) -> RealizabilityReport:
    """Andreev conditions for an all-right-angled labeling.

    Degree-3 vertices are classified finite, degree-4 vertices ideal.  Any
    other degree fails the degree condition and is classified ``"invalid"``.
    """
    degrees = [p.degree(v) for v in range(p.n_vertices)]
    bad_degrees = [[v, d] for v, d in enumerate(degrees) if d not in (3, 4)]
    triples = face_triple_violations(p)
    circuits = prismatic_circuits(p, 4)

    conditions = {
        MIN_FACES: p.n_faces >= 6,
        VERTEX_DEGREE: not bad_degrees,
        FACE_TRIPLE: not triples,
        PRISMATIC_4: not circuits,
    }
    witnesses = {
        MIN_FACES: [] if conditions[MIN_FACES] else [{"faces": p.n_faces}],
        VERTEX_DEGREE: bad_degrees,
        FACE_TRIPLE: triples,
        PRISMATIC_4: circuits,
    }
    classes = tuple(FINITE if d == 3 else IDEAL if d == 4 else "invalid" for d in degrees)
    counts = {
        "n": p.n_vertices,
        "n_ideal": classes.count(IDEAL),
        "n_finite": classes.count(FINITE),
        "f": p.n_faces,
    }
    return RealizabilityReport(AngleKind.PI2, all(conditions.values()), conditions, witnesses, classes, counts)


def check_pi3(p: AbstractPolyhedron) -> RealizabilityReport:
    """Andreev conditions for an all-pi/3 labeling; every vertex is ideal.

    A realizable polyhedron with more than 4 vertices cannot have a
    triangular face.  If one shows up anyway the report carries the
    diagnostic ``"triangular-face-in-realizable"``; it is a consistency
    alarm, not an extra condition.
    """
    degrees = [p.degree(v) for v in range(p.n_vertices)]
    bad_degrees = [[v, d] for v, d in enumerate(degrees) if d != 3]
    circuits = prismatic_circuits(p, 3)
    conditions = {VERTEX_DEGREE: not bad_degrees, PRISMATIC_3: not circuits}
    witnesses = {VERTEX_DEGREE: bad_degrees, PRISMATIC_3: circuits}
    realizable = all(conditions.values())

    diagnostics = []
    if realizable and p.n_vertices > 4 and any(len(f) == 3 for f in p.faces):
        diagnostics.append("triangular-face-in-realizable")
    counts = {"n": p.n_vertices, "n_ideal": p.n_vertices, "n_finite": 0, "f": p.n_faces}
    return RealizabilityReport(
        AngleKind.PI3,
        realizable,
        conditions,
        witnesses,
        (IDEAL,) * p.n_vertices,
        counts,
        tuple(diagnostics),
    )


def check(p: AbstractPolyhedron, kind: AngleKind | str) -> RealizabilityReport:
    return check_pi2(p) if AngleKind.parse(kind) is AngleKind.PI2 else check_pi3(p)
