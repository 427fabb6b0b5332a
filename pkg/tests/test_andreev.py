import random

import pytest

from conftest import load_fixture
from equivol import solids
from equivol.andreev import (
    FACE_TRIPLE,
    IDEAL,
    FINITE,
    PRISMATIC_3,
    PRISMATIC_4,
    UnsupportedK,
    check,
    check_pi2,
    check_pi3,
    face_triple_violations,
    prismatic_circuits,
)
from equivol.polyhedron import face_edges
from oracles import prismatic_circuits_bruteforce

NAMED = {
    "octahedron": solids.octahedron,
    "dodecahedron": solids.dodecahedron,
    "cube": solids.cube,
    "tetrahedron": solids.tetrahedron,
    "triangular_prism": lambda: solids.prism(3),
    "face_triple_violation": lambda: load_fixture("face_triple_violation"),
}


@pytest.mark.parametrize(
    "key",
    [
        "octahedron/pi2",
        "dodecahedron/pi2",
        "cube/pi2",
        "tetrahedron/pi3",
        "cube/pi3",
        "triangular_prism/pi3",
        "face_triple_violation/pi2",
    ],
)
def test_golden_reports(golden, key):
    name, kind = key.split("/")
    report = check(NAMED[name](), kind).to_dict()
    want = golden[key]
    assert report["realizable"] == want["realizable"]
    assert [t for t, ok in report["conditions"].items() if not ok] == want["failed"]
    for tag, items in report["witnesses"].items():
        assert items == want["witnesses"].get(tag, [])


def test_cube_has_the_lateral_circuit():
    circuits = prismatic_circuits(solids.cube(), 4)
    lateral = [c for c in circuits if sorted(c.dual_nodes) == [2, 3, 4, 5]]
    assert len(lateral) == 1
    # the four vertical edges
    assert sorted(lateral[0].primal_edges) == [(0, 4), (1, 5), (2, 6), (3, 7)]


def test_octahedron_has_no_prismatic_4_circuit():
    assert prismatic_circuits(solids.octahedron(), 4) == []


def test_unsupported_k():
    with pytest.raises(UnsupportedK):
        prismatic_circuits(solids.cube(), 5)


def test_vertex_classes():
    r = check_pi2(solids.octahedron())
    assert r.vertex_classes == (IDEAL,) * 6
    r = check_pi2(solids.dodecahedron())
    assert r.realizable and r.vertex_classes == (FINITE,) * 20 and r.n_finite == 20
    r = check_pi3(solids.tetrahedron())
    assert r.realizable and r.vertex_classes == (IDEAL,) * 4


def test_no_short_circuit():
    # triangular prism under pi/2 fails two conditions; both are reported
    r = check_pi2(solids.prism(3))
    assert set(r.failed_conditions) == {"min-6-faces", FACE_TRIPLE}
    assert all(tag in r.conditions for tag in ("min-6-faces", "vertex-degree", FACE_TRIPLE, PRISMATIC_4))


def test_face_triple_vacuous_on_triangles():
    assert face_triple_violations(solids.octahedron()) == []


def _recheck_circuit(p, c):
    k = c.k
    nodes = c.dual_nodes
    assert len(set(nodes)) == k
    for i in range(k):
        a, b = nodes[i], nodes[(i + 1) % k]
        e = c.primal_edges[i]
        assert set(p.edge_faces[e]) == {a, b}
    ends = [v for e in c.primal_edges for v in e]
    assert len(set(ends)) == 2 * k


def _corpus():
    rng = random.Random(5)
    polys = [make() for make in solids.PLATONIC.values()]
    polys += [solids.prism(n) for n in range(3, 8)] + [solids.antiprism(n) for n in range(3, 7)]
    polys += [solids.random_polyhedron(rng, max_vertices=18) for _ in range(80)]
    return polys


@pytest.mark.parametrize("k", [3, 4])
def test_circuits_match_bruteforce_and_recheck(k):
    for p in _corpus():
        found = prismatic_circuits(p, k)
        for c in found:
            _recheck_circuit(p, c)
        assert {frozenset(c.dual_nodes) for c in found} == prismatic_circuits_bruteforce(
            [list(f) for f in p.faces], k
        )


def _face_triple_bruteforce(p):
    bad = set()
    for j, face in enumerate(p.faces):
        edges = face_edges(face)
        for e1 in edges:
            for e2 in edges:
                if set(e1) & set(e2):
                    continue
                i = next(x for x in p.edge_faces[e1] if x != j)
                k = next(x for x in p.edge_faces[e2] if x != j)
                if set(p.faces[i]) & set(p.faces[k]):
                    bad.add((min(i, k), j, max(i, k)))
    return bad


def test_face_triple_matches_bruteforce():
    for p in _corpus():
        got = {tuple(w["faces"]) for w in face_triple_violations(p)}
        assert got == _face_triple_bruteforce(p)


def test_euler_bookkeeping_for_pi2_passes():
    for p in _corpus():
        r = check_pi2(p)
        if not r.realizable:
            continue
        assert r.n_ideal + r.n_finite == p.n_vertices
        assert 2 * p.n_edges == 3 * r.n_finite + 4 * r.n_ideal
        assert p.n_faces == 2 + p.n_edges - p.n_vertices


def test_pi3_passes_have_no_triangles():
    for p in _corpus():
        r = check_pi3(p)
        if r.realizable and p.n_vertices > 4:
            assert min(len(f) for f in p.faces) >= 4
            assert r.diagnostics == ()
