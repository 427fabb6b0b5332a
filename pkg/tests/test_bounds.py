import math
import random
from fractions import Fraction

import pytest

from conftest import load_fixture
from equivol import solids
from equivol.andreev import check_pi2, check_pi3
from equivol.bounds import (
    HasFiniteVertices,
    HasIdealVertices,
    NegativeArea,
    NotRealizable,
    UnknownKind,
    WrongDispatch,
    boundary_area,
    bounds_compact_pi2,
    bounds_for,
    bounds_ideal_pi2,
    bounds_ideal_pi3,
    bounds_mixed_pi2,
    compact_pi2_interval,
    ideal_pi2_interval,
    ideal_pi3_interval,
    max_vertices_for_volume,
    mixed_pi2_interval,
    miyamoto_lower,
    white_area,
)
from equivol.combinatorics import euler_face_count_identity, trivalent_independence_floor
from equivol.families import family_Q2k, glue_octahedra
from equivol.lobachevsky import V3, V8

PI = math.pi


# -- areas -------------------------------------------------------------------


def test_white_area_examples():
    assert white_area(6, 4) == pytest.approx(4 * PI)
    assert white_area(9, 5) == pytest.approx(8 * PI)
    assert white_area(7, 7) == 0.0
    with pytest.raises(NegativeArea):
        white_area(3, 4)


def test_boundary_area_examples():
    assert boundary_area(6, 0, 8) == pytest.approx(8 * PI)
    assert boundary_area(6, 0, 8) == pytest.approx(2 * white_area(6, 4))
    assert boundary_area(0, 20, 12) == pytest.approx(6 * PI)
    assert boundary_area(1, 0, 2) == 0.0
    with pytest.raises(NegativeArea):
        boundary_area(0, 0, 1)


def test_miyamoto_examples():
    assert miyamoto_lower(4 * PI) == pytest.approx(V8, abs=1e-14)
    assert miyamoto_lower(0) == 0
    assert miyamoto_lower(8 * PI) == pytest.approx(2 * V8, abs=1e-14)


def test_miyamoto_chain_identity():
    for n in range(0, 120):
        for w in range(0, n + 1):
            assert miyamoto_lower(white_area(n, w)) == pytest.approx((n - w) * V8 / 2, rel=1e-14, abs=1e-14)


# -- per-case examples -------------------------------------------------------


def test_octahedron_sharp():
    b = bounds_ideal_pi2(solids.octahedron())
    assert b.lower == b.upper == V8
    assert not b.lower_strict and not b.upper_strict
    assert b.admits(V8)


def test_two_glued_octahedra():
    b = bounds_ideal_pi2(glue_octahedra(2).polyhedron)
    assert b.lower == pytest.approx(2 * V8, abs=1e-12)
    assert b.upper == pytest.approx(2.5 * V8, abs=1e-12)
    tags = {t.tag: t.exact for t in b.lower_terms}
    assert tags["white-face-area"] > tags["ideal-pi2-vertex-lower"]


def test_square_antiprism_three_way_tie():
    b = bounds_ideal_pi2(load_fixture("square_antiprism"))
    assert b.lower == pytest.approx(1.5 * V8, abs=1e-12)
    assert b.upper == pytest.approx(2 * V8, abs=1e-12)
    assert len({t.exact for t in b.lower_terms}) == 1


def test_dodecahedron_compact():
    b = bounds_compact_pi2(solids.dodecahedron())
    assert b.lower == pytest.approx(0.375 * V8, abs=1e-12)
    assert b.lower == pytest.approx(1.37395, abs=5e-6)
    assert b.upper == pytest.approx(6.25 * V3, abs=1e-12)
    assert b.upper == pytest.approx(6.34338, abs=1e-5)  # quoted value is truncated
    assert b.upper_strict and not b.lower_strict


def test_compact_hypothetical_80():
    b = compact_pi2_interval(80, 42)
    assert b.lower == pytest.approx(72 * V8 / 32)
    assert b.upper == pytest.approx(70 * 5 * V3 / 8)
    assert b.upper_strict


def test_mixed_example():
    f = euler_face_count_identity(2, 8)
    b = mixed_pi2_interval(2, 8, f)
    assert b.lower == pytest.approx(V8 / 4)
    assert b.upper == pytest.approx(V8 / 2 + 5 * V3)
    assert b.upper_strict


def test_pi3_cube():
    b = bounds_ideal_pi3(solids.cube())
    assert b.lower == pytest.approx(4 * V3, abs=1e-12)
    assert not b.lower_strict
    assert b.upper == pytest.approx(5 * V3, abs=1e-12)
    assert b.data["independent_set_size"] == 4


def test_pi3_tetrahedron_point():
    b = bounds_ideal_pi3(solids.tetrahedron())
    assert b.lower == b.upper == pytest.approx(V3, abs=1e-15)


def test_pi3_q6():
    m = family_Q2k(3)
    b = bounds_ideal_pi3(m.polyhedron)
    assert m.polyhedron.n_vertices == 78
    i = b.data["independent_set_size"]
    assert b.lower == pytest.approx(max(26, i, 30) * V3, abs=1e-12)
    assert b.upper == pytest.approx(110 * V3, abs=1e-12)


def test_pi3_strictness_follows_winner():
    # the integer floor term always beats the strict horoball term for N > 4
    for n in range(5, 400):
        b = ideal_pi3_interval(n)
        assert b.lower == pytest.approx(trivalent_independence_floor(n) * V3)
        assert not b.lower_strict


def test_lower_strict_when_strict_term_ties():
    from equivol.bounds import LOWER, BoundTerm, _combine

    terms = [
        BoundTerm.make("a", LOWER, True, V3=Fraction(2)),
        BoundTerm.make("b", LOWER, False, V3=Fraction(2)),
        BoundTerm.make("c", "upper", False, V3=Fraction(5)),
    ]
    assert _combine("ideal_pi3", terms, {}).lower_strict


# -- identities and sweeps ---------------------------------------------------


def test_averaging_consistency_exhaustive():
    for n in range(2, 201):
        for w in range(2, n + 1):
            assert 2 * max(n - w, w - 2) >= n - 2
            b = ideal_pi2_interval(n, w)
            assert b.lower >= (n - 2) * V8 / 4 - 1e-12


def test_compact_identity_random():
    rng = random.Random(21)
    for _ in range(1000):
        n = 2 * rng.randint(4, 500)
        f = euler_face_count_identity(0, n)
        assert n - 8 == 3 * n - 4 * f
        compact_pi2_interval(n, f)
    with pytest.raises(ArithmeticError):
        compact_pi2_interval(20, 13)


def test_mixed_identity_random():
    rng = random.Random(22)
    for _ in range(1000):
        n_inf = rng.randint(1, 400)
        n_f = 2 * rng.randint(1, 200)
        f = euler_face_count_identity(n_inf, n_f)
        assert 4 * n_inf + n_f - 8 == 8 * n_inf + 3 * n_f - 4 * f
        b = mixed_pi2_interval(n_inf, n_f, f)
        lows = [t.exact for t in b.lower_terms]
        assert lows[0] == lows[1]
    with pytest.raises(ArithmeticError):
        mixed_pi2_interval(2, 8, 9)


def _terms_by_tag(b):
    return {t.tag: t.value for t in b.terms}


def test_monotone_in_n():
    prev = None
    for n in range(6, 300):
        cur = _terms_by_tag(ideal_pi2_interval(n, 4))
        if prev:
            for tag in ("ideal-pi2-vertex-lower", "white-face-area", "ideal-pi2-upper"):
                assert cur[tag] >= prev[tag]
        prev = cur
    prev = None
    for n in range(8, 400, 2):
        cur = _terms_by_tag(compact_pi2_interval(n, euler_face_count_identity(0, n)))
        if prev:
            assert all(cur[t] >= prev[t] for t in cur)
        prev = cur
    prev = None
    for n in range(5, 400):
        cur = _terms_by_tag(ideal_pi3_interval(n))
        if prev:
            assert all(cur[t] >= prev[t] for t in cur)
        prev = cur
    for n_inf in range(1, 40):
        for n_f in range(2, 40, 2):
            b = mixed_pi2_interval(n_inf, n_f, euler_face_count_identity(n_inf, n_f))
            b1 = mixed_pi2_interval(n_inf + 1, n_f, euler_face_count_identity(n_inf + 1, n_f))
            b2 = mixed_pi2_interval(n_inf, n_f + 2, euler_face_count_identity(n_inf, n_f + 2))
            assert b1.lower >= b.lower and b2.lower >= b.lower
            assert b1.upper >= b.upper and b2.upper >= b.upper


def test_clamping():
    b = compact_pi2_interval(4, 4)
    assert b.lower == 0.0
    assert any(t.clamped for t in b.lower_terms)
    assert all(t.value >= 0 for t in b.terms)


def test_sandwich_on_generated_polyhedra():
    rng = random.Random(23)
    seen = 0
    for _ in range(300):
        p = solids.random_polyhedron(rng, max_vertices=40)
        for kind in ("pi2", "pi3"):
            report = check_pi2(p) if kind == "pi2" else check_pi3(p)
            if not report.realizable:
                continue
            b = bounds_for(p, kind)
            assert b.lower <= b.upper
            seen += 1
    assert seen > 20


# -- dispatch ----------------------------------------------------------------


def test_dispatch_errors():
    with pytest.raises(NotRealizable):
        bounds_ideal_pi2(solids.cube())
    with pytest.raises(HasFiniteVertices):
        bounds_ideal_pi2(solids.dodecahedron())
    with pytest.raises(HasIdealVertices):
        bounds_compact_pi2(solids.octahedron())
    with pytest.raises(WrongDispatch):
        bounds_mixed_pi2(solids.octahedron())
    with pytest.raises(NotRealizable):
        bounds_ideal_pi3(solids.prism(3))


def test_bounds_for_dispatch():
    assert bounds_for(solids.octahedron(), "pi2").case == "ideal_pi2"
    assert bounds_for(solids.dodecahedron(), "pi2").case == "compact_pi2"
    assert bounds_for(solids.cube(), "pi3").case == "ideal_pi3"


def test_mixed_polyhedron_dispatch():
    rng = random.Random(24)
    for _ in range(2000):
        p = solids.random_polyhedron(rng, max_vertices=40)
        r = check_pi2(p)
        if r.realizable and r.n_ideal and r.n_finite:
            b = bounds_mixed_pi2(p)
            assert b.case == "mixed_pi2" and bounds_for(p, "pi2").case == "mixed_pi2"
            return
    pytest.fail("no mixed realizable polyhedron generated")


# -- inversion ---------------------------------------------------------------


def test_max_vertices_examples():
    assert max_vertices_for_volume(V8, "ideal_pi2") == 6
    assert max_vertices_for_volume(5 * V3, "ideal_pi3") == 13
    assert max_vertices_for_volume(0.5, "compact_pi2") == 12
    assert max_vertices_for_volume(0.0, "ideal_pi3") == 0
    with pytest.raises(UnknownKind):
        max_vertices_for_volume(1.0, "mixed_pi2")


def test_max_vertices_closed_forms():
    rng = random.Random(25)
    for _ in range(1000):
        v = rng.uniform(0, 200)
        n = max_vertices_for_volume(v, "ideal_pi2")
        assert (n - 2) * V8 / 4 <= v + 1e-12 < (n - 1) * V8 / 4 + 1e-12
        assert n == math.floor(2 + 4 * v / V8) or abs(2 + 4 * v / V8 - round(2 + 4 * v / V8)) < 1e-9
        m = max_vertices_for_volume(v, "compact_pi2")
        assert m == math.floor(8 + 32 * v / V8) or abs(32 * v / V8 - round(32 * v / V8)) < 1e-9
        k = max_vertices_for_volume(v, "ideal_pi3")
        if k > 4:
            assert k * V3 / 3 < v and trivalent_independence_floor(k) * V3 <= v
        nxt = k + 1 if k >= 5 else 5
        assert not (nxt * V3 / 3 < v and trivalent_independence_floor(nxt) * V3 <= v)
