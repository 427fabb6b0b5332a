import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equivol.lobachevsky import (
    V3,
    V8,
    AngleOutOfRange,
    ConstraintOutOfRange,
    NotAnOrthoscheme,
    cone_on_ideal_polygon,
    constant_V3,
    constant_V8,
    ideal_orthoscheme_volume,
    lobachevsky,
    orthoscheme_vertex_types,
    orthoscheme_volume,
    two_ideal_vertex_tet_volume,
    vertex_volume_cap,
)
from oracles import catalan, lobachevsky_quad, orthoscheme_volume_quad

PI = math.pi
L = lobachevsky


def test_special_values():
    assert L(0.0) == 0.0
    assert abs(L(PI / 2)) < 1e-15
    assert L(PI / 4) == pytest.approx(3.66386 / 8, abs=7e-7)
    assert L(PI / 6) == pytest.approx(1.01494 / 2, abs=3e-6)


def test_constants():
    assert constant_V8() == pytest.approx(3.66386, abs=5e-6)
    assert constant_V3() == pytest.approx(1.01494, abs=5e-6)
    assert abs(constant_V8() - 4 * catalan()) < 1e-10
    assert constant_V8() == V8 and constant_V3() == V3


def test_against_mpmath_clausen():
    # independent high-precision implementation
    for theta in [0.01, 0.3, 0.7, 1.0, 1.3, 1.57, 2.0, 3.1, -0.9, 12.0]:
        ref = float(mpmath.clsin(2, 2 * theta)) / 2
        assert L(theta) == pytest.approx(ref, abs=1e-14)


def test_quadrature_grid():
    for i in range(1, 51):
        theta = (PI / 2) * i / 51
        assert abs(L(theta) - lobachevsky_quad(theta)) < 1e-8


def test_oddness_and_periodicity_sampled():
    rng = random.Random(1)
    for _ in range(10_000):
        t = rng.uniform(-50, 50)
        assert L(-t) == -L(t)
        assert abs(L(t + PI) - L(t)) < 1e-13
        # the value depends on t only through its reduction mod pi
        assert L(t) == L(math.fmod(t, PI)) or t < 0


def test_duplication_identity():
    rng = random.Random(2)
    for _ in range(1000):
        t = rng.uniform(-10, 10)
        assert abs(0.5 * L(2 * t) - (L(t) + L(t + PI / 2))) < 1e-10


def test_maximum_at_pi_over_6():
    peak = L(PI / 6)
    for i in range(2001):
        assert L(PI * i / 2000) <= peak


@settings(max_examples=200)
@given(st.floats(-1e3, 1e3, allow_nan=False))
def test_odd_property(t):
    assert L(-t) == -L(t)


# -- volumes -----------------------------------------------------------------


def test_cone_examples():
    assert cone_on_ideal_polygon([PI / 4] * 4) == pytest.approx(V8 / 2, abs=1e-14)
    assert cone_on_ideal_polygon([PI / 3] * 3) == pytest.approx(V3, abs=1e-14)
    assert cone_on_ideal_polygon([PI / 2] * 3) == pytest.approx(0.0, abs=1e-15)
    with pytest.raises(AngleOutOfRange):
        cone_on_ideal_polygon([PI / 4, 2.0])


def test_two_ideal_vertex_tetrahedron():
    assert two_ideal_vertex_tet_volume(PI / 4) == pytest.approx(V8 / 16, abs=1e-15)
    assert abs(16 * two_ideal_vertex_tet_volume(PI / 4) - constant_V8()) < 1e-12
    assert two_ideal_vertex_tet_volume(PI / 2) == 0.0
    assert two_ideal_vertex_tet_volume(PI / 6) == pytest.approx(V3 / 6, abs=1e-14)
    with pytest.raises(AngleOutOfRange):
        two_ideal_vertex_tet_volume(-0.1)


def test_orthoscheme_equal_quarter_pi():
    both = orthoscheme_volume(PI / 4, PI / 4, PI / 4)
    one = ideal_orthoscheme_volume(PI / 4, PI / 4)
    assert abs(both - one) < 1e-12
    assert one == pytest.approx(L(PI / 4) / 2, abs=1e-14)
    assert 16 * one == pytest.approx(V8, abs=1e-12)


@pytest.mark.parametrize(
    "angles",
    [
        (PI / 6, PI / 3, PI / 6),  # two ideal vertices
        (PI / 5, PI / 3, PI / 5),  # compact
        (PI / 4, PI / 4, PI / 4),  # two ideal vertices
        (0.5, PI / 2 - 0.5, 0.7),  # one ideal vertex
        (PI / 4, PI / 3, PI / 4),  # compact
    ],
)
def test_orthoscheme_matches_quadrature(angles):
    assert abs(orthoscheme_volume(*angles) - orthoscheme_volume_quad(*angles)) < 1e-8


def test_orthoscheme_symmetry():
    rng = random.Random(3)
    checked = 0
    while checked < 100:
        a, b, c = (rng.uniform(0.05, PI / 2 - 0.05) for _ in range(3))
        if math.sin(a) ** 2 * math.sin(c) ** 2 > math.cos(b) ** 2:
            continue
        assert abs(orthoscheme_volume(a, b, c) - orthoscheme_volume(c, b, a)) < 1e-12
        checked += 1


def test_limit_consistency_random_pairs():
    rng = random.Random(4)
    for _ in range(100):
        a, g = rng.uniform(0.01, PI / 2 - 0.01), rng.uniform(0.01, PI / 2 - 0.01)
        assert abs(orthoscheme_volume(a, PI / 2 - a, g) - ideal_orthoscheme_volume(a, g)) < 1e-10


def test_ideal_orthoscheme_against_quadrature():
    rng = random.Random(6)
    for _ in range(5):
        a = rng.uniform(0.2, 1.3)
        g = rng.uniform(a, 1.45)  # keeps the far vertex finite
        assert orthoscheme_vertex_types(a, PI / 2 - a, g)[1] == "ideal"
        assert abs(ideal_orthoscheme_volume(a, g) - orthoscheme_volume_quad(a, PI / 2 - a, g)) < 1e-8


def test_ideal_orthoscheme_equal_angles():
    rng = random.Random(7)
    for _ in range(50):
        a = rng.uniform(0.01, PI / 2 - 0.01)
        assert ideal_orthoscheme_volume(a, a) == pytest.approx(0.25 * (L(2 * a) + 2 * L(PI / 2 - a)), abs=1e-14)


def test_not_an_orthoscheme():
    with pytest.raises(NotAnOrthoscheme):
        orthoscheme_volume(1.2, 1.3, 1.2)
    with pytest.raises(AngleOutOfRange):
        orthoscheme_volume(0.0, 1.0, 1.0)


def test_vertex_types():
    assert orthoscheme_vertex_types(PI / 6, PI / 3, PI / 6) == ("ideal", "ideal")
    assert orthoscheme_vertex_types(PI / 5, PI / 3, PI / 5) == ("finite", "finite")
    assert orthoscheme_vertex_types(PI / 5, PI / 4, PI / 3) == ("finite", "hyperideal")


def test_vertex_volume_cap_examples():
    assert vertex_volume_cap(8, 2 * PI) == pytest.approx(V8 / 2, abs=1e-14)
    assert vertex_volume_cap(6, 2 * PI) == pytest.approx(3 * V3 / 2, abs=1e-14)
    assert vertex_volume_cap(2, PI / 3) == pytest.approx(V3 / 3, abs=1e-14)
    with pytest.raises(ConstraintOutOfRange):
        vertex_volume_cap(2, 4.0)
    with pytest.raises(ConstraintOutOfRange):
        vertex_volume_cap(0, 0.0)


def test_vertex_volume_cap_dominates():
    rng = random.Random(8)
    done = 0
    while done < 1000:
        m = rng.randint(1, 9)
        w = [rng.expovariate(1.0) for _ in range(m)]
        c = rng.uniform(0, m * PI / 2)
        angles = [c * x / sum(w) for x in w]
        if max(angles) > PI / 2:
            continue
        value = 0.5 * sum(L(PI / 2 - a) for a in angles)
        assert vertex_volume_cap(m, c) >= value - 1e-14
        done += 1
