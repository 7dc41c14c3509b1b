import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperpack.errors import AmbiguousClassification, DomainError, InvalidParameters, NotDoublyTruncated, NotHyperbolic, SymmetryUnavailable
from hyperpack.orthoscheme import (
    FormPoint,
    SchlafliParams,
    build_gram,
    is_doubly_truncated,
    key_distances,
    numeric_inverse,
    point_distance,
    symmetry_witness,
    truncation_areas,
    truncation_points,
)

VALID = [t for t in ((u, v, w) for u in range(3, 13) for v in range(3, 13) for w in range(3, 13)) if is_doubly_truncated(*t)]


def gram(*t):
    return build_gram(SchlafliParams(*t))


def test_params_validation():
    assert SchlafliParams(7, 3, 7).integral
    assert not SchlafliParams(6.5, 3, 6.5).integral
    assert SchlafliParams(8, 3, 7).canonical() == SchlafliParams(7, 3, 8)
    with pytest.raises(InvalidParameters):
        SchlafliParams(2, 3, 7)
    with pytest.raises(InvalidParameters):
        SchlafliParams(float("nan"), 3, 7)


def test_737_gram_values():
    # direct evaluation: B = sin^4(pi/7) - 1/4, a00 = (sin^2(pi/7) - 1/4) / B
    s2 = math.sin(math.pi / 7) ** 2
    g = gram(7, 3, 7)
    assert g.B == pytest.approx(s2 * s2 - 0.25, abs=1e-15)
    assert g.B == pytest.approx(-0.21456, abs=1e-5)
    assert g.a[0, 0] == pytest.approx(0.28777, abs=1e-5)
    assert g.a[0, 0] == pytest.approx(g.a[3, 3], abs=1e-13)
    np.testing.assert_allclose(g.a @ g.b, np.eye(4), atol=1e-12)


def test_gram_structure():
    g = gram(5, 4, 6)
    assert np.all(np.diag(g.b) == 1.0)
    assert g.b[0, 2] == g.b[0, 3] == g.b[1, 3] == 0.0
    np.testing.assert_array_equal(g.b, g.b.T)
    np.testing.assert_allclose(g.a, g.a.T, atol=0)


@pytest.mark.parametrize("t", [(3, 3, 3), (3, 3, 5), (3, 4, 3)])
def test_not_hyperbolic(t):
    with pytest.raises(NotHyperbolic):
        gram(*t)


@pytest.mark.parametrize("t,vertex", [((3, 3, 7), "A3"), ((7, 3, 3), "A0"), ((4, 5, 3), "A0")])
def test_not_doubly_truncated_names_vertex(t, vertex):
    with pytest.raises(NotDoublyTruncated) as exc:
        gram(*t)
    assert exc.value.vertex == vertex


@pytest.mark.parametrize("t", [(4, 3, 4), (4, 4, 5), (6, 3, 6)])
def test_boundary_is_ambiguous(t):
    with pytest.raises(AmbiguousClassification):
        gram(*t)


def test_compact_orthoscheme_is_hyperbolic_but_not_truncated():
    with pytest.raises(NotDoublyTruncated):
        gram(4, 3, 5)


@pytest.mark.parametrize("t", [(7, 3, 7), (8, 3, 8), (5, 4, 5), (4, 6, 4)])
def test_u_equals_w_symmetry(t):
    a = gram(*t).a
    assert a[0, 0] == pytest.approx(a[3, 3], abs=1e-13)
    assert a[1, 1] == pytest.approx(a[2, 2], abs=1e-13)


@pytest.mark.parametrize("t", VALID[::7])
def test_closed_form_matches_numeric_inverse(t):
    g = gram(*t)
    np.testing.assert_allclose(numeric_inverse(g), g.a, atol=1e-11)


def test_truncation_points_lie_on_polar_planes():
    for t in VALID[::11]:
        g = gram(*t)
        pts = truncation_points(g)
        for p in (pts.C, pts.L, pts.H):
            assert abs(g.inner(p, g.vertex(0))) < 1e-12
        for p in (pts.J, pts.E, pts.Q):
            assert abs(g.inner(p, g.vertex(3))) < 1e-12


def test_truncation_point_norms_match_closed_forms():
    g = gram(7, 3, 7)
    a, B = g.a, g.B
    p = truncation_points(g)
    sv2 = math.sin(math.pi / 3) ** 2
    assert g.inner(p.C, p.C) == pytest.approx(a[1, 1] / a[0, 0], abs=1e-12)
    assert g.inner(p.C, p.C) == pytest.approx(g.inner(p.C, g.vertex(1)), abs=1e-12)
    assert g.inner(p.L, p.L) == pytest.approx(1 / (B * a[0, 0]), abs=1e-12)
    assert g.inner(p.H, p.H) == pytest.approx(sv2 / (B * a[0, 0]), abs=1e-12)
    assert g.inner(p.J, p.J) == pytest.approx(sv2 / (B * a[3, 3]), abs=1e-12)
    assert g.inner(p.E, p.E) == pytest.approx(1 / (B * a[3, 3]), abs=1e-12)
    assert g.inner(p.Q, p.Q) == pytest.approx(a[2, 2] / a[3, 3], abs=1e-12)


def test_545_J_is_proper():
    g = gram(5, 4, 5)
    j = truncation_points(g).J
    expected = math.sin(math.pi / 4) ** 2 / (g.B * g.a[3, 3])
    assert g.inner(j, j) == pytest.approx(expected, abs=1e-12)
    assert g.inner(j, j) < 0


def test_point_distance_values():
    g = gram(7, 3, 7)
    p = truncation_points(g)
    assert point_distance(p.J, p.J, g) == 0.0
    assert point_distance(p.J, p.H, g) == pytest.approx(2 * 1.28517, abs=2e-5)
    assert point_distance(p.J, p.H, g) == point_distance(p.H, p.J, g)
    g = gram(5, 4, 5)
    assert point_distance(g.vertex(1), truncation_points(g).C, g) == pytest.approx(1.02221, abs=1e-5)


def test_point_distance_rejects_outer_points():
    g = gram(7, 3, 7)
    with pytest.raises(DomainError):
        point_distance(g.vertex(0), g.vertex(1), g)


@pytest.mark.parametrize(
    "t,d1,half",
    [((7, 3, 7), 1.23469, 1.28517), ((5, 4, 5), 1.02221, 0.88055)],
)
def test_key_distances_published_values(t, d1, half):
    kd = key_distances(gram(*t))
    assert kd.dA1C == pytest.approx(d1, abs=1e-5)
    assert kd.dA2Q == pytest.approx(d1, abs=1e-5)
    assert kd.half_dJH == pytest.approx(half, abs=1e-5)


@given(st.sampled_from(VALID))
def test_swap_exchanges_distances(t):
    u, v, w = t
    a, b = key_distances(gram(u, v, w)), key_distances(gram(w, v, u))
    assert abs(a.dA1C - b.dA2Q) <= 1e-12
    assert abs(a.dJH - b.dJH) <= 1e-12


def test_truncation_areas():
    ar = truncation_areas(SchlafliParams(5, 4, 5))
    assert ar.area0 == ar.area3 == pytest.approx(math.pi / 2 - math.pi / 4 - math.pi / 5)
    assert ar.area0 == pytest.approx(0.15708, abs=1e-5)
    assert truncation_areas(SchlafliParams(7, 3, 7)).area0 == pytest.approx(math.pi / 42, abs=1e-15)
    a, b = truncation_areas(SchlafliParams(4, 5, 6)), truncation_areas(SchlafliParams(6, 5, 4))
    assert (a.area0, a.area3) == (b.area3, b.area0)
    with pytest.raises(NotDoublyTruncated):
        truncation_areas(SchlafliParams(4, 4, 5))


def test_737_area_from_table_back_solve():
    # Table 1 {7,3,7}: 0.31172 = 2 * area / 4 * (sinh 2h + 2h), h = 1.23469
    h = 1.23469
    area = 0.31172 * 2 / (math.sinh(2 * h) + 2 * h)
    assert truncation_areas(SchlafliParams(7, 3, 7)).area0 == pytest.approx(area, abs=1e-4)


@pytest.mark.parametrize("t", [(7, 3, 7), (8, 3, 8), (5, 4, 5), (4, 5, 4)])
def test_symmetry_witness(t):
    g = gram(*t)
    f03, f12 = symmetry_witness(g)
    assert g.inner(f03, f03) == pytest.approx(2 * (g.a[0, 0] + g.a[0, 3]), abs=1e-13)
    assert g.inner(f12, f12) == pytest.approx(2 * (g.a[1, 1] + g.a[1, 2]), abs=1e-13)
    assert g.inner(f03, f03) < 0 and g.inner(f12, f12) < 0


def test_symmetry_witness_needs_u_equal_w():
    with pytest.raises(SymmetryUnavailable):
        symmetry_witness(gram(7, 3, 8))


def test_form_point_shape():
    with pytest.raises(ValueError):
        FormPoint(np.zeros(3))
