import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar

from _sampling import mixed_admissible, random_admissible
from ultratri import (
    Model,
    TriangleParams,
    bergman_distance,
    generators,
    hermitian_cross,
    hermitian_product,
    polar_vectors,
    power_R2R1,
    project_to_axis,
    projected_disk,
    reflection_from_polar,
    v_coordinate,
)
from ultratri.ultra import act_on_disk, lift, recover_params, ultra_parallel_M


def test_params_validation():
    with pytest.raises(ValueError):
        TriangleParams(2, 3, 1.5, 0.5)
    with pytest.raises(ValueError):
        TriangleParams(3, 2, 1.0, 0.5)
    with pytest.raises(ValueError):
        TriangleParams(3, 2, 1.5, float("nan"))
    with pytest.warns(UserWarning):
        p = TriangleParams(3, 2, 1.5, 2 * math.pi - 0.4)
    assert p.alpha == pytest.approx(0.4)
    q = TriangleParams.from_distances(2 * math.acosh(3), 2 * math.acosh(2), 2 * math.acosh(1.5), 1.0)
    assert (q.r1, q.r2, q.r3) == pytest.approx((3, 2, 1.5))


def test_polar_vectors_have_requested_invariants():
    rng = np.random.default_rng(10)
    for _ in range(300):
        p = random_admissible(rng)
        t = polar_vectors(p)
        for n in (t.n1, t.n2, t.n3):
            assert hermitian_product(n, n).real == pytest.approx(1.0, abs=1e-9)
        r1, r2, r3, alpha = recover_params(t)
        assert (r1, r2, r3) == pytest.approx((p.r1, p.r2, p.r3), rel=1e-9)
        assert math.cos(alpha) == pytest.approx(p.cos_alpha, abs=1e-8)


def test_inadmissible_angle_has_no_polars():
    p = TriangleParams.from_cos(1.2, 1.1, 1.05, 1.0)
    assert not p.admissible
    with pytest.raises(ValueError):
        polar_vectors(p)


def test_closed_form_generators_match_general_reflection():
    rng = np.random.default_rng(11)
    for _ in range(200):
        p = random_admissible(rng)
        t = polar_vectors(p)
        for R, n in zip(generators(p), (t.n1, t.n2, t.n3)):
            assert np.allclose(R.matrix, reflection_from_polar(n).matrix, atol=1e-9 * max(1, p.r1**2))


def test_power_closed_form_frozen_values():
    # r3 = 5/4: s3 = 3/4, r3 + s3 = 2, so the entries are (1/4 + 4)/2 and (1/4 - 4)/2
    P = power_R2R1(1.25, 1).matrix
    assert P[1, 1].real == pytest.approx(17 / 8)
    assert P[1, 2].real == pytest.approx(-15 / 8)
    assert v_coordinate(1.25, 2) == pytest.approx(15 / 17)


def test_power_closed_form_matches_products():
    rng = np.random.default_rng(12)
    for _ in range(50):
        p = random_admissible(rng, r3_hi=1.5)
        R1, R2, _ = generators(p)
        step, acc = R2 @ R1, np.eye(3)
        for n in range(1, 21):
            acc = acc @ step.matrix
            scale = np.max(np.abs(acc))
            assert np.allclose(power_R2R1(p, n).matrix, acc, atol=1e-9 * scale)
        inv = (R1 @ R2).matrix
        acc = np.eye(3)
        for n in range(1, 21):
            acc = acc @ inv
            assert np.allclose(power_R2R1(p, -n).matrix, acc, atol=1e-9 * np.max(np.abs(acc)))


def test_translation_length_along_axis():
    for r3 in (1.01, 1.25, 2.0):
        m3 = 2 * math.acosh(r3)
        for j in range(0, 5):
            assert bergman_distance(lift(0), lift(v_coordinate(r3, j))) == pytest.approx(j * m3, abs=1e-9)
            # R2 R1 moves the origin of C12 by 2 m3 along the axis
            assert act_on_disk(power_R2R1(r3, j), 0) == pytest.approx(-v_coordinate(r3, 2 * j), abs=1e-12)


def _null_points_of_mirror(n3, count):
    a = hermitian_cross(n3, np.array([1, 0, 0], dtype=complex))
    b = hermitian_cross(n3, a)
    qa, qb = hermitian_product(a, a).real, hermitian_product(b, b).real
    if qa < 0:
        a, b, qa, qb = b, a, qb, qa
    a, b = a / math.sqrt(qa), b / math.sqrt(-qb)
    return [a + np.exp(1j * th) * b for th in np.linspace(0, 2 * np.pi, count, endpoint=False)]


def test_projected_disk_is_image_of_mirror_boundary():
    """Boundary of C3, projected orthogonally onto C12, sits at distance d3 from p3."""
    rng = np.random.default_rng(13)
    checked = 0
    while checked < 100:
        p = random_admissible(rng)
        if ultra_parallel_M(p) < 1.01:
            continue
        disk = projected_disk(p)
        n3 = polar_vectors(p).n3
        for x in _null_points_of_mirror(n3, 16):
            assert abs(hermitian_product(x, x)) < 1e-8 * np.vdot(x, x).real
            image = np.array([0, x[1], x[2]])  # projection along n12 = (1, 0, 0)
            d = bergman_distance(image, lift(disk.center))
            assert d == pytest.approx(disk.radius, rel=1e-7, abs=1e-7)
        checked += 1


def test_projected_disk_requires_ultra_parallel():
    # cos(alpha) at the existence bound makes C3 meet C12
    r1, r2, r3 = 1.3, 1.2, 1.1
    p = TriangleParams.from_cos(r1, r2, r3, (r1**2 + r2**2 + r3**2 - 1) / (2 * r1 * r2 * r3))
    with pytest.raises(ValueError):
        projected_disk(p)


def _projection_oracle(z):
    res = minimize_scalar(lambda x: bergman_distance(lift(z), lift(x)), bounds=(-1 + 1e-12, 1 - 1e-12),
                          method="bounded", options={"xatol": 1e-12})
    return res.x


def test_project_to_axis_minimises_distance():
    rng = np.random.default_rng(14)
    for _ in range(200):
        r, th = math.sqrt(rng.uniform(0, 0.9)), rng.uniform(0, 2 * np.pi)
        z = r * complex(math.cos(th), math.sin(th))
        assert project_to_axis(z) == pytest.approx(_projection_oracle(z), abs=1e-6)
    with pytest.raises(ValueError):
        project_to_axis(1.0)


def test_generators_preserve_c12_and_act_on_disk():
    rng = np.random.default_rng(15)
    for p in mixed_admissible(rng, 50):
        R1, R2, _ = generators(p)
        assert act_on_disk(R2, 0.3 + 0.2j) == pytest.approx(-(0.3 + 0.2j))
        u = 0.1 - 0.4j
        assert act_on_disk(R1, act_on_disk(R1, u)) == pytest.approx(u)


coords = st.floats(-0.95, 0.95)


@settings(max_examples=300, deadline=None)
@given(coords, coords)
def test_axis_projection_properties(x, y):
    if x * x + y * y >= 0.98:
        return
    z = complex(x, y)
    v = project_to_axis(z)
    assert -1 < v < 1
    assert v == pytest.approx(project_to_axis(z.conjugate()), abs=1e-14)
    assert project_to_axis(-z) == pytest.approx(-v, abs=1e-14)
    assert project_to_axis(complex(x, 0)) == pytest.approx(x, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(st.floats(1.001, 5.0), st.integers(0, 30))
def test_axis_points_increase(r3, j):
    assert v_coordinate(r3, j) < v_coordinate(r3, j + 1) or v_coordinate(r3, j + 1) == 1.0
    assert v_coordinate(r3, -j) == pytest.approx(-v_coordinate(r3, j))


@settings(max_examples=200, deadline=None)
@given(st.floats(1.001, 3.0), st.integers(-20, 20), st.integers(-20, 20))
def test_power_is_a_homomorphism(r3, a, b):
    A, B = power_R2R1(r3, a), power_R2R1(r3, b)
    rhs = power_R2R1(r3, a + b).matrix
    # rounding follows the size of the factors, which can cancel in the product
    scale = np.max(np.abs(A.matrix)) * np.max(np.abs(B.matrix))
    assert np.allclose((A @ B).matrix, rhs, rtol=0, atol=1e-13 * scale)
    assert A.form_residual() < 1e-13 * np.max(np.abs(A.matrix)) ** 2
    assert Model.BALL is power_R2R1(r3, a).model
