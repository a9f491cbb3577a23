import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _sampling import random_negative, random_positive
from ultratri import (
    IsometryKind,
    Model,
    bergman_distance,
    classify_isometry,
    hermitian_cross,
    hermitian_product,
    reflection_from_polar,
    vector_class,
)
from ultratri.hermitian import Isometry, VectorClass, classify_real_trace, trace_discriminant

MODELS = [Model.BALL, Model.SIEGEL]


def test_product_is_sesquilinear():
    rng = np.random.default_rng(0)
    for model in MODELS:
        z, w = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        lam = 0.3 - 1.7j
        assert hermitian_product(lam * z, w, model) == pytest.approx(lam * hermitian_product(z, w, model))
        assert hermitian_product(z, lam * w, model) == pytest.approx(
            np.conj(lam) * hermitian_product(z, w, model))
        assert hermitian_product(w, z, model) == pytest.approx(np.conj(hermitian_product(z, w, model)))


def test_vector_classes():
    assert vector_class([0, 0, 1]) is VectorClass.NEGATIVE
    assert vector_class([1, 0, 1]) is VectorClass.NULL
    assert vector_class([0, 1, 0]) is VectorClass.POSITIVE
    # Siegel: (-|zeta|^2 + it, sqrt2 zeta, 1) is null, (-1, 0, 1) is negative
    assert vector_class([-2 + 3j, math.sqrt(2) * (1 + 1j), 1], Model.SIEGEL) is VectorClass.NULL
    assert vector_class([-1, 0, 1], Model.SIEGEL) is VectorClass.NEGATIVE
    with pytest.raises(ValueError):
        vector_class([0, 0, 0])


def test_cross_product_example():
    assert np.allclose(hermitian_cross([1, 0, 0], [0, 1, 0]), [0, 0, -1])


def test_cross_product_ball_component_formula():
    rng = np.random.default_rng(1)
    for _ in range(50):
        z, w = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        zc, wc = z.conj(), w.conj()
        textbook = np.array([
            zc[1] * wc[2] - zc[2] * wc[1],
            zc[2] * wc[0] - zc[0] * wc[2],
            zc[1] * wc[0] - zc[0] * wc[1],
        ])
        assert np.allclose(hermitian_cross(z, w), textbook)


@pytest.mark.parametrize("model", MODELS)
def test_cross_product_is_orthogonal(model):
    rng = np.random.default_rng(2)
    for _ in range(100):
        z, w = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
        x = hermitian_cross(z, w, model)
        scale = np.linalg.norm(x) * max(np.linalg.norm(z), np.linalg.norm(w))
        assert abs(hermitian_product(x, z, model)) < 1e-12 * scale
        assert abs(hermitian_product(x, w, model)) < 1e-12 * scale


def test_cross_product_rejects_proportional():
    with pytest.raises(ValueError):
        hermitian_cross([1, 2j, 0], [2, 4j, 0])


def test_bergman_distance_known_value():
    # origin to (x, 0): cosh^2(rho/2) = 1/(1-x^2)
    x = 0.6
    d = bergman_distance([0, 0, 1], [x, 0, 1])
    assert math.cosh(d / 2) ** 2 == pytest.approx(1 / (1 - x * x))
    with pytest.raises(ValueError):
        bergman_distance([1, 0, 1], [0, 0, 1])


@pytest.mark.parametrize("model", MODELS)
def test_bergman_triangle_inequality_and_invariance(model):
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b, c = (random_negative(rng, model) for _ in range(3))
        dab, dbc, dac = bergman_distance(a, b, model), bergman_distance(b, c, model), bergman_distance(a, c, model)
        assert dac <= dab + dbc + 1e-9
        assert dab == pytest.approx(bergman_distance(b, a, model))
        R = reflection_from_polar(random_positive(rng, model), model)
        assert bergman_distance(R(a), R(b), model) == pytest.approx(dab, abs=1e-8)
        assert bergman_distance(2j * a, b, model) == pytest.approx(dab, abs=1e-8)


@pytest.mark.parametrize("model", MODELS)
def test_reflection_structure(model):
    rng = np.random.default_rng(4)
    for _ in range(200):
        n = random_positive(rng, model)
        R = reflection_from_polar(n, model)
        assert np.allclose((R @ R).matrix, np.eye(3), atol=1e-10)
        assert R.form_residual() < 1e-10
        assert abs(np.linalg.det(R.matrix) - 1) < 1e-10
        assert np.allclose(R(n), n)
        v = hermitian_cross(n, rng.normal(size=3) + 0j, model)
        assert np.allclose(R(v), -v, atol=1e-9 * np.linalg.norm(v))


def test_reflection_needs_positive_polar():
    with pytest.raises(ValueError):
        reflection_from_polar([0, 0, 1])
    with pytest.raises(ValueError):
        reflection_from_polar([1, 0, 1])


def test_real_trace_discriminant_factorises():
    for tau in np.linspace(-3, 6, 37):
        assert trace_discriminant(tau) == pytest.approx((tau - 3) ** 3 * (tau + 1), abs=1e-9)


@pytest.mark.parametrize(
    "tau, kind",
    [(5.0, IsometryKind.LOXODROMIC), (-2.0, IsometryKind.LOXODROMIC), (0.0, IsometryKind.REGULAR_ELLIPTIC),
     (2.9999, IsometryKind.REGULAR_ELLIPTIC), (3.0001, IsometryKind.LOXODROMIC), (3.0, IsometryKind.BOUNDARY),
     (-1.0, IsometryKind.BOUNDARY)],
)
def test_real_trace_classes(tau, kind):
    cls = classify_real_trace(tau)
    assert cls.kind is kind
    assert cls.non_elliptic == (tau >= 3 or tau < -1)


def test_classify_matrices():
    # hyperbolic translation along a real geodesic: trace 1 + 2 cosh(l) > 3
    l = 0.7
    A = np.array([[1, 0, 0], [0, math.cosh(l), math.sinh(l)], [0, math.sinh(l), math.cosh(l)]])
    assert classify_isometry(A).kind is IsometryKind.LOXODROMIC
    # rotation about the origin with distinct eigenvalues
    th = 0.4
    E = np.diag(np.exp(1j * np.array([th, 2 * th, -3 * th])))
    assert classify_isometry(E).kind is IsometryKind.REGULAR_ELLIPTIC
    assert classify_isometry(np.eye(3)).kind is IsometryKind.BOUNDARY
    with pytest.raises(ValueError):
        classify_isometry(2 * np.eye(3))


def test_classification_is_conjugation_invariant():
    rng = np.random.default_rng(5)
    for _ in range(100):
        g = reflection_from_polar(random_positive(rng, Model.BALL)) @ reflection_from_polar(
            random_positive(rng, Model.BALL))
        h = reflection_from_polar(random_positive(rng, Model.BALL))
        k1 = classify_isometry(g)
        k2 = classify_isometry(h @ g @ h.inverse())
        if abs(k1.margin) > 1e-6:
            assert k1.kind is k2.kind


def test_inverse_and_powers():
    rng = np.random.default_rng(6)
    g = reflection_from_polar(random_positive(rng, Model.SIEGEL), Model.SIEGEL) @ reflection_from_polar(
        random_positive(rng, Model.SIEGEL), Model.SIEGEL)
    assert np.allclose((g @ g.inverse()).matrix, np.eye(3), atol=1e-9)
    assert np.allclose((g ** -2 @ g ** 2).matrix, np.eye(3), atol=1e-8)
    g.check()
    with pytest.raises(ValueError):
        Isometry(np.diag([2, 1, 1])).check()
    with pytest.raises(ValueError):
        Isometry(np.eye(3)) @ Isometry(np.eye(3), Model.SIEGEL)


finite = st.floats(-3, 3, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(st.lists(finite, min_size=6, max_size=6), st.lists(finite, min_size=6, max_size=6))
def test_cross_orthogonality_property(a, b):
    z = np.array(a[:3]) + 1j * np.array(a[3:])
    w = np.array(b[:3]) + 1j * np.array(b[3:])
    try:
        x = hermitian_cross(z, w, Model.SIEGEL)
    except ValueError:
        return
    # rounding in x is relative to |z||w|, not to |x|, when z and w are nearly proportional
    nz, nw = np.linalg.norm(z), np.linalg.norm(w)
    scale = nz * nw * (nz + nw)
    assert abs(hermitian_product(x, z, Model.SIEGEL)) <= 1e-14 * scale
    assert abs(hermitian_product(x, w, Model.SIEGEL)) <= 1e-14 * scale


@settings(max_examples=200, deadline=None)
@given(st.floats(-20, 20))
def test_classify_real_trace_is_total(tau):
    cls = classify_real_trace(tau)
    assert cls.kind in IsometryKind
    if cls.kind is IsometryKind.REGULAR_ELLIPTIC:
        assert -1 < tau < 3
