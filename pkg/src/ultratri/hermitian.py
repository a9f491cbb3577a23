"""Linear algebra on C^{2,1}: Hermitian forms, distances, reflections, trace classes.

Two models are supported. The ball model uses diag(1, 1, -1) as Gram
matrix, the Siegel model uses the antidiagonal form z1*conj(w3) + z2*conj(w2)
+ z3*conj(w1).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

EPS_FORM = 1e-10
EPS_CLASS = 1e-9


class Model(enum.Enum):
    BALL = "ball"
    SIEGEL = "siegel"

    @property
    def gram(self) -> np.ndarray:
        return _GRAMS[self].copy()


_GRAMS = {
    Model.BALL: np.diag([1.0, 1.0, -1.0]).astype(complex),
    Model.SIEGEL: np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]], dtype=complex),
}


class VectorClass(enum.Enum):
    NEGATIVE = "negative"
    NULL = "null"
    POSITIVE = "positive"


class IsometryKind(enum.Enum):
    LOXODROMIC = "loxodromic"
    REGULAR_ELLIPTIC = "regular_elliptic"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class IsometryClass:
    kind: IsometryKind
    margin: float
    trace: complex

    @property
    def unipotent_candidate(self) -> bool:
        """Boundary class whose trace is 3, i.e. the parabolic end of the elliptic band."""
        # the discriminant band around tau = 3 has width ~ (eps/4)^(1/3) in tau
        return self.kind is IsometryKind.BOUNDARY and abs(self.trace - 3) <= 1e-3

    @property
    def non_elliptic(self) -> bool:
        return self.kind is IsometryKind.LOXODROMIC or self.unipotent_candidate


def _vec(z) -> np.ndarray:
    v = np.asarray(z, dtype=complex)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    return v


def hermitian_product(z, w, model: Model = Model.BALL) -> complex:
    """<z, w> = w^H J z; linear in z, conjugate-linear in w."""
    z, w = _vec(z), _vec(w)
    return complex(w.conj() @ _GRAMS[model] @ z)


def vector_class(z, model: Model = Model.BALL, eps: float = EPS_FORM) -> VectorClass:
    z = _vec(z)
    if not np.any(z):
        raise ValueError("the zero vector has no class")
    q = hermitian_product(z, z, model).real
    if abs(q) <= eps:
        return VectorClass.NULL
    return VectorClass.NEGATIVE if q < 0 else VectorClass.POSITIVE


def hermitian_cross(z, w, model: Model = Model.BALL) -> np.ndarray:
    """Vector orthogonal to z and w under the model's form.

    With a = J conj(z) and b = J conj(w) the condition <x, z> = 0 reads a . x = 0,
    so x is (minus) the ordinary cross product a x b. In the ball model this is
    exactly the textbook component formula.
    """
    z, w = _vec(z), _vec(w)
    J = _GRAMS[model]
    x = -np.cross(J @ z.conj(), J @ w.conj())
    scale = np.linalg.norm(z) * np.linalg.norm(w)
    if np.linalg.norm(x) <= EPS_FORM * max(scale, 1.0):
        raise ValueError("hermitian_cross: inputs are proportional")
    return x


def bergman_distance(z, w, model: Model = Model.BALL) -> float:
    """Distance with cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>)."""
    z, w = _vec(z), _vec(w)
    zz = hermitian_product(z, z, model).real
    ww = hermitian_product(w, w, model).real
    if zz >= 0 or ww >= 0:
        raise ValueError("bergman_distance needs negative vectors")
    zw = hermitian_product(z, w, model)
    ch2 = (zw * zw.conjugate()).real / (zz * ww)
    return 2.0 * float(np.arccosh(np.sqrt(max(ch2, 1.0))))


@dataclass(frozen=True, eq=False)
class Isometry:
    """3x3 matrix together with the model whose form it preserves."""

    matrix: np.ndarray
    model: Model = Model.BALL

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (3, 3):
            raise ValueError(f"expected 3x3 matrix, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __matmul__(self, other: Isometry) -> Isometry:
        if other.model is not self.model:
            raise ValueError("cannot compose isometries from different models")
        return Isometry(self.matrix @ other.matrix, self.model)

    def __call__(self, z) -> np.ndarray:
        return self.matrix @ _vec(z)

    def __pow__(self, n: int) -> Isometry:
        if n >= 0:
            return Isometry(np.linalg.matrix_power(self.matrix, n), self.model)
        return Isometry(np.linalg.matrix_power(self.inverse().matrix, -n), self.model)

    def inverse(self) -> Isometry:
        # M^{-1} = J^{-1} M^H J for form-preserving M; J is an involution in both models.
        J = _GRAMS[self.model]
        return Isometry(J @ self.matrix.conj().T @ J, self.model)

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def form_residual(self) -> float:
        J = _GRAMS[self.model]
        return float(np.max(np.abs(self.matrix.conj().T @ J @ self.matrix - J)))

    def det_residual(self) -> float:
        return float(abs(np.linalg.det(self.matrix) - 1))

    def check(self, eps: float = EPS_FORM) -> None:
        # Scale by entry size: products of long words have large entries.
        scale = max(1.0, float(np.max(np.abs(self.matrix)))) ** 2
        if self.form_residual() > eps * scale:
            raise ValueError(f"matrix does not preserve the {self.model.value} form")
        if self.det_residual() > eps * scale ** 1.5:
            raise ValueError("matrix is not unimodular")


def reflection_from_polar(n, model: Model = Model.BALL) -> Isometry:
    """Complex reflection z -> -z + 2 <z,n>/<n,n> n in the mirror polar to n."""
    n = _vec(n)
    nn = hermitian_product(n, n, model).real
    if nn <= EPS_FORM * max(1.0, float(np.linalg.norm(n)) ** 2):
        raise ValueError("polar vector must be positive")
    J = _GRAMS[model]
    m = -np.eye(3, dtype=complex) + 2.0 * np.outer(n, n.conj() @ J) / nn
    return Isometry(m, model)


def trace_discriminant(tau: complex) -> float:
    """|tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27; equals (tau-3)^3 (tau+1) for real tau."""
    a2 = abs(tau) ** 2
    return a2 * a2 - 8.0 * (tau**3).real + 18.0 * a2 - 27.0


def classify_isometry(m: Isometry | np.ndarray, eps: float = EPS_CLASS) -> IsometryClass:
    if not isinstance(m, Isometry):
        m = Isometry(m)
    scale = max(1.0, float(np.max(np.abs(m.matrix)))) ** 3
    if m.det_residual() > 1e-8 * scale:
        raise ValueError("classification needs a determinant-one lift")
    tau = m.trace
    f = trace_discriminant(tau)
    if f > eps:
        kind = IsometryKind.LOXODROMIC
    elif f < -eps:
        kind = IsometryKind.REGULAR_ELLIPTIC
    else:
        kind = IsometryKind.BOUNDARY
    return IsometryClass(kind, float(f), tau)


def classify_real_trace(tau: float, eps: float = EPS_CLASS) -> IsometryClass:
    """Classification for words known to have real trace.

    Bands are taken on tau - 3 and tau + 1 rather than on the discriminant,
    which is flat (cubic) at tau = 3.
    """
    tau = float(tau)
    f = (tau - 3.0) ** 3 * (tau + 1.0)
    if abs(tau - 3.0) <= eps or abs(tau + 1.0) <= eps:
        kind = IsometryKind.BOUNDARY
    elif -1.0 < tau < 3.0:
        kind = IsometryKind.REGULAR_ELLIPTIC
    else:
        kind = IsometryKind.LOXODROMIC
    return IsometryClass(kind, float(f), complex(tau))
