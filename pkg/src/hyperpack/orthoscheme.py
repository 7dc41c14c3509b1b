"""Doubly truncated Coxeter orthoschemes in the projective model of H^3.

A point is stored only by its coefficients over the vertex basis
``a_0 .. a_3``; inner products go through the inverse Gram matrix ``a``.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import (
    AmbiguousClassification,
    DomainError,
    InternalInconsistency,
    InvalidParameters,
    NotDoublyTruncated,
    NotHyperbolic,
    SymmetryUnavailable,
)
from .hypmath import arcosh

__all__ = [
    "SchlafliParams",
    "GramData",
    "FormPoint",
    "TruncationPoints",
    "KeyDistances",
    "TruncationAreas",
    "GUARD_BAND",
    "COSH_CLAMP",
    "build_gram",
    "numeric_inverse",
    "is_doubly_truncated",
    "truncation_points",
    "point_distance",
    "key_distances",
    "truncation_areas",
    "symmetry_witness",
]

GUARD_BAND = 1e-12
COSH_CLAMP = 1e-9
DISTANCE_CROSSCHECK_TOL = 1e-10


@dataclass(frozen=True)
class SchlafliParams:
    """Dihedral-angle denominators: the angles are pi/u, pi/v, pi/w."""

    u: float
    v: float
    w: float

    def __post_init__(self):
        for name in ("u", "v", "w"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, numbers.Real) or not math.isfinite(val):
                raise InvalidParameters(f"{name} must be a finite real, got {val!r}")
            if val < 3:
                raise InvalidParameters(f"{name} must be >= 3, got {val!r}")

    @property
    def integral(self) -> bool:
        return all(float(p).is_integer() for p in self.triple)

    @property
    def triple(self) -> tuple[float, float, float]:
        return (self.u, self.v, self.w)

    def swapped(self) -> SchlafliParams:
        return SchlafliParams(self.w, self.v, self.u)

    def canonical(self) -> SchlafliParams:
        """Orientation with u <= w."""
        return self if self.u <= self.w else self.swapped()

    def label(self) -> str:
        return "{" + ",".join(_fmt_param(p) for p in self.triple) + "}"


def _fmt_param(p: float) -> str:
    return str(int(p)) if float(p).is_integer() else repr(float(p))


def is_doubly_truncated(u, v, w) -> bool:
    """Exact test of 1/u + 1/v < 1/2 and 1/v + 1/w < 1/2 for integer input.

    Either inequality implies hyperbolicity, so this is a complete validity
    filter for integer triples. Non-integers fall back to floating point.
    """
    if all(float(p).is_integer() for p in (u, v, w)):
        # 1/x + 1/y < 1/2  <=>  2(x + y) < xy, exact in integers
        iu, iv, iw = (int(p) for p in (u, v, w))
        return 2 * (iu + iv) < iu * iv and 2 * (iv + iw) < iv * iw
    return 1 / u + 1 / v < 0.5 and 1 / v + 1 / w < 0.5


@dataclass(frozen=True, eq=False)
class GramData:
    """Coxeter-Schläfli matrix ``b``, its inverse ``a`` and ``B = det b``."""

    params: SchlafliParams
    b: np.ndarray
    a: np.ndarray
    B: float

    def inner(self, x, y) -> float:
        x = x.coeffs if isinstance(x, FormPoint) else np.asarray(x, dtype=float)
        y = y.coeffs if isinstance(y, FormPoint) else np.asarray(y, dtype=float)
        return float(x @ self.a @ y)

    def vertex(self, i: int) -> FormPoint:
        e = np.zeros(4)
        e[i] = 1.0
        return FormPoint(e, name=f"A{i}")


@dataclass(frozen=True, eq=False)
class FormPoint:
    coeffs: np.ndarray
    name: str = field(default="", compare=False)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (4,):
            raise ValueError(f"expected 4 coefficients, got shape {c.shape}")
        object.__setattr__(self, "coeffs", c)

    def __add__(self, other: FormPoint) -> FormPoint:
        return FormPoint(self.coeffs + other.coeffs)

    def is_proper(self, g: GramData) -> bool:
        return g.inner(self, self) < 0.0


def build_gram(params: SchlafliParams) -> GramData:
    """Assemble the Gram matrix and its closed-form inverse, classifying validity.

    Raises NotHyperbolic when ``B >= 0`` and NotDoublyTruncated when a
    principal vertex is not outer. Values within ``GUARD_BAND`` of a
    boundary raise AmbiguousClassification instead of picking a side.
    """
    cu, cv, cw = (math.cos(math.pi / p) for p in params.triple)
    su2, sw2 = math.sin(math.pi / params.u) ** 2, math.sin(math.pi / params.w) ** 2
    cv2 = cv * cv

    B = su2 * sw2 - cv2
    if abs(B) <= GUARD_BAND:
        raise AmbiguousClassification(f"{params.label()}: det B = {B:.3e} is inside the guard band")
    if B > 0:
        raise NotHyperbolic(f"{params.label()}: det B = {B:.6g} >= 0, not hyperbolic")

    b = np.array(
        [
            [1.0, -cu, 0.0, 0.0],
            [-cu, 1.0, -cv, 0.0],
            [0.0, -cv, 1.0, -cw],
            [0.0, 0.0, -cw, 1.0],
        ]
    )
    adj = np.array(
        [
            [sw2 - cv2, cu * sw2, cu * cv, cu * cv * cw],
            [cu * sw2, sw2, cv, cw * cv],
            [cu * cv, cv, su2, cw * su2],
            [cu * cv * cw, cw * cv, cw * su2, su2 - cv2],
        ]
    )
    a = adj / B

    for idx, vertex in ((0, "A0"), (3, "A3")):
        aii = a[idx, idx]
        if abs(aii) <= GUARD_BAND:
            raise AmbiguousClassification(
                f"{params.label()}: a_{idx}{idx} = {aii:.3e} is inside the guard band ({vertex})"
            )
        if aii < 0:
            raise NotDoublyTruncated(
                f"{params.label()}: principal vertex {vertex} is not an outer point (a_{idx}{idx} = {aii:.6g})",
                vertex=vertex,
            )
    return GramData(params=params, b=b, a=a, B=B)


def numeric_inverse(g: GramData) -> np.ndarray:
    """Generic LU inverse of ``b``; used to check the closed form."""
    return np.linalg.inv(g.b)


class TruncationPoints(NamedTuple):
    C: FormPoint
    L: FormPoint
    H: FormPoint
    J: FormPoint
    E: FormPoint
    Q: FormPoint


def truncation_points(g: GramData) -> TruncationPoints:
    """Vertices of the two truncating triangles CLH (polar of A0) and JEQ (polar of A3)."""
    a = g.a
    a00, a33 = a[0, 0], a[3, 3]
    if a00 <= 0 or a33 <= 0:
        raise NotDoublyTruncated("both principal vertices must be outer points")

    def on_polar(k, i, name):
        # a_i - (a_ki / a_kk) a_k lies on the polar plane of A_k
        c = np.zeros(4)
        c[i] = 1.0
        c[k] = -a[k, i] / a[k, k]
        return FormPoint(c, name=name)

    return TruncationPoints(
        C=on_polar(0, 1, "C"),
        L=on_polar(0, 2, "L"),
        H=on_polar(0, 3, "H"),
        J=on_polar(3, 0, "J"),
        E=on_polar(3, 1, "E"),
        Q=on_polar(3, 2, "Q"),
    )


def point_distance(x: FormPoint, y: FormPoint, g: GramData) -> float:
    """Hyperbolic distance of two proper points: cosh s = -<x,y> / sqrt(<x,x><y,y>)."""
    xx, yy = g.inner(x, x), g.inner(y, y)
    if not (xx < 0 and yy < 0):
        raise DomainError(f"distance needs proper points, got <x,x>={xx:.6g}, <y,y>={yy:.6g}")
    c = -g.inner(x, y) / math.sqrt(xx * yy)
    if c < 1.0:
        if c < 1.0 - COSH_CLAMP:
            raise DomainError(f"cosh argument {c!r} is below 1")
        c = 1.0
    return arcosh(c)


@dataclass(frozen=True)
class KeyDistances:
    dA1C: float
    dA2Q: float
    dJH: float

    @property
    def half_dJH(self) -> float:
        return 0.5 * self.dJH


def key_distances(g: GramData, crosscheck: bool = True) -> KeyDistances:
    """Distances d(A1,C), d(A2,Q), d(J,H) from the closed forms in ``a``.

    With ``crosscheck`` the same three lengths are recomputed from the
    truncation points and the general distance formula; a mismatch beyond
    1e-10 raises InternalInconsistency.
    """
    a = g.a
    a00, a33, a03 = a[0, 0], a[3, 3], a[0, 3]
    if a00 <= 0 or a33 <= 0:
        raise NotDoublyTruncated("both principal vertices must be outer points")
    kd = KeyDistances(
        dA1C=arcosh(1.0 / math.sqrt(a00)),
        dA2Q=arcosh(1.0 / math.sqrt(a33)),
        dJH=arcosh(-a03 / math.sqrt(a00 * a33)),
    )
    if crosscheck:
        pts = truncation_points(g)
        other = (
            point_distance(g.vertex(1), pts.C, g),
            point_distance(g.vertex(2), pts.Q, g),
            point_distance(pts.J, pts.H, g),
        )
        for name, mine, theirs in zip(("d(A1,C)", "d(A2,Q)", "d(J,H)"), (kd.dA1C, kd.dA2Q, kd.dJH), other):
            if abs(mine - theirs) > DISTANCE_CROSSCHECK_TOL * max(1.0, mine):
                raise InternalInconsistency(
                    f"{g.params.label()}: {name} closed form {mine!r} disagrees with point distance {theirs!r}"
                )
    return kd


@dataclass(frozen=True)
class TruncationAreas:
    area0: float  # triangle CLH
    area3: float  # triangle JEQ


def truncation_areas(params: SchlafliParams) -> TruncationAreas:
    """Areas of the right triangles cut out by the two polar planes (angle defect)."""
    u, v, w = params.triple
    area0 = math.pi / 2 - math.pi / v - math.pi / w
    area3 = math.pi / 2 - math.pi / v - math.pi / u
    if area0 <= 0:
        raise NotDoublyTruncated(f"{params.label()}: triangle CLH is degenerate", vertex="A0")
    if area3 <= 0:
        raise NotDoublyTruncated(f"{params.label()}: triangle JEQ is degenerate", vertex="A3")
    return TruncationAreas(area0, area3)


def symmetry_witness(g: GramData) -> tuple[FormPoint, FormPoint]:
    """Midpoints F03 (of JH) and F12 (of A1A2) on the half-turn axis; needs u = w."""
    p = g.params
    if abs(p.u - p.w) > GUARD_BAND:
        raise SymmetryUnavailable(f"{p.label()}: half-turn symmetry needs u = w")
    f03 = g.vertex(0) + g.vertex(3)
    f12 = g.vertex(1) + g.vertex(2)
    return FormPoint(f03.coeffs, name="F03"), FormPoint(f12.coeffs, name="F12")
