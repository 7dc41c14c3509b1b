"""Hyperball packing densities in a doubly truncated orthoscheme and their optimizers.

Three density modes are supported:

``two_congruent``
    equal hyperballs on both truncating planes, common height h.
``one_hyperball``
    a single hyperball on the better of the two planes.
``non_congruent``
    two hyperballs of independent heights h0, h3, optimized over the
    feasible region 0 <= h0 <= d(A1,C), 0 <= h3 <= d(A2,Q), h0 + h3 <= d(J,H).
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DomainError, EmptyScan, FeasibilityError, InternalInconsistency, InvalidParameters
from .hypmath import golden_section_max
from .orthoscheme import (
    KeyDistances,
    SchlafliParams,
    TruncationAreas,
    build_gram,
    is_doubly_truncated,
    key_distances,
    truncation_areas,
)
from .volume import hyperball_piece_volume, orthoscheme_volume

__all__ = [
    "MODES",
    "HeightProfile",
    "NonCongruentConfig",
    "BlowUpCase",
    "DensityResult",
    "normalize_mode",
    "height_profile",
    "density_two_congruent",
    "density_one_hyperball",
    "noncongruent_cases",
    "density_noncongruent",
    "optimize_noncongruent",
    "boundary_optimum",
    "evaluate",
    "scan_integer",
    "scan_real_p",
    "density_pp",
    "BOROCZKY_FLORIAN",
]

MODES = ("two_congruent", "one_hyperball", "non_congruent")
ROUTE_AGREEMENT_TOL = 1e-9
BOROCZKY_FLORIAN = 0.85328

_MODE_ALIASES = {
    "two_congruent": "two_congruent",
    "two-congruent": "two_congruent",
    "delta1": "two_congruent",
    "one_hyperball": "one_hyperball",
    "one-hyperball": "one_hyperball",
    "delta2": "one_hyperball",
    "non_congruent": "non_congruent",
    "noncongruent": "non_congruent",
    "noncongruent-opt": "non_congruent",
    "non-congruent": "non_congruent",
}


def normalize_mode(mode: str) -> str:
    try:
        return _MODE_ALIASES[mode]
    except KeyError:
        raise InvalidParameters(f"unknown density mode {mode!r}; expected one of {MODES}") from None


@dataclass(frozen=True)
class HeightProfile:
    h: float
    h0: float
    h3: float
    dA1C: float
    dA2Q: float
    dJH: float


@dataclass(frozen=True)
class NonCongruentConfig:
    h0: float
    h3: float
    x: float = 0.0
    case_label: str = "corner"


@dataclass(frozen=True)
class DensityResult:
    mode: str
    params: SchlafliParams
    heights: object  # HeightProfile or NonCongruentConfig
    piece_volumes: tuple[float, float]
    orthoscheme_volume: float
    density: float
    base: Optional[int] = None  # winning truncating plane (0 or 3) in one_hyperball mode

    @property
    def piece_volume_sum(self) -> float:
        return self.piece_volumes[0] + self.piece_volumes[1]

    @property
    def x(self) -> Optional[float]:
        return getattr(self.heights, "x", None)

    @property
    def case_label(self) -> Optional[str]:
        return getattr(self.heights, "case_label", None)


@dataclass(frozen=True)
class _Geometry:
    params: SchlafliParams
    dist: KeyDistances
    areas: TruncationAreas
    volume: float


@lru_cache(maxsize=1 << 17)
def _geometry(params: SchlafliParams) -> _Geometry:
    g = build_gram(params)
    return _Geometry(
        params=params,
        dist=key_distances(g),
        areas=truncation_areas(params),
        volume=orthoscheme_volume(params).value,
    )


def _as_params(params) -> SchlafliParams:
    if isinstance(params, SchlafliParams):
        return params
    return SchlafliParams(*params)


def height_profile(params) -> HeightProfile:
    """Maximal heights: h for two congruent balls, h0 and h3 for a single ball."""
    d = _geometry(_as_params(params)).dist
    return HeightProfile(
        h=min(d.half_dJH, d.dA2Q, d.dA1C),
        h0=min(d.dJH, d.dA1C),
        h3=min(d.dJH, d.dA2Q),
        dA1C=d.dA1C,
        dA2Q=d.dA2Q,
        dJH=d.dJH,
    )


def density_two_congruent(params) -> DensityResult:
    params = _as_params(params)
    geo = _geometry(params)
    hp = height_profile(params)
    pieces = (
        hyperball_piece_volume(geo.areas.area0, hp.h),
        hyperball_piece_volume(geo.areas.area3, hp.h),
    )
    return DensityResult(
        mode="two_congruent",
        params=params,
        heights=hp,
        piece_volumes=pieces,
        orthoscheme_volume=geo.volume,
        density=(pieces[0] + pieces[1]) / geo.volume,
    )


def density_one_hyperball(params) -> DensityResult:
    """Best single hyperball; ties go to the A0 plane."""
    params = _as_params(params)
    geo = _geometry(params)
    hp = height_profile(params)
    v0 = hyperball_piece_volume(geo.areas.area0, hp.h0)
    v3 = hyperball_piece_volume(geo.areas.area3, hp.h3)
    if v0 >= v3:
        base, pieces = 0, (v0, 0.0)
    else:
        base, pieces = 3, (0.0, v3)
    return DensityResult(
        mode="one_hyperball",
        params=params,
        heights=hp,
        piece_volumes=pieces,
        orthoscheme_volume=geo.volume,
        density=max(v0, v3) / geo.volume,
        base=base,
    )


@dataclass(frozen=True)
class BlowUpCase:
    """One blow-up family: heights as a function of x on ``[x_lo, x_hi]``."""

    label: str
    x_lo: float
    x_hi: float
    heights: Callable[[float], tuple[float, float]] = field(repr=False, compare=False)

    def config(self, x: float) -> NonCongruentConfig:
        if not self.x_lo <= x <= self.x_hi:
            raise FeasibilityError(
                f"x={x!r} outside case {self.label} interval [{self.x_lo!r}, {self.x_hi!r}]",
                constraint="x-interval",
            )
        h0, h3 = self.heights(x)
        return NonCongruentConfig(h0=h0, h3=h3, x=x, case_label=self.label)


def _under(first: float, second: float, total: float) -> float:
    """Largest value <= ``second`` whose floating sum with ``first`` stays <= ``total``."""
    second = max(0.0, min(second, total - first))
    while first + second > total and second > 0.0:
        second = math.nextafter(second, 0.0)
    return second


def _canonical_cases(d: KeyDistances) -> list[BlowUpCase]:
    # assumes d.dA1C <= d.dA2Q (u <= w); clamps keep every produced config feasible
    d1, d2, dj = d.dA1C, d.dA2Q, d.dJH
    if 0.5 * dj <= d1:
        h = 0.5 * dj

        def case_1a(x):
            h0 = min(h + x, d1)
            return h0, _under(h0, h - x, dj)

        def case_1b(x):
            h3 = min(h + x, d2)
            return _under(h3, h - x, dj), h3

        return [
            BlowUpCase("1a", 0.0, max(0.0, min(d1 - h, h)), case_1a),
            BlowUpCase("1b", 0.0, max(0.0, min(d2 - h, h)), case_1b),
        ]

    h = d1

    def case_2a(x):
        return h, _under(h, min(h + x, d2), dj)

    cases = [BlowUpCase("2a", 0.0, max(0.0, min(d2 - d1, dj - 2.0 * h)), case_2a)]
    bound_2b = d2 - dj + h
    if bound_2b >= 0.0:
        # ball 3 meets ball 0 before the opposite face: keep growing it along the tangency

        def case_2b(x):
            h3 = min(dj - h + x, d2)
            return _under(h3, h - x, dj), h3

        cases.append(BlowUpCase("2b", 0.0, min(bound_2b, h), case_2b))
    return cases


def noncongruent_cases(params) -> list[BlowUpCase]:
    """Blow-up families starting from the congruent optimum.

    For u > w the families of (w, v, u) are returned with the roles of the
    two truncating planes exchanged.
    """
    params = _as_params(params)
    if params.u <= params.w:
        return _canonical_cases(_geometry(params).dist)
    mirrored = _canonical_cases(_geometry(params.swapped()).dist)
    # distances of the mirror can differ from ours in the last ulp
    own = _geometry(params).dist

    def swap(fn):
        def heights(x):
            a, b = fn(x)
            h0 = min(b, own.dA1C)
            return h0, _under(h0, min(a, own.dA2Q), own.dJH)

        return heights

    return [BlowUpCase(c.label, c.x_lo, c.x_hi, swap(c.heights)) for c in mirrored]


def _check_feasible(geo: _Geometry, cfg: NonCongruentConfig, tol: float) -> None:
    d = geo.dist
    checks = [
        ("h0 >= 0", -cfg.h0 <= tol),
        ("h3 >= 0", -cfg.h3 <= tol),
        ("h0 <= d(A1,C)", cfg.h0 - d.dA1C <= tol),
        ("h3 <= d(A2,Q)", cfg.h3 - d.dA2Q <= tol),
        ("h0 + h3 <= d(J,H)", cfg.h0 + cfg.h3 - d.dJH <= tol),
    ]
    for name, ok in checks:
        if not ok:
            raise FeasibilityError(
                f"{geo.params.label()}: configuration h0={cfg.h0!r}, h3={cfg.h3!r} violates {name}",
                constraint=name,
            )


def _pair_density(geo: _Geometry, h0: float, h3: float) -> tuple[float, float, float]:
    v0 = hyperball_piece_volume(geo.areas.area0, h0)
    v3 = hyperball_piece_volume(geo.areas.area3, h3)
    return v0, v3, (v0 + v3) / geo.volume


def density_noncongruent(params, cfg: NonCongruentConfig, tol: float = 0.0) -> DensityResult:
    """Density of two hyperballs with the given heights; infeasible heights raise."""
    params = _as_params(params)
    geo = _geometry(params)
    _check_feasible(geo, cfg, tol)
    v0, v3, dens = _pair_density(geo, cfg.h0, cfg.h3)
    return DensityResult(
        mode="non_congruent",
        params=params,
        heights=cfg,
        piece_volumes=(v0, v3),
        orthoscheme_volume=geo.volume,
        density=dens,
    )


def _case_walk_optimum(params: SchlafliParams, tol: float) -> NonCongruentConfig:
    geo = _geometry(params)
    best, best_val = None, -math.inf
    for case in noncongruent_cases(params):

        def dens(x, case=case):
            h0, h3 = case.heights(x)
            return _pair_density(geo, h0, h3)[2]

        candidates = [case.x_lo, case.x_hi]
        if case.x_hi > case.x_lo:
            res = minimize_scalar(
                lambda x: -dens(x),
                bounds=(case.x_lo, case.x_hi),
                method="bounded",
                options={"xatol": tol},
            )
            candidates.append(float(res.x))
        for x in candidates:
            val = dens(x)
            # strict improvement keeps the earlier case/endpoint on exact ties
            if val > best_val + 1e-15:
                best, best_val = case.config(x), val
    return best


def boundary_optimum(params, tol: float = 1e-10) -> NonCongruentConfig:
    """Optimum over the feasible region by its geometry alone.

    The density increases in each height, so the optimum is the corner
    (d(A1,C), d(A2,Q)) when that corner is feasible, and otherwise lies on
    the tangency segment h0 + h3 = d(J,H).
    """
    params = _as_params(params)
    geo = _geometry(params)
    d1, d2, dj = geo.dist.dA1C, geo.dist.dA2Q, geo.dist.dJH
    if d1 + d2 <= dj:
        return NonCongruentConfig(h0=d1, h3=d2, x=0.0, case_label="corner")
    lo, hi = max(0.0, dj - d2), min(d1, dj)
    t, _ = golden_section_max(lambda t: _pair_density(geo, t, dj - t)[2], lo, hi, tol=tol)
    return NonCongruentConfig(h0=t, h3=_under(t, min(dj - t, d2), dj), x=0.0, case_label="segment")


def optimize_noncongruent(params, tol: float = 1e-10) -> DensityResult:
    """Densest non-congruent arrangement.

    Runs the blow-up case walk and the boundary optimizer independently and
    raises InternalInconsistency when their densities differ by more than
    1e-9. The returned configuration (x and case label) is the case walk's.
    """
    params = _as_params(params)
    geo = _geometry(params)
    walk = _case_walk_optimum(params, tol)
    edge = boundary_optimum(params, tol)
    res = density_noncongruent(params, walk)
    edge_density = _pair_density(geo, edge.h0, edge.h3)[2]
    if abs(res.density - edge_density) > ROUTE_AGREEMENT_TOL:
        raise InternalInconsistency(
            f"{params.label()}: case walk density {res.density!r} disagrees with "
            f"boundary optimum {edge_density!r}"
        )
    return res


_EVALUATORS = {
    "two_congruent": density_two_congruent,
    "one_hyperball": density_one_hyperball,
    "non_congruent": optimize_noncongruent,
}


def evaluate(mode: str, params) -> DensityResult:
    return _EVALUATORS[normalize_mode(mode)](_as_params(params))


def _evaluate_triple(args):
    mode, triple = args
    return evaluate(mode, SchlafliParams(*triple))


def _canonical_triples(u_range, v_range, w_range) -> list[tuple[int, int, int]]:
    seen = set()
    for u, v, w in itertools.product(u_range, v_range, w_range):
        key = (min(u, w), v, max(u, w))
        if key in seen:
            continue
        seen.add(key)
    return sorted(t for t in seen if is_doubly_truncated(*t))


def _sort_key(r: DensityResult):
    return (-r.density, r.params.triple)


def scan_integer(
    mode: str,
    u_range: Iterable[int],
    v_range: Iterable[int],
    w_range: Iterable[int],
    workers: Optional[int] = 1,
) -> list[DensityResult]:
    """Evaluate a density mode on every valid integer triple, densest first.

    Triples are canonicalized to u <= w and deduplicated; invalid ones are
    skipped. With ``workers`` > 1 (or None for all cores) evaluation is
    spread over processes; the final order does not depend on it.
    """
    mode = normalize_mode(mode)
    triples = _canonical_triples(list(u_range), list(v_range), list(w_range))
    if not triples:
        raise EmptyScan("no valid doubly truncated triple in the requested ranges")
    n_workers = os.cpu_count() if workers is None else workers
    jobs = [(mode, t) for t in triples]
    if n_workers and n_workers > 1 and len(jobs) > 64:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            results = list(pool.map(_evaluate_triple, jobs, chunksize=max(1, len(jobs) // (8 * n_workers))))
    else:
        results = [_evaluate_triple(j) for j in jobs]
    return sorted(results, key=_sort_key)


def density_pp(p: float) -> float:
    """Two-congruent density of the {p,3,p} orthoscheme, p real."""
    return density_two_congruent(SchlafliParams(p, 3.0, p)).density


def scan_real_p(p_lo: float, p_hi: float, tol: float = 1e-10, grid: int = 200) -> tuple[float, float]:
    """Maximize the two-congruent density of {p,3,p} over p in [p_lo, p_hi].

    A uniform pre-grid checks that there is a single local maximum before
    golden-section refinement inside the bracketing grid cell pair.
    """
    if not (6.0 < p_lo < p_hi <= 7.0):
        raise DomainError(f"need 6 < p_lo < p_hi <= 7, got ({p_lo!r}, {p_hi!r})")
    ps = np.linspace(p_lo, p_hi, grid)
    vals = np.array([density_pp(p) for p in ps])
    rising = np.diff(vals) > 0
    # a local maximum is a rise followed by a non-rise; the edges count as one-sided
    peaks = int(np.sum(rising[:-1] & ~rising[1:]))
    peaks += int(not rising[0]) + int(rising[-1])
    if peaks > 1:
        raise InternalInconsistency(f"{peaks} local maxima on the pre-grid over [{p_lo}, {p_hi}]")
    i = int(np.argmax(vals))
    lo, hi = ps[max(i - 1, 0)], ps[min(i + 1, grid - 1)]
    p_opt, dens = golden_section_max(density_pp, lo, hi, tol=tol)
    return float(p_opt), float(dens)
