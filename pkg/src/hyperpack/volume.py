"""Closed-form volumes: the orthoscheme (Kellerhals) and a hyperball piece (Bolyai)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotHyperbolic
from .hypmath import lobachevsky
from .orthoscheme import GUARD_BAND, SchlafliParams

__all__ = ["OrthoschemeVolume", "orthoscheme_volume", "hyperball_piece_volume"]


@dataclass(frozen=True)
class OrthoschemeVolume:
    value: float
    theta: float


def orthoscheme_volume(params: SchlafliParams) -> OrthoschemeVolume:
    """Volume of the complete orthoscheme with essential angles pi/u, pi/v, pi/w."""
    a01, a12, a23 = (math.pi / p for p in params.triple)
    rad = math.cos(a12) ** 2 - math.sin(a01) ** 2 * math.sin(a23) ** 2
    if rad < 0:
        if rad < -GUARD_BAND:
            raise NotHyperbolic(f"{params.label()}: negative radicand {rad:.3e} in the volume formula")
        rad = 0.0
    theta = math.atan2(math.sqrt(rad), math.cos(a01) * math.cos(a23))
    args = np.array(
        [
            a01 + theta,
            a01 - theta,
            0.5 * math.pi + a12 - theta,
            0.5 * math.pi - a12 - theta,
            a23 + theta,
            a23 - theta,
            0.5 * math.pi - theta,
        ]
    )
    lv = lobachevsky(args)
    value = 0.25 * (lv[0] - lv[1] + lv[2] + lv[3] + lv[4] - lv[5] + 2.0 * lv[6])
    return OrthoschemeVolume(value=float(value), theta=theta)


def hyperball_piece_volume(area: float, h: float) -> float:
    """Volume of the hyperball slab of height ``h`` over a base polygon of ``area``.

    Bolyai's formula with unit curvature radius: area/4 * (sinh 2h + 2h).
    """
    if area < 0 or h < 0:
        raise DomainError(f"hyperball piece needs area >= 0 and h >= 0, got area={area!r}, h={h!r}")
    return 0.25 * area * (math.sinh(2.0 * h) + 2.0 * h)
