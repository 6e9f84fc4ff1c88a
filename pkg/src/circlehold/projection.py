"""Projection of a split body into rotating vertical planes.

Separate a convex body ``K`` by a horizontal plane ``z = level`` into an
upper part and a lower part, then project both into the vertical plane
through direction ``theta``.  The projection coordinates are

    ``s = x*cos(theta) + y*sin(theta)``,  ``t = z - level``,

so the splitting plane becomes the horizontal axis ``t = 0`` of every
projected picture and :func:`~circlehold.planar.horizontal_width` applies
directly.  Scanning ``theta`` over ``[0, pi)`` covers all vertical planes —
``theta`` and ``theta + pi`` give mirror images with equal widths.

The upper part *hangs strictly inside* the lower part when the projected
upper width is strictly below the projected lower width for **every**
``theta``.  That is the key premise certified by :func:`iceberg_profile`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput
from .planar import Polygon2, Strip, convex_hull_2d, horizontal_width
from .polytope import HalfSpace, Polytope3, clip_halfspace


@dataclass
class ProjectedPair:
    """Projections of the two halves of a split body for one ``theta``."""

    theta: float
    upper: np.ndarray  # hull vertices in (s, t), t >= 0
    lower: np.ndarray  # hull vertices in (s, t), t <= 0

    def widths(self) -> tuple[float, float, Strip, Strip]:
        wa, sa = horizontal_width(self.upper)
        wb, sb = horizontal_width(self.lower)
        return wa, wb, sa, sb


def split_body(K: Polytope3, level: float = 0.0) -> tuple[Polytope3, Polytope3]:
    """Split a polytope by the horizontal plane ``z = level`` into its upper
    and lower closed parts.  The plane must cut the interior."""
    z = K.vertices[:, 2]
    if z.max() <= level or z.min() >= level:
        raise InvalidInput(f"plane z = {level} does not cut the body interior")
    upper = clip_halfspace(K, HalfSpace((0.0, 0.0, -1.0), -level))
    lower = clip_halfspace(K, HalfSpace((0.0, 0.0, 1.0), level))
    return upper, lower


def split_project(K: Polytope3, theta: float, level: float = 0.0,
                  halves: tuple[Polytope3, Polytope3] | None = None) -> ProjectedPair:
    """Project the two halves of a split body into the vertical plane
    through direction ``theta``.

    Pass precomputed ``halves`` (from :func:`split_body`) when sweeping many
    angles; the split is independent of ``theta``.
    """
    if halves is None:
        halves = split_body(K, level)
    upper, lower = halves
    c, s = np.cos(theta), np.sin(theta)

    def project(part: Polytope3) -> np.ndarray:
        v = part.vertices
        st = np.stack([v[:, 0] * c + v[:, 1] * s, v[:, 2] - level], axis=1)
        return convex_hull_2d(st)

    return ProjectedPair(float(theta), project(upper), project(lower))


@dataclass
class IcebergProfile:
    """Result of sweeping the projected widths over all vertical planes.

    ``margin`` is ``min over theta of (lower width - upper width)``: positive
    means the upper part hangs strictly inside the lower part at every
    sampled angle.  ``margin_flipped`` is the same quantity with the roles
    swapped.  ``orientation`` summarizes which part (if either) hangs inside
    the other:

    - ``"as_given"``      — upper part strictly narrower at every angle,
    - ``"flipped"``       — the body would qualify after turning it upside
      down: the lower part is strictly narrower at every angle,
    - ``"neither"``       — each part is strictly wider somewhere,
    - ``"indeterminate"`` — some margin vanishes to working precision, so
      sampling cannot decide strictness.
    """

    thetas: np.ndarray
    width_upper: np.ndarray
    width_lower: np.ndarray
    level: float
    margin: float
    margin_theta: float
    margin_flipped: float
    margin_flipped_theta: float
    orientation: str

    @property
    def margins(self) -> np.ndarray:
        return self.width_lower - self.width_upper


def _golden_refine(f, lo: float, hi: float, iters: int = 60) -> tuple[float, float]:
    """Golden-section minimization of a scalar function on [lo, hi]."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1 = b - invphi * (b - a)
    x2 = a + invphi * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - invphi * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + invphi * (b - a)
            f2 = f(x2)
    xm = (a + b) / 2.0
    return xm, f(xm)


def iceberg_profile(K: Polytope3, level: float = 0.0, theta_samples: int = 720,
                    strict_tol: float = 1e-7) -> IcebergProfile:
    """Sweep all vertical projection planes and compare the horizontal
    widths of the upper and lower parts of the split body.

    Widths are computed exactly per angle; ``theta_samples`` controls only
    the grid density.  The reported margins are grid minima refined by a
    golden-section search around the worst grid cell, so a strictly positive
    reported margin is a reliable certificate for bodies whose width
    functions vary smoothly between samples.
    """
    if theta_samples < 8:
        raise InvalidInput("need at least 8 angular samples")
    halves = split_body(K, level)
    thetas = np.linspace(0.0, np.pi, theta_samples, endpoint=False)
    wa = np.empty(theta_samples)
    wb = np.empty(theta_samples)
    for i, th in enumerate(thetas):
        pair = split_project(K, th, level, halves)
        wa[i], _ = horizontal_width(pair.upper)
        wb[i], _ = horizontal_width(pair.lower)

    def margin_at(th: float) -> float:
        pair = split_project(K, th, level, halves)
        a, _ = horizontal_width(pair.upper)
        b, _ = horizontal_width(pair.lower)
        return b - a

    step = np.pi / theta_samples

    def refined_min(values: np.ndarray, f) -> tuple[float, float]:
        k = int(np.argmin(values))
        th0 = thetas[k]
        th, val = _golden_refine(f, th0 - step, th0 + step)
        grid_val = float(values[k])
        if grid_val < val:
            return float(thetas[k]), grid_val
        return float(th % np.pi), float(val)

    m_theta, m_given = refined_min(wb - wa, margin_at)
    mf_theta, m_flip = refined_min(wa - wb, lambda th: -margin_at(th))

    if m_given > strict_tol:
        orientation = "as_given"
    elif m_flip > strict_tol:
        orientation = "flipped"
    elif max(m_given, m_flip) >= -strict_tol:
        orientation = "indeterminate"
    else:
        orientation = "neither"

    return IcebergProfile(
        thetas=thetas, width_upper=wa, width_lower=wb, level=float(level),
        margin=float(m_given), margin_theta=m_theta,
        margin_flipped=float(m_flip), margin_flipped_theta=mf_theta,
        orientation=orientation,
    )
