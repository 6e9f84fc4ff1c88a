"""Holding-circle machinery.

A *holding circle* of a convex body is a circle that does not meet the
body's interior and that no Euclidean displacement can move arbitrarily far
from the body.  This module provides the computational side of that notion:

- an exact circle-versus-polytope interior test with witnesses,
- cross-section circumcircle profiles along an axis,
- translation-blocking certificates (the one-parameter escape family),
- a lower bound from pairwise distances of non-adjacent edges,
- a randomized escape search over circle poses,
- the projection chain certificate that bounds the circle diameter from
  below by two thirds of the body width,
- a minimal-circle search built on cross-section waists, and
- diagnostics measuring how close a configuration is to the extremal one
  (tangent equilateral region, three balanced contact clusters).

Whether a circle *holds* a body has no known finite decision procedure, so
the strongest verdict issued here is ``CertifiedHoldingEvidence``: the
cheap necessary certificates all pass and a budgeted escape search failed.
That is evidence, not proof.  ``EscapeFound`` on the other hand is
constructive: it comes with a validated collision-free path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import cKDTree

from .errors import (CertificationError, InvalidInput, InvalidStart,
                     NoBlockingSlice, NotFound)
from .planar import (Circle2, Polygon2, best_fit_equilateral,
                     chebyshev_inscribed, clip_halfplane_2d, convex_hull_2d,
                     horizontal_width, min_enclosing_circle, width2)
from .polytope import (HalfSpace, Polytope3, clip_halfspace, min_cylinder,
                       plane_frame, segment_distance, width3)
from .projection import _golden_refine
from .tolerances import DEFAULT_SEED, TOL_GEOM, TOL_OPT

VERDICT_EVIDENCE = "CertifiedHoldingEvidence"
VERDICT_ESCAPE = "EscapeFound"
VERDICT_INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Circle3:
    """Circle in 3-space: center, diameter, unit plane normal."""

    center: tuple[float, float, float]
    diameter: float
    normal: tuple[float, float, float]

    def __post_init__(self):
        n = np.asarray(self.normal, float)
        ln = np.linalg.norm(n)
        if not np.isfinite(ln) or ln == 0:
            raise InvalidInput("circle normal must be a nonzero vector")
        object.__setattr__(self, "normal", tuple(float(x) for x in n / ln))
        if not (self.diameter > 0):
            raise InvalidInput("circle diameter must be positive")
        object.__setattr__(self, "center", tuple(float(x) for x in self.center))

    @property
    def radius(self) -> float:
        return self.diameter / 2.0

    @property
    def center_array(self) -> np.ndarray:
        return np.asarray(self.center, float)

    def frame(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return plane_frame(np.asarray(self.normal, float))

    def points(self, t) -> np.ndarray:
        """Points ``center + r(cos t e1 + sin t e2)`` for angles ``t``."""
        e1, e2, _ = self.frame()
        t = np.atleast_1d(np.asarray(t, float))
        return (self.center_array
                + self.radius * (np.cos(t)[:, None] * e1 + np.sin(t)[:, None] * e2))

    def translated(self, delta) -> "Circle3":
        return Circle3(tuple(self.center_array + np.asarray(delta, float)),
                       self.diameter, self.normal)


# ---------------------------------------------------------------------------
# circle vs. polytope interior
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PenetrationWitness:
    """Outcome of the circle-interior test.

    ``penetration`` is the largest interior depth found on the circle (how
    far inside every face plane the witness point sits); negative values mean
    the whole circle stays outside by at least that slack at the tested
    angles.  ``intersects`` is exact for the given ``tol``; the depth is
    informational."""

    intersects: bool
    penetration: float
    angle: float | None
    point: np.ndarray | None

    def __bool__(self) -> bool:
        return self.intersects


def circle_interior_intersects(K: Polytope3, C: Circle3,
                               tol: float = TOL_GEOM) -> PenetrationWitness:
    """Exact test whether a circle meets the interior of a polytope.

    On the circle each face inequality ``n_f . p(t) < b_f - tol`` holds on an
    open angular arc (``R_f cos(t - phi_f) < gamma_f``).  The circle meets
    the interior iff the intersection of all arcs is non-empty, which is
    decided exactly by cutting the circle at every arc endpoint and testing
    one midpoint per elementary arc.  ``tol`` is the depth a point must
    reach to count as interior.
    """
    n, b = K.face_planes()
    e1, e2, _ = C.frame()
    r = C.radius
    c = C.center_array
    beta = n @ c
    A = r * (n @ e1)
    B = r * (n @ e2)
    R = np.hypot(A, B)
    phi = np.arctan2(B, A)
    gamma = b - tol - beta

    def depth(ts: np.ndarray) -> np.ndarray:
        # interior depth (positive inside) at angles ts, against all faces
        ts = np.atleast_1d(ts)
        vals = beta[None, :] + R[None, :] * np.cos(ts[:, None] - phi[None, :])
        return -(vals - b[None, :]).max(axis=1)

    flat = R <= 1e-13 * max(r, 1.0)
    if np.any(gamma[flat] <= 0.0):
        probe = np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False)
        dep = depth(probe)
        k = int(np.argmax(dep))
        return PenetrationWitness(False, float(dep[k]), None, None)

    active = ~flat
    ratio = np.empty_like(R)
    ratio[active] = gamma[active] / R[active]
    if np.any(ratio[active] <= -1.0):
        probe = np.linspace(0.0, 2.0 * np.pi, 8, endpoint=False)
        dep = depth(probe)
        k = int(np.argmax(dep))
        return PenetrationWitness(False, float(dep[k]), None, None)

    binding = active & (ratio < 1.0)
    if not binding.any():
        dep = depth(np.array([0.0]))
        hit = bool(dep[0] > tol)
        return PenetrationWitness(hit, float(dep[0]), 0.0 if hit else None,
                                  C.points(0.0)[0] if hit else None)

    alpha = np.arccos(np.clip(ratio[binding], -1.0, 1.0))
    ends = np.concatenate([phi[binding] + alpha, phi[binding] - alpha])
    ends = np.sort(np.mod(ends, 2.0 * np.pi))
    gaps = np.diff(np.concatenate([ends, [ends[0] + 2.0 * np.pi]]))
    mids = np.mod(ends + gaps / 2.0, 2.0 * np.pi)
    dep = depth(mids)
    k = int(np.argmax(dep))
    hit = bool(dep[k] > tol)
    t_best = float(mids[k])
    return PenetrationWitness(hit, float(dep[k]),
                              t_best if hit else None,
                              C.points(t_best)[0] if hit else None)


def sampled_penetration(K: Polytope3, C: Circle3,
                        samples: int = 10_000) -> tuple[float, float]:
    """Max interior depth over uniformly sampled circle points (an oracle
    for cross-checking the exact test).  Returns ``(depth, angle)``."""
    t = np.linspace(0.0, 2.0 * np.pi, samples, endpoint=False)
    pts = C.points(t)
    n, b = K.face_planes()
    dep = -(pts @ n.T - b).max(axis=1)
    k = int(np.argmax(dep))
    return float(dep[k]), float(t[k])


# ---------------------------------------------------------------------------
# cross-section scanning
# ---------------------------------------------------------------------------

class _SliceScanner:
    """Cross-sections of a polytope perpendicular to a fixed axis.

    Works in the deterministic frame of :func:`plane_frame`; 2D coordinates
    are relative to ``origin`` so a circle centered there sits at the
    2D origin."""

    def __init__(self, K: Polytope3, axis, origin=None):
        e1, e2, n = plane_frame(np.asarray(axis, float))
        self.frame = (e1, e2, n)
        self.origin = np.zeros(3) if origin is None else np.asarray(origin, float)
        rel = K.vertices - self.origin
        self.V2 = np.stack([rel @ e1, rel @ e2], axis=1)
        self.h = rel @ n
        self.edges = np.asarray(K.edges, dtype=int)
        self.scale = max(1.0, float(np.abs(K.vertices).max()))
        self.h_min = float(self.h.min())
        self.h_max = float(self.h.max())

    def points2(self, t: float) -> np.ndarray:
        eps = 1e-12 * self.scale
        d = self.h - t
        parts = [self.V2[np.abs(d) <= eps]]
        a, bb = self.edges[:, 0], self.edges[:, 1]
        da, db = d[a], d[bb]
        m = ((da < -eps) & (db > eps)) | ((da > eps) & (db < -eps))
        if m.any():
            lam = (da[m] / (da[m] - db[m]))[:, None]
            parts.append(self.V2[a[m]] + lam * (self.V2[bb[m]] - self.V2[a[m]]))
        return np.vstack(parts)

    def circum(self, t: float) -> Circle2 | None:
        P = self.points2(t)
        if len(P) == 0:
            return None
        return min_enclosing_circle(convex_hull_2d(P), seed=1)

    def diam(self, t: float) -> float:
        c = self.circum(t)
        return 0.0 if c is None else 2.0 * c.radius

    def lift(self, p2, t: float) -> np.ndarray:
        e1, e2, n = self.frame
        return self.origin + p2[0] * e1 + p2[1] * e2 + t * n

    def grid(self, lo: float, hi: float, n: int) -> np.ndarray:
        span = max(hi - lo, 1e-30)
        bp = self.h[(self.h > lo + 1e-12 * span) & (self.h < hi - 1e-12 * span)]
        g = np.sort(np.concatenate([[lo, hi], bp, np.linspace(lo, hi, n)]))
        keep = np.concatenate([[True], np.diff(g) > 1e-12 * span])
        return g[keep]


@dataclass
class SliceCircumProfile:
    """Circumcircle of the cross-section at each scanned height."""

    axis: np.ndarray
    heights: np.ndarray
    diameters: np.ndarray
    centers2: np.ndarray
    frame: tuple[np.ndarray, np.ndarray, np.ndarray]
    origin: np.ndarray

    def center3(self, i: int) -> np.ndarray:
        e1, e2, n = self.frame
        return (self.origin + self.centers2[i, 0] * e1
                + self.centers2[i, 1] * e2 + self.heights[i] * n)


def slice_circum_profile(K: Polytope3, axis, n_heights: int = 200,
                         lo: float | None = None,
                         hi: float | None = None) -> SliceCircumProfile:
    """Scan cross-sections perpendicular to ``axis`` and record the minimal
    enclosing circle of each.  The scan grid is a uniform grid joined with
    every vertex height (where the profile kinks) and both endpoints."""
    sc = _SliceScanner(K, axis)
    lo = sc.h_min if lo is None else max(lo, sc.h_min)
    hi = sc.h_max if hi is None else min(hi, sc.h_max)
    if hi < lo:
        raise InvalidInput("empty height range")
    g = sc.grid(lo, hi, n_heights)
    diams = np.empty(len(g))
    cents = np.empty((len(g), 2))
    for i, t in enumerate(g):
        c = sc.circum(t)
        if c is None:
            diams[i], cents[i] = 0.0, (np.nan, np.nan)
        else:
            diams[i] = 2.0 * c.radius
            cents[i] = c.center
    e1, e2, n = sc.frame
    return SliceCircumProfile(n, g, diams, cents, sc.frame, sc.origin)


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SideBlock:
    blocked: bool
    height: float | None   # offset along the normal from the circle plane
    circumdiameter: float
    margin: float


@dataclass(frozen=True)
class TranslationBlock:
    above: SideBlock
    below: SideBlock

    @property
    def blocked_above(self) -> bool:
        return self.above.blocked

    @property
    def blocked_below(self) -> bool:
        return self.below.blocked


def translation_block_certificate(K: Polytope3, C: Circle3,
                                  n_heights: int = 200,
                                  tol_opt: float = TOL_OPT) -> TranslationBlock:
    """Check, on each side of the circle's plane, for a cross-section whose
    circumcircle diameter exceeds the circle's by more than ``tol_opt``.

    Such a section cannot pass through the circle, so it blocks the
    one-parameter escape family that slides the circle along its own axis
    following the curve of section circumcenters.  This is a necessary
    condition for holding — a body blocked on both sides may still be
    escapable by richer motions, which is what :func:`escape_search`
    probes."""
    sc = _SliceScanner(K, np.asarray(C.normal, float), origin=C.center_array)
    d = C.diameter
    span = sc.h_max - sc.h_min

    def scan(lo: float, hi: float, sign: float) -> SideBlock:
        if hi - lo <= 1e-12 * max(span, 1.0):
            return SideBlock(False, None, 0.0, -d)
        g = sc.grid(lo, hi, n_heights)
        vals = np.array([sc.diam(t) for t in g])
        k = int(np.argmax(vals))
        a = g[max(k - 1, 0)]
        b = g[min(k + 1, len(g) - 1)]
        t_ref, neg = _golden_refine(lambda t: -sc.diam(t), a, b)
        best_t, best_d = (float(g[k]), float(vals[k]))
        if -neg > best_d:
            best_t, best_d = float(t_ref), float(-neg)
        return SideBlock(best_d > d + tol_opt, sign * abs(best_t),
                         best_d, best_d - d)

    eps = 1e-9 * max(span, 1.0)
    above = scan(eps, sc.h_max, +1.0) if sc.h_max > eps else SideBlock(False, None, 0.0, -d)
    below_raw = scan(sc.h_min, -eps, -1.0) if sc.h_min < -eps else SideBlock(False, None, 0.0, -d)
    below = SideBlock(below_raw.blocked,
                      None if below_raw.height is None else -abs(below_raw.height),
                      below_raw.circumdiameter, below_raw.margin)
    return TranslationBlock(above, below)


def surrounds_slice(K: Polytope3, C: Circle3,
                    tol: float = TOL_GEOM) -> bool:
    """True when the body's cross-section in the circle's own plane is
    non-empty and lies inside the closed disc bounded by the circle — i.e.
    the body actually passes through the circle rather than sitting beside
    it."""
    sc = _SliceScanner(K, np.asarray(C.normal, float), origin=C.center_array)
    if not (sc.h_min <= 0.0 <= sc.h_max):
        return False
    P = sc.points2(0.0)
    if len(P) == 0:
        return False
    scale = max(1.0, sc.scale)
    return bool(np.linalg.norm(P, axis=1).max() <= C.radius + tol * scale)


def nonintersecting_edge_bound(K: Polytope3) -> tuple[float, tuple[int, int]]:
    """Minimum distance between non-adjacent edges, with the attaining pair
    (indices into ``K.edges``).

    Any circle holding a polytope must let two such edges pass through it on
    opposite sides, so its diameter is at least this distance: a cheap lower
    bound to pair with the search's upper bound."""
    segs = K.vertices[np.asarray(K.edges, int)]
    best = np.inf
    pair = (-1, -1)
    for i, j in combinations(range(len(K.edges)), 2):
        ei, ej = K.edges[i], K.edges[j]
        if set(ei) & set(ej):
            continue
        dist = segment_distance(segs[i, 0], segs[i, 1], segs[j, 0], segs[j, 1])
        if dist < best:
            best, pair = dist, (i, j)
    if pair == (-1, -1):
        raise InvalidInput("polytope has no pair of non-adjacent edges")
    return float(best), pair


# ---------------------------------------------------------------------------
# escape search
# ---------------------------------------------------------------------------

@dataclass
class EscapeResult:
    outcome: str                    # "found" | "not_found_within_budget"
    path: list[Circle3] | None
    checks_used: int
    nodes: int
    seed: int
    step: float
    escape_radius: float

    @property
    def found(self) -> bool:
        return self.outcome == "found"


def _canonical_normal(n: np.ndarray) -> np.ndarray:
    for k in (2, 1, 0):
        if abs(n[k]) > 1e-12:
            return n if n[k] > 0 else -n
    return n


def _support_gap_exact(beta: np.ndarray, A: np.ndarray,
                       B: np.ndarray) -> float:
    """Exact ``min over t of max_f (beta_f + A_f cos t + B_f sin t)``.

    The upper envelope of sinusoids attains its minimum either at a
    critical angle of one sinusoid or where two of them cross, so those
    angles are a complete candidate set.
    """
    cands = [np.arctan2(B, A) + np.pi]
    F = len(beta)
    for f in range(F):
        dA = A[f] - A[f + 1:]
        dB = B[f] - B[f + 1:]
        rhs = beta[f + 1:] - beta[f]
        Rc = np.hypot(dA, dB)
        ok = Rc > 1e-15
        x = np.clip(rhs[ok] / Rc[ok], -2.0, 2.0)
        hit = np.abs(x) <= 1.0
        if hit.any():
            pc = np.arctan2(dB[ok][hit], dA[ok][hit])
            al = np.arccos(x[hit])
            cands.extend([pc + al, pc - al])
    ts = np.concatenate([np.atleast_1d(c) for c in cands])
    vals = (beta[None, :] + np.cos(ts)[:, None] * A[None, :]
            + np.sin(ts)[:, None] * B[None, :])
    return float(vals.max(axis=1).min())


def escape_search(K: Polytope3, start: Circle3, budget: int = 100_000,
                  seed: int = DEFAULT_SEED, step: float | None = None,
                  escape_radius: float | None = None,
                  tol: float = TOL_OPT, goal_bias: float = 0.25) -> EscapeResult:
    """Randomized search for a certified collision-free circle path leading
    far away.

    Poses are (center, normal) pairs.  Every accepted motion is *certified*
    against tunneling: the circle-to-body distance is 1-Lipschitz under
    rigid displacement, so a motion in which each circle point moves at most
    ``h`` cannot cross the body when ``h < clearance(start pose) +
    clearance(end pose)``; segments that fail the test are bisected (with
    bounded depth) before being rejected.  Clearance lower bounds come from
    the face support gaps, minimized exactly over the circle.  A consequence
    is that poses touching the body (zero clearance) admit no certified
    motion at all: escape paths keep strictly positive clearance, and a
    circle that can leave only by grazing the boundary is reported as not
    escaping.

    The search first marches straight-line translations in 26 lattice
    directions with adaptively growing certified steps, then grows a
    rapidly-exploring random tree in the 5-dimensional pose space (normals
    embedded on a sphere of radius equal to the circle radius, so rotation
    steps cost the same as the arc they sweep).  Success means reaching a
    pose whose center is at least ``escape_radius`` from the body centroid;
    the returned path is re-validated pose by pose.

    ``budget`` counts clearance evaluations, the dominant cost.  Failure
    says no escape was found *within that budget* — it is evidence, not
    proof, of holding.  Deterministic for fixed ``(seed, budget)``.
    """
    centroid = K.centroid
    circum = K.circumradius
    if step is None:
        step = circum / 50.0
    if escape_radius is None:
        escape_radius = 10.0 * circum
    r = start.radius
    kappa = max(r, 1e-9)

    start_pen = circle_interior_intersects(K, start, tol)
    if start_pen.intersects:
        raise InvalidStart(
            f"start pose penetrates the body (depth {start_pen.penetration:.3g})")

    n_faces, b_faces = K.face_planes()
    n_coarse = 128
    t_coarse = np.linspace(0.0, 2.0 * np.pi, n_coarse, endpoint=False)
    cos_c, sin_c = np.cos(t_coarse), np.sin(t_coarse)
    n_fine = 8192
    t_fine = np.linspace(0.0, 2.0 * np.pi, n_fine, endpoint=False)
    cos_f, sin_f = np.cos(t_fine), np.sin(t_fine)

    checks = 0

    def clearance(center: np.ndarray, normal: np.ndarray) -> float:
        """Lower bound on the distance from the circle to the body."""
        nonlocal checks
        checks += 1
        e1, e2, _ = plane_frame(normal)
        beta = n_faces @ center - b_faces
        A = r * (n_faces @ e1)
        B = r * (n_faces @ e2)
        g = (beta[None, :] + cos_c[:, None] * A[None, :]
             + sin_c[:, None] * B[None, :])
        slack = float(np.hypot(A, B).max(initial=0.0)) * (np.pi / n_coarse)
        lb = float(g.max(axis=1).min()) - slack
        if lb > 0.0:
            return lb
        if len(beta) <= 12:
            return _support_gap_exact(beta, A, B)
        g = (beta[None, :] + cos_f[:, None] * A[None, :]
             + sin_f[:, None] * B[None, :])
        return float(g.max(axis=1).min()) - slack * (n_coarse / n_fine)

    def sweep(c1, n1, c2, n2) -> float:
        """Max displacement of any circle point between the two poses."""
        dot = abs(float(np.clip(n1 @ n2, -1.0, 1.0)))
        return float(np.linalg.norm(c2 - c1)) + r * float(np.arccos(dot))

    def certify(c1, n1, cl1, c2, n2, cl2, depth: int = 12) -> bool:
        """True iff the straight motion between the poses certifiably
        avoids the body."""
        if cl1 <= 0.0 or cl2 <= 0.0:
            return False
        if sweep(c1, n1, c2, n2) < cl1 + cl2:
            return True
        if depth == 0 or checks >= budget:
            return False
        cm = 0.5 * (c1 + c2)
        nm = n1 + n2 if float(n1 @ n2) >= 0.0 else n1 - n2
        ln = float(np.linalg.norm(nm))
        nm = nm / ln if ln > 1e-12 else n1
        clm = clearance(cm, nm)
        if clm <= 0.0:
            return False
        return (certify(c1, n1, cl1, cm, nm, clm, depth - 1)
                and certify(cm, nm, clm, c2, n2, cl2, depth - 1))

    def escaped(center: np.ndarray) -> bool:
        return float(np.linalg.norm(center - centroid)) >= escape_radius

    c0 = start.center_array
    n0 = _canonical_normal(np.asarray(start.normal, float))
    cl0 = clearance(c0, n0)
    if cl0 <= 0.0:
        # the start pose touches the body: by the Lipschitz bound no motion
        # whatsoever can be certified from it
        return EscapeResult("not_found_within_budget", None, checks, 1,
                            seed, step, escape_radius)

    def finish(path, nodes: int):
        for pose in path:
            if circle_interior_intersects(K, pose, tol).intersects:
                raise CertificationError(
                    "escape path failed post-hoc validation")
        return EscapeResult("found", path, checks, nodes, seed, step,
                            escape_radius)

    # certified straight-line marches
    if cl0 > 0.0:
        dirs = np.array([(i, j, k) for i in (-1, 0, 1) for j in (-1, 0, 1)
                         for k in (-1, 0, 1) if (i, j, k) != (0, 0, 0)], float)
        dirs /= np.linalg.norm(dirs, axis=1)[:, None]
        probe_cap = budget // 4
        for u in dirs:
            if checks >= probe_cap:
                break
            path = [start]
            c_cur, cl_cur = c0, cl0
            h = max(1.5 * cl_cur, 1e-3 * step)
            while checks < probe_cap:
                c_new = c_cur + h * u
                cl_new = clearance(c_new, n0)
                if cl_new > 0.0 and certify(c_cur, n0, cl_cur,
                                            c_new, n0, cl_new):
                    path.append(Circle3(tuple(c_new), start.diameter,
                                        tuple(n0)))
                    c_cur, cl_cur = c_new, cl_new
                    if escaped(c_new):
                        return finish(path, 0)
                    h *= 1.7
                else:
                    h *= 0.5
                    if h < 1e-9 * max(step, 1.0):
                        break

    # RRT over poses with certified extensions
    rng = np.random.default_rng(seed)
    nodes_c = [c0]
    nodes_n = [n0]
    nodes_cl = [cl0]
    parents = [-1]

    emb = [np.concatenate([c0, kappa * n0])]
    tree = cKDTree(np.array(emb))
    tree_size = 1

    def rand_unit() -> np.ndarray:
        v = rng.normal(size=3)
        ln = np.linalg.norm(v)
        return v / ln if ln > 0 else np.array([0.0, 0.0, 1.0])

    while checks < budget:
        if rng.random() < goal_bias:
            samp_c = centroid + 1.05 * escape_radius * rand_unit()
        else:
            samp_c = centroid + (1.1 * escape_radius) * rand_unit() * rng.random() ** (1 / 3)
        samp_n = _canonical_normal(rand_unit())
        q = np.concatenate([samp_c, kappa * samp_n])

        _, idx = tree.query(q)
        best_i, best_d = int(idx), float(np.linalg.norm(emb[int(idx)] - q))
        for j in range(tree_size, len(emb)):
            dj = float(np.linalg.norm(emb[j] - q))
            if dj < best_d:
                best_i, best_d = j, dj
        if best_d <= 1e-12:
            continue

        base_c = nodes_c[best_i]
        base_n = nodes_n[best_i]
        base_cl = nodes_cl[best_i]
        if base_cl <= 0.0:
            continue
        delta = q - emb[best_i]
        # cap the attempt near the node's certifiable range, then shrink
        cap = min(step, max(8.0 * base_cl, 1e-3 * step))
        if best_d > cap:
            delta = delta * (cap / best_d)
        accepted = False
        for _ in range(3):
            new_c = base_c + delta[:3]
            raw_n = base_n + delta[3:] / kappa
            ln = np.linalg.norm(raw_n)
            new_n = _canonical_normal(raw_n / ln) if ln > 1e-12 else base_n
            if checks >= budget:
                break
            cl_new = clearance(new_c, new_n)
            if cl_new > 0.0 and certify(base_c, base_n, base_cl,
                                        new_c, new_n, cl_new):
                accepted = True
                break
            delta = delta * 0.25
        if not accepted:
            continue

        nodes_c.append(new_c)
        nodes_n.append(new_n)
        nodes_cl.append(cl_new)
        parents.append(best_i)
        emb.append(np.concatenate([new_c, kappa * new_n]))
        if len(emb) - tree_size >= 256:
            tree = cKDTree(np.array(emb))
            tree_size = len(emb)

        if escaped(new_c):
            chain = []
            i = len(nodes_c) - 1
            while i >= 0:
                chain.append(Circle3(tuple(nodes_c[i]), start.diameter,
                                     tuple(nodes_n[i])))
                i = parents[i]
            return finish(list(reversed(chain)), len(nodes_c))

    return EscapeResult("not_found_within_budget", None, checks,
                        len(nodes_c), seed, step, escape_radius)


# ---------------------------------------------------------------------------
# holding report
# ---------------------------------------------------------------------------

@dataclass
class HoldingReport:
    circle: Circle3
    non_penetration: bool
    penetration_depth: float
    surrounds_slice: bool
    block: TranslationBlock
    edge_bound: float | None
    edge_bound_pair: tuple[int, int] | None
    escape: EscapeResult | None
    chain: "ChainCertificate | None"
    verdict: str
    reasons: list[str] = field(default_factory=list)

    @property
    def blocked_above(self) -> bool:
        return self.block.blocked_above

    @property
    def blocked_below(self) -> bool:
        return self.block.blocked_below


def _gates(K: Polytope3, C: Circle3, tol_geom: float, tol_opt: float,
           n_heights: int):
    pen = circle_interior_intersects(K, C, tol_opt)
    surrounds = surrounds_slice(K, C, tol_geom) if not pen.intersects else False
    block = translation_block_certificate(K, C, n_heights, tol_opt)
    return pen, surrounds, block


def holding_report(K: Polytope3, C: Circle3, *, budget: int = 20_000,
                   seed: int = DEFAULT_SEED, n_heights: int = 200,
                   tol_geom: float = TOL_GEOM, tol_opt: float = TOL_OPT,
                   compute_chain: bool = False,
                   compute_edge_bound: bool = True,
                   escape_kwargs: dict | None = None) -> HoldingReport:
    """Gather every certificate this package can produce for one circle pose
    and summarize them in a verdict.

    ``CertifiedHoldingEvidence`` requires: the circle avoids the interior,
    the body passes through it, cross-sections too wide for the circle exist
    on both sides, and the escape search exhausts its budget without finding
    a way out.  ``EscapeFound`` is returned exactly when the search finds a
    validated escape path.  Everything else is ``Inconclusive``.
    """
    pen, surrounds, block = _gates(K, C, tol_geom, tol_opt, n_heights)
    reasons: list[str] = []

    edge_bound = None
    edge_pair = None
    if compute_edge_bound:
        try:
            edge_bound, edge_pair = nonintersecting_edge_bound(K)
        except InvalidInput:
            pass

    escape = None
    if pen.intersects:
        reasons.append(f"circle penetrates the body "
                       f"(depth {pen.penetration:.3g}) — not a holding circle")
        verdict = VERDICT_INCONCLUSIVE
    else:
        if not surrounds:
            reasons.append("body does not pass through the circle")
        if not block.blocked_above:
            reasons.append("no blocking cross-section above the circle plane")
        if not block.blocked_below:
            reasons.append("no blocking cross-section below the circle plane")
        escape = escape_search(K, C, budget=budget, seed=seed, tol=tol_opt,
                               **(escape_kwargs or {}))
        if escape.found:
            verdict = VERDICT_ESCAPE
            reasons.append(f"escape path found after {escape.checks_used} checks")
        elif surrounds and block.blocked_above and block.blocked_below:
            verdict = VERDICT_EVIDENCE
            reasons.append(
                f"all blocking certificates hold and the escape search found "
                f"no certified way out ({escape.checks_used} of {budget} "
                f"clearance evaluations used)")
        else:
            verdict = VERDICT_INCONCLUSIVE
            reasons.append(f"escape not found within {budget} checks, but "
                           f"blocking certificates are incomplete")

    chain = None
    if compute_chain and verdict == VERDICT_EVIDENCE:
        try:
            chain = chain_certificate(K, C, n_heights=n_heights,
                                      tol_geom=tol_geom, tol_opt=tol_opt)
        except (NoBlockingSlice, InvalidInput) as exc:
            reasons.append(f"chain certificate unavailable: {exc}")

    return HoldingReport(C, not pen.intersects, pen.penetration, surrounds,
                         block, edge_bound, edge_pair, escape, chain,
                         verdict, reasons)


# ---------------------------------------------------------------------------
# projection chain certificate
# ---------------------------------------------------------------------------

def _min_over_theta(f, n_grid: int) -> tuple[float, float]:
    thetas = np.linspace(0.0, np.pi, n_grid, endpoint=False)
    vals = np.array([f(t) for t in thetas])
    k = int(np.argmin(vals))
    step = np.pi / n_grid
    t_ref, v_ref = _golden_refine(f, thetas[k] - step, thetas[k] + step)
    if vals[k] <= v_ref:
        return float(thetas[k]), float(vals[k])
    return float(t_ref % np.pi), float(v_ref)


def _bounded_intersection_vertices(halfspaces, tol: float) -> np.ndarray:
    """Vertices of a bounded half-space intersection by triple enumeration."""
    A = np.array([hs.normal for hs in halfspaces], float)
    b = np.array([hs.offset for hs in halfspaces], float)
    pts: list[np.ndarray] = []
    for i, j, k in combinations(range(len(halfspaces)), 3):
        M = A[[i, j, k]]
        if abs(np.linalg.det(M)) < 1e-10:
            continue
        x = np.linalg.solve(M, b[[i, j, k]])
        if np.all(A @ x <= b + tol) and not any(
                np.linalg.norm(x - p) <= tol for p in pts):
            pts.append(x)
    if len(pts) < 4:
        raise CertificationError(
            "half-space intersection has no volume inside the working box")
    return np.array(pts)


def _directions_surround_origin(u: np.ndarray, slack: float = 1e-7) -> bool:
    """True if the unit vectors positively span the plane (origin in hull)."""
    ang = np.sort(np.arctan2(u[:, 1], u[:, 0]))
    gaps = np.diff(np.concatenate([ang, [ang[0] + 2.0 * np.pi]]))
    return bool(gaps.max() < np.pi - slack)


@dataclass
class ChainCertificate:
    """Certified inequality chain linking body width to circle diameter.

    Splitting the body at the circle's plane H, one side contributes a
    blocking cross-section whose circumdiameter ``d_h`` exceeds the circle
    diameter ``d``.  The homothety with ratio ``rho = d/d_h`` centred at the
    circle's centre maps that section's circumcircle onto the circle; each
    section point on the circumcircle yields a half-space bounded by a plane
    tangent to the circle and parallel to ``delta_direction`` (the line
    joining the two centres).  Their intersection is an infinite prism in
    that direction whose cross-section through the circle plane is
    ``region`` (a polygon, or a strip when there are exactly two antipodal
    contacts), and the prism contains the other -- *far* -- half of the
    body.  The certified chain is

        width(K) <= min_th wh(far half) < min_th wh(prism)
                  = width2(region) <= 3/2 * diameter,

    with wh the horizontal width of the projection into the vertical plane
    at angle theta (vertical meaning the circle normal) and the prism
    clipped to a large working box for computation, which provably does not
    change either of the two middle quantities.

    ``values`` holds the five numbers, ``checks`` one boolean per relation
    plus internal consistency tests, and ``holds`` their conjunction.
    """

    circle: Circle3
    side: str                      # "above" | "below"
    height: float                  # blocking height, offset along the normal
    d_h: float
    rho: float
    delta_direction: np.ndarray
    contacts2: np.ndarray          # scaled contacts on the circle (plane coords)
    contacts3: np.ndarray          # contact points on the blocking section
    tangent_halfspaces: list[HalfSpace]
    section_halfspaces: list[HalfSpace]
    region_kind: str               # "polygon" | "strip"
    region2: np.ndarray            # region clipped to the working box
    strip_direction: np.ndarray | None
    values: dict[str, float]
    checks: dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.checks.values())


def chain_certificate(K: Polytope3, C: Circle3, *, n_heights: int = 200,
                      theta_samples: int = 720, side: str = "auto",
                      tol_geom: float = TOL_GEOM,
                      tol_opt: float = TOL_OPT) -> ChainCertificate:
    """Build the projection chain certificate for a circle pose.

    Requires the circle's plane to cut the body and a cross-section on the
    chosen side whose circumdiameter exceeds the circle diameter (else
    :class:`NoBlockingSlice`).  ``side="auto"`` tries every blocked side and
    returns the first certificate whose checks all hold, falling back to
    the one with the fewest failures; the chain is asymmetric, so typically
    only the side whose far half is the wide one can certify.
    """
    d = C.diameter
    sc = _SliceScanner(K, np.asarray(C.normal, float), origin=C.center_array)
    if not (sc.h_min < -1e-12 * sc.scale and sc.h_max > 1e-12 * sc.scale):
        raise InvalidInput("circle plane does not cut the body interior")
    if side not in ("auto", "above", "below"):
        raise InvalidInput(f"side must be 'above', 'below' or 'auto', got {side!r}")

    def best_on(lo: float, hi: float) -> tuple[float, float]:
        g = sc.grid(lo, hi, n_heights)
        vals = np.array([sc.diam(t) for t in g])
        k = int(np.argmax(vals))
        a, b = g[max(k - 1, 0)], g[min(k + 1, len(g) - 1)]
        t_ref, neg = _golden_refine(lambda t: -sc.diam(t), a, b)
        if -neg > vals[k]:
            return float(t_ref), float(-neg)
        return float(g[k]), float(vals[k])

    t_up, d_up = best_on(0.0, sc.h_max)
    t_dn, d_dn = best_on(sc.h_min, 0.0)
    candidates = []
    if side in ("auto", "above") and d_up > d + tol_opt:
        candidates.append(("above", t_up, d_up, 1.0))
    if side in ("auto", "below") and d_dn > d + tol_opt:
        candidates.append(("below", t_dn, d_dn, -1.0))
    if not candidates:
        d_best = {"auto": max(d_up, d_dn), "above": d_up, "below": d_dn}[side]
        raise NoBlockingSlice(
            f"no cross-section on the {side} side exceeds the circle "
            f"diameter ({d_best:.12g} <= {d:.12g} + {tol_opt:g})")

    e1, e2, nrm = sc.frame
    w = width3(K).width

    def build(side_name: str, t_star: float, d_h: float,
              sgn: float) -> ChainCertificate:
        circ = sc.circum(t_star)
        assert circ is not None
        c_h2 = np.asarray(circ.center, float)
        pts2 = convex_hull_2d(sc.points2(t_star))
        dist = np.linalg.norm(pts2 - c_h2, axis=1)
        contact_tol = 1e-7 * max(1.0, d_h)
        raw_contacts = pts2[dist >= d_h / 2.0 - contact_tol]
        contacts = []
        for p in raw_contacts:
            if not any(np.linalg.norm(p - q) <= 1e-9 * sc.scale
                       for q in contacts):
                contacts.append(p)
        contacts2_sec = np.array(contacts)

        rho = d / d_h
        q = rho * (contacts2_sec - c_h2)
        qn = np.linalg.norm(q, axis=1)
        u = q / qn[:, None]

        delta_world = c_h2[0] * e1 + c_h2[1] * e2 + t_star * nrm
        delta_world /= np.linalg.norm(delta_world)

        tangent_hs = []
        section_hs = []
        for ui in u:
            zeta = -float(ui @ c_h2) / t_star
            nu = np.array([ui[0], ui[1], zeta])
            nu_len = np.linalg.norm(nu)
            nu_world = (nu[0] * e1 + nu[1] * e2 + nu[2] * nrm) / nu_len
            off_tan = (d / 2.0) / nu_len + float(nu_world @ C.center_array)
            off_sec = (d_h / 2.0) / nu_len + float(nu_world @ C.center_array)
            tangent_hs.append(HalfSpace(tuple(nu_world), off_tan))
            section_hs.append(HalfSpace(tuple(nu_world), off_sec))

        # cross-section of the tangent prism through the circle plane,
        # clipped to a working box (harmless: see class docstring)
        box = 50.0 * d
        poly = np.array([[-box, -box], [box, -box], [box, box], [-box, box]])
        for ui in u:
            poly = clip_halfplane_2d(poly, ui, d / 2.0)
            if len(poly) < 3:
                raise CertificationError(
                    "tangent half-planes have empty intersection")
        antipodal = (len(u) == 2 and float(u[0] @ u[1]) <= -1.0 + 1e-9)
        region_kind = "strip" if antipodal else "polygon"
        strip_dir = u[0].copy() if antipodal else None
        region_poly = Polygon2.from_points(poly)
        w2_region, _ = width2(region_poly)
        surround = antipodal or (len(u) >= 3 and _directions_surround_origin(u))

        # the prism itself, boxed, for the projected horizontal widths
        c0 = C.center_array
        prism_hs = list(tangent_hs)
        for ax in (e1, e2, nrm):
            for s_ax in (1.0, -1.0):
                nvec = s_ax * ax
                prism_hs.append(HalfSpace(tuple(nvec), box + float(nvec @ c0)))
        verts3 = _bounded_intersection_vertices(prism_hs,
                                                1e-7 * max(1.0, box))
        relp = verts3 - c0
        p1, p2, pt = relp @ e1, relp @ e2, relp @ nrm

        def wh_prism(th: float) -> float:
            s = p1 * np.cos(th) + p2 * np.sin(th)
            wv, _ = horizontal_width(convex_hull_2d(np.stack([s, pt], axis=1)))
            return wv

        _, min_wh_region = _min_over_theta(wh_prism, theta_samples)

        # far half of the body, projected widths
        far_normal = tuple(sgn * np.asarray(C.normal, float))
        far = clip_halfspace(K, HalfSpace(far_normal,
                                          float(np.dot(far_normal, C.center))))
        rel = far.vertices - C.center_array
        s1, s2 = rel @ e1, rel @ e2
        tt = rel @ nrm

        def wh_far(th: float) -> float:
            s = s1 * np.cos(th) + s2 * np.sin(th)
            wv, _ = horizontal_width(convex_hull_2d(np.stack([s, tt], axis=1)))
            return wv

        _, min_wh_far = _min_over_theta(wh_far, theta_samples)

        values = {
            "width": w,
            "min_wh_far_half": min_wh_far,
            "min_wh_region": min_wh_region,
            "width2_region": w2_region,
            "diameter_bound": 1.5 * d,
        }

        inscribed_r = chebyshev_inscribed(region_poly).radius

        abs_tol = tol_geom * max(1.0, sc.scale)
        map_tol = 1e-9 * max(1.0, d)
        checks = {
            "section_exceeds_circle": d_h > d + tol_opt,
            "ratio_in_unit_interval": 0.0 < rho < 1.0,
            "contacts_on_section_circumcircle":
                bool(np.all(np.abs(dist[dist >= d_h / 2.0 - contact_tol]
                                   - d_h / 2.0) <= contact_tol * 10)),
            "contacts_map_onto_circle":
                bool(np.all(np.abs(qn - d / 2.0) <= map_tol)),
            "contacts_surround_circle": surround,
            "circle_inscribed_in_region": inscribed_r >= d / 2.0 - map_tol,
            "width_le_far_half": w <= min_wh_far + abs_tol,
            "far_half_lt_region": min_wh_far < min_wh_region - tol_geom,
            "region_min_equals_width2": abs(min_wh_region - w2_region) < tol_opt,
            "width2_le_three_halves_diameter": w2_region <= 1.5 * d + abs_tol,
        }

        contacts3 = np.array([sc.lift(p, t_star) for p in contacts2_sec])
        return ChainCertificate(
            circle=C, side=side_name, height=float(t_star),
            d_h=d_h, rho=rho, delta_direction=delta_world,
            contacts2=q, contacts3=contacts3,
            tangent_halfspaces=tangent_hs, section_halfspaces=section_hs,
            region_kind=region_kind, region2=poly, strip_direction=strip_dir,
            values=values, checks=checks,
        )

    certs = [build(*cand) for cand in candidates]
    for cert in certs:
        if cert.holds:
            return cert
    return max(certs, key=lambda c: sum(c.checks.values()))


# ---------------------------------------------------------------------------
# minimal-circle search
# ---------------------------------------------------------------------------

def _axis_candidates(K: Polytope3, extra: bool = True) -> list[np.ndarray]:
    axes = [np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]),
            np.array([0.0, 1.0, 0.0])]
    if extra:
        try:
            cyl = min_cylinder(K, refine=False, grid_level=3)
            axes.append(np.asarray(cyl.axis_direction, float))
        except Exception:
            pass
        segs = K.vertices[np.asarray(K.edges, int)]
        dists = []
        for i, j in combinations(range(len(K.edges)), 2):
            if set(K.edges[i]) & set(K.edges[j]):
                continue
            dists.append((segment_distance(segs[i, 0], segs[i, 1],
                                           segs[j, 0], segs[j, 1]), i, j))
        dists.sort(key=lambda x: x[0])
        for _, i, j in dists[:3]:
            d1 = segs[i, 1] - segs[i, 0]
            d2 = segs[j, 1] - segs[j, 0]
            d1 /= np.linalg.norm(d1)
            d2 /= np.linalg.norm(d2)
            for cand in (np.cross(d1, d2), d1 + d2, d1 - d2):
                ln = np.linalg.norm(cand)
                if ln > 1e-9:
                    axes.append(cand / ln)
    uniq: list[np.ndarray] = []
    for a in axes:
        a = _canonical_normal(a)
        if not any(abs(float(a @ b)) > 1.0 - 1e-9 for b in uniq):
            uniq.append(a)
    return uniq


def _waist_candidates(K: Polytope3, axis: np.ndarray, n_heights: int):
    """Interior local minima of the cross-section circumdiameter along an
    axis, golden-refined: (diameter, height, center2, scanner)."""
    sc = _SliceScanner(K, axis)
    g = sc.grid(sc.h_min, sc.h_max, n_heights)
    vals = np.array([sc.diam(t) for t in g])
    out = []
    for i in range(1, len(g) - 1):
        if vals[i] <= vals[i - 1] + 1e-12 and vals[i] <= vals[i + 1] + 1e-12 \
                and (vals[i] < vals[i - 1] - 1e-12 or vals[i] < vals[i + 1] - 1e-12):
            t_ref, v_ref = _golden_refine(sc.diam, g[i - 1], g[i + 1])
            if v_ref <= vals[i]:
                t_best, d_best = t_ref, v_ref
            else:
                t_best, d_best = float(g[i]), float(vals[i])
            c = sc.circum(t_best)
            if c is not None and d_best > 0:
                out.append((d_best, t_best, np.asarray(c.center), sc))
    return out


def min_holding_circle(K: Polytope3, *, n_heights: int = 200,
                       escape_budget: int = 4000, seed: int = DEFAULT_SEED,
                       tol_geom: float = TOL_GEOM, tol_opt: float = TOL_OPT,
                       extra_frames: bool = True, max_candidates: int = 12,
                       polish: bool = True) -> tuple[Circle3, HoldingReport]:
    """Search for the smallest circle with certified holding evidence.

    A circle that fails to meet the body's interior while the body passes
    through it must contain the cross-section in its own plane, so its
    diameter is at least the section's circumdiameter.  The smallest viable
    circles therefore sit at *waists*: interior local minima of the
    circumdiameter profile along some axis.  The search scans a family of
    axes (coordinate axes, the minimal-cylinder axis, directions derived
    from the closest non-adjacent edge pairs), collects waist circles in
    ascending diameter order, optionally polishes the best axis, and returns
    the first candidate whose :func:`holding_report` verdict is
    ``CertifiedHoldingEvidence``.

    The result is an upper bound on the minimal holding diameter (evidence
    semantics as in :func:`holding_report`);
    :func:`nonintersecting_edge_bound` supplies the matching lower bound for
    polytopes.  Raises :class:`NotFound` when no candidate certifies.
    """
    cands = []
    for axis in _axis_candidates(K, extra_frames):
        cands.extend(_waist_candidates(K, axis, n_heights))
    cands.sort(key=lambda c: c[0])

    filtered = []
    for dia, t, c2, sc in cands:
        center = sc.lift(c2, t)
        dup = False
        for dia2, cen2, ax2 in filtered:
            if (abs(dia - dia2) <= 1e-9 * max(1.0, dia)
                    and np.linalg.norm(center - cen2) <= 1e-6 * max(1.0, dia)
                    and abs(float(sc.frame[2] @ ax2)) > 1.0 - 1e-9):
                dup = True
                break
        if not dup:
            filtered.append((dia, center, sc.frame[2]))
        if len(filtered) >= max_candidates:
            break

    if polish and filtered:
        dia0, cen0, ax0 = filtered[0]

        def waist_along(x) -> float:
            th, ph = x
            axis = np.array([np.sin(th) * np.cos(ph),
                             np.sin(th) * np.sin(ph), np.cos(th)])
            best = np.inf
            for dd, _, _, _ in _waist_candidates(K, axis, max(n_heights // 4, 40)):
                best = min(best, dd)
            return best if np.isfinite(best) else 1e30

        th0 = float(np.arccos(np.clip(ax0[2], -1, 1)))
        ph0 = float(np.arctan2(ax0[1], ax0[0]))
        res = minimize(waist_along, np.array([th0, ph0]), method="Nelder-Mead",
                       options={"xatol": 1e-7, "fatol": 1e-12, "maxiter": 60})
        if res.fun < dia0 - 1e-12:
            th, ph = res.x
            axis = np.array([np.sin(th) * np.cos(ph),
                             np.sin(th) * np.sin(ph), np.cos(th)])
            extra = _waist_candidates(K, axis, n_heights)
            extra.sort(key=lambda c: c[0])
            if extra:
                dd, tt, cc2, ssc = extra[0]
                filtered.insert(0, (dd, ssc.lift(cc2, tt), ssc.frame[2]))

    last_report = None
    for dia, center, axis in filtered:
        circle = Circle3(tuple(center), dia, tuple(axis))
        pen, surrounds, block = _gates(K, circle, tol_geom, tol_opt, n_heights)
        if pen.intersects or not surrounds or not block.blocked_above \
                or not block.blocked_below:
            continue
        report = holding_report(K, circle, budget=escape_budget, seed=seed,
                                n_heights=n_heights, tol_geom=tol_geom,
                                tol_opt=tol_opt, compute_edge_bound=True)
        last_report = report
        if report.verdict == VERDICT_EVIDENCE:
            return circle, report

    raise NotFound(
        "no waist candidate produced certified holding evidence"
        + ("" if last_report is None else
           f" (last verdict: {last_report.verdict})"))


# ---------------------------------------------------------------------------
# extremality diagnostics
# ---------------------------------------------------------------------------

@dataclass
class ExtremalityDiagnostics:
    """How close a certified configuration is to the extremal family.

    In the extremal limit the chain's region is an equilateral triangle
    circumscribing the circle and the contacts concentrate near three
    equally spaced points on it.  ``hausdorff`` measures the region's
    distance from its best-fit equilateral triangle; ``cluster_distance``
    the worst contact's distance to the nearest of three ideal tangency
    points (optimized over their common rotation).  ``normalized`` values
    rescale the configuration so the circle has diameter 2.  ``slacks``
    lists the gaps in the chain inequalities — all of them shrink to zero
    exactly in the extremal limit.
    """

    hausdorff: float
    hausdorff_normalized: float
    cluster_distance: float
    cluster_distance_normalized: float
    cluster_rotation: float
    triangle2: np.ndarray | None
    slacks: dict[str, float]
    chain: ChainCertificate


def extremality_diagnostics(K: Polytope3, C: Circle3,
                            chain: ChainCertificate | None = None,
                            **chain_kwargs) -> ExtremalityDiagnostics:
    """Quantify how near a certified circle is to the sharp two-thirds bound."""
    if chain is None:
        chain = chain_certificate(K, C, **chain_kwargs)
    d = C.diameter
    scale = 2.0 / d

    if chain.region_kind == "polygon":
        tri, haus, _, _ = best_fit_equilateral(
            Polygon2.from_points(chain.region2),
            height=chain.values["width2_region"])
        tri2 = tri.vertices
    else:
        tri2 = None
        haus = float("inf")

    q = chain.contacts2

    def cluster_cost(psi: float) -> float:
        ang = psi + np.array([0.0, 2.0 * np.pi / 3.0, 4.0 * np.pi / 3.0])
        ideal = (d / 2.0) * np.stack([np.cos(ang), np.sin(ang)], axis=1)
        dd = np.linalg.norm(q[:, None, :] - ideal[None, :, :], axis=2)
        return float(dd.min(axis=1).max())

    grid = np.linspace(0.0, 2.0 * np.pi / 3.0, 360, endpoint=False)
    vals = np.array([cluster_cost(p) for p in grid])
    k = int(np.argmin(vals))
    step = 2.0 * np.pi / 3.0 / 360
    psi_ref, v_ref = _golden_refine(cluster_cost, grid[k] - step, grid[k] + step)
    if vals[k] <= v_ref:
        psi_best, v_best = float(grid[k]), float(vals[k])
    else:
        psi_best, v_best = float(psi_ref), float(v_ref)

    v = chain.values
    slacks = {
        "width_vs_far_half": v["min_wh_far_half"] - v["width"],
        "far_half_vs_region": v["min_wh_region"] - v["min_wh_far_half"],
        "region_vs_diameter_bound": v["diameter_bound"] - v["width2_region"],
    }
    return ExtremalityDiagnostics(
        hausdorff=haus, hausdorff_normalized=haus * scale,
        cluster_distance=v_best, cluster_distance_normalized=v_best * scale,
        cluster_rotation=psi_best, triangle2=tri2, slacks=slacks, chain=chain,
    )
