"""Convex polytopes in 3-space: hull construction, width, circumscribing
cylinders, clipping, and plane sections.

A :class:`Polytope3` stores hull vertices together with its facets as vertex
index cycles (coplanar triangles merged into one facet).  Edges are derived
from the facet cycles.  All polytopes here are full-dimensional; degenerate
inputs raise :class:`~circlehold.errors.DegenerateInput`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import ConvexHull, QhullError

from .errors import DegenerateInput, EmptyResult, InvalidInput
from .planar import Circle2, convex_hull_2d, min_enclosing_circle
from .tolerances import TOL_GEOM


@dataclass(frozen=True)
class HalfSpace:
    """Region ``{x : normal . x <= offset}`` with unit outward normal."""

    normal: tuple[float, float, float]
    offset: float

    def signed_distance(self, point) -> float:
        return float(np.dot(self.normal, point) - self.offset)

    def contains(self, point, tol: float = TOL_GEOM) -> bool:
        return self.signed_distance(point) <= tol

    def scaled(self, factor: float) -> "HalfSpace":
        """Image under the homothety ``x -> factor * x`` about the origin."""
        return HalfSpace(self.normal, self.offset * factor)


@dataclass(frozen=True)
class WidthResult:
    width: float
    direction: np.ndarray
    lower_vertex: int
    upper_vertex: int


@dataclass(frozen=True)
class CylinderResult:
    """Circumscribing cylinder: all vertices within ``diameter/2`` of the
    axis line ``{axis_point + s * axis_direction}``."""

    diameter: float
    axis_point: np.ndarray
    axis_direction: np.ndarray


def _unit(v) -> np.ndarray:
    v = np.asarray(v, float)
    n = np.linalg.norm(v)
    if n == 0:
        raise InvalidInput("zero vector has no direction")
    return v / n


def plane_frame(normal) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Deterministic right-handed frame ``(e1, e2, n)`` for a plane normal."""
    n = _unit(normal)
    k = int(np.argmin(np.abs(n)))
    e = np.zeros(3)
    e[k] = 1.0
    e1 = _unit(e - n[k] * n)
    e2 = np.cross(n, e1)
    return e1, e2, n


def _newell_normal(pts: np.ndarray) -> np.ndarray:
    """Normal of a (nearly) planar polygon, robust to noise."""
    nrm = np.zeros(3)
    m = len(pts)
    for i in range(m):
        a, b = pts[i], pts[(i + 1) % m]
        nrm[0] += (a[1] - b[1]) * (a[2] + b[2])
        nrm[1] += (a[2] - b[2]) * (a[0] + b[0])
        nrm[2] += (a[0] - b[0]) * (a[1] + b[1])
    ln = np.linalg.norm(nrm)
    if ln == 0:
        raise DegenerateInput("degenerate facet (collinear vertices)")
    return nrm / ln


def _chain_cycle(edges: list[tuple[int, int]]) -> list[int]:
    """Order directed boundary edges into a single vertex cycle."""
    nxt = {}
    for a, b in edges:
        if a in nxt:
            raise DegenerateInput("facet boundary is not a simple cycle")
        nxt[a] = b
    start = edges[0][0]
    cyc = [start]
    cur = nxt[start]
    while cur != start:
        cyc.append(cur)
        if cur not in nxt or len(cyc) > len(edges):
            raise DegenerateInput("facet boundary does not close")
        cur = nxt[cur]
    if len(cyc) != len(edges):
        raise DegenerateInput("facet boundary has multiple loops")
    return cyc


class Polytope3:
    """Convex polytope: hull vertices plus facet cycles.

    ``faces[i]`` lists vertex indices counterclockwise as seen from outside.
    Construct through :func:`build_hull`, which removes non-extreme points
    and merges coplanar triangles, or pass prevalidated data directly.
    """

    def __init__(self, vertices: np.ndarray, faces: list[list[int]],
                 validate: bool = True):
        self.vertices = np.asarray(vertices, dtype=float)
        self.faces = [list(map(int, f)) for f in faces]
        edges: set[tuple[int, int]] = set()
        for f in self.faces:
            m = len(f)
            for i in range(m):
                a, b = f[i], f[(i + 1) % m]
                edges.add((min(a, b), max(a, b)))
        self.edges: list[tuple[int, int]] = sorted(edges)
        self._normals: np.ndarray | None = None
        self._offsets: np.ndarray | None = None
        if validate:
            self.validate()

    # -- basic combinatorics -------------------------------------------------

    def validate(self, tol: float = 1e-7) -> None:
        V, E, F = len(self.vertices), len(self.edges), len(self.faces)
        if V < 4:
            raise DegenerateInput(f"need at least 4 vertices, got {V}")
        if V - E + F != 2:
            raise InvalidInput(f"V - E + F = {V - E + F} != 2 "
                               f"(V={V}, E={E}, F={F})")
        n, b = self.face_planes()
        scale = max(1.0, float(np.abs(self.vertices).max()))
        d = self.vertices @ n.T - b  # (V, F)
        if d.max() > tol * scale:
            raise InvalidInput("a vertex lies outside a face plane; "
                               "faces are inconsistent with the hull")
        # every vertex extreme: each must attain the max in some face plane
        on_any = (np.abs(d) <= tol * scale).any(axis=1)
        if not on_any.all():
            raise InvalidInput("vertex not on any face: input is not "
                               "a minimal hull description")

    def face_planes(self) -> tuple[np.ndarray, np.ndarray]:
        """Outward unit normals and offsets; interior is ``n.x < b``."""
        if self._normals is None:
            normals = []
            offsets = []
            centroid = self.vertices.mean(axis=0)
            for f in self.faces:
                pts = self.vertices[f]
                nrm = _newell_normal(pts)
                off = float(nrm @ pts.mean(axis=0))
                if nrm @ centroid > off:
                    nrm, off = -nrm, -off
                normals.append(nrm)
                offsets.append(off)
            self._normals = np.array(normals)
            self._offsets = np.array(offsets)
        return self._normals, self._offsets

    def halfspaces(self) -> list[HalfSpace]:
        n, b = self.face_planes()
        return [HalfSpace(tuple(nn), float(bb)) for nn, bb in zip(n, b)]

    # -- metric queries -------------------------------------------------------

    def support(self, u) -> float:
        return float((self.vertices @ np.asarray(u, float)).max())

    def breadth(self, u) -> float:
        proj = self.vertices @ np.asarray(u, float)
        return float(proj.max() - proj.min())

    @property
    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    @property
    def circumradius(self) -> float:
        c = self.centroid
        return float(np.linalg.norm(self.vertices - c, axis=1).max())

    def edge_segments(self) -> np.ndarray:
        """Edge endpoints as an ``(E, 2, 3)`` array."""
        idx = np.array(self.edges)
        return self.vertices[idx]

    def transformed(self, rotation=None, translation=None) -> "Polytope3":
        """Rigidly move the polytope (rotation about origin, then shift)."""
        verts = self.vertices
        if rotation is not None:
            verts = verts @ np.asarray(rotation, float).T
        if translation is not None:
            verts = verts + np.asarray(translation, float)
        return Polytope3(verts, self.faces, validate=False)

    def contains(self, point, tol: float = TOL_GEOM) -> bool:
        n, b = self.face_planes()
        return bool(np.all(n @ np.asarray(point, float) <= b + tol))

    def __repr__(self) -> str:
        return (f"Polytope3({len(self.vertices)} vertices, "
                f"{len(self.edges)} edges, {len(self.faces)} faces)")


# ---------------------------------------------------------------------------
# hull construction
# ---------------------------------------------------------------------------

def _merge_coplanar(points: np.ndarray, hull: ConvexHull,
                    angle_tol: float = 1e-7) -> list[list[int]]:
    """Group hull triangles into maximal coplanar facets and return ordered
    vertex cycles (counterclockwise from outside)."""
    eq = hull.equations  # (F, 4): n.x + d = 0, n outward
    simplices = hull.simplices
    nf = len(simplices)
    scale = max(1.0, float(np.abs(points).max()))

    # adjacency via shared undirected edges
    edge_owner: dict[tuple[int, int], list[int]] = {}
    for fi, tri in enumerate(simplices):
        for i in range(3):
            e = (min(tri[i], tri[(i + 1) % 3]), max(tri[i], tri[(i + 1) % 3]))
            edge_owner.setdefault(e, []).append(fi)

    def coplanar(i: int, j: int) -> bool:
        ni, nj = eq[i, :3], eq[j, :3]
        if np.linalg.norm(np.cross(ni, nj)) > angle_tol:
            return False
        return abs(eq[i, 3] - eq[j, 3]) <= 1e-7 * scale

    group = [-1] * nf
    g = 0
    for fi in range(nf):
        if group[fi] != -1:
            continue
        stack = [fi]
        group[fi] = g
        while stack:
            cur = stack.pop()
            for i in range(3):
                tri = simplices[cur]
                e = (min(tri[i], tri[(i + 1) % 3]), max(tri[i], tri[(i + 1) % 3]))
                for nb in edge_owner[e]:
                    if group[nb] == -1 and coplanar(cur, nb):
                        group[nb] = g
                        stack.append(nb)
        g += 1

    faces: list[list[int]] = []
    for gi in range(g):
        tris = [simplices[i] for i in range(nf) if group[i] == gi]
        nrm = eq[[i for i in range(nf) if group[i] == gi][0], :3]
        # orient each triangle so its winding matches the outward normal,
        # then keep only the directed edges used once (the facet boundary)
        count: dict[tuple[int, int], int] = {}
        directed: list[tuple[int, int]] = []
        for tri in tris:
            a, b, c = (points[tri[0]], points[tri[1]], points[tri[2]])
            if np.cross(b - a, c - a) @ nrm < 0:
                tri = tri[[0, 2, 1]]
            for i in range(3):
                de = (int(tri[i]), int(tri[(i + 1) % 3]))
                count[de] = count.get(de, 0) + 1
                directed.append(de)
        boundary = [de for de in directed
                    if count.get(de, 0) == 1 and count.get((de[1], de[0]), 0) == 0]
        cyc = _chain_cycle(boundary)
        # drop vertices interior to a boundary edge (collinear chain points)
        pts = points[cyc]
        keep = []
        m = len(cyc)
        for i in range(m):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % m]
            if np.linalg.norm(np.cross(b - a, c - b)) > 1e-9 * scale * scale:
                keep.append(cyc[i])
        faces.append(keep if len(keep) >= 3 else cyc)
    return faces


def build_hull(points, tol: float = TOL_GEOM) -> Polytope3:
    """Convex hull of a 3D point cloud as a :class:`Polytope3`.

    Coplanar hull triangles are merged into polygonal facets and points that
    are not hull vertices are discarded, so the result is a minimal
    description.  Raises :class:`DegenerateInput` when the points span fewer
    than 3 dimensions.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise InvalidInput(f"expected (m, 3) points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise InvalidInput("points must be finite")
    pts = np.unique(pts, axis=0)
    if len(pts) < 4:
        raise DegenerateInput(f"need at least 4 distinct points, got {len(pts)}")
    d = pts - pts.mean(axis=0)
    if np.linalg.matrix_rank(d, tol=1e-10 * max(1.0, np.abs(pts).max())) < 3:
        raise DegenerateInput("points are not full-dimensional")

    try:
        hull = ConvexHull(pts)
        faces = _merge_coplanar(pts, hull)
    except (QhullError, DegenerateInput):
        # jitter fallback: perturb, hull, then rebuild facets on the
        # original coordinates
        rng = np.random.default_rng(0)
        scale = max(1.0, float(np.abs(pts).max()))
        jit = pts + rng.normal(scale=1e-9 * scale, size=pts.shape)
        hull = ConvexHull(jit, qhull_options="QJ")
        hull_pts = pts[np.unique(hull.vertices)]
        hull2 = ConvexHull(hull_pts, qhull_options="QJ")
        faces = _merge_coplanar(hull_pts, hull2)
        pts = hull_pts

    used = sorted({i for f in faces for i in f})
    remap = {old: new for new, old in enumerate(used)}
    verts = pts[used]
    faces = [[remap[i] for i in f] for f in faces]
    return Polytope3(verts, faces)


# ---------------------------------------------------------------------------
# width
# ---------------------------------------------------------------------------

def _candidate_width_directions(K: Polytope3) -> np.ndarray:
    """Directions that can attain the width of a polytope: face normals and
    cross products of edge-direction pairs (vertex-vertex and edge-edge
    antipodal configurations)."""
    n, _ = K.face_planes()
    segs = K.edge_segments()
    dirs = segs[:, 1] - segs[:, 0]
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    # dedupe edge directions up to sign
    uniq = []
    for d in dirs:
        if d[np.argmax(np.abs(d))] < 0:
            d = -d
        if not any(np.linalg.norm(d - u) < 1e-12 for u in uniq):
            uniq.append(d)
    dirs = np.array(uniq)
    cand = [n]
    crosses = []
    for i, j in combinations(range(len(dirs)), 2):
        c = np.cross(dirs[i], dirs[j])
        ln = np.linalg.norm(c)
        if ln > 1e-12:
            crosses.append(c / ln)
    if crosses:
        cand.append(np.array(crosses))
    out = np.vstack(cand)
    flip = out[np.arange(len(out)), np.argmax(np.abs(out), axis=1)] < 0
    out[flip] *= -1
    return np.unique(np.round(out, 14), axis=0)


def width3(K: Polytope3) -> WidthResult:
    """Exact width (minimal breadth) of a convex polytope.

    The minimizing direction is either a face normal or perpendicular to a
    pair of edge directions, so the exact minimum is found by enumerating
    those finitely many candidates.
    """
    cands = _candidate_width_directions(K)
    V = K.vertices
    best_w = np.inf
    best = None
    for start in range(0, len(cands), 4096):
        chunk = cands[start:start + 4096]
        proj = V @ chunk.T  # (V, c)
        hi = proj.max(axis=0)
        lo = proj.min(axis=0)
        w = hi - lo
        k = int(np.argmin(w))
        if w[k] < best_w:
            best_w = float(w[k])
            u = chunk[k]
            best = WidthResult(best_w, u,
                               int(np.argmin(proj[:, k])),
                               int(np.argmax(proj[:, k])))
    assert best is not None
    return best


# ---------------------------------------------------------------------------
# clipping and plane sections
# ---------------------------------------------------------------------------

def clip_halfspace(K: Polytope3, hs: HalfSpace, tol: float = TOL_GEOM) -> Polytope3:
    """Intersection of a polytope with a half-space, as a new polytope."""
    n = np.asarray(hs.normal, float)
    d = K.vertices @ n - hs.offset
    scale = max(1.0, float(np.abs(K.vertices).max()))
    eps = tol * scale
    if d.max() <= eps:
        return K
    if d.min() >= -eps:
        raise EmptyResult("half-space removes the whole polytope")
    pts = [K.vertices[i] for i in np.flatnonzero(d <= eps)]
    for a, b in K.edges:
        da, db = d[a], d[b]
        if (da < -eps and db > eps) or (da > eps and db < -eps):
            lam = da / (da - db)
            pts.append(K.vertices[a] + lam * (K.vertices[b] - K.vertices[a]))
    if len(pts) < 4:
        raise EmptyResult("clipped region is not full-dimensional")
    return build_hull(np.array(pts))


@dataclass
class PlanarSection:
    """Cross-section of a polytope by a plane ``normal . x = offset``.

    ``points2`` are the section's hull vertices in the plane's own frame
    (see :func:`plane_frame`); ``kind`` is ``"polygon"``, ``"segment"``,
    ``"point"`` or ``"empty"``.
    """

    normal: np.ndarray
    offset: float
    frame: tuple[np.ndarray, np.ndarray, np.ndarray]
    points2: np.ndarray
    kind: str

    def to_3d(self, pts2=None) -> np.ndarray:
        e1, e2, n = self.frame
        p = self.points2 if pts2 is None else np.asarray(pts2, float)
        if len(p) == 0:
            return np.empty((0, 3))
        return self.offset * n + p[:, [0]] * e1 + p[:, [1]] * e2

    def circumcircle(self, seed: int = 1) -> Circle2:
        if self.kind == "empty":
            raise EmptyResult("empty section has no circumcircle")
        return min_enclosing_circle(self.points2, seed=seed)


def slice_plane(K: Polytope3, normal, offset: float,
                tol: float = TOL_GEOM) -> PlanarSection:
    """Cross-section of a polytope by the plane ``normal . x = offset``."""
    ln = float(np.linalg.norm(np.asarray(normal, float)))
    if ln == 0:
        raise InvalidInput("plane normal must be nonzero")
    n = np.asarray(normal, float) / ln
    off = float(offset) / ln
    d = K.vertices @ n - off
    scale = max(1.0, float(np.abs(K.vertices).max()))
    eps = tol * scale
    pts = [K.vertices[i] for i in np.flatnonzero(np.abs(d) <= eps)]
    for a, b in K.edges:
        da, db = d[a], d[b]
        if (da < -eps and db > eps) or (da > eps and db < -eps):
            lam = da / (da - db)
            pts.append(K.vertices[a] + lam * (K.vertices[b] - K.vertices[a]))
    frame = plane_frame(n)
    if not pts:
        return PlanarSection(n, off, frame, np.empty((0, 2)), "empty")
    P = np.array(pts)
    e1, e2, _ = frame
    p2 = np.stack([P @ e1, P @ e2], axis=1)
    hull = convex_hull_2d(p2, tol)
    kind = {1: "point", 2: "segment"}.get(len(hull), "polygon")
    return PlanarSection(n, off, frame, hull, kind)


# ---------------------------------------------------------------------------
# minimal circumscribing cylinder
# ---------------------------------------------------------------------------

def _icosphere_directions(level: int = 5) -> np.ndarray:
    """Near-uniform unit directions from a subdivided icosahedron."""
    phi = (1.0 + np.sqrt(5.0)) / 2.0
    verts = []
    for s1 in (-1.0, 1.0):
        for s2 in (-1.0, 1.0):
            verts += [(0.0, s1, s2 * phi), (s1, s2 * phi, 0.0), (s2 * phi, 0.0, s1)]
    verts = np.array(verts)
    verts /= np.linalg.norm(verts, axis=1)[:, None]
    hull = ConvexHull(verts)
    tris = [tuple(t) for t in hull.simplices]
    cache: dict[tuple[int, int], int] = {}
    pts = list(verts)

    def midpoint(i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in cache:
            m = pts[i] + pts[j]
            pts.append(m / np.linalg.norm(m))
            cache[key] = len(pts) - 1
        return cache[key]

    for _ in range(level):
        new = []
        for a, b, c in tris:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            new += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        tris = new
    dirs = np.array(pts)
    keep = dirs[:, 2] > -1e-12  # antipodal axes give the same cylinder
    return dirs[keep]


def _cylinder_radius_for_axis(V: np.ndarray, axis: np.ndarray,
                              seed: int = 1) -> tuple[float, Circle2]:
    e1, e2, _ = plane_frame(axis)
    p2 = np.stack([V @ e1, V @ e2], axis=1)
    hull = convex_hull_2d(p2)
    c = min_enclosing_circle(hull, seed=seed)
    return c.radius, c


def min_cylinder(K: Polytope3, refine: bool = True,
                 grid_level: int = 5) -> CylinderResult:
    """Smallest circumscribing circular cylinder of a polytope.

    The radius for a fixed axis direction is the radius of the minimal
    enclosing circle of the projected vertices — an exact computation — but
    the dependence on the axis direction is only piecewise-smooth, so the
    direction search combines a dense icosphere grid, the polytope's face
    normals and edge directions, and a local simplex polish of the best
    grid hits.  The result is a certified upper bound that is exact whenever
    the optimal axis is among the candidates (e.g. a symmetry axis).
    """
    V = K.vertices
    n, _ = K.face_planes()
    segs = K.edge_segments()
    ed = segs[:, 1] - segs[:, 0]
    ed /= np.linalg.norm(ed, axis=1)[:, None]
    cands = np.vstack([_icosphere_directions(grid_level), n, ed, np.eye(3)])
    flip = cands[:, 2] < 0
    cands[flip] *= -1

    radii = np.empty(len(cands))
    for i, a in enumerate(cands):
        radii[i], _ = _cylinder_radius_for_axis(V, a)
    order = np.argsort(radii)

    def spherical(a):
        th, ph = a
        return np.array([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph),
                         np.cos(th)])

    best_axis = cands[order[0]]
    best_r = radii[order[0]]
    if refine:
        for idx in order[:5]:
            a0 = cands[idx]
            th0 = float(np.arccos(np.clip(a0[2], -1, 1)))
            ph0 = float(np.arctan2(a0[1], a0[0]))
            res = minimize(lambda x: _cylinder_radius_for_axis(V, spherical(x))[0],
                           np.array([th0, ph0]), method="Nelder-Mead",
                           options={"xatol": 1e-10, "fatol": 1e-13,
                                    "maxiter": 400})
            if res.fun < best_r:
                best_r = float(res.fun)
                best_axis = spherical(res.x)

    best_axis = _unit(best_axis)
    r, circ = _cylinder_radius_for_axis(V, best_axis)
    e1, e2, _ = plane_frame(best_axis)
    axis_point = circ.center[0] * e1 + circ.center[1] * e2
    return CylinderResult(2.0 * r, axis_point, best_axis)


# ---------------------------------------------------------------------------
# point classification
# ---------------------------------------------------------------------------

def point_location(K: Polytope3, point, tol: float = TOL_GEOM) -> str:
    """Classify a point against a polytope: ``"interior"``, ``"boundary"``
    or ``"exterior"`` (boundary within ``tol`` of a face plane, relative to
    the polytope's coordinate scale)."""
    n, b = K.face_planes()
    scale = max(1.0, float(np.abs(K.vertices).max()))
    d = float((n @ np.asarray(point, float) - b).max())
    if d > tol * scale:
        return "exterior"
    if d < -tol * scale:
        return "interior"
    return "boundary"


def segment_distance(p1, p2, q1, q2) -> float:
    """Minimal distance between two 3D segments."""
    p1, p2, q1, q2 = (np.asarray(x, float) for x in (p1, p2, q1, q2))
    u, v, w = p2 - p1, q2 - q1, p1 - q1
    a, b, c = u @ u, u @ v, v @ v
    d, e = u @ w, v @ w
    den = a * c - b * b
    if den > 1e-14 * max(a, c, 1e-300):
        s = np.clip((b * e - c * d) / den, 0.0, 1.0)
    else:
        s = 0.0
    t = (b * s + e) / c if c > 0 else 0.0
    t = np.clip(t, 0.0, 1.0)
    s = np.clip((b * t - d) / a, 0.0, 1.0) if a > 0 else 0.0
    return float(np.linalg.norm(p1 + s * u - (q1 + t * v)))
