"""Convex polytope engine.

Bodies are vertex-defined; lower-dimensional hulls are first class.  The face
lattice is built recursively from qhull facets; every face carries its
direction space, its volume and the data of its normal cone.  Order-j area
measures are realized as weighted cone pieces over the j-faces, paired with
test functions either exactly (atoms, arcs) or by rejection sampling on the
sphere of the cone's span.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import null_space
from scipy.spatial import ConvexHull, QhullError

from igeom import constants as C
from igeom.mc import McEstimate, as_generator

EPS = 1e-9  # geometric tolerance for incidence and degeneracy detection
_ARC_QUAD_NODES = 32


@dataclass(frozen=True)
class Face:
    """A face of the lattice: vertex ids, direction basis, volume, cone data."""

    dim: int
    vertex_ids: tuple
    volume: float
    basis: np.ndarray          # (d, dim) orthonormal direction space
    normal_span: np.ndarray    # (d, d-dim) orthonormal span of the normal cone
    generator_ids: tuple       # facets containing this face


@dataclass
class ConvexPolytope:
    d: int
    vertices: np.ndarray                 # (n, d) hull vertices only
    interior_dim: int                    # -1 for the empty body
    affine_origin: np.ndarray
    affine_basis: np.ndarray             # (d, m)
    facet_normals: np.ndarray            # (F, d) outward, within the affine hull
    facet_offsets: np.ndarray            # (F,)
    faces: dict = field(default_factory=dict)  # dim -> list[Face]
    _intrinsic: Optional["ConvexPolytope"] = None

    @property
    def is_empty(self) -> bool:
        return self.interior_dim < 0

    @property
    def is_full_dimensional(self) -> bool:
        return self.interior_dim == self.d

    @property
    def lineality(self) -> np.ndarray:
        """Orthocomplement of the affine hull direction space, (d, d-m)."""
        if self.interior_dim <= 0:
            return np.eye(self.d) if self.interior_dim == 0 else np.zeros((self.d, 0))
        return _orthocomplement(self.affine_basis)

    def f_vector(self) -> list[int]:
        return [len(self.faces.get(k, [])) for k in range(self.interior_dim)]

    def intrinsic_body(self) -> "ConvexPolytope":
        """The same body rebuilt full-dimensionally in its affine hull."""
        if self.is_full_dimensional:
            return self
        if self._intrinsic is None:
            coords = (self.vertices - self.affine_origin) @ self.affine_basis
            self._intrinsic = build(coords)
        return self._intrinsic


def empty_polytope(d: int) -> ConvexPolytope:
    return ConvexPolytope(
        d, np.zeros((0, d)), -1, np.zeros(d), np.zeros((d, 0)),
        np.zeros((0, d)), np.zeros(0), {},
    )


def _orthocomplement(basis: np.ndarray) -> np.ndarray:
    d, k = basis.shape
    if k == 0:
        return np.eye(d)
    if k == d:
        return np.zeros((d, 0))
    return null_space(basis.T)


def _affine_hull(points: np.ndarray):
    origin = points.mean(axis=0)
    centered = points - origin
    if len(points) == 1:
        return origin, np.zeros((points.shape[1], 0))
    u, s, vt = np.linalg.svd(centered, full_matrices=False)
    scale = max(s[0], 1.0) if len(s) else 1.0
    rank = int(np.sum(s > EPS * scale * 10))
    return origin, vt[:rank].T


def _merge_simplex_facets(equations: np.ndarray, simplices: np.ndarray):
    """Group qhull's triangulated facets by their supporting hyperplane."""
    normals, offsets, members = [], [], []
    for eq, simplex in zip(equations, simplices):
        n, off = eq[:-1], -eq[-1]
        matched = False
        if normals:
            nn = np.asarray(normals)
            close = (nn @ n > 1 - 1e-7) & (np.abs(np.asarray(offsets) - off) < 1e-6)
            hits = np.flatnonzero(close)
            if hits.size:
                members[hits[0]].update(simplex.tolist())
                matched = True
        if not matched:
            normals.append(n)
            offsets.append(off)
            members.append(set(simplex.tolist()))
    return np.asarray(normals), np.asarray(offsets), [tuple(sorted(m)) for m in members]


def _enumerate_faces(coords: np.ndarray, m: int, top_facets=None) -> dict:
    """All proper faces (dims 0..m-1) of a full-dimensional point set in R^m,
    as frozensets of local vertex indices."""
    faces: dict[int, set] = {k: set() for k in range(m)}
    if m == 1:
        faces[0] = {frozenset([int(np.argmin(coords[:, 0]))]),
                    frozenset([int(np.argmax(coords[:, 0]))])}
        return faces
    if top_facets is None:
        hull = ConvexHull(coords)
        _, _, facet_sets = _merge_simplex_facets(hull.equations, hull.simplices)
    else:
        facet_sets = top_facets
    for fs in facet_sets:
        faces[m - 1].add(frozenset(fs))
        sub_ids = list(fs)
        pts = coords[sub_ids]
        origin, basis = _affine_hull(pts)
        sub_coords = (pts - origin) @ basis
        if basis.shape[1] != m - 1:
            continue  # degenerate facet, skip (measure zero)
        sub_faces = _enumerate_faces(sub_coords, m - 1)
        for k, fam in sub_faces.items():
            for f in fam:
                faces[k].add(frozenset(sub_ids[i] for i in f))
    return faces


def _face_volume(points: np.ndarray) -> tuple[float, np.ndarray]:
    """(j-volume, direction basis) of the convex hull of `points`."""
    origin, basis = _affine_hull(points)
    j = basis.shape[1]
    if j == 0:
        return 1.0, basis
    coords = (points - origin) @ basis
    if j == 1:
        return float(coords[:, 0].max() - coords[:, 0].min()), basis
    return float(ConvexHull(coords).volume), basis


def build(vertices) -> ConvexPolytope:
    """Convex hull of the given points, with full face lattice.

    Lower-dimensional hulls carry their intrinsic lattice plus ambient
    normal-cone data; the body itself appears as the top face when it is not
    full-dimensional.
    """
    pts = np.asarray(vertices, dtype=float)
    if pts.ndim != 2 or len(pts) == 0:
        raise ValueError("need a nonempty (n, d) array of points")
    d = pts.shape[1]
    origin, basis = _affine_hull(pts)
    m = basis.shape[1]

    if m == 0:
        v = pts[:1]
        faces = {0: [Face(0, (0,), 1.0, np.zeros((d, 0)), np.eye(d), ())]}
        return ConvexPolytope(d, v, 0, v[0], basis, np.zeros((0, d)), np.zeros(0), faces)

    coords = (pts - origin) @ basis

    if m == 1:
        lo, hi = int(np.argmin(coords[:, 0])), int(np.argmax(coords[:, 0]))
        verts = pts[[lo, hi]]
        fnorm = np.stack([-basis[:, 0], basis[:, 0]])
        foff = np.array([fnorm[0] @ verts[0], fnorm[1] @ verts[1]])
        faces = {0: [], 1: []}
        for i in range(2):
            faces[0].append(Face(0, (i,), 1.0, np.zeros((d, 0)), np.eye(d), (i,)))
        top_basis = basis
        faces[1].append(Face(
            1, (0, 1), float(np.linalg.norm(verts[1] - verts[0])),
            top_basis, _orthocomplement(top_basis), (),
        ))
        return ConvexPolytope(d, verts, 1, origin, basis, fnorm, foff, faces)

    hull = ConvexHull(coords)
    keep = hull.vertices
    remap = {int(old): new for new, old in enumerate(keep)}
    verts = pts[keep]
    vcoords = coords[keep]
    normals_m, offsets_m, facet_sets = _merge_simplex_facets(hull.equations, hull.simplices)
    facet_sets = [tuple(sorted(remap[v] for v in fs)) for fs in facet_sets]
    fnorm = normals_m @ basis.T           # lift to ambient
    foff = offsets_m + fnorm @ origin

    face_sets = _enumerate_faces(vcoords, m, top_facets=facet_sets)
    faces: dict[int, list[Face]] = {}
    facet_frozen = [frozenset(fs) for fs in facet_sets]
    for k in range(m):
        lst = []
        for fset in sorted(face_sets[k], key=sorted):
            ids = tuple(sorted(fset))
            vol, dir_basis = _face_volume(verts[list(ids)])
            gens = tuple(i for i, ff in enumerate(facet_frozen) if fset <= ff)
            nspan = np.eye(d) if k == 0 else _orthocomplement(dir_basis)
            lst.append(Face(k, ids, vol, dir_basis, nspan, gens))
        faces[k] = lst
    top_vol, _ = _face_volume(verts)
    faces[m] = [Face(
        m, tuple(range(len(verts))), top_vol, basis, _orthocomplement(basis), (),
    )]

    poly = ConvexPolytope(d, verts, m, origin, basis, fnorm, foff, faces)
    _check_lattice(poly)
    return poly


def _check_lattice(p: ConvexPolytope):
    m = p.interior_dim
    if m < 2:
        return
    # Euler relation for the boundary complex
    euler = sum((-1) ** k * len(p.faces[k]) for k in range(m))
    if euler != 1 - (-1) ** m:
        raise RuntimeError(f"broken face lattice: Euler characteristic {euler}")
    # facet inequalities hold on all vertices
    slack = p.vertices @ p.facet_normals.T - p.facet_offsets
    if slack.max() > 1e-7 * max(1.0, np.abs(p.facet_offsets).max()):
        raise RuntimeError("vertex violates facet inequality")


def support_function(p: ConvexPolytope, u) -> float:
    if p.is_empty:
        raise ValueError("empty body has no support function")
    return float(np.max(p.vertices @ np.asarray(u, dtype=float)))


def circumradius(p: ConvexPolytope) -> float:
    """Radius about the origin (not the centroid)."""
    if p.is_empty:
        return 0.0
    return float(np.linalg.norm(p.vertices, axis=1).max())


# ---------------------------------------------------------------------------
# intersections


def _clip_line(normals, offsets, x0, direction):
    tlo, thi = -np.inf, np.inf
    a = normals @ direction
    b = offsets - normals @ x0
    for ai, bi in zip(a, b):
        if abs(ai) < 1e-13:
            if bi < -1e-10:
                return None
            continue
        t = bi / ai
        if ai > 0:
            thi = min(thi, t)
        else:
            tlo = max(tlo, t)
    if not np.isfinite(tlo) or not np.isfinite(thi) or tlo > thi - EPS:
        return None
    return tlo, thi


def _clip_polygon(normals2, offsets2, radius):
    """Sutherland-Hodgman clip of a bounding square by <n,t> <= c halfplanes."""
    r = radius
    poly = [(-r, -r), (r, -r), (r, r), (-r, r)]
    for (nx, ny), c in zip(normals2, offsets2):
        if not poly:
            return []
        out = []
        k = len(poly)
        s = [c - (nx * px + ny * py) for px, py in poly]
        for i in range(k):
            j = (i + 1) % k
            si, sj = s[i], s[j]
            if si >= 0:
                out.append(poly[i])
            if (si > 0 > sj) or (si < 0 < sj):
                tau = si / (si - sj)
                out.append((
                    poly[i][0] + tau * (poly[j][0] - poly[i][0]),
                    poly[i][1] + tau * (poly[j][1] - poly[i][1]),
                ))
        poly = out
    return poly


def _clip_halfspaces_nd(normals, offsets, m: int):
    """Vertex enumeration of {x : <n_i, x> <= c_i} in R^m by m-tuple solves."""
    from itertools import combinations

    idx = list(combinations(range(len(normals)), m))
    A = normals[np.array(idx)]             # (T, m, m)
    dets = np.abs(np.linalg.det(A))
    ok = dets > 1e-10
    if not ok.any():
        return np.zeros((0, m))
    cand = np.linalg.solve(A[ok], offsets[np.array(idx)][ok][..., None])[..., 0]
    feas = (cand @ normals.T - offsets <= 1e-8).all(axis=1)
    pts = cand[feas]
    if len(pts) == 0:
        return pts
    rounded = np.round(pts / 1e-7) * 1e-7
    _, keep = np.unique(rounded, axis=0, return_index=True)
    return pts[sorted(keep)]


def intersect_flat(k_body: ConvexPolytope, flat_basis, flat_point) -> ConvexPolytope:
    """Intersection of a full-dimensional body with an affine flat, embedded
    in the ambient space (the empty body is a value, not an error)."""
    if not k_body.is_full_dimensional:
        raise ValueError("flat sections are implemented for full-dimensional bodies")
    B = np.asarray(flat_basis, dtype=float)
    x0 = np.asarray(flat_point, dtype=float)
    q = B.shape[1]
    A, b = k_body.facet_normals, k_body.facet_offsets
    if q == 1:
        seg = _clip_line(A, b, x0, B[:, 0])
        if seg is None:
            return empty_polytope(k_body.d)
        pts = np.stack([x0 + seg[0] * B[:, 0], x0 + seg[1] * B[:, 0]])
        return build(pts)
    An = A @ B                             # (F, q)
    bn = b - A @ x0
    if q == 2:
        poly2 = _clip_polygon(An, bn, circumradius(k_body) + 1.0)
        if len(poly2) < 3:
            return empty_polytope(k_body.d)
        pts2 = np.asarray(poly2)
    elif q == 3:
        pts2 = _clip_halfspaces_nd(An, bn, 3)
        if len(pts2) < 4:
            return empty_polytope(k_body.d)
    else:
        raise NotImplementedError("flat sections support q <= 3")
    try:
        return build(x0 + pts2 @ B.T)
    except QhullError:
        # tangential contact: a measure-zero event under continuous sampling
        return empty_polytope(k_body.d)


def intersect_moved(k_body: ConvexPolytope, rotation, translation,
                    m_body: ConvexPolytope) -> ConvexPolytope:
    """K intersected with rho M + t, by halfspace intersection of both facet
    systems; possibly empty or lower-dimensional."""
    if k_body.d != m_body.d:
        raise ValueError("dimension mismatch")
    if not (k_body.is_full_dimensional and m_body.is_full_dimensional):
        raise ValueError("moved intersections need full-dimensional bodies")
    rho = np.asarray(rotation, dtype=float)
    t = np.asarray(translation, dtype=float)
    moved_n = m_body.facet_normals @ rho.T
    moved_b = m_body.facet_offsets + moved_n @ t
    A = np.vstack([k_body.facet_normals, moved_n])
    b = np.concatenate([k_body.facet_offsets, moved_b])
    pts = _clip_halfspaces_nd(A, b, k_body.d)
    if len(pts) == 0:
        return empty_polytope(k_body.d)
    try:
        return build(pts)
    except QhullError:
        return empty_polytope(k_body.d)


# ---------------------------------------------------------------------------
# area measures


@dataclass(frozen=True)
class AreaPiece:
    """One j-face contribution: weight V_j(F) on the spherical trace of its
    normal cone.  kind is 'atoms', 'arc' or 'mc'."""

    kind: str
    weight: float
    atoms: Optional[np.ndarray] = None       # (k, d) unit directions
    arc_frame: Optional[np.ndarray] = None   # (2, d): u(t) = cos t b1 + sin t b2
    arc_range: Optional[tuple] = None
    span: Optional[np.ndarray] = None        # (d, c) basis for rejection MC
    face_vertex_ids: Optional[tuple] = None


@dataclass
class SphericalAreaMeasure:
    """S_j(P, .) as cone pieces with the polytope normalization binom(d-1,j)^-1."""

    d: int
    order: int
    normalization: float
    pieces: list
    vertices: np.ndarray                     # for cone membership tests

    def total_weight(self) -> float:
        return sum(p.weight for p in self.pieces)

    def has_mc_pieces(self) -> bool:
        return any(p.kind == "mc" for p in self.pieces)


def _pointed_arc(span: np.ndarray, gens: np.ndarray):
    """Angular interval of a pointed 2D cone, in the coordinates of span."""
    g2 = gens @ span
    g2 = g2 / np.linalg.norm(g2, axis=1, keepdims=True)
    ang = np.arctan2(g2[:, 1], g2[:, 0])
    rel = np.angle(np.exp(1j * (ang - ang[0])))
    lo, hi = float(rel.min()), float(rel.max())
    return float(ang[0] + lo), float(ang[0] + hi)


def _piece_for_face(p: ConvexPolytope, face: Face) -> AreaPiece:
    d, j, m = p.d, face.dim, p.interior_dim
    codim = d - j
    span = face.normal_span
    gens = p.facet_normals[list(face.generator_ids)] if face.generator_ids else np.zeros((0, d))
    lin_dim = d - m

    if codim == 1:
        if j == m:       # hyperplanar body: both sides
            n = span[:, 0]
            return AreaPiece("atoms", face.volume, atoms=np.stack([n, -n]))
        n = gens[0]      # facet of a full-dimensional body
        return AreaPiece("atoms", face.volume, atoms=n[None, :])

    if codim == 2:
        if j == m:       # full circle
            return AreaPiece("arc", face.volume, arc_frame=span.T.copy(),
                             arc_range=(0.0, 2 * math.pi))
        if lin_dim == 1:  # halfplane: single in-hull generator plus the lineality line
            g = gens[0] / np.linalg.norm(gens[0])
            ell = p.lineality[:, 0]
            return AreaPiece("arc", face.volume, arc_frame=np.stack([g, ell]),
                             arc_range=(-math.pi / 2, math.pi / 2))
        lo, hi = _pointed_arc(span, gens)
        return AreaPiece("arc", face.volume, arc_frame=span.T.copy(), arc_range=(lo, hi))

    return AreaPiece("mc", face.volume, span=span, face_vertex_ids=face.vertex_ids)


def area_measure(p: ConvexPolytope, j: int) -> SphericalAreaMeasure:
    """The order-j area measure of p as cone pieces over its j-faces.

    Zero when dim p < j; the two-sided closed form when dim p == j is what
    the generic top-face piece produces.
    """
    if p.is_empty:
        return SphericalAreaMeasure(p.d, j, 1.0, [], np.zeros((0, p.d)))
    if not 1 <= j <= p.d - 1:
        raise ValueError("order must be in 1..d-1")
    if p.interior_dim < j:
        return SphericalAreaMeasure(p.d, j, 1.0, [], p.vertices)
    pieces = [_piece_for_face(p, f) for f in p.faces[j] if f.volume > 0]
    return SphericalAreaMeasure(p.d, j, 1.0 / comb(p.d - 1, j), pieces, p.vertices)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(_ARC_QUAD_NODES)


def _arc_integral(f, frame: np.ndarray, lo: float, hi: float) -> float:
    theta = 0.5 * (hi - lo) * _GL_NODES + 0.5 * (hi + lo)
    pts = np.cos(theta)[:, None] * frame[0] + np.sin(theta)[:, None] * frame[1]
    return 0.5 * (hi - lo) * float(_GL_WEIGHTS @ np.asarray(f(pts), dtype=float))


def _cone_member(vertices: np.ndarray, face_ids, u: np.ndarray) -> np.ndarray:
    """Does each row of u lie in the normal cone of the given face?"""
    h_all = vertices @ u.T                   # (n, k)
    h_face = h_all[list(face_ids)].max(axis=0)
    return h_all.max(axis=0) - h_face <= 1e-9


def measure_pair(s: SphericalAreaMeasure, f, samples: int = 0, rng=None,
                 seed=None) -> McEstimate:
    """Pairing of the measure with a pointwise-evaluable function.

    Atom and arc pieces are exact; higher-dimensional cones are estimated by
    uniform sampling on the sphere of their span with rejection, scaled by the
    total measure of that subsphere.
    """
    total = 0.0
    var = 0.0
    mc_pieces = [p for p in s.pieces if p.kind == "mc"]
    n_used = 0
    if mc_pieces:
        if samples <= 0:
            raise ValueError("measure has cone pieces that require MC samples")
        rng = as_generator(rng)
        per = max(samples // len(mc_pieces), 2)
    for p in s.pieces:
        if p.kind == "atoms":
            total += p.weight * float(np.sum(f(p.atoms)))
        elif p.kind == "arc":
            total += p.weight * _arc_integral(f, p.arc_frame, *p.arc_range)
        else:
            c = p.span.shape[1]
            g = rng.standard_normal((per, c))
            g /= np.linalg.norm(g, axis=1, keepdims=True)
            u = g @ p.span.T
            inside = _cone_member(s.vertices, p.face_vertex_ids, u)
            vals = np.where(inside, np.asarray(f(u), dtype=float), 0.0) * C.omega(c)
            total += p.weight * float(vals.mean())
            var += (p.weight * vals.std(ddof=0) / math.sqrt(per)) ** 2
            n_used += per
    return McEstimate(s.normalization * total, s.normalization * math.sqrt(var),
                      n_used, seed)


# ---------------------------------------------------------------------------
# intrinsic volumes and external angles


def _solid_angle_3d(gens: np.ndarray) -> float:
    """Solid angle of the pointed cone spanned by unit generators in R^3."""
    g = gens / np.linalg.norm(gens, axis=1, keepdims=True)
    # drop duplicates
    keep = []
    for row in g:
        if not any(row @ r > 1 - 1e-12 for r in keep):
            keep.append(row)
    g = np.asarray(keep)
    if len(g) < 3:
        return 0.0
    center = g.mean(axis=0)
    center /= np.linalg.norm(center)
    e1 = g[0] - (g[0] @ center) * center
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(center, e1)
    order = np.argsort(np.arctan2(g @ e2, g @ e1))
    g = g[order]

    def tri(a, b, c):
        num = abs(np.dot(a, np.cross(b, c)))
        den = 1.0 + a @ b + b @ c + a @ c
        return 2.0 * math.atan2(num, den)

    return float(sum(tri(g[0], g[i], g[i + 1]) for i in range(1, len(g) - 1)))


def external_angle(p: ConvexPolytope, face: Face, rng=None, mc_samples: int = 200000) -> float:
    """Fraction of the subsphere of the normal-cone span covered by the cone.

    Exact through codimension 3; Gaussian MC beyond that.
    """
    body = p.intrinsic_body()
    if body is not p:
        # match the face by vertex coordinates
        face = _matching_face(p, body, face)
        p = body
    codim = p.d - face.dim
    if codim == 0:
        return 1.0
    if codim == 1:
        return 0.5
    gens = p.facet_normals[list(face.generator_ids)]
    if codim == 2:
        lo, hi = _pointed_arc(face.normal_span, gens)
        return (hi - lo) / (2 * math.pi)
    if codim == 3:
        g3 = gens @ face.normal_span
        return _solid_angle_3d(g3) / (4 * math.pi)
    return external_angle_mc(p, face, mc_samples, rng if rng is not None else 0)


def external_angle_mc(p: ConvexPolytope, face: Face, samples: int, rng) -> float:
    """Gaussian estimate of the external angle; independent of the exact path."""
    body = p.intrinsic_body()
    if body is not p:
        face = _matching_face(p, body, face)
        p = body
    rng = as_generator(rng)
    c = p.d - face.dim
    if c == 0:
        return 1.0
    g = rng.standard_normal((samples, c))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    u = g @ face.normal_span.T
    return float(np.mean(_cone_member(p.vertices, face.vertex_ids, u)))


def _matching_face(p: ConvexPolytope, body: ConvexPolytope, face: Face) -> Face:
    target = (p.vertices[list(face.vertex_ids)] - p.affine_origin) @ p.affine_basis
    tset = {tuple(np.round(r / 1e-8).astype(np.int64)) for r in target}
    for f in body.faces[face.dim]:
        rows = {tuple(np.round(r / 1e-8).astype(np.int64)) for r in body.vertices[list(f.vertex_ids)]}
        if rows == tset:
            return f
    raise RuntimeError("face not found in intrinsic body")


def intrinsic_volume(p: ConvexPolytope, j: int, rng=None) -> float:
    """V_j(p); exact external angles through codimension 3 (all of d <= 4)."""
    if p.is_empty:
        return 0.0
    m = p.interior_dim
    if j < 0:
        raise ValueError("order must be >= 0")
    if j > m:
        return 0.0
    if j == 0:
        return 1.0
    body = p.intrinsic_body()
    if j == m:
        return body.faces[m][0].volume
    return float(sum(
        f.volume * external_angle(body, f, rng=rng) for f in body.faces[j]
    ))


def volume(p: ConvexPolytope) -> float:
    return intrinsic_volume(p, p.d)


def reflect(p: ConvexPolytope) -> ConvexPolytope:
    if p.is_empty:
        return p
    return build(-p.vertices)


def translate(p: ConvexPolytope, t) -> ConvexPolytope:
    if p.is_empty:
        return p
    return build(p.vertices + np.asarray(t, dtype=float))


def rotate(p: ConvexPolytope, rho) -> ConvexPolytope:
    if p.is_empty:
        return p
    return build(p.vertices @ np.asarray(rho, dtype=float).T)


# ---------------------------------------------------------------------------
# subspace determinants


def subspace_determinant(basis1: np.ndarray, basis2: np.ndarray) -> float:
    """[L1, L2]: the volume of the parallelepiped spanned by the two
    orthonormal bases together (0 when the spans intersect)."""
    m = np.hstack([basis1, basis2])
    g = m.T @ m
    val = float(np.linalg.det(g))
    return math.sqrt(max(val, 0.0))


def generalized_cosine(basis1: np.ndarray, basis2: np.ndarray) -> float:
    """|<L1, L2>| for equidimensional subspaces: the product of the cosines
    of their principal angles."""
    if basis1.shape[1] != basis2.shape[1]:
        raise ValueError("generalized cosine needs equal dimensions")
    return abs(float(np.linalg.det(basis1.T @ basis2)))


# ---------------------------------------------------------------------------
# JSON round trip


def to_json_dict(p: ConvexPolytope) -> dict:
    return {"d": p.d, "vertices": [[float(x) for x in row] for row in p.vertices]}


def from_json_dict(data: dict) -> ConvexPolytope:
    verts = np.asarray(data["vertices"], dtype=float)
    if verts.shape[1] != data["d"]:
        raise ValueError("vertex dimension disagrees with 'd'")
    return build(verts)


def save(p: ConvexPolytope, path):
    with open(path, "w") as fh:
        json.dump(to_json_dict(p), fh)


def load(path) -> ConvexPolytope:
    with open(path) as fh:
        return from_json_dict(json.load(fh))
