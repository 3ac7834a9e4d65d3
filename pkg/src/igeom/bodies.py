"""Builtin test bodies, addressable as "builtin:<name>" from the CLI."""

from __future__ import annotations

import numpy as np

from igeom import polytope as P
from igeom.mc import as_generator


def cube(d: int = 3) -> P.ConvexPolytope:
    """The unit cube [0,1]^d."""
    corners = np.array(np.meshgrid(*([[0.0, 1.0]] * d), indexing="ij")).reshape(d, -1).T
    return P.build(corners)


def box(*extents: float) -> P.ConvexPolytope:
    """Axis-aligned box [0,a1] x ... x [0,ad]."""
    d = len(extents)
    corners = np.array(np.meshgrid(*[[0.0, float(a)] for a in extents], indexing="ij"))
    return P.build(corners.reshape(d, -1).T)


def simplex(d: int = 3) -> P.ConvexPolytope:
    """The standard simplex conv{0, e_1, ..., e_d}."""
    return P.build(np.vstack([np.zeros(d), np.eye(d)]))


def random_simplex(d: int = 3, seed: int = 0) -> P.ConvexPolytope:
    """A nondegenerate simplex with vertices uniform in the unit cube."""
    rng = as_generator(seed)
    while True:
        pts = rng.uniform(0.0, 1.0, size=(d + 1, d))
        if abs(np.linalg.det(pts[1:] - pts[0])) > 1e-3:
            return P.build(pts)


def ball_approx(n: int = 600, d: int = 3) -> P.ConvexPolytope:
    """Inscribed polytope of the unit ball; d=3 uses a Fibonacci sphere."""
    if d != 3:
        raise ValueError("ball approximation is provided for d=3")
    i = np.arange(n)
    golden = (1 + 5**0.5) / 2
    z = 1 - (2 * i + 1) / n
    r = np.sqrt(np.clip(1 - z * z, 0.0, None))
    phi = 2 * np.pi * i / golden
    pts = np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)
    return P.build(pts)


def disc_approx(n: int = 64) -> P.ConvexPolytope:
    """Regular n-gon inscribed in the unit circle of the (e1,e2)-plane in R^3."""
    t = 2 * np.pi * np.arange(n) / n
    return P.build(np.stack([np.cos(t), np.sin(t), np.zeros(n)], axis=1))


CATALOG = {
    "cube": "unit cube [0,1]^d (d=3 unless prefixed, e.g. cube4)",
    "box:a,b,...": "axis-aligned box with the given edge lengths",
    "simplex": "standard simplex conv{0, e_i} (simplex4 for d=4)",
    "random-simplex:seed": "random simplex in the unit cube (random-simplex4:seed for d=4)",
    "ball-approx:n": "n-vertex inscribed approximation of the unit ball (d=3)",
    "disc:n": "regular n-gon in the (e1,e2)-plane of R^3",
}


def list_builtins() -> dict:
    return dict(CATALOG)


def make(spec: str) -> P.ConvexPolytope:
    """Construct a builtin body from its CLI spec, e.g. 'builtin:box:2,1,1'."""
    name = spec.split(":", 1)[1] if spec.startswith("builtin:") else spec
    head, _, arg = name.partition(":")
    if head == "cube":
        return cube(3)
    if head == "cube4":
        return cube(4)
    if head == "box":
        extents = tuple(float(x) for x in arg.split(","))
        if not 2 <= len(extents) <= 4:
            raise ValueError("box wants 2..4 edge lengths")
        return box(*extents)
    if head == "simplex":
        return simplex(3)
    if head == "simplex4":
        return simplex(4)
    if head == "random-simplex":
        return random_simplex(3, int(arg or 0))
    if head == "random-simplex4":
        return random_simplex(4, int(arg or 0))
    if head == "ball-approx":
        return ball_approx(int(arg or 600))
    if head == "disc":
        return disc_approx(int(arg or 64))
    raise ValueError(f"unknown builtin body {name!r}")
