"""Computational integral geometry: polytope area measures, sphere transforms,
and Monte Carlo verification of Crofton / kinematic identities."""

from igeom.mc import McEstimate

__all__ = ["McEstimate"]
