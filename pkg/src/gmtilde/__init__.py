"""Graded algebras with a multiplicative-group action: fixed points,
attractors, repellers and the interpolating family over the affine line."""

__version__ = "0.1.0"
