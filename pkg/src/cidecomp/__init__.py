"""Irreducible components, dimensions and degrees of determinantal CI varieties."""

from .gridmodel import GridShape, ValidationError

__all__ = ["GridShape", "ValidationError"]
__version__ = "0.1.0"
