"""Exact verification of Rota-Baxter operators, post-Lie and post-associative
structures, and decompositions of finite-dimensional algebras."""

from .field import QQ, PrimeField, Rationals, parse_field

__version__ = "0.1.0"

__all__ = ["QQ", "PrimeField", "Rationals", "parse_field", "__version__"]
