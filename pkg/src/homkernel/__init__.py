"""Exact verification kernel for Hom-Hopf algebras, Hom-Yetter-Drinfeld structures
and braided Hom-Lie algebras over the rationals."""

__version__ = "0.1.0"
