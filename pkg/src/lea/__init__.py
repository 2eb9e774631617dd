"""Finite lattice effect algebras, effect groupoids and their sequent calculus."""

__version__ = "0.1.0"
