"""Exact tools for self-linked codimension-2 subschemes of projective space."""
