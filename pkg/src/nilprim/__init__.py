"""Nilpotent primitive subgroups of GL(n, q) over finite fields.

Exact-arithmetic construction, decision, enumeration and brute-force
verification of the classified family: degree 2, degree 2m with m odd,
and the abelian (cyclic) case.
"""

from nilprim.ff import FieldCtx, make_field
from nilprim.matgrp import MatrixGroup, IsoType

__all__ = ["FieldCtx", "make_field", "MatrixGroup", "IsoType"]
