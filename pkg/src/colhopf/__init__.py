"""Coloured permutation groups, their descent, peak and tree statistics, and
the Hopf algebras spanned by the corresponding class sums.

Everything is exact: rational coefficients are ``fractions.Fraction`` and
enumerations are exhaustive up to the size guards in ``colhopf.universe``.
"""
from .groups import ColourGroup, GroupHom, TRIVIAL, parse_group
from .perms import CPerm, std
from .hopf import HopfElement, class_basis, class_sum, coproduct, antipode, external_product

__version__ = "0.1.0"

__all__ = [
    "ColourGroup", "GroupHom", "TRIVIAL", "parse_group", "CPerm", "std",
    "HopfElement", "class_basis", "class_sum", "coproduct", "antipode", "external_product",
]
