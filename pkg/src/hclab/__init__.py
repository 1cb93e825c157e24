"""Finite-group engine for H-subgroup / HC-subgroup embedding properties and
an exhaustive checker for the structure results built on them."""

from .errors import HcLabError
from .group import (
    Group,
    Morphism,
    Subgroup,
    direct_product,
    element_order,
    from_cayley_table,
    generated_subgroup,
    conjugate_subgroup,
    is_isomorphic,
    quotient,
)

__version__ = "0.1.0"
