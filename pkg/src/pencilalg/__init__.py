"""Exact-arithmetic toolkit for pairs of compatible associative products on
semi-simple algebras: structure-constant calculus, deformation operators,
normal-form algebras, admissible multiplicity matrices, and the induced
linear Poisson brackets."""

from .scalars import (
    CyclotomicField,
    FloatField,
    QQ,
    embed_order,
    primitive_root,
    root_of_unity,
)
from .algebra import (
    Pencil,
    StructureConstants,
    adjoin_unity,
    direct_sum,
    matn_lift,
    matrix_algebra,
    zero_algebra,
)

__version__ = "0.1.0"
SCHEMA_VERSION = "pencilalg-doc/1"

__all__ = [
    "CyclotomicField",
    "FloatField",
    "QQ",
    "Pencil",
    "StructureConstants",
    "SCHEMA_VERSION",
    "adjoin_unity",
    "direct_sum",
    "embed_order",
    "matn_lift",
    "matrix_algebra",
    "primitive_root",
    "root_of_unity",
    "zero_algebra",
]
