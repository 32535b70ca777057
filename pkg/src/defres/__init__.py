"""Exact deflation of restricted symmetric group characters.

The public surface re-exports the shape types, the strip and abacus
combinatorics, exact character arithmetic, the wreath-product averaging
oracle, and the deflation evaluators built on top of them.
"""

from .abacus import (
    AbacusDisplay,
    QuotientData,
    display,
    is_horizontal_strip,
    is_n_decomposable,
    n_core,
    n_quotient,
    quotient_bijection,
    unique_cycle_tableau,
)
from .borderstrips import (
    BorderStripTableau,
    StripMeta,
    a_coefficient,
    enumerate_bst,
    enumerate_m_bst,
    is_border_strip,
    mn_value,
    sign,
    strip_meta,
)
from .characters import (
    ClassFunction,
    induced_value,
    inner_product,
    irreducible_character,
    lr_coefficient,
    skew_character,
    skew_restriction,
)
from .deflation import (
    DeflationQuery,
    defres_degree,
    defres_recursive,
    defres_sign,
    defres_theorem,
    farahat_check,
    ncycle_vanishing,
)
from .partitions import (
    Box,
    Composition,
    Partition,
    SkewPartition,
    centralizer_order,
    conjugate,
    contains,
    intermediates,
    partitions_of,
    repeat_parts,
    skew_shapes,
    stretch,
)
from .wreath import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    WreathElement,
    cycle_products,
    cycle_type,
    omega,
    oracle_defres,
    tilde_theta_value,
    to_permutation,
)

__all__ = [
    "AbacusDisplay",
    "BorderStripTableau",
    "Box",
    "BudgetExceeded",
    "ClassFunction",
    "Composition",
    "DEFAULT_BUDGET",
    "DeflationQuery",
    "Partition",
    "QuotientData",
    "SkewPartition",
    "StripMeta",
    "WreathElement",
    "a_coefficient",
    "centralizer_order",
    "conjugate",
    "contains",
    "cycle_products",
    "cycle_type",
    "defres_degree",
    "defres_recursive",
    "defres_sign",
    "defres_theorem",
    "display",
    "enumerate_bst",
    "enumerate_m_bst",
    "farahat_check",
    "induced_value",
    "inner_product",
    "intermediates",
    "irreducible_character",
    "is_border_strip",
    "is_horizontal_strip",
    "is_n_decomposable",
    "lr_coefficient",
    "mn_value",
    "n_core",
    "n_quotient",
    "ncycle_vanishing",
    "omega",
    "oracle_defres",
    "partitions_of",
    "quotient_bijection",
    "repeat_parts",
    "sign",
    "skew_character",
    "skew_restriction",
    "skew_shapes",
    "stretch",
    "tilde_theta_value",
    "to_permutation",
    "unique_cycle_tableau",
]

__version__ = "0.1.0"
