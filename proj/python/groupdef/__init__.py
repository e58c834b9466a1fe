"""Finite p-groups of prescribed deficiency.

Construct explicit finite presentations of p-groups with deficiency exactly
-n, and certify the result with coset enumeration, exact Smith normal form
and bar-resolution homology.
"""

from groupdef._core import (
    BlockCounts,
    Certificate,
    CosetLimitError,
    FinAbGroup,
    GroupTable,
    GroupdefError,
    GroupdefParseError,
    MissingPedigreeError,
    OrderCeilingError,
    Presentation,
    __version__,
    building_block,
    certify,
    construct,
    deficiency_of_counts,
    direct_product,
    figure_table,
    golod_shafarevich_consistent,
    h1,
    h1_from_table,
    h2_from_table,
    h2_kunneth,
    h2_of_block_product,
    multiplication_table,
    order,
    parse,
    power_product,
    solve,
)

__all__ = [
    "BlockCounts",
    "Certificate",
    "CosetLimitError",
    "FinAbGroup",
    "GroupTable",
    "GroupdefError",
    "GroupdefParseError",
    "MissingPedigreeError",
    "OrderCeilingError",
    "Presentation",
    "__version__",
    "building_block",
    "certify",
    "construct",
    "deficiency_of_counts",
    "direct_product",
    "figure_table",
    "golod_shafarevich_consistent",
    "h1",
    "h1_from_table",
    "h2_from_table",
    "h2_kunneth",
    "h2_of_block_product",
    "multiplication_table",
    "order",
    "parse",
    "power_product",
    "solve",
]
