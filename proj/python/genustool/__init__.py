"""Exact genus computations for generating tuples, Weyl group constructions,
character-table class data, modular curve levels and elliptic curve tables.

The heavy lifting lives in the C++ extension module ``genustool._core``; this
package re-exports its public surface.
"""

from genustool._core import (  # noqa: F401
    CharacterTable,
    CurveDatabase,
    Permutation,
    PermutationGroup,
    data_dir,
    deleted_perm_genus,
    diagnose_product,
    genus_zero_levels,
    index_gamma,
    index_gamma0,
    parse_cycles,
    print_cycles,
    search_tuples,
    sl2_order,
    steinberg_dim,
    steinberg_witness,
    tuple_product_check,
    verify_corollary,
    verify_mathieu,
    weyl_check,
    x0_genus,
)

__all__ = [
    "CharacterTable",
    "CurveDatabase",
    "Permutation",
    "PermutationGroup",
    "data_dir",
    "deleted_perm_genus",
    "diagnose_product",
    "genus_zero_levels",
    "index_gamma",
    "index_gamma0",
    "parse_cycles",
    "print_cycles",
    "search_tuples",
    "sl2_order",
    "steinberg_dim",
    "steinberg_witness",
    "tuple_product_check",
    "verify_corollary",
    "verify_mathieu",
    "weyl_check",
    "x0_genus",
]
