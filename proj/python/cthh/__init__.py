"""Quiver mutation classes and Hochschild cohomology of cluster-tilted algebras."""

from ._core import (
    CthhError,
    Quiver,
    algebra_info,
    center_dim,
    chordless_cycles,
    closed_form,
    dynkin_type,
    f_coeff,
    hh1_dim,
    hh_dims,
    hh_universal,
    lookup_e,
    mutation_class,
    oriented_3_cycles,
    relations,
    series_dims,
    standard_seed,
    verify,
)

__all__ = [
    "CthhError",
    "Quiver",
    "algebra_info",
    "center_dim",
    "chordless_cycles",
    "closed_form",
    "dynkin_type",
    "f_coeff",
    "hh1_dim",
    "hh_dims",
    "hh_universal",
    "lookup_e",
    "mutation_class",
    "oriented_3_cycles",
    "relations",
    "series_dims",
    "standard_seed",
    "verify",
]
