"""Finite Dickson nearfields: construction, verification, export."""

from ._dicksonnf import (
    ContradictionError,
    DicksonNearfield,
    ExtensionField,
    as_prime_power,
    class_count,
    construct,
    enumerate_variant_classes,
    euler_phi,
    factorize,
    is_dickson_pair,
    is_prime,
    load_descriptor,
    mult_order,
    residue_indices,
)

__version__ = "0.1.0"

__all__ = [
    "ContradictionError",
    "DicksonNearfield",
    "ExtensionField",
    "as_prime_power",
    "class_count",
    "construct",
    "enumerate_variant_classes",
    "euler_phi",
    "factorize",
    "is_dickson_pair",
    "is_prime",
    "load_descriptor",
    "mult_order",
    "residue_indices",
]
