"""Computational tools for Fermat's equation over imaginary quadratic fields of class number one."""

from .okarith import (
    CLASS_NUMBER_ONE,
    TWO_INERT,
    FieldDescriptor,
    OkElement,
    PrimeIdeal,
    cokernel_phi,
    make_field,
    norm,
    quotient_unit_group,
    residue_map,
    split_prime,
    units,
)
from .frey import FreyCurve, FreyInput, build_frey, reduction_type, trace_of_frobenius, v_q_of_j
from .hecke import HeckeElement, HeckeField, field_norm, he_arith
from .sieve import (
    NewformRecord,
    SieveConfig,
    bound_B,
    congruence_check,
    constant_C,
    exponent_floor,
    obstruction_constants,
    trace_set,
)
from .units import classify_trivial, unit_search

__version__ = "0.1.0"
