"""Exact cyclotomic class numbers, Eichler masses, and certified genus bounds."""

from cycloclass.cyclotomic import (
    CycNum,
    UndecidedError,
    abs_norm,
    cyclotomic_poly,
    euler_phi,
    galois_conj_trace,
    is_square_unit,
    is_totally_positive,
    p_element,
    p_prime_element,
    rel_norm_real,
    u_plus_element,
)

__all__ = [
    "CycNum",
    "UndecidedError",
    "abs_norm",
    "cyclotomic_poly",
    "euler_phi",
    "galois_conj_trace",
    "is_square_unit",
    "is_totally_positive",
    "p_element",
    "p_prime_element",
    "rel_norm_real",
    "u_plus_element",
]
