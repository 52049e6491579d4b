from .core import DEFAULT_TOL, Backend, Polynomial, exact_divide, poly_gcd
from .even_odd import (
    EvenOddParts,
    Pole,
    associated_function_poles,
    divide_checked,
    gcd_even_odd,
    kleptsyn_sufficient,
    kleptsyn_sum,
    r_function_criterion,
    split_even_odd,
)
from .roots import RootSet, find_roots, square_free_factors

__all__ = [
    "DEFAULT_TOL",
    "Backend",
    "Polynomial",
    "EvenOddParts",
    "Pole",
    "RootSet",
    "associated_function_poles",
    "divide_checked",
    "exact_divide",
    "find_roots",
    "gcd_even_odd",
    "kleptsyn_sufficient",
    "kleptsyn_sum",
    "poly_gcd",
    "r_function_criterion",
    "split_even_odd",
    "square_free_factors",
]
