# Copyright The pertalex contributors
# SPDX-License-Identifier: Apache-2.0

from .. import exceptions
from ..ring import LaurentPoly, T

# z^2 written in T, from z = x - 1/x and T = x^2.
_Z_SQUARED = T - 2 + T**-1
_ONE_MINUS_T_SQUARED = (1 - T) ** 2


def conway(alex: LaurentPoly) -> LaurentPoly:
    """Conway polynomial ``nabla(z)`` with ``nabla(x - 1/x) = alex(x^2)``.

    Parameters
    ----------
    alex: pertalex.ring.LaurentPoly
        A symmetric Laurent polynomial with integer exponents.

    Returns
    -------
    conway: pertalex.ring.LaurentPoly
        Polynomial in z with nonnegative even exponents; render it with ``to_str("z")``.

    Raises
    ------
    pertalex.exceptions.NoConwaySolutionError
        if alex is not symmetric or has half-integer exponents.
    """
    return _solve_in_z(alex, "Alexander polynomial")


def rho1_reduced(rho1: LaurentPoly) -> LaurentPoly:
    """Return ``T / (1 - T)^2 * rho1``.

    Raises
    ------
    pertalex.exceptions.ConjectureCounterexampleError
        if rho1 is not symmetric or not divisible by ``(1 - T)^2``. The offending value is kept
        on the exception.
    """
    if not rho1:
        return LaurentPoly()
    if not rho1.is_symmetric():
        raise exceptions.ConjectureCounterexampleError(
            f"rho_1 = {rho1} is not symmetric", value=rho1
        )
    try:
        quotient = rho1.exact_divide(_ONE_MINUS_T_SQUARED)
    except ArithmeticError:
        raise exceptions.ConjectureCounterexampleError(
            f"rho_1 = {rho1} is not divisible by (1 - T)^2", value=rho1
        ) from None
    return quotient * T


def delta1(rho1_red: LaurentPoly) -> LaurentPoly:
    """Perturbed Conway invariant ``delta_1(z)`` with ``delta_1(x - 1/x) = rho1_red(x^2)``.

    Raises
    ------
    pertalex.exceptions.NoConwaySolutionError
        if rho1_red is not symmetric or has half-integer exponents.
    """
    return _solve_in_z(rho1_red, "reduced rho_1")


def substitute_z(polynomial: LaurentPoly) -> LaurentPoly:
    """Inverse of the z substitution: replace ``z^2`` by ``T - 2 + 1/T``."""
    total = LaurentPoly()
    for exponent, coefficient in polynomial.integer_terms().items():
        if exponent % 2:
            raise exceptions.NoConwaySolutionError(f"{polynomial} has odd powers of z")
        total = total + coefficient * _Z_SQUARED ** (exponent // 2)
    return total


def _solve_in_z(polynomial: LaurentPoly, what: str) -> LaurentPoly:
    if not polynomial.is_integral or not polynomial.is_symmetric():
        raise exceptions.NoConwaySolutionError(
            f"the {what} {polynomial} is not a symmetric polynomial in integer powers of T"
        )

    # Strip the top power of z^2 until nothing is left; symmetry keeps every top exponent >= 0.
    remainder = polynomial
    solution = {}
    while remainder:
        top = int(remainder.max_exponent)
        coefficient = remainder.leading_coefficient
        solution[2 * top] = coefficient
        remainder = remainder - coefficient * _Z_SQUARED**top
    return LaurentPoly.from_dict(solution)
