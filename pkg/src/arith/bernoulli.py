"""
Bernoulli numbers and Bernoulli polynomials at integer arguments.

B_t is read off the power series x/(e^x - 1), obtained by exact division of
1 by (e^x - 1)/x = sum_n x^n/(n+1)!. The polynomial values follow from
e^{lx} x/(e^x - 1) = sum_t B_t(l) x^t / t!.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = ['bernoulli_number', 'bernoulli_poly']


@lru_cache(maxsize=None)
def _series_coefficient(t: int) -> Fraction:
    """Coefficient of x^t in x/(e^x - 1), i.e. B_t / t!."""
    if t == 0:
        return Fraction(1)
    # b_t = -sum_{k=1}^{t} c_k b_{t-k} with c_k = 1/(k+1)!
    total = Fraction(0)
    for k in range(1, t + 1):
        total += Fraction(1, factorial(k + 1)) * _series_coefficient(t - k)
    return -total


def bernoulli_number(t: int) -> Fraction:
    """
    Bernoulli number B_t = B_t(0), with the convention B_1 = -1/2.

    Args:
        t: Nonnegative index

    Returns:
        B_t as an exact Fraction
    """
    if t < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {t}")
    # warm the cache bottom-up so deep indices never recurse far
    for k in range(t):
        _series_coefficient(k)
    return _series_coefficient(t) * factorial(t)


def bernoulli_poly(t: int, ell: int) -> Fraction:
    """
    Bernoulli polynomial B_t evaluated at the integer ell.

    Args:
        t: Nonnegative degree
        ell: Integer argument

    Returns:
        B_t(ell) = sum_k C(t, k) B_k ell^(t-k)
    """
    if t < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {t}")
    return _bernoulli_poly_cached(t, int(ell))


@lru_cache(maxsize=None)
def _bernoulli_poly_cached(t: int, ell: int) -> Fraction:
    return sum((comb(t, k) * bernoulli_number(k) * Fraction(ell) ** (t - k)
                for k in range(t + 1)), Fraction(0))
