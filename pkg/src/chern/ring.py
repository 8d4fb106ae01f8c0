"""
The commutative graded rings Chern-class manipulations run over.
"""

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import sympy

from ..combin import MarkedSpace
from ..strata import TautClass
from ..tautprod import gp_product


def _identity(value: Any) -> Any:
    return value


def _plain_scale(value: Any, q: Fraction) -> Any:
    return value * q


def _sympy_scale(value: Any, q: Fraction) -> Any:
    return value * sympy.Rational(q.numerator, q.denominator)


@dataclass(frozen=True)
class GradedRing:
    """Unit, zero, product and rational scaling of a ring."""
    one: Any
    zero: Any
    mul: Callable[[Any, Any], Any]
    scale: Callable[[Any, Fraction], Any] = _plain_scale
    normalize: Callable[[Any], Any] = _identity

    @classmethod
    def plain(cls) -> 'GradedRing':
        """Python numbers (ints, Fractions) or anything with * and +."""
        return cls(one=1, zero=0, mul=operator.mul)

    @classmethod
    def symbolic(cls) -> 'GradedRing':
        """sympy expressions in formal Chern symbols, kept expanded."""
        return cls(one=sympy.Integer(1), zero=sympy.Integer(0), mul=operator.mul,
                   scale=_sympy_scale, normalize=sympy.expand)

    @classmethod
    def tautological(cls, space: MarkedSpace) -> 'GradedRing':
        """Decorated strata classes with the excess-intersection product."""
        return cls(one=TautClass.unit(space), zero=TautClass.zero(space), mul=gp_product)
