"""
Chern character <-> total Chern class.

c = exp( sum_(s>=1) (-1)^(s-1) (s-1)! ch_s ), expanded degree by degree through
t c_t = sum_(s=1)^t s p_s c_(t-s) with p_s = (-1)^(s-1) (s-1)! ch_s.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Mapping, Optional, Union

from ..strata import TautClass
from .ring import GradedRing
from .theorem import GradedChernData

LOGGER = logging.getLogger(__name__)


def _default_ring(components: Mapping[int, Any]) -> GradedRing:
    for value in components.values():
        if isinstance(value, TautClass):
            return GradedRing.tautological(value.space)
    return GradedRing.symbolic()


def invert_to_chern(ch: Union[GradedChernData, Mapping[int, Any]], tmax: int,
                    negate: bool = False, ring: Optional[GradedRing] = None) -> Dict[int, Any]:
    """
    Chern classes c_0 .. c_tmax from Chern character components.

    Args:
        ch: GradedChernData or a plain mapping degree -> element
        tmax: Highest Chern class wanted
        negate: Compute c(-F) by using -ch_s
        ring: Ring adapter; TautClass data defaults to the tautological ring

    Returns:
        Mapping t -> c_t with c_0 the unit
    """
    components = ch.components if isinstance(ch, GradedChernData) else dict(ch)
    missing = [s for s in range(1, tmax + 1) if s not in components]
    if missing:
        raise ValueError(f"Chern character components missing for degrees {missing}")
    ring = ring or _default_ring(components)
    sign = -1 if negate else 1
    p = {s: components[s] * (sign * (-1) ** (s - 1) * factorial(s - 1))
         for s in range(1, tmax + 1)}

    c: Dict[int, Any] = {0: ring.one}
    for t in range(1, tmax + 1):
        total = ring.zero
        for s in range(1, t + 1):
            total = total + s * ring.mul(p[s], c[t - s])
        c[t] = ring.normalize(ring.scale(total, Fraction(1, t)))
        LOGGER.debug("inversion: c_%d computed", t)
    return c


def chern_to_character(c: Mapping[int, Any], tmax: int, negate: bool = False,
                       ring: Optional[GradedRing] = None) -> Dict[int, Any]:
    """
    Newton-identity inverse of invert_to_chern: recover ch_1 .. ch_tmax.
    """
    missing = [t for t in range(1, tmax + 1) if t not in c]
    if missing:
        raise ValueError(f"Chern classes missing for degrees {missing}")
    ring = ring or _default_ring(c)
    p: Dict[int, Any] = {}
    ch: Dict[int, Any] = {}
    sign = -1 if negate else 1
    for t in range(1, tmax + 1):
        total = t * c[t]
        for s in range(1, t):
            total = total - s * ring.mul(p[s], c[t - s])
        p[t] = ring.normalize(ring.scale(total, Fraction(1, t)))
        ch[t] = ring.normalize(ring.scale(p[t], Fraction(sign * (-1) ** (t - 1), factorial(t - 1))))
    return ch
