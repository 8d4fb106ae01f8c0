"""
Thom-Porteous determinants Delta^(p)_q = det | c_(q+j-i) |.
"""

import itertools
from typing import Any, Mapping, Optional

from sympy.combinatorics import Permutation

from .ring import GradedRing


def thom_porteous(c: Mapping[int, Any], p: int, q: int, ring: Optional[GradedRing] = None) -> Any:
    """
    The p x p determinant of the Chern series, by Leibniz expansion.

    Args:
        c: Mapping k -> c_k; c_k = 0 for k < 0 and c_0 defaults to the unit
        p: Matrix size
        q: Index offset
        ring: Ring adapter (plain numbers by default)

    Returns:
        Delta^(p)_q in the ring
    """
    if p < 1:
        raise ValueError(f"determinant size must be positive, got {p}")
    ring = ring or GradedRing.plain()

    def entry(k: int) -> Any:
        if k < 0:
            return ring.zero
        if k == 0:
            return c.get(0, ring.one)
        if k not in c:
            raise ValueError(f"Chern class c_{k} needed but not supplied")
        return c[k]

    total = ring.zero
    for perm in itertools.permutations(range(p)):
        indices = [q + perm[i] - i for i in range(p)]
        if any(k < 0 for k in indices):
            continue
        term = ring.one
        for k in indices:
            term = ring.mul(term, entry(k))
        total = total + Permutation(list(perm)).signature() * term
    return ring.normalize(total)
