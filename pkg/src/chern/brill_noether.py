"""
Brill-Noether pullbacks Delta^(r+1)_(g-d+r) c(-R pi_* O(D)).

For a phi-stable divisor D of fiber degree d the Abel-Jacobi section pulls the
Brill-Noether class w^r_d back to this determinant on the open locus where the
section is a morphism. That locus is not computed here.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import sympy

from ..combin import MarkedSpace
from ..jacobian import OneNodePolarisation, drc_divisor, modify_divisor
from ..strata import TautClass
from ..ucurve import DivisorSpec
from .inversion import invert_to_chern
from .porteous import thom_porteous
from .ring import GradedRing
from .theorem import chern_char_theorem

LOGGER = logging.getLogger(__name__)

MODES = ("symbolic", "expanded")
EXPANDED_MAX_GENUS = 3


def brill_noether_number(g: int, r: int, d: int) -> int:
    """rho = g - (r + 1)(g - d + r)."""
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class BNRequest:
    """Rank r and a (usually phi-modified) divisor."""
    r: int
    divisor: DivisorSpec

    def __post_init__(self):
        if isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 0:
            raise ValueError(f"r must be a non-negative integer, got {self.r!r}")
        if self.d >= self.g + self.r:
            raise ValueError(f"need d < g + r, got d={self.d}, g={self.g}, r={self.r}")

    @property
    def space(self) -> MarkedSpace:
        return self.divisor.space

    @property
    def g(self) -> int:
        return self.divisor.space.g

    @property
    def d(self) -> int:
        return self.divisor.degree

    @property
    def rho(self) -> int:
        return brill_noether_number(self.g, self.r, self.d)

    @property
    def codimension(self) -> int:
        return self.g - self.rho

    @property
    def p(self) -> int:
        return self.r + 1

    @property
    def q(self) -> int:
        return self.g - self.d + self.r


@dataclass
class BNResult:
    """
    value is a sympy polynomial in c_1, c_2, ... (symbolic) or a TautClass
    (expanded). In symbolic mode in_character rewrites it through the Chern
    character symbols ch_1, ch_2, ... of R pi_* O(D).
    """
    request: BNRequest
    mode: str
    value: Any
    in_character: Any = None
    chern: Dict[int, Any] = field(default_factory=dict)


def chern_symbols(tmax: int) -> Dict[int, Any]:
    """c_0 = 1 and formal c_1 .. c_tmax."""
    symbols: Dict[int, Any] = {0: sympy.Integer(1)}
    for k in range(1, tmax + 1):
        symbols[k] = sympy.Symbol(f"c_{k}")
    return symbols


def character_symbols(tmax: int) -> Dict[int, Any]:
    return {s: sympy.Symbol(f"ch_{s}") for s in range(1, tmax + 1)}


def _symbolic(req: BNRequest) -> BNResult:
    top = req.q + req.p - 1
    ring = GradedRing.symbolic()
    c = chern_symbols(top)
    value = thom_porteous(c, req.p, req.q, ring)
    expanded_c = invert_to_chern(character_symbols(top), top, negate=True, ring=ring)
    in_character = sympy.expand(value.subs({c[k]: expanded_c[k] for k in range(1, top + 1)},
                                           simultaneous=True))
    return BNResult(req, "symbolic", value, in_character, c)


def _expanded(req: BNRequest, smax: int, workers: int) -> BNResult:
    space = req.space
    if space.g > EXPANDED_MAX_GENUS:
        raise ValueError(f"expanded mode is limited to g <= {EXPANDED_MAX_GENUS}, got g={space.g}")
    ring = GradedRing.tautological(space)
    top = req.q + req.p - 1
    tmax = min(top, space.dim, smax)
    ch = chern_char_theorem(req.divisor, tmax, workers=workers)
    c = invert_to_chern(ch, tmax, negate=True, ring=ring)
    for k in range(tmax + 1, top + 1):
        c[k] = ring.zero
    value = thom_porteous(c, req.p, req.q, ring)
    LOGGER.info("bn_pullback: class of codimension %d with %d generators",
                req.codimension, len(value))
    return BNResult(req, "expanded", value, None, c)


def bn_pullback(req: BNRequest, smax: Optional[int] = None, mode: str = "symbolic",
                workers: int = 1) -> BNResult:
    """
    Delta^(r+1)_(g-d+r) of c(-R pi_* O(D)).

    Args:
        req: Rank and divisor; the divisor should already be phi-modified
        smax: Highest Chern character degree allowed, at least g - rho
        mode: "symbolic" (formal Chern symbols) or "expanded" (TautClass, g <= 3)
        workers: Threads for the Chern character evaluation

    Returns:
        BNResult; valid as a pullback of w^r_d only where the section is a morphism
    """
    if mode not in MODES:
        raise ValueError(f"unknown bn mode {mode!r}, expected one of {MODES}")
    smax = req.codimension if smax is None else smax
    if smax < req.codimension:
        raise ValueError(f"smax={smax} is below the class codimension g - rho = {req.codimension}")
    LOGGER.info("bn_pullback: r=%d d=%d rho=%d (%s)", req.r, req.d, req.rho, mode)
    if mode == "symbolic":
        return _symbolic(req)
    return _expanded(req, smax, workers)


def theta_pullback(divisor: DivisorSpec, smax: Optional[int] = None, mode: str = "symbolic",
                   workers: int = 1) -> BNResult:
    """The theta-divisor case r = 0, d = g - 1: equals -ch_1."""
    if divisor.degree != divisor.space.g - 1:
        raise ValueError(f"theta pullback needs degree g - 1 = {divisor.space.g - 1}, "
                         f"got {divisor.degree}")
    return bn_pullback(BNRequest(0, divisor), smax, mode, workers)


def drc_class(space: MarkedSpace, i: str, j: str, phi: Optional[OneNodePolarisation] = None,
              mode: str = "symbolic", smax: Optional[int] = None, workers: int = 1) -> BNResult:
    """
    c_g(-R pi_* O(D_ij(phi))) for D_ij = sigma_i - sigma_j (phi = 0 when omitted).
    """
    if phi is None:
        divisor = drc_divisor(space, i, j)
    else:
        for label in (i, j):
            if label not in space.markings:
                raise ValueError(f"unknown marking {label!r} for {space}")
        d = {i: 1, j: -1} if i != j else {}
        divisor = modify_divisor(DivisorSpec(space, 0, d), phi)
    return bn_pullback(BNRequest(0, divisor), smax, mode, workers)


def pullback_difference(first: BNRequest, second: BNRequest, smax: Optional[int] = None,
                        mode: str = "expanded", workers: int = 1) -> TautClass:
    """
    Difference of two pullbacks for the same space, r and d.

    Only the expanded form carries the divisor, so that is the only mode.
    """
    if mode != "expanded":
        raise ValueError("pullback differences are only meaningful in expanded mode")
    if first.space != second.space:
        raise ValueError(f"requests live on different spaces: {first.space} vs {second.space}")
    if (first.r, first.d) != (second.r, second.d):
        raise ValueError(f"requests differ in (r, d): {(first.r, first.d)} vs {(second.r, second.d)}")
    one = bn_pullback(first, smax, mode, workers).value
    two = bn_pullback(second, smax, mode, workers).value
    return one - two
