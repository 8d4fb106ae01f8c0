"""
Closed-form evaluation of ch(R pi_* O(D)) as Omega + Phi.

For t = a + b the degree t - 1 component collects

  Omega:  B_b(ell)/b! * W(chain, k) * Z^(k, b-1)
        + (-1)^beta B_beta(ell)/(alpha! beta!) * W(chain, k)
          * sum_(p not in S_r) d_p^alpha (-psi_p)^(b-1) X^k        (b > 0, alpha + beta = b)
  Phi:    B_b/b! * W(chain, k) * sum_(e=0)^(b-2) (-1)^e
          [ sum_((l,T) > (h_r,S_r)) Xtilde^(k,(e,b-2-e))
            + Ytilde^(k,(e,b-2-e))
            + (-1)^(k_r) Xtilde_(chain minus last, last)^(k minus last,(e+k_r,b-2-e)) ]
                                                                   (b > 0 even)

where chains run over strictly increasing chains in the support of a, k over
compositions of a and W(chain, k) = prod_j a_(h_j,S_j)^(k_j) / k_j!.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from ..arith import bernoulli_number, bernoulli_poly
from ..combin import (Bipartition, Chain, bipartition_lt, compositions, enumerate_chains,
                      stable_bipartitions)
from ..parallel import ordered_map
from ..strata import (ClassAccumulator, TautClass, attach_leg_psi, bold_X, bold_Xtilde,
                      bold_Ytilde, bold_Z)
from ..ucurve import DivisorSpec

LOGGER = logging.getLogger(__name__)

WeightedChain = Tuple[Chain, Tuple[int, ...], Fraction]


@dataclass
class GradedChernData:
    """ch_s for s = 0..smax; negated records whether this is ch(-F)."""
    components: Dict[int, TautClass] = field(default_factory=dict)
    negated: bool = False

    def component(self, s: int) -> TautClass:
        return self.components[s]

    @property
    def degrees(self) -> List[int]:
        return sorted(self.components)

    def negate(self) -> 'GradedChernData':
        return GradedChernData({s: -c for s, c in self.components.items()}, not self.negated)


def _weighted_chains(divisor: DivisorSpec, a: int) -> List[WeightedChain]:
    if a == 0:
        return [((), (), Fraction(1))]
    support = divisor.support()
    found = []
    for r in range(1, min(a, len(support)) + 1):
        for chain in enumerate_chains(divisor.space, r, among=support):
            for k in compositions(a, r):
                weight = Fraction(1)
                for bip, part in zip(chain, k):
                    weight *= Fraction(divisor.a_of(bip) ** part, factorial(part))
                found.append((chain, k, weight))
    return found


def _extensions(chain: Chain, bipartitions: Tuple[Bipartition, ...]) -> List[Bipartition]:
    if not chain:
        return list(bipartitions)
    return [bip for bip in bipartitions if bipartition_lt(chain[-1], bip)]


def _component(divisor: DivisorSpec, t: int) -> TautClass:
    """Degree t - 1 part of Omega + Phi."""
    space = divisor.space
    ell = divisor.ell
    bipartitions = stable_bipartitions(space)
    acc = ClassAccumulator(space)
    for a in range(t + 1):
        b = t - a
        chains = _weighted_chains(divisor, a)
        if not chains:
            continue

        first = bernoulli_poly(b, ell) / factorial(b)
        if first:
            for chain, k, weight in chains:
                acc.add(bold_Z(space, chain, k, b - 1), first * weight)

        if b > 0:
            for chain, k, weight in chains:
                x_class = bold_X(space, chain, k)
                outside = [p for p in space.markings if not chain or p not in chain[-1].S]
                for alpha in range(b + 1):
                    beta = b - alpha
                    second = (-1) ** beta * bernoulli_poly(beta, ell) / (factorial(alpha) * factorial(beta))
                    if not second:
                        continue
                    for p in outside:
                        power = Fraction(divisor.d_of(p)) ** alpha
                        if power:
                            acc.add(attach_leg_psi(x_class, p, b - 1),
                                    second * weight * power * (-1) ** (b - 1))

        if b >= 2 and b % 2 == 0:
            node_weight = bernoulli_number(b) / factorial(b)
            for chain, k, weight in chains:
                for e in range(b - 1):
                    i, j = e, b - 2 - e
                    scale = node_weight * weight * (-1) ** e
                    for extra in _extensions(chain, bipartitions):
                        acc.add(bold_Xtilde(space, chain, extra, k, i, j), scale)
                    acc.add(bold_Ytilde(space, chain, k, i, j), scale)
                    if chain:
                        merged = bold_Xtilde(space, chain[:-1], chain[-1], k[:-1], e + k[-1], j)
                        acc.add(merged, scale * (-1) ** k[-1])
    return acc.result()


def chern_char_theorem(divisor: DivisorSpec, smax: int, workers: int = 1) -> GradedChernData:
    """
    Evaluate ch_0 .. ch_smax of R pi_* O(D) in closed form.

    Args:
        divisor: The divisor D on the universal curve
        smax: Highest degree, 0 <= smax <= 3g - 3 + |P|
        workers: Threads used across degrees

    Returns:
        GradedChernData with one component per degree
    """
    space = divisor.space
    if not 0 <= smax <= space.dim:
        raise ValueError(f"smax must lie in [0, {space.dim}], got {smax}")
    LOGGER.info("theorem: evaluating degrees 0..%d on %s", smax, space)
    parts = ordered_map(lambda s: _component(divisor, s + 1), range(smax + 1), workers)
    for s, part in enumerate(parts):
        if not part.is_homogeneous(s):
            raise RuntimeError(f"degree {s} component is not of pure codimension {s}")
        LOGGER.debug("theorem: degree %d has %d generators", s, len(part))
    return GradedChernData(dict(enumerate(parts)), negated=False)
