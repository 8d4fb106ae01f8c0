"""
Chain-shaped generators and their signed-binomial aggregates.

A chain (h_1,S_1) < ... < (h_r,S_r) gives the path graph whose first vertex is
(h_1, S_1), whose j-th inner vertex is (h_j - h_{j-1}, S_j minus S_{j-1}) and
whose last vertex is (g - h_r, P minus S_r). Edge j carries the psi pair (i, j):
i on the side of the anchor, j on the far side.
"""

import itertools
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from ..combin import Bipartition, Chain, MarkedSpace, bipartition_lt, is_chain
from .graph import DecoratedGraph
from .taut_class import ClassAccumulator, TautClass

ExponentPair = Tuple[int, int]


def chain_graph(space: MarkedSpace, chain: Chain, exponents: Sequence[ExponentPair], *,
                last_kappa: Optional[int] = None,
                loop: Optional[ExponentPair] = None,
                leg_psi: Optional[Tuple[str, int]] = None) -> Optional[DecoratedGraph]:
    """
    Build the X graph of a chain, or its Z (kappa on the last vertex) or
    Y (loop on the last vertex) variant.

    Returns:
        The decorated graph, or None when the loop would need negative genus
    """
    if len(exponents) != len(chain):
        raise ValueError(f"{len(exponents)} exponent pairs for a chain of length {len(chain)}")
    if not is_chain(chain):
        raise ValueError("chain entries must be strictly increasing")
    genera: List[int] = []
    legs: List[Tuple[str, ...]] = []
    prev_h, prev_s = 0, frozenset()
    for bip in chain:
        genera.append(bip.h - prev_h)
        legs.append(tuple(bip.S - prev_s))
        prev_h, prev_s = bip.h, bip.S
    genera.append(space.g - prev_h)
    legs.append(tuple(frozenset(space.markings) - prev_s))

    last = len(chain)
    edges = [((j, i), (j + 1, k)) for j, (i, k) in enumerate(exponents)]
    kappa: List[Tuple[int, ...]] = [() for _ in genera]
    if last_kappa is not None:
        kappa[last] = (last_kappa,)
    if loop is not None:
        genera[last] -= 1
        if genera[last] < 0:
            return None
        edges.append(((last, loop[0]), (last, loop[1])))
    psi = (leg_psi,) if leg_psi and leg_psi[1] else ()
    return DecoratedGraph(tuple(genera), tuple(legs), tuple(edges), psi, tuple(kappa))


def _check_lengths(chain: Chain, k: Sequence[int]) -> None:
    if len(chain) != len(k):
        raise ValueError(f"composition {tuple(k)} does not match a chain of length {len(chain)}")
    if any(part < 1 for part in k):
        raise ValueError(f"composition parts must be positive: {tuple(k)}")


def signed_binomial_terms(k: Sequence[int], reduce_last: bool = False
                          ) -> Iterator[Tuple[int, Tuple[ExponentPair, ...]]]:
    """
    Yield (sign * binomial product, exponent pairs) of the C-power expansion.

    Edge j runs over (i, k_j - 1 - i) with weight (-1)^(k_j - 1) C(k_j - 1, i).
    With reduce_last the last edge loses one unit on its far side and only
    i <= k_r - 2 survives.
    """
    ranges = []
    for index, part in enumerate(k):
        shift = 1 if reduce_last and index == len(k) - 1 else 0
        ranges.append([(i, part - 1 - i - shift) for i in range(part - shift)])
    for pairs in itertools.product(*ranges):
        weight = 1
        for part, (i, _) in zip(k, pairs):
            weight *= (-1) ** (part - 1) * comb(part - 1, i)
        yield weight, pairs


def bold_X(space: MarkedSpace, chain: Chain, k: Sequence[int]) -> TautClass:
    """Signed-binomial sum of X graphs; the fundamental class when r = 0."""
    _check_lengths(chain, k)
    acc = ClassAccumulator(space)
    for weight, pairs in signed_binomial_terms(k):
        acc.add_graph(chain_graph(space, chain, pairs), weight)
    return acc.result()


def bold_Z(space: MarkedSpace, chain: Chain, k: Sequence[int], b: int) -> TautClass:
    """
    kappa_b on the last vertex of the X sum.

    b = -1 follows kappa_{-1} psi^t = psi^(t-1) with psi^(-1) = 0.
    """
    _check_lengths(chain, k)
    if b < -1:
        raise ValueError(f"kappa index must be >= -1, got {b}")
    acc = ClassAccumulator(space)
    if b == -1:
        if chain:
            for weight, pairs in signed_binomial_terms(k, reduce_last=True):
                acc.add_graph(chain_graph(space, chain, pairs), weight)
        return acc.result()
    for weight, pairs in signed_binomial_terms(k):
        acc.add_graph(chain_graph(space, chain, pairs, last_kappa=b), weight)
    return acc.result()


def bold_Ytilde(space: MarkedSpace, chain: Chain, k: Sequence[int], i: int, j: int) -> TautClass:
    """X sum with a loop carrying (i, j) on the last vertex."""
    _check_lengths(chain, k)
    if i < 0 or j < 0:
        raise ValueError(f"loop exponents must be nonnegative: {(i, j)}")
    acc = ClassAccumulator(space)
    for weight, pairs in signed_binomial_terms(k):
        acc.add_graph(chain_graph(space, chain, pairs, loop=(i, j)), weight)
    return acc.result()


def bold_Xtilde(space: MarkedSpace, chain: Chain, extra: Optional[Bipartition],
                k: Sequence[int], i: int, j: int) -> TautClass:
    """
    X sum of the chain extended by extra, the new edge carrying (i, j).

    extra=None is the length -1 request and gives zero.
    """
    if extra is None:
        return TautClass.zero(space)
    _check_lengths(chain, k)
    if chain and not bipartition_lt(chain[-1], extra):
        raise ValueError(f"{extra.label(space)} does not extend the chain past "
                         f"{chain[-1].label(space)}")
    if i < 0 or j < 0:
        raise ValueError(f"edge exponents must be nonnegative: {(i, j)}")
    acc = ClassAccumulator(space)
    for weight, pairs in signed_binomial_terms(k):
        acc.add_graph(chain_graph(space, chain + (extra,), pairs + ((i, j),)), weight)
    return acc.result()


def attach_leg_psi(cls: TautClass, p: str, e: int) -> TautClass:
    """Multiply every generator by psi_p^e on the leg p."""
    if p not in cls.space.markings:
        raise ValueError(f"unknown marking {p!r}")
    if e < 0:
        raise ValueError(f"psi exponent must be nonnegative, got {e}")
    if e == 0:
        return cls
    acc = ClassAccumulator(cls.space)
    for graph, coeff in cls.terms.items():
        acc.add_graph(graph.with_leg_psi(p, e), coeff)
    return acc.result()
