"""
Stable bipartitions of a marked genus-g space, their partial order and chains.

A bipartition (h, S) names the boundary divisor whose general curve has a
genus-h component carrying the markings S and a genus g-h component carrying
the rest. The anchor marking "1" always sits in S, so the complement
representative never appears.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

ANCHOR = "1"


@dataclass(frozen=True)
class MarkedSpace:
    """Genus g and the ordered marking labels P of the moduli space."""
    g: int
    markings: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'markings', tuple(str(p) for p in self.markings))
        if not isinstance(self.g, int) or self.g < 1:
            raise ValueError(f"genus must be an integer >= 1, got {self.g!r}")
        if not self.markings:
            raise ValueError("marking set P must be nonempty")
        if len(set(self.markings)) != len(self.markings):
            raise ValueError(f"markings must be distinct: {self.markings}")
        if ANCHOR not in self.markings:
            raise ValueError(f"anchor marking {ANCHOR!r} must belong to P")

    @property
    def n(self) -> int:
        return len(self.markings)

    @property
    def dim(self) -> int:
        """Dimension 3g - 3 + |P|."""
        return 3 * self.g - 3 + self.n

    def marking_index(self, label: str) -> int:
        return self.markings.index(label)

    def __str__(self) -> str:
        return f"M({self.g}; {','.join(self.markings)})"


@dataclass(frozen=True)
class Bipartition:
    """The pair (h, S) with the anchor in S."""
    h: int
    S: FrozenSet[str]

    def __post_init__(self):
        object.__setattr__(self, 'S', frozenset(str(p) for p in self.S))

    def complement(self, space: MarkedSpace) -> FrozenSet[str]:
        return frozenset(space.markings) - self.S

    def sort_key(self, space: MarkedSpace) -> Tuple[int, Tuple[int, ...]]:
        return self.h, tuple(sorted(space.marking_index(p) for p in self.S))

    def label(self, space: Optional[MarkedSpace] = None) -> str:
        if space is not None:
            names = sorted(self.S, key=space.marking_index)
        else:
            names = sorted(self.S)
        return f"({self.h},{{{','.join(names)}}})"


Chain = Tuple[Bipartition, ...]


def validate_bipartition(space: MarkedSpace, bip: Bipartition) -> None:
    """Raise ValueError unless bip is a stable bipartition of space."""
    unknown = bip.S - set(space.markings)
    if unknown:
        raise ValueError(f"bipartition {bip.label()} uses unknown markings {sorted(unknown)}")
    if ANCHOR not in bip.S:
        raise ValueError(
            f"bipartition {bip.label()} violates the anchor convention: "
            f"marking {ANCHOR!r} must lie in S")
    if not 0 <= bip.h <= space.g:
        raise ValueError(f"bipartition {bip.label()} needs 0 <= h <= {space.g}")
    if bip.h == 0 and len(bip.S) < 2:
        raise ValueError(f"bipartition {bip.label()} is unstable: h=0 needs |S| >= 2")
    if bip.h == space.g and len(bip.complement(space)) < 2:
        raise ValueError(f"bipartition {bip.label()} is unstable: h=g needs |P\\S| >= 2")


@lru_cache(maxsize=None)
def stable_bipartitions(space: MarkedSpace) -> Tuple[Bipartition, ...]:
    """
    All stable bipartitions, ordered lexicographically in (h, S).

    S is compared as the sorted tuple of marking positions in P.
    """
    others = [p for p in space.markings if p != ANCHOR]
    found = []
    for h in range(space.g + 1):
        for size in range(len(others) + 1):
            for extra in itertools.combinations(others, size):
                bip = Bipartition(h, frozenset((ANCHOR,) + extra))
                try:
                    validate_bipartition(space, bip)
                except ValueError:
                    continue
                found.append(bip)
    found.sort(key=lambda b: b.sort_key(space))
    return tuple(found)


def bipartition_leq(a: Bipartition, b: Bipartition) -> bool:
    """(h1, S1) <= (h2, S2) iff h1 <= h2 and S1 is contained in S2."""
    return a.h <= b.h and a.S <= b.S


def bipartition_lt(a: Bipartition, b: Bipartition) -> bool:
    return a != b and bipartition_leq(a, b)


def is_chain(entries: Sequence[Bipartition]) -> bool:
    return all(bipartition_lt(x, y) for x, y in zip(entries, entries[1:]))


def enumerate_chains(space: MarkedSpace, r: int,
                     among: Optional[Iterable[Bipartition]] = None) -> List[Chain]:
    """
    Strictly increasing chains of length r.

    Args:
        space: The marked space
        r: Chain length; r=0 yields only the empty chain
        among: Optional subset of bipartitions to draw entries from

    Returns:
        Chains in lexicographic order of their entries' enumeration positions
    """
    if r < 0:
        raise ValueError(f"chain length must be nonnegative, got {r}")
    pool = stable_bipartitions(space)
    if among is not None:
        wanted = set(among)
        pool = tuple(b for b in pool if b in wanted)
    chains: List[Chain] = [()]
    for _ in range(r):
        grown = []
        for chain in chains:
            for bip in pool:
                if not chain or bipartition_lt(chain[-1], bip):
                    grown.append(chain + (bip,))
        chains = grown
    return chains


def compositions(a: int, r: int) -> List[Tuple[int, ...]]:
    """Ordered sequences of r positive integers summing to a."""
    if a < 1 or r < 1:
        raise ValueError(f"compositions need a >= 1 and r >= 1, got a={a}, r={r}")
    result = []
    for cuts in itertools.combinations(range(1, a), r - 1):
        bounds = (0,) + cuts + (a,)
        result.append(tuple(bounds[i + 1] - bounds[i] for i in range(r)))
    return result


def bipartition_to_json(space: MarkedSpace, bip: Bipartition) -> Dict[str, Any]:
    return {"h": bip.h, "S": sorted(bip.S, key=space.marking_index)}


def bipartition_from_json(space: MarkedSpace, data: Dict[str, Any]) -> Bipartition:
    """Parse {"h": int, "S": [labels]}; the anchor rule is enforced, never repaired."""
    try:
        h = data["h"]
        labels = data["S"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bipartition entry needs 'h' and 'S': {data!r}") from exc
    if not isinstance(h, int) or isinstance(h, bool):
        raise ValueError(f"bipartition genus must be an integer: {h!r}")
    bip = Bipartition(h, frozenset(str(p) for p in labels))
    validate_bipartition(space, bip)
    return bip
