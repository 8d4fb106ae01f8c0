"""
Divisors on the universal curve.

D = ell * Ktilde + sum_p d_p sigma_p + sum_(h,S) a_(h,S) C_(h,S), where Ktilde is
the relative dualising class, sigma_p the marking sections and C_(h,S) the
boundary components away from the moving point.
"""

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, Optional

from ..combin import (Bipartition, MarkedSpace, bipartition_from_json, bipartition_to_json,
                      stable_bipartitions, validate_bipartition)


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class DivisorSpec:
    """The data (g, P, ell, {d_p}, {a_(h,S)}) of a divisor on the universal curve."""
    space: MarkedSpace
    ell: int = 0
    d: Mapping[str, int] = field(default_factory=dict)
    a: Mapping[Bipartition, int] = field(default_factory=dict)

    def __post_init__(self):
        _as_int(self.ell, "ell")
        d = {}
        for label, value in dict(self.d).items():
            label = str(label)
            if label not in self.space.markings:
                raise ValueError(f"d given for unknown marking {label!r}")
            d[label] = _as_int(value, f"d_{label}")
        a = {}
        for bip, value in dict(self.a).items():
            validate_bipartition(self.space, bip)
            value = _as_int(value, f"a{bip.label(self.space)}")
            if value:
                a[bip] = value
        object.__setattr__(self, 'd', MappingProxyType(
            {p: d.get(p, 0) for p in self.space.markings}))
        object.__setattr__(self, 'a', MappingProxyType(
            {b: a[b] for b in stable_bipartitions(self.space) if b in a}))

    def __hash__(self):
        return hash((self.space, self.ell, tuple(self.d.items()), tuple(self.a.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DivisorSpec):
            return NotImplemented
        return (self.space == other.space and self.ell == other.ell
                and dict(self.d) == dict(other.d) and dict(self.a) == dict(other.a))

    @property
    def degree(self) -> int:
        """Fiber degree d = ell(2g - 2) + sum d_p."""
        return self.ell * (2 * self.space.g - 2) + sum(self.d.values())

    def d_of(self, p: str) -> int:
        return self.d[p]

    def a_of(self, bip: Bipartition) -> int:
        return self.a.get(bip, 0)

    def d_on(self, bip: Bipartition) -> int:
        """Sum of d_p over p in S."""
        return sum(self.d[p] for p in bip.S)

    def d_complement(self, bip: Bipartition) -> int:
        """d_{S^c}: sum of d_p over p outside S."""
        return sum(self.d[p] for p in bip.complement(self.space))

    def support(self) -> List[Bipartition]:
        return list(self.a)

    def with_a(self, a: Mapping[Bipartition, int]) -> 'DivisorSpec':
        return DivisorSpec(self.space, self.ell, dict(self.d), dict(a))

    def negated(self) -> 'DivisorSpec':
        return DivisorSpec(self.space, -self.ell, {p: -v for p, v in self.d.items()},
                           {b: -v for b, v in self.a.items()})

    def to_json(self, include_zero: bool = False) -> Dict[str, Any]:
        bips = stable_bipartitions(self.space) if include_zero else self.support()
        return {
            "g": self.space.g,
            "markings": list(self.space.markings),
            "ell": self.ell,
            "d": dict(self.d),
            "a": [dict(bipartition_to_json(self.space, b), value=self.a_of(b)) for b in bips],
        }

    @classmethod
    def from_json(cls, space: MarkedSpace, data: Mapping[str, Any]) -> 'DivisorSpec':
        a: Dict[Bipartition, int] = {}
        for entry in data.get("a", []) or []:
            bip = bipartition_from_json(space, entry)
            a[bip] = a.get(bip, 0) + _as_int(entry.get("value"), f"a{bip.label(space)}")
        return cls(space, data.get("ell", 0), dict(data.get("d", {}) or {}), a)


def euler_characteristic(divisor: DivisorSpec) -> int:
    """Riemann-Roch: d + 1 - g."""
    return divisor.degree + 1 - divisor.space.g
