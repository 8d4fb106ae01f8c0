"""
One-node stability parameters and the stable modification D -> D(phi).

A parameter assigns to every stable bipartition (h,S) the value phi_S of the
S-side component of a general one-node curve of that type; the other side
gets total_degree - phi_S. A line bundle with multidegree (e, d - e) is stable
when |e - phi_S| < 1/2. phi is nondegenerate (on one-node curves) when no
phi_S lies in Z + 1/2, so exactly one e is stable.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from types import MappingProxyType
from typing import Any, Dict, List, Mapping, NamedTuple, Tuple

from ..arith import as_rational, format_rational
from ..combin import (Bipartition, MarkedSpace, bipartition_from_json, bipartition_to_json,
                      stable_bipartitions, validate_bipartition)
from ..ucurve import DivisorSpec

LOGGER = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class OneNodePolarisation:
    """phi_S for every stable bipartition, with total degree d."""
    space: MarkedSpace
    total_degree: int
    phi_s: Mapping[Bipartition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if isinstance(self.total_degree, bool) or not isinstance(self.total_degree, int):
            raise ValueError(f"total degree must be an integer, got {self.total_degree!r}")
        values = {}
        for bip, value in dict(self.phi_s).items():
            validate_bipartition(self.space, bip)
            values[bip] = as_rational(value)
        order = stable_bipartitions(self.space)
        object.__setattr__(self, 'phi_s', MappingProxyType(
            {b: values[b] for b in order if b in values}))

    def __hash__(self):
        return hash((self.space, self.total_degree, tuple(self.phi_s.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OneNodePolarisation):
            return NotImplemented
        return (self.space == other.space and self.total_degree == other.total_degree
                and dict(self.phi_s) == dict(other.phi_s))

    def value(self, bip: Bipartition) -> Fraction:
        if bip not in self.phi_s:
            raise ValueError(f"phi has no value for {bip.label(self.space)}")
        return self.phi_s[bip]

    def complement_value(self, bip: Bipartition) -> Fraction:
        return self.total_degree - self.value(bip)

    def shifted(self, bip: Bipartition, m: int) -> 'OneNodePolarisation':
        """The same parameter with phi_S raised by m on one bipartition."""
        values = dict(self.phi_s)
        values[bip] = self.value(bip) + m
        return OneNodePolarisation(self.space, self.total_degree, values)


class PhiDiagnostic(NamedTuple):
    bipartition: Bipartition
    value: Fraction
    reason: str


def stable_integer(value: Fraction) -> int:
    """The integer e with |e - value| < 1/2; value must not lie in Z + 1/2."""
    return floor(value + HALF)


def validate_phi(phi: OneNodePolarisation) -> Tuple[bool, List[PhiDiagnostic]]:
    """
    Check one-node nondegeneracy of phi.

    Args:
        phi: A parameter with an entry for every stable bipartition

    Returns:
        (ok, diagnostics), one diagnostic per bipartition where phi_S is a half-integer
    """
    missing = [b for b in stable_bipartitions(phi.space) if b not in phi.phi_s]
    if missing:
        labels = ", ".join(b.label(phi.space) for b in missing)
        raise ValueError(f"phi is missing entries for {labels}")
    diagnostics = []
    for bip, value in phi.phi_s.items():
        if (value - HALF).denominator == 1:
            diagnostics.append(PhiDiagnostic(
                bip, value,
                f"phi_S = {format_rational(value)} admits two stable degrees "
                f"{floor(value)} and {floor(value) + 1} (equality case)"))
    for diag in diagnostics:
        LOGGER.debug("phi degenerate at %s: %s", diag.bipartition.label(phi.space), diag.reason)
    return not diagnostics, diagnostics


def one_node_degree(divisor: DivisorSpec, bip: Bipartition) -> int:
    """Degree of ell*Ktilde + sum d_p sigma_p on the S-side of a one-node curve."""
    return divisor.ell * (2 * bip.h - 1) + divisor.d_on(bip)


def modify_divisor(divisor: DivisorSpec, phi: OneNodePolarisation) -> DivisorSpec:
    """
    Replace every a_(h,S) by the unique integer making D phi-stable on one-node curves.

    C_(h,S) has degree +1 on the S-side component and -1 on the other side, so
    the S-side degree of D(phi) is one_node_degree + a_(h,S)(phi).

    Args:
        divisor: Divisor whose fiber degree equals phi.total_degree
        phi: Nondegenerate one-node parameter

    Returns:
        The modified divisor; ell and d are unchanged
    """
    if divisor.space != phi.space:
        raise ValueError(f"divisor lives on {divisor.space}, phi on {phi.space}")
    if divisor.degree != phi.total_degree:
        raise ValueError(f"divisor has degree {divisor.degree} but phi is for degree "
                         f"{phi.total_degree}")
    ok, diagnostics = validate_phi(phi)
    if not ok:
        labels = ", ".join(d.bipartition.label(phi.space) for d in diagnostics)
        raise ValueError(f"phi is degenerate at {labels}")
    a: Dict[Bipartition, int] = {}
    for bip, value in phi.phi_s.items():
        a[bip] = stable_integer(value - one_node_degree(divisor, bip))
    modified = divisor.with_a(a)
    LOGGER.debug("modify_divisor: %d nonzero boundary coefficients", len(modified.a))
    return modified


def is_phi_stable(divisor: DivisorSpec, phi: OneNodePolarisation) -> bool:
    """Whether every one-node restriction of D satisfies the strict inequality."""
    return all(abs(one_node_degree(divisor, bip) + divisor.a_of(bip) - value) < HALF
               for bip, value in phi.phi_s.items())


def zero_polarisation(space: MarkedSpace, total_degree: int = 0) -> OneNodePolarisation:
    """phi identically 0 on every bipartition."""
    return OneNodePolarisation(space, total_degree,
                               {bip: Fraction(0) for bip in stable_bipartitions(space)})


def drc_divisor(space: MarkedSpace, i: str, j: str) -> DivisorSpec:
    """sigma_i - sigma_j made stable for phi = 0."""
    for label in (i, j):
        if label not in space.markings:
            raise ValueError(f"unknown marking {label!r} for {space}")
    if i == j:
        return DivisorSpec(space)
    raw = DivisorSpec(space, 0, {i: 1, j: -1})
    return modify_divisor(raw, zero_polarisation(space, 0))


def polarisation_to_json(phi: OneNodePolarisation) -> Dict[str, Any]:
    return {
        "d": phi.total_degree,
        "phi": [dict(bipartition_to_json(phi.space, bip), value=format_rational(value))
                for bip, value in phi.phi_s.items()],
    }


def polarisation_from_json(space: MarkedSpace, data: Mapping[str, Any]) -> OneNodePolarisation:
    """Parse {"d": int, "phi": [{"h", "S", "value"}]}; later duplicates are refused."""
    if "d" not in data:
        raise ValueError("phi document needs a total degree 'd'")
    values: Dict[Bipartition, Fraction] = {}
    for entry in data.get("phi", []) or []:
        bip = bipartition_from_json(space, entry)
        if bip in values:
            raise ValueError(f"phi given twice for {bip.label(space)}")
        if "value" not in entry:
            raise ValueError(f"phi entry for {bip.label(space)} has no value")
        values[bip] = as_rational(entry["value"])
    return OneNodePolarisation(space, data["d"], values)
