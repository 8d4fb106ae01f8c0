"""
Monomials in K, sigma_p, C_(h,S) and the node classes on the universal curve.

Relations applied syntactically:
    sigma_p sigma_q = 0 (p != q),  K sigma_p = 0,  sigma_p C_(h,S) = 0 (p in S),
    C_(h1,S1) C_(h2,S2) = 0 for incomparable bipartitions,
    C_(h,S)^2 = C_(h,S) (-psi_near - psi_far)  (excess on the node).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Tuple

from ..combin import Bipartition, MarkedSpace, bipartition_leq, bipartition_lt

FormalSum = Dict['UMonomial', Fraction]


class CEdge(NamedTuple):
    """One chain entry with the psi pair on its node (anchor side, far side)."""
    bipartition: Bipartition
    i: int
    j: int


@dataclass(frozen=True)
class NodeClass:
    """
    Node class A_(l,T)^(i,j) (kind "A", separating) or B^(i,j) (kind "B",
    non-separating), of codimension 2 + i + j.
    """
    kind: str
    i: int
    j: int
    bipartition: Optional[Bipartition] = None

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"node class kind must be 'A' or 'B', got {self.kind!r}")
        if (self.kind == "A") != (self.bipartition is not None):
            raise ValueError("A node classes carry a bipartition, B node classes do not")
        if self.i < 0 or self.j < 0:
            raise ValueError(f"node exponents must be nonnegative: {(self.i, self.j)}")

    @property
    def degree(self) -> int:
        return 2 + self.i + self.j

    def label(self, space: Optional[MarkedSpace] = None) -> str:
        if self.kind == "A":
            return f"A_{self.bipartition.label(space)}^({self.i},{self.j})"
        return f"B^({self.i},{self.j})"


@dataclass(frozen=True)
class Factor:
    """Elementary divisor class: K, sigma_p or C_(h,S)."""
    kind: str
    marking: Optional[str] = None
    bipartition: Optional[Bipartition] = None

    @classmethod
    def K(cls) -> 'Factor':
        return cls("K")

    @classmethod
    def sigma(cls, p: str) -> 'Factor':
        return cls("sigma", marking=p)

    @classmethod
    def C(cls, bip: Bipartition) -> 'Factor':
        return cls("C", bipartition=bip)


@dataclass(frozen=True)
class UMonomial:
    k_exp: int = 0
    sigma: Optional[Tuple[str, int]] = None
    c_part: Tuple[CEdge, ...] = ()
    node: Optional[NodeClass] = None

    def __post_init__(self):
        if self.k_exp < 0:
            raise ValueError("K exponent must be nonnegative")
        if self.k_exp and self.sigma:
            raise ValueError("K * sigma vanishes and cannot be stored")
        if self.sigma is not None:
            label, power = self.sigma
            if power < 1:
                raise ValueError("sigma power must be positive")
            if self.c_part and label in self.c_part[-1].bipartition.S:
                raise ValueError(f"sigma_{label} vanishes against the chain")
        if self.node is not None and (self.k_exp or self.sigma):
            raise ValueError("node classes meet K and sigma trivially")
        chain = self.chain
        if any(not bipartition_lt(x, y) for x, y in zip(chain, chain[1:])):
            raise ValueError("C part must be a strictly increasing chain")

    @property
    def chain(self) -> Tuple[Bipartition, ...]:
        return tuple(edge.bipartition for edge in self.c_part)

    @property
    def degree(self) -> int:
        """Codimension on the universal curve."""
        degree = self.k_exp + (self.sigma[1] if self.sigma else 0)
        degree += sum(1 + edge.i + edge.j for edge in self.c_part)
        if self.node is not None:
            degree += self.node.degree
        return degree

    def is_pure_chain(self) -> bool:
        return not self.k_exp and self.sigma is None and self.node is None

    def label(self, space: Optional[MarkedSpace] = None) -> str:
        parts = []
        if self.k_exp:
            parts.append(f"K^{self.k_exp}")
        if self.sigma:
            parts.append(f"σ_{self.sigma[0]}^{self.sigma[1]}")
        if self.c_part:
            upper = "".join(f"({e.i},{e.j})" for e in self.c_part)
            lower = "".join(e.bipartition.label(space) for e in self.c_part)
            parts.append(f"C^{{{upper}}}_{{{lower}}}")
        if self.node:
            parts.append(self.node.label(space))
        return "·".join(parts) or "1"


ONE = UMonomial()


def mul_umonomial(m: UMonomial, f: Factor) -> FormalSum:
    """
    Multiply a monomial by an elementary factor.

    Returns:
        Formal sum {monomial: coefficient}; empty when the product vanishes
    """
    if f.kind == "sigma":
        p = f.marking
        if p is None:
            raise ValueError("sigma factor needs a marking")
        if m.node is not None or m.k_exp:
            return {}
        if m.sigma is not None and m.sigma[0] != p:
            return {}
        if any(p in edge.bipartition.S for edge in m.c_part):
            return {}
        power = m.sigma[1] + 1 if m.sigma else 1
        return {UMonomial(0, (p, power), m.c_part): Fraction(1)}
    if f.kind == "K":
        if m.node is not None or m.sigma is not None:
            return {}
        return {UMonomial(m.k_exp + 1, None, m.c_part): Fraction(1)}
    if f.kind == "C":
        bip = f.bipartition
        if bip is None:
            raise ValueError("C factor needs a bipartition")
        if m.sigma is not None and m.sigma[0] in bip.S:
            return {}
        edges = list(m.c_part)
        for index, edge in enumerate(edges):
            if edge.bipartition == bip:
                raised_near = edges[:index] + [CEdge(bip, edge.i + 1, edge.j)] + edges[index + 1:]
                raised_far = edges[:index] + [CEdge(bip, edge.i, edge.j + 1)] + edges[index + 1:]
                return {
                    UMonomial(m.k_exp, m.sigma, tuple(raised_near), m.node): Fraction(-1),
                    UMonomial(m.k_exp, m.sigma, tuple(raised_far), m.node): Fraction(-1),
                }
            if not (bipartition_leq(edge.bipartition, bip) or bipartition_leq(bip, edge.bipartition)):
                return {}
        position = sum(1 for edge in edges if bipartition_lt(edge.bipartition, bip))
        edges.insert(position, CEdge(bip, 0, 0))
        return {UMonomial(m.k_exp, m.sigma, tuple(edges), m.node): Fraction(1)}
    raise ValueError(f"unknown factor kind {f.kind!r}")


def add_into(total: FormalSum, terms: Mapping[UMonomial, Fraction], scale=1) -> None:
    """Exact in-place merge of scale * terms into total."""
    for monomial, coeff in terms.items():
        value = total.get(monomial, Fraction(0)) + coeff * scale
        if value:
            total[monomial] = value
        else:
            total.pop(monomial, None)


def mul_sum_by_factors(terms: Mapping[UMonomial, Fraction],
                       factors: Iterable[Tuple[Factor, Fraction]],
                       max_degree: Optional[int] = None) -> FormalSum:
    """Multiply a formal sum by a linear combination of elementary factors."""
    factors = list(factors)
    result: FormalSum = {}
    for monomial, coeff in terms.items():
        if max_degree is not None and monomial.degree + 1 > max_degree:
            continue
        for factor, weight in factors:
            if weight:
                add_into(result, mul_umonomial(monomial, factor), coeff * weight)
    return result
