"""
Finite rational combinations of decorated strata generators.
"""

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from ..combin import MarkedSpace
from .graph import DecoratedGraph, canonicalize, fundamental_graph

Scalar = Union[int, Fraction]


def _check_graph(space: MarkedSpace, graph: DecoratedGraph) -> None:
    if graph.genus != space.g or graph.markings != frozenset(space.markings):
        raise ValueError(f"graph of genus {graph.genus} with markings "
                         f"{sorted(graph.markings)} does not live on {space}")


class TautClass:
    """
    Element of the free module on canonical generators over the rationals.

    Instances are treated as immutable values; zero coefficients are never stored.
    """

    __slots__ = ('space', '_terms')

    def __init__(self, space: MarkedSpace, terms: Optional[Mapping[DecoratedGraph, Scalar]] = None):
        self.space = space
        self._terms: Dict[DecoratedGraph, Fraction] = {}
        for graph, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                self._terms[graph] = coeff

    @classmethod
    def zero(cls, space: MarkedSpace) -> 'TautClass':
        return cls(space)

    @classmethod
    def unit(cls, space: MarkedSpace) -> 'TautClass':
        return cls.from_graph(space, fundamental_graph(space.g, space.markings))

    @classmethod
    def from_graph(cls, space: MarkedSpace, graph: Optional[DecoratedGraph],
                   coeff: Scalar = 1) -> 'TautClass':
        """Canonicalize graph and wrap it; None stands for a vanishing generator."""
        acc = ClassAccumulator(space)
        acc.add_graph(graph, coeff)
        return acc.result()

    @property
    def terms(self) -> Mapping[DecoratedGraph, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[DecoratedGraph, Fraction]]:
        """Terms in deterministic order: by codimension, then canonical graph."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].codimension, kv[0]))

    def coefficient(self, graph: DecoratedGraph) -> Fraction:
        canonical = canonicalize(graph)
        if canonical.graph is None:
            return Fraction(0)
        return self._terms.get(canonical.graph, Fraction(0))

    def codimensions(self) -> List[int]:
        return sorted({graph.codimension for graph in self._terms})

    def component(self, codim: int) -> 'TautClass':
        return TautClass(self.space, {g: c for g, c in self._terms.items()
                                      if g.codimension == codim})

    def graded(self) -> Dict[int, 'TautClass']:
        return {codim: self.component(codim) for codim in self.codimensions()}

    def is_homogeneous(self, codim: int) -> bool:
        return all(graph.codimension == codim for graph in self._terms)

    def _check_space(self, other: 'TautClass') -> None:
        if not isinstance(other, TautClass):
            raise TypeError(f"cannot combine TautClass with {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(f"classes live on different spaces: {self.space} vs {other.space}")

    def __add__(self, other: 'TautClass') -> 'TautClass':
        self._check_space(other)
        acc = ClassAccumulator(self.space)
        acc.add(self)
        acc.add(other)
        return acc.result()

    def __sub__(self, other: 'TautClass') -> 'TautClass':
        self._check_space(other)
        acc = ClassAccumulator(self.space)
        acc.add(self)
        acc.add(other, -1)
        return acc.result()

    def __neg__(self) -> 'TautClass':
        return TautClass(self.space, {g: -c for g, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> 'TautClass':
        if isinstance(scalar, TautClass):
            raise TypeError("use tautprod.gp_product to multiply two classes")
        scalar = Fraction(scalar)
        return TautClass(self.space, {g: c * scalar for g, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, TautClass):
            return NotImplemented
        return self.space == other.space and self._terms == other._terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[DecoratedGraph, Fraction]]:
        return iter(self.items())

    def __repr__(self) -> str:
        if not self._terms:
            return f"TautClass({self.space}, 0)"
        return f"TautClass({self.space}, {len(self._terms)} terms)"


class ClassAccumulator:
    """Mutable exact merge used while building a TautClass."""

    def __init__(self, space: MarkedSpace):
        self.space = space
        self._terms: Dict[DecoratedGraph, Fraction] = {}

    def add_graph(self, graph: Optional[DecoratedGraph], coeff: Scalar = 1) -> None:
        if graph is None or not coeff:
            return
        canonical = canonicalize(graph)
        if canonical.graph is None:
            return
        _check_graph(self.space, canonical.graph)
        value = self._terms.get(canonical.graph, Fraction(0)) + Fraction(coeff) * canonical.factor
        if value:
            self._terms[canonical.graph] = value
        else:
            self._terms.pop(canonical.graph, None)

    def add(self, cls: TautClass, scale: Scalar = 1) -> None:
        if cls.space != self.space:
            raise ValueError(f"classes live on different spaces: {self.space} vs {cls.space}")
        if not scale:
            return
        scale = Fraction(scale)
        for graph, coeff in cls.terms.items():
            value = self._terms.get(graph, Fraction(0)) + coeff * scale
            if value:
                self._terms[graph] = value
            else:
                self._terms.pop(graph, None)

    def result(self) -> TautClass:
        return TautClass(self.space, self._terms)


def sum_classes(space: MarkedSpace, classes: Iterable[TautClass]) -> TautClass:
    acc = ClassAccumulator(space)
    for cls in classes:
        acc.add(cls)
    return acc.result()
