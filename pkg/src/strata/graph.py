"""
Decorated stable graphs and their canonical form.

A graph carries a genus and a set of marking legs per vertex, edges made of two
half-edges (each with a psi exponent), psi exponents on legs and a multiset of
kappa indices per vertex. The class it names is (1/|Aut G|) xi_G*(decoration).
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

LOGGER = logging.getLogger(__name__)

HalfEdge = Tuple[int, int]          # (vertex, psi exponent)
Edge = Tuple[HalfEdge, HalfEdge]


@dataclass(frozen=True, order=True)
class DecoratedGraph:
    """A stable graph with psi and kappa decorations."""
    genera: Tuple[int, ...]
    legs: Tuple[Tuple[str, ...], ...]
    edges: Tuple[Edge, ...] = ()
    leg_psi: Tuple[Tuple[str, int], ...] = ()
    kappa: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'genera', tuple(int(g) for g in self.genera))
        object.__setattr__(self, 'legs', tuple(tuple(sorted(str(p) for p in legs))
                                               for legs in self.legs))
        object.__setattr__(self, 'edges', tuple(
            ((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))) for a, b in self.edges))
        object.__setattr__(self, 'leg_psi', tuple(sorted(
            (str(p), int(e)) for p, e in self.leg_psi)))
        kappa = self.kappa or tuple(() for _ in self.genera)
        object.__setattr__(self, 'kappa', tuple(tuple(sorted(int(k) for k in ks))
                                                for ks in kappa))

    @property
    def vertex_count(self) -> int:
        return len(self.genera)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def genus(self) -> int:
        """Vertex genera plus the first Betti number."""
        return sum(self.genera) + self.edge_count - self.vertex_count + 1

    @property
    def markings(self) -> frozenset:
        return frozenset(p for legs in self.legs for p in legs)

    @property
    def codimension(self) -> int:
        return (self.edge_count
                + sum(a[1] + b[1] for a, b in self.edges)
                + sum(e for _, e in self.leg_psi)
                + sum(sum(ks) for ks in self.kappa))

    def leg_psi_map(self) -> Dict[str, int]:
        return dict(self.leg_psi)

    def half_edge_count(self, v: int) -> int:
        return sum((a[0] == v) + (b[0] == v) for a, b in self.edges)

    def valence(self, v: int) -> int:
        """Legs plus incident half-edges at v."""
        return len(self.legs[v]) + self.half_edge_count(v)

    def vertex_dim(self, v: int) -> int:
        return 3 * self.genera[v] - 3 + self.valence(v)

    def vertex_degree(self, v: int) -> int:
        """Degree of the decoration monomial sitting on vertex v."""
        psi = self.leg_psi_map()
        degree = sum(psi.get(p, 0) for p in self.legs[v]) + sum(self.kappa[v])
        for a, b in self.edges:
            degree += a[1] * (a[0] == v) + b[1] * (b[0] == v)
        return degree

    def loops(self) -> List[int]:
        return [idx for idx, (a, b) in enumerate(self.edges) if a[0] == b[0]]

    def skeleton(self) -> 'DecoratedGraph':
        """The same graph with every decoration removed."""
        return DecoratedGraph(self.genera, self.legs,
                              tuple(((a[0], 0), (b[0], 0)) for a, b in self.edges))

    def is_fundamental(self) -> bool:
        return self.vertex_count == 1 and self.codimension == 0

    def with_leg_psi(self, label: str, exponent: int) -> 'DecoratedGraph':
        """Add exponent to the psi power on leg label."""
        psi = self.leg_psi_map()
        psi[label] = psi.get(label, 0) + exponent
        return DecoratedGraph(self.genera, self.legs, self.edges,
                              tuple(psi.items()), self.kappa)


class Canonical(NamedTuple):
    """
    Result of canonicalize.

    graph is None for the zero marker; factor is the scalar picked up from
    kappa_0 elimination (0 for the zero marker).
    """
    graph: Optional[DecoratedGraph]
    aut_order: int
    factor: int


def check_structure(graph: DecoratedGraph) -> None:
    """Raise ValueError if graph is malformed, disconnected or unstable."""
    count = graph.vertex_count
    if count == 0:
        raise ValueError("graph has no vertices")
    if len(graph.legs) != count or len(graph.kappa) != count:
        raise ValueError("per-vertex data lengths disagree")
    if any(g < 0 for g in graph.genera):
        raise ValueError(f"negative vertex genus in {graph.genera}")
    seen = Counter(p for legs in graph.legs for p in legs)
    repeated = [p for p, n in seen.items() if n > 1]
    if repeated:
        raise ValueError(f"markings on several legs: {repeated}")
    for label, exponent in graph.leg_psi:
        if label not in seen:
            raise ValueError(f"psi decoration on unknown leg {label!r}")
        if exponent < 0:
            raise ValueError(f"negative psi exponent on leg {label!r}")
    for a, b in graph.edges:
        for vertex, exponent in (a, b):
            if not 0 <= vertex < count:
                raise ValueError(f"edge endpoint {vertex} out of range")
            if exponent < 0:
                raise ValueError("negative psi exponent on a half-edge")
    if any(k < 0 for ks in graph.kappa for k in ks):
        raise ValueError("negative kappa index")

    parent = list(range(count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in graph.edges:
        parent[find(a[0])] = find(b[0])
    if len({find(v) for v in range(count)}) != 1:
        raise ValueError("graph is disconnected")
    for v in range(count):
        if 2 * graph.genera[v] - 2 + graph.valence(v) <= 0:
            raise ValueError(f"vertex {v} (genus {graph.genera[v]}, valence "
                             f"{graph.valence(v)}) is unstable")


def _vertex_keys(graph: DecoratedGraph, decorated: bool) -> List[tuple]:
    psi = graph.leg_psi_map() if decorated else {}
    keys = []
    for v in range(graph.vertex_count):
        legs = tuple((p, psi.get(p, 0)) for p in graph.legs[v])
        half = []
        loops = 0
        for a, b in graph.edges:
            if a[0] == v:
                half.append(a[1] if decorated else 0)
            if b[0] == v:
                half.append(b[1] if decorated else 0)
            loops += a[0] == v and b[0] == v
        kappa = graph.kappa[v] if decorated else ()
        keys.append((graph.genera[v], legs, kappa, len(half), tuple(sorted(half)), loops))
    return keys


def _orderings(keys: Sequence[tuple]) -> Iterator[List[int]]:
    """Vertex orderings that sort by key, permuting freely inside ties."""
    order = sorted(range(len(keys)), key=lambda v: keys[v])
    blocks = [list(group) for _, group in itertools.groupby(order, key=lambda v: keys[v])]
    for combo in itertools.product(*(itertools.permutations(block) for block in blocks)):
        yield [v for block in combo for v in block]


def _encode_edges(graph: DecoratedGraph, order: Sequence[int], decorated: bool) -> Tuple[Edge, ...]:
    position = {v: i for i, v in enumerate(order)}
    encoded = []
    for a, b in graph.edges:
        ha = (position[a[0]], a[1] if decorated else 0)
        hb = (position[b[0]], b[1] if decorated else 0)
        encoded.append((ha, hb) if ha <= hb else (hb, ha))
    return tuple(sorted(encoded))


def automorphism_count(graph: DecoratedGraph) -> int:
    """|Aut| of the undecorated stable graph (legs are fixed pointwise)."""
    keys = _vertex_keys(graph, decorated=False)
    reference = None
    vertex_autos = 0
    for order in _orderings(keys):
        encoded = _encode_edges(graph, order, decorated=False)
        if reference is None:
            reference = encoded
        vertex_autos += encoded == reference
    multiplicity = Counter(tuple(sorted((a[0], b[0]))) for a, b in graph.edges)
    edge_autos = 1
    for (u, v), m in multiplicity.items():
        edge_autos *= factorial(m)
        if u == v:
            edge_autos *= 2 ** m
    return vertex_autos * edge_autos


@lru_cache(maxsize=None)
def canonicalize(graph: DecoratedGraph) -> Canonical:
    """
    Canonical representative of the isomorphism class of a decorated graph.

    kappa_0 at a vertex becomes the scalar 2g_v - 2 + valence(v); generators
    beyond the dimension, or whose decoration exceeds a vertex's dimension,
    become the zero marker.

    Args:
        graph: A structurally valid decorated graph

    Returns:
        Canonical(graph, aut_order, factor)
    """
    check_structure(graph)
    factor = 1
    kappa = []
    for v, ks in enumerate(graph.kappa):
        zeros = ks.count(0)
        if zeros:
            factor *= (2 * graph.genera[v] - 2 + graph.valence(v)) ** zeros
        kappa.append(tuple(k for k in ks if k > 0))
    reduced = DecoratedGraph(graph.genera, graph.legs, graph.edges,
                             tuple((p, e) for p, e in graph.leg_psi if e > 0), tuple(kappa))

    dim = 3 * reduced.genus - 3 + len(reduced.markings)
    if reduced.codimension > dim:
        return Canonical(None, 1, 0)
    if any(reduced.vertex_degree(v) > reduced.vertex_dim(v)
           for v in range(reduced.vertex_count)):
        return Canonical(None, 1, 0)

    keys = _vertex_keys(reduced, decorated=True)
    best_order, best_edges = None, None
    for order in _orderings(keys):
        encoded = _encode_edges(reduced, order, decorated=True)
        if best_edges is None or encoded < best_edges:
            best_order, best_edges = order, encoded
    canonical = DecoratedGraph(
        genera=tuple(reduced.genera[v] for v in best_order),
        legs=tuple(reduced.legs[v] for v in best_order),
        edges=best_edges,
        leg_psi=reduced.leg_psi,
        kappa=tuple(reduced.kappa[v] for v in best_order),
    )
    return Canonical(canonical, automorphism_count(canonical), factor)


def fundamental_graph(genus: int, markings: Sequence[str]) -> DecoratedGraph:
    return DecoratedGraph((genus,), (tuple(markings),))
