"""
Products of decorated strata classes by excess intersection.

For generators A and B the product is the sum over graphs G carrying an
A-structure (edge subset E1 plus an identification of G/(E minus E1) with A) and
a B-structure (E2 likewise) with E1 union E2 = E(G):

    [A] [B] = 1/(|Aut A| |Aut B|) * sum_(G, E1, E2, isos) [G, theta_A theta_B excess]

theta_A is pulled back along the identification (psi stays on its half-edge
or leg, kappa_k on a vertex becomes the sum of kappa_k over the vertices above
it) and excess = prod over E1 & E2 of (-psi - psi') on both branches.
Structures are rigid, which is what makes the labelled count exact.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, NamedTuple, Tuple

from ..strata import ClassAccumulator, DecoratedGraph, TautClass, canonicalize
from .degenerations import contract, degenerations, isomorphisms, skeleton_form

LOGGER = logging.getLogger(__name__)

# (half-edge psi per edge, kappa indices per vertex) -> integer coefficient
DecorationKey = Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, ...], ...]]
Polynomial = Dict[DecorationKey, int]


class Structure(NamedTuple):
    """How a fine graph degenerates a generator."""
    kept: FrozenSet[int]
    vertex_map: Tuple[int, ...]                      # fine vertex -> generator vertex
    edge_map: Tuple[Tuple[int, int, bool], ...]      # (fine edge, generator edge, swapped)


@lru_cache(maxsize=None)
def _structures(fine: DecoratedGraph, generator: DecoratedGraph) -> Tuple[Structure, ...]:
    target = generator.skeleton()
    target_form = skeleton_form(generator)
    found = []
    for kept in itertools.combinations(range(fine.edge_count), generator.edge_count):
        coarse = contract(fine, kept)
        if skeleton_form(coarse.graph) != target_form:
            continue
        for iso in isomorphisms(coarse.graph, target):
            vertex_map = tuple(iso.vertex_map[coarse.vertex_map[v]]
                               for v in range(fine.vertex_count))
            edge_map = tuple((coarse.kept[ce], iso.edge_map[ce][0], iso.edge_map[ce][1])
                             for ce in range(generator.edge_count))
            found.append(Structure(frozenset(kept), vertex_map, edge_map))
    return tuple(found)


def _multiply(left: Polynomial, right: Polynomial) -> Polynomial:
    result: Polynomial = {}
    for (he_l, kap_l), c_l in left.items():
        for (he_r, kap_r), c_r in right.items():
            he = tuple((a[0] + b[0], a[1] + b[1]) for a, b in zip(he_l, he_r))
            kap = tuple(tuple(sorted(x + y)) for x, y in zip(kap_l, kap_r))
            key = (he, kap)
            value = result.get(key, 0) + c_l * c_r
            if value:
                result[key] = value
            else:
                result.pop(key, None)
    return result


def _pullback(generator: DecoratedGraph, fine: DecoratedGraph, structure: Structure) -> Polynomial:
    """Decoration of the generator transported to the fine graph."""
    he = [[0, 0] for _ in fine.edges]
    for fine_edge, gen_edge, swapped in structure.edge_map:
        near, far = generator.edges[gen_edge][0][1], generator.edges[gen_edge][1][1]
        if swapped:
            near, far = far, near
        he[fine_edge][0] += near
        he[fine_edge][1] += far
    empty = tuple(() for _ in fine.genera)
    poly: Polynomial = {(tuple(tuple(pair) for pair in he), empty): 1}
    zero_he = tuple((0, 0) for _ in fine.edges)
    for w, indices in enumerate(generator.kappa):
        above = [v for v in range(fine.vertex_count) if structure.vertex_map[v] == w]
        for k in indices:
            spread: Polynomial = {}
            for v in above:
                kap = tuple((k,) if u == v else () for u in range(fine.vertex_count))
                spread[(zero_he, kap)] = spread.get((zero_he, kap), 0) + 1
            poly = _multiply(poly, spread)
    return poly


def _excess(fine: DecoratedGraph, edge: int) -> Polynomial:
    empty = tuple(() for _ in fine.genera)
    near = tuple((1, 0) if e == edge else (0, 0) for e in range(fine.edge_count))
    far = tuple((0, 1) if e == edge else (0, 0) for e in range(fine.edge_count))
    return {(near, empty): -1, (far, empty): -1}


@lru_cache(maxsize=None)
def _generator_product(a: DecoratedGraph, b: DecoratedGraph) -> Tuple[Tuple[DecoratedGraph, Fraction], ...]:
    aut = canonicalize(a).aut_order * canonicalize(b).aut_order
    leg_psi = dict(a.leg_psi)
    for label, exponent in b.leg_psi:
        leg_psi[label] = leg_psi.get(label, 0) + exponent
    levels = degenerations(a.skeleton(), b.edge_count)
    terms: List[Tuple[DecoratedGraph, Fraction]] = []
    for extra in range(max(0, b.edge_count - a.edge_count), b.edge_count + 1):
        for fine in sorted(levels[extra]):
            from_a = _structures(fine, a)
            if not from_a:
                continue
            from_b = _structures(fine, b)
            if not from_b:
                continue
            every_edge = frozenset(range(fine.edge_count))
            for s_a in from_a:
                pulled_a = _pullback(a, fine, s_a)
                for s_b in from_b:
                    if s_a.kept | s_b.kept != every_edge:
                        continue
                    poly = _multiply(pulled_a, _pullback(b, fine, s_b))
                    for edge in sorted(s_a.kept & s_b.kept):
                        poly = _multiply(poly, _excess(fine, edge))
                    for (he, kap), coeff in poly.items():
                        edges = tuple(((u[0], p[0]), (v[0], p[1]))
                                      for (u, v), p in zip(fine.edges, he))
                        graph = DecoratedGraph(fine.genera, fine.legs, edges,
                                               tuple(leg_psi.items()), kap)
                        terms.append((graph, Fraction(coeff, aut)))
    return tuple(terms)


def gp_product(x: TautClass, y: TautClass) -> TautClass:
    """
    Product of two classes over the same space.

    Args:
        x: First factor
        y: Second factor

    Returns:
        x * y, with terms beyond the dimension dropped
    """
    if not isinstance(x, TautClass) or not isinstance(y, TautClass):
        raise TypeError("gp_product multiplies TautClass values")
    if x.space != y.space:
        raise ValueError(f"classes live on different spaces: {x.space} vs {y.space}")
    space = x.space
    acc = ClassAccumulator(space)
    for ga, ca in x.terms.items():
        for gb, cb in y.terms.items():
            if ga.codimension + gb.codimension > space.dim:
                continue
            if ga.is_fundamental():
                acc.add_graph(gb, ca * cb)
                continue
            if gb.is_fundamental():
                acc.add_graph(ga, ca * cb)
                continue
            for graph, coeff in _generator_product(ga, gb):
                acc.add_graph(graph, ca * cb * coeff)
    return acc.result()
