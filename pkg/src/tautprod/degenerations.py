"""
Undecorated stable-graph operations: one-edge degenerations, edge
contraction and isomorphism enumeration.

Graphs are DecoratedGraph skeletons (all decorations zero). A half-edge is
addressed as (edge index, side) with side 0 or 1.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Sequence, Set, Tuple

from ..strata import DecoratedGraph, canonicalize

LOGGER = logging.getLogger(__name__)


class Contraction(NamedTuple):
    """Result of contracting every edge outside kept."""
    graph: DecoratedGraph
    vertex_map: Tuple[int, ...]     # fine vertex -> coarse vertex
    kept: Tuple[int, ...]           # coarse edge index -> fine edge index


class Isomorphism(NamedTuple):
    vertex_map: Tuple[int, ...]                 # source vertex -> target vertex
    edge_map: Tuple[Tuple[int, bool], ...]      # source edge -> (target edge, sides swapped)


def skeleton_form(graph: DecoratedGraph) -> DecoratedGraph:
    """Canonical undecorated representative."""
    return canonicalize(graph.skeleton()).graph


def _ends(graph: DecoratedGraph) -> List[Tuple[int, int]]:
    return [(a[0], b[0]) for a, b in graph.edges]


def _build(genera: Sequence[int], legs: Sequence[Sequence[str]],
           ends: Sequence[Tuple[int, int]]) -> DecoratedGraph:
    return DecoratedGraph(tuple(genera), tuple(tuple(l) for l in legs),
                          tuple(((u, 0), (v, 0)) for u, v in ends))


def one_edge_degenerations(graph: DecoratedGraph) -> Iterator[DecoratedGraph]:
    """Every stable graph obtained by inserting one edge at one vertex."""
    genera = list(graph.genera)
    legs = [list(l) for l in graph.legs]
    ends = _ends(graph)
    for v in range(graph.vertex_count):
        if genera[v] >= 1:
            new_genera = genera[:]
            new_genera[v] -= 1
            yield _build(new_genera, legs, ends + [(v, v)])

        slots = [(e, side) for e, pair in enumerate(ends) for side in (0, 1) if pair[side] == v]
        items = [('leg', p) for p in legs[v]] + [('half', s) for s in slots]
        w = graph.vertex_count
        for genus_w in range(genera[v] + 1):
            for size in range(len(items) + 1):
                for moved in itertools.combinations(range(len(items)), size):
                    moved_set = set(moved)
                    stay = len(items) - size
                    if 2 * (genera[v] - genus_w) - 2 + stay + 1 <= 0:
                        continue
                    if 2 * genus_w - 2 + size + 1 <= 0:
                        continue
                    new_legs = [l[:] for l in legs] + [[]]
                    new_legs[v] = []
                    new_ends = [list(pair) for pair in ends]
                    for index, (kind, value) in enumerate(items):
                        target = w if index in moved_set else v
                        if kind == 'leg':
                            new_legs[target].append(value)
                        else:
                            edge, side = value
                            new_ends[edge][side] = target
                    new_genera = genera[:] + [genus_w]
                    new_genera[v] = genera[v] - genus_w
                    yield _build(new_genera, new_legs,
                                 [tuple(pair) for pair in new_ends] + [(v, w)])


@lru_cache(maxsize=None)
def degenerations(graph: DecoratedGraph, extra_edges: int) -> Tuple[FrozenSet[DecoratedGraph], ...]:
    """
    Canonical skeletons obtained by inserting 0..extra_edges edges.

    Returns:
        Tuple indexed by the number of inserted edges
    """
    level: Set[DecoratedGraph] = {skeleton_form(graph)}
    levels = [frozenset(level)]
    for _ in range(extra_edges):
        grown: Set[DecoratedGraph] = set()
        for base in level:
            for candidate in one_edge_degenerations(base):
                grown.add(skeleton_form(candidate))
        level = grown
        levels.append(frozenset(level))
    LOGGER.debug("degenerations: level sizes %s", [len(l) for l in levels])
    return tuple(levels)


def contract(graph: DecoratedGraph, kept: Sequence[int]) -> Contraction:
    """Contract every edge whose index is not in kept."""
    kept_set = set(kept)
    ends = _ends(graph)
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    contracted_at: Dict[int, int] = {}
    for e, (u, v) in enumerate(ends):
        if e in kept_set:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    roots = sorted({find(v) for v in range(graph.vertex_count)})
    index = {root: i for i, root in enumerate(roots)}
    vertex_map = tuple(index[find(v)] for v in range(graph.vertex_count))

    genera = [0] * len(roots)
    legs: List[List[str]] = [[] for _ in roots]
    members = [0] * len(roots)
    for v in range(graph.vertex_count):
        genera[vertex_map[v]] += graph.genera[v]
        legs[vertex_map[v]] += graph.legs[v]
        members[vertex_map[v]] += 1
    for e, (u, _) in enumerate(ends):
        if e not in kept_set:
            contracted_at[vertex_map[u]] = contracted_at.get(vertex_map[u], 0) + 1
    for coarse in range(len(roots)):
        genera[coarse] += contracted_at.get(coarse, 0) - (members[coarse] - 1)

    kept_order = tuple(e for e in range(len(ends)) if e in kept_set)
    coarse_ends = [(vertex_map[ends[e][0]], vertex_map[ends[e][1]]) for e in kept_order]
    return Contraction(_build(genera, legs, coarse_ends), vertex_map, kept_order)


def _vertex_key(graph: DecoratedGraph, v: int) -> tuple:
    loops = sum(1 for a, b in graph.edges if a[0] == v and b[0] == v)
    return graph.genera[v], graph.legs[v], graph.half_edge_count(v), loops


def isomorphisms(source: DecoratedGraph, target: DecoratedGraph) -> Iterator[Isomorphism]:
    """All isomorphisms of undecorated graphs; legs are matched by label."""
    if (source.vertex_count != target.vertex_count
            or source.edge_count != target.edge_count):
        return
    count = source.vertex_count
    source_keys = [_vertex_key(source, v) for v in range(count)]
    target_keys = [_vertex_key(target, v) for v in range(count)]
    candidates = [[w for w in range(count) if target_keys[w] == source_keys[v]]
                  for v in range(count)]

    source_groups: Dict[Tuple[int, int], List[int]] = {}
    for e, (a, b) in enumerate(source.edges):
        source_groups.setdefault(tuple(sorted((a[0], b[0]))), []).append(e)
    target_groups: Dict[Tuple[int, int], List[int]] = {}
    for e, (a, b) in enumerate(target.edges):
        target_groups.setdefault(tuple(sorted((a[0], b[0]))), []).append(e)

    def vertex_maps(v: int, used: List[bool], current: List[int]) -> Iterator[List[int]]:
        if v == count:
            yield current[:]
            return
        for w in candidates[v]:
            if not used[w]:
                used[w] = True
                current.append(w)
                yield from vertex_maps(v + 1, used, current)
                current.pop()
                used[w] = False

    for vmap in vertex_maps(0, [False] * count, []):
        choices = []
        consistent = True
        for pair, edges in source_groups.items():
            image = tuple(sorted((vmap[pair[0]], vmap[pair[1]])))
            images = target_groups.get(image, [])
            if len(images) != len(edges):
                consistent = False
                break
            options = []
            for perm in itertools.permutations(images):
                if pair[0] == pair[1]:
                    for flips in itertools.product((False, True), repeat=len(edges)):
                        options.append(tuple(zip(edges, perm, flips)))
                else:
                    assignment = []
                    for e, f in zip(edges, perm):
                        swapped = vmap[source.edges[e][0][0]] != target.edges[f][0][0]
                        assignment.append((e, f, swapped))
                    options.append(tuple(assignment))
            choices.append(options)
        if not consistent:
            continue
        for combo in itertools.product(*choices):
            edge_map: List[Tuple[int, bool]] = [(-1, False)] * source.edge_count
            for assignment in combo:
                for e, f, swapped in assignment:
                    edge_map[e] = (f, swapped)
            yield Isomorphism(tuple(vmap), tuple(edge_map))
