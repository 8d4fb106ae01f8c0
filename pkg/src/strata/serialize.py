"""
JSON and text forms of generators and classes.
"""

from collections import Counter
from typing import Any, Dict, List, Optional, Tuple

from ..arith import format_rational
from ..combin import ANCHOR, MarkedSpace
from .graph import DecoratedGraph, canonicalize
from .taut_class import TautClass


def graph_to_json(space: MarkedSpace, graph: DecoratedGraph) -> Dict[str, Any]:
    order = space.marking_index
    return {
        "vertices": [{"g": g, "legs": sorted(legs, key=order), "kappa": list(kappa)}
                     for g, legs, kappa in zip(graph.genera, graph.legs, graph.kappa)],
        "edges": [[{"v": a[0], "psi": a[1]}, {"v": b[0], "psi": b[1]}] for a, b in graph.edges],
        "legPsi": {p: e for p, e in sorted(graph.leg_psi, key=lambda item: order(item[0]))},
    }


def graph_from_json(data: Dict[str, Any]) -> DecoratedGraph:
    try:
        vertices = data["vertices"]
        genera = tuple(int(v["g"]) for v in vertices)
        legs = tuple(tuple(v.get("legs", ())) for v in vertices)
        kappa = tuple(tuple(v.get("kappa", ())) for v in vertices)
        edges = tuple(((e[0]["v"], e[0]["psi"]), (e[1]["v"], e[1]["psi"]))
                      for e in data.get("edges", ()))
        leg_psi = tuple(data.get("legPsi", {}).items())
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    return DecoratedGraph(genera, legs, edges, leg_psi, kappa)


def class_to_json(cls: TautClass) -> List[Dict[str, Any]]:
    terms = []
    for graph, coeff in cls.items():
        terms.append({
            "graph": graph_to_json(cls.space, graph),
            "autOrder": canonicalize(graph).aut_order,
            "coeff": format_rational(coeff),
            "text": describe_graph(cls.space, graph),
        })
    return terms


def _power(symbol: str, exponent: int) -> str:
    return symbol if exponent == 1 else f"{symbol}^{exponent}"


def _monomial(space: MarkedSpace, graph: DecoratedGraph) -> str:
    parts = [_power(f"κ_{k}", n) for k, n in sorted(Counter(graph.kappa[0]).items())]
    parts += [_power(f"ψ_{p}", e) for p, e in sorted(graph.leg_psi,
                                                     key=lambda item: space.marking_index(item[0]))]
    return "·".join(parts) or "1"


def _walk_chain(graph: DecoratedGraph) -> Optional[Tuple[List[int], List[Tuple[int, int]]]]:
    """Vertices and oriented edge exponents of a path starting at the anchor vertex."""
    start = next(v for v, legs in enumerate(graph.legs) if ANCHOR in legs)
    straight = [(a, b) for a, b in graph.edges if a[0] != b[0]]
    if len(straight) != graph.vertex_count - 1:
        return None
    path, pairs, used = [start], [], set()
    while len(path) < graph.vertex_count:
        here = path[-1]
        step = [(idx, a, b) for idx, (a, b) in enumerate(straight)
                if idx not in used and here in (a[0], b[0])]
        if len(step) != 1:
            return None
        idx, a, b = step[0]
        used.add(idx)
        near, far = (a, b) if a[0] == here else (b, a)
        if far[0] in path:
            return None
        path.append(far[0])
        pairs.append((near[1], far[1]))
    return path, pairs


def describe_graph(space: MarkedSpace, graph: DecoratedGraph) -> str:
    """
    Bracket notation X^{(i,j),...}_{(h..),(S..)} for chain-shaped generators,
    with Z (terminal kappa) and Y (terminal loop) variants; generic otherwise.
    """
    if graph.vertex_count == 1 and not graph.edges:
        return _monomial(space, graph)
    walked = _walk_chain(graph)
    loops = graph.loops()
    if walked is not None and len(loops) <= 1:
        path, pairs = walked
        last = path[-1]
        loop_ok = not loops or graph.edges[loops[0]][0][0] == last
        kappa_ok = all(not graph.kappa[v] for v in path[:-1]) and len(graph.kappa[last]) <= 1
        if loop_ok and kappa_ok:
            return _bracket(space, graph, path, pairs, loops)
    return _generic(space, graph)


def _bracket(space, graph, path, pairs, loops) -> str:
    heights, subsets = [], []
    h, seen = 0, []
    for v in path[:-1]:
        h += graph.genera[v]
        seen += graph.legs[v]
        heights.append(str(h))
        subsets.append("{" + ",".join(sorted(seen, key=space.marking_index)) + "}")
    upper = [f"({i},{j})" for i, j in pairs]
    kappa = graph.kappa[path[-1]]
    if loops:
        a, b = graph.edges[loops[0]]
        name = "Y"
        upper.append(f"({a[1]},{b[1]})")
        if not pairs and (a[1], b[1]) == (0, 0):
            name = "δ_irr"
            upper = []
    elif kappa:
        name = "Z"
        upper.append(str(kappa[0]))
    else:
        name = "X"
    text = name
    if upper:
        text += "^{" + ",".join(upper) + "}"
    if heights:
        text += "_{(" + ",".join(heights) + "),(" + ",".join(subsets) + ")}"
    if loops and kappa:
        text = f"κ_{kappa[0]}·" + text
    psi = [_power(f"ψ_{p}", e) for p, e in sorted(graph.leg_psi,
                                                 key=lambda item: space.marking_index(item[0]))]
    return "·".join(psi + [text])


def _generic(space: MarkedSpace, graph: DecoratedGraph) -> str:
    vertices = []
    for v, (g, legs, kappa) in enumerate(zip(graph.genera, graph.legs, graph.kappa)):
        label = f"v{v}(g={g};{','.join(sorted(legs, key=space.marking_index))}"
        if kappa:
            label += ";" + "·".join(f"κ_{k}" for k in kappa)
        vertices.append(label + ")")
    edges = [f"v{a[0]}-v{b[0]}({a[1]},{b[1]})" for a, b in graph.edges]
    text = "Γ[" + " ".join(vertices) + " | " + " ".join(edges) + "]"
    psi = [_power(f"ψ_{p}", e) for p, e in sorted(graph.leg_psi,
                                                 key=lambda item: space.marking_index(item[0]))]
    return "·".join(psi + [text])


def describe_class(cls: TautClass) -> str:
    if not cls:
        return "0"
    return " + ".join(f"{format_rational(coeff)}·{describe_graph(cls.space, graph)}"
                      for graph, coeff in cls.items())
