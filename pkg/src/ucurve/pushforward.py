"""
Pushforward of universal-curve monomials to the moduli space.

Each rule acts on a single monomial with fixed exponents:
    chain, far exponent j_r        -> X with j_r - 1 (string equation; 0 if j_r = 0)
    sigma_p^b * chain (p not in S_r) -> (-1)^(b-1) psi_p^(b-1) X
    K^b * chain, b >= 1            -> X with kappa_(b-1) on the last vertex
    1                              -> 0
"""

from ..combin import MarkedSpace, bipartition_lt
from ..strata import TautClass, chain_graph
from .monomial import NodeClass, UMonomial


def push_forward(space: MarkedSpace, m: UMonomial) -> TautClass:
    """
    Push a node-free monomial forward along the forgetful map.

    Returns:
        A class of codimension m.degree - 1 (or zero)
    """
    if m.node is not None:
        raise ValueError("node-class monomials go through push_forward_node")
    chain = m.chain
    pairs = [(edge.i, edge.j) for edge in m.c_part]
    if m.k_exp:
        return TautClass.from_graph(space, chain_graph(space, chain, pairs, last_kappa=m.k_exp - 1))
    if m.sigma is not None:
        label, power = m.sigma
        if chain and label in chain[-1].S:
            return TautClass.zero(space)
        graph = chain_graph(space, chain, pairs, leg_psi=(label, power - 1))
        return TautClass.from_graph(space, graph, (-1) ** (power - 1))
    if not chain or pairs[-1][1] == 0:
        return TautClass.zero(space)
    near, far = pairs[-1]
    pairs[-1] = (near, far - 1)
    return TautClass.from_graph(space, chain_graph(space, chain, pairs))


def push_forward_node(space: MarkedSpace, node: NodeClass, m: UMonomial) -> TautClass:
    """
    Push forward node * (chain monomial).

    A_(l,T)^(i',j') past the last entry appends an edge (i',j'); on the last
    entry with far exponent 0 it merges into (i_r + i' + 1, j') with a minus
    sign; every other A case vanishes. B^(i',j') adds a loop (i',j') on the
    last vertex.
    """
    if not isinstance(node, NodeClass):
        raise ValueError(f"expected a node class, got {node!r}")
    if not m.is_pure_chain():
        raise ValueError(f"push_forward_node needs a pure chain monomial, got {m.label(space)}")
    chain = m.chain
    pairs = [(edge.i, edge.j) for edge in m.c_part]
    if node.kind == "B":
        return TautClass.from_graph(space, chain_graph(space, chain, pairs, loop=(node.i, node.j)))
    extra = node.bipartition
    if not chain or bipartition_lt(chain[-1], extra):
        graph = chain_graph(space, chain + (extra,), pairs + [(node.i, node.j)])
        return TautClass.from_graph(space, graph)
    if chain[-1] == extra and pairs[-1][1] == 0:
        pairs[-1] = (pairs[-1][0] + node.i + 1, node.j)
        return TautClass.from_graph(space, chain_graph(space, chain, pairs), -1)
    return TautClass.zero(space)
