from .graph import DecoratedGraph, Canonical, canonicalize, check_structure, automorphism_count, fundamental_graph
from .taut_class import TautClass, ClassAccumulator, sum_classes
from .bold import (chain_graph, signed_binomial_terms, bold_X, bold_Z, bold_Ytilde,
                   bold_Xtilde, attach_leg_psi)
from .serialize import graph_to_json, graph_from_json, class_to_json, describe_graph, describe_class

__all__ = ['DecoratedGraph', 'Canonical', 'canonicalize', 'check_structure',
           'automorphism_count', 'fundamental_graph', 'TautClass', 'ClassAccumulator',
           'sum_classes', 'chain_graph', 'signed_binomial_terms', 'bold_X', 'bold_Z',
           'bold_Ytilde', 'bold_Xtilde', 'attach_leg_psi', 'graph_to_json',
           'graph_from_json', 'class_to_json', 'describe_graph', 'describe_class']
