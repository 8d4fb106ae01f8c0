from .bipartitions import (
    ANCHOR, MarkedSpace, Bipartition, Chain, stable_bipartitions, bipartition_leq,
    bipartition_lt, is_chain, enumerate_chains, compositions, validate_bipartition,
    bipartition_from_json, bipartition_to_json,
)

__all__ = ['ANCHOR', 'MarkedSpace', 'Bipartition', 'Chain', 'stable_bipartitions',
           'bipartition_leq', 'bipartition_lt', 'is_chain', 'enumerate_chains',
           'compositions', 'validate_bipartition', 'bipartition_from_json',
           'bipartition_to_json']
