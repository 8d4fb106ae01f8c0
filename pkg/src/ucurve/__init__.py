from .divisor import DivisorSpec, euler_characteristic
from .monomial import (CEdge, NodeClass, Factor, UMonomial, ONE, mul_umonomial, add_into,
                       mul_sum_by_factors)
from .pushforward import push_forward, push_forward_node

__all__ = ['DivisorSpec', 'euler_characteristic', 'CEdge', 'NodeClass', 'Factor', 'UMonomial',
           'ONE', 'mul_umonomial', 'add_into', 'mul_sum_by_factors', 'push_forward',
           'push_forward_node']
