from .product import gp_product
from .degenerations import (contract, degenerations, isomorphisms, one_edge_degenerations,
                            skeleton_form)

__all__ = ['gp_product', 'contract', 'degenerations', 'isomorphisms',
           'one_edge_degenerations', 'skeleton_form']
