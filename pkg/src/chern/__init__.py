from .theorem import GradedChernData, chern_char_theorem
from .ring import GradedRing
from .inversion import invert_to_chern, chern_to_character
from .porteous import thom_porteous
from .brill_noether import (EXPANDED_MAX_GENUS, BNRequest, BNResult, brill_noether_number, bn_pullback,
                            theta_pullback, drc_class, pullback_difference, chern_symbols,
                            character_symbols)

__all__ = ['EXPANDED_MAX_GENUS', 'GradedChernData', 'chern_char_theorem', 'GradedRing', 'invert_to_chern',
           'chern_to_character', 'thom_porteous', 'BNRequest', 'BNResult',
           'brill_noether_number', 'bn_pullback', 'theta_pullback', 'drc_class',
           'pullback_difference', 'chern_symbols', 'character_symbols']
