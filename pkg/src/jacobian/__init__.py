from .polarisation import (OneNodePolarisation, PhiDiagnostic, validate_phi, modify_divisor,
                           drc_divisor, zero_polarisation, is_phi_stable, one_node_degree,
                           stable_integer, polarisation_from_json, polarisation_to_json)

__all__ = ['OneNodePolarisation', 'PhiDiagnostic', 'validate_phi', 'modify_divisor',
           'drc_divisor', 'zero_polarisation', 'is_phi_stable', 'one_node_degree',
           'stable_integer', 'polarisation_from_json', 'polarisation_to_json']
