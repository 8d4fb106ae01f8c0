from .grr_oracle import chern_char_oracle, omega_monomials, phi_terms

__all__ = ['chern_char_oracle', 'omega_monomials', 'phi_terms']
