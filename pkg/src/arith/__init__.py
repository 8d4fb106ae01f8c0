from .bernoulli import bernoulli_number, bernoulli_poly
from .rational import Rational, as_rational, format_rational, parse_rational

__all__ = ['bernoulli_number', 'bernoulli_poly', 'Rational', 'as_rational',
           'format_rational', 'parse_rational']
