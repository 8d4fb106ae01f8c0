"""
Term-by-term Grothendieck-Riemann-Roch evaluation of ch(R pi_* O(D)).

    ch = pi_*( e^(S + C) * sum_t B_t(ell)/t! Ktilde^t )            (Omega)
       + pi_*( (Td^dual(O_Sigma)^(-1) - 1) * e^C )                 (Phi)

with S = sum d_p sigma_p, C = sum a_(h,S) C_(h,S), Ktilde = K - sum sigma_p and
the node-class expansion
    Td^dual(O_Sigma)^(-1) - 1 = sum_(b>0 even) B_b/b! sum_(e=0)^(b-2) (-1)^e
                                (sum_(l,T) A_(l,T)^(e,b-2-e) + B^(e,b-2-e)).
Every power is expanded by repeated multiplication with elementary factors;
no closed binomial or multinomial form is used here.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from ..arith import bernoulli_number, bernoulli_poly
from ..combin import stable_bipartitions
from ..parallel import chunked, ordered_map
from ..strata import ClassAccumulator, TautClass
from ..ucurve import (DivisorSpec, Factor, NodeClass, ONE, UMonomial, add_into,
                      mul_sum_by_factors, mul_umonomial, push_forward, push_forward_node)

LOGGER = logging.getLogger(__name__)

FormalSum = Dict[UMonomial, Fraction]


def _exponential(factors: List[Tuple[Factor, Fraction]], order: int) -> FormalSum:
    """e^X truncated at degree order, X a combination of elementary factors."""
    total: FormalSum = {ONE: Fraction(1)}
    term: FormalSum = {ONE: Fraction(1)}
    for n in range(1, order + 1):
        term = mul_sum_by_factors(term, factors, max_degree=order)
        term = {m: c / n for m, c in term.items()}
        if not term:
            break
        add_into(total, term)
    return total


def _todd_series(divisor: DivisorSpec, order: int) -> FormalSum:
    """sum_t B_t(ell)/t! Ktilde^t up to degree order."""
    ktilde = [(Factor.K(), Fraction(1))]
    ktilde += [(Factor.sigma(p), Fraction(-1)) for p in divisor.space.markings]
    series: FormalSum = {}
    power: FormalSum = {ONE: Fraction(1)}
    for t in range(order + 1):
        add_into(series, power, bernoulli_poly(t, divisor.ell) / factorial(t))
        power = mul_sum_by_factors(power, ktilde, max_degree=order)
    return series


def _factor_word(m: UMonomial) -> List[Factor]:
    if m.k_exp:
        return [Factor.K()] * m.k_exp
    if m.sigma is not None:
        return [Factor.sigma(m.sigma[0])] * m.sigma[1]
    return []


def omega_monomials(divisor: DivisorSpec, order: int) -> FormalSum:
    """Monomials of e^(S+C) * sum_t B_t(ell)/t! Ktilde^t up to degree order."""
    sc = [(Factor.sigma(p), Fraction(d)) for p, d in divisor.d.items() if d]
    sc += [(Factor.C(b), Fraction(a)) for b, a in divisor.a.items()]
    exp_sc = _exponential(sc, order)
    todd = _todd_series(divisor, order)
    LOGGER.debug("oracle: %d exponential and %d Todd monomials", len(exp_sc), len(todd))

    product: FormalSum = {}
    for m_todd, c_todd in todd.items():
        word = _factor_word(m_todd)
        for m_exp, c_exp in exp_sc.items():
            if m_exp.degree + m_todd.degree > order:
                continue
            partial: FormalSum = {m_exp: c_exp * c_todd}
            for factor in word:
                step: FormalSum = {}
                for monomial, coeff in partial.items():
                    add_into(step, mul_umonomial(monomial, factor), coeff)
                partial = step
            add_into(product, partial)
    return product


def phi_terms(divisor: DivisorSpec, order: int) -> List[Tuple[NodeClass, UMonomial, Fraction]]:
    """(node class, chain monomial, coefficient) triples of the Phi part."""
    if order < 2:
        return []
    c_factors = [(Factor.C(b), Fraction(a)) for b, a in divisor.a.items()]
    exp_c = _exponential(c_factors, order - 2)
    bipartitions = stable_bipartitions(divisor.space)
    terms = []
    for b in range(2, order + 1, 2):
        weight = bernoulli_number(b) / factorial(b)
        if not weight:
            continue
        for e in range(b - 1):
            sign = (-1) ** e
            nodes = [NodeClass("A", e, b - 2 - e, bip) for bip in bipartitions]
            nodes.append(NodeClass("B", e, b - 2 - e))
            for node in nodes:
                for monomial, coeff in exp_c.items():
                    if monomial.degree + b <= order:
                        terms.append((node, monomial, weight * sign * coeff))
    return terms


def chern_char_oracle(divisor: DivisorSpec, smax: int, workers: int = 1) -> Dict[int, TautClass]:
    """
    Evaluate ch_0 .. ch_smax by direct expansion and pushforward.

    Args:
        divisor: The divisor D on the universal curve
        smax: Highest degree, 0 <= smax <= 3g - 3 + |P|
        workers: Thread count for the pushforward stage

    Returns:
        Mapping degree -> class of that codimension
    """
    space = divisor.space
    if not 0 <= smax <= space.dim:
        raise ValueError(f"smax must lie in [0, {space.dim}], got {smax}")
    order = smax + 1

    omega = list(omega_monomials(divisor, order).items())
    phi = phi_terms(divisor, order)
    LOGGER.info("oracle: pushing forward %d Omega monomials and %d Phi terms",
                len(omega), len(phi))

    def push_omega(batch) -> TautClass:
        acc = ClassAccumulator(space)
        for monomial, coeff in batch:
            pushed = push_forward(space, monomial)
            if not pushed.is_homogeneous(monomial.degree - 1):
                raise RuntimeError(f"pushforward of {monomial.label(space)} left its codimension")
            acc.add(pushed, coeff)
        return acc.result()

    def push_phi(batch) -> TautClass:
        acc = ClassAccumulator(space)
        for node, monomial, coeff in batch:
            acc.add(push_forward_node(space, node, monomial), coeff)
        return acc.result()

    acc = ClassAccumulator(space)
    for part in ordered_map(push_omega, chunked(omega, workers), workers):
        acc.add(part)
    for part in ordered_map(push_phi, chunked(phi, workers), workers):
        acc.add(part)
    total = acc.result()
    return {s: total.component(s) for s in range(smax + 1)}
