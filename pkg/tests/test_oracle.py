from fractions import Fraction

import numpy as np
import pytest

from src.chern import chern_char_theorem
from src.oracle import chern_char_oracle, omega_monomials, phi_terms
from src.strata import DecoratedGraph, TautClass
from src.ucurve import DivisorSpec, ONE, UMonomial

from conftest import make_space, random_divisor


def assert_agreement(divisor: DivisorSpec, smax: int) -> None:
    theorem = chern_char_theorem(divisor, smax)
    oracle = chern_char_oracle(divisor, smax)
    for s in range(smax + 1):
        diff = theorem.component(s) - oracle[s]
        assert diff == 0, f"degree {s} differs on {divisor.to_json()}"


@pytest.mark.parametrize("g, n, count", [
    (1, 1, 50),
    (1, 2, 50),
    (2, 1, 50),
    (2, 2, 20),
    pytest.param(2, 2, 30, marks=pytest.mark.slow),
    pytest.param(3, 1, 10, marks=pytest.mark.slow),
])
def test_theorem_matches_direct_expansion(rng, g, n, count):
    space = make_space(g, n)
    for _ in range(count):
        assert_agreement(random_divisor(rng, space), space.dim)


def test_genus_one_golden_degree_one():
    space = make_space(1, 1)
    ch_1 = chern_char_oracle(DivisorSpec(space, 0), 1)[1]
    expected = TautClass.from_graph(space, DecoratedGraph((1,), (("1",),), leg_psi=(("1", 1),)), Fraction(-1, 12))
    expected = expected + TautClass.from_graph(space, DecoratedGraph((1,), (("1",),), kappa=((1,),)), Fraction(1, 12))
    expected = expected + TautClass.from_graph(space, DecoratedGraph((0,), (("1",),), (((0, 0), (0, 0)),)), Fraction(1, 12))
    assert ch_1 == expected


@pytest.mark.slow
def test_heavily_twisted_divisor(space_g2p3):
    divisor = random_divisor(np.random.default_rng(7), space_g2p3, density=1.0)
    assert_agreement(divisor, 3)


def test_omega_starts_with_the_unit(space_g2p2):
    monomials = omega_monomials(DivisorSpec(space_g2p2, 2, {"1": 1}), 2)
    assert monomials[ONE] == 1
    assert all(m.degree <= 2 for m in monomials)
    # only the Todd series reaches K alone: B_1(2) = 3/2
    assert monomials[UMonomial(1)] == Fraction(3, 2)


def test_phi_needs_degree_two(space_g2p2):
    divisor = DivisorSpec(space_g2p2, 0)
    assert phi_terms(divisor, 1) == []
    terms = phi_terms(divisor, 2)
    # one A node per stable bipartition plus the nonseparating node, all with B_2/2!
    assert len(terms) == 4
    assert all(coeff == Fraction(1, 12) for _, _, coeff in terms)


def test_smax_range(space_g2p2):
    with pytest.raises(ValueError, match="smax"):
        chern_char_oracle(DivisorSpec(space_g2p2, 0), space_g2p2.dim + 1)
