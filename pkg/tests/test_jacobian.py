from fractions import Fraction

import pytest

from src.combin import Bipartition, stable_bipartitions
from src.jacobian import (OneNodePolarisation, drc_divisor, is_phi_stable, modify_divisor,
                          one_node_degree, polarisation_from_json, polarisation_to_json,
                          stable_integer, validate_phi, zero_polarisation)
from src.ucurve import DivisorSpec

from conftest import make_space, random_divisor

DRC_SPACES = [(g, n) for g in (1, 2, 3) for n in (1, 2, 3)]


def bip(h, *labels):
    return Bipartition(h, frozenset(labels))


def random_phi(rng, space, total_degree):
    """Values in thirds, so never a half-integer."""
    values = {b: Fraction(int(rng.integers(-9, 10)), 3) for b in stable_bipartitions(space)}
    return OneNodePolarisation(space, total_degree, values)


class TestValidation:
    def test_zero_is_nondegenerate(self, space_g2p2):
        ok, diagnostics = validate_phi(zero_polarisation(space_g2p2))
        assert ok and diagnostics == []

    def test_half_integer_is_reported(self, space_g2p2):
        values = dict(zero_polarisation(space_g2p2).phi_s)
        values[bip(1, "1")] = Fraction(3, 2)
        ok, diagnostics = validate_phi(OneNodePolarisation(space_g2p2, 0, values))
        assert not ok
        assert [d.bipartition for d in diagnostics] == [bip(1, "1")]
        assert "1 and 2" in diagnostics[0].reason

    def test_thirds_are_fine(self, space_g2p2):
        values = {b: Fraction(1, 3) for b in stable_bipartitions(space_g2p2)}
        assert validate_phi(OneNodePolarisation(space_g2p2, 0, values))[0]

    def test_missing_entries(self, space_g2p2):
        with pytest.raises(ValueError, match="missing"):
            validate_phi(OneNodePolarisation(space_g2p2, 0, {bip(1, "1"): 0}))

    def test_construction_checks(self, space_g2p2):
        with pytest.raises(ValueError):
            OneNodePolarisation(space_g2p2, Fraction(1, 2))
        with pytest.raises(ValueError, match="anchor"):
            OneNodePolarisation(space_g2p2, 0, {bip(1, "2"): 0})
        with pytest.raises(ValueError):
            OneNodePolarisation(space_g2p2, 0, {bip(1, "1"): 0.5})

    def test_stable_integer(self):
        assert stable_integer(Fraction(1, 3)) == 0
        assert stable_integer(Fraction(2, 3)) == 1
        assert stable_integer(Fraction(-2, 3)) == -1
        assert stable_integer(Fraction(7)) == 7


class TestModification:
    def test_one_node_degree(self, space_g2p2):
        divisor = DivisorSpec(space_g2p2, 1, {"1": 2, "2": 5})
        # ell (2h - 1) + d_S
        assert one_node_degree(divisor, bip(1, "1")) == 1 + 2
        assert one_node_degree(divisor, bip(0, "1", "2")) == -1 + 7

    def test_genus_two_example(self, space_g2p2):
        divisor = drc_divisor(space_g2p2, "1", "2")
        assert divisor.ell == 0
        assert dict(divisor.d) == {"1": 1, "2": -1}
        assert divisor.a_of(bip(1, "1")) == -1
        assert divisor.a_of(bip(0, "1", "2")) == 0
        assert divisor.a_of(bip(1, "1", "2")) == 0
        assert divisor.degree == 0

    @pytest.mark.parametrize("g, n", DRC_SPACES)
    def test_drc_rule_on_every_bipartition(self, g, n):
        space = make_space(g, n)
        for i in space.markings:
            for j in space.markings:
                divisor = drc_divisor(space, i, j)
                assert divisor.degree == 0
                for b in stable_bipartitions(space):
                    if i != j and i in b.S and j not in b.S:
                        expected = -1
                    elif i != j and j in b.S and i not in b.S:
                        expected = 1
                    else:
                        expected = 0
                    assert divisor.a_of(b) == expected, (i, j, b)

    @pytest.mark.parametrize("g, n", [(1, 3), (2, 3), (3, 2)])
    def test_drc_antisymmetry(self, g, n):
        space = make_space(g, n)
        for i in space.markings:
            for j in space.markings:
                assert drc_divisor(space, i, j) == drc_divisor(space, j, i).negated()

    def test_diagonal_is_zero(self, space_g2p3):
        assert drc_divisor(space_g2p3, "2", "2") == DivisorSpec(space_g2p3)

    def test_unknown_marking(self, space_g2p2):
        with pytest.raises(ValueError, match="unknown marking"):
            drc_divisor(space_g2p2, "1", "9")

    def test_result_is_stable_and_idempotent(self, rng, space_g2p3):
        for _ in range(30):
            divisor = random_divisor(rng, space_g2p3)
            phi = random_phi(rng, space_g2p3, divisor.degree)
            modified = modify_divisor(divisor, phi)
            assert is_phi_stable(modified, phi)
            assert modify_divisor(modified, phi) == modified
            assert modified.ell == divisor.ell and dict(modified.d) == dict(divisor.d)

    def test_integer_shift_equivariance(self, rng, space_g2p2):
        divisor = DivisorSpec(space_g2p2, 1, {"1": 1})
        phi = random_phi(rng, space_g2p2, divisor.degree)
        base = modify_divisor(divisor, phi)
        for b in stable_bipartitions(space_g2p2):
            for m in (-2, 1, 3):
                shifted = modify_divisor(divisor, phi.shifted(b, m))
                assert shifted.a_of(b) == base.a_of(b) + m
                others = [c for c in stable_bipartitions(space_g2p2) if c != b]
                assert all(shifted.a_of(c) == base.a_of(c) for c in others)

    def test_refusals(self, space_g2p2):
        divisor = DivisorSpec(space_g2p2, 0, {"1": 1})
        with pytest.raises(ValueError, match="degree"):
            modify_divisor(divisor, zero_polarisation(space_g2p2, 0))
        with pytest.raises(ValueError, match="lives on"):
            modify_divisor(divisor, zero_polarisation(make_space(2, 3), 1))
        values = dict(zero_polarisation(space_g2p2, 1).phi_s)
        values[bip(1, "1")] = Fraction(-1, 2)
        with pytest.raises(ValueError, match="degenerate"):
            modify_divisor(divisor, OneNodePolarisation(space_g2p2, 1, values))


class TestSerialization:
    def test_round_trip(self, rng, space_g2p3):
        phi = random_phi(rng, space_g2p3, 2)
        assert polarisation_from_json(space_g2p3, polarisation_to_json(phi)) == phi

    def test_document_shape(self, space_g2p2):
        doc = polarisation_to_json(zero_polarisation(space_g2p2, 1))
        assert doc["d"] == 1
        assert doc["phi"][1] == {"h": 1, "S": ["1"], "value": "0"}

    def test_bad_documents(self, space_g2p2):
        with pytest.raises(ValueError, match="total degree"):
            polarisation_from_json(space_g2p2, {"phi": []})
        entry = {"h": 1, "S": ["1"], "value": "1/3"}
        with pytest.raises(ValueError, match="twice"):
            polarisation_from_json(space_g2p2, {"d": 0, "phi": [entry, entry]})
        with pytest.raises(ValueError, match="no value"):
            polarisation_from_json(space_g2p2, {"d": 0, "phi": [{"h": 1, "S": ["1"]}]})
