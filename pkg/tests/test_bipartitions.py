import pytest

from src.combin import (Bipartition, MarkedSpace, bipartition_from_json, bipartition_leq,
                        bipartition_lt, bipartition_to_json, compositions, enumerate_chains,
                        is_chain, stable_bipartitions, validate_bipartition)

from conftest import make_space


def bip(h, *labels):
    return Bipartition(h, frozenset(labels))


def test_space_validation():
    with pytest.raises(ValueError):
        MarkedSpace(0, ("1",))
    with pytest.raises(ValueError):
        MarkedSpace(2, ())
    with pytest.raises(ValueError):
        MarkedSpace(2, ("2", "3"))
    with pytest.raises(ValueError):
        MarkedSpace(2, ("1", "1"))
    assert make_space(3, 2).dim == 8


@pytest.mark.parametrize("g, n, count", [
    (1, 1, 0),
    (1, 2, 1),
    (2, 1, 1),
    (2, 2, 3),
    (3, 1, 2),
])
def test_stable_bipartition_counts(g, n, count):
    assert len(stable_bipartitions(make_space(g, n))) == count


def test_bipartition_order(space_g2p2):
    assert stable_bipartitions(space_g2p2) == (bip(0, "1", "2"), bip(1, "1"), bip(1, "1", "2"))


def test_stability_and_anchor_rules(space_g2p2):
    with pytest.raises(ValueError, match="anchor"):
        validate_bipartition(space_g2p2, bip(1, "2"))
    with pytest.raises(ValueError, match="unstable"):
        validate_bipartition(space_g2p2, bip(0, "1"))
    with pytest.raises(ValueError, match="unstable"):
        validate_bipartition(space_g2p2, bip(2, "1"))
    with pytest.raises(ValueError):
        validate_bipartition(space_g2p2, bip(1, "1", "7"))


def test_partial_order():
    assert bipartition_leq(bip(0, "1", "2"), bip(1, "1", "2"))
    assert bipartition_lt(bip(1, "1"), bip(1, "1", "2"))
    assert not bipartition_leq(bip(1, "1"), bip(0, "1", "2"))
    assert not bipartition_lt(bip(1, "1"), bip(1, "1"))
    assert is_chain((bip(1, "1"), bip(1, "1", "2")))
    assert not is_chain((bip(1, "1", "2"), bip(1, "1")))


def test_chains(space_g2p2):
    assert enumerate_chains(space_g2p2, 0) == [()]
    pairs = enumerate_chains(space_g2p2, 2)
    assert set(pairs) == {(bip(0, "1", "2"), bip(1, "1", "2")), (bip(1, "1"), bip(1, "1", "2"))}
    assert enumerate_chains(space_g2p2, 3) == []
    assert all(is_chain(chain) for chain in pairs)


def test_chains_restricted_to_support(space_g2p2):
    chains = enumerate_chains(space_g2p2, 2, among=[bip(1, "1"), bip(1, "1", "2")])
    assert chains == [(bip(1, "1"), bip(1, "1", "2"))]


def test_chain_where_subset_sorts_later():
    # {1,3} sorts after {1,2,3} in the enumeration order yet lies below it
    space = make_space(2, 3)
    chains = enumerate_chains(space, 2)
    assert (bip(1, "1", "3"), bip(1, "1", "2", "3")) in chains
    assert (bip(0, "1", "3"), bip(0, "1", "2", "3")) in chains


def test_compositions():
    assert compositions(3, 2) == [(1, 2), (2, 1)]
    assert compositions(4, 1) == [(4,)]
    assert len(compositions(6, 3)) == 10
    with pytest.raises(ValueError):
        compositions(0, 1)


def test_bipartition_json(space_g2p2):
    b = bip(1, "1", "2")
    assert bipartition_to_json(space_g2p2, b) == {"h": 1, "S": ["1", "2"]}
    assert bipartition_from_json(space_g2p2, {"h": 1, "S": ["1", "2"]}) == b
    with pytest.raises(ValueError, match="anchor"):
        bipartition_from_json(space_g2p2, {"h": 1, "S": ["2"]})
    with pytest.raises(ValueError):
        bipartition_from_json(space_g2p2, {"S": ["1"]})
