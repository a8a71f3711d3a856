import pytest

from possdlp.errors import CycleError, DuplicateElement, NotALattice, UnknownElement
from possdlp.lattice import Lattice, decimal_chain, glb, leq, lub, modality_lattice, strictly_less


def test_modality_top_bottom(mod):
    assert mod.top == "certain"
    assert mod.bottom == "open"
    assert not mod.is_chain


def test_unit_chain(unit):
    assert len(unit) == 11
    assert (unit.top, unit.bottom) == ("1", "0")
    assert unit.is_chain


def test_incomparable_pair_is_not_a_lattice():
    with pytest.raises(NotALattice):
        Lattice(["a", "b"])


def test_cycle_rejected():
    with pytest.raises(CycleError):
        Lattice(["a", "b"], [("a", "b"), ("b", "a")])


def test_duplicate_rejected():
    with pytest.raises(DuplicateElement):
        Lattice(["a", "a"])
    with pytest.raises(DuplicateElement):
        Lattice.chain(["0.5", "0.50"])


def test_two_maximal_lower_bounds_rejected():
    # c and d both sit above a and b with no single least upper bound
    edges = [("bot", "a"), ("bot", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"), ("c", "top"), ("d", "top")]
    with pytest.raises(NotALattice):
        Lattice(["bot", "a", "b", "c", "d", "top"], edges)


def test_glb_lub_modality(mod):
    assert glb(mod, ["probable", "plausible"]) == "supported"
    assert lub(mod, ["probable", "plausible"]) == "confirmed"
    assert glb(mod, []) == "certain"
    assert lub(mod, []) == "open"
    for x in mod:
        assert lub(mod, [x]) == x == glb(mod, [x])


def test_glb_lub_chain(unit):
    assert glb(unit, ["0.7", "0.6", "0.5"]) == "0.5"
    assert lub(unit, ["0.7", "0.6", "0.5"]) == "0.7"


def test_leq(mod):
    assert leq(mod, "open", "certain")
    assert not leq(mod, "probable", "plausible")
    assert not leq(mod, "plausible", "probable")
    assert all(leq(mod, x, x) for x in mod)
    assert strictly_less(mod, "supported", "probable")
    assert not strictly_less(mod, "probable", "probable")


def test_unknown_label(mod):
    with pytest.raises(UnknownElement):
        mod.leq("maybe", "open")
    with pytest.raises(KeyError):
        mod.glb(["maybe"])


def test_decimal_aliases(unit):
    assert unit.canonical("0.50") == "0.5"
    assert unit.canonical(0.5) == "0.5"
    assert unit.leq("0.30", ".4")


def test_decimal_chain_bad_step():
    with pytest.raises(ValueError):
        decimal_chain("0", "1", "0.3")


def test_maximal_antichain(mod):
    assert mod.maximal(["open", "probable", "plausible"]) == {"probable", "plausible"}
    assert mod.maximal([]) == frozenset()


def test_sorted_is_linear_extension(mod):
    order = mod.sorted()
    for i, x in enumerate(order):
        for y in order[:i]:
            assert not mod.lt(x, y)


def test_hasse_edges_rebuild(mod):
    again = Lattice(mod.elements, mod.hasse_edges())
    assert again == mod
    assert hash(again) == hash(mod)
    assert len(mod.hasse_edges()) == 6


def test_modality_is_fresh_each_call():
    assert modality_lattice() == modality_lattice()
