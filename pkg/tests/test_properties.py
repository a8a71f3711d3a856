import random

from hypothesis import given, settings, strategies as st

from possdlp.consistency import cons_cut_degree, incons_degree, is_consistent_set
from possdlp.lattice import modality_lattice
from possdlp.model import PossAtomSet, alpha_cut, pset_join, pset_leq, pset_meet
from possdlp.parteval import poss_t_answer_sets
from possdlp.resolution import poss_answer_sets_resolution
from possdlp.testing import random_program, ten_chain, with_strong_negation

MOD = modality_lattice()
psets = st.dictionaries(st.sampled_from("abc"), st.sampled_from(MOD.elements)).map(lambda d: PossAtomSet(MOD, d))


@given(psets, psets)
def test_meet_join_bounds(A, B):
    m, j = pset_meet(A, B), pset_join(A, B)
    assert pset_leq(m, A) and pset_leq(m, B)
    assert pset_leq(A, j) and pset_leq(B, j)
    assert m.star == A.star & B.star and j.star == A.star | B.star


@given(psets)
def test_pset_leq_reflexive(A):
    assert pset_leq(A, A)


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=150, deadline=None)
@given(seeds)
def test_alpha_cut_antitone(seed):
    rng = random.Random(seed)
    p = random_program(rng, MOD)
    for a in MOD:
        for b in MOD:
            if MOD.leq(a, b):
                assert set(alpha_cut(p, b).clauses) <= set(alpha_cut(p, a).clauses)


@settings(max_examples=150, deadline=None)
@given(seeds, st.sampled_from(["chain", "modality"]))
def test_engines_agree(seed, which):
    rng = random.Random(seed)
    L = ten_chain() if which == "chain" else MOD
    p = with_strong_negation(rng, random_program(rng, L))
    key = lambda M: M.sorted_items()
    assert sorted(poss_answer_sets_resolution(p), key=key) == sorted(poss_t_answer_sets(p), key=key)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_consistent_models_have_bottom_degree(seed):
    rng = random.Random(seed)
    p = with_strong_negation(rng, random_program(rng, MOD), p=0.5)
    for M in poss_answer_sets_resolution(p):
        # every label above open is at least supported, so bottom means consistent
        assert (incons_degree(M) == MOD.bottom) == is_consistent_set(M)
    if poss_answer_sets_resolution(p):
        assert cons_cut_degree(p) == MOD.bottom
