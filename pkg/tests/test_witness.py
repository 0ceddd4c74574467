import numpy as np
import pytest

from agc.errors import InvalidAction
from agc.constructions import abelian, cyclic
from agc.groupfile import group_to_file, serialize_group_file
from agc.witness import (
    DIAMETER4_FINGERPRINT,
    DIAMETER6_FINGERPRINT,
    abelian_automorphisms,
    build_witness,
    diameter6_extra_checks,
    extend_action,
    has_order3_automorphism,
    witness_fingerprint,
    _invariant_decompositions,
)


def test_invariant_decompositions():
    assert _invariant_decompositions(1) == [()]
    assert _invariant_decompositions(4) == [(2, 2), (4,)]
    assert _invariant_decompositions(12) == [(2, 6), (12,)]
    assert _invariant_decompositions(15) == [(15,)]


def test_abelian_automorphism_counts():
    assert len(abelian_automorphisms(cyclic(15), (15,))) == 8
    assert len(abelian_automorphisms(abelian([2, 2]), (2, 2))) == 6
    assert len(abelian_automorphisms(cyclic(5), (5,))) == 4


def test_automorphisms_are_automorphisms():
    G = abelian([2, 4])
    t = G.table
    for phi in abelian_automorphisms(G, (2, 4)):
        assert np.array_equal(phi[t], t[np.ix_(phi, phi)])


def test_order3_automorphism_detection():
    assert not has_order3_automorphism(cyclic(125), (125,))
    assert not has_order3_automorphism(abelian([25, 5]), (25, 5))
    assert has_order3_automorphism(abelian([5, 5]), (5, 5))


def test_extend_action_rejects_inconsistent_generators():
    actor = cyclic(4)
    # order-3 permutation on 3 points assigned to an order-4 generator
    phi = np.array([1, 2, 0], np.int32)
    with pytest.raises(InvalidAction):
        extend_action(actor, {actor.generators[0]: phi}, 3)


def test_diameter4_witness_matches_frozen_fingerprint(witness60):
    assert witness_fingerprint(witness60) == DIAMETER4_FINGERPRINT


def test_diameter6_witness_matches_frozen_fingerprint(witness1500):
    assert witness_fingerprint(witness1500) == DIAMETER6_FINGERPRINT


def test_diameter6_extra_structure(witness1500):
    extras = diameter6_extra_checks(witness1500)
    assert extras == {
        "fitting_is_sylow_5": True,
        "no_2_element_commutes_with_fitting": True,
        "no_order_4_commutes_with_3_element": True,
    }


def test_witness_builders_are_deterministic(witness60):
    again = build_witness("diameter-4")
    a = serialize_group_file(group_to_file(witness60))
    b = serialize_group_file(group_to_file(again))
    assert a == b


def test_unknown_witness_name():
    with pytest.raises(KeyError):
        build_witness("nosuch")


def test_emitted_witness_matches_corpus_copy(corpus_groups, witness60, witness1500):
    for key, built in (("diameter4-witness", witness60),
                       ("diameter6-witness", witness1500)):
        stored = corpus_groups[key]
        assert stored.order == built.order
        assert np.array_equal(stored.elements, built.elements)
