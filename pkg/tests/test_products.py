import numpy as np
import pytest

from agc.errors import InvalidAction, NotNormal
from agc.perm import generated_subgroup
from agc.products import direct_product, quotient, semidirect_product
from agc.constructions import abelian, cyclic, symmetric
from agc.structure import center, derived_series, is_abelian, normal_subgroups


def _klein_four(s4):
    orders = s4.element_orders
    double_transpositions = [
        x for x in range(s4.order)
        if orders[x] == 2 and not np.any(s4.elements[x] == np.arange(4))
    ]
    return generated_subgroup(s4, double_transpositions)


def test_quotient_s4_by_v4():
    G = symmetric(4)
    V = _klein_four(G)
    Q, proj = quotient(G, V)
    assert Q.order == 6
    assert not is_abelian(Q)  # S4/V4 is the nonabelian group of order 6
    # the projection is a homomorphism
    t, tq = G.table, Q.table
    for i in range(0, 24, 3):
        for j in range(0, 24, 5):
            assert proj[t[i, j]] == tq[proj[i], proj[j]]
    # kernel is exactly V
    assert sorted(np.nonzero(proj == 0)[0].tolist()) == V.members.tolist()


def test_quotient_rejects_non_normal():
    G = symmetric(3)
    H = generated_subgroup(G, [G.generators[0]])  # a transposition
    with pytest.raises(NotNormal):
        quotient(G, H)


def test_direct_product_of_abelians_is_abelian():
    G = direct_product(cyclic(4), cyclic(6))
    assert G.order == 24
    assert is_abelian(G)
    assert int(G.element_orders.max()) == 12


def test_direct_product_center_splits():
    G = direct_product(cyclic(2), symmetric(3))
    assert G.order == 12
    assert center(G).order == 2
    assert derived_series(G).orders() == [12, 3, 1]


def test_semidirect_pairing_is_bijective():
    base, actor = cyclic(5), cyclic(4)
    idx = np.arange(5)

    def action(a):
        return (idx * pow(2, a, 5)) % 5

    G = semidirect_product(base, actor, action)
    assert G.order == 20
    pairing = G.pairing
    assert sorted(pairing.ravel().tolist()) == list(range(20))
    # pairing respects the product law (b1,a1)(b2,a2) = (b1*phi_a1(b2), a1a2)
    tb, ta, t = base.table, actor.table, G.table
    for b1 in range(5):
        for a1 in range(4):
            for b2 in range(5):
                for a2 in range(4):
                    left = t[pairing[b1, a1], pairing[b2, a2]]
                    phi = action(a1)
                    right = pairing[tb[b1, phi[b2]], ta[a1, a2]]
                    assert left == right


def test_semidirect_rejects_non_automorphism():
    base, actor = cyclic(5), cyclic(2)
    bad = np.array([0, 2, 1, 3, 4])  # a bijection that is not an automorphism

    def action(a):
        return bad if a == 1 else np.arange(5)

    with pytest.raises(InvalidAction):
        semidirect_product(base, actor, action)


def test_semidirect_rejects_non_homomorphism():
    base, actor = cyclic(7), cyclic(4)
    idx = np.arange(7)

    def action(a):
        # order-3 automorphism assigned to an order-4 actor: not a homomorphism
        return (idx * pow(2, a, 7)) % 7

    with pytest.raises(InvalidAction):
        semidirect_product(base, actor, action)


def test_frobenius_20_structure():
    base, actor = cyclic(5), cyclic(4)
    idx = np.arange(5)
    G = semidirect_product(base, actor, lambda a: (idx * pow(2, a, 5)) % 5)
    assert center(G).order == 1
    assert derived_series(G).orders() == [20, 5, 1]
    infos = normal_subgroups(G)
    assert [i.subgroup.order for i in infos] == [1, 5, 10, 20]
