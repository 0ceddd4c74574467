"""Build the bundled corpus of group files under corpus/.

Run from the repository root:  python3 scripts/build_corpus.py

The corpus mixes abelian groups, dihedral/dicyclic/symmetric groups,
Frobenius and 2-Frobenius instances, hypothesis-satisfying groups, the two
extremal witnesses, and direct products of the order-60 witness with abelian
factors.  Files are written deterministically, so reruns are byte-identical.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from agc.constructions import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    metacyclic,
    quaternion,
    symmetric,
)
from agc.groupfile import save_group
from agc.perm import FiniteGroup
from agc.products import direct_product, semidirect_product
from agc.witness import (
    _abelian_vectors_index,
    _matrix_to_perm,
    build_witness,
    extend_action,
)

OUT = Path(__file__).resolve().parent.parent / "corpus"


def matrix_action_group(p: int, dim: int, actor: FiniteGroup,
                        gen_matrices: dict[int, np.ndarray],
                        name: str) -> FiniteGroup:
    """Elementary abelian p-group of rank dim acted on by matrices over GF(p)."""
    invariants = tuple([p] * dim)
    base = abelian(list(invariants))
    vecs, index = _abelian_vectors_index(base, invariants)
    gen_phis = {g: _matrix_to_perm(np.asarray(m, np.int64), vecs, index, p)
                for g, m in gen_matrices.items()}
    phis = extend_action(actor, gen_phis, base.order)
    return semidirect_product(base, actor, lambda a: phis[a], name=name)


def generator_by_order(G: FiniteGroup, order: int) -> int:
    orders = G.element_orders
    for g in G.generators:
        if orders[g] == order:
            return int(g)
    raise ValueError(f"no generator of order {order}")


def build_all() -> dict[str, FiniteGroup]:
    groups: dict[str, FiniteGroup] = {}

    def add(key: str, G: FiniteGroup, name: str | None = None) -> FiniteGroup:
        G.name = name if name is not None else key
        groups[key] = G
        return G

    # abelian groups
    add("c6", cyclic(6, name="C6"))
    add("c12", cyclic(12, name="C12"))
    add("c15", cyclic(15, name="C15"))
    add("c2xc2", abelian([2, 2], name="C2xC2"))
    add("c2xc2xc2", abelian([2, 2, 2], name="C2xC2xC2"))

    # dihedral, dicyclic, symmetric, alternating
    add("s3", symmetric(3))
    add("s4", symmetric(4))
    add("a4", alternating(4))
    add("d8", dihedral(4), name="D8")
    add("q8", quaternion(), name="Q8")
    add("d10", dihedral(5), name="D10")
    add("d12", dihedral(6), name="D12")
    add("dic3", dicyclic(3), name="Dic3")

    # metacyclic Frobenius groups
    add("c7-c3", metacyclic(7, 3, 2, name="C7:C3"))
    add("f20", metacyclic(5, 4, 2, name="F20"))
    add("f42", metacyclic(7, 6, 3, name="F42"))
    add("c13-c4", metacyclic(13, 4, 5, name="C13:C4"))
    add("c11-c5", metacyclic(11, 5, 3, name="C11:C5"))

    # matrix-action Frobenius groups on elementary abelian bases
    c3 = cyclic(3, name="C3")
    add("c5sq-c3", matrix_action_group(
        5, 2, c3, {generator_by_order(c3, 3): [[0, 4], [1, 4]]}, "C5^2:C3"))
    c4 = cyclic(4, name="C4")
    add("c5sq-c4", matrix_action_group(
        5, 2, c4, {generator_by_order(c4, 4): [[0, 4], [1, 0]]}, "C5^2:C4"))
    c2 = cyclic(2, name="C2")
    add("c3sq-c2", matrix_action_group(
        3, 2, c2, {generator_by_order(c2, 2): [[2, 0], [0, 2]]}, "C3^2:C2"))

    # a second 2-Frobenius instance: C7^2 acted on by S3
    s3a = symmetric(3)
    add("c7sq-s3", matrix_action_group(
        7, 2, s3a,
        {generator_by_order(s3a, 3): [[2, 0], [0, 4]],
         generator_by_order(s3a, 2): [[0, 1], [1, 0]]},
        "C7^2:S3"))

    # hypothesis-satisfying groups and related constructions
    add("s3xs3", direct_product(symmetric(3), symmetric(3), name="S3xS3"))
    add("a4xc2", direct_product(alternating(4), cyclic(2), name="A4xC2"))
    add("dic3xc5", direct_product(dicyclic(3), cyclic(5), name="Dic3xC5"))
    add("c3xf20", direct_product(cyclic(3), metacyclic(5, 4, 2), name="C3xF20"))
    add("f21xf39", direct_product(metacyclic(7, 3, 2), metacyclic(13, 3, 3),
                                  name="F21xF39"))
    g126 = direct_product(metacyclic(7, 3, 2), symmetric(3), name="(C7:C3)xS3")
    add("g126", g126)
    add("c2xg126", direct_product(cyclic(2), g126, name="C2x(C7:C3)xS3"))

    # the extremal witnesses and their products with abelian factors
    w60 = build_witness("diameter-4")
    add("diameter4-witness", w60, name="diameter4-witness")
    for key, A, aname in [
        ("c2xw60", cyclic(2), "C2"),
        ("c3xw60", cyclic(3), "C3"),
        ("c4xw60", cyclic(4), "C4"),
        ("c2sqxw60", abelian([2, 2]), "C2xC2"),
        ("c5xw60", cyclic(5), "C5"),
        ("c6xw60", cyclic(6), "C6"),
    ]:
        add(key, direct_product(A, w60, name=f"{aname}x(diameter4-witness)"))

    w1500 = build_witness("diameter-6")
    add("diameter6-witness", w1500, name="diameter6-witness")
    return groups


def main() -> int:
    OUT.mkdir(exist_ok=True)
    groups = build_all()
    for key in sorted(groups):
        path = OUT / f"{key}.json"
        save_group(groups[key], path)
        print(f"wrote {path} (order {groups[key].order})")
    print(f"{len(groups)} groups")
    return 0


if __name__ == "__main__":
    sys.exit(main())
