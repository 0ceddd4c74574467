"""Quotients and (semi)direct products, realized as permutation groups.

Quotients act by right multiplication on cosets; products act on
|base|·|actor| points via the regular representation, so every construction
yields the same uniform FiniteGroup representation.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from .errors import InvalidAction, NotNormal
from .perm import (
    DEFAULT_TABLE_CAP,
    FiniteGroup,
    Permutation,
    Subgroup,
    closure,
)


def quotient(
    G: FiniteGroup, N: Subgroup, *, name: str | None = None
) -> tuple[FiniteGroup, np.ndarray]:
    """The quotient G/N with its projection array.

    Returns ``(Q, proj)`` where Q acts by right multiplication on the cosets
    of N (degree |G|/|N|) and ``proj[x]`` is the index in Q of the coset Nx.
    Raises NotNormal when N is not normal in G.
    """
    if N.parent is not G:
        raise ValueError("subgroup does not belong to the given group")
    if not N.is_normal():
        raise NotNormal("quotient by a non-normal subgroup")
    t = G.table
    # canonical representative of the coset Nx: the least element of {n·x}
    coset_rep = t[N.members].min(axis=0).astype(np.int32)
    reps = np.unique(coset_rep)
    cid = np.searchsorted(reps, coset_rep).astype(np.int32)
    k = int(reps.size)
    gen_perms = [Permutation(cid[t[reps, g]]) for g in G.generators]
    Q = closure(k, gen_perms, max_order=k, name=name)
    # each element x of G induces the coset permutation c ↦ cid[reps[c]·x]
    images = cid[t[reps]]  # shape (k, |G|); column x is the permutation of x
    proj = np.empty(G.order, np.int32)
    for x in range(G.order):
        proj[x] = Q.index_of(np.ascontiguousarray(images[:, x]))
    return Q, proj


ActionFn = Callable[[int], Sequence[int] | np.ndarray]


def semidirect_product(
    base: FiniteGroup,
    actor: FiniteGroup,
    action: ActionFn,
    *,
    name: str | None = None,
    table_cap: int = DEFAULT_TABLE_CAP,
) -> FiniteGroup:
    """The semidirect product base ⋊ actor for a verified action.

    ``action(a)`` must give, for each actor element index a, the automorphism
    of the base as a permutation of base element indices; the assignment must
    be a homomorphism.  Multiplication follows
    (b1, a1)(b2, a2) = (b1·action(a1)(b2), a1·a2), realized on
    |base|·|actor| points via the regular representation.  The returned group
    carries a ``pairing`` array with pairing[b, a] = element index of (b, a).
    """
    nb, m = base.order, actor.order
    tb, ta = base.table, actor.table
    phis = np.empty((m, nb), np.int32)
    for a in range(m):
        phi = np.asarray(action(a), np.int32)
        if phi.shape != (nb,) or not np.array_equal(np.sort(phi), np.arange(nb)):
            raise InvalidAction(f"action of actor element {a} is not a bijection")
        if not np.array_equal(phi[tb], tb[np.ix_(phi, phi)]):
            raise InvalidAction(
                f"action of actor element {a} is not an automorphism"
            )
        phis[a] = phi
    for a1 in range(m):
        composed = phis[a1][phis]  # row a2 = phi_{a1} ∘ phi_{a2}
        if not np.array_equal(phis[ta[a1]], composed):
            raise InvalidAction("action is not a homomorphism into Aut(base)")

    pts = np.arange(nb * m, dtype=np.int32)
    b_of, a_of = pts // m, pts % m
    gen_perms = []
    for gb in base.generators:
        # right multiplication by (gb, identity)
        gen_perms.append(Permutation(tb[b_of, phis[a_of, gb]] * m + a_of))
    for ga in actor.generators:
        # right multiplication by (identity, ga)
        gen_perms.append(Permutation(b_of * m + ta[a_of, ga]))
    G = closure(nb * m, gen_perms, max_order=nb * m, table_cap=table_cap, name=name)
    if G.order != nb * m:
        raise InvalidAction("regular representation did not reach full order")

    pairing = np.empty((nb, m), np.int32)
    for b in range(nb):
        # right multiplication by (b, a): (b2, a2) ↦ (b2·phi_{a2}(b), a2·a)
        block = tb[b_of, phis[a_of, b]] * m  # a-independent part for fixed b
        for a in range(m):
            pairing[b, a] = G.index_of(block + ta[a_of, a])
    G.pairing = pairing  # type: ignore[attr-defined]
    return G


def direct_product(
    A: FiniteGroup, B: FiniteGroup, *, name: str | None = None
) -> FiniteGroup:
    """Direct product A × B (semidirect product with the trivial action)."""
    ident = np.arange(A.order, dtype=np.int32)
    return semidirect_product(A, B, lambda a: ident, name=name)
