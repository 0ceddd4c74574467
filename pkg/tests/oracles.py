"""Independent brute-force oracles used to cross-check the library.

Everything here favors obviousness over speed: plain tuple arithmetic,
full-pair scans, and exhaustive searches.  No code is shared with the
algorithms under test beyond the element indexing of FiniteGroup.
"""

from __future__ import annotations

import numpy as np

from agc.perm import FiniteGroup, Subgroup, generated_subgroup


def brute_closure(degree: int, gens: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Set of permutation tuples generated by ``gens`` (as image tuples)."""
    ident = tuple(range(degree))
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                prod = tuple(g[p[i]] for i in range(degree))
                if prod not in elements:
                    elements.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return elements


def brute_centralizer(G: FiniteGroup, x: int) -> list[int]:
    return [y for y in range(G.order) if G.mult(y, x) == G.mult(x, y)]


def brute_center(G: FiniteGroup) -> list[int]:
    return [y for y in range(G.order)
            if all(G.mult(y, x) == G.mult(x, y) for x in range(G.order))]


def _close_set(G: FiniteGroup, seed: set[int]) -> set[int]:
    members = set(seed) | {0}
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for prod in (G.mult(a, b), G.mult(b, a)):
                    if prod not in members:
                        members.add(prod)
                        nxt.append(prod)
        frontier = nxt
    return members


def brute_derived_series(G: FiniteGroup) -> list[set[int]]:
    """Derived series via commutators over all member pairs."""
    inv = G.inverse_array
    current = set(range(G.order))
    series = [current]
    while True:
        members = sorted(current)
        comms = set()
        for a in members:
            for b in members:
                c = G.mult(G.mult(int(inv[a]), int(inv[b])), G.mult(a, b))
                comms.add(c)
        nxt = _close_set(G, comms)
        if nxt == current:
            break
        series.append(nxt)
        current = nxt
        if current == {0}:
            break
    return series


def is_p_subgroup(G: FiniteGroup, members: np.ndarray, p: int) -> bool:
    orders = G.element_orders
    for x in members:
        o = int(orders[x])
        while o % p == 0:
            o //= p
        if o != 1:
            return False
    return True


def _is_malnormal(G: FiniteGroup, H: Subgroup) -> bool:
    """H ∩ gHg⁻¹ = 1 for every g outside H."""
    t, inv = G.table, G.inverse_array
    mask = H.member_mask
    for g in range(G.order):
        if mask[g]:
            continue
        conj = t[t[g, H.members], inv[g]]
        inter = mask[conj].sum()
        if inter > 1:
            return False
    return True


def frobenius_by_malnormal_complement(G: FiniteGroup) -> bool:
    """Frobenius test straight from the definition.

    G is Frobenius iff it has a proper nontrivial malnormal subgroup H (the
    point stabilizer of the Frobenius action on cosets of H).  Candidate
    subgroups are taken 2-generated, with the first generator ranging over
    conjugacy-class representatives; Frobenius complements of solvable
    groups are always 2-generated, so the search is complete here.
    """
    from agc.structure import conjugacy_classes

    reps = [int(c[0]) for c in conjugacy_classes(G) if c[0] != 0]
    seen: set[bytes] = set()
    for x in reps:
        for y in range(G.order):
            H = generated_subgroup(G, [x, y])
            if not 1 < H.order < G.order:
                continue
            key = H.key()
            if key in seen:
                continue
            seen.add(key)
            if _is_malnormal(G, H):
                return True
    return False
