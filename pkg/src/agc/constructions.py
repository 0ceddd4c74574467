"""Stock groups used by tests, the corpus builder, and witness recipes."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .perm import FiniteGroup, Permutation, closure
from .products import direct_product, semidirect_product


def cyclic(n: int, *, name: str | None = None) -> FiniteGroup:
    """Cyclic group of order n on n points; element index k is rotation by k."""
    if n == 1:
        return closure(1, [], name=name or "C1")
    gen = Permutation(np.roll(np.arange(n), -1))
    return closure(n, [gen], name=name or f"C{n}")


def abelian(invariants: Sequence[int], *, name: str | None = None) -> FiniteGroup:
    """Direct product of cyclic groups, acting on disjoint cycles.

    Element indices follow breadth-first enumeration; the rotation vector of
    element i can be read off the stored image rows (see ``abelian_vectors``).
    """
    invariants = [int(d) for d in invariants]
    degree = sum(invariants)
    gens = []
    offset = 0
    for d in invariants:
        images = np.arange(degree)
        images[offset : offset + d] = offset + (np.arange(d) + 1) % d
        gens.append(Permutation(images))
        offset += d
    label = name or "x".join(f"C{d}" for d in invariants)
    return closure(degree, gens, name=label)


def abelian_vectors(G: FiniteGroup, invariants: Sequence[int]) -> np.ndarray:
    """Per-element rotation vectors for a group built by ``abelian``."""
    offsets = np.cumsum([0] + [int(d) for d in invariants[:-1]])
    vecs = G.elements[:, offsets] - offsets
    return vecs.astype(np.int64)


def symmetric(n: int) -> FiniteGroup:
    if n < 2:
        return closure(1, [], name="S1")
    transposition = np.arange(n)
    transposition[[0, 1]] = [1, 0]
    cycle = np.roll(np.arange(n), -1)
    return closure(n, [Permutation(transposition), Permutation(cycle)], name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return closure(max(n, 1), [], name=f"A{n}")
    three_cycle = np.arange(n)
    three_cycle[[0, 1, 2]] = [1, 2, 0]
    if n % 2:
        rest = np.roll(np.arange(n), -1)  # the n-cycle is even for odd n
    else:
        rest = np.arange(n)
        rest[1:] = np.roll(np.arange(1, n), -1)  # odd-length cycle on 1..n-1
    return closure(n, [Permutation(three_cycle), Permutation(rest)], name=f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n acting on n points."""
    rotation = Permutation(np.roll(np.arange(n), -1))
    reflection = Permutation((n - np.arange(n)) % n)
    return closure(n, [rotation, reflection], name=f"D{2 * n}")


def quaternion() -> FiniteGroup:
    """The quaternion group of order 8 (the smallest dicyclic group)."""
    G = dicyclic(2)
    G.name = "Q8"
    return G


def metacyclic(n: int, m: int, r: int, *, name: str | None = None) -> FiniteGroup:
    """C_n ⋊ C_m where the actor generator maps base elements to r-th powers.

    Requires r^m ≡ 1 (mod n) so the assignment is a homomorphism.
    """
    if pow(r, m, n) != 1:
        raise ValueError(f"r^m = {r}^{m} is not 1 mod {n}")
    base = cyclic(n)
    actor = cyclic(m)
    idx = np.arange(n)

    def action(a: int) -> np.ndarray:
        return (idx * pow(r, a, n)) % n

    return semidirect_product(base, actor, action, name=name or f"C{n}:C{m}(r={r})")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n as ⟨a, b | a^{2n}=1, b^2=a^n, bab^-1=a^-1⟩."""
    deg = 4 * n
    k = np.arange(2 * n)
    # points 0..2n-1 are a^k, points 2n..4n-1 are b*a^k; act by right mult
    a = np.concatenate(((k + 1) % (2 * n), 2 * n + (k + 1) % (2 * n)))
    b = np.concatenate((2 * n + (-k) % (2 * n), (n - k) % (2 * n)))
    return closure(deg, [Permutation(a), Permutation(b)], name=f"Dic{n}")
