"""Subgroup-structure machinery.

Centralizers, the center, derived series, Sylow subgroups (via normalizer
growth), Fitting and second-Fitting subgroups, Sylow systems with
backtracking search, (relative) system normalizers, and normal-subgroup
enumeration via join-closure of normal closures.

All operations are pure functions of immutable groups/subgroups.  Most take
either a FiniteGroup or a Subgroup; a FiniteGroup is treated as its own full
subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import NotSolvable, PrimeNotDividing
from .perm import (
    FiniteGroup,
    Subgroup,
    close_indices,
    full_subgroup,
    generated_subgroup,
    p_part,
    prime_divisors,
    reduce_generators,
    trivial_subgroup,
    _prime_factors,
)

GroupLike = FiniteGroup | Subgroup


def as_subgroup(x: GroupLike) -> Subgroup:
    return x if isinstance(x, Subgroup) else full_subgroup(x)


# -- centralizers and the center -------------------------------------------


def centralizer(G: FiniteGroup, x: int, within: Subgroup | None = None) -> Subgroup:
    """All elements of G (or of ``within``) commuting with element x."""
    t = G.table
    scope = within.members if within is not None else np.arange(G.order)
    mask = t[scope, x] == t[x, scope]
    members = scope[mask]
    return Subgroup(G, members, reduce_generators(G, members))


def centralizer_members(G: FiniteGroup, x: int, scope: np.ndarray) -> np.ndarray:
    t = G.table
    return scope[t[scope, x] == t[x, scope]]


def center(H: GroupLike) -> Subgroup:
    """Elements of H commuting with every element of H (a Subgroup of the parent)."""
    H = as_subgroup(H)
    G = H.parent
    sub = G.table[np.ix_(H.members, H.members)]
    central = H.members[(sub == sub.T).all(axis=1)]
    return Subgroup(G, central, reduce_generators(G, central))


def is_abelian(H: GroupLike) -> bool:
    return as_subgroup(H).is_abelian()


# -- derived series ----------------------------------------------------------


def derived_subgroup(H: GroupLike) -> Subgroup:
    """The commutator subgroup, generated by commutators of generators with members."""
    H = as_subgroup(H)
    G = H.parent
    t, inv = G.table, G.inverse_array
    gens = H.generators if H.generators else tuple(H.members.tolist())
    comms: set[int] = set()
    for g in gens:
        # [g, m] = g^-1 m^-1 g m over all members m
        left = t[inv[g], inv[H.members]]
        comms.update(t[left, t[g, H.members]].tolist())
    comms.discard(0)
    return generated_subgroup(G, sorted(comms))


@dataclass(frozen=True)
class DerivedSeries:
    terms: tuple[Subgroup, ...]
    derived_length: int | None  # None when the series stabilizes above 1

    @property
    def solvable(self) -> bool:
        return self.derived_length is not None

    def orders(self) -> list[int]:
        return [s.order for s in self.terms]


def derived_series(H: GroupLike) -> DerivedSeries:
    H = as_subgroup(H)
    terms = [H]
    while True:
        nxt = derived_subgroup(terms[-1])
        if nxt.order == terms[-1].order:
            break
        terms.append(nxt)
        if nxt.order == 1:
            break
    if terms[-1].order == 1:
        return DerivedSeries(tuple(terms), len(terms) - 1)
    return DerivedSeries(tuple(terms), None)


def is_solvable(H: GroupLike) -> bool:
    return derived_series(H).solvable


# -- Sylow subgroups ---------------------------------------------------------


def normalizer_members(G: FiniteGroup, scope: np.ndarray, members: np.ndarray) -> np.ndarray:
    """Elements of ``scope`` whose conjugation fixes the set ``members``."""
    t, inv = G.table, G.inverse_array
    mask = np.zeros(G.order, bool)
    mask[members] = True
    keep = np.fromiter(
        (mask[t[t[g, members], inv[g]]].all() for g in scope),
        dtype=bool,
        count=scope.size,
    )
    return scope[keep]


def normalizer(H: GroupLike, P: Subgroup) -> Subgroup:
    H = as_subgroup(H)
    members = normalizer_members(H.parent, H.members, P.members)
    return Subgroup(H.parent, members, reduce_generators(H.parent, members))


def sylow_subgroup(H: GroupLike, p: int) -> Subgroup:
    """A Sylow p-subgroup of H, grown inside successive normalizers.

    Starts from the cyclic group on a p-element and repeatedly extends the
    current p-subgroup P by a p-element of N_H(P) \\ P; the standard
    normalizer-growth property guarantees this reaches the full p-part.
    """
    H = as_subgroup(H)
    G = H.parent
    n = H.order
    if n % p != 0:
        raise PrimeNotDividing(f"{p} does not divide the order {n}")
    target = 1
    m = n
    while m % p == 0:
        target *= p
        m //= p
    orders = G.element_orders
    # deterministic seed: first member whose order is divisible by p
    seed = next(int(x) for x in H.members if orders[x] % p == 0 and x != 0)
    gens = [p_part(G, seed, p)]
    P = generated_subgroup(G, gens)
    while P.order < target:
        nz = normalizer_members(G, H.members, P.members)
        ext = None
        for y in nz:
            yp = p_part(G, int(y), p)
            if yp != 0 and not P.contains(yp):
                ext = yp
                break
        assert ext is not None, "normalizer growth stalled below full p-part"
        gens.append(ext)
        P = generated_subgroup(G, gens)
    return P


def sylow_conjugates(H: GroupLike, P: Subgroup) -> list[Subgroup]:
    """The orbit of P under conjugation by H, in deterministic order."""
    H = as_subgroup(H)
    G = H.parent
    gens = H.generators if H.generators else tuple(H.members.tolist())
    seen = {P.key()}
    orbit = [P]
    head = 0
    while head < len(orbit):
        cur = orbit[head]
        head += 1
        for g in gens:
            conj = cur.conjugate_by(g)
            if conj.key() not in seen:
                seen.add(conj.key())
                orbit.append(conj)
    return orbit


# -- Fitting subgroups -------------------------------------------------------


def p_core(H: GroupLike, p: int) -> Subgroup:
    """O_p(H): the intersection of all conjugates of one Sylow p-subgroup."""
    H = as_subgroup(H)
    G = H.parent
    P = sylow_subgroup(H, p)
    t, inv = G.table, G.inverse_array
    gens = H.generators if H.generators else tuple(H.members.tolist())
    members = P.members
    while True:
        changed = False
        for g in gens:
            conj = np.sort(t[t[g, members], inv[g]])
            inter = np.intersect1d(members, conj, assume_unique=True)
            if inter.size != members.size:
                members = inter
                changed = True
        if not changed:
            break
    return Subgroup(G, members, reduce_generators(G, members))


def is_nilpotent(H: GroupLike) -> bool:
    """True when every Sylow subgroup of H is normal in H."""
    H = as_subgroup(H)
    for p in prime_divisors(H.order):
        P = sylow_subgroup(H, p)
        if normalizer_members(H.parent, H.members, P.members).size != H.order:
            return False
    return True


def fitting_subgroup(H: GroupLike) -> Subgroup:
    """F(H): the product of the cores O_p(H) over the primes dividing |H|."""
    H = as_subgroup(H)
    G = H.parent
    gens: list[int] = []
    for p in prime_divisors(H.order):
        gens.extend(int(x) for x in p_core(H, p).generators)
    return generated_subgroup(G, gens)


def second_fitting_preimage(G: FiniteGroup) -> Subgroup:
    """The full preimage in G of F(G/F(G))."""
    from .products import quotient  # local import to avoid a cycle

    F = fitting_subgroup(G)
    if F.order == G.order:
        return F
    Q, proj = quotient(G, F)
    FQ = fitting_subgroup(Q)
    members = np.nonzero(FQ.member_mask[proj])[0].astype(np.int32)
    gens = list(F.generators)
    gen_images = set(int(g) for g in FQ.generators) - {0}
    for f in sorted(gen_images):
        gens.append(int(np.nonzero(proj == f)[0][0]))
    return Subgroup(G, members, tuple(gens))


# -- Sylow systems and system normalizers ------------------------------------


@dataclass(frozen=True)
class SylowSystem:
    """One Sylow subgroup per prime divisor, pairwise permutable."""

    group: Subgroup
    sylows: dict[int, Subgroup]

    def primes(self) -> list[int]:
        return sorted(self.sylows)

    def hall(self, pi: Sequence[int]) -> Subgroup:
        """The product of the system's Sylow subgroups for primes in pi."""
        G = self.group.parent
        t = G.table
        members = np.array([0], np.int32)
        gens: list[int] = []
        for p in sorted(pi):
            if p not in self.sylows:
                continue
            P = self.sylows[p]
            members = np.unique(t[np.ix_(members, P.members)])
            gens.extend(P.generators)
        return Subgroup(G, members, tuple(gens))


def product_sets_equal(G: FiniteGroup, A: np.ndarray, B: np.ndarray) -> bool:
    """Whether the product sets A·B and B·A coincide (permutability test)."""
    t = G.table
    ab = np.unique(t[np.ix_(A, B)])
    ba = np.unique(t[np.ix_(B, A)])
    return ab.size == ba.size and bool((ab == ba).all())


def sylow_systems(H: GroupLike, limit: int | None = None) -> Iterator[SylowSystem]:
    """Depth-first enumeration of Sylow systems of a solvable group.

    Primes are ordered by descending p-part; candidates for each prime are
    the conjugates of the canonical Sylow subgroup.  The first system yielded
    is the canonical one.
    """
    H = as_subgroup(H)
    G = H.parent
    if not is_solvable(H):
        raise NotSolvable("Sylow systems require a solvable group")
    factors = _prime_factors(H.order)
    primes = sorted(factors, key=lambda p: (-(p ** factors[p]), p))
    candidate_lists = [sylow_conjugates(H, sylow_subgroup(H, p)) for p in primes]
    count = 0

    def permutes_with_all(P: Subgroup, chosen: list[Subgroup]) -> bool:
        return all(product_sets_equal(G, P.members, Q.members) for Q in chosen)

    def rec(level: int, chosen: list[Subgroup]) -> Iterator[SylowSystem]:
        nonlocal count
        if level == len(primes):
            count += 1
            yield SylowSystem(H, dict(zip(primes, chosen)))
            return
        for P in candidate_lists[level]:
            if limit is not None and count >= limit:
                return
            if permutes_with_all(P, chosen):
                yield from rec(level + 1, chosen + [P])

    yield from rec(0, [])


def sylow_system(H: GroupLike) -> SylowSystem:
    """The canonical (first-found) Sylow system of a solvable group."""
    for system in sylow_systems(H, limit=1):
        return system
    raise AssertionError("no Sylow system found for a solvable group")


def system_normalizer(L: GroupLike, system: SylowSystem) -> Subgroup:
    """Elements of L whose conjugation fixes every Sylow subgroup of the system.

    With L equal to the system's own group this is an absolute system
    normalizer; with a larger ambient L it is a relative one.
    """
    L = as_subgroup(L)
    G = L.parent
    members = L.members
    for p in system.primes():
        members = normalizer_members(G, members, system.sylows[p].members)
    return Subgroup(G, members, reduce_generators(G, members))


# -- conjugacy classes and normal subgroups -----------------------------------


def conjugacy_classes(G: FiniteGroup) -> list[np.ndarray]:
    """All conjugacy classes, each sorted, ordered by least member."""
    t, inv = G.table, G.inverse_array
    n = G.order
    assigned = np.zeros(n, bool)
    everyone = np.arange(n)
    classes = []
    for x in range(n):
        if assigned[x]:
            continue
        cls = np.unique(t[t[everyone, x], inv[everyone]])
        assigned[cls] = True
        classes.append(cls.astype(np.int32))
    return classes


def normal_closure(G: FiniteGroup, x: int) -> Subgroup:
    """The smallest normal subgroup containing element x."""
    t, inv = G.table, G.inverse_array
    everyone = np.arange(G.order)
    cls = np.unique(t[t[everyone, x], inv[everyone]])
    members = close_indices(G, cls.tolist())
    return Subgroup(G, members, reduce_generators(G, members))


@dataclass(frozen=True)
class NormalSubgroupInfo:
    subgroup: Subgroup
    minimal: bool


def normal_subgroups(G: FiniteGroup) -> list[NormalSubgroupInfo]:
    """All normal subgroups with minimal-normal flags.

    Computed as the join-closure of the normal closures of cyclic subgroups,
    which is complete because every normal subgroup is the join of the normal
    closures of its elements.
    """
    found: dict[bytes, Subgroup] = {}

    def add(S: Subgroup) -> bool:
        key = S.key()
        if key in found:
            return False
        found[key] = S
        return True

    add(trivial_subgroup(G))
    add(full_subgroup(G))
    for cls in conjugacy_classes(G):
        if cls[0] == 0 and cls.size == 1:
            continue
        add(normal_closure(G, int(cls[0])))
    # join-closure
    worklist = list(found.values())
    while worklist:
        cur = worklist.pop()
        for other in list(found.values()):
            if cur.order == G.order or other.order == G.order:
                continue
            gens = tuple(cur.generators) + tuple(other.generators)
            join = generated_subgroup(G, gens)
            if add(join):
                worklist.append(join)
    subs = sorted(found.values(), key=lambda s: (s.order, s.members.tolist()))
    infos = []
    for S in subs:
        minimal = S.order > 1 and not any(
            1 < T.order < S.order and S.member_mask[T.members].all()
            for T in subs
        )
        infos.append(NormalSubgroupInfo(S, minimal))
    return infos


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [info.subgroup for info in normal_subgroups(G) if info.minimal]
