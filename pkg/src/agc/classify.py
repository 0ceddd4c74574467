"""Group classification predicates.

Identifies abelian-Sylow groups, Frobenius groups, 2-Frobenius groups, the
hypothesis class studied by the commuting-graph checks (solvable nonabelian
groups with abelian Sylow subgroups whose central quotient is neither
Frobenius nor 2-Frobenius), and the two special subclasses with the tighter
diameter bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSolvable
from .perm import FiniteGroup, Subgroup, prime_divisors
from .products import quotient
from .structure import (
    center,
    centralizer_members,
    derived_series,
    fitting_subgroup,
    normal_subgroups,
    second_fitting_preimage,
    sylow_subgroup,
)


def is_a_group(G: FiniteGroup) -> bool:
    """Whether every Sylow subgroup of G is abelian."""
    return all(sylow_subgroup(G, p).is_abelian() for p in prime_divisors(G.order))


def _kernel_condition(G: FiniteGroup, members: np.ndarray) -> bool:
    """C_G(x) is contained in the candidate kernel for every nontrivial x in it."""
    mask = np.zeros(G.order, bool)
    mask[members] = True
    everyone = np.arange(G.order)
    for x in members:
        if x == 0:
            continue
        cent = centralizer_members(G, int(x), everyone)
        if not mask[cent].all():
            return False
    return True


def is_frobenius(G: FiniteGroup) -> tuple[bool, Subgroup | None]:
    """Frobenius test for solvable groups, returning the kernel when one exists.

    For solvable G the Fitting subgroup is the only candidate kernel: a
    Frobenius kernel is nilpotent and self-centralizing, hence equals F(G).
    The test checks 1 < F(G) < G and C_G(x) <= F(G) for nontrivial x in F(G);
    that condition forces F(G) to be a normal Hall subgroup acted on
    fixed-point-freely, so a complement exists and G is Frobenius.
    """
    if not derived_series(G).solvable:
        raise NotSolvable("Frobenius detection implemented for solvable groups only")
    F = fitting_subgroup(G)
    if F.order == 1 or F.order == G.order:
        return False, None
    if _kernel_condition(G, F.members):
        return True, F
    return False, None


def is_2frobenius(G: FiniteGroup) -> tuple[bool, tuple[Subgroup, Subgroup] | None]:
    """2-Frobenius test: normal K < H with H Frobenius with kernel K and
    G/K Frobenius with kernel H/K.  Returns (K, H) on success.

    Tries the canonical pair K = F(G), H = preimage of F(G/F(G)) first, then
    falls back to scanning pairs of normal subgroups.
    """
    if not derived_series(G).solvable:
        raise NotSolvable("2-Frobenius detection implemented for solvable groups only")

    def pair_works(K: Subgroup, H: Subgroup) -> bool:
        if not (1 < K.order < H.order < G.order):
            return False
        if not H.member_mask[K.members].all():
            return False
        # lower level: H Frobenius with kernel K
        t = G.table
        sub = t[np.ix_(H.members, H.members)]
        idx_of = {int(m): i for i, m in enumerate(H.members)}
        kmask = np.zeros(H.order, bool)
        kmask[[idx_of[int(m)] for m in K.members]] = True
        for i in np.nonzero(kmask)[0]:
            if i == 0:
                continue
            x = H.members[i]
            cent = (sub[:, i] == sub[i, :])
            if not kmask[np.nonzero(cent)[0]].all():
                return False
        # upper level: G/K Frobenius with kernel H/K
        Q, proj = quotient(G, K)
        h_images = np.unique(proj[H.members])
        return _kernel_condition(Q, h_images)

    K = fitting_subgroup(G)
    H = second_fitting_preimage(G)
    if pair_works(K, H):
        return True, (K, H)
    infos = normal_subgroups(G)
    for a in infos:
        for b in infos:
            Ka, Hb = a.subgroup, b.subgroup
            if Ka.key() == K.key() and Hb.key() == H.key():
                continue
            if pair_works(Ka, Hb):
                return True, (Ka, Hb)
    return False, None


@dataclass(frozen=True)
class Classification:
    order: int
    solvable: bool
    derived_length: int | None
    abelian: bool
    center_order: int
    a_group: bool
    frobenius: bool
    two_frobenius: bool
    central_quotient_frobenius: bool
    central_quotient_two_frobenius: bool
    satisfies_hypothesis: bool
    corollary_class: str


def corollary_class(G: FiniteGroup, hypothesis: bool) -> str:
    """Subclass with the tighter diameter bound.

    "two-prime-order": |G| = p^a q^b for two distinct primes.
    "cube-free-odd": |G| odd and cube-free.  "two-prime-order" takes
    precedence; "none" otherwise or when the hypothesis fails.
    """
    if not hypothesis:
        return "none"
    n = G.order
    primes = prime_divisors(n)
    if len(primes) == 2:
        return "two-prime-order"
    if n % 2 == 1:
        cube_free = True
        for p in primes:
            if n % (p ** 3) == 0:
                cube_free = False
                break
        if cube_free:
            return "cube-free-odd"
    return "none"


def classify(G: FiniteGroup) -> Classification:
    series = derived_series(G)
    solvable = series.solvable
    Z = center(G)
    abelian = Z.order == G.order
    a_group = is_a_group(G) if solvable else False

    frob = two_frob = q_frob = q_two_frob = False
    hypothesis = False
    if solvable and not abelian:
        frob = is_frobenius(G)[0]
        two_frob = False if frob else is_2frobenius(G)[0]
        if Z.order == 1:
            q_frob, q_two_frob = frob, two_frob
        else:
            Q, _ = quotient(G, Z)
            q_frob = is_frobenius(Q)[0]
            q_two_frob = False if q_frob else is_2frobenius(Q)[0]
        hypothesis = a_group and not q_frob and not q_two_frob

    return Classification(
        order=G.order,
        solvable=solvable,
        derived_length=series.derived_length,
        abelian=abelian,
        center_order=Z.order,
        a_group=a_group,
        frobenius=frob,
        two_frobenius=two_frob,
        central_quotient_frobenius=q_frob,
        central_quotient_two_frobenius=q_two_frob,
        satisfies_hypothesis=hypothesis,
        corollary_class=corollary_class(G, hypothesis),
    )


def satisfies_hypothesis(G: FiniteGroup) -> bool:
    return classify(G).satisfies_hypothesis
