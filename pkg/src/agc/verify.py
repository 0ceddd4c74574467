"""Structured verification checks on a group.

Each check produces a CheckRecord with a stable id, a status, and witness
data.  Statuses: "pass" / "fail" (asserted checks), "vacuous" (the check's
hypothesis has no instance in this group), "skipped-precondition" (the group
is outside the check's scope).  Diagnostic checks report measurements but
are never asserted; they stay "vacuous" with the data in the witness field.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable

import numpy as np

from .classify import Classification, classify
from .errors import NotComplement
from .graph import CommutingGraph, DiameterResult
from .perm import FiniteGroup, Subgroup, full_subgroup, p_part, prime_divisors
from .products import quotient
from .structure import (
    DerivedSeries,
    center,
    centralizer_members,
    derived_series,
    fitting_subgroup,
    minimal_normal_subgroups,
    normalizer_members,
    second_fitting_preimage,
    sylow_conjugates,
    sylow_system,
    sylow_systems,
    system_normalizer,
)

SYSTEM_SEARCH_LIMIT = 64


@dataclass
class CheckRecord:
    id: str
    status: str  # pass | fail | vacuous | skipped-precondition
    witness: dict[str, Any] = field(default_factory=dict)
    millis: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "status": self.status,
            "witness": self.witness,
            "millis": round(self.millis, 3),
        }


class GroupAnalysis:
    """Caches the expensive invariants of one group across checks."""

    def __init__(self, group: FiniteGroup):
        self.group = group

    @cached_property
    def classification(self) -> Classification:
        return classify(self.group)

    @cached_property
    def series(self) -> DerivedSeries:
        return derived_series(self.group)

    @cached_property
    def center(self) -> Subgroup:
        return center(self.group)

    @cached_property
    def derived(self) -> Subgroup:
        return self.series.terms[1] if len(self.series.terms) > 1 \
            else self.series.terms[0]

    @cached_property
    def fitting(self) -> Subgroup:
        return fitting_subgroup(self.group)

    @cached_property
    def graph(self) -> CommutingGraph:
        return CommutingGraph(self.group)

    @cached_property
    def diameter(self) -> DiameterResult:
        return self.graph.diameter()

    @cached_property
    def is_solvable_a_group(self) -> bool:
        return self.classification.solvable and self.classification.a_group


def group_fingerprint(G: FiniteGroup) -> dict[str, Any]:
    series = derived_series(G)
    return {
        "name": G.name,
        "order": G.order,
        "derived_length": series.derived_length,
        "center_order": center(G).order,
        "primes": prime_divisors(G.order),
    }


def _product_members(G: FiniteGroup, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.unique(G.table[np.ix_(A, B)])


def _is_complement(G: FiniteGroup, M: Subgroup, N: Subgroup) -> bool:
    if M.order * N.order != G.order:
        return False
    inter = np.intersect1d(M.members, N.members, assume_unique=True)
    return inter.size == 1


# -- structural identity checks -----------------------------------------------


def check_derived_center_intersection(a: GroupAnalysis) -> CheckRecord:
    """The derived subgroup meets the center trivially in abelian-Sylow groups."""
    if not a.classification.a_group:
        return CheckRecord("derived-center-intersection", "skipped-precondition",
                           {"reason": "not an abelian-Sylow group"})
    inter = np.intersect1d(a.derived.members, a.center.members, assume_unique=True)
    witness = {
        "derived_order": a.derived.order,
        "center_order": a.center.order,
        "intersection_order": int(inter.size),
    }
    return CheckRecord("derived-center-intersection",
                       "pass" if inter.size == 1 else "fail", witness)


def check_system_normalizer_complement(a: GroupAnalysis) -> CheckRecord:
    """Relative system normalizers of derived-series terms complement the next term.

    For each i, the system normalizer in G of a Sylow system of G^(i-1) must
    satisfy M * G^(i) = G with trivial intersection.  The canonical system is
    tried first, then a bounded search over other systems.
    """
    cid = "system-normalizer-complement"
    if not a.is_solvable_a_group:
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "requires a solvable abelian-Sylow group"})
    G = a.group
    terms = a.series.terms
    levels = []
    for i in range(1, len(terms)):
        K, N = terms[i - 1], terms[i]
        ok = False
        system_index = None
        order_m = None
        for idx, system in enumerate(sylow_systems(K, limit=SYSTEM_SEARCH_LIMIT)):
            M = system_normalizer(full_subgroup(G), system)
            if _is_complement(G, M, N):
                ok = True
                system_index = idx
                order_m = M.order
                break
        levels.append({
            "level": i,
            "term_order": K.order,
            "next_order": N.order,
            "normalizer_order": order_m,
            "system_index": system_index,
            "complement": ok,
        })
        if not ok:
            return CheckRecord(cid, "fail", {"levels": levels})
    return CheckRecord(cid, "pass", {"levels": levels})


def check_fitting_decomposition(a: GroupAnalysis) -> CheckRecord:
    """F(G) is the internal direct product of the derived-series term centers."""
    cid = "fitting-decomposition"
    if not a.is_solvable_a_group:
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "requires a solvable abelian-Sylow group"})
    G = a.group
    terms = a.series.terms
    factor_orders = []
    product = np.array([0], np.int32)
    order_product = 1
    for K in terms[:-1]:  # every term except the trivial tail
        ZK = center(K)
        factor_orders.append(ZK.order)
        order_product *= ZK.order
        product = _product_members(G, product, ZK.members)
    F = a.fitting
    same_set = product.size == F.order and bool((product == F.members).all())
    direct = order_product == F.order
    witness = {
        "fitting_order": F.order,
        "factor_orders": factor_orders,
        "product_order": int(product.size),
        "internal_direct_product": direct,
    }
    return CheckRecord(cid, "pass" if same_set and direct else "fail", witness)


# -- Frobenius equivalence check ----------------------------------------------


def frobenius_conditions(G: FiniteGroup, N: Subgroup, A: Subgroup) -> dict[str, bool]:
    """The three equivalent Frobenius conditions for a complemented normal N.

    (1) A is malnormal and N is the identity plus the elements missed by the
    conjugates of A; (2) C_G(a) <= A for nontrivial a in A; (3) C_G(n) <= N
    for nontrivial n in N.
    """
    if not N.is_normal():
        raise NotComplement("N must be normal")
    if not _is_complement(G, A, N):
        raise NotComplement("A is not a complement of N")
    everyone = np.arange(G.order)

    # malnormality: A ∩ gAg⁻¹ = 1 for every g outside A, which amounts to
    # A being self-normalizing with distinct conjugates meeting trivially
    self_normalizing = normalizer_members(G, everyone, A.members).size == A.order
    cover = np.zeros(G.order, bool)
    malnormal = A.order > 1 and N.order > 1 and self_normalizing
    for conj in sylow_conjugates(full_subgroup(G), A):
        if malnormal and conj.key() != A.key():
            inter = np.intersect1d(A.members, conj.members, assume_unique=True)
            if inter.size > 1:
                malnormal = False
        cover[conj.members] = True
    missed = np.nonzero(~cover)[0]
    kernel_match = missed.size == N.order - 1 and N.member_mask[missed].all()
    cond1 = malnormal and kernel_match

    cond2 = A.order > 1 and N.order > 1
    if cond2:
        for x in A.members:
            if x == 0:
                continue
            if not A.member_mask[centralizer_members(G, int(x), everyone)].all():
                cond2 = False
                break

    cond3 = A.order > 1 and N.order > 1
    if cond3:
        for x in N.members:
            if x == 0:
                continue
            if not N.member_mask[centralizer_members(G, int(x), everyone)].all():
                cond3 = False
                break
    return {"malnormal_kernel": cond1, "complement_centralizers": cond2,
            "kernel_centralizers": cond3}


def check_frobenius_equivalences(G: FiniteGroup, N: Subgroup,
                                 A: Subgroup) -> CheckRecord:
    conds = frobenius_conditions(G, N, A)
    values = list(conds.values())
    agree = all(values) or not any(values)
    witness = {"kernel_order": N.order, "complement_order": A.order, **conds}
    return CheckRecord("frobenius-equivalences", "pass" if agree else "fail",
                       witness)


def _frobenius_equivalences_auto(a: GroupAnalysis) -> CheckRecord:
    """Run the equivalence check on the natural (G', system normalizer) pair."""
    cid = "frobenius-equivalences"
    if not a.is_solvable_a_group or a.classification.abelian:
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "needs a nonabelian solvable abelian-Sylow group"})
    G = a.group
    N = a.derived
    M = system_normalizer(full_subgroup(G), sylow_system(full_subgroup(G)))
    if not _is_complement(G, M, N):
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "system normalizer does not complement G'"})
    rec = check_frobenius_equivalences(G, N, M)
    return rec


# -- stray p-part centralizer check -------------------------------------------


def check_stray_p_part_centralizers(a: GroupAnalysis) -> CheckRecord:
    """Elements whose p-part avoids both G' and every absolute system
    normalizer still centralize something in G' and in some normalizer conjugate.

    Scope: solvable abelian-Sylow groups of derived length 2 with trivial
    center whose derived subgroup is not a Hall subgroup.
    """
    cid = "stray-p-part-centralizers"
    c = a.classification
    if not (a.is_solvable_a_group and c.derived_length == 2
            and c.center_order == 1):
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "needs derived length 2 and trivial center"})
    G = a.group
    D = a.derived
    if math.gcd(D.order, G.order // D.order) == 1:
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "derived subgroup is a Hall subgroup"})
    M = system_normalizer(full_subgroup(G), sylow_system(full_subgroup(G)))
    conjugates = sylow_conjugates(full_subgroup(G), M)
    norm_cover = np.zeros(G.order, bool)
    for conj in conjugates:
        norm_cover[conj.members] = True
    orders = G.element_orders
    instances = 0
    for g in range(1, G.order):
        qualifying = False
        for p in prime_divisors(int(orders[g])):
            gp = p_part(G, g, p)
            if not D.member_mask[gp] and not norm_cover[gp]:
                qualifying = True
                break
        if not qualifying:
            continue
        instances += 1
        cd = centralizer_members(G, g, D.members)
        if cd.size <= 1:
            return CheckRecord(cid, "fail",
                               {"element": g, "defect": "trivial centralizer in G'"})
        hit = any(
            centralizer_members(G, g, conj.members).size > 1
            for conj in conjugates
        )
        if not hit:
            return CheckRecord(cid, "fail",
                               {"element": g,
                                "defect": "no normalizer conjugate centralizes"})
    if instances == 0:
        return CheckRecord(cid, "vacuous", {"qualifying_elements": 0})
    return CheckRecord(cid, "pass", {"qualifying_elements": instances})


# -- diameter bound checks ----------------------------------------------------


def _diameter_checks(a: GroupAnalysis) -> list[CheckRecord]:
    c = a.classification
    records = []

    def bound_check(cid: str, applies: bool, bound: int, reason: str) -> None:
        if not applies:
            records.append(CheckRecord(cid, "skipped-precondition",
                                       {"reason": reason}))
            return
        d = a.diameter
        ok = d.connected and d.diameter is not None and d.diameter <= bound
        records.append(CheckRecord(cid, "pass" if ok else "fail",
                                   {"status": d.status, "diameter": d.diameter,
                                    "bound": bound}))

    hyp = c.satisfies_hypothesis
    bound_check("connected-diameter-le-6", hyp, 6,
                "group does not satisfy the connectivity hypothesis")
    bound_check("metabelian-diameter-le-4", hyp and c.derived_length == 2, 4,
                "needs hypothesis and derived length 2")
    bound_check("two-prime-diameter-le-4",
                hyp and c.corollary_class == "two-prime-order", 4,
                "order is not a two-prime order under the hypothesis")
    bound_check("cube-free-odd-diameter-le-4",
                hyp and c.corollary_class == "cube-free-odd", 4,
                "order is not odd and cube-free under the hypothesis")

    records.append(_center_quotient_transfer(a))
    records.append(_twin_reduction_consistency(a))
    return records


def _center_quotient_transfer(a: GroupAnalysis) -> CheckRecord:
    """Connectivity and diameter transfer between G and G/Z when G' meets Z trivially."""
    cid = "center-quotient-transfer"
    c = a.classification
    if c.abelian or c.center_order == 1:
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "needs a nonabelian group with nontrivial center"})
    inter = np.intersect1d(a.derived.members, a.center.members, assume_unique=True)
    if inter.size != 1:
        return CheckRecord(cid, "skipped-precondition",
                           {"reason": "derived subgroup meets the center"})
    Q, _ = quotient(a.group, a.center)
    dq = CommutingGraph(Q).diameter()
    dg = a.diameter
    same_connectivity = dg.connected == dq.connected
    same_diameter = (not dg.connected) or dg.diameter == dq.diameter
    witness = {"group": {"status": dg.status, "diameter": dg.diameter},
               "central_quotient": {"status": dq.status, "diameter": dq.diameter}}
    ok = same_connectivity and same_diameter
    return CheckRecord(cid, "pass" if ok else "fail", witness)


def _twin_reduction_consistency(a: GroupAnalysis) -> CheckRecord:
    cid = "twin-reduction-consistency"
    full = a.diameter
    reduced = a.graph.diameter_via_reduction()
    ok = (full.status == reduced.status and full.diameter == reduced.diameter
          and full.components == reduced.components)
    witness = {"full": {"status": full.status, "diameter": full.diameter,
                        "components": full.components},
               "reduced": {"status": reduced.status, "diameter": reduced.diameter,
                           "components": reduced.components}}
    return CheckRecord(cid, "pass" if ok else "fail", witness)


# -- diagnostics (reported, never asserted) ------------------------------------


def proof_diagnostics(a: GroupAnalysis) -> list[CheckRecord]:
    """Structural measurements tied to the diameter>=7 contradiction argument.

    The hypotheses of these statements require a commuting-graph diameter of
    at least 7, which no in-scope group attains, so they are recorded as
    vacuous with the raw measurements in the witness.
    """
    ids = ["fitting-centralizes-minimal-normal", "upper-fitting-index-coprime",
           "fixed-point-free-primes-in-upper-fitting"]
    c = a.classification
    if not (c.solvable and c.center_order == 1 and a.group.order > 1):
        reason = {"reason": "needs a solvable group with trivial center"}
        return [CheckRecord(i, "skipped-precondition", dict(reason)) for i in ids]
    G = a.group
    F = a.fitting
    J = second_fitting_preimage(G)
    d = a.diameter
    base = {"diameter_status": d.status, "diameter": d.diameter,
            "hypothesis_met": bool(d.connected and d.diameter is not None
                                   and d.diameter >= 7)}
    records = []

    minimals = minimal_normal_subgroups(G)
    per_v = []
    for V in minimals:
        cg = np.arange(G.order)
        mask = np.ones(G.order, bool)
        for v in V.members:
            if v == 0:
                continue
            keep = np.zeros(G.order, bool)
            keep[centralizer_members(G, int(v), cg)] = True
            mask &= keep
        cgv = np.nonzero(mask)[0]
        equals_f = cgv.size == F.order and F.member_mask[cgv].all()
        per_v.append({"minimal_order": V.order,
                      "centralizer_order": int(cgv.size),
                      "equals_fitting": bool(equals_f)})
    records.append(CheckRecord(ids[0], "vacuous",
                               {**base, "fitting_order": F.order,
                                "minimal_normals": per_v}))

    g = math.gcd(J.order // F.order, F.order)
    records.append(CheckRecord(ids[1], "vacuous",
                               {**base, "upper_index": J.order // F.order,
                                "fitting_order": F.order, "gcd": g}))

    orders = G.element_orders
    outside = 0
    checked = 0
    for x in range(1, G.order):
        o = int(orders[x])
        if not _is_prime(o):
            continue
        fpf = all(
            centralizer_members(G, x, V.members).size == 1 for V in minimals
        )
        if not fpf:
            continue
        checked += 1
        if not J.member_mask[x]:
            outside += 1
    records.append(CheckRecord(ids[2], "vacuous",
                               {**base, "fixed_point_free_prime_elements": checked,
                                "outside_upper_fitting": outside}))
    return records


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- report assembly -----------------------------------------------------------


def _timed(fn: Callable[[], CheckRecord]) -> CheckRecord:
    start = time.perf_counter()
    rec = fn()
    rec.millis = (time.perf_counter() - start) * 1000.0
    return rec


def _timed_many(fn: Callable[[], list[CheckRecord]]) -> list[CheckRecord]:
    start = time.perf_counter()
    recs = fn()
    per = (time.perf_counter() - start) * 1000.0 / max(len(recs), 1)
    for rec in recs:
        rec.millis = per
    return recs


def run_all_checks(G: FiniteGroup) -> list[CheckRecord]:
    a = GroupAnalysis(G)
    records: list[CheckRecord] = []
    records.append(_timed(lambda: check_derived_center_intersection(a)))
    records.append(_timed(lambda: check_system_normalizer_complement(a)))
    records.append(_timed(lambda: check_fitting_decomposition(a)))
    records.append(_timed(lambda: _frobenius_equivalences_auto(a)))
    records.append(_timed(lambda: check_stray_p_part_centralizers(a)))
    records.extend(_timed_many(lambda: _diameter_checks(a)))
    records.extend(_timed_many(lambda: proof_diagnostics(a)))
    records.sort(key=lambda r: r.id)
    return records


def group_report(G: FiniteGroup) -> dict[str, Any]:
    records = run_all_checks(G)
    return {
        "fingerprint": group_fingerprint(G),
        "checks": [r.to_json() for r in records],
    }


def report_summary_row(G: FiniteGroup) -> dict[str, Any]:
    """One CSV row of headline facts plus the overall pass flag."""
    a = GroupAnalysis(G)
    c = a.classification
    d = a.diameter
    records = run_all_checks(G)
    all_pass = all(r.status != "fail" for r in records)
    return {
        "order": c.order,
        "derived_length": c.derived_length,
        "center_order": c.center_order,
        "a_group": c.a_group,
        "frobenius": c.frobenius,
        "two_frobenius": c.two_frobenius,
        "hypothesis": c.satisfies_hypothesis,
        "connected": d.connected,
        "diameter": d.diameter if d.diameter is not None else "",
        "all_pass": all_pass,
    }
