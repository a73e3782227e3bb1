"""Ideal subsets: closure, gradedness, products, and graded-ideal enumeration.

Subsets are bit-packed (Python ints). Closure works with homogeneous
multipliers only: once a set is additively closed, absorbing r*x for every
homogeneous r absorbs all of R, because a general multiplier is a sum of
homogeneous ones and multiplication distributes over the sum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import bools_from_mask, indices_from_mask, mask_from_bools, popcount
from .grading import GradedRing

TWO_SIDED = "two-sided"
LEFT = "left"
RIGHT = "right"
SUBGROUP_ONLY = "subgroup-only"

_SIDEDNESS_FLAGS = {
    TWO_SIDED: (True, True),
    LEFT: (True, False),
    RIGHT: (False, True),
    SUBGROUP_ONLY: (False, False),
}


class EnumerationCapError(RuntimeError):
    """Graded-ideal enumeration exceeded the configured cap."""


@dataclass(frozen=True)
class IdealSubset:
    mask: int
    sidedness: str = TWO_SIDED
    graded: bool | None = None

    @property
    def size(self) -> int:
        return popcount(self.mask)

    def indices(self, n: int) -> np.ndarray:
        return indices_from_mask(self.mask, n)

    def contains(self, x: int) -> bool:
        return (self.mask >> x) & 1 == 1

    def is_subset_of(self, other: "IdealSubset | int") -> bool:
        other_mask = other if isinstance(other, int) else other.mask
        return self.mask & ~other_mask == 0


def _flags(sidedness: str) -> tuple[bool, bool]:
    try:
        return _SIDEDNESS_FLAGS[sidedness]
    except KeyError:
        raise ValueError(f"unknown sidedness {sidedness!r}") from None


def _extend_subgroup(add: np.ndarray, span: np.ndarray, x: int) -> np.ndarray:
    """Subgroup generated by an existing subgroup and one element: the union
    of cosets span + j*x until j*x falls back into span."""
    out = span.copy()
    idx = np.nonzero(span)[0]
    jx = int(x)
    while not span[jx]:
        out[add[jx, idx]] = True
        jx = int(add[jx, x])
    return out


def _close(gr: GradedRing, base: np.ndarray | None, seeds, left: bool, right: bool) -> np.ndarray:
    """Smallest additively closed, absorption-closed superset of base and seeds.

    base, when given, must itself already be closed the same way.
    """
    ring = gr.ring
    add, mul = ring.add, ring.mul
    multipliers = gr.hom_indices()
    if base is None:
        members = np.zeros(ring.order, dtype=bool)
        members[0] = True
    else:
        members = base.copy()
    pending = [int(s) for s in seeds]
    while pending:
        x = pending.pop()
        if members[x]:
            continue
        members = _extend_subgroup(add, members, x)
        prods = []
        if left:
            prods.append(mul[multipliers, x])
        if right:
            prods.append(mul[x, multipliers])
        if prods:
            new = np.unique(np.concatenate(prods))
            pending.extend(int(v) for v in new[~members[new]])
    return members


def additive_span(gr: GradedRing, elements) -> int:
    """Bitset of the additive subgroup generated by the elements."""
    return int(mask_from_bools(_close(gr, None, elements, False, False)))


def generate_ideal(gr: GradedRing, generators, sidedness: str = TWO_SIDED) -> IdealSubset:
    """Smallest subset containing the generators that is an additive subgroup
    and absorbs multiplication per the sidedness; generators are always kept
    (non-unital rings included)."""
    left, right = _flags(sidedness)
    members = _close(gr, None, generators, left, right)
    mask = int(mask_from_bools(members))
    return IdealSubset(mask, sidedness, graded=graded_defect(gr, mask) is None)


def graded_defect(gr: GradedRing, mask: int) -> int | None:
    """None if every member's homogeneous components stay inside; otherwise
    the first member that leaks a component."""
    idx = indices_from_mask(mask, gr.order)
    flags = bools_from_mask(mask, gr.order)
    comps = gr.decomp[idx]
    bad = ~flags[comps].all(axis=1)
    if bad.any():
        return int(idx[np.nonzero(bad)[0][0]])
    return None


def is_graded_ideal(gr: GradedRing, subset: IdealSubset | int) -> bool:
    mask = subset if isinstance(subset, int) else subset.mask
    return graded_defect(gr, mask) is None


def graded_component(gr: GradedRing, subset: IdealSubset | int, g: int) -> int:
    """Bitset of P intersected with the degree-g component."""
    mask = subset if isinstance(subset, int) else subset.mask
    return mask & gr.component_mask(g)


def check_closure(gr: GradedRing, subset: IdealSubset | int,
                  sidedness: str | None = None) -> tuple[bool, tuple | None]:
    """Verify additive-subgroup and absorption closure; returns (ok, witness).

    sidedness defaults to the subset's own tag (two-sided for raw masks).
    """
    if sidedness is None:
        sidedness = TWO_SIDED if isinstance(subset, int) else subset.sidedness
    mask = subset if isinstance(subset, int) else subset.mask
    if mask & 1 == 0:
        return False, ("zero missing",)
    n = gr.order
    idx = indices_from_mask(mask, n)
    flags = bools_from_mask(mask, n)
    sums = gr.ring.add[np.ix_(idx, idx)]
    bad = ~flags[sums]
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return False, ("add", int(idx[i]), int(idx[j]))
    left, right = _flags(sidedness)
    everyone = np.arange(n)
    if left:
        prods = gr.ring.mul[np.ix_(everyone, idx)]
        bad = ~flags[prods]
        if bad.any():
            r, i = np.argwhere(bad)[0]
            return False, ("left", int(r), int(idx[i]))
    if right:
        prods = gr.ring.mul[np.ix_(idx, everyone)]
        bad = ~flags[prods]
        if bad.any():
            i, r = np.argwhere(bad)[0]
            return False, ("right", int(idx[i]), int(r))
    return True, None


def _span_indices(gr: GradedRing, ideal: IdealSubset) -> np.ndarray:
    """Additive spanning set: homogeneous members when graded, else everything."""
    mask = ideal.mask & gr.hom_mask if ideal.graded else ideal.mask
    return indices_from_mask(mask, gr.order)


def ideal_product(gr: GradedRing, a: IdealSubset, b: IdealSubset) -> IdealSubset:
    """Additive span of pairwise products. Left closure survives from the left
    factor, right closure from the right one."""
    ia, ib = _span_indices(gr, a), _span_indices(gr, b)
    prods = np.unique(gr.ring.mul[np.ix_(ia, ib)])
    span = np.zeros(gr.order, dtype=bool)
    span[0] = True
    for x in prods:
        if not span[x]:
            span = _extend_subgroup(gr.ring.add, span, int(x))
    mask = int(mask_from_bools(span))
    left = _flags(a.sidedness)[0]
    right = _flags(b.sidedness)[1]
    sidedness = {(True, True): TWO_SIDED, (True, False): LEFT,
                 (False, True): RIGHT, (False, False): SUBGROUP_ONLY}[(left, right)]
    return IdealSubset(mask, sidedness, graded=graded_defect(gr, mask) is None)


def ideal_sum(gr: GradedRing, a: IdealSubset, b: IdealSubset) -> IdealSubset:
    la, ra = _flags(a.sidedness)
    lb, rb = _flags(b.sidedness)
    left, right = la and lb, ra and rb
    sidedness = {(True, True): TWO_SIDED, (True, False): LEFT,
                 (False, True): RIGHT, (False, False): SUBGROUP_ONLY}[(left, right)]
    mask = additive_span(gr, indices_from_mask(a.mask | b.mask, gr.order))
    return IdealSubset(mask, sidedness, graded=graded_defect(gr, mask) is None)


def enumerate_graded_ideals(gr: GradedRing, sidedness: str = TWO_SIDED,
                            cap: int = 10000) -> list[IdealSubset]:
    """All graded ideals of the given sidedness, sorted by member bitset.

    Frontier growth: every graded ideal is generated by its homogeneous
    members, so extending each known ideal by one outside homogeneous element
    and closing reaches the whole lattice.
    """
    left, right = _flags(sidedness)
    hom = [int(h) for h in gr.hom_indices()]
    zero = np.zeros(gr.order, dtype=bool)
    zero[0] = True
    start = _close(gr, None, [], left, right)
    seen = {int(mask_from_bools(start))}
    frontier = [start]
    while frontier:
        base = frontier.pop()
        for a in hom:
            if base[a]:
                continue
            ext = _close(gr, base, [a], left, right)
            key = int(mask_from_bools(ext))
            if key not in seen:
                if len(seen) >= cap:
                    raise EnumerationCapError(
                        f"more than {cap} graded {sidedness} ideals; "
                        f"raise the ideal cap to enumerate them")
                seen.add(key)
                frontier.append(ext)
    return [IdealSubset(mask, sidedness, graded=True) for mask in sorted(seen)]


def minimal_homogeneous_generators(gr: GradedRing, ideal: IdealSubset) -> list[int]:
    """Small deterministic homogeneous generating set: first try each single
    homogeneous member in index order, then greedy growth with pruning."""
    target = ideal.mask
    if target == 1:
        return []
    left, right = _flags(ideal.sidedness)
    hom_members = indices_from_mask(target & gr.hom_mask, gr.order)

    def closure_mask(gens) -> int:
        return int(mask_from_bools(_close(gr, None, gens, left, right)))

    for m in hom_members:
        if m == 0:
            continue
        if closure_mask([int(m)]) == target:
            return [int(m)]
    gens: list[int] = []
    span = np.zeros(gr.order, dtype=bool)
    span[0] = True
    for m in hom_members:
        if not span[m]:
            gens.append(int(m))
            span = _close(gr, span, [int(m)], left, right)
            if mask_from_bools(span) == target:
                break
    for g in list(gens):
        rest = [x for x in gens if x != g]
        if closure_mask(rest) == target:
            gens = rest
    return gens
