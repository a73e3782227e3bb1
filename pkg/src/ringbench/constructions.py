"""Derived graded rings: quotients, idealizations, and graded ring maps.

Quotients keep the coset with the smallest base index as representative, so
element order (and hence every downstream witness) is deterministic.
Idealizations pair the ring with a graded bimodule; the pair (r, m) sits at
index r*|M| + m and multiplies as (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitsets import bools_from_mask, indices_from_mask, mask_from_bools
from .grading import GradedRing, Grading, attach_grading
from .groups import FiniteGroup, validate_group
from .ideals import TWO_SIDED, IdealSubset, check_closure, graded_defect
from .rings import DEFAULT_RING_CAP, FiniteRing, RingTooLargeError, find_unity


class ConstructionError(ValueError):
    pass


class BimoduleError(ConstructionError):
    pass


class HomError(ConstructionError):
    pass


def _require_graded_two_sided(gr: GradedRing, K: IdealSubset | int) -> int:
    mask = K.mask if isinstance(K, IdealSubset) else int(K)
    ok, witness = check_closure(gr, mask, TWO_SIDED)
    if not ok:
        raise ConstructionError(f"not a two-sided ideal: failed {witness}")
    defect = graded_defect(gr, mask)
    if defect is not None:
        raise ConstructionError(
            f"ideal is not graded: member {gr.name(defect)} leaks a component")
    return mask


# ---------------------------------------------------------------------------
# graded homomorphisms


@dataclass(frozen=True)
class GradedRingHom:
    """Table-backed ring map. group_map carries degrees when the grading
    groups differ; None means degrees map identically."""

    source: GradedRing
    target: GradedRing
    mapping: np.ndarray
    group_map: np.ndarray | None = None

    def apply(self, x: int) -> int:
        return int(self.mapping[x])

    def degree_image(self, g: int) -> int:
        return g if self.group_map is None else int(self.group_map[g])

    def image_mask(self, subset_mask: int | None = None) -> int:
        if subset_mask is None:
            vals = self.mapping
        else:
            vals = self.mapping[indices_from_mask(subset_mask, self.source.order)]
        flags = np.zeros(self.target.order, dtype=bool)
        flags[vals] = True
        return int(mask_from_bools(flags))

    def preimage_mask(self, target_mask: int) -> int:
        flags = bools_from_mask(target_mask, self.target.order)
        return int(mask_from_bools(flags[self.mapping]))

    def is_surjective(self) -> bool:
        return self.image_mask() == (1 << self.target.order) - 1


@dataclass(frozen=True)
class HomValidation:
    ok: bool
    failure: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate_graded_hom(f: GradedRingHom) -> HomValidation:
    """Additive, multiplicative, zero-preserving, and degree-preserving."""
    src, tgt, m = f.source, f.target, f.mapping
    if m.shape != (src.order,):
        return HomValidation(False, "mapping shape", (m.shape,))
    if m.min() < 0 or m.max() >= tgt.order:
        return HomValidation(False, "mapping range", (int(m.min()), int(m.max())))
    if m[0] != 0:
        return HomValidation(False, "zero not preserved", (int(m[0]),))
    bad = tgt.ring.add[m[:, None], m[None, :]] != m[src.ring.add]
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return HomValidation(False, "not additive", (int(i), int(j)))
    bad = tgt.ring.mul[m[:, None], m[None, :]] != m[src.ring.mul]
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return HomValidation(False, "not multiplicative", (int(i), int(j)))
    if f.group_map is not None and f.group_map.shape != (src.group.order,):
        return HomValidation(False, "group map shape", (f.group_map.shape,))
    for g in range(src.group.order):
        h = f.degree_image(g)
        if h < 0 or h >= tgt.group.order:
            return HomValidation(False, "group map range", (g, h))
        comp = bools_from_mask(tgt.component_mask(h), tgt.order)
        src_idx = src.component_indices(g)
        inside = comp[m[src_idx]]
        if not inside.all():
            x = int(src_idx[np.nonzero(~inside)[0][0]])
            return HomValidation(False, "degree not preserved", (g, x))
    return HomValidation(True)


def make_graded_hom(source: GradedRing, target: GradedRing, mapping,
                    group_map=None) -> GradedRingHom:
    f = GradedRingHom(source, target,
                      np.asarray(mapping, dtype=np.int64),
                      None if group_map is None
                      else np.asarray(group_map, dtype=np.int64))
    v = validate_graded_hom(f)
    if not v:
        raise HomError(f"not a graded homomorphism: {v.failure} at {v.witness}")
    return f


def hom_kernel(f: GradedRingHom) -> IdealSubset:
    """Kernel as an ideal of the source; graded because f preserves degrees."""
    mask = int(mask_from_bools(f.mapping == 0))
    return IdealSubset(mask, TWO_SIDED,
                       graded=graded_defect(f.source, mask) is None)


def hom_image(f: GradedRingHom, P: IdealSubset) -> IdealSubset:
    """Image of an ideal; needs surjectivity (then f(P) is again an ideal)."""
    if not f.is_surjective():
        raise HomError("image transport requires a surjective homomorphism")
    mask = f.image_mask(P.mask)
    return IdealSubset(mask, P.sidedness,
                       graded=graded_defect(f.target, mask) is None)


def hom_preimage(f: GradedRingHom, Q: IdealSubset | int) -> IdealSubset:
    qmask = Q.mask if isinstance(Q, IdealSubset) else int(Q)
    mask = f.preimage_mask(qmask)
    sidedness = Q.sidedness if isinstance(Q, IdealSubset) else TWO_SIDED
    return IdealSubset(mask, sidedness,
                       graded=graded_defect(f.source, mask) is None)


# ---------------------------------------------------------------------------
# quotients


@dataclass(frozen=True)
class QuotientConstruction:
    graded_ring: GradedRing
    projection: GradedRingHom


def _coset_tables(gr: GradedRing, kmask: int) -> tuple[np.ndarray, np.ndarray]:
    """(reps, proj): smallest representative of each coset, old index -> new."""
    kidx = indices_from_mask(kmask, gr.order)
    rep = gr.ring.add[:, kidx].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    pos = np.full(gr.order, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps), dtype=np.int64)
    return reps, pos[rep]


def make_quotient(gr: GradedRing, K: IdealSubset | int) -> QuotientConstruction:
    """R/K with its inherited grading (R/K)_g = (R_g + K)/K, plus the
    projection map. Cosets are named after their smallest representative."""
    kmask = _require_graded_two_sided(gr, K)
    reps, proj = _coset_tables(gr, kmask)
    base = gr.ring
    q_add = proj[base.add[np.ix_(reps, reps)]]
    q_mul = proj[base.mul[np.ix_(reps, reps)]]
    q_neg = proj[base.neg[reps]]
    names = [base.name(int(r)) for r in reps]
    ring = FiniteRing(
        order=len(reps),
        add=q_add.astype(np.uint16), neg=q_neg.astype(np.uint16),
        mul=q_mul.astype(np.uint16),
        unity=None if base.unity is None else int(proj[base.unity]),
        element_names=names, kind="quotient",
        params={"base": base, "ideal_mask": kmask})
    if ring.unity is None:
        ring.unity = find_unity(ring)
    comps = []
    for g in range(gr.group.order):
        flags = np.zeros(len(reps), dtype=bool)
        flags[proj[gr.component_indices(g)]] = True
        comps.append(int(mask_from_bools(flags)))
    qgr = attach_grading(ring, Grading(gr.group, comps))
    projection = make_graded_hom(gr, qgr, proj)
    return QuotientConstruction(qgr, projection)


# ---------------------------------------------------------------------------
# graded bimodules


@dataclass
class GradedBimodule:
    """Finite abelian group with compatible left/right ring actions and a
    grading over the ring's group; the module half of an idealization."""

    order: int
    add: np.ndarray           # (order, order)
    neg: np.ndarray           # (order,)
    left: np.ndarray          # (ring order, order): left[r, m] = r.m
    right: np.ndarray         # (order, ring order): right[m, r] = m.r
    components: list[int]     # bitset per group element
    element_names: list[str]
    unital: bool = False      # 1.m == m == m.1 (meaningful for unital rings)
    label: str = "module"

    def name(self, m: int) -> str:
        return self.element_names[m]


@dataclass(frozen=True)
class BimoduleValidation:
    ok: bool
    failure: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _direct_sum_failure(add: np.ndarray, comps: list[int],
                        order: int) -> str | None:
    reached = np.array([0], dtype=np.int64)
    count = 1
    for g, comp in enumerate(comps):
        idx = indices_from_mask(comp, order)
        sums = np.unique(add[np.ix_(reached, idx)].ravel())
        count *= len(idx)
        if len(sums) != count:
            return f"components overlap (degree {g} collides with earlier sums)"
        reached = sums.astype(np.int64)
    if count != order:
        return "components do not span the carrier"
    return None


def validate_bimodule(gr: GradedRing, M: GradedBimodule) -> BimoduleValidation:
    """Abelian group, biadditive associative actions, compatibility
    (r m) s == r (m s), graded actions, direct-sum decomposition, and the
    declared unital flag."""
    n, m = gr.order, M.order
    if M.add.shape != (m, m) or M.neg.shape != (m,):
        return BimoduleValidation(False, "additive table shape")
    if M.left.shape != (n, m) or M.right.shape != (m, n):
        return BimoduleValidation(False, "action table shape")
    for tab, label in ((M.add, "add"), (M.left, "left"), (M.right, "right")):
        if tab.min() < 0 or tab.max() >= m:
            return BimoduleValidation(False, f"{label} entry out of range")

    gcheck = validate_group(FiniteGroup(m, M.add, M.neg))
    if not gcheck:
        return BimoduleValidation(False, f"additive group: {gcheck.failure}",
                                  gcheck.witness)
    if (M.add != M.add.T).any():
        i, j = np.argwhere(M.add != M.add.T)[0]
        return BimoduleValidation(False, "addition not commutative",
                                  (int(i), int(j)))

    add, mul = gr.ring.add, gr.ring.mul
    checks = (
        # r(m1+m2) == rm1 + rm2                         (n, m, m)
        ("left action not additive over the module",
         M.left[:, M.add],
         M.add[M.left[:, :, None], M.left[:, None, :]]),
        # (r1+r2)m == r1m + r2m                         (n, n, m)
        ("left action not additive over the ring",
         M.left[add.astype(np.int64)],
         M.add[M.left[:, None, :], M.left[None, :, :]]),
        # (m1+m2)r == m1r + m2r                         (m, m, n)
        ("right action not additive over the module",
         M.right[M.add.astype(np.int64)],
         M.add[M.right[:, None, :], M.right[None, :, :]]),
        # m(r1+r2) == mr1 + mr2                         (m, n, n)
        ("right action not additive over the ring",
         M.right[:, add],
         M.add[M.right[:, :, None], M.right[:, None, :]]),
        # (r1 r2)m == r1(r2 m)                          (n, n, m)
        ("left action not associative",
         M.left[mul.astype(np.int64)],
         M.left[np.arange(n)[:, None, None], M.left[None, :, :]]),
        # m(r1 r2) == (m r1)r2                          (m, n, n)
        ("right action not associative",
         M.right[:, mul],
         M.right[M.right[:, :, None], np.arange(n)[None, None, :]]),
        # (r m)s == r(m s)                              (n, m, n)
        ("actions not compatible",
         M.right[M.left.astype(np.int64)],
         M.left[np.arange(n)[:, None, None], M.right[None, :, :]]),
    )
    for label, lhs, rhs in checks:
        bad = lhs != rhs
        if bad.any():
            return BimoduleValidation(False, label,
                                      tuple(int(v) for v in np.argwhere(bad)[0]))

    if len(M.components) != gr.group.order:
        return BimoduleValidation(False, "component count")
    for g, comp in enumerate(M.components):
        if not comp & 1:
            return BimoduleValidation(False, "component misses zero", (g,))
        idx = indices_from_mask(comp, m)
        flags = bools_from_mask(comp, m)
        if not flags[M.add[np.ix_(idx, idx)]].all() or not flags[M.neg[idx]].all():
            return BimoduleValidation(False, "component is not a subgroup", (g,))
    fail = _direct_sum_failure(M.add.astype(np.int64), M.components, m)
    if fail is not None:
        return BimoduleValidation(False, fail)
    op = gr.group.op
    for g in range(gr.group.order):
        rg = gr.component_indices(g)
        for h in range(gr.group.order):
            mh = indices_from_mask(M.components[h], m)
            tgt = bools_from_mask(M.components[int(op[g, h])], m)
            vals = M.left[np.ix_(rg, mh)]
            if not tgt[vals].all():
                i, j = np.argwhere(~tgt[vals])[0]
                return BimoduleValidation(False, "left action leaks a component",
                                          (int(rg[i]), int(mh[j])))
            tgt = bools_from_mask(M.components[int(op[h, g])], m)
            vals = M.right[np.ix_(mh, rg)]
            if not tgt[vals].all():
                i, j = np.argwhere(~tgt[vals])[0]
                return BimoduleValidation(False, "right action leaks a component",
                                          (int(mh[i]), int(rg[j])))

    if M.unital:
        e = gr.ring.unity
        if e is None:
            return BimoduleValidation(False, "unital flag on a ring without unity")
        ids = np.arange(m)
        if (M.left[e] != ids).any() or (M.right[:, e] != ids).any():
            return BimoduleValidation(False, "declared unital but 1 does not act as identity")
    return BimoduleValidation(True)


def regular_bimodule(gr: GradedRing) -> GradedBimodule:
    """The ring acting on itself; components are the ring's own."""
    r = gr.ring
    comps = [gr.component_mask(g) for g in range(gr.group.order)]
    return GradedBimodule(
        order=r.order, add=r.add, neg=r.neg, left=r.mul, right=r.mul,
        components=comps, element_names=list(r.element_names),
        unital=r.unity is not None, label="regular")


def quotient_bimodule(gr: GradedRing, K: IdealSubset | int) -> GradedBimodule:
    """R/K as an R-bimodule via r.(m+K) = rm+K and (m+K).r = mr+K."""
    kmask = _require_graded_two_sided(gr, K)
    reps, proj = _coset_tables(gr, kmask)
    base = gr.ring
    madd = proj[base.add[np.ix_(reps, reps)]]
    mneg = proj[base.neg[reps]]
    left = proj[base.mul[:, reps]]          # (n, m): r . rep(m)
    right = proj[base.mul[reps, :]]         # (m, n): rep(m) . r
    comps = []
    for g in range(gr.group.order):
        flags = np.zeros(len(reps), dtype=bool)
        flags[proj[gr.component_indices(g)]] = True
        comps.append(int(mask_from_bools(flags)))
    names = [base.name(int(r)) for r in reps]
    kgens = indices_from_mask(kmask, gr.order)
    return GradedBimodule(
        order=len(reps), add=madd, neg=mneg, left=left, right=right,
        components=comps, element_names=names,
        unital=base.unity is not None,
        label=f"quotient by ideal of size {len(kgens)}")


# ---------------------------------------------------------------------------
# idealization


def make_idealization(gr: GradedRing, M: GradedBimodule,
                      cap: int = DEFAULT_RING_CAP) -> GradedRing:
    """Square-zero extension on R x M: degree-g part is R_g x M_g, and the
    module multiplies to zero against itself."""
    check = validate_bimodule(gr, M)
    if not check:
        raise BimoduleError(f"bimodule invalid: {check.failure} at {check.witness}")
    n, m = gr.order, M.order
    order = n * m
    if order > cap:
        raise RingTooLargeError(
            f"idealization has order {order}, exceeding the carrier cap {cap}")
    radd = gr.ring.add.astype(np.int64)
    rmul = gr.ring.mul.astype(np.int64)
    # index (r, v) -> r*m + v, tables built on the 4-axis view (r1, v1, r2, v2)
    add = (radd[:, None, :, None] * m
           + M.add.astype(np.int64)[None, :, None, :]).reshape(order, order)
    lv = M.left.astype(np.int64)[:, None, None, :]    # r1 . v2
    rv = M.right.astype(np.int64)[None, :, :, None]   # v1 . r2
    mul = (rmul[:, None, :, None] * m
           + M.add.astype(np.int64)[lv, rv]).reshape(order, order)
    neg = (gr.ring.neg.astype(np.int64)[:, None] * m
           + M.neg.astype(np.int64)[None, :]).reshape(order)
    names = [f"({gr.ring.name(r)}, {M.name(v)})"
             for r in range(n) for v in range(m)]
    unity = None
    if gr.ring.unity is not None and M.unital:
        unity = gr.ring.unity * m
    ring = FiniteRing(order, add.astype(np.uint16), neg.astype(np.uint16),
                      mul.astype(np.uint16), unity=unity, element_names=names,
                      kind="idealization",
                      params={"base": gr.ring, "module_order": m,
                              "module_label": M.label})
    comps = []
    for g in range(gr.group.order):
        mmask = M.components[g]
        mask = 0
        for r in gr.component_indices(g):
            mask |= mmask << (int(r) * m)
        comps.append(mask)
    return attach_grading(ring, Grading(gr.group, comps))


def idealization_subset(pmask: int, module_mask: int, ring_order: int,
                        module_order: int) -> int:
    """Bitset of {(p, v) : p in pmask, v in module_mask} inside R x M."""
    mask = 0
    for p in indices_from_mask(pmask, ring_order):
        mask |= module_mask << (int(p) * module_order)
    return mask


def embed_ideal_in_idealization(xgr: GradedRing, P: IdealSubset | int) -> IdealSubset:
    """P x M inside R x M, for an idealization built by make_idealization."""
    if xgr.ring.kind != "idealization":
        raise ConstructionError("expected an idealization ring")
    m = xgr.ring.params["module_order"]
    n = xgr.order // m
    pmask = P.mask if isinstance(P, IdealSubset) else int(P)
    full_module = (1 << m) - 1
    mask = idealization_subset(pmask, full_module, n, m)
    sidedness = P.sidedness if isinstance(P, IdealSubset) else TWO_SIDED
    return IdealSubset(mask, sidedness,
                       graded=graded_defect(xgr, mask) is None)


# ---------------------------------------------------------------------------
# product projections


def product_projections(pgr: GradedRing, gr1: GradedRing,
                        gr2: GradedRing) -> tuple[GradedRingHom, GradedRingHom]:
    """The two coordinate projections of a product ring, as graded maps."""
    if pgr.ring.kind != "product":
        raise ConstructionError("expected a product ring")
    n2 = gr2.order
    ids = np.arange(pgr.order, dtype=np.int64)
    p1 = make_graded_hom(pgr, gr1, ids // n2)
    p2 = make_graded_hom(pgr, gr2, ids % n2)
    return p1, p2
